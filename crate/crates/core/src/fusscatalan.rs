//! Exact Fuss-Catalan numbers `A_n^p = C(pn+1, n) / (pn+1)` and the
//! triangle `F^p(n, k)` whose rows sum to them.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl Add for BigCount {
    type Output = BigCount;

    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for BigCount {
    type Output = BigCount;

    fn add(self, rhs: &'a BigCount) -> BigCount {
        BigCount(self.0 + &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a BigCount> for BigCount {
    fn sum<I: Iterator<Item = &'a BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |a, b| a + b)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `C(n, k)` by the multiplicative formula; every partial product
/// `C(n-k+i, i)` is an integer so the running division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

fn check_p(p: u64) -> Result<()> {
    if p == 0 {
        Err(Error::InvalidParameter("p must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn fuss_catalan(p: u64, n: u64) -> Result<BigCount> {
    check_p(p)?;
    let top = p * n + 1;
    Ok(BigCount(binomial(top, n) / top))
}

/// Coefficient of `F^p(n-1, j)` in `F^p(n, k)`, indexed by `d = j - k + 1`:
/// `C(d + p - 2, p - 2)`. For `p = 1` the lower index is `-1` and we take
/// `C(x, -1) = [x = -1]`, i.e. only `d = 0` contributes.
fn recurrence_coefficients(p: u64, len: usize) -> Vec<BigUint> {
    (0..len as u64)
        .map(|d| {
            if p == 1 {
                if d == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                binomial(d + p - 2, p - 2)
            }
        })
        .collect()
}

/// Rows `0..=max_n` of `F^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    p: u64,
    rows: Vec<Vec<BigCount>>,
}

/// Row `n` from row `n - 1`, with coefficients from `recurrence_coefficients`.
fn next_row(prev: &[BigCount], coeff: &[BigUint]) -> Vec<BigCount> {
    let n = prev.len();
    let mut row = vec![BigCount::zero(); n + 1];
    for (k, slot) in row.iter_mut().enumerate().skip(1) {
        let mut acc = BigUint::zero();
        for (j, f) in prev.iter().enumerate().skip(k - 1) {
            if !f.is_zero() {
                acc += &coeff[j + 1 - k] * &f.0;
            }
        }
        *slot = BigCount(acc);
    }
    row
}

impl Triangle {
    pub fn build(p: u64, max_n: usize) -> Result<Self> {
        check_p(p)?;
        let coeff = recurrence_coefficients(p, max_n + 1);
        let mut rows = vec![vec![BigCount::one()]];
        for n in 1..=max_n {
            let row = next_row(&rows[n - 1], &coeff);
            rows.push(row);
        }
        Ok(Triangle { p, rows })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> &[Vec<BigCount>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[BigCount]> {
        self.rows.get(n).map(|r| r.as_slice())
    }

    pub fn row_sum(&self, n: usize) -> Option<BigCount> {
        self.row(n).map(|r| r.iter().sum())
    }
}

/// `F^p(n, 0..=n)`.
pub fn triangle_row(p: u64, n: usize) -> Result<Vec<BigCount>> {
    check_p(p)?;
    let coeff = recurrence_coefficients(p, n + 1);
    let mut row = vec![BigCount::one()];
    for _ in 0..n {
        row = next_row(&row, &coeff);
    }
    Ok(row)
}

/// `T^p(n, k) = F^p(n, n - k)`.
pub fn t_entry(p: u64, n: usize, k: usize) -> Result<BigCount> {
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    let row = triangle_row(p, n)?;
    Ok(row[n - k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(v: &[u64]) -> Vec<BigCount> {
        v.iter().map(|&x| BigCount::from(x)).collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(fuss_catalan(6, 2).unwrap(), BigCount::from(6u64));
        assert_eq!(fuss_catalan(2, 3).unwrap(), BigCount::from(5u64));
        assert_eq!(fuss_catalan(3, 3).unwrap(), BigCount::from(12u64));
        assert_eq!(fuss_catalan(4, 5).unwrap(), BigCount::from(969u64));
        for n in 0..30 {
            assert_eq!(fuss_catalan(1, n).unwrap(), BigCount::one());
        }
        assert!(fuss_catalan(0, 3).is_err());
    }

    #[test]
    fn second_term_is_p() {
        for p in 1..=20 {
            assert_eq!(fuss_catalan(p, 2).unwrap(), BigCount::from(p));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigUint>().unwrap());
    }

    #[test]
    fn rows() {
        assert_eq!(triangle_row(3, 2).unwrap(), counts(&[0, 2, 1]));
        assert_eq!(triangle_row(2, 3).unwrap(), counts(&[0, 2, 2, 1]));
        for p in 1..5 {
            assert_eq!(triangle_row(p, 0).unwrap(), counts(&[1]));
        }
        assert_eq!(triangle_row(1, 4).unwrap(), counts(&[0, 0, 0, 0, 1]));
        assert!(triangle_row(0, 2).is_err());
    }

    #[test]
    fn reflected_entries() {
        assert_eq!(t_entry(3, 2, 0).unwrap(), BigCount::one());
        assert_eq!(t_entry(3, 2, 1).unwrap(), BigCount::from(2u64));
        assert_eq!(t_entry(5, 0, 0).unwrap(), BigCount::one());
        assert!(t_entry(3, 2, 3).is_err());
    }

    #[test]
    fn row_sums_match_closed_form() {
        for p in 1..=6 {
            let t = Triangle::build(p, 60).unwrap();
            for n in 0..=60 {
                assert_eq!(t.row_sum(n).unwrap(), fuss_catalan(p, n as u64).unwrap(), "p={p} n={n}");
                if n > 0 {
                    assert!(t.row(n).unwrap()[0].is_zero());
                }
            }
        }
    }
}
