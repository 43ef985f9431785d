//! Set partitions of `[n] = {1, ..., n}` in canonical block form.
//!
//! Blocks are kept sorted by their minimum, elements ascending inside each
//! block. Alongside the block list every partition carries an
//! element-to-block index so membership queries are O(1).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    // block_of[e - 1] = ordinal of the block holding e
    block_of: Vec<usize>,
}

/// An arc of the standard diagram, `left < right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl SetPartition {
    /// Validates and canonicalizes an arbitrary block list over `[n]`.
    pub fn from_blocks<B, I>(n: usize, blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for block in blocks {
            let mut b: Vec<usize> = block.into_iter().collect();
            if b.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &e in &b {
                if e == 0 || e > n {
                    return Err(Error::OutOfRange { element: e, n });
                }
                if seen[e - 1] {
                    return Err(Error::DuplicateElement(e));
                }
                seen[e - 1] = true;
            }
            b.sort_unstable();
            out.push(b);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MissingElement(missing + 1));
        }
        out.sort_unstable_by_key(|b| b[0]);
        Ok(Self::from_canonical(n, out))
    }

    /// Builds a partition from blocks already in canonical order.
    pub(crate) fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0][0] < w[1][0]));
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &e in b {
                block_of[e - 1] = i;
            }
        }
        debug_assert!(block_of.iter().all(|&b| b != usize::MAX));
        SetPartition { n, blocks, block_of }
    }

    /// Builds a partition from an element labelling: `labels[e - 1]` names the
    /// block of `e`. Labels are arbitrary.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut first_seen: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match first_seen.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, idx)) => blocks[idx].push(i + 1),
                None => {
                    first_seen.push((l, blocks.len()));
                    blocks.push(vec![i + 1]);
                }
            }
        }
        Self::from_canonical(n, blocks)
    }

    /// The all-singletons partition `I` of `[n]`.
    pub fn identity(n: usize) -> Self {
        Self::from_canonical(n, (1..=n).map(|e| vec![e]).collect())
    }

    /// The one-block partition of `[n]` (void when `n = 0`).
    pub fn full(n: usize) -> Self {
        if n == 0 {
            Self::void()
        } else {
            Self::from_canonical(n, vec![(1..=n).collect()])
        }
    }

    pub fn void() -> Self {
        Self::from_canonical(0, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Ordinal (0-based, canonical order) of the block containing `e`.
    pub fn block_of(&self, e: usize) -> usize {
        self.block_of[e - 1]
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of(a) == self.block_of(b)
    }

    /// True when every block has exactly `size` elements.
    pub fn has_uniform_block_size(&self, size: usize) -> bool {
        self.blocks.iter().all(|b| b.len() == size)
    }

    pub fn is_noncrossing(&self) -> bool {
        // Scan left to right keeping the open blocks on a stack: an element of
        // an already opened block must belong to the innermost open block.
        let mut stack: Vec<usize> = Vec::new();
        for e in 1..=self.n {
            let b = self.block_of(e);
            let block = &self.blocks[b];
            if block[0] == e {
                if block.len() > 1 {
                    stack.push(b);
                }
                continue;
            }
            if stack.last() != Some(&b) {
                return false;
            }
            if *block.last().unwrap() == e {
                stack.pop();
            }
        }
        true
    }

    pub fn standard_arcs(&self) -> Vec<Arc> {
        let mut arcs: Vec<Arc> =
            self.blocks.iter().flat_map(|b| b.windows(2).map(|w| Arc { left: w[0], right: w[1] })).collect();
        arcs.sort_unstable();
        arcs
    }

    /// Number of blocks not nested in another block. Crossing input is
    /// rejected.
    pub fn box_count(&self) -> Result<usize> {
        if !self.is_noncrossing() {
            return Err(Error::Crossing);
        }
        // In a non-crossing partition a block is nested iff some earlier block
        // (by minimum) reaches past its minimum.
        let mut reach = 0;
        let mut boxes = 0;
        for b in &self.blocks {
            if b[0] > reach {
                boxes += 1;
            }
            reach = reach.max(*b.last().unwrap());
        }
        Ok(boxes)
    }

    /// `self ≤ other` in the refinement order.
    pub fn is_refinement_of(&self, other: &SetPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(self.blocks.iter().all(|b| b.iter().all(|&e| other.same_block(e, b[0]))))
    }

    /// The minimal non-crossing partition coarser than both operands.
    pub fn nc_join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        if !self.is_noncrossing() || !other.is_noncrossing() {
            return Err(Error::Crossing);
        }
        let mut uf = UnionFind::new(self.n);
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for &e in &b[1..] {
                uf.union(b[0] - 1, e - 1);
            }
        }
        // Merge crossing classes until none remain.
        loop {
            let labels: Vec<usize> = (0..self.n).map(|i| uf.find(i)).collect();
            let joined = SetPartition::from_labels(&labels);
            match first_crossing(&joined) {
                Some((a, b)) => uf.union(a - 1, b - 1),
                None => return Ok(joined),
            }
        }
    }

    /// Keeps the elements `k·j + 1` and renames them `j + 1`.
    pub fn contract(&self, k: usize) -> Result<SetPartition> {
        if k == 0 {
            return Err(Error::InvalidParameter("contraction factor must be positive".into()));
        }
        if !self.n.is_multiple_of(k) {
            return Err(Error::NotDivisible { n: self.n, k });
        }
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&e| (e - 1) % k == 0).map(|&e| (e - 1) / k + 1).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition::from_canonical(self.n / k, blocks))
    }

    /// `I_r` on `[total]`: blocks `{mk+1, ..., mk+r}`, everything else a
    /// singleton.
    pub fn comb(total: usize, m: usize, r: usize) -> Result<SetPartition> {
        if m == 0 {
            return Err(Error::InvalidParameter("comb period must be positive".into()));
        }
        if !total.is_multiple_of(m) {
            return Err(Error::NotDivisible { n: total, k: m });
        }
        if r == 0 || r > m {
            return Err(Error::InvalidParameter(format!("comb width {r} not in 1..={m}")));
        }
        let mut blocks = Vec::new();
        for cell in 0..total / m {
            let start = cell * m + 1;
            blocks.push((start..start + r).collect());
            for e in start + r..start + m {
                blocks.push(vec![e]);
            }
        }
        Ok(SetPartition::from_canonical(total, blocks))
    }

    /// Parses the `"1,2/3,4"` form. `n` is the number of elements listed;
    /// the empty string is the void partition.
    pub fn parse(s: &str) -> Result<SetPartition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition::void());
        }
        let mut blocks = Vec::new();
        let mut count = 0;
        for part in s.split('/') {
            let block = part
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse::<usize>().map_err(|_| Error::Parse(format!("bad element {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            count += block.len();
            blocks.push(block);
        }
        SetPartition::from_blocks(count, blocks)
    }
}

/// Some pair of elements `(a, b)` from two distinct blocks whose arcs cross.
fn first_crossing(p: &SetPartition) -> Option<(usize, usize)> {
    let arcs = p.standard_arcs();
    for (i, x) in arcs.iter().enumerate() {
        for y in &arcs[i + 1..] {
            if y.left >= x.right {
                break;
            }
            if y.left > x.left && y.right > x.right && !p.same_block(x.left, y.left) {
                return Some((x.left, y.left));
            }
        }
    }
    None
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetPartition::parse(s)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    const WORKED: &str = "1,2,7,12/3,4,5,6/8,9,10,11";

    #[test]
    fn from_blocks_canonicalizes() {
        let p = SetPartition::from_blocks(4, vec![vec![3, 4], vec![2, 1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(p.to_string(), "1,2/3,4");
    }

    #[test]
    fn from_blocks_errors() {
        assert_eq!(SetPartition::from_blocks(4, vec![vec![1, 2], vec![2, 3, 4]]), Err(Error::DuplicateElement(2)));
        assert_eq!(
            SetPartition::from_blocks(3, vec![vec![1, 4], vec![2, 3]]),
            Err(Error::OutOfRange { element: 4, n: 3 })
        );
        assert_eq!(SetPartition::from_blocks(2, vec![vec![1, 2], vec![]]), Err(Error::EmptyBlock));
        assert_eq!(SetPartition::from_blocks(3, vec![vec![1, 2]]), Err(Error::MissingElement(3)));
    }

    #[test]
    fn void_partition() {
        let v = SetPartition::from_blocks(0, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(v, SetPartition::void());
        assert_eq!(v.to_string(), "");
        assert!(v.is_noncrossing());
        assert_eq!(v.box_count(), Ok(0));
        assert_eq!(sp(""), v);
    }

    #[test]
    fn planarity() {
        assert!(!sp("1,3/2,4").is_noncrossing());
        assert!(sp(WORKED).is_noncrossing());
        assert!(!sp("1,4,5/2,3,6").is_noncrossing());
        assert!(sp("1,4/2,3").is_noncrossing());
        assert!(SetPartition::identity(5).is_noncrossing());
    }

    #[test]
    fn arcs() {
        let arcs: Vec<(usize, usize)> = sp(WORKED).standard_arcs().iter().map(|a| (a.left, a.right)).collect();
        assert_eq!(arcs, vec![(1, 2), (2, 7), (3, 4), (4, 5), (5, 6), (7, 12), (8, 9), (9, 10), (10, 11)]);
        assert!(SetPartition::identity(3).standard_arcs().is_empty());
        assert_eq!(sp("1,3/2").standard_arcs(), vec![Arc { left: 1, right: 3 }]);
    }

    #[test]
    fn boxes() {
        assert_eq!(sp(WORKED).box_count(), Ok(1));
        assert_eq!(SetPartition::identity(6).box_count(), Ok(6));
        assert_eq!(sp("1,3/2,4").box_count(), Err(Error::Crossing));
        assert_eq!(sp("1,2/3,6/4,5").box_count(), Ok(2));
    }

    #[test]
    fn refinement() {
        let p = sp(WORKED);
        assert_eq!(SetPartition::identity(12).is_refinement_of(&p), Ok(true));
        assert_eq!(sp("1,4/2,3/5,6").is_refinement_of(&sp("1,4,5,6/2,3")), Ok(true));
        assert_eq!(sp("1,2/3,4").is_refinement_of(&sp("1,3/2,4")), Ok(false));
        assert_eq!(sp("1,2").is_refinement_of(&sp("1/2/3")), Err(Error::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn join_with_comb() {
        let p = sp(WORKED);
        let i2 = SetPartition::comb(12, 2, 2).unwrap();
        assert_eq!(p.nc_join(&i2).unwrap(), sp("1,2,7,8,9,10,11,12/3,4,5,6"));
        assert_eq!(p.nc_join(&p).unwrap(), p);
        assert_eq!(SetPartition::identity(12).nc_join(&p).unwrap(), p);
        assert_eq!(p.nc_join(&sp("1,3/2,4")), Err(Error::SizeMismatch { left: 12, right: 4 }));
        assert_eq!(sp("1,2/3,4").nc_join(&sp("1,3/2,4")), Err(Error::Crossing));
    }

    #[test]
    fn join_merges_induced_crossings() {
        // {1,3} ∪ {2,4} would cross, so everything collapses.
        assert_eq!(sp("1,3/2/4").nc_join(&sp("1/2,4/3")).unwrap(), sp("1,2,3,4"));
    }

    #[test]
    fn contraction() {
        assert_eq!(sp(WORKED).contract(2).unwrap(), sp("1,4/2,3/5,6"));
        assert_eq!(sp(WORKED).contract(1).unwrap(), sp(WORKED));
        assert_eq!(sp("1,2,3,4,5,6").contract(3).unwrap(), sp("1,2"));
        assert_eq!(sp("1,2,3").contract(2), Err(Error::NotDivisible { n: 3, k: 2 }));
        assert!(matches!(sp("1,2").contract(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn combs() {
        assert_eq!(SetPartition::comb(12, 2, 2).unwrap(), sp("1,2/3,4/5,6/7,8/9,10/11,12"));
        assert_eq!(SetPartition::comb(6, 3, 1).unwrap(), SetPartition::identity(6));
        assert_eq!(SetPartition::comb(6, 3, 2).unwrap(), sp("1,2/3/4,5/6"));
        assert!(SetPartition::comb(6, 3, 4).is_err());
        assert!(SetPartition::comb(6, 3, 0).is_err());
        assert!(SetPartition::comb(7, 3, 1).is_err());
        assert!(SetPartition::comb(6, 0, 1).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(SetPartition::parse("1,x"), Err(Error::Parse(_))));
        assert_eq!(SetPartition::parse("1,3"), Err(Error::OutOfRange { element: 3, n: 2 }));
    }
}
