//! Self-verification: every counting identity and bijection certificate,
//! filtered by the size of the ground set involved.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use ncpart::*;

type Eval = Box<dyn Fn() -> Result<(String, String)>>;

struct Check {
    criterion: u8,
    name: String,
    points: usize,
    eval: Eval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub criterion: u8,
    pub name: String,
    pub points: usize,
    pub expected: String,
    pub actual: String,
    pub elapsed: Duration,
}

impl Row {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(Row::passed)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.passed()).count()
    }

    /// Fixed-width table, one row per identity, plus a summary line.
    pub fn table(&self, color: bool) -> String {
        let name_w = self.rows.iter().map(|r| r.name.len()).chain([8]).max().unwrap();
        let exp_w = self.rows.iter().map(|r| r.expected.len()).chain([8]).max().unwrap();
        let act_w = self.rows.iter().map(|r| r.actual.len()).chain([6]).max().unwrap();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>2}  {:<name_w$}  {:>exp_w$}  {:>act_w$}  {:<6}  {:>8}",
            "#", "identity", "expected", "actual", "status", "ms"
        );
        for r in &self.rows {
            let status = match (r.passed(), color) {
                (true, false) => "PASS".to_string(),
                (false, false) => "FAIL".to_string(),
                (true, true) => "\x1b[32mPASS\x1b[0m  ".to_string(),
                (false, true) => "\x1b[31mFAIL\x1b[0m  ".to_string(),
            };
            let _ = writeln!(
                out,
                "{:>2}  {:<name_w$}  {:>exp_w$}  {:>act_w$}  {:<6}  {:>8.1}",
                r.criterion,
                r.name,
                r.expected,
                r.actual,
                status,
                r.elapsed.as_secs_f64() * 1000.0
            );
        }
        let _ = writeln!(out, "{} checks, {} failed", self.rows.len(), self.failures());
        out
    }
}

fn a(p: usize, n: usize) -> String {
    fuss_catalan(p as u64, n as u64).map(|x| x.to_string()).unwrap_or_default()
}

fn count_vs<F>(expected: String, count: F) -> Eval
where
    F: Fn() -> Result<usize> + 'static,
{
    Box::new(move || Ok((expected.clone(), count()?.to_string())))
}

/// `expected` is the family size; `actual` counts members of the family hit
/// by a domain element whose image maps back to it. The two agree exactly
/// when the forward map is a bijection onto the family.
fn round_trip<D, T, F, B>(domain: Vec<D>, family: BTreeSet<T>, forward: F, back: B) -> Result<(String, String)>
where
    D: PartialEq,
    T: Ord,
    F: Fn(&D) -> Result<T>,
    B: Fn(&T) -> Result<D>,
{
    if domain.len() != family.len() {
        return Ok((family.len().to_string(), format!("domain {}", domain.len())));
    }
    let mut image = BTreeSet::new();
    for x in &domain {
        let y = forward(x)?;
        if back(&y)? == *x && family.contains(&y) {
            image.insert(y);
        }
    }
    Ok((family.len().to_string(), image.len().to_string()))
}

fn same_set<T: Ord>(fast: impl Iterator<Item = T>, slow: Vec<T>) -> (String, String) {
    let fast: BTreeSet<T> = fast.collect();
    let slow: BTreeSet<T> = slow.into_iter().collect();
    let agree = fast.intersection(&slow).count();
    (
        slow.len().to_string(),
        if fast.len() == slow.len() { agree.to_string() } else { format!("{} generated", fast.len()) },
    )
}

fn checks() -> Vec<Check> {
    let mut v = Vec::new();
    let mut add =
        |criterion: u8, name: String, points: usize, eval: Eval| v.push(Check { criterion, name, points, eval });

    for p in 1..=6 {
        for n in 0..=12 / p {
            let eval = count_vs(a(p, n), move || Ok(enum_nc_p(p, n)?.count()));
            add(1, format!("|ncp p={p} n={n}| = A(n,p)"), p * n, eval);
        }
    }

    for p in 1..=4 {
        for n in 0..=4 {
            let eval: Eval = Box::new(move || {
                let join = |row: Vec<BigCount>| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                Ok((join(triangle_row(p as u64, n)?), join(box_histogram(p, n)?)))
            });
            add(2, format!("box histogram p={p} n={n}"), p * n, eval);
        }
    }
    for p in 1..=6 {
        for n in 0..=60 {
            let eval: Eval = Box::new(move || {
                let sum: BigCount = triangle_row(p as u64, n)?.into_iter().sum();
                Ok((a(p, n), sum.to_string()))
            });
            add(2, format!("triangle row sum p={p} n={n}"), p * n, eval);
        }
    }

    for q in 1..=6 {
        for n in 0..=6 / q {
            let eval = count_vs(a(2 * q, n), move || Ok(enum_double(q, n)?.count()));
            add(3, format!("|double q={q} n={n}| = A(n,2q)"), q * n, eval);
            let eval: Eval = Box::new(move || {
                round_trip(enum_nc_p(2 * q, n)?.collect(), enum_double(q, n)?.collect(), split_even, |c| {
                    merge_even(c, q)
                })
            });
            add(3, format!("split/merge q={q} n={n}"), 2 * q * n, eval);
        }
    }

    for m in 1..=6 {
        for p in 1..=6 / m {
            for n in 0..=6 / p {
                let eval = count_vs(a(m * p, n), move || Ok(enum_mtuple_p(m, p, n)?.count()));
                add(4, format!("|mtuple m={m} p={p} n={n}| = A(n,mp)"), p * n, eval);
            }
        }
    }
    for m in 1..=12 {
        for p in 1..=12 / m {
            for n in 0..=12 / (m * p) {
                let eval: Eval = Box::new(move || {
                    round_trip(
                        enum_nc_p(m * p, n)?.collect(),
                        enum_mtuple_p(m, p, n)?.collect(),
                        |x| unfold_m(x, m),
                        |c| fold_m(c, m, p),
                    )
                });
                add(4, format!("unfold/fold m={m} p={p} n={n}"), m * p * n, eval);
            }
        }
    }

    for n in 0..=5 {
        for m in 2..=5 {
            let eval = count_vs(a(m, n), move || Ok(enum_chains(n, m - 1)?.count()));
            add(5, format!("|chains n={n} length={}| = A(n,{m})", m - 1), n, eval);
        }
    }

    for p in 1..=10 {
        for n in 0..=10 / p {
            let eval = count_vs(a(p + 1, n), move || Ok(enum_multiple(p, n)?.count()));
            add(6, format!("|multiple p={p} n={n}| = A(n,p+1)"), p * n, eval);
            let eval: Eval = Box::new(move || {
                round_trip(
                    enum_multiple(p, n)?.collect(),
                    enum_chains(n, p)?.collect(),
                    |x| multiple_to_tuple(x, p),
                    |c| tuple_to_multiple(c, p),
                )
            });
            add(6, format!("multiple/tuple p={p} n={n}"), p * n, eval);
        }
    }

    let mut grid: Vec<(usize, usize)> = (2..=4).flat_map(|p| (0..=5).map(move |n| (p, n))).collect();
    grid.extend((6..=8).map(|n| (2, n)));
    for (p, n) in grid {
        let eval = count_vs(a(p, n), move || Ok(enum_ptrees(p, n)?.count()));
        add(7, format!("|trees p={p} n={n}| = A(n,p)"), p * n, eval);
    }
    for p in 1..=12 {
        for n in 0..=12 / p {
            let eval: Eval = Box::new(move || {
                round_trip(
                    enum_nc_p(p, n)?.collect(),
                    enum_ptrees(p, n)?.collect(),
                    |x| tree_of_partition(x, p),
                    |t| Ok(partition_of_tree(t)),
                )
            });
            add(7, format!("tree map p={p} n={n}"), p * n, eval);
            let eval: Eval = Box::new(move || {
                let parts: Vec<SetPartition> = enum_nc_p(p, n)?.collect();
                let mut agree = 0;
                for x in &parts {
                    if tree_of_partition(x, p)?.box_nodes() == x.box_count()? {
                        agree += 1;
                    }
                }
                Ok((parts.len().to_string(), agree.to_string()))
            });
            add(7, format!("box nodes = boxes p={p} n={n}"), p * n, eval);
        }
    }

    let eval: Eval = Box::new(|| {
        let p: SetPartition = "1,2,7,12/3,4,5,6/8,9,10,11".parse()?;
        let pair = split_even(&p)?;
        let back = merge_even(&pair, 2)?;
        let actual = if back == p { pair.to_string() } else { format!("merged to {back}") };
        Ok(("1,4/2,3/5,6;1,4,5,6/2,3".to_string(), actual))
    });
    add(8, "worked split/merge example".into(), 12, eval);

    for n in 0..=8 {
        let eval: Eval = Box::new(move || Ok(same_set(enum_nc(n), oracle::naive_nc(n))));
        add(9, format!("nc n={n} vs brute force"), n, eval);
        for m in 1..=3 {
            let eval: Eval = Box::new(move || {
                let nc = oracle::naive_nc(n);
                Ok(same_set(enum_chains(n, m)?, oracle::naive_chains(&nc, &nc, m)))
            });
            add(9, format!("chains n={n} length={m} vs brute force"), n, eval);
        }
    }
    for p in 1..=8 {
        for n in 0..=8 / p {
            let eval: Eval = Box::new(move || Ok(same_set(enum_nc_p(p, n)?, oracle::naive_nc_p(p, n))));
            add(9, format!("ncp p={p} n={n} vs brute force"), p * n, eval);
            let eval: Eval = Box::new(move || Ok(same_set(enum_multiple(p, n)?, oracle::naive_multiple(p, n))));
            add(9, format!("multiple p={p} n={n} vs brute force"), p * n, eval);
            for m in 1..=3 {
                let eval: Eval = Box::new(move || {
                    let bases = oracle::naive_nc_p(p, n);
                    let universe = oracle::naive_nc(p * n);
                    let fast = if m == 2 { enum_double(p, n)? } else { enum_mtuple_p(m, p, n)? };
                    Ok(same_set(fast, oracle::naive_chains(&bases, &universe, m)))
                });
                let family = if m == 2 { format!("double q={p}") } else { format!("mtuple m={m} p={p}") };
                add(9, format!("{family} n={n} vs brute force"), p * n, eval);
            }
        }
    }
    v
}

/// Runs every check whose ground set has at most `max_points` points.
pub fn verify_all(max_points: usize) -> Report {
    let rows = checks()
        .into_iter()
        .filter(|c| c.points <= max_points)
        .map(|c| {
            let start = Instant::now();
            let (expected, actual) = match (c.eval)() {
                Ok(pair) => pair,
                Err(e) => ("ok".into(), format!("error: {e}")),
            };
            Row { criterion: c.criterion, name: c.name, points: c.points, expected, actual, elapsed: start.elapsed() }
        })
        .collect();
    Report { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_ground_set_only() {
        let report = verify_all(0);
        assert!(report.passed());
        assert!(!report.rows.is_empty());
        for r in &report.rows {
            assert_eq!(r.points, 0);
            assert_eq!(r.expected, "1", "{}", r.name);
        }
    }

    #[test]
    fn ten_points_include_multiple_five_two() {
        let report = verify_all(10);
        let row = report.rows.iter().find(|r| r.name == "|multiple p=5 n=2| = A(n,p+1)").unwrap();
        assert_eq!((row.expected.as_str(), row.actual.as_str()), ("6", "6"));
        assert!(report.passed());
    }

    #[test]
    fn failures_show_in_the_table() {
        let row = Row {
            criterion: 1,
            name: "x".into(),
            points: 0,
            expected: "2".into(),
            actual: "3".into(),
            elapsed: Duration::ZERO,
        };
        let report = Report { rows: vec![row] };
        assert!(!report.passed());
        assert!(report.table(false).contains("FAIL"));
        assert!(report.table(false).ends_with("1 checks, 1 failed\n"));
    }
}
