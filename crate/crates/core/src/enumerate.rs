//! Exhaustive generators for the non-crossing families.
//!
//! Every generator builds partitions block by block: a block is opened at the
//! smallest uncovered element and grown to the right. A block may never jump
//! over an element already covered by an earlier block, which is exactly the
//! non-crossing condition for blocks built in order of their minima. Choosing
//! "close the block" before "add element x" (x ascending) makes the output
//! lexicographic on the canonical block list.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fusscatalan::BigCount;
use crate::partition::SetPartition;

/// Constraint on block sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSize {
    Any,
    Exactly(usize),
    MultipleOf(usize),
}

impl BlockSize {
    fn can_close(self, len: usize) -> bool {
        match self {
            BlockSize::Any => true,
            BlockSize::Exactly(p) => len == p,
            BlockSize::MultipleOf(p) => len.is_multiple_of(p),
        }
    }

    fn can_grow(self, len: usize) -> bool {
        match self {
            BlockSize::Exactly(p) => len < p,
            _ => true,
        }
    }

    // Every region nested between consecutive elements of a block is a union
    // of whole blocks, so its length must be a multiple of this.
    fn gap_modulus(self) -> usize {
        match self {
            BlockSize::Any => 1,
            BlockSize::Exactly(p) | BlockSize::MultipleOf(p) => p,
        }
    }
}

/// What the generator is allowed to produce.
#[derive(Debug, Clone)]
pub struct Rule {
    pub size: BlockSize,
    /// Only partitions coarser than this one.
    pub floor: Option<SetPartition>,
}

impl Rule {
    pub fn any() -> Self {
        Rule { size: BlockSize::Any, floor: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Step {
    Close,
    Add(usize),
}

#[derive(Debug, Clone, Copy)]
enum Trail {
    Add(usize),
    Close { opened: Option<usize> },
}

impl Trail {
    fn as_step(self) -> Step {
        match self {
            Trail::Add(x) => Step::Add(x),
            Trail::Close { .. } => Step::Close,
        }
    }
}

/// Lazy stream of the non-crossing partitions of `[n]` satisfying a [`Rule`],
/// in lexicographic order of their canonical block lists.
#[derive(Debug, Clone)]
pub struct NcPartitions {
    n: usize,
    rule: Rule,
    covered: Vec<bool>,
    blocks: Vec<Vec<usize>>,
    open: bool,
    trail: Vec<Trail>,
    started: bool,
    done: bool,
}

impl NcPartitions {
    pub fn new(n: usize, rule: Rule) -> Self {
        if let Some(f) = &rule.floor {
            assert_eq!(f.n(), n, "floor partition has the wrong ground set");
        }
        NcPartitions {
            n,
            rule,
            covered: vec![false; n + 1],
            blocks: Vec::new(),
            open: false,
            trail: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// All non-crossing partitions coarser than (or equal to) `floor`.
    pub fn coarsenings(floor: SetPartition) -> Self {
        let n = floor.n();
        NcPartitions::new(n, Rule { size: BlockSize::Any, floor: Some(floor) })
    }

    fn complete(&self) -> bool {
        !self.open && self.covered[1..].iter().all(|&c| c)
    }

    // Smallest element of a block that the current block has touched and
    // still has to absorb.
    fn pending(&self, block: &[usize], last: usize) -> Option<usize> {
        let floor = self.rule.floor.as_ref()?;
        block
            .iter()
            .filter_map(|&e| {
                let fb = &floor.blocks()[floor.block_of(e)];
                fb.iter().copied().find(|&x| x > last)
            })
            .min()
    }

    fn next_step(&self, after: Option<Step>) -> Option<Step> {
        if !self.open {
            return None;
        }
        let block = self.blocks.last().unwrap();
        let last = *block.last().unwrap();
        let len = block.len();
        let pending = self.pending(block, last);

        if after.is_none() && pending.is_none() && self.rule.size.can_close(len) {
            return Some(Step::Close);
        }
        if !self.rule.size.can_grow(len) {
            return None;
        }
        let start = match after {
            Some(Step::Add(x)) => x + 1,
            _ => last + 1,
        };
        let modulus = self.rule.size.gap_modulus();
        let limit = pending.unwrap_or(self.n);
        // A covered element ends the run we may extend into.
        if (last + 1..start).any(|x| self.covered[x]) {
            return None;
        }
        for x in start..=limit.min(self.n) {
            if self.covered[x] {
                return None;
            }
            if !(x - last - 1).is_multiple_of(modulus) {
                continue;
            }
            if let (Some(floor), Some(pend)) = (&self.rule.floor, pending) {
                if x < pend && floor.blocks()[floor.block_of(x)][0] != x {
                    continue;
                }
            } else if let Some(floor) = &self.rule.floor {
                if floor.blocks()[floor.block_of(x)][0] != x {
                    continue;
                }
            }
            return Some(Step::Add(x));
        }
        None
    }

    fn apply(&mut self, step: Step) {
        match step {
            Step::Add(x) => {
                self.blocks.last_mut().unwrap().push(x);
                self.covered[x] = true;
                self.trail.push(Trail::Add(x));
            }
            Step::Close => {
                self.open = false;
                let opened = (1..=self.n).find(|&e| !self.covered[e]);
                if let Some(m) = opened {
                    self.covered[m] = true;
                    self.blocks.push(vec![m]);
                    self.open = true;
                }
                self.trail.push(Trail::Close { opened });
            }
        }
    }

    fn undo(&mut self, t: Trail) {
        match t {
            Trail::Add(x) => {
                self.blocks.last_mut().unwrap().pop();
                self.covered[x] = false;
            }
            Trail::Close { opened } => {
                if let Some(m) = opened {
                    self.blocks.pop();
                    self.covered[m] = false;
                }
                self.open = true;
            }
        }
    }

    // Follow first choices until complete (true) or stuck (false).
    fn descend(&mut self) -> bool {
        loop {
            if self.complete() {
                return true;
            }
            match self.next_step(None) {
                Some(s) => self.apply(s),
                None => return false,
            }
        }
    }

    fn backtrack(&mut self) -> bool {
        while let Some(t) = self.trail.pop() {
            self.undo(t);
            if let Some(s) = self.next_step(Some(t.as_step())) {
                self.apply(s);
                if self.descend() {
                    return true;
                }
            }
        }
        false
    }

    fn emit(&self) -> SetPartition {
        SetPartition::from_canonical(self.n, self.blocks.clone())
    }
}

impl Iterator for NcPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(SetPartition::void());
            }
            self.covered[1] = true;
            self.blocks.push(vec![1]);
            self.open = true;
            self.descend() || self.backtrack()
        } else {
            self.backtrack()
        };
        if found {
            Some(self.emit())
        } else {
            self.done = true;
            None
        }
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Every non-crossing partition of `[n]`.
pub fn enum_nc(n: usize) -> NcPartitions {
    NcPartitions::new(n, Rule::any())
}

/// Non-crossing partitions of `[pn]` with all blocks of size `p`.
pub fn enum_nc_p(p: usize, n: usize) -> Result<NcPartitions> {
    positive("p", p)?;
    Ok(NcPartitions::new(p * n, Rule { size: BlockSize::Exactly(p), floor: None }))
}

/// Non-crossing partitions of `[pn]` whose block sizes are multiples of `p`.
pub fn enum_multiple(p: usize, n: usize) -> Result<NcPartitions> {
    positive("p", p)?;
    Ok(NcPartitions::new(p * n, Rule { size: BlockSize::MultipleOf(p), floor: None }))
}

/// An ordered refinement chain `P_1 ≤ ... ≤ P_m` of non-crossing partitions
/// of one ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionChain {
    parts: Vec<SetPartition>,
}

impl PartitionChain {
    pub fn new(parts: Vec<SetPartition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("a chain needs at least one partition".into()));
        }
        let n = parts[0].n();
        for p in &parts {
            if p.n() != n {
                return Err(Error::SizeMismatch { left: n, right: p.n() });
            }
            if !p.is_noncrossing() {
                return Err(Error::Crossing);
            }
        }
        for w in parts.windows(2) {
            if !w[0].is_refinement_of(&w[1])? {
                return Err(Error::NotInDomain(format!("{} does not refine {}", w[0], w[1])));
            }
        }
        Ok(PartitionChain { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<SetPartition>) -> Self {
        PartitionChain { parts }
    }

    pub fn parts(&self) -> &[SetPartition] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts[0].n()
    }

    pub fn finest(&self) -> &SetPartition {
        &self.parts[0]
    }

    pub fn into_parts(self) -> Vec<SetPartition> {
        self.parts
    }
}

impl fmt::Display for PartitionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PartitionChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s.trim().split(';').map(SetPartition::parse).collect::<Result<Vec<_>>>()?;
        PartitionChain::new(parts)
    }
}

/// Lazy stream of refinement chains of length `m` whose first member comes
/// from a base generator; later members range over all non-crossing
/// coarsenings of the previous one.
#[derive(Debug, Clone)]
pub struct Chains {
    m: usize,
    levels: Vec<NcPartitions>,
    parts: Vec<SetPartition>,
}

impl Chains {
    pub fn new(base: NcPartitions, m: usize) -> Result<Self> {
        positive("chain length", m)?;
        Ok(Chains { m, levels: vec![base], parts: Vec::new() })
    }
}

impl Iterator for Chains {
    type Item = PartitionChain;

    fn next(&mut self) -> Option<PartitionChain> {
        loop {
            let depth = self.levels.len().checked_sub(1)?;
            match self.levels[depth].next() {
                Some(p) => {
                    self.parts.truncate(depth);
                    self.parts.push(p.clone());
                    if self.parts.len() == self.m {
                        return Some(PartitionChain::from_parts_unchecked(self.parts.clone()));
                    }
                    self.levels.push(NcPartitions::coarsenings(p));
                }
                None => {
                    self.levels.pop();
                }
            }
        }
    }
}

/// All chains `P_1 ≤ ... ≤ P_m` of non-crossing partitions of `[n]`.
pub fn enum_chains(n: usize, m: usize) -> Result<Chains> {
    Chains::new(enum_nc(n), m)
}

/// Pairs `(P_1 ≤ P_2)` over `[qn]` with `P_1` a non-crossing `q`-partition.
pub fn enum_double(q: usize, n: usize) -> Result<Chains> {
    Chains::new(enum_nc_p(q, n)?, 2)
}

/// Chains of length `m` over `[pn]` whose first member is a non-crossing
/// `p`-partition.
pub fn enum_mtuple_p(m: usize, p: usize, n: usize) -> Result<Chains> {
    Chains::new(enum_nc_p(p, n)?, m)
}

/// Entry `k` counts the planar `p`-partitions of `[pn]` with exactly `k`
/// boxes.
pub fn box_histogram(p: usize, n: usize) -> Result<Vec<BigCount>> {
    let mut hist = vec![0u64; n + 1];
    for part in enum_nc_p(p, n)? {
        hist[part.box_count()?] += 1;
    }
    Ok(hist.into_iter().map(BigCount::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn strings<I: Iterator<Item = T>, T: ToString>(it: I) -> Vec<String> {
        it.map(|x| x.to_string()).collect()
    }

    #[test]
    fn nc_small() {
        assert_eq!(strings(enum_nc(0)), vec![""]);
        assert_eq!(strings(enum_nc(1)), vec!["1"]);
        assert_eq!(strings(enum_nc(3)), vec!["1/2/3", "1/2,3", "1,2/3", "1,2,3", "1,3/2"]);
        let four: Vec<SetPartition> = enum_nc(4).collect();
        assert_eq!(four.len(), 14);
        assert!(!four.contains(&"1,3/2,4".parse().unwrap()));
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        for n in 0..=8 {
            let all: Vec<SetPartition> = enum_nc(n).collect();
            assert!(all.windows(2).all(|w| w[0].blocks() < w[1].blocks()), "n={n}");
        }
        let all: Vec<SetPartition> = enum_nc_p(3, 4).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn p_partitions() {
        assert_eq!(strings(enum_nc_p(3, 2).unwrap()), vec!["1,2,3/4,5,6", "1,2,6/3,4,5", "1,5,6/2,3,4"]);
        for n in 0..6 {
            let all: Vec<_> = enum_nc_p(1, n).unwrap().collect();
            assert_eq!(all, vec![SetPartition::identity(n)]);
        }
        assert_eq!(enum_nc_p(6, 2).unwrap().count(), 6);
        assert!(enum_nc_p(0, 2).is_err());
    }

    #[test]
    fn multiples() {
        assert_eq!(strings(enum_multiple(2, 2).unwrap()), vec!["1,2/3,4", "1,2,3,4", "1,4/2,3"]);
        assert_eq!(enum_multiple(5, 2).unwrap().count(), 6);
        assert_eq!(enum_multiple(1, 5).unwrap().count(), 42);
    }

    #[test]
    fn coarsenings_of_a_partition() {
        let p: SetPartition = "1,4/2,3/5,6".parse().unwrap();
        let got = strings(NcPartitions::coarsenings(p));
        assert_eq!(got, vec!["1,2,3,4/5,6", "1,2,3,4,5,6", "1,4/2,3/5,6", "1,4,5,6/2,3"]);
    }

    #[test]
    fn chains() {
        assert_eq!(enum_chains(2, 5).unwrap().count(), 6);
        assert_eq!(enum_chains(4, 1).unwrap().count(), 14);
        assert_eq!(enum_chains(3, 2).unwrap().count(), 12);
        assert_eq!(enum_chains(0, 3).unwrap().map(|c| c.to_string()).collect::<Vec<_>>(), vec![";;"]);
        assert!(enum_chains(3, 0).is_err());
    }

    #[test]
    fn doubles_and_tuples() {
        assert_eq!(enum_double(3, 2).unwrap().count(), 6);
        assert_eq!(enum_double(2, 2).unwrap().count(), 4);
        assert_eq!(enum_double(1, 4).unwrap().count(), 14);
        assert_eq!(enum_mtuple_p(3, 2, 2).unwrap().count(), 6);
        assert_eq!(enum_mtuple_p(1, 3, 3).unwrap().count(), 12);
        let a: Vec<_> = enum_mtuple_p(2, 2, 2).unwrap().collect();
        let b: Vec<_> = enum_double(2, 2).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn histograms() {
        let h = |p, n| box_histogram(p, n).unwrap().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(h(3, 2), vec!["0", "2", "1"]);
        assert_eq!(h(2, 3), vec!["0", "2", "2", "1"]);
        assert_eq!(h(4, 0), vec!["1"]);
        for n in 1..5 {
            assert_eq!(h(2, n)[0], "0");
        }
    }

    #[test]
    fn chain_parsing() {
        let c: PartitionChain = "1,4/2,3/5,6;1,4,5,6/2,3".parse().unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.to_string(), "1,4/2,3/5,6;1,4,5,6/2,3");
        assert!("1,2/3;1/2/3".parse::<PartitionChain>().is_err());
        assert!("1,3/2,4".parse::<PartitionChain>().is_err());
    }

    #[test]
    fn deterministic() {
        let a: Vec<_> = enum_chains(4, 2).unwrap().collect();
        let b: Vec<_> = enum_chains(4, 2).unwrap().collect();
        assert_eq!(a, b);
    }
}
