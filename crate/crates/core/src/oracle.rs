//! Brute-force reference implementations.
//!
//! The set-partition oracles share no code with the pruned generators. The
//! inverse tables run the forward maps over a generated domain, so they never
//! touch the constructive inverses. Everything here is for cross-checking at
//! small sizes.

use std::collections::HashMap;

use crate::bijections::{multiple_to_tuple, unfold_m};
use crate::enumerate::{enum_multiple, enum_nc_p, PartitionChain};
use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// Every set partition of `[n]` (Bell many), via restricted growth strings.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            let k = rgs.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); k];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e + 1);
            }
            out.push(SetPartition::from_blocks(rgs.len(), blocks).expect("rgs is a partition"));
            return;
        }
        let limit = if i == 0 { 0 } else { max + 1 };
        for b in 0..=limit {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    rec(0, 0, &mut rgs, &mut out);
    out
}

/// Non-crossing by the quadruple definition: no `i<j<k<l` with `i,k` in one
/// block and `j,l` in another.
pub fn is_noncrossing_by_quadruples(p: &SetPartition) -> bool {
    let n = p.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if !p.same_block(i, k) || p.same_block(i, j) {
                    continue;
                }
                for l in k + 1..=n {
                    if p.same_block(j, l) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn naive_nc(n: usize) -> Vec<SetPartition> {
    all_set_partitions(n).into_iter().filter(is_noncrossing_by_quadruples).collect()
}

pub fn naive_nc_p(p: usize, n: usize) -> Vec<SetPartition> {
    naive_nc(p * n).into_iter().filter(|x| x.blocks().iter().all(|b| b.len() == p)).collect()
}

pub fn naive_multiple(p: usize, n: usize) -> Vec<SetPartition> {
    naive_nc(p * n).into_iter().filter(|x| x.blocks().iter().all(|b| b.len() % p == 0)).collect()
}

/// All chains of length `m` starting from one of `bases`, later members
/// drawn from `universe` by filtering.
pub fn naive_chains(bases: &[SetPartition], universe: &[SetPartition], m: usize) -> Vec<PartitionChain> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        last: &SetPartition,
        universe: &[SetPartition],
        m: usize,
        current: &mut Vec<SetPartition>,
        out: &mut Vec<PartitionChain>,
    ) {
        if current.len() == m {
            out.push(PartitionChain::new(current.clone()).expect("valid chain"));
            return;
        }
        for q in universe {
            if last.is_refinement_of(q).unwrap() {
                current.push(q.clone());
                rec(q, universe, m, current, out);
                current.pop();
            }
        }
    }
    for b in bases {
        current.push(b.clone());
        rec(b, universe, m, &mut current, &mut out);
        current.pop();
    }
    out
}

/// The join as the least element among all non-crossing common coarsenings.
pub fn nc_join_by_scan(a: &SetPartition, b: &SetPartition) -> SetPartition {
    let uppers: Vec<SetPartition> = naive_nc(a.n())
        .into_iter()
        .filter(|q| a.is_refinement_of(q).unwrap() && b.is_refinement_of(q).unwrap())
        .collect();
    uppers
        .iter()
        .find(|q| uppers.iter().all(|u| q.is_refinement_of(u).unwrap()))
        .cloned()
        .expect("the one-block partition is always an upper bound")
}

/// Inverse of a forward map, tabulated by running the map over every member
/// of its domain.
#[derive(Debug, Clone, Default)]
pub struct InverseTable {
    table: HashMap<PartitionChain, SetPartition>,
}

impl InverseTable {
    fn from_domain<F>(domain: impl IntoIterator<Item = SetPartition>, forward: F) -> Result<Self>
    where
        F: Fn(&SetPartition) -> Result<PartitionChain>,
    {
        let mut table = HashMap::new();
        for p in domain {
            let image = forward(&p)?;
            if let Some(prev) = table.insert(image.clone(), p.clone()) {
                return Err(Error::Reconstruction(format!("{prev} and {p} share the image {image}")));
            }
        }
        Ok(InverseTable { table })
    }

    /// Table for `unfold_m` over the planar `mp`-partitions of `[mpn]`.
    pub fn for_unfold(m: usize, p: usize, n: usize) -> Result<Self> {
        Self::from_domain(enum_nc_p(m * p, n)?, |x| unfold_m(x, m))
    }

    /// Table for `multiple_to_tuple` over the planar partitions of `[pn]`
    /// with block sizes divisible by `p`.
    pub fn for_multiples(p: usize, n: usize) -> Result<Self> {
        Self::from_domain(enum_multiple(p, n)?, |x| multiple_to_tuple(x, p))
    }

    pub fn get(&self, chain: &PartitionChain) -> Option<&SetPartition> {
        self.table.get(chain)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}
