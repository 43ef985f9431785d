//! Maps between planar partitions with large blocks and refinement chains of
//! planar partitions with small blocks.
//!
//! The forward maps cut the ground set into cells of `m` consecutive points,
//! join the first `r` points of every cell (the comb `I_r`), take the
//! non-crossing join with the partition, and keep the first point of each
//! cell.
//!
//! The inverse is rebuilt one level at a time. Let `P|w` be `P` with only
//! the first `w` points of every cell kept. Level `w + 1` of the chain
//! depends on `P|(w+1)` alone, so `P|(w+1)` can be recovered from `P|w`
//! and that one extra level:
//!
//! * a block whose minimum sits at cell position `s ≥ 2` stays disjoint from
//!   everything outside its span at levels `< s`, and at level `s` joins the
//!   class of the point just before its minimum;
//! * hence in a class of level `w + 1` the block holding the smallest cell
//!   anchor is the only one starting at position 1, and the span of that
//!   block ends at the last cell of its class;
//! * every other block of `P|w` that starts at an anchor really starts at
//!   the newly inserted last point of some earlier cell. Between that point
//!   and the old minimum there is only a run of whole-cell subtrees, whose
//!   spans are known, so walking back over them pins the new minimum;
//! * every other inserted point joins the innermost open block.

use std::collections::HashMap;

use crate::enumerate::PartitionChain;
use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// A finest partition plus the ties recording where coarser levels merge
/// its blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiedDiagram {
    pub base: SetPartition,
    pub ties: Vec<Tie>,
}

/// Tie between blocks `from < to` of the base (1-based canonical block
/// labels), introduced by chain level `ordinal ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tie {
    pub from: usize,
    pub to: usize,
    pub ordinal: usize,
}

fn check_noncrossing(p: &SetPartition) -> Result<()> {
    if p.is_noncrossing() {
        Ok(())
    } else {
        Err(Error::Crossing)
    }
}

/// Common block size of `p`, if all blocks agree.
fn uniform_block_size(p: &SetPartition) -> Option<usize> {
    let first = p.blocks().first()?.len();
    p.has_uniform_block_size(first).then_some(first)
}

/// `(P * I_r)^{/m}` for `r = 1..=m`, no domain checks.
fn unfold_unchecked(p: &SetPartition, m: usize) -> Result<PartitionChain> {
    let n = p.n();
    let mut parts = Vec::with_capacity(m);
    for r in 1..=m {
        let comb = SetPartition::comb(n, m, r)?;
        parts.push(p.nc_join(&comb)?.contract(m)?);
    }
    Ok(PartitionChain::from_parts_unchecked(parts))
}

/// `(P', P'')` with `P' = P^{/2}` and `P'' = (I_2 * P)^{/2}`, for a planar
/// partition with all blocks of one even size.
pub fn split_even(p: &SetPartition) -> Result<PartitionChain> {
    check_noncrossing(p)?;
    if p.n() == 0 {
        return Ok(PartitionChain::from_parts_unchecked(vec![SetPartition::void(); 2]));
    }
    match uniform_block_size(p) {
        Some(size) if size % 2 == 0 => {}
        _ => return Err(Error::NotInDomain("blocks must all have the same even size".into())),
    }
    let first = p.contract(2)?;
    let i2 = SetPartition::comb(p.n(), 2, 2)?;
    let second = i2.nc_join(p)?.contract(2)?;
    Ok(PartitionChain::from_parts_unchecked(vec![first, second]))
}

/// Inverse of [`split_even`] for pairs whose first member is a planar
/// `q`-partition.
pub fn merge_even(chain: &PartitionChain, q: usize) -> Result<SetPartition> {
    if chain.len() != 2 {
        return Err(Error::NotInDomain(format!("expected a pair, got {} partitions", chain.len())));
    }
    fold_m(chain, 2, q)
}

/// `(P^{(1)}, ..., P^{(m)})` with `P^{(r)} = (P * I_r)^{/m}` for a planar
/// partition whose blocks all have size `m·p`.
pub fn unfold_m(p: &SetPartition, m: usize) -> Result<PartitionChain> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    check_noncrossing(p)?;
    if p.n() == 0 {
        return Ok(PartitionChain::from_parts_unchecked(vec![SetPartition::void(); m]));
    }
    match uniform_block_size(p) {
        Some(size) if size % m == 0 => {}
        _ => return Err(Error::NotInDomain(format!("blocks must all have one size divisible by {m}"))),
    }
    unfold_unchecked(p, m)
}

/// Inverse of [`unfold_m`]: the planar `mp`-partition whose unfolding is
/// `chain`.
pub fn fold_m(chain: &PartitionChain, m: usize, p: usize) -> Result<SetPartition> {
    if m == 0 || p == 0 {
        return Err(Error::InvalidParameter("m and p must be at least 1".into()));
    }
    if chain.len() != m {
        return Err(Error::NotInDomain(format!("expected {m} partitions, got {}", chain.len())));
    }
    if !chain.finest().has_uniform_block_size(p) || !chain.n().is_multiple_of(p) {
        return Err(Error::NotInDomain(format!("first member must be a {p}-partition")));
    }
    rebuild(chain, m)
}

/// `(M^{(1)}, ..., M^{(p)})` with `M^{(r)} = (M * I_r)^{/p}` for a planar
/// partition whose block sizes are multiples of `p`.
pub fn multiple_to_tuple(mp: &SetPartition, p: usize) -> Result<PartitionChain> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    check_noncrossing(mp)?;
    if !mp.n().is_multiple_of(p) || mp.blocks().iter().any(|b| b.len() % p != 0) {
        return Err(Error::NotInDomain(format!("block sizes must be multiples of {p}")));
    }
    if mp.n() == 0 {
        return Ok(PartitionChain::from_parts_unchecked(vec![SetPartition::void(); p]));
    }
    unfold_unchecked(mp, p)
}

/// Inverse of [`multiple_to_tuple`].
pub fn tuple_to_multiple(chain: &PartitionChain, p: usize) -> Result<SetPartition> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    if chain.len() != p {
        return Err(Error::NotInDomain(format!("expected {p} partitions, got {}", chain.len())));
    }
    rebuild(chain, p)
}

fn rebuild(chain: &PartitionChain, m: usize) -> Result<SetPartition> {
    let mut current = chain.finest().clone();
    for (width, coarse) in chain.parts().iter().enumerate().skip(1) {
        current = lift_level(&current, width, coarse)?;
    }
    if chain.n() > 0 && unfold_unchecked(&current, m)? != *chain {
        return Err(Error::Reconstruction(format!("{chain} is not the unfolding of any partition")));
    }
    Ok(current)
}

/// Given `P|w` (cells of width `w`) and chain level `w + 1` (a partition of
/// the cells), recover `P|(w+1)`.
pub(crate) fn lift_level(fine: &SetPartition, w: usize, coarse: &SetPartition) -> Result<SetPartition> {
    let cells = coarse.n();
    if fine.n() != w * cells {
        return Err(Error::SizeMismatch { left: fine.n(), right: w * cells });
    }
    if cells == 0 {
        return Ok(SetPartition::void());
    }
    let anchor = |cell: usize| (cell - 1) * w + 1;
    let is_anchor = |e: usize| (e - 1).is_multiple_of(w);
    let cell_of = |e: usize| (e - 1) / w + 1;

    let anchor_count: Vec<usize> = fine.blocks().iter().map(|b| b.iter().filter(|&&e| is_anchor(e)).count()).collect();
    if anchor_count.contains(&0) {
        return Err(Error::Reconstruction("a block has no anchor".into()));
    }
    if !fine.contract(w)?.is_refinement_of(coarse)? {
        return Err(Error::Reconstruction("chain level is not a coarsening of the previous one".into()));
    }

    // Top block of every coarse class and the cell span it covers.
    let mut is_top = vec![false; fine.num_blocks()];
    let mut span_start_by_end: HashMap<usize, usize> = HashMap::new();
    for class in coarse.blocks() {
        let top = fine.block_of(anchor(class[0]));
        if !is_anchor(fine.blocks()[top][0]) {
            return Err(Error::Reconstruction(format!("class {class:?} has no block starting at an anchor")));
        }
        is_top[top] = true;
        span_start_by_end.insert(*class.last().unwrap(), class[0]);
    }

    let new_pos = |e: usize| (cell_of(e) - 1) * (w + 1) + (e - 1) % w + 1;
    let inserted = |cell: usize| cell * (w + 1);

    // Blocks that start at an anchor but are not tops move their minimum to an
    // inserted point.
    let mut opener: HashMap<usize, usize> = HashMap::new();
    let mut late = vec![false; fine.num_blocks()];
    for (b, block) in fine.blocks().iter().enumerate() {
        if is_top[b] || !is_anchor(block[0]) {
            continue;
        }
        late[b] = true;
        let mut c = cell_of(block[0]) - 1;
        while let Some(&start) = span_start_by_end.get(&c) {
            c = start - 1;
        }
        if c == 0 {
            return Err(Error::Reconstruction(format!("no place for the minimum of block {block:?}")));
        }
        if opener.insert(inserted(c), b).is_some() {
            return Err(Error::Reconstruction(format!("two blocks claim the inserted point {}", inserted(c))));
        }
    }

    let total = (w + 1) * cells;
    let mut owner_of_fine: Vec<usize> = vec![usize::MAX; total + 1];
    for (b, block) in fine.blocks().iter().enumerate() {
        for &e in block {
            owner_of_fine[new_pos(e)] = b;
        }
    }
    let target: Vec<usize> = anchor_count.iter().map(|a| a * (w + 1)).collect();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); fine.num_blocks()];
    let mut opened = vec![false; fine.num_blocks()];
    let mut stack: Vec<usize> = Vec::new();

    for x in 1..=total {
        let b = if owner_of_fine[x] != usize::MAX {
            let b = owner_of_fine[x];
            if !opened[b] {
                if late[b] || new_pos(fine.blocks()[b][0]) != x {
                    return Err(Error::Reconstruction(format!(
                        "block {:?} reached before it opened",
                        fine.blocks()[b]
                    )));
                }
                opened[b] = true;
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return Err(Error::Reconstruction(format!("point {x} would cross an open block")));
            }
            b
        } else if let Some(&b) = opener.get(&x) {
            if opened[b] {
                return Err(Error::Reconstruction(format!("block opened twice at {x}")));
            }
            opened[b] = true;
            stack.push(b);
            b
        } else {
            *stack.last().ok_or_else(|| Error::Reconstruction(format!("inserted point {x} has no open block")))?
        };
        out[b].push(x);
        if out[b].len() == target[b] {
            stack.pop();
        } else if out[b].len() > target[b] {
            return Err(Error::Reconstruction(format!("block overflow at {x}")));
        }
    }
    if !stack.is_empty() {
        return Err(Error::Reconstruction("blocks left open".into()));
    }
    SetPartition::from_blocks(total, out)
}

/// Ties between consecutive blocks (by label) of each coarser class, labelled
/// with the first level at which they appear.
pub fn chain_to_tied_diagram(chain: &PartitionChain) -> TiedDiagram {
    let base = chain.finest().clone();
    let mut ties: Vec<Tie> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (level, part) in chain.parts().iter().enumerate().skip(1) {
        let ordinal = level + 1;
        for class in part.blocks() {
            let mut labels: Vec<usize> = class.iter().map(|&e| base.block_of(e) + 1).collect();
            labels.sort_unstable();
            labels.dedup();
            for w in labels.windows(2) {
                if seen.insert((w[0], w[1])) {
                    ties.push(Tie { from: w[0], to: w[1], ordinal });
                }
            }
        }
    }
    ties.sort_by_key(|t| (t.ordinal, t.from, t.to));
    TiedDiagram { base, ties }
}
