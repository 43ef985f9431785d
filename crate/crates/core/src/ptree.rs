//! Full `p`-ary ordered trees and their correspondence with planar
//! `p`-partitions.
//!
//! Internal nodes are stored in preorder, which is also the order of the
//! first points of the corresponding blocks.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::SetPartition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PTree {
    arity: usize,
    // children[k][i] = internal node at child ordinal i + 1 of node k, or a leaf
    children: Vec<Vec<Option<usize>>>,
}

/// `(parent, ordinal)` of internal node `k` for `k = 2..=n`, all 1-based.
pub type ChildSpec = Vec<(usize, usize)>;

impl PTree {
    /// The tree made of a single leaf.
    pub fn leaf(arity: usize) -> Self {
        PTree { arity, children: Vec::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn internal_nodes(&self) -> usize {
        self.children.len()
    }

    pub fn leaves(&self) -> usize {
        let slots: usize = self.children.iter().map(|c| c.iter().filter(|x| x.is_none()).count()).sum();
        if self.children.is_empty() {
            1
        } else {
            slots
        }
    }

    /// Builds a tree from its child specification, relabelling into
    /// preorder.
    pub fn from_child_spec(arity: usize, n: usize, spec: &[(usize, usize)]) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidParameter("arity must be at least 1".into()));
        }
        if n == 0 {
            return if spec.is_empty() {
                Ok(PTree::leaf(arity))
            } else {
                Err(Error::InvalidParameter("leaf tree takes no child pairs".into()))
            };
        }
        if spec.len() != n - 1 {
            return Err(Error::InvalidParameter(format!("expected {} child pairs", n - 1)));
        }
        let mut children = vec![vec![None; arity]; n];
        for (i, &(a, b)) in spec.iter().enumerate() {
            let k = i + 2;
            if a == 0 || a >= k || b == 0 || b > arity {
                return Err(Error::InvalidParameter(format!("bad pair ({a},{b}) for node {k}")));
            }
            if children[a - 1][b - 1].replace(k - 1).is_some() {
                return Err(Error::InvalidParameter(format!("slot ({a},{b}) used twice")));
            }
        }
        let raw = PTree { arity, children };
        Ok(raw.relabelled())
    }

    fn relabelled(&self) -> Self {
        let mut order = Vec::with_capacity(self.children.len());
        let mut stack = vec![0usize];
        while let Some(k) = stack.pop() {
            order.push(k);
            stack.extend(self.children[k].iter().rev().flatten());
        }
        let mut rank = vec![0; self.children.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let children =
            order.iter().map(|&old| self.children[old].iter().map(|c| c.map(|x| rank[x])).collect()).collect();
        PTree { arity: self.arity, children }
    }

    /// `(parent, ordinal)` pairs in label order.
    pub fn child_spec(&self) -> ChildSpec {
        let mut spec = vec![(0, 0); self.children.len().saturating_sub(1)];
        for (k, slots) in self.children.iter().enumerate() {
            for (i, c) in slots.iter().enumerate() {
                if let Some(c) = c {
                    spec[c - 1] = (k + 1, i + 1);
                }
            }
        }
        spec
    }

    /// Internal nodes that are the root or reached from it through last-child
    /// edges only.
    pub fn box_nodes(&self) -> usize {
        let mut count = 0;
        let mut node = if self.children.is_empty() { None } else { Some(0) };
        while let Some(k) = node {
            count += 1;
            node = self.children[k][self.arity - 1];
        }
        count
    }

    /// Preorder string: internal node `(`children`)`, leaf `*`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if self.children.is_empty() {
            out.push('*');
        } else {
            self.write_node(0, &mut out);
        }
        out
    }

    fn write_node(&self, k: usize, out: &mut String) {
        out.push('(');
        for c in &self.children[k] {
            match c {
                Some(c) => self.write_node(*c, out),
                None => out.push('*'),
            }
        }
        out.push(')');
    }

    pub fn parse(s: &str, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidParameter("arity must be at least 1".into()));
        }
        let bytes = s.trim().as_bytes();
        let mut children: Vec<Vec<Option<usize>>> = Vec::new();
        let mut pos = 0;
        let root = parse_node(bytes, &mut pos, arity, &mut children)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input at byte {pos}")));
        }
        debug_assert!(root.is_none() || root == Some(0));
        Ok(PTree { arity, children })
    }

    /// Indented text rendering, one node per line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if self.children.is_empty() {
            out.push_str("*\n");
            return out;
        }
        self.render_node(0, 0, 0, &mut out);
        out
    }

    fn render_node(&self, k: usize, ordinal: usize, depth: usize, out: &mut String) {
        let indent = "  ".repeat(depth);
        if depth == 0 {
            out.push_str(&format!("{indent}node {}\n", k + 1));
        } else {
            out.push_str(&format!("{indent}{ordinal}: node {}\n", k + 1));
        }
        for (i, c) in self.children[k].iter().enumerate() {
            if let Some(c) = c {
                self.render_node(*c, i + 1, depth + 1, out);
            }
        }
    }
}

fn parse_node(
    s: &[u8],
    pos: &mut usize,
    arity: usize,
    children: &mut Vec<Vec<Option<usize>>>,
) -> Result<Option<usize>> {
    match s.get(*pos) {
        Some(b'*') => {
            *pos += 1;
            Ok(None)
        }
        Some(b'(') => {
            *pos += 1;
            let me = children.len();
            children.push(Vec::with_capacity(arity));
            for _ in 0..arity {
                let c = parse_node(s, pos, arity, children)?;
                children[me].push(c);
            }
            if s.get(*pos) != Some(&b')') {
                return Err(Error::Parse(format!("expected ')' at byte {pos}", pos = *pos)));
            }
            *pos += 1;
            Ok(Some(me))
        }
        _ => Err(Error::Parse(format!("unexpected input at byte {}", *pos))),
    }
}

impl fmt::Display for PTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// All full `p`-ary trees with `n` internal nodes.
pub fn enum_ptrees(p: usize, n: usize) -> Result<std::vec::IntoIter<PTree>> {
    if p == 0 {
        return Err(Error::InvalidParameter("arity must be at least 1".into()));
    }
    let shapes = shapes(p, n);
    let trees: Vec<PTree> = shapes.iter().map(|s| PTree::parse(s, p).expect("generated shape parses")).collect();
    Ok(trees.into_iter())
}

// Serialized shapes with `n` internal nodes, built from compositions of
// `n - 1` into `p` subtree sizes.
fn shapes(p: usize, n: usize) -> Vec<String> {
    let mut memo: Vec<Vec<String>> = vec![vec!["*".to_string()]];
    for size in 1..=n {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fill(p, size - 1, &memo, &mut prefix, &mut out);
        memo.push(out);
    }
    memo.swap_remove(n)
}

fn fill(p: usize, remaining: usize, memo: &[Vec<String>], prefix: &mut Vec<usize>, out: &mut Vec<String>) {
    if prefix.len() == p {
        if remaining == 0 {
            let mut acc = vec![String::from("(")];
            for &s in prefix.iter() {
                let mut next = Vec::new();
                for a in &acc {
                    for t in &memo[s] {
                        next.push(format!("{a}{t}"));
                    }
                }
                acc = next;
            }
            out.extend(acc.into_iter().map(|mut a| {
                a.push(')');
                a
            }));
        }
        return;
    }
    for s in 0..=remaining {
        prefix.push(s);
        fill(p, remaining - s, memo, prefix, out);
        prefix.pop();
    }
}

/// The tree of a planar `p`-partition: block `k` becomes internal node `k`,
/// hung under the block and ordinal whose point precedes the first point of
/// block `k`.
pub fn tree_of_partition(part: &SetPartition, p: usize) -> Result<PTree> {
    if p == 0 {
        return Err(Error::InvalidParameter("arity must be at least 1".into()));
    }
    if !part.has_uniform_block_size(p) || !part.is_noncrossing() {
        return Err(Error::NotInDomain(format!("not a planar {p}-partition")));
    }
    let mut spec = Vec::with_capacity(part.num_blocks().saturating_sub(1));
    for block in part.blocks().iter().skip(1) {
        let prev = block[0] - 1;
        let parent = part.block_of(prev);
        let ordinal = part.blocks()[parent].iter().position(|&e| e == prev).unwrap() + 1;
        spec.push((parent + 1, ordinal));
    }
    PTree::from_child_spec(p, part.num_blocks(), &spec)
}

/// Inverse of [`tree_of_partition`]: replay the child pairs in label order,
/// inserting each block's points right after its parent point.
pub fn partition_of_tree(tree: &PTree) -> SetPartition {
    let p = tree.arity;
    let n = tree.internal_nodes();
    if n == 0 {
        return SetPartition::void();
    }
    // Point (k, i) has id k * p + i (0-based); next[id] links the line.
    const END: usize = usize::MAX;
    let mut next = vec![END; n * p];
    for i in 0..p - 1 {
        next[i] = i + 1;
    }
    for (idx, &(a, b)) in tree.child_spec().iter().enumerate() {
        let k = idx + 1;
        let after = (a - 1) * p + (b - 1);
        let first = k * p;
        for i in 0..p - 1 {
            next[first + i] = first + i + 1;
        }
        next[first + p - 1] = next[after];
        next[after] = first;
    }
    let mut labels = vec![0; n * p];
    let mut cur = 0;
    let mut position = 0;
    while cur != END {
        labels[position] = cur / p;
        position += 1;
        cur = next[cur];
    }
    SetPartition::from_labels(&labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enum_ptrees(2, 3).unwrap().count(), 5);
        assert_eq!(enum_ptrees(4, 5).unwrap().count(), 969);
        let leaf: Vec<_> = enum_ptrees(3, 0).unwrap().collect();
        assert_eq!(leaf, vec![PTree::leaf(3)]);
        assert_eq!(enum_ptrees(1, 4).unwrap().count(), 1);
        assert!(enum_ptrees(0, 1).is_err());
    }

    #[test]
    fn serialization() {
        let t = PTree::parse("(**)", 2).unwrap();
        assert_eq!(t.internal_nodes(), 1);
        assert_eq!(t.leaves(), 2);
        assert_eq!(t.to_string(), "(**)");
        assert!(PTree::parse("(*)", 2).is_err());
        assert!(PTree::parse("(**)*", 2).is_err());
        assert_eq!(PTree::parse("*", 2).unwrap(), PTree::leaf(2));
    }

    #[test]
    fn consecutive_blocks() {
        let t = tree_of_partition(&sp("1,2,3/4,5,6"), 3).unwrap();
        assert_eq!(t.to_string(), "(**(***))");
        assert_eq!(t.child_spec(), vec![(1, 3)]);
        assert_eq!(t.box_nodes(), 2);
    }

    #[test]
    fn single_block() {
        let t = tree_of_partition(&sp("1,2,3,4"), 4).unwrap();
        assert_eq!(t.to_string(), "(****)");
        assert_eq!(partition_of_tree(&t), sp("1,2,3,4"));
        assert_eq!(t.box_nodes(), 1);
    }

    #[test]
    fn leaf_tree() {
        assert_eq!(partition_of_tree(&PTree::leaf(3)), SetPartition::void());
        assert_eq!(PTree::leaf(3).box_nodes(), 0);
        assert_eq!(tree_of_partition(&SetPartition::void(), 3).unwrap(), PTree::leaf(3));
    }

    // A member of P^4_5 whose boxes are blocks 1 and 5; block 2 hangs off the
    // first point of block 1, block 3 off the first point of block 2, block 4
    // off the second point of block 1 and block 5 off the last one.
    #[test]
    fn golden_four_ary() {
        let part = sp("1,10,15,16/2,7,8,9/3,4,5,6/11,12,13,14/17,18,19,20");
        let t = tree_of_partition(&part, 4).unwrap();
        assert_eq!(t.to_string(), "(((****)***)(****)*(****))");
        assert_eq!(t.child_spec(), vec![(1, 1), (2, 1), (1, 2), (1, 4)]);
        assert_eq!(t.box_nodes(), 2);
        assert_eq!(part.box_count(), Ok(2));
        assert_eq!(partition_of_tree(&t), part);
        assert_eq!(t.leaves(), 5 * 3 + 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(tree_of_partition(&sp("1,2/3,4,5"), 2).is_err());
        assert!(tree_of_partition(&sp("1,3/2,4"), 2).is_err());
        assert!(PTree::from_child_spec(2, 3, &[(1, 1), (1, 1)]).is_err());
        assert!(PTree::from_child_spec(2, 2, &[(2, 1)]).is_err());
    }

    #[test]
    fn unary_chain() {
        let t = tree_of_partition(&SetPartition::identity(3), 1).unwrap();
        assert_eq!(t.to_string(), "(((*)))");
        assert_eq!(partition_of_tree(&t), SetPartition::identity(3));
    }
}
