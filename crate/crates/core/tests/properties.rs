use std::collections::BTreeSet;

use ncpart::oracle;
use ncpart::*;
use proptest::prelude::*;

#[test]
fn join_is_the_least_common_coarsening() {
    for n in 0..=6 {
        let all: Vec<SetPartition> = enum_nc(n).collect();
        let id = SetPartition::identity(n);
        for a in &all {
            assert_eq!(a.nc_join(a).unwrap(), *a);
            assert_eq!(id.nc_join(a).unwrap(), *a);
            for b in &all {
                let j = a.nc_join(b).unwrap();
                assert_eq!(j, b.nc_join(a).unwrap());
                assert!(j.is_noncrossing());
                assert!(a.is_refinement_of(&j).unwrap() && b.is_refinement_of(&j).unwrap());
                assert_eq!(j, oracle::nc_join_by_scan(a, b), "{a} * {b}");
            }
        }
    }
}

#[test]
fn join_is_associative() {
    for n in 0..=5 {
        let all: Vec<SetPartition> = enum_nc(n).collect();
        for a in &all {
            for b in &all {
                let ab = a.nc_join(b).unwrap();
                for c in &all {
                    assert_eq!(ab.nc_join(c).unwrap(), a.nc_join(&b.nc_join(c).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn boxes_bounded_by_blocks() {
    for n in 1..=8 {
        for p in enum_nc(n) {
            let boxes = p.box_count().unwrap();
            assert!(boxes >= 1 && boxes <= p.num_blocks(), "{p}");
        }
    }
}

#[test]
fn histogram_matches_triangle() {
    for p in 1..=4 {
        for n in 0..=4 {
            assert_eq!(box_histogram(p, n).unwrap(), triangle_row(p as u64, n).unwrap(), "p={p} n={n}");
        }
    }
}

#[test]
fn tree_round_trips() {
    for p in 1..=6 {
        for n in 0..=12 / p {
            let parts: Vec<SetPartition> = enum_nc_p(p, n).unwrap().collect();
            let mut trees = BTreeSet::new();
            for part in &parts {
                let t = tree_of_partition(part, p).unwrap();
                assert_eq!(partition_of_tree(&t), *part);
                assert_eq!(t.box_nodes(), part.box_count().unwrap());
                trees.insert(t);
            }
            let all: BTreeSet<PTree> = enum_ptrees(p, n).unwrap().collect();
            assert_eq!(trees, all, "p={p} n={n}");
            for t in &all {
                assert_eq!(t.leaves(), n * (p - 1) + 1);
                assert_eq!(tree_of_partition(&partition_of_tree(t), p).unwrap(), *t);
            }
        }
    }
}

fn nc_partition() -> impl Strategy<Value = SetPartition> {
    (0usize..=9).prop_flat_map(|n| {
        let all: Vec<SetPartition> = enum_nc(n).collect();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn any_partition() -> impl Strategy<Value = SetPartition> {
    (0usize..=10).prop_flat_map(|n| proptest::collection::vec(0..n.max(1), n)).prop_map(|labels| {
        let n = labels.len();
        let mut blocks = vec![Vec::new(); n];
        for (e, &l) in labels.iter().enumerate() {
            blocks[l].push(e + 1);
        }
        SetPartition::from_blocks(n, blocks.into_iter().filter(|b| !b.is_empty())).unwrap()
    })
}

proptest! {
    #[test]
    fn serialization_round_trips(p in any_partition()) {
        let s = p.to_string();
        let back: SetPartition = s.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn planarity_matches_quadruple_definition(p in any_partition()) {
        prop_assert_eq!(p.is_noncrossing(), oracle::is_noncrossing_by_quadruples(&p));
    }

    #[test]
    fn contraction_preserves_planarity(p in nc_partition(), k in 1usize..=4) {
        if p.n() % k == 0 {
            prop_assert!(p.contract(k).unwrap().is_noncrossing());
        }
    }

    #[test]
    fn join_is_monotone(a in nc_partition(), seed in any::<u64>()) {
        let all: Vec<SetPartition> = enum_nc(a.n()).collect();
        let b = &all[(seed % all.len() as u64) as usize];
        let j = a.nc_join(b).unwrap();
        prop_assert!(a.is_refinement_of(&j).unwrap());
        prop_assert!(b.is_refinement_of(&j).unwrap());
    }
}
