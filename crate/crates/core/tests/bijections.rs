use std::collections::BTreeSet;

use ncpart::oracle::InverseTable;
use ncpart::*;

#[test]
fn split_merge_round_trip() {
    for q in 1..=3 {
        for n in 0..=6 / q {
            let domain: Vec<SetPartition> = enum_nc_p(2 * q, n).unwrap().collect();
            let mut image = BTreeSet::new();
            for p in &domain {
                let pair = split_even(p).unwrap();
                assert_eq!(merge_even(&pair, q).unwrap(), *p, "q={q} n={n} P={p}");
                assert_eq!(unfold_m(p, 2).unwrap(), pair);
                image.insert(pair);
            }
            let family: BTreeSet<PartitionChain> = enum_double(q, n).unwrap().collect();
            assert_eq!(image, family, "q={q} n={n}");
        }
    }
}

#[test]
fn merge_every_double_partition() {
    for q in 1..=3 {
        for n in 0..=6 / q {
            for chain in enum_double(q, n).unwrap() {
                let p = merge_even(&chain, q).unwrap();
                assert_eq!(split_even(&p).unwrap(), chain);
            }
        }
    }
}

#[test]
fn unfold_fold_against_lookup_table() {
    for m in 1..=4 {
        for p in 1..=4 {
            for n in 0..=12 / (m * p) {
                let table = InverseTable::for_unfold(m, p, n).unwrap();
                let family: Vec<PartitionChain> = enum_mtuple_p(m, p, n).unwrap().collect();
                assert_eq!(family.len(), table.len(), "m={m} p={p} n={n}");
                for chain in &family {
                    let folded = fold_m(chain, m, p).unwrap();
                    assert_eq!(Some(&folded), table.get(chain), "m={m} p={p} n={n} chain={chain}");
                }
            }
        }
    }
}

#[test]
fn multiples_against_lookup_table() {
    for p in 1..=5 {
        for n in 0..=10 / p {
            let table = InverseTable::for_multiples(p, n).unwrap();
            let family: Vec<PartitionChain> = enum_chains(n, p).unwrap().collect();
            assert_eq!(family.len(), table.len(), "p={p} n={n}");
            for chain in &family {
                let m = tuple_to_multiple(chain, p).unwrap();
                assert_eq!(Some(&m), table.get(chain), "p={p} n={n} chain={chain}");
                assert_eq!(multiple_to_tuple(&m, p).unwrap(), *chain);
            }
        }
    }
}

#[test]
fn parity_alternates_in_even_blocks() {
    for q in 1..=3 {
        for n in 0..=6 / q {
            for p in enum_nc_p(2 * q, n).unwrap() {
                for b in p.blocks() {
                    assert!(b.windows(2).all(|w| (w[1] - w[0]) % (2 * q) == 1), "{p}");
                    assert_ne!(b[0] % 2, b.last().unwrap() % 2);
                }
            }
        }
    }
}

#[test]
fn chains_outside_the_image_are_rejected() {
    // A chain that is not even a refinement chain.
    let bad: Result<PartitionChain> = "1,2/3,4;1/2,3/4".parse();
    assert!(bad.is_err());
    // First member of the wrong shape for fold_m.
    let c: PartitionChain = "1,2,3;1,2,3".parse().unwrap();
    assert!(fold_m(&c, 2, 2).is_err());
}
