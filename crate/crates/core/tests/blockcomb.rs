mod common;

use std::collections::HashMap;

use qschur_hh::blockcomb::{
    abacus_from_partition, block_label, blocks_of, e_core_and_weight, is_e_core, is_rouquier_core, rouquier_bead_bound,
    rouquier_presentation_up_to, standard_rouquier_core, AbacusConfig, BlockLabel,
};
use qschur_hh::{partitions, Partition};

#[test]
fn core_and_weight_match_hook_removal() {
    for e in 2..=5 {
        let mut memo = HashMap::new();
        for n in 0..=12 {
            for p in partitions(n) {
                let reached = common::cores_by_hook_removal(p.parts(), e, &mut memo);
                assert_eq!(reached.len(), 1, "removal order matters for {p} at e={e}");
                let (core, weight) = reached.into_iter().next().unwrap();
                let (c, w) = e_core_and_weight(&p, e);
                assert_eq!(c.parts(), core.as_slice(), "{p} e={e}");
                assert_eq!(w, weight, "{p} e={e}");
                assert_eq!(p.size(), c.size() + e * w);
            }
        }
    }
}

#[test]
fn bead_count_does_not_matter() {
    for e in 2..=4 {
        for n in 0..=8 {
            for p in partitions(n) {
                let (core, weight) = e_core_and_weight(&p, e);
                for beads in p.len()..p.len() + 2 * e {
                    let ab = abacus_from_partition(&p, e, beads).unwrap();
                    assert_eq!(ab.partition(), p);
                    let (pushed, moves) = ab.push_up();
                    assert_eq!(pushed.partition(), core);
                    assert_eq!(moves, weight);
                }
            }
        }
    }
}

#[test]
fn labels() {
    assert_eq!(
        block_label(&Partition::new(vec![3]), 3),
        BlockLabel {
            weight: 1,
            core: Partition::empty()
        }
    );
    assert_eq!(block_label(&Partition::empty(), 4).weight, 0);
    let groups = blocks_of(6, 3);
    let total: usize = groups.iter().map(|(_, ps)| ps.len()).sum();
    assert_eq!(total, partitions(6).len());
    for (label, ps) in &groups {
        assert!(is_e_core(&label.core, 3));
        for p in ps {
            assert_eq!(&block_label(p, 3), label);
        }
    }
    let json = serde_json::to_string(&groups[0].0).unwrap();
    let back: BlockLabel = serde_json::from_str(&json).unwrap();
    assert_eq!(back, groups[0].0);
}

#[test]
fn rouquier_search_is_stable() {
    for e in 2..=4 {
        for w in 1..=3 {
            for n in 0..=10 {
                for p in partitions(n).into_iter().filter(|p| is_e_core(p, e)) {
                    let bound = rouquier_bead_bound(&p, e, w);
                    let short = rouquier_presentation_up_to(&p, e, w, bound).unwrap().is_some();
                    let long = rouquier_presentation_up_to(&p, e, w, 3 * bound + 10).unwrap().is_some();
                    assert_eq!(short, long, "{p} e={e} w={w}");
                }
            }
            let core = standard_rouquier_core(e, w);
            assert!(is_rouquier_core(&core, e, w).unwrap());
        }
        assert!(is_rouquier_core(&Partition::empty(), e, 1).unwrap());
        assert!(!is_rouquier_core(&Partition::empty(), e, 2).unwrap());
    }
}

#[test]
fn runner_count_construction() {
    let ab = AbacusConfig::from_runner_counts(3, &[0, 1, 2]);
    assert_eq!(ab.runner_counts, vec![0, 1, 2]);
    let p = ab.partition();
    assert!(is_e_core(&p, 3));
    assert_eq!(p, standard_rouquier_core(3, 2));
}
