//! Abacus combinatorics: `e`-cores, `e`-weights, Rouquier cores and block labels.

mod abacus;

pub use abacus::{abacus_from_partition, AbacusConfig};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{partitions, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("{beads} beads cannot hold a partition with {parts} parts")]
    TooFewBeads { beads: usize, parts: usize },
    #[error("an abacus needs at least one runner, got {0}")]
    BadRunnerCount(usize),
    #[error("{partition} is not a {e}-core")]
    NotCore { partition: Partition, e: usize },
}

/// The `e`-core of `p` and the number of rim `e`-hooks removed to reach it.
pub fn e_core_and_weight(p: &Partition, e: usize) -> (Partition, usize) {
    let ab = abacus_from_partition(p, e, p.len()).expect("bead count equals the number of parts");
    let (core, weight) = ab.push_up();
    (core.partition(), weight)
}

pub fn is_e_core(p: &Partition, e: usize) -> bool {
    e_core_and_weight(p, e).1 == 0
}

/// Exclusive upper bound on the bead counts searched for a Rouquier presentation.
///
/// Adding `e` beads raises every runner count by one, so the runner differences repeat with
/// period `e` once the bead count reaches the number of parts; this bound covers several periods.
pub fn rouquier_bead_bound(p: &Partition, e: usize, w: usize) -> usize {
    p.size() + e * w + e
}

/// An abacus presentation of the core `p` with at least `w-1` more beads on runner `i`
/// than on runner `i-1`, for `i = 1..e-1`.
pub fn rouquier_presentation(p: &Partition, e: usize, w: usize) -> Result<Option<AbacusConfig>, BlockError> {
    rouquier_presentation_up_to(p, e, w, rouquier_bead_bound(p, e, w))
}

pub fn rouquier_presentation_up_to(
    p: &Partition,
    e: usize,
    w: usize,
    bound: usize,
) -> Result<Option<AbacusConfig>, BlockError> {
    if e == 0 {
        return Err(BlockError::BadRunnerCount(e));
    }
    if !is_e_core(p, e) {
        return Err(BlockError::NotCore {
            partition: p.clone(),
            e,
        });
    }
    let gap = w.saturating_sub(1);
    for beads in p.len()..bound {
        let ab = abacus_from_partition(p, e, beads)?;
        let c = &ab.runner_counts;
        if (1..e).all(|i| c[i] >= c[i - 1] + gap) {
            return Ok(Some(ab));
        }
    }
    Ok(None)
}

pub fn is_rouquier_core(p: &Partition, e: usize, w: usize) -> Result<bool, BlockError> {
    Ok(rouquier_presentation(p, e, w)?.is_some())
}

/// The core with runner counts `0, w-1, 2(w-1), ...`, which is Rouquier for weight `w`.
pub fn standard_rouquier_core(e: usize, w: usize) -> Partition {
    let counts: Vec<usize> = (0..e).map(|i| i * w.saturating_sub(1)).collect();
    AbacusConfig::from_runner_counts(e, &counts).partition()
}

/// Block of a q-Schur algebra in quantum characteristic `e`: an `e`-weight and an `e`-core.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockLabel {
    pub weight: usize,
    pub core: Partition,
}

pub fn block_label(p: &Partition, e: usize) -> BlockLabel {
    let (core, weight) = e_core_and_weight(p, e);
    BlockLabel { weight, core }
}

/// Partitions of `n` grouped by block label.
pub fn blocks_of(n: usize, e: usize) -> Vec<(BlockLabel, Vec<Partition>)> {
    let mut groups: BTreeMap<BlockLabel, Vec<Partition>> = BTreeMap::new();
    for p in partitions(n) {
        groups.entry(block_label(&p, e)).or_default().push(p);
    }
    groups.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn abacus_examples() {
        let a = abacus_from_partition(&Partition::empty(), 3, 3).unwrap();
        assert_eq!(a.beta_numbers, vec![2, 1, 0]);
        assert_eq!(a.runner_counts, vec![1, 1, 1]);
        let b = abacus_from_partition(&part(&[1]), 2, 2).unwrap();
        assert_eq!(b.beta_numbers, vec![2, 0]);
        assert_eq!(b.runner_counts, vec![2, 0]);
        assert!(abacus_from_partition(&part(&[2, 1]), 2, 1).is_err());
        let p = part(&[4, 2, 2, 1]);
        for beads in 4..12 {
            assert_eq!(abacus_from_partition(&p, 3, beads).unwrap().partition(), p);
        }
    }

    #[test]
    fn cores_and_weights() {
        for e in 2..6 {
            assert_eq!(e_core_and_weight(&Partition::empty(), e), (Partition::empty(), 0));
            assert_eq!(e_core_and_weight(&part(&[e]), e), (Partition::empty(), 1));
            assert_eq!(e_core_and_weight(&part(&[1]), e), (part(&[1]), 0));
        }
        assert_eq!(e_core_and_weight(&part(&[3, 1]), 2), (Partition::empty(), 2));
        assert_eq!(e_core_and_weight(&part(&[2, 1]), 2), (part(&[2, 1]), 0));
    }

    #[test]
    fn rouquier_examples() {
        let empty = Partition::empty();
        assert!(is_rouquier_core(&empty, 3, 1).unwrap());
        assert!(!is_rouquier_core(&empty, 3, 2).unwrap());
        for e in 2..5 {
            for w in 1..4 {
                let core = standard_rouquier_core(e, w);
                assert!(is_e_core(&core, e));
                assert!(is_rouquier_core(&core, e, w).unwrap(), "e={e} w={w} core={core}");
            }
        }
        assert!(is_rouquier_core(&part(&[2]), 2, 1).is_err());
    }

    #[test]
    fn block_grouping() {
        let blocks = blocks_of(3, 3);
        let principal = blocks.iter().find(|(l, _)| l.core.is_empty()).unwrap();
        assert_eq!(principal.0.weight, 1);
        assert_eq!(principal.1.len(), 3);
        assert_eq!(blocks.iter().map(|(_, v)| v.len()).sum::<usize>(), 3);
    }
}
