use serde::{Deserialize, Serialize};

use crate::partition::Partition;

use super::BlockError;

/// Beads at the β-numbers of a partition, on `e` runners (runner = position mod `e`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbacusConfig {
    pub e: usize,
    /// Strictly decreasing bead positions.
    pub beta_numbers: Vec<usize>,
    pub runner_counts: Vec<usize>,
}

impl AbacusConfig {
    pub fn from_beta(e: usize, mut beta: Vec<usize>) -> Self {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        beta.dedup();
        let mut runner_counts = vec![0; e];
        for &b in &beta {
            runner_counts[b % e] += 1;
        }
        AbacusConfig {
            e,
            beta_numbers: beta,
            runner_counts,
        }
    }

    /// Beads pushed to the top of their runners, `counts[r]` on runner `r`.
    pub fn from_runner_counts(e: usize, counts: &[usize]) -> Self {
        let beta = counts
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| (0..c).map(move |l| r + l * e))
            .collect();
        Self::from_beta(e, beta)
    }

    pub fn beads(&self) -> usize {
        self.beta_numbers.len()
    }

    /// `λ_i = β_i - (beads - i)`.
    pub fn partition(&self) -> Partition {
        let n = self.beads();
        Partition::new(
            self.beta_numbers
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (n - 1 - i))
                .collect(),
        )
    }

    /// Pushes every bead up its runner. Returns the result and the number of single-step
    /// moves, which is the number of rim `e`-hooks removed.
    pub fn push_up(&self) -> (AbacusConfig, usize) {
        let mut moves = 0;
        for r in 0..self.e {
            let mut levels: Vec<usize> = self
                .beta_numbers
                .iter()
                .filter(|&&b| b % self.e == r)
                .map(|&b| b / self.e)
                .collect();
            levels.sort_unstable();
            moves += levels.iter().enumerate().map(|(j, &l)| l - j).sum::<usize>();
        }
        (Self::from_runner_counts(self.e, &self.runner_counts), moves)
    }
}

/// Abacus of `p` with `beads` beads.
pub fn abacus_from_partition(p: &Partition, e: usize, beads: usize) -> Result<AbacusConfig, BlockError> {
    if e == 0 {
        return Err(BlockError::BadRunnerCount(e));
    }
    if beads < p.len() {
        return Err(BlockError::TooFewBeads { beads, parts: p.len() });
    }
    let beta = (0..beads).map(|i| p.part(i + 1) + beads - 1 - i).collect();
    Ok(AbacusConfig::from_beta(e, beta))
}
