//! Graded dimension vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimensions of the graded pieces of a graded vector space, indexed by degree.
/// Trailing zeros are dropped, so equal spaces compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct GradedDims(Vec<usize>);

impl GradedDims {
    pub fn new(mut dims: Vec<usize>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        GradedDims(dims)
    }

    pub fn zero() -> Self {
        GradedDims(Vec::new())
    }

    /// Dimension in degree `d`; zero past the stored range.
    pub fn get(&self, d: usize) -> usize {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// One past the highest nonzero degree.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        GradedDims::new((0..n).map(|d| self.get(d) + other.get(d)).collect())
    }

    /// Graded tensor product (Cauchy product of the dimension sequences).
    pub fn tensor(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return GradedDims::zero();
        }
        let mut out = vec![0; self.len() + other.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GradedDims::new(out)
    }

    /// Keeps degrees `0..=max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        GradedDims::new(self.0.iter().take(max_degree + 1).copied().collect())
    }

    /// Entries in even degrees, keyed by degree.
    pub fn even_entries(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(d, x)| d % 2 == 0 && **x > 0)
            .map(|(d, x)| (d, *x))
            .collect()
    }

    /// Is every entry at most the corresponding entry of `other`?
    pub fn le(&self, other: &Self) -> bool {
        (0..self.len()).all(|d| self.get(d) <= other.get(d))
    }
}

impl From<Vec<usize>> for GradedDims {
    fn from(v: Vec<usize>) -> Self {
        GradedDims::new(v)
    }
}

impl From<GradedDims> for Vec<usize> {
    fn from(g: GradedDims) -> Self {
        g.0
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_dropped() {
        assert_eq!(GradedDims::new(vec![1, 2, 0, 0]), GradedDims::new(vec![1, 2]));
        assert_eq!(GradedDims::new(vec![0, 0]).len(), 0);
    }

    #[test]
    fn tensor_of_series() {
        let a = GradedDims::new(vec![1, 1]);
        assert_eq!(a.tensor(&a), GradedDims::new(vec![1, 2, 1]));
        assert_eq!(a.tensor(&GradedDims::zero()), GradedDims::zero());
    }

    #[test]
    fn json_is_a_plain_list() {
        let a = GradedDims::new(vec![3, 1, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[3,1,1]");
        let b: GradedDims = serde_json::from_str("[3,1,1,0]").unwrap();
        assert_eq!(a, b);
    }
}
