//! Graded dimensions of symmetric-group invariants in tensor powers, and the sum over
//! partitions giving `HH*` of a wreath product `Γ^{⊗w} ⋊ k𝔖_w`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graded::GradedDims;
use crate::partition::{partitions, Partition};

use super::SymError;

/// How `𝔖_p` acts on `V^{⊗p}` for graded `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// Plain permutation of tensor factors.
    Unsigned,
    /// Permutation with the Koszul sign `(-1)^{|a||b|}` for each transposition of factors.
    Signed,
}

impl SignConvention {
    pub const ALL: [SignConvention; 2] = [SignConvention::Unsigned, SignConvention::Signed];
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignConvention::Unsigned => write!(f, "unsigned"),
            SignConvention::Signed => write!(f, "signed"),
        }
    }
}

impl FromStr for SignConvention {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unsigned" => Ok(SignConvention::Unsigned),
            "signed" => Ok(SignConvention::Signed),
            _ => Err(SymError::BadConvention(s.to_string())),
        }
    }
}

/// Graded dimensions of `(V^{⊗p})^{𝔖_p}`, read off as the `u^p` coefficient of
/// `Π_d (1 - t^d u)^{-v_d}`, with odd-degree factors replaced by `(1 + t^d u)^{v_d}` under
/// the signed convention.
pub fn invariant_tensor_dims(v: &GradedDims, p: usize, convention: SignConvention) -> GradedDims {
    let top = p * v.len();
    // series[u][t]
    let mut series = vec![vec![0usize; top + 1]; p + 1];
    series[0][0] = 1;
    for d in 0..v.len() {
        let exterior = convention == SignConvention::Signed && d % 2 == 1;
        for _ in 0..v.get(d) {
            let mut next = vec![vec![0usize; top + 1]; p + 1];
            for u in 0..=p {
                for t in 0..=top {
                    let c = series[u][t];
                    if c == 0 {
                        continue;
                    }
                    let max_k = if exterior { 1 } else { p - u };
                    for k in 0..=max_k.min(p - u) {
                        next[u + k][t + d * k] += c;
                    }
                }
            }
            series = next;
        }
    }
    GradedDims::new(series.swap_remove(p))
}

/// The summand of `wreath_hh_dims` indexed by `λ`: the tensor product over `i` of the
/// invariants in `V^{⊗ m_i(λ)}`, where `m_i(λ)` is the multiplicity of `i` in `λ`.
pub fn wreath_term(v: &GradedDims, lambda: &Partition, convention: SignConvention) -> GradedDims {
    let mut acc = GradedDims::new(vec![1]);
    let largest = lambda.parts().first().copied().unwrap_or(0);
    for i in 1..=largest {
        let m = lambda.multiplicity(i);
        if m > 0 {
            acc = acc.tensor(&invariant_tensor_dims(v, m, convention));
        }
    }
    acc
}

/// Every partition of `w` with its summand.
pub fn wreath_terms(v: &GradedDims, w: usize, convention: SignConvention) -> Vec<(Partition, GradedDims)> {
    partitions(w)
        .into_iter()
        .map(|l| {
            let t = wreath_term(v, &l, convention);
            (l, t)
        })
        .collect()
}

/// `Σ_{λ ⊢ w} ⊗_i (V^{⊗ m_i(λ)})^{𝔖_{m_i(λ)}}` as graded dimensions.
pub fn wreath_hh_dims(v: &GradedDims, w: usize, convention: SignConvention) -> GradedDims {
    wreath_terms(v, w, convention)
        .into_iter()
        .fold(GradedDims::zero(), |acc, (_, t)| acc.add(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use SignConvention::*;

    #[test]
    fn squares_of_small_spaces() {
        let v = GradedDims::new(vec![1, 1]);
        assert_eq!(invariant_tensor_dims(&v, 2, Unsigned), GradedDims::new(vec![1, 1, 1]));
        assert_eq!(invariant_tensor_dims(&v, 2, Signed), GradedDims::new(vec![1, 1]));
        assert_eq!(invariant_tensor_dims(&v, 1, Signed), v);
        assert_eq!(invariant_tensor_dims(&v, 0, Signed), GradedDims::new(vec![1]));
    }

    #[test]
    fn even_spaces_ignore_signs() {
        let v = GradedDims::new(vec![2, 0, 3, 0, 1]);
        for p in 0..4 {
            assert_eq!(
                invariant_tensor_dims(&v, p, Unsigned),
                invariant_tensor_dims(&v, p, Signed)
            );
        }
    }

    #[test]
    fn wreath_of_one_copy() {
        let v = GradedDims::new(vec![2, 1, 1]);
        for c in SignConvention::ALL {
            assert_eq!(wreath_hh_dims(&v, 1, c), v);
            assert_eq!(wreath_hh_dims(&v, 2, c), invariant_tensor_dims(&v, 2, c).add(&v));
        }
    }
}
