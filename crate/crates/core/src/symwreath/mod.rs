//! Symmetric functions and wreath products: invariants of graded tensor powers, the
//! partition sum for `HH*(Γ^{⊗w} ⋊ k𝔖_w)`, and the map from `Λ_w` to truncated invariants.

mod sympoly;
mod tensor;
mod truncated;

pub use sympoly::{elementary_expanded, parse_generator, power_sum_in_e, Poly, SymPoly};
pub use tensor::{invariant_tensor_dims, wreath_hh_dims, wreath_term, wreath_terms, SignConvention};
pub use truncated::{
    kernel_generators, kernel_pi_report, lambda_basis, listed_generators, quotient_hilbert, KernelDegree,
    KernelPiReport, TruncatedInvariantRing,
};

use thiserror::Error;

use crate::graded::GradedDims;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("polynomials in {expected} and {found} variables cannot be combined")]
    WidthMismatch { expected: usize, found: usize },
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("cannot parse generator `{0}` (expected pK or eK)")]
    BadGenerator(String),
    #[error("unknown sign convention `{0}` (expected unsigned or signed)")]
    BadConvention(String),
    #[error("{0}")]
    BadParameters(String),
}

/// Graded dimensions of `(k[y_1..y_w]/⟨y_i^e⟩)^{𝔖_w}` in `y`-degree.
pub fn truncated_invariant_dims(e: usize, w: usize) -> GradedDims {
    TruncatedInvariantRing::new(e, w).dims()
}
