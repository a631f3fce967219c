//! Exact linear algebra over the rationals and small prime fields.
//!
//! Elimination is pivoted on the first nonzero column of each row in insertion order,
//! so every rank, kernel basis and solution is reproducible across runs.

mod echelon;
mod field;
mod matrix;

pub use echelon::{kernel_basis, rank, solve, solve_sparse, Echelon};
pub use field::{Field, FieldDescriptor, Fp, Rational, ScalarParts, SUPPORTED_PRIMES};
pub use matrix::{add_scaled, collect_sparse, scale, to_dense, to_sparse, Matrix, SparseVec};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime field F{0} is not compiled in (supported: 2..31)")]
    UnsupportedPrime(u64),
    #[error("cannot parse field `{0}` (expected `rational` or a prime)")]
    BadFieldSpec(String),
    #[error("scalar {0} does not fit in 64-bit parts")]
    ScalarOverflow(String),
    #[error("bad scalar: {0}")]
    BadScalar(String),
}
