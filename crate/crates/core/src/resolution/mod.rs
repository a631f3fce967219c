//! Projective bimodule resolutions of `A_e`: the closed-form one, a from-scratch minimal
//! one used as an oracle, and exact verification of both.

mod bimodule;
mod cache;
mod generic;
mod paper;
mod verify;

pub use bimodule::{Augmentation, BimoduleBasis, BimoduleComplex, BimoduleElement, BimoduleMap, FreeBimodule};
pub use cache::{CachedDegree, MatrixEntry, ResolutionCache, VerifiedResolution, CACHE_VERSION};
pub use generic::{ext_simple_dims, generic_minimal_resolution, simple_resolution};
pub use paper::{
    paper_augmentation, paper_complex, paper_differential, paper_domain, paper_resolution, paper_resolution_term,
    search_repairs, CandidateOutcome, DiagonalStart, RepairChoice, RepairSearch, ShortBranch, CALIBRATION_SIZES,
    TOKEN_FIXES,
};
pub use verify::{verify_complex, Check, DegreeStats, VerificationReport};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("d_{degree} produces a term in generator {generator:?}, which is not in the target")]
    TermOutsideTarget { degree: usize, generator: (usize, usize) },
    #[error("no reading of the closed formulas gives a verified resolution for e = {0}")]
    NoRepair(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("bad resolution cache: {0}")]
    Cache(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
