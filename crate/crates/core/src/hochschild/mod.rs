//! Hochschild cohomology of `A_e` from its bimodule resolution: dimensions, Yoneda products
//! and the ring presentation.

mod cochain;
mod monomial;
mod presentation;
mod yoneda;

pub use cochain::{Cochain, CochainComplex, CochainSpace};
pub use monomial::{even_part_hilbert, presented_even_ring, presented_ring, MonomialQuotient};
pub use presentation::{
    verify_ring_presentation, verify_ring_presentation_with, GeneratorRep, PresentationReport, RingCheck, TableCheck,
    TABLE_LIMIT,
};
pub use yoneda::{LiftStrategy, YonedaContext};

use thiserror::Error;

use crate::graded::GradedDims;
use crate::linalg::Field;
use crate::resolution::{ResolutionError, VerifiedResolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochschildError {
    #[error("cochain of degree {0} is not a cocycle")]
    NotCocycle(usize),
    #[error("lift equation has no solution at step {step}, generator {generator}")]
    LiftInconsistent { step: usize, generator: usize },
    #[error("HH^{0} is zero, so no generator can be chosen there")]
    MissingClass(usize),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// `dim HH^n(A_e)` for all `n`, over the field `K`.
pub fn hh_dims<K: Field>(e: usize) -> Result<GradedDims, HochschildError> {
    let res = VerifiedResolution::<K>::compute(e)?;
    Ok(CochainComplex::new(&res.algebra, &res.complex).hh_dims())
}
