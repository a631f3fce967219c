//! Path algebras of bound quivers, the family `A_e`, and heredity ideals.

mod bound;
mod element;
mod family;
mod finite;
mod heredity;
mod presentation;
mod quiver;

pub use bound::{all_paths, BoundQuiverAlgebra, Relation, MAX_PATH_LEN};
pub use element::AlgebraElement;
pub use family::{build_a_e, down_arrow, loop_index, path_index, semisimple, up_arrow};
pub use finite::{FiniteAlgebra, Quotient, TwoSidedIdeal};
pub use heredity::{heredity_chain_search, is_heredity_ideal, ChainStep, Condition, HeredityChain, HeredityVerdict};
pub use presentation::{AlgebraPresentation, BasisEntry, RelationTerm, StructureConstant, PRESENTATION_VERSION};
pub use quiver::{Arrow, Path, Quiver};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("arrow {arrow} uses vertex {vertex}, which is not in the quiver")]
    BadVertex { arrow: String, vertex: usize },
    #[error("duplicate arrow name {0}")]
    DuplicateArrow(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("empty arrow word")]
    EmptyWord,
    #[error("arrows do not compose: {0}")]
    NotComposable(String),
    #[error("unsupported relation {0} (only monomial and binomial relations among nontrivial paths)")]
    UnsupportedRelation(String),
    #[error("relation {0} mixes paths with different endpoints")]
    NotParallel(String),
    #[error("relations leave irreducible paths longer than {0}; the algebra is not finite-dimensional")]
    InfiniteDimensional(usize),
    #[error("A_e needs e >= 2, got {0}")]
    QuantumCharacteristic(usize),
    #[error("bad algebra presentation: {0}")]
    Presentation(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
