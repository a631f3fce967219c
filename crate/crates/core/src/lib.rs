//! Exact computations for the basic algebras `A_e` of weight-one q-Schur blocks: a
//! minimal projective bimodule resolution, Hochschild cohomology with its Yoneda ring
//! structure, invariants of wreath products `A_e wr S_w`, and abacus combinatorics for
//! labelling the blocks themselves.

pub mod algebra;
pub mod blockcomb;
pub mod cli;
pub mod graded;
pub mod hochschild;
pub mod linalg;
pub mod partition;
pub mod resolution;
pub mod symwreath;

pub use graded::GradedDims;
pub use partition::{partitions, Partition};
