//! Exact computational tools for affine type-A representation theory.
//!
//! The crate is organized around five subsystems:
//!
//! * [`cartan`] — weight and root lattices of `sl_{n+1}`, exact pairings and
//!   the parity decomposition `mu = 2 nu + lambda`.
//! * [`affine`] — affine weights, simple reflections, lattice translations,
//!   orbit straightening and the simultaneous-dominance splitting word.
//! * [`loopweights`] — loop weights (Drinfeld data) with spectral parameters
//!   in `q^Z`, irreducibility/socle criteria and the height-function quiver
//!   correspondence.
//! * [`characters`] — classical characters by Freudenthal's recursion and
//!   graded Demazure characters by Demazure operators.
//! * [`engine`] — generators-and-relations construction of cyclic graded
//!   modules over truncated current algebras, by PBW straightening and exact
//!   rational elimination.
//!
//! All arithmetic is exact; there is no floating point anywhere in the crate.

pub mod affine;
pub mod cartan;
pub mod characters;
pub mod engine;
pub mod loopweights;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("weight has a coordinate > 1 or < 0, not in P^+(1): {0:?}")]
    NotInP1(Vec<i64>),
    #[error("loop weight is not in P^+_Z(1)")]
    LoopWeightNotInP1,
    #[error("loop weight is not in the expected orientation")]
    WrongOrientation,
    #[error("invalid height function: steps must have absolute value 1")]
    InvalidHeightFunction,
    #[error("subset of nodes must be a nonempty interval")]
    InvalidNodeInterval,
    #[error("level must be >= 1, got {0}")]
    NonPositiveLevel(i64),
    #[error("operation requires rank 1, got rank {0}")]
    RankOneOnly(usize),
    #[error("weight-height cutoff {0} too small: nonzero dimension on the boundary")]
    BoundTooSmall(usize),
    #[error("truncation order {0} unstable: dimensions change at order {1}")]
    TruncationUnstable(usize, usize),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
