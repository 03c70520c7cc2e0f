//! Exact-arithmetic workbench for reverse lexicographic generic initial
//! ideals of powers of homogeneous ideals.
//!
//! The pipeline runs from a list of homogeneous generators to the generic
//! initial ideals `gin(I^n)` of the powers of the ideal they generate, and
//! from there to the combinatorial invariants of those monomial ideals:
//! staircases, pure powers, Hilbert functions, Artinian lengths, Newton
//! polyhedra, complement volumes, and multiplier ideals.  For complete
//! intersections the `verify` module checks every computed quantity against
//! the closed-form predictions for the asymptotic behavior of the system
//! `{gin(I^n)}_n`.
//!
//! All arithmetic is exact: arbitrary-precision rationals by default, with
//! an odd-prime-field mode as a fast heuristic (results over `F_p` should be
//! replicated over `Q` before being trusted; the report machinery does this).

pub mod asymptotics;
pub mod cache;
pub mod coeff;
pub mod gin;
pub mod groebner;
pub mod ideal_file;
pub mod parse;
pub mod poly;
pub mod polytope;
pub mod staircase;
pub mod verify;

pub use coeff::{Coeff, FieldMode};
pub use poly::{CoordinateChange, Monomial, Polynomial, RingSpec};
pub use staircase::MonomialIdeal;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("line {line}, column {col}: {msg}")]
    IdealFile { line: usize, col: usize, msg: String },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ideal power requires n >= 1")]
    ZeroPower,
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("all generators are zero")]
    AllZero,
    #[error("could not sample an invertible coordinate change after {0} attempts")]
    SamplingFailed(usize),
    #[error("initial ideals of independent samples disagree after {rounds} rounds; differing generators: {diff}")]
    GinDisagreement { rounds: usize, diff: String },
    #[error("graded-system containment gin(I^{i})*gin(I^{j}) ⊆ gin(I^{k}) failed")]
    GradedContainment { i: u32, j: u32, k: u32 },
    #[error("ideal is not strongly stable (witness generator {0})")]
    NotStronglyStable(String),
    #[error("ideal is not zero-dimensional: no pure power of variable {0}")]
    NotZeroDimensional(String),
    #[error("zero ideal has no Newton polyhedron")]
    ZeroIdeal,
    #[error("dimension {0} exceeds the exact-geometry cap of {1}")]
    DimensionCap(usize, usize),
    #[error("complement of the polyhedron is unbounded in direction of variable {0}")]
    UnboundedComplement(usize),
    #[error("scale factor must be positive")]
    NonPositiveScale,
    #[error("expected {expected} points of dimension {expected}, got {got}")]
    SimplexShape { expected: usize, got: usize },
    #[error("degree bound {0} too small: no multiplier-ideal generator found below it")]
    BoundTooSmall(u32),
    #[error("complete-intersection type requires ambient = r, got r = {r}, m = {m}")]
    AmbientMismatch { r: usize, m: usize },
    #[error("invalid complete-intersection type: {0}")]
    InvalidType(String),
    #[error("gin sequence has no entry for n = {0}")]
    MissingEntry(u32),
    #[error("could not certify a regular sequence after {0} attempts")]
    RegularityFailed(usize),
    #[error("declared type is required for verification")]
    MissingType,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("cache entry is corrupt: {0}")]
    CacheCorrupt(String),
}

pub type Result<T> = std::result::Result<T, Error>;
