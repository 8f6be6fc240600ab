//! Error and diagnostic types shared across the library.

use crate::linalg::Vector;
use crate::scalar::{Field, Scalar};
use thiserror::Error;

/// Errors reported by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("count cap mismatch: {0} vs {1}")]
    OmegaMismatch(u32, u32),
    #[error("multisets live over different universes")]
    UniverseMismatch,
    #[error("count {count} exceeds the cap {omega}")]
    CountAboveOmega { count: u32, omega: u32 },
    #[error("level {0} is out of range")]
    LevelOutOfRange(u32),
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
    #[error("the given vectors are not a basis of the ambient space")]
    NotABasis,
    #[error("basis count range differs from the space's count range")]
    CountRangeMismatch,
    #[error("stored counts disagree with the space")]
    CertificateMismatch,
    #[error("subspace already covers the whole ambient space")]
    FullSpace,
    #[error("operation is only available over the rationals")]
    RationalOnly,
    #[error("operation is only available over a prime field")]
    PrimeFieldOnly,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("enumeration budget exceeded: {0} elements")]
    BudgetExceeded(u64),
    #[error("coefficient enumeration window requires fewer vectors than field elements: {len} vectors over GF({p})")]
    EnumerationWindow { len: usize, p: u64 },
    #[error("zero-vector dominance fails: one space's nonzero counts exceed the other's count at the zero vector")]
    DominanceFails,
    #[error("invalid level chain: {0}")]
    InvalidChain(#[from] Violation),
    #[error("not closed under the space operations: {0}")]
    NotClosed(#[from] Defect),
}

/// The first clause a candidate level chain violates.
///
/// A valid chain has `omega >= 1`, strictly decreasing counts in
/// `1..=omega`, and strictly nested levels that all share the ambient
/// space and field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("the count cap must be at least 1")]
    OmegaZero,
    #[error("chain level {position} has ambient dimension {got}, expected {expected}")]
    LevelDimension {
        position: usize,
        expected: usize,
        got: usize,
    },
    #[error("chain level {position} is over {got}, expected {expected}")]
    LevelField {
        position: usize,
        expected: Field,
        got: Field,
    },
    #[error("count at chain position {position} is zero; counts must be at least 1")]
    ZeroCount { position: usize },
    #[error("count {count} at chain position {position} exceeds the cap {omega}")]
    CountAboveOmega {
        position: usize,
        count: u32,
        omega: u32,
    },
    #[error("counts are not strictly decreasing at chain position {position}")]
    CountsNotStrictlyDecreasing { position: usize },
    #[error("levels are not strictly nested at chain position {position}")]
    NotStrictlyNested { position: usize },
}

/// A witness that a count function is not closed under the vector space
/// operations, or that one of its level sets fails to be a subspace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Defect {
    #[error("count({x} + {y}) < min(count({x}), count({y}))")]
    Addition { x: Vector, y: Vector },
    #[error("count({lambda}*{x}) < count({x})")]
    Scaling { lambda: Scalar, x: Vector },
    #[error("the set of elements with count >= {count} is not a subspace")]
    LevelNotSubspace { count: u32 },
}
