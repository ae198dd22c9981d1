//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by tensor construction, algebra, and classification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An explicit coefficient entry used an index outside `1..=n` or had the
    /// wrong number of slots.
    #[error("index {index:?} out of range for order {k} over dimension {n}")]
    IndexOutOfRange {
        /// Offending multi-index (1-based, as supplied).
        index: Vec<usize>,
        /// Single-particle dimension.
        n: usize,
        /// Tensor order.
        k: usize,
    },

    /// The same multi-index appeared twice in an entry list.
    #[error("duplicate coefficient entry at index {index:?}")]
    DuplicateEntry {
        /// Offending multi-index (1-based).
        index: Vec<usize>,
    },

    /// A tensor was asserted to lie in a symmetry class whose invariant it
    /// violates beyond tolerance.
    #[error("tensor violates the {class} invariant (deviation {deviation:.3e} > tolerance {tolerance:.3e})")]
    SymmetryViolation {
        /// Name of the asserted class.
        class: String,
        /// Largest observed deviation from the class invariant.
        deviation: f64,
        /// Tolerance the deviation was measured against.
        tolerance: f64,
    },

    /// Two tensors that must share a single-particle dimension do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch {
        /// Dimension of the left operand.
        left: usize,
        /// Dimension of the right operand.
        right: usize,
    },

    /// Two tensors or a tensor/permutation pair disagree on order.
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch {
        /// Order of the left operand.
        left: usize,
        /// Order of the right operand (or the permutation's degree).
        right: usize,
    },

    /// An operation that enumerates a factorially or exponentially large set
    /// was asked to exceed its guard.
    #[error("{operation} is guarded to {limit} but was called with {requested}")]
    SizeGuardExceeded {
        /// Name of the guarded operation.
        operation: &'static str,
        /// Hard limit on the size parameter.
        limit: usize,
        /// Requested size parameter.
        requested: usize,
    },

    /// The zero tensor has no rank, no class verdict, and no decomposition.
    #[error("the zero tensor is not a valid input here")]
    ZeroTensor,

    /// An operation required a unit-norm input.
    #[error("input must have unit norm (got {norm})")]
    NotNormalized {
        /// Actual norm of the input.
        norm: f64,
    },

    /// The requested operation is not defined for the tensor's symmetry class.
    #[error("operation not supported for symmetry class {class}")]
    UnsupportedClass {
        /// Name of the offending class.
        class: String,
    },

    /// An operation restricted to 2-tensors received another order.
    #[error("operation requires order {expected}, got {got}")]
    WrongOrder {
        /// Required order.
        expected: usize,
        /// Actual order.
        got: usize,
    },

    /// A permutation image list was not a bijection on `1..=k`.
    #[error("invalid permutation images {images:?}")]
    InvalidPermutation {
        /// Offending image list (1-based).
        images: Vec<usize>,
    },

    /// A partition was empty, not weakly decreasing, or had a zero part.
    #[error("invalid partition {parts:?}")]
    InvalidPartition {
        /// Offending part list.
        parts: Vec<usize>,
    },

    /// A tableau numbering did not match its partition's shape or was not a
    /// bijection onto `1..=k`.
    #[error("invalid tableau numbering {rows:?} for partition {parts:?}")]
    InvalidTableau {
        /// Offending row numbering.
        rows: Vec<Vec<usize>>,
        /// Partition the numbering was checked against.
        parts: Vec<usize>,
    },

    /// The vectors handed to a highest-weight constructor were linearly
    /// dependent (their wedge vanishes).
    #[error("input vectors are linearly dependent")]
    DependentVectors,

    /// A tensor asserted to lie in an irreducible block fails the projector
    /// membership test.
    #[error("tensor is not in the requested irreducible block (deviation {deviation:.3e} > tolerance {tolerance:.3e})")]
    NotInIrreducible {
        /// Measured relative deviation `‖π(u) − u‖ / ‖u‖`.
        deviation: f64,
        /// Tolerance used for membership.
        tolerance: f64,
    },

    /// An iterative numerical kernel failed to converge.
    #[error("numerical iteration failed to converge: {context}")]
    NonConvergence {
        /// Human-readable origin of the failure.
        context: &'static str,
    },

    /// A serialized tensor, tableau, or report could not be parsed.
    #[error("parse error: {message}")]
    Parse {
        /// Explanation of the failure.
        message: String,
    },
}

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
