//! Classification of pure many-body states as simple or entangled, for
//! distinguishable subsystems and for bosonic, fermionic, and
//! parastatistical (Young-sector) exchange symmetry.
//!
//! The crate works with dense order-`k` tensors over `C^n` and provides:
//!
//! - tensor algebra with exchange-class tags ([`tensor`], [`symmetry`]);
//! - contraction against dual tensors and slot flattenings ([`contraction`]);
//! - the S-rank, the simplicity verdicts, and the tensor-square and
//!   quadratic entanglement tests ([`srank`]);
//! - Schmidt, symmetric (congruence), and antisymmetric (pairing)
//!   decompositions of two-particle states ([`decomp`]);
//! - exact Young symmetrizers and sector projectors ([`young`]);
//! - the channel–state correspondence for two-particle states
//!   ([`jamiolkowski`]);
//! - JSON interchange formats ([`json`]).
//!
//! Everything numerical is tolerance-aware: thresholds are relative to the
//! largest coefficient (or singular value), with
//! [`DEFAULT_EPSILON`](tensor::DEFAULT_EPSILON) `= 1e-9` as the default.

pub mod contraction;
pub mod decomp;
pub mod error;
pub mod exact;
pub mod jamiolkowski;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod perm;
pub mod srank;
pub mod symmetry;
pub mod tableau;
pub mod tensor;
pub mod young;

pub use error::{Error, Result};
pub use matrix::CMatrix;
pub use perm::Permutation;
pub use tableau::{Partition, YoungTableau};
pub use tensor::{SymmetryClass, Tensor, DEFAULT_EPSILON};
