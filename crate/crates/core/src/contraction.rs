//! Contraction of states against dual tensors, and slot flattenings.
//!
//! A dual tensor `μ` of order `l` pairs with the first `l` slots of an
//! order-`k` state `u` and leaves an order-`k−l` tensor:
//!
//! `(ι_μ u)^{j₁…j_{k−l}} = Σ_{i₁…i_l} conj(μ^{i₁…i_l}) · u^{i₁…i_l j₁…j_{k−l}}`.
//!
//! The conjugate realizes the anti-linear identification of kets with
//! duals, so `ι_μ` is linear in `u` and anti-linear in `μ`. Contracting a
//! bosonic or fermionic state in its leading slots leaves the remaining
//! slots in the same sector, so those tags survive.
//!
//! The order-1 duals organize into the *slot flattening*: for a chosen slot
//! `s`, [`contraction_matrix`] arranges `u` as an `n^{k−1} × n` matrix whose
//! column space is spanned by all single-slot contractions into slot `s`.
//! Its rank is the slot rank used by the S-rank.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::tensor::{next_index, SymmetryClass, Tensor};

/// A dual (bra) tensor: stored with ket coefficients and conjugated by the
/// pairing.
#[derive(Debug, Clone, PartialEq)]
pub struct DualTensor(Tensor);

impl DualTensor {
    /// Wraps a ket tensor as the dual `⟨μ|`.
    pub fn new(t: Tensor) -> Self {
        DualTensor(t)
    }

    /// The underlying ket coefficients.
    pub fn tensor(&self) -> &Tensor {
        &self.0
    }

    /// Contracts this dual against the first `order` slots of `u`.
    pub fn contract(&self, u: &Tensor) -> Result<Tensor> {
        contract(self, u)
    }
}

/// Contraction `ι_μ u` of the first `l = μ.k()` slots of `u`.
pub fn contract(mu: &DualTensor, u: &Tensor) -> Result<Tensor> {
    let m = mu.tensor();
    if m.n() != u.n() {
        return Err(Error::DimensionMismatch {
            left: m.n(),
            right: u.n(),
        });
    }
    let l = m.k();
    if l > u.k() {
        return Err(Error::OrderMismatch {
            left: u.k(),
            right: l,
        });
    }
    let rest = u.k() - l;
    let mut out = Tensor::zero(u.n(), rest)?;
    let tail_len = out.coeffs().len();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); tail_len];
    for (head, w) in m.coeffs().iter().enumerate() {
        if w.re == 0.0 && w.im == 0.0 {
            continue;
        }
        let weight = w.conj();
        let base = head * tail_len;
        for (tail, c) in coeffs.iter_mut().enumerate() {
            *c += weight * u.coeffs()[base + tail];
        }
    }
    out = Tensor::from_coeffs(u.n(), rest, coeffs)?;
    // Bosonic/fermionic invariance in the surviving slots is inherited.
    let tag = match u.symmetry() {
        SymmetryClass::Symmetric if rest >= 2 => Some(SymmetryClass::Symmetric),
        SymmetryClass::Antisymmetric if rest >= 2 => Some(SymmetryClass::Antisymmetric),
        _ => None,
    };
    match tag {
        Some(class) => out.into_class(class, crate::tensor::DEFAULT_EPSILON),
        None => Ok(out),
    }
}

/// The slot-`s` flattening (0-based slot): an `n^{k−1} × n` matrix with
/// `M[I, j] = u` at the multi-index whose slot `s` holds `j` and whose
/// remaining slots, in their original order, spell `I`.
pub fn contraction_matrix(u: &Tensor, slot: usize) -> Result<CMatrix> {
    let k = u.k();
    let n = u.n();
    if slot >= k {
        return Err(Error::IndexOutOfRange {
            index: vec![slot + 1],
            n: k,
            k: 1,
        });
    }
    if k == 0 {
        return Err(Error::WrongOrder {
            expected: 1,
            got: 0,
        });
    }
    let rows = u.coeffs().len() / n;
    let mut m = CMatrix::zeros(rows, n);
    let mut idx = vec![0usize; k];
    let mut full = vec![0usize; k];
    // `idx` spells (I, j): first k−1 positions are the retained slots in
    // order, the last position is the slot-`s` value.
    loop {
        let mut p = 0;
        for s in 0..k {
            if s == slot {
                full[s] = idx[k - 1];
            } else {
                full[s] = idx[p];
                p += 1;
            }
        }
        let mut row = 0usize;
        for &i in idx.iter().take(k - 1) {
            row = row * n + i;
        }
        m.set(row, idx[k - 1], u.coeff(&full));
        if !next_index(&mut idx, n) {
            break;
        }
    }
    Ok(m)
}

/// Contracts a single 0-based slot of `u` with a dual vector, keeping the
/// remaining slots in order.
pub fn contract_slot(u: &Tensor, slot: usize, dual: &[Complex64]) -> Result<Tensor> {
    let n = u.n();
    if dual.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: dual.len(),
        });
    }
    let k = u.k();
    if slot >= k {
        return Err(Error::IndexOutOfRange {
            index: vec![slot + 1],
            n: k,
            k: 1,
        });
    }
    let mut out = Tensor::zero(n, k - 1)?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); out.coeffs().len()];
    let mut idx = vec![0usize; k];
    let mut kept = vec![0usize; k.saturating_sub(1)];
    loop {
        let mut p = 0;
        for s in 0..k {
            if s != slot {
                kept[p] = idx[s];
                p += 1;
            }
        }
        let mut off = 0usize;
        for &i in &kept {
            off = off * n + i;
        }
        coeffs[off] += dual[idx[slot]].conj() * u.coeff(&idx);
        if !next_index(&mut idx, n) {
            break;
        }
    }
    out = Tensor::from_coeffs(n, k.saturating_sub(1), coeffs)?;
    Ok(out)
}
