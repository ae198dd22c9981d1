//! The S-rank, simplicity verdicts, and the quadratic and tensor-square
//! entanglement tests.
//!
//! The **S-rank** of an order-`k` state is the largest rank among its slot
//! flattenings. A state is *simple* — a product of the kind its exchange
//! class allows — exactly when the S-rank hits the class minimum:
//!
//! | class          | simple means                    | minimal S-rank |
//! |----------------|---------------------------------|----------------|
//! | general        | `f₁ ⊗ … ⊗ f_k`                  | 1              |
//! | symmetric      | `f ∨ … ∨ f = f^{⊗k}`            | 1              |
//! | antisymmetric  | `f₁ ∧ … ∧ f_k`                  | `k`            |
//! | Young sector   | projected insertion of `r` rows | `r` (= rows)   |
//!
//! For symmetric and antisymmetric states every slot flattening has the
//! same rank, so slot 1 decides; general and Young-sector states need the
//! maximum over all slots.
//!
//! Two independent criteria cross-check the rank decision:
//!
//! - **quadratic criteria** — polynomial identities in the coefficients
//!   (Plücker-style for fermions); the first violated identity is returned
//!   as a [`Witness`];
//! - **tensor-square tests** — `u` is simple iff `u ⊗ u` is fixed by
//!   slot-pair swaps (general: all `σ_i`, bosonic: the last-slot swap), and
//!   a fermionic `w` is simple iff antisymmetrizing `k+1` slots of a
//!   reshuffled `w ⊗ w` kills it. The swap overlap
//!   `⟨u⊗u, σ(u⊗u)⟩ / ‖u‖⁴` is a real number in `[0, 1]` hitting 1 exactly
//!   on simple states.

use num_complex::Complex64;

use crate::contraction::contraction_matrix;
use crate::error::{Error, Result};
use crate::linalg::{matrix_rank, svd};
use crate::perm::Permutation;
use crate::tensor::{next_index, SymmetryClass, Tensor};

pub use crate::tensor::DEFAULT_EPSILON;

/// Guard on the number of coefficient products one quadratic-criterion
/// scan may touch.
pub const MAX_QUADRATIC_OPS: usize = 200_000_000;

/// A concrete violated identity certifying entanglement. Indices are
/// 1-based, matching the entry format.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Product identity `u^{i} u^{j} = u^{i'} u^{j'}` broken at slot
    /// `slot` (1-based), where `i'`, `j'` swap that slot's entries.
    Product {
        /// The slot whose exchange breaks the identity.
        slot: usize,
        /// First multi-index.
        i: Vec<usize>,
        /// Second multi-index.
        j: Vec<usize>,
        /// `u^{i} u^{j}`.
        lhs: Complex64,
        /// `u^{i'} u^{j'}` after the slot swap.
        rhs: Complex64,
    },
    /// Antisymmetrized product (Plücker-style) bracket that fails to
    /// vanish: `k+1` exchanged indices `i` and `k−1` spectator indices `j`.
    Bracket {
        /// The `k+1` antisymmetrized indices (strictly increasing).
        i: Vec<usize>,
        /// The `k−1` spectator indices.
        j: Vec<usize>,
        /// The bracket value (zero exactly on simple states).
        value: Complex64,
    },
}

/// The full classification of one state.
#[derive(Debug, Clone)]
pub struct Verdict {
    /// Largest slot-flattening rank.
    pub s_rank: usize,
    /// The smallest S-rank any state of this class can have.
    pub minimal_rank: usize,
    /// Whether the state is simple (`s_rank == minimal_rank`).
    pub simple: bool,
    /// A violated quadratic identity, when one exists and the class has a
    /// quadratic criterion.
    pub witness: Option<Witness>,
    /// Tensor-square swap overlap in `[0, 1]` of the normalized state
    /// (general and symmetric classes; 1 exactly on simple states).
    pub score: Option<f64>,
}

/// Rank of the slot-`s` flattening (0-based slot).
pub fn slot_rank(u: &Tensor, slot: usize, eps: f64) -> Result<usize> {
    matrix_rank(&contraction_matrix(u, slot)?, eps)
}

/// The S-rank: the maximum flattening rank over the slots the class
/// requires (slot 1 suffices for symmetric/antisymmetric states; all
/// slots otherwise).
pub fn s_rank(u: &Tensor, eps: f64) -> Result<usize> {
    if u.k() == 0 {
        return Err(Error::WrongOrder {
            expected: 1,
            got: 0,
        });
    }
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    match u.symmetry() {
        SymmetryClass::Symmetric | SymmetryClass::Antisymmetric => slot_rank(u, 0, eps),
        SymmetryClass::General | SymmetryClass::Young(_) => {
            let mut best = 0;
            for slot in 0..u.k() {
                best = best.max(slot_rank(u, slot, eps)?);
            }
            Ok(best)
        }
    }
}

/// The smallest S-rank attainable in the state's exchange class.
pub fn minimal_s_rank(u: &Tensor) -> usize {
    match u.symmetry() {
        SymmetryClass::General | SymmetryClass::Symmetric => 1,
        SymmetryClass::Antisymmetric => u.k(),
        SymmetryClass::Young(t) => t.partition().rows(),
    }
}

/// Classifies a state as simple or entangled.
pub fn is_simple(u: &Tensor, eps: f64) -> Result<Verdict> {
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let rank = s_rank(u, eps)?;
    let minimal = minimal_s_rank(u);
    let simple = rank == minimal;
    let witness = if simple {
        None
    } else {
        quadratic_witness(u, eps).ok().flatten()
    };
    let score = match u.symmetry() {
        SymmetryClass::General | SymmetryClass::Symmetric => u
            .normalized()
            .and_then(|unit| overlap_score(&unit, eps))
            .ok(),
        _ => None,
    };
    Ok(Verdict {
        s_rank: rank,
        minimal_rank: minimal,
        simple,
        witness,
        score,
    })
}

/// Builds `u ⊗ u` and the swap `σ_s` exchanging slot `s` (0-based) of the
/// two copies.
fn tensor_square(u: &Tensor) -> Result<Tensor> {
    u.tensor_product(u)
}

fn factor_swap(k: usize, slot: usize) -> Permutation {
    Permutation::transposition(2 * k, slot, k + slot)
}

/// Tensor-square simplicity test. General states must be fixed by every
/// slot-pair swap, symmetric states by the last-slot swap; antisymmetric
/// states must be killed by antisymmetrizing `k+1` slots of the reshuffled
/// square. Deviations are measured against `eps · ‖u‖²`.
pub fn tensor_square_test(u: &Tensor, eps: f64) -> Result<bool> {
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let k = u.k();
    let scale = u.norm_sqr();
    match u.symmetry() {
        SymmetryClass::General => {
            let square = tensor_square(u)?;
            for slot in 0..k {
                let swapped = square.permute(&factor_swap(k, slot))?;
                if square.distance(&swapped)? > eps * scale {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        SymmetryClass::Symmetric => {
            let square = tensor_square(u)?;
            let swapped = square.permute(&factor_swap(k, k - 1))?;
            Ok(square.distance(&swapped)? <= eps * scale)
        }
        SymmetryClass::Antisymmetric => {
            Ok(antisymmetric_square_defect(u)? <= eps * scale)
        }
        SymmetryClass::Young(_) => Err(Error::UnsupportedClass {
            class: "young".to_string(),
        }),
    }
}

/// Norm of `(Alt_{k+1} ⊗ id_{k−1})(τ_k(w ⊗ w))`, the fermionic
/// tensor-square obstruction (zero exactly on simple states).
///
/// `τ_k` reshuffles the `2k` slots of `w ⊗ w` by sending the content of
/// slot `2k` to slot `1` and shifting slots `1..2k−1` up, so the first
/// `k+1` slots afterwards hold one full copy of `w` plus one extra slot.
pub fn antisymmetric_square_defect(w: &Tensor) -> Result<f64> {
    let k = w.k();
    if k == 0 {
        return Err(Error::WrongOrder {
            expected: 1,
            got: 0,
        });
    }
    let square = tensor_square(w)?;
    let mut images = vec![0usize; 2 * k];
    images[0] = 2 * k - 1;
    for p in 1..2 * k {
        images[p] = p - 1;
    }
    let tau = Permutation::from_zero_based(&images)?;
    let shuffled = square.permute(&tau)?;
    // Antisymmetrize the first k+1 slots (identity on the rest).
    let small = Permutation::all(k + 1)?;
    let mut acc = Tensor::zero(w.n(), 2 * k)?;
    for pi in &small {
        let mut ext = vec![0usize; 2 * k];
        for p in 0..k + 1 {
            ext[p] = pi.image(p);
        }
        for (p, e) in ext.iter_mut().enumerate().skip(k + 1) {
            *e = p;
        }
        let g = Permutation::from_zero_based(&ext)?;
        let sign = pi.sign() as f64;
        acc = acc.add(&shuffled.permute(&g)?.scale(Complex64::new(sign, 0.0)))?;
    }
    let fact: f64 = (1..=k + 1).map(|i| i as f64).product();
    Ok(acc.norm() / fact)
}

/// Swap overlap `min_s Re⟨u⊗u, σ_s(u⊗u)⟩` (general class) or the
/// last-slot overlap (symmetric class) of a **unit-normalized** state: a
/// number in `[0, 1]` equal to 1 exactly on simple states.
pub fn overlap_score(u: &Tensor, eps: f64) -> Result<f64> {
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let norm = u.norm();
    if (norm - 1.0).abs() > eps {
        return Err(Error::NotNormalized { norm });
    }
    let k = u.k();
    let norm4 = u.norm_sqr() * u.norm_sqr();
    let square = tensor_square(u)?;
    let slot_value = |slot: usize| -> Result<f64> {
        let swapped = square.permute(&factor_swap(k, slot))?;
        Ok(square.inner_product(&swapped)?.re / norm4)
    };
    match u.symmetry() {
        SymmetryClass::General => {
            let mut worst = f64::INFINITY;
            for slot in 0..k {
                worst = worst.min(slot_value(slot)?);
            }
            Ok(worst)
        }
        SymmetryClass::Symmetric => slot_value(k - 1),
        other => Err(Error::UnsupportedClass {
            class: other.name().to_string(),
        }),
    }
}

/// Finds the lexicographically first violated quadratic identity, or
/// `None` when every identity holds to `eps · max|coeff|²`.
///
/// Scan order: general states try slots `1, …, k` in order, then the two
/// multi-indices in lexicographic order; symmetric states use the last
/// slot only; antisymmetric states scan strictly increasing `(k+1)`-tuples
/// and then spectator indices lexicographically.
pub fn quadratic_witness(u: &Tensor, eps: f64) -> Result<Option<Witness>> {
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let tol = eps * u.max_abs_coeff() * u.max_abs_coeff();
    match u.symmetry() {
        SymmetryClass::General => {
            guard_products(u, u.k())?;
            for slot in 0..u.k() {
                if let Some(w) = product_witness_at_slot(u, slot, tol) {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        }
        SymmetryClass::Symmetric => {
            guard_products(u, 1)?;
            Ok(product_witness_at_slot(u, u.k() - 1, tol))
        }
        SymmetryClass::Antisymmetric => bracket_witness(u, tol),
        SymmetryClass::Young(_) => Err(Error::UnsupportedClass {
            class: "young".to_string(),
        }),
    }
}

fn guard_products(u: &Tensor, slots: usize) -> Result<()> {
    let pairs = u.coeffs().len().saturating_mul(u.coeffs().len());
    let total = pairs.saturating_mul(slots);
    if total > MAX_QUADRATIC_OPS {
        return Err(Error::SizeGuardExceeded {
            operation: "quadratic criterion scan",
            limit: MAX_QUADRATIC_OPS,
            requested: total,
        });
    }
    Ok(())
}

fn product_witness_at_slot(u: &Tensor, slot: usize, tol: f64) -> Option<Witness> {
    let n = u.n();
    let k = u.k();
    let mut i = vec![0usize; k];
    loop {
        let ci = u.coeff(&i);
        let mut j = vec![0usize; k];
        loop {
            if i[slot] != j[slot] {
                let lhs = ci * u.coeff(&j);
                let mut i_swapped = i.clone();
                let mut j_swapped = j.clone();
                i_swapped[slot] = j[slot];
                j_swapped[slot] = i[slot];
                let rhs = u.coeff(&i_swapped) * u.coeff(&j_swapped);
                if (lhs - rhs).norm() > tol {
                    return Some(Witness::Product {
                        slot: slot + 1,
                        i: i.iter().map(|&x| x + 1).collect(),
                        j: j.iter().map(|&x| x + 1).collect(),
                        lhs,
                        rhs,
                    });
                }
            }
            if !next_index(&mut j, n) {
                break;
            }
        }
        if !next_index(&mut i, n) {
            break;
        }
    }
    None
}

fn bracket_witness(u: &Tensor, tol: f64) -> Result<Option<Witness>> {
    let n = u.n();
    let k = u.k();
    if k + 1 > n {
        // Fewer than k+1 distinct values: every bracket vanishes
        // identically, and indeed every antisymmetric state with n = k is
        // simple.
        return Ok(None);
    }
    let perms = Permutation::all(k + 1)?;
    let fact: f64 = (1..=k + 1).map(|i| i as f64).product();
    let cost = crate::symmetry::binomial(n, k + 1)
        .saturating_mul(u.coeffs().len() / n)
        .saturating_mul(perms.len());
    if cost > MAX_QUADRATIC_OPS {
        return Err(Error::SizeGuardExceeded {
            operation: "quadratic criterion scan",
            limit: MAX_QUADRATIC_OPS,
            requested: cost,
        });
    }
    // Strictly increasing (k+1)-tuples: each orbit of exchanged indices is
    // visited once, at its lexicographically least representative.
    let mut combo: Vec<usize> = (0..k + 1).collect();
    loop {
        let mut j = vec![0usize; k - 1];
        loop {
            let mut value = Complex64::new(0.0, 0.0);
            let mut head = vec![0usize; k];
            let mut tail = vec![0usize; k];
            for pi in &perms {
                for (p, h) in head.iter_mut().enumerate() {
                    *h = combo[pi.image(p)];
                }
                tail[0] = combo[pi.image(k)];
                tail[1..].copy_from_slice(&j);
                let sign = pi.sign() as f64;
                value += sign * u.coeff(&head) * u.coeff(&tail);
            }
            value /= fact;
            if value.norm() > tol {
                return Ok(Some(Witness::Bracket {
                    i: combo.iter().map(|&x| x + 1).collect(),
                    j: j.iter().map(|&x| x + 1).collect(),
                    value,
                }));
            }
            if !next_index(&mut j, n) {
                break;
            }
        }
        if !next_combination(&mut combo, n) {
            break;
        }
    }
    Ok(None)
}

/// Advances a strictly increasing tuple over `{0,…,n−1}`; `false` at the
/// end.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut slot = k;
    while slot > 0 {
        slot -= 1;
        // After incrementing, the tail combo[slot..] must still fit below n.
        if combo[slot] + (k - slot) <= n - 1 {
            combo[slot] += 1;
            for p in slot + 1..k {
                combo[p] = combo[p - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Schmidt-style coefficients of an order-2 state: the singular values of
/// its coefficient matrix (descending). Their count above the threshold is
/// the S-rank.
pub fn schmidt_values(u: &Tensor) -> Result<Vec<f64>> {
    Ok(svd(&crate::decomp::coefficient_matrix(u)?)?.values)
}
