//! Symmetrization, exterior/symmetric products, and the induced bases of the
//! bosonic and fermionic sectors.
//!
//! The (anti)symmetrizer is the group average
//! `Sym±(u) = (1/k!) Σ_{σ∈S_k} (±1)^σ U_σ u`, an orthogonal projector. The
//! products are its images of simple tensors:
//!
//! - `f₁ ∨ … ∨ f_k = Sym(f₁⊗…⊗f_k)`, so `f∨g = (f⊗g + g⊗f)/2`;
//! - `f₁ ∧ … ∧ f_k = Sym−(f₁⊗…⊗f_k)`, so `f∧g = (f⊗g − g⊗f)/2`.
//!
//! Under the product-basis Hermitian structure these satisfy
//! `⟨f₁∨…∨f_k | g₁∨…∨g_k⟩ = per(⟨fᵢ|gⱼ⟩)/k!` and
//! `⟨f₁∧…∧f_k | g₁∧…∧g_k⟩ = det(⟨fᵢ|gⱼ⟩)/k!`; in particular
//! `‖e₁∨e₂‖² = ‖e₁∧e₂‖² = 1/2`. The permanent uses Ryser's inclusion–
//! exclusion formula and is guarded to small matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::perm::Permutation;
use crate::tensor::{SymmetryClass, Tensor};

/// Largest matrix size accepted by [`permanent`] (Ryser is `O(2^m · m)`).
pub const MAX_PERMANENT_SIZE: usize = 12;

/// Projects onto the symmetric sector: `(1/k!) Σ_σ U_σ u`.
pub fn symmetrize(u: &Tensor) -> Result<Tensor> {
    group_average(u, false)
}

/// Projects onto the antisymmetric sector: `(1/k!) Σ_σ (−1)^σ U_σ u`.
pub fn antisymmetrize(u: &Tensor) -> Result<Tensor> {
    group_average(u, true)
}

fn group_average(u: &Tensor, signed: bool) -> Result<Tensor> {
    let k = u.k();
    let perms = Permutation::all(k)?;
    let mut acc = Tensor::zero(u.n(), k)?;
    for g in &perms {
        let term = u.permute(g)?;
        let coeff = if signed && g.sign() < 0 { -1.0 } else { 1.0 };
        acc = acc.add(&term.scale(Complex64::new(coeff, 0.0)))?;
    }
    let averaged = acc.scale(Complex64::new(1.0 / factorial(k), 0.0));
    let class = if signed {
        SymmetryClass::Antisymmetric
    } else {
        SymmetryClass::Symmetric
    };
    // The image of the projector satisfies the invariant exactly up to
    // rounding; re-tag with the working tolerance.
    averaged.into_class(class, crate::tensor::DEFAULT_EPSILON)
}

/// Symmetric product `f₁ ∨ … ∨ f_k` of vectors of a common dimension.
pub fn vee(vectors: &[Vec<Complex64>]) -> Result<Tensor> {
    symmetrize(&Tensor::simple(vectors)?)
}

/// Exterior product `f₁ ∧ … ∧ f_k` of vectors of a common dimension.
pub fn wedge(vectors: &[Vec<Complex64>]) -> Result<Tensor> {
    antisymmetrize(&Tensor::simple(vectors)?)
}

/// Permanent of a square matrix by Ryser's formula,
/// `per(A) = (−1)^m Σ_{∅≠S⊆[m]} (−1)^{|S|} Π_i Σ_{j∈S} a_{ij}`.
pub fn permanent(m: &CMatrix) -> Result<Complex64> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch {
            left: m.rows(),
            right: m.cols(),
        });
    }
    let size = m.rows();
    if size == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if size > MAX_PERMANENT_SIZE {
        return Err(Error::SizeGuardExceeded {
            operation: "permanent",
            limit: MAX_PERMANENT_SIZE,
            requested: size,
        });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for subset in 1u32..(1u32 << size) {
        let mut product = Complex64::new(1.0, 0.0);
        for i in 0..size {
            let mut row_sum = Complex64::new(0.0, 0.0);
            for j in 0..size {
                if subset & (1 << j) != 0 {
                    row_sum += m.get(i, j);
                }
            }
            product *= row_sum;
        }
        let popcount = subset.count_ones() as usize;
        if (size - popcount) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    Ok(total)
}

/// Determinant of a square matrix by LU elimination with partial pivoting.
pub fn determinant(m: &CMatrix) -> Result<Complex64> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch {
            left: m.rows(),
            right: m.cols(),
        });
    }
    let size = m.rows();
    if size == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..size {
        let mut pivot = col;
        let mut best = a.get(col, col).norm();
        for row in col + 1..size {
            let mag = a.get(row, col).norm();
            if mag > best {
                best = mag;
                pivot = row;
            }
        }
        if best == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if pivot != col {
            for j in 0..size {
                let tmp = a.get(col, j);
                a.set(col, j, a.get(pivot, j));
                a.set(pivot, j, tmp);
            }
            det = -det;
        }
        let diag = a.get(col, col);
        det *= diag;
        for row in col + 1..size {
            let factor = a.get(row, col) / diag;
            for j in col..size {
                let val = a.get(row, j) - factor * a.get(col, j);
                a.set(row, j, val);
            }
        }
    }
    Ok(det)
}

/// Gram matrix `G[i][j] = ⟨fᵢ|gⱼ⟩` of two vector families.
pub fn gram(fs: &[Vec<Complex64>], gs: &[Vec<Complex64>]) -> Result<CMatrix> {
    let mut g = CMatrix::zeros(fs.len(), gs.len());
    for (i, f) in fs.iter().enumerate() {
        for (j, h) in gs.iter().enumerate() {
            if f.len() != h.len() {
                return Err(Error::DimensionMismatch {
                    left: f.len(),
                    right: h.len(),
                });
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, b) in f.iter().zip(h) {
                acc += a.conj() * b;
            }
            g.set(i, j, acc);
        }
    }
    Ok(g)
}

/// `⟨f₁∨…∨f_k | g₁∨…∨g_k⟩ = per(⟨fᵢ|gⱼ⟩)/k!`.
pub fn sym_inner(fs: &[Vec<Complex64>], gs: &[Vec<Complex64>]) -> Result<Complex64> {
    if fs.len() != gs.len() {
        return Err(Error::OrderMismatch {
            left: fs.len(),
            right: gs.len(),
        });
    }
    Ok(permanent(&gram(fs, gs)?)? / factorial(fs.len()))
}

/// `⟨f₁∧…∧f_k | g₁∧…∧g_k⟩ = det(⟨fᵢ|gⱼ⟩)/k!`.
pub fn antisym_inner(fs: &[Vec<Complex64>], gs: &[Vec<Complex64>]) -> Result<Complex64> {
    if fs.len() != gs.len() {
        return Err(Error::OrderMismatch {
            left: fs.len(),
            right: gs.len(),
        });
    }
    Ok(determinant(&gram(fs, gs)?)? / factorial(fs.len()))
}

/// Dimension of a symmetry sector inside `(C^n)^{⊗k}`:
/// `C(n+k−1, k)` bosonic, `C(n, k)` fermionic, `n^k` general.
pub fn sector_dimension(n: usize, k: usize, class: &SymmetryClass) -> Result<usize> {
    match class {
        SymmetryClass::General => {
            let mut d = 1usize;
            for _ in 0..k {
                d = d.saturating_mul(n);
            }
            Ok(d)
        }
        SymmetryClass::Symmetric => Ok(binomial(n + k - 1, k)),
        SymmetryClass::Antisymmetric => Ok(binomial(n, k)),
        SymmetryClass::Young(_) => Err(Error::UnsupportedClass {
            class: "young".to_string(),
        }),
    }
}

/// Orthonormal basis of the bosonic or fermionic sector, as tensors.
///
/// Bosonic basis elements are indexed by weakly increasing multi-indices
/// `m₁ ≤ … ≤ m_k` and equal the unit-normalized symmetrization of
/// `e_{m₁}⊗…⊗e_{m_k}`: every distinct arrangement carries the coefficient
/// `√(Π_i k_i! / k!)`, with `k_i` the multiplicities. Fermionic elements are
/// indexed by strictly increasing multi-indices and carry `sgn(σ)/√k!` at
/// each arrangement. Both families are unit-norm and mutually orthogonal.
pub fn induced_basis(n: usize, k: usize, class: &SymmetryClass) -> Result<Vec<Tensor>> {
    let strict = match class {
        SymmetryClass::Symmetric => false,
        SymmetryClass::Antisymmetric => true,
        other => {
            return Err(Error::UnsupportedClass {
                class: other.name().to_string(),
            })
        }
    };
    let perms = Permutation::all(k)?;
    let mut basis = Vec::new();
    let mut tuple = match first_monotone(n, k, strict) {
        Some(t) => t,
        None => return Ok(basis),
    };
    let probe = Tensor::zero(n, k)?;
    loop {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); probe.coeffs().len()];
        let amplitude = if strict {
            1.0 / factorial(k).sqrt()
        } else {
            let mut mult = vec![0usize; n];
            for &m in &tuple {
                mult[m] += 1;
            }
            let numer: f64 = mult.iter().map(|&c| factorial(c)).product();
            (numer / factorial(k)).sqrt()
        };
        let mut idx = vec![0usize; k];
        for g in &perms {
            for p in 0..k {
                idx[p] = tuple[g.image(p)];
            }
            let sign = if strict && g.sign() < 0 { -1.0 } else { 1.0 };
            coeffs[probe.offset(&idx)] = Complex64::new(sign * amplitude, 0.0);
        }
        let class = if strict {
            SymmetryClass::Antisymmetric
        } else {
            SymmetryClass::Symmetric
        };
        basis.push(
            Tensor::from_coeffs(n, k, coeffs)?.into_class(class, crate::tensor::DEFAULT_EPSILON)?,
        );
        if !next_monotone(&mut tuple, n, strict) {
            break;
        }
    }
    Ok(basis)
}

/// Orthogonal projection of `u` onto the span of an orthonormal family.
pub fn project_onto_span(u: &Tensor, basis: &[Tensor]) -> Result<Tensor> {
    let mut acc = Tensor::zero(u.n(), u.k())?;
    for b in basis {
        let coeff = b.inner_product(u)?;
        acc = acc.add(&b.scale(coeff))?;
    }
    Ok(acc)
}

/// First weakly (or strictly) increasing `k`-tuple over `{0,…,n−1}`.
fn first_monotone(n: usize, k: usize, strict: bool) -> Option<Vec<usize>> {
    if strict {
        if k > n {
            return None;
        }
        Some((0..k).collect())
    } else {
        if n == 0 && k > 0 {
            return None;
        }
        Some(vec![0; k])
    }
}

/// Advances a monotone tuple in lexicographic order; `false` when exhausted.
fn next_monotone(tuple: &mut [usize], n: usize, strict: bool) -> bool {
    let k = tuple.len();
    let mut slot = k;
    while slot > 0 {
        slot -= 1;
        let cap = if strict { n - (k - 1 - slot) } else { n };
        if tuple[slot] + 1 < cap {
            tuple[slot] += 1;
            for p in slot + 1..k {
                tuple[p] = if strict { tuple[p - 1] + 1 } else { tuple[slot] };
            }
            return true;
        }
    }
    false
}

pub(crate) fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Binomial coefficient `C(n, k)` (0 when `k > n`).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: usize = 1;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}
