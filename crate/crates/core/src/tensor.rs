//! Dense order-`k` tensors over an `n`-dimensional complex one-particle space.
//!
//! A [`Tensor`] stores every coefficient `u^{i₁…i_k}` of
//! `u = Σ u^{i₁…i_k} e_{i₁} ⊗ … ⊗ e_{i_k}` in row-major order (first slot
//! slowest). Indices are 1-based at the API boundary (entry lists, JSON,
//! reports) and 0-based internally.
//!
//! Each tensor carries a [`SymmetryClass`] tag asserting which exchange
//! sector it lives in; construction verifies the class invariant up to the
//! working tolerance. The Hermitian inner product is the one induced by an
//! orthonormal one-particle basis: conjugate-linear in the **first**
//! argument, `⟨u|v⟩ = Σ conj(u^I) v^I`. Under it the symmetric and
//! antisymmetric subspaces inherit the permanent/determinant pairings of
//! [`crate::symmetry`]; e.g. `⟨e₁∨e₂|e₁∨e₂⟩ = 1/2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::perm::Permutation;
use crate::tableau::YoungTableau;

/// Working tolerance: thresholds are relative, `ε · max |coefficient|` for
/// coefficientwise checks and `ε · σ_max` for rank decisions.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// Guard on dense storage: `n^k` must stay at or below this.
pub const MAX_COEFFS: usize = 1 << 24;

/// Exchange sector asserted for a tensor.
#[derive(Debug, Clone, PartialEq)]
pub enum SymmetryClass {
    /// No exchange constraint (distinguishable subsystems).
    General,
    /// Bosonic sector: invariant under every slot permutation.
    Symmetric,
    /// Fermionic sector: alternating under slot permutations.
    Antisymmetric,
    /// Parastatistical sector: fixed by the Young projector of a tableau.
    Young(YoungTableau),
}

impl SymmetryClass {
    /// Short class name for messages and serialization.
    pub fn name(&self) -> &'static str {
        match self {
            SymmetryClass::General => "general",
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::Antisymmetric => "antisymmetric",
            SymmetryClass::Young(_) => "young",
        }
    }
}

impl std::fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense order-`k` tensor over `C^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    n: usize,
    k: usize,
    symmetry: SymmetryClass,
    coeffs: Vec<Complex64>,
}

impl Tensor {
    /// The zero tensor of order `k` over dimension `n`, tagged `general`.
    pub fn zero(n: usize, k: usize) -> Result<Tensor> {
        let len = dense_len(n, k)?;
        Ok(Tensor {
            n,
            k,
            symmetry: SymmetryClass::General,
            coeffs: vec![Complex64::new(0.0, 0.0); len],
        })
    }

    /// Builds a tensor from sparse entries with **1-based** multi-indices,
    /// then verifies the asserted symmetry class.
    ///
    /// Omitted indices are zero. Duplicate indices and out-of-range indices
    /// are rejected, as is any class invariant violated beyond
    /// `eps · max|coefficient|`.
    pub fn from_entries(
        n: usize,
        k: usize,
        entries: &[(Vec<usize>, Complex64)],
        symmetry: SymmetryClass,
        eps: f64,
    ) -> Result<Tensor> {
        let mut t = Tensor::zero(n, k)?;
        let mut seen = vec![false; t.coeffs.len()];
        for (idx, value) in entries {
            if idx.len() != k || idx.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::IndexOutOfRange {
                    index: idx.clone(),
                    n,
                    k,
                });
            }
            let zero_based: Vec<usize> = idx.iter().map(|&i| i - 1).collect();
            let off = t.offset(&zero_based);
            if seen[off] {
                return Err(Error::DuplicateEntry { index: idx.clone() });
            }
            seen[off] = true;
            t.coeffs[off] = *value;
        }
        t.into_class(symmetry, eps)
    }

    /// Builds a `general` tensor directly from a dense row-major coefficient
    /// vector of length `n^k`.
    pub fn from_coeffs(n: usize, k: usize, coeffs: Vec<Complex64>) -> Result<Tensor> {
        let len = dense_len(n, k)?;
        if coeffs.len() != len {
            return Err(Error::DimensionMismatch {
                left: len,
                right: coeffs.len(),
            });
        }
        Ok(Tensor {
            n,
            k,
            symmetry: SymmetryClass::General,
            coeffs,
        })
    }

    /// The basis vector `e_i` (0-based `i`) as an order-1 tensor.
    pub fn basis_vector(n: usize, i: usize) -> Result<Tensor> {
        if i >= n {
            return Err(Error::IndexOutOfRange {
                index: vec![i + 1],
                n,
                k: 1,
            });
        }
        let mut t = Tensor::zero(n, 1)?;
        t.coeffs[i] = Complex64::new(1.0, 0.0);
        Ok(t)
    }

    /// An order-1 tensor from a coefficient vector.
    pub fn vector(coeffs: &[Complex64]) -> Result<Tensor> {
        Tensor::from_coeffs(coeffs.len(), 1, coeffs.to_vec())
    }

    /// The simple (decomposable) tensor `f₁ ⊗ … ⊗ f_k` from `k` vectors of a
    /// common dimension.
    pub fn simple(vectors: &[Vec<Complex64>]) -> Result<Tensor> {
        let k = vectors.len();
        let n = vectors.first().map_or(0, Vec::len);
        if n == 0 {
            return Err(Error::DimensionMismatch { left: n, right: 0 });
        }
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: v.len(),
                });
            }
        }
        let mut t = Tensor::zero(n, k)?;
        let mut idx = vec![0usize; k];
        loop {
            let mut value = Complex64::new(1.0, 0.0);
            for (s, &i) in idx.iter().enumerate() {
                value *= vectors[s][i];
            }
            let off = t.offset(&idx);
            t.coeffs[off] = value;
            if !next_index(&mut idx, n) {
                break;
            }
        }
        Ok(t)
    }

    /// Single-particle dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Order `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The asserted symmetry class.
    pub fn symmetry(&self) -> &SymmetryClass {
        &self.symmetry
    }

    /// Dense row-major coefficients.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at a 0-based multi-index.
    pub fn coeff(&self, idx: &[usize]) -> Complex64 {
        self.coeffs[self.offset(idx)]
    }

    /// Coefficient at a 1-based multi-index, with range checking.
    pub fn coeff_one_based(&self, idx: &[usize]) -> Result<Complex64> {
        if idx.len() != self.k || idx.iter().any(|&i| i == 0 || i > self.n) {
            return Err(Error::IndexOutOfRange {
                index: idx.to_vec(),
                n: self.n,
                k: self.k,
            });
        }
        let zero_based: Vec<usize> = idx.iter().map(|&i| i - 1).collect();
        Ok(self.coeff(&zero_based))
    }

    /// Row-major offset of a 0-based multi-index.
    #[inline]
    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.k);
        let mut off = 0;
        for &i in idx {
            debug_assert!(i < self.n);
            off = off * self.n + i;
        }
        off
    }

    /// Iterates over all 0-based multi-indices in row-major order, calling
    /// `f(offset, index)`.
    pub fn for_each_index(&self, mut f: impl FnMut(usize, &[usize])) {
        let mut idx = vec![0usize; self.k];
        let mut off = 0;
        loop {
            f(off, &idx);
            off += 1;
            if !next_index(&mut idx, self.n) {
                break;
            }
        }
    }

    /// Squared Hermitian norm `Σ |u^I|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Hermitian norm.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Largest coefficient modulus.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Whether every coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs
            .iter()
            .all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Hermitian inner product `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner_product(&self, other: &Tensor) -> Result<Complex64> {
        self.check_compatible(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Tensor product `self ⊗ other` (same `n`; orders add; result is tagged
    /// `general`).
    pub fn tensor_product(&self, other: &Tensor) -> Result<Tensor> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Tensor::zero(self.n, self.k + other.k)?;
        let right_len = other.coeffs.len();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            let base = i * right_len;
            for (j, &b) in other.coeffs.iter().enumerate() {
                out.coeffs[base + j] = a * b;
            }
        }
        Ok(out)
    }

    /// Slot permutation `U_g`: `(g·u)^{i₁…i_k} = u^{i_{g⁻¹(1)} … i_{g⁻¹(k)}}`,
    /// i.e. `U_g(f₁⊗…⊗f_k) = f_{g(1)} ⊗ … ⊗ f_{g(k)}`.
    ///
    /// Symmetric and antisymmetric tags survive (those sectors are
    /// permutation-stable); a Young tag degrades to `general` because a
    /// permuted tableau-sector tensor generally leaves its block.
    pub fn permute(&self, g: &Permutation) -> Result<Tensor> {
        if g.degree() != self.k {
            return Err(Error::OrderMismatch {
                left: self.k,
                right: g.degree(),
            });
        }
        let ginv = g.inverse();
        let mut out = Tensor::zero(self.n, self.k)?;
        let mut idx = vec![0usize; self.k];
        let mut src = vec![0usize; self.k];
        let mut off = 0usize;
        loop {
            for q in 0..self.k {
                src[q] = idx[ginv.image(q)];
            }
            out.coeffs[off] = self.coeff(&src);
            off += 1;
            if !next_index(&mut idx, self.n) {
                break;
            }
        }
        out.symmetry = match &self.symmetry {
            SymmetryClass::Symmetric => SymmetryClass::Symmetric,
            SymmetryClass::Antisymmetric => SymmetryClass::Antisymmetric,
            _ => SymmetryClass::General,
        };
        Ok(out)
    }

    /// Entrywise complex conjugate (the coefficient vector of the dual
    /// `⟨u|` under the anti-linear identification `|x⟩ ↦ ⟨x|`).
    pub fn conj(&self) -> Tensor {
        Tensor {
            n: self.n,
            k: self.k,
            symmetry: self.symmetry.clone(),
            coeffs: self.coeffs.iter().map(Complex64::conj).collect(),
        }
    }

    /// Sum; operands must share `(n, k)`. The tag survives only when both
    /// operands carry the same tag (each sector is a linear subspace).
    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_compatible(other)?;
        Ok(Tensor {
            n: self.n,
            k: self.k,
            symmetry: if self.symmetry == other.symmetry {
                self.symmetry.clone()
            } else {
                SymmetryClass::General
            },
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Difference; same rules as [`Tensor::add`].
    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.check_compatible(other)?;
        Ok(Tensor {
            n: self.n,
            k: self.k,
            symmetry: if self.symmetry == other.symmetry {
                self.symmetry.clone()
            } else {
                SymmetryClass::General
            },
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Scalar multiple (keeps the class tag: sectors are subspaces).
    pub fn scale(&self, c: Complex64) -> Tensor {
        Tensor {
            n: self.n,
            k: self.k,
            symmetry: self.symmetry.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Unit-norm copy. Fails on the zero tensor.
    pub fn normalized(&self) -> Result<Tensor> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroTensor);
        }
        Ok(self.scale(Complex64::new(1.0 / norm, 0.0)))
    }

    /// Distance `‖self − other‖`.
    pub fn distance(&self, other: &Tensor) -> Result<f64> {
        Ok(self.sub(other)?.norm())
    }

    /// Applies one matrix to every slot: `u ↦ (m ⊗ … ⊗ m) u`.
    ///
    /// This is the diagonal action of `GL(n)`; it commutes with slot
    /// permutations, so every class tag (including Young) survives.
    pub fn apply_slotwise(&self, m: &CMatrix) -> Result<Tensor> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: m.rows().max(m.cols()),
            });
        }
        let n = self.n;
        let mut data = self.coeffs.clone();
        // Contract slot `s` with `m`, one mode at a time.
        for s in 0..self.k {
            let inner: usize = n.pow((self.k - 1 - s) as u32);
            let outer: usize = data.len() / (n * inner);
            let mut next = vec![Complex64::new(0.0, 0.0); data.len()];
            for a in 0..outer {
                for b in 0..inner {
                    for i in 0..n {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for j in 0..n {
                            acc += m.get(i, j) * data[(a * n + j) * inner + b];
                        }
                        next[(a * n + i) * inner + b] = acc;
                    }
                }
            }
            data = next;
        }
        Ok(Tensor {
            n,
            k: self.k,
            symmetry: self.symmetry.clone(),
            coeffs: data,
        })
    }

    /// Re-tags the tensor with `class` after verifying the class invariant
    /// to `eps · max|coefficient|` (or, for Young tags, `eps · ‖u‖`).
    pub fn into_class(mut self, class: SymmetryClass, eps: f64) -> Result<Tensor> {
        let deviation = self.class_deviation(&class)?;
        let tolerance = match class {
            SymmetryClass::Young(_) => eps * self.norm(),
            _ => eps * self.max_abs_coeff(),
        };
        if deviation > tolerance {
            return Err(Error::SymmetryViolation {
                class: class.name().to_string(),
                deviation,
                tolerance,
            });
        }
        self.symmetry = class;
        Ok(self)
    }

    /// Measures how far the tensor is from the given class:
    /// the largest coefficient deviation under the class's generating slot
    /// transpositions (`general` → 0), or `‖π_α u − u‖` for a Young tag.
    pub fn class_deviation(&self, class: &SymmetryClass) -> Result<f64> {
        match class {
            SymmetryClass::General => Ok(0.0),
            SymmetryClass::Symmetric | SymmetryClass::Antisymmetric => {
                let sign = if matches!(class, SymmetryClass::Symmetric) {
                    1.0
                } else {
                    -1.0
                };
                let mut worst = 0.0f64;
                if self.k < 2 {
                    return Ok(0.0);
                }
                // Adjacent transpositions generate S_k.
                for s in 0..self.k - 1 {
                    let g = Permutation::transposition(self.k, s, s + 1);
                    let permuted = self.permute(&g)?;
                    for (a, b) in permuted.coeffs.iter().zip(&self.coeffs) {
                        let d = (a * sign - b).norm();
                        worst = worst.max(d);
                    }
                }
                Ok(worst)
            }
            SymmetryClass::Young(tableau) => {
                if tableau.k() != self.k {
                    return Err(Error::OrderMismatch {
                        left: self.k,
                        right: tableau.k(),
                    });
                }
                let projector = crate::young::young_projector(tableau)?;
                let projected = projector.apply(self)?;
                projected.distance(self)
            }
        }
    }

    fn check_compatible(&self, other: &Tensor) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.k != other.k {
            return Err(Error::OrderMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }
}

/// Checked dense length `n^k`.
fn dense_len(n: usize, k: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::DimensionMismatch { left: 1, right: 0 });
    }
    let mut len: usize = 1;
    for _ in 0..k {
        len = len.checked_mul(n).unwrap_or(usize::MAX);
        if len > MAX_COEFFS {
            return Err(Error::SizeGuardExceeded {
                operation: "dense tensor storage",
                limit: MAX_COEFFS,
                requested: len,
            });
        }
    }
    Ok(len)
}

/// Advances a 0-based multi-index in row-major order; `false` on wrap.
pub(crate) fn next_index(idx: &mut [usize], n: usize) -> bool {
    for slot in (0..idx.len()).rev() {
        idx[slot] += 1;
        if idx[slot] < n {
            return true;
        }
        idx[slot] = 0;
    }
    false
}
