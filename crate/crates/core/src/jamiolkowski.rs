//! Four-leg tensors, the isomorphisms between two-particle states and
//! linear maps on operators, and the rank law connecting them.
//!
//! A [`FourLegTensor`] `Φ` has legs `(a, b, c, d)` read as
//! `(out₁, in₁, out₂, in₂)`: it encodes the operator kernel
//! `Φ: |b⟩⟨·| ↦ Σ Φ[a,b,c,d] |a⟩⟨d| …` — for our purposes only the index
//! bookkeeping matters, through three reshuffles:
//!
//! - `J`:  `(JΦ)[a,b,c,d] = Φ[a,d,c,b]` — an involution; maps with
//!   `JΦ = ±Φ` are the bosonic (+) and fermionic (−) ones;
//! - `J₁`: `(J₁Φ)[a,b,c,d] = Φ[a,d,b,c]` — sends the map attached to a
//!   pure two-particle state `v` to its projector `ρ_v`;
//! - `J₂`: `(J₂Φ)[a,b,c,d] = Φ[a,c,b,d]` — completes the triangle:
//!   `J₂ ∘ J = J₁` holds exactly, entry by entry.
//!
//! The state ↦ map direction is
//! `λ_{ijkl} = v^{ik} \overline{v^{jl}} / ‖v‖²`, and the **rank law** says
//! the flattened map `M[(i,j),(k,l)] = λ_{ijkl}` has rank `r²` when `v` is
//! symmetric with S-rank `r`, and `4r²` when `v` is antisymmetric built
//! from `r` pair blocks (S-rank `2r`). Simplicity of the state is thus
//! visible in the map: rank 1 (bosonic) or 4 (fermionic).

use num_complex::Complex64;

use crate::decomp::{takagi, youla};
use crate::error::{Error, Result};
use crate::linalg::{numerical_rank, svd};
use crate::matrix::CMatrix;
use crate::tensor::{SymmetryClass, Tensor, MAX_COEFFS};

/// A dense complex tensor with four legs of a common dimension `n`,
/// stored row-major over `(a, b, c, d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourLegTensor {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl FourLegTensor {
    /// The zero tensor with legs of dimension `n`.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch { left: 1, right: 0 });
        }
        let total = n * n * n * n;
        if total > MAX_COEFFS {
            return Err(Error::SizeGuardExceeded {
                operation: "four-leg tensor allocation",
                limit: MAX_COEFFS,
                requested: total,
            });
        }
        Ok(FourLegTensor {
            n,
            coeffs: vec![Complex64::new(0.0, 0.0); total],
        })
    }

    /// Wraps `n⁴` row-major coefficients.
    pub fn from_coeffs(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        let mut out = FourLegTensor::zero(n)?;
        if coeffs.len() != out.coeffs.len() {
            return Err(Error::DimensionMismatch {
                left: out.coeffs.len(),
                right: coeffs.len(),
            });
        }
        out.coeffs = coeffs;
        Ok(out)
    }

    /// Leg dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major coefficients over `(a, b, c, d)`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn offset(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * self.n + b) * self.n + c) * self.n + d
    }

    /// Coefficient at `(a, b, c, d)` (0-based).
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> Complex64 {
        self.coeffs[self.offset(a, b, c, d)]
    }

    /// Sets the coefficient at `(a, b, c, d)` (0-based).
    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, value: Complex64) {
        let off = self.offset(a, b, c, d);
        self.coeffs[off] = value;
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        FourLegTensor::from_coeffs(self.n, coeffs)
    }

    /// Entrywise scale.
    pub fn scale(&self, factor: Complex64) -> Self {
        FourLegTensor {
            n: self.n,
            coeffs: self.coeffs.iter().map(|z| z * factor).collect(),
        }
    }

    /// Frobenius distance to `other`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        Ok(self
            .sub(other)?
            .coeffs
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    fn reshuffle(&self, pick: impl Fn(usize, usize, usize, usize) -> (usize, usize, usize, usize)) -> Self {
        let mut out = FourLegTensor {
            n: self.n,
            coeffs: vec![Complex64::new(0.0, 0.0); self.coeffs.len()],
        };
        for a in 0..self.n {
            for b in 0..self.n {
                for c in 0..self.n {
                    for d in 0..self.n {
                        let (p, q, r, s) = pick(a, b, c, d);
                        let value = self.get(p, q, r, s);
                        out.set(a, b, c, d, value);
                    }
                }
            }
        }
        out
    }

    /// Flattens to the `n² × n²` matrix `M[(a,b),(c,d)] = Φ[a,b,c,d]`.
    pub fn flatten(&self) -> CMatrix {
        CMatrix::from_vec(self.n * self.n, self.n * self.n, self.coeffs.clone())
            .expect("n⁴ coefficients always fill an n²×n² matrix")
    }
}

/// The involution `(JΦ)[a,b,c,d] = Φ[a,d,c,b]`.
pub fn jam_j(phi: &FourLegTensor) -> FourLegTensor {
    phi.reshuffle(|a, b, c, d| (a, d, c, b))
}

/// The map-to-state reshuffle `(J₁Φ)[a,b,c,d] = Φ[a,d,b,c]`.
pub fn jam_j1(phi: &FourLegTensor) -> FourLegTensor {
    phi.reshuffle(|a, b, c, d| (a, d, b, c))
}

/// The middle-leg swap `(J₂Φ)[a,b,c,d] = Φ[a,c,b,d]`; satisfies
/// `J₂ ∘ J = J₁` exactly.
pub fn jam_j2(phi: &FourLegTensor) -> FourLegTensor {
    phi.reshuffle(|a, b, c, d| (a, c, b, d))
}

fn require_order_two(v: &Tensor) -> Result<()> {
    if v.k() != 2 {
        return Err(Error::WrongOrder {
            expected: 2,
            got: v.k(),
        });
    }
    if v.is_zero() {
        return Err(Error::ZeroTensor);
    }
    Ok(())
}

/// The projector onto a pure two-particle state:
/// `ρ_v[a,b,c,d] = v^{ab} \overline{v^{dc}} / ‖v‖²`.
pub fn pure_state_projector(v: &Tensor) -> Result<FourLegTensor> {
    require_order_two(v)?;
    let n = v.n();
    let norm_sqr = v.norm_sqr();
    let mut out = FourLegTensor::zero(n)?;
    for a in 0..n {
        for b in 0..n {
            let vab = v.coeff(&[a, b]);
            for c in 0..n {
                for d in 0..n {
                    let value = vab * v.coeff(&[d, c]).conj() / norm_sqr;
                    out.set(a, b, c, d, value);
                }
            }
        }
    }
    Ok(out)
}

/// The map attached to a pure two-particle state by the index formula
/// `λ_{ijkl} = v^{ik} \overline{v^{jl}} / ‖v‖²` (any order-2 state).
/// Satisfies `J₁(direct_map(v)) = ρ_v` exactly.
pub fn direct_map(v: &Tensor) -> Result<FourLegTensor> {
    require_order_two(v)?;
    let n = v.n();
    let norm_sqr = v.norm_sqr();
    let mut out = FourLegTensor::zero(n)?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let vik = v.coeff(&[i, k]);
                for l in 0..n {
                    let value = vik * v.coeff(&[j, l]).conj() / norm_sqr;
                    out.set(i, j, k, l, value);
                }
            }
        }
    }
    Ok(out)
}

/// Rank of the flattened map `M[(i,j),(k,l)] = λ_{ijkl}` above
/// `eps · σ_max`.
pub fn map_rank(phi: &FourLegTensor, eps: f64) -> Result<usize> {
    let s = svd(&phi.flatten())?;
    Ok(numerical_rank(&s.values, eps))
}

/// Exchange classification of a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    /// Self-adjoint with `JΦ = +Φ`: comes from a symmetric state.
    Bosonic,
    /// Self-adjoint with `JΦ = −Φ`: comes from an antisymmetric state.
    Fermionic,
    /// Not self-adjoint, or not an eigenvector of `J`.
    Neither,
}

/// Classifies a map by self-adjointness (`λ_{ijkl} = λ_{klij}`) and the
/// sign of `J`. Deviations are measured against `eps · max|λ|`.
pub fn classify_map(phi: &FourLegTensor, eps: f64) -> MapClass {
    let tol = eps * phi.max_abs();
    let n = phi.n();
    let mut self_adjoint = true;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if (phi.get(i, j, k, l) - phi.get(k, l, i, j)).norm() > tol {
                        self_adjoint = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    if !self_adjoint {
        return MapClass::Neither;
    }
    let j_phi = jam_j(phi);
    let plus = j_phi
        .sub(phi)
        .expect("same dimension")
        .max_abs();
    if plus <= tol {
        return MapClass::Bosonic;
    }
    let minus = j_phi
        .sub(&phi.scale(Complex64::new(-1.0, 0.0)))
        .expect("same dimension")
        .max_abs();
    if minus <= tol {
        return MapClass::Fermionic;
    }
    MapClass::Neither
}

/// Builds the bosonic map from congruence-diagonal data
/// (`v = Σ λ_a e_a ⊗ e_a`):
/// `λ_{ijkl} = Σ_{ab} λ_a λ_b (e_a)_i \overline{(e_b)_j} (e_a)_k
/// \overline{(e_b)_l} / Σ λ²`. Equals `state_to_map(v)` identically.
pub fn bosonic_map(lambdas: &[f64], vectors: &[Vec<Complex64>]) -> Result<FourLegTensor> {
    if lambdas.len() != vectors.len() || vectors.is_empty() {
        return Err(Error::DimensionMismatch {
            left: lambdas.len(),
            right: vectors.len(),
        });
    }
    let n = vectors[0].len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: bad.len(),
        });
    }
    let norm_sqr: f64 = lambdas.iter().map(|l| l * l).sum();
    if norm_sqr == 0.0 {
        return Err(Error::ZeroTensor);
    }
    let mut out = FourLegTensor::zero(n)?;
    for (la, ea) in lambdas.iter().zip(vectors) {
        for (lb, eb) in lambdas.iter().zip(vectors) {
            let weight = la * lb / norm_sqr;
            for i in 0..n {
                for j in 0..n {
                    let front = weight * ea[i] * eb[j].conj();
                    for k in 0..n {
                        for l in 0..n {
                            let add = front * ea[k] * eb[l].conj();
                            let off = out.offset(i, j, k, l);
                            out.coeffs[off] += add;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Builds the fermionic map from pair-block data
/// (`w = Σ μ_a f_a ∧ g_a`, `fs`/`gs` the two halves):
/// each `(a, b)` contributes `μ_a μ_b / 4` times
/// `f_a^i \overline{f_b^j} g_a^k \overline{g_b^l}
///  − g_a^i \overline{f_b^j} f_a^k \overline{g_b^l}
///  − f_a^i \overline{g_b^j} g_a^k \overline{f_b^l}
///  + g_a^i \overline{g_b^j} f_a^k \overline{f_b^l}`,
/// all over `‖w‖² = Σ μ²/2`. Equals `state_to_map(w)` identically.
pub fn fermionic_map(
    lambdas: &[f64],
    fs: &[Vec<Complex64>],
    gs: &[Vec<Complex64>],
) -> Result<FourLegTensor> {
    if lambdas.len() != fs.len() || fs.len() != gs.len() || fs.is_empty() {
        return Err(Error::DimensionMismatch {
            left: lambdas.len(),
            right: fs.len().min(gs.len()),
        });
    }
    let n = fs[0].len();
    if let Some(bad) = fs.iter().chain(gs).find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: bad.len(),
        });
    }
    let norm_sqr: f64 = lambdas.iter().map(|l| l * l / 2.0).sum();
    if norm_sqr == 0.0 {
        return Err(Error::ZeroTensor);
    }
    let mut out = FourLegTensor::zero(n)?;
    for a in 0..lambdas.len() {
        for b in 0..lambdas.len() {
            let weight = lambdas[a] * lambdas[b] / (4.0 * norm_sqr);
            for i in 0..n {
                for j in 0..n {
                    let ff = fs[a][i] * fs[b][j].conj();
                    let gf = gs[a][i] * fs[b][j].conj();
                    let fg = fs[a][i] * gs[b][j].conj();
                    let gg = gs[a][i] * gs[b][j].conj();
                    for k in 0..n {
                        for l in 0..n {
                            let t1 = ff * gs[a][k] * gs[b][l].conj();
                            let t2 = gf * fs[a][k] * gs[b][l].conj();
                            let t3 = fg * gs[a][k] * fs[b][l].conj();
                            let t4 = gg * fs[a][k] * fs[b][l].conj();
                            let add = weight * (t1 - t2 - t3 + t4);
                            let off = out.offset(i, j, k, l);
                            out.coeffs[off] += add;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The map attached to a symmetric or antisymmetric pure state, built
/// from its decomposition: symmetric states go through the congruence
/// diagonalization into [`bosonic_map`], antisymmetric states through the
/// pair-block decomposition into [`fermionic_map`]. Numerically identical
/// to [`direct_map`] (an algebraic identity, tested below).
pub fn state_to_map(v: &Tensor, eps: f64) -> Result<FourLegTensor> {
    require_order_two(v)?;
    match v.symmetry() {
        SymmetryClass::Symmetric => {
            let d = takagi(v, eps)?;
            bosonic_map(&d.lambdas, &d.vectors)
        }
        SymmetryClass::Antisymmetric => {
            let d = youla(v, eps)?;
            let pairs = d.lambdas.len();
            let fs = d.vectors[..pairs].to_vec();
            let gs = d.vectors[pairs..].to_vec();
            fermionic_map(&d.lambdas, &fs, &gs)
        }
        other => Err(Error::UnsupportedClass {
            class: other.name().to_string(),
        }),
    }
}
