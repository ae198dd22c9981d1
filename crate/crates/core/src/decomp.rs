//! Canonical decompositions of two-particle states.
//!
//! Every order-2 state is a matrix `A` of coefficients `u^{ij}`, and each
//! exchange class has a normal form under one-particle basis change:
//!
//! - **general**: Schmidt form `u = Σ λ_r w_r ⊗ v_r` with `λ_r > 0` and
//!   orthonormal families `{w_r}`, `{v_r}` (an SVD of `A`);
//! - **symmetric**: congruence diagonalization `A = U Λ Uᵀ` with unitary
//!   `U` and `Λ = diag(λ_r ≥ 0)`, i.e. `u = Σ λ_r e_r ⊗ e_r` — the
//!   symmetric analogue of the Schmidt form (Takagi form);
//! - **antisymmetric**: pairing normal form
//!   `A = Σ λ_r/2 · (f_r g_rᵀ − g_r f_rᵀ)`, i.e. `u = Σ λ_r f_r ∧ g_r`
//!   over an orthonormal family `{f_1, g_1, …, f_r, g_r}` (Youla form).
//!
//! The symmetric and antisymmetric forms are computed from the SVD of `A`
//! through con-eigenvector extraction and anti-linear pairing: both handle
//! degenerate (clustered) singular values, which is where naive
//! eigenvector-phase fixes break down.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{numerical_rank, svd};
use crate::matrix::CMatrix;
use crate::tensor::Tensor;

/// Relative width used to group nearly equal singular values into one
/// degenerate cluster before extracting basis vectors inside it. Wider than
/// the rank threshold on purpose: vectors of nearly equal singular values
/// mix freely and must be processed together.
pub const CLUSTER_TOLERANCE: f64 = 1e-7;

/// Schmidt form of a general two-particle state: `u = Σ λ_r w_r ⊗ v_r`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// Positive Schmidt coefficients, descending.
    pub lambdas: Vec<f64>,
    /// Orthonormal left vectors `w_r`.
    pub left: Vec<Vec<Complex64>>,
    /// Orthonormal right vectors `v_r`.
    pub right: Vec<Vec<Complex64>>,
    /// Frobenius distance between the input and the reconstruction.
    pub residual: f64,
}

/// Congruence-diagonal form of a symmetric state: `u = Σ λ_r e_r ⊗ e_r`.
#[derive(Debug, Clone)]
pub struct TakagiDecomposition {
    /// Nonnegative coefficients, descending.
    pub lambdas: Vec<f64>,
    /// Orthonormal vectors `e_r`, one per coefficient.
    pub vectors: Vec<Vec<Complex64>>,
    /// Frobenius distance between the input and the reconstruction.
    pub residual: f64,
}

/// Pairing form of an antisymmetric state: `u = Σ λ_r f_r ∧ g_r`.
#[derive(Debug, Clone)]
pub struct SlaterDecomposition {
    /// Positive pair coefficients, descending.
    pub lambdas: Vec<f64>,
    /// Orthonormal vectors `[f_1, …, f_r, g_1, …, g_r]`: the first half
    /// holds the `f`s, the second half the matching `g`s.
    pub vectors: Vec<Vec<Complex64>>,
    /// Frobenius distance between the input and the reconstruction.
    pub residual: f64,
}

/// The `n × n` coefficient matrix `A[i][j] = u^{ij}` of an order-2 tensor.
pub fn coefficient_matrix(u: &Tensor) -> Result<CMatrix> {
    if u.k() != 2 {
        return Err(Error::WrongOrder {
            expected: 2,
            got: u.k(),
        });
    }
    CMatrix::from_vec(u.n(), u.n(), u.coeffs().to_vec())
}

/// The order-2 tensor whose coefficient matrix is `a` (must be square).
pub fn tensor_of_matrix(a: &CMatrix) -> Result<Tensor> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch {
            left: a.rows(),
            right: a.cols(),
        });
    }
    Tensor::from_coeffs(a.rows(), 2, a.data().to_vec())
}

/// Schmidt decomposition of an order-2 state, keeping coefficients above
/// `eps` relative to the largest.
pub fn schmidt(u: &Tensor, eps: f64) -> Result<SchmidtDecomposition> {
    let a = coefficient_matrix(u)?;
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let s = svd(&a)?;
    let rank = numerical_rank(&s.values, eps);
    let mut lambdas = Vec::with_capacity(rank);
    let mut left = Vec::with_capacity(rank);
    let mut right: Vec<Vec<Complex64>> = Vec::with_capacity(rank);
    for r in 0..rank {
        lambdas.push(s.values[r]);
        left.push(s.u.column(r));
        // u^{ij} = Σ σ_r U[i,r] conj(V[j,r]), so the right factor is V̄.
        right.push(s.v.column(r).iter().map(Complex64::conj).collect());
        // Deterministic representative: rotate the pair so the left
        // vector's first significant component is real positive (the
        // opposite phases cancel in the reconstruction).
        let theta = leading_phase(&left[r]);
        apply_phase(&mut left[r], theta);
        apply_phase(&mut right[r], theta.conj());
    }
    let mut recon = CMatrix::zeros(u.n(), u.n());
    for r in 0..rank {
        for i in 0..u.n() {
            for j in 0..u.n() {
                let add = lambdas[r] * left[r][i] * right[r][j];
                recon.set(i, j, recon.get(i, j) + add);
            }
        }
    }
    let residual = a.sub(&recon)?.frobenius_norm();
    Ok(SchmidtDecomposition {
        lambdas,
        left,
        right,
        residual,
    })
}

/// Groups indices of descending `values` into clusters of relative width
/// [`CLUSTER_TOLERANCE`], dropping values at or below `eps·max`.
fn clusters(values: &[f64], eps: f64) -> Vec<Vec<usize>> {
    let max = values.iter().cloned().fold(0.0, f64::max);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &s) in values.iter().enumerate() {
        if max == 0.0 || s <= eps * max {
            continue;
        }
        match out.last_mut() {
            Some(cluster) if values[cluster[0]] - s <= CLUSTER_TOLERANCE * max => {
                cluster.push(i);
            }
            _ => out.push(vec![i]),
        }
    }
    out
}

fn column_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// The unit phase `θ` that makes `v`'s first significant component real
/// positive after `v *= θ`; identity for numerically-zero vectors.
fn leading_phase(v: &[Complex64]) -> Complex64 {
    for z in v {
        if z.norm() > 1e-12 {
            return z.conj() / z.norm();
        }
    }
    Complex64::new(1.0, 0.0)
}

fn apply_phase(v: &mut [Complex64], theta: Complex64) {
    for z in v.iter_mut() {
        *z *= theta;
    }
}

/// Flips `v`'s sign when its first significant component points into the
/// negative half-plane (negative real part; ties broken by negative
/// imaginary part). A congruence vector only carries a `±` freedom —
/// a general phase `θ` would scale the reconstruction by `θ²` — so this
/// is the whole normalization available to it.
fn canonical_sign(v: &mut [Complex64]) {
    for z in v.iter() {
        if z.norm() > 1e-12 {
            if z.re < 0.0 || (z.re == 0.0 && z.im < 0.0) {
                for w in v.iter_mut() {
                    *w = -*w;
                }
            }
            return;
        }
    }
}

/// Congruence diagonalization of a symmetric state (coefficient matrix
/// `A = Aᵀ`): finds orthonormal `e_r` with `A = Σ λ_r e_r e_rᵀ`.
///
/// For each right singular vector `x` of `A` with value `s`, the vectors
/// `Ax + s·x̄` and `i(Ax − s·x̄)` both satisfy the con-eigenvector relation
/// `A w̄ = s w`, and together they span the con-eigenspace; Gram–Schmidt
/// with **real** coefficients inside each singular-value cluster preserves
/// the relation (inner products of con-eigenvectors of a common `s` are
/// automatically real).
pub fn takagi(u: &Tensor, eps: f64) -> Result<TakagiDecomposition> {
    let a = coefficient_matrix(u)?;
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let defect = a.sub(&a.transpose())?.max_abs();
    let tolerance = eps * a.max_abs();
    if defect > tolerance {
        return Err(Error::SymmetryViolation {
            class: "symmetric".to_string(),
            deviation: defect,
            tolerance,
        });
    }
    let n = u.n();
    let s = svd(&a)?;
    let mut lambdas = Vec::new();
    let mut vectors: Vec<Vec<Complex64>> = Vec::new();
    for cluster in clusters(&s.values, eps) {
        let scale = s.values[cluster[0]];
        let mut pool: Vec<Vec<Complex64>> = Vec::new();
        for &r in &cluster {
            let sv = s.values[r];
            let x = s.v.column(r);
            let ax = a.mul_vec(&x)?;
            pool.push(
                ax.iter()
                    .zip(&x)
                    .map(|(axi, xi)| axi + sv * xi.conj())
                    .collect(),
            );
            pool.push(
                ax.iter()
                    .zip(&x)
                    .map(|(axi, xi)| Complex64::new(0.0, 1.0) * (axi - sv * xi.conj()))
                    .collect(),
            );
        }
        // Candidates with the most weight first; noise candidates (a pair
        // member can vanish identically) sort to the back and are never
        // reached once the cluster is filled.
        pool.sort_by(|a, b| column_norm(b).partial_cmp(&column_norm(a)).unwrap());
        // Real-coefficient modified Gram–Schmidt inside the cluster. The
        // residual threshold is absolute against the cluster's singular
        // value: genuine missing directions always retain a residual of
        // order `scale`, while rounding noise stays many orders below it.
        let mut basis: Vec<Vec<Complex64>> = Vec::new();
        for candidate in pool {
            if basis.len() == cluster.len() {
                break;
            }
            let mut w = candidate;
            for _ in 0..2 {
                for b in &basis {
                    let overlap = inner(b, &w).re;
                    for (wi, bi) in w.iter_mut().zip(b) {
                        *wi -= overlap * bi;
                    }
                }
            }
            let norm = column_norm(&w);
            if norm > 1e-4 * scale {
                let inv = 1.0 / norm;
                for wi in w.iter_mut() {
                    *wi *= inv;
                }
                basis.push(w);
            }
        }
        if basis.len() != cluster.len() {
            return Err(Error::NonConvergence {
                context: "symmetric con-eigenvector extraction",
            });
        }
        for (slot, mut vec) in cluster.iter().zip(basis) {
            canonical_sign(&mut vec);
            lambdas.push(s.values[*slot]);
            vectors.push(vec);
        }
    }
    // Residual of A − Σ λ e eᵀ.
    let mut recon = CMatrix::zeros(n, n);
    for (lam, e) in lambdas.iter().zip(&vectors) {
        for i in 0..n {
            for j in 0..n {
                let add = lam * e[i] * e[j];
                recon.set(i, j, recon.get(i, j) + add);
            }
        }
    }
    let residual = a.sub(&recon)?.frobenius_norm();
    Ok(TakagiDecomposition {
        lambdas,
        vectors,
        residual,
    })
}

/// Pairing normal form of an antisymmetric state (coefficient matrix
/// `A = −Aᵀ`): finds orthonormal `f_r, g_r` with `u = Σ λ_r f_r ∧ g_r`,
/// `λ_r = 2 s_r` for the (evenly degenerate) singular values `s_r`.
///
/// Inside each singular-value cluster the anti-linear map
/// `T x = conj(Ax)/s` squares to `−1` and pairs any unit vector `x` with
/// the orthogonal `y = Tx`; the pair contributes `f = ȳ`, `g = x̄`.
pub fn youla(u: &Tensor, eps: f64) -> Result<SlaterDecomposition> {
    let a = coefficient_matrix(u)?;
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let defect = a.add(&a.transpose())?.max_abs();
    let tolerance = eps * a.max_abs();
    if defect > tolerance {
        return Err(Error::SymmetryViolation {
            class: "antisymmetric".to_string(),
            deviation: defect,
            tolerance,
        });
    }
    let n = u.n();
    let s = svd(&a)?;
    let mut lambdas = Vec::new();
    let mut fs: Vec<Vec<Complex64>> = Vec::new();
    let mut gs: Vec<Vec<Complex64>> = Vec::new();
    for cluster in clusters(&s.values, eps) {
        if cluster.len() % 2 != 0 {
            return Err(Error::NonConvergence {
                context: "antisymmetric pairing: odd cluster",
            });
        }
        let sv = s.values[cluster[0]];
        // Orthonormal pairs chosen greedily inside the cluster.
        let mut chosen: Vec<Vec<Complex64>> = Vec::new();
        let mut supply: Vec<Vec<Complex64>> = cluster.iter().map(|&r| s.v.column(r)).collect();
        while chosen.len() < cluster.len() {
            let Some(raw) = supply.pop() else {
                return Err(Error::NonConvergence {
                    context: "antisymmetric pairing: cluster exhausted",
                });
            };
            let mut x = raw;
            for _ in 0..2 {
                for b in &chosen {
                    let ov = inner(b, &x);
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi -= ov * bi;
                    }
                }
            }
            let norm = column_norm(&x);
            if norm <= 1e-6 {
                continue;
            }
            let inv = 1.0 / norm;
            for xi in x.iter_mut() {
                *xi *= inv;
            }
            // Partner y = conj(Ax)/s, orthogonal to x and to prior pairs.
            let ax = a.mul_vec(&x)?;
            let mut y: Vec<Complex64> = ax.iter().map(|z| z.conj() / sv).collect();
            for _ in 0..2 {
                for b in &chosen {
                    let ov = inner(b, &y);
                    for (yi, bi) in y.iter_mut().zip(b) {
                        *yi -= ov * bi;
                    }
                }
                let ov = inner(&x, &y);
                for (yi, xi) in y.iter_mut().zip(&x) {
                    *yi -= ov * xi;
                }
            }
            let ny = column_norm(&y);
            if ny <= 0.5 {
                // The pairing identity guarantees ‖y‖ = 1 up to rounding;
                // anything materially smaller signals breakdown.
                return Err(Error::NonConvergence {
                    context: "antisymmetric pairing: degenerate partner",
                });
            }
            let invy = 1.0 / ny;
            for yi in y.iter_mut() {
                *yi *= invy;
            }
            // A x = s ȳ and A y = −s x̄, so f = ȳ, g = x̄ give
            // the block A|pair = s (f gᵀ − g fᵀ) = (2s) · coeff(f ∧ g).
            lambdas.push(2.0 * sv);
            fs.push(y.iter().map(Complex64::conj).collect());
            gs.push(x.iter().map(Complex64::conj).collect());
            chosen.push(x);
            chosen.push(y);
        }
    }
    // Deterministic representative per pair: rotate (f, g) by opposite
    // phases (which fixes f gᵀ − g fᵀ) so each f leads real positive.
    for (f, g) in fs.iter_mut().zip(gs.iter_mut()) {
        let theta = leading_phase(f);
        apply_phase(f, theta);
        apply_phase(g, theta.conj());
    }
    // Residual of A − Σ (λ/2)(f gᵀ − g fᵀ).
    let mut recon = CMatrix::zeros(n, n);
    for ((lam, f), g) in lambdas.iter().zip(&fs).zip(&gs) {
        for i in 0..n {
            for j in 0..n {
                let add = 0.5 * lam * (f[i] * g[j] - g[i] * f[j]);
                recon.set(i, j, recon.get(i, j) + add);
            }
        }
    }
    let residual = a.sub(&recon)?.frobenius_norm();
    let mut vectors = fs;
    vectors.extend(gs);
    Ok(SlaterDecomposition {
        lambdas,
        vectors,
        residual,
    })
}
