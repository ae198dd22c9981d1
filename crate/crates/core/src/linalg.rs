//! Dense complex linear algebra: SVD, orthonormalization, numerical rank.
//!
//! The singular value decomposition uses one-sided Jacobi rotations on the
//! columns: unitary 2×2 rotations are applied on the right until all column
//! pairs are numerically orthogonal, which computes small singular values
//! to high relative accuracy — exactly what rank decisions near a relative
//! threshold need. No external numerical backend is involved.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// Convergence threshold for Jacobi sweeps, relative to column norms.
const JACOBI_TOL: f64 = 1e-13;

/// Upper bound on Jacobi sweeps before reporting non-convergence.
const MAX_SWEEPS: usize = 64;

/// A thin singular value decomposition `A = U Σ V†`.
///
/// `u` is `m × r` and `v` is `n × r` with `r = min(m, n)`; `values` holds
/// the singular values in descending order. `v` always has exactly
/// orthonormal columns (it accumulates unitary rotations); columns of `u`
/// belonging to numerically zero singular values are zeroed.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Left singular vectors, one column per singular value.
    pub u: CMatrix,
    /// Singular values, descending.
    pub values: Vec<f64>,
    /// Right singular vectors, one column per singular value.
    pub v: CMatrix,
}

impl Svd {
    /// Reconstructs `Σ value_i · u_i v_i†` for comparison against the input.
    pub fn reconstruct(&self) -> CMatrix {
        let m = self.u.rows();
        let n = self.v.rows();
        let mut a = CMatrix::zeros(m, n);
        for (r, &s) in self.values.iter().enumerate() {
            for i in 0..m {
                for j in 0..n {
                    let add = self.u.get(i, r) * self.v.get(j, r).conj() * s;
                    a.set(i, j, a.get(i, j) + add);
                }
            }
        }
        a
    }
}

/// One-sided Jacobi SVD of a complex matrix.
pub fn svd(a: &CMatrix) -> Result<Svd> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::DimensionMismatch {
            left: a.rows(),
            right: a.cols(),
        });
    }
    if a.rows() < a.cols() {
        // A = (A†)† : compute the SVD of the adjoint and swap the factors.
        let swapped = svd(&a.adjoint())?;
        return Ok(Svd {
            u: swapped.v,
            values: swapped.values,
            v: swapped.u,
        });
    }
    let m = a.rows();
    let n = a.cols();
    // Work on columns; accumulate the right rotations into V.
    let mut b: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut col = vec![Complex64::new(0.0, 0.0); n];
            col[j] = Complex64::new(1.0, 0.0);
            col
        })
        .collect();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let app: f64 = b[p].iter().map(|z| z.norm_sqr()).sum();
                let aqq: f64 = b[q].iter().map(|z| z.norm_sqr()).sum();
                let mut apq = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    apq += b[p][i].conj() * b[q][i];
                }
                if apq.norm() <= JACOBI_TOL * (app * aqq).sqrt() || app == 0.0 || aqq == 0.0 {
                    continue;
                }
                rotated = true;
                // Diagonalize the 2×2 Gram block [[app, apq], [conj, aqq]]:
                // strip the phase of apq, then rotate by the Jacobi angle.
                let phase = apq / apq.norm();
                let tau = (aqq - app) / (2.0 * apq.norm());
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                for i in 0..m {
                    let bp = b[p][i];
                    let bq = phase.conj() * b[q][i];
                    b[p][i] = cs * bp - sn * bq;
                    b[q][i] = sn * bp + cs * bq;
                }
                for i in 0..n {
                    let vp = v[p][i];
                    let vq = phase.conj() * v[q][i];
                    v[p][i] = cs * vp - sn * vq;
                    v[q][i] = sn * vp + cs * vq;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            context: "one-sided Jacobi SVD",
        });
    }
    // Column norms are the singular values; sort descending.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = b
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    let mut values = Vec::with_capacity(n);
    let mut u = CMatrix::zeros(m, n);
    let mut vm = CMatrix::zeros(n, n);
    let max_norm = order.first().map_or(0.0, |&j| norms[j]);
    for (r, &j) in order.iter().enumerate() {
        values.push(norms[j]);
        if norms[j] > max_norm * f64::EPSILON {
            for i in 0..m {
                u.set(i, r, b[j][i] / norms[j]);
            }
        }
        for i in 0..n {
            vm.set(i, r, v[j][i]);
        }
    }
    Ok(Svd { u, values, v: vm })
}

/// Number of singular values above `eps` times the largest one.
pub fn numerical_rank(values: &[f64], eps: f64) -> usize {
    let max = values.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    values.iter().filter(|&&s| s > eps * max).count()
}

/// Rank of a matrix: SVD followed by the relative threshold `eps`.
pub fn matrix_rank(a: &CMatrix, eps: f64) -> Result<usize> {
    Ok(numerical_rank(&svd(a)?.values, eps))
}

/// Modified Gram–Schmidt with one reorthogonalization pass.
///
/// Returns the orthonormal vectors produced from `vectors` in order,
/// dropping those whose residual falls below `eps` times their original
/// norm (numerically dependent inputs).
pub fn orthonormalize(vectors: &[Vec<Complex64>], eps: f64) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for v in vectors {
        let original: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if original == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let mut overlap = Complex64::new(0.0, 0.0);
                for (x, y) in b.iter().zip(&w) {
                    overlap += x.conj() * y;
                }
                for (x, y) in b.iter().zip(w.iter_mut()) {
                    *y -= overlap * x;
                }
            }
        }
        let norm: f64 = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > eps * original {
            let inv = 1.0 / norm;
            for y in w.iter_mut() {
                *y *= inv;
            }
            basis.push(w);
        }
    }
    basis
}

/// Largest entry of `A†A − I`, a measure of how far columns are from
/// orthonormal.
pub fn orthonormality_defect(a: &CMatrix) -> f64 {
    let gram = a.adjoint().mul(a).expect("shapes agree by construction");
    let mut worst = 0.0f64;
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            let expected = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((gram.get(i, j) - expected).norm());
        }
    }
    worst
}
