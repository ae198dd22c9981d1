//! Shared helpers for the integration suites: seeded generators for
//! vectors, tensors of every exchange class, unitaries, and an
//! independent contraction oracle.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use srank_core::linalg::orthonormalize;
use srank_core::symmetry::{antisymmetrize, symmetrize};
use srank_core::{CMatrix, SymmetryClass, Tensor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| random_complex(rng)).collect()
}

/// Dense random general tensor with entries in the unit box.
pub fn random_tensor(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Tensor {
    let coeffs = (0..n.pow(k as u32)).map(|_| random_complex(rng)).collect();
    Tensor::from_coeffs(n, k, coeffs).expect("random coefficients are valid")
}

/// Random member of the given exchange class (generic, so entangled with
/// probability one for non-trivial sectors).
pub fn random_class_tensor(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    class: &SymmetryClass,
) -> Tensor {
    loop {
        let u = random_tensor(rng, n, k);
        let projected = match class {
            SymmetryClass::General => Ok(u),
            SymmetryClass::Symmetric => symmetrize(&u),
            SymmetryClass::Antisymmetric => antisymmetrize(&u),
            SymmetryClass::Young(_) => unreachable!("young members are built via projectors"),
        };
        if let Ok(v) = projected {
            if v.norm() > 1e-6 {
                return v;
            }
        }
    }
}

/// Random simple state of the given class: a product, a k-th power, or a
/// single wedge of independent vectors.
pub fn random_simple(rng: &mut ChaCha8Rng, n: usize, k: usize, class: &SymmetryClass) -> Tensor {
    loop {
        let candidate = match class {
            SymmetryClass::General => {
                let factors: Vec<Vec<Complex64>> =
                    (0..k).map(|_| random_vector(rng, n)).collect();
                Tensor::simple(&factors)
            }
            SymmetryClass::Symmetric => {
                let f = random_vector(rng, n);
                let factors: Vec<Vec<Complex64>> = (0..k).map(|_| f.clone()).collect();
                Tensor::simple(&factors)
                    .and_then(|u| u.into_class(SymmetryClass::Symmetric, 1e-9))
            }
            SymmetryClass::Antisymmetric => {
                let factors: Vec<Vec<Complex64>> =
                    (0..k).map(|_| random_vector(rng, n)).collect();
                srank_core::symmetry::wedge(&factors)
            }
            SymmetryClass::Young(_) => unreachable!("young simples come from alpha_simple"),
        };
        if let Ok(u) = candidate {
            if u.norm() > 1e-6 {
                return u;
            }
        }
    }
}

/// Haar-ish random unitary: Gram–Schmidt on n random vectors.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    loop {
        let vectors: Vec<Vec<Complex64>> = (0..n).map(|_| random_vector(rng, n)).collect();
        let basis = orthonormalize(&vectors, 1e-9);
        if basis.len() == n {
            return CMatrix::from_columns(&basis).expect("square system");
        }
    }
}

/// Independent contraction oracle: `(ι_μ u)^{j⃗} = ⟨μ ⊗ e_{j⃗}, u⟩`,
/// computed through tensor products and inner products rather than the
/// contraction kernel.
pub fn contraction_oracle(mu: &Tensor, u: &Tensor) -> Tensor {
    let n = u.n();
    let rest = u.k() - mu.k();
    let mut idx = vec![0usize; rest];
    let mut coeffs = Vec::with_capacity(n.pow(rest as u32));
    loop {
        let basis_factors: Vec<Vec<Complex64>> = idx
            .iter()
            .map(|&j| {
                let mut e = vec![Complex64::new(0.0, 0.0); n];
                e[j] = Complex64::new(1.0, 0.0);
                e
            })
            .collect();
        let probe = if rest == 0 {
            mu.clone()
        } else {
            let basis = Tensor::simple(&basis_factors).expect("basis product");
            mu.tensor_product(&basis).expect("same dimension")
        };
        coeffs.push(probe.inner_product(u).expect("same shape"));
        if !next_index(&mut idx, n) {
            break;
        }
    }
    Tensor::from_coeffs(n, rest, coeffs).expect("remainder tensor")
}

/// Row-major index increment over `{0,…,n−1}^k`; false at wrap-around.
pub fn next_index(idx: &mut [usize], n: usize) -> bool {
    for slot in (0..idx.len()).rev() {
        idx[slot] += 1;
        if idx[slot] < n {
            return true;
        }
        idx[slot] = 0;
    }
    false
}
