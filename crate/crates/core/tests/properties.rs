//! Cross-module invariants checked on seeded random inputs: independent
//! computation paths must agree, classifications must respect the
//! symmetries of the problem, and interchange formats must round-trip.

mod common;

use num_complex::Complex64;

use common::{
    contraction_oracle, random_class_tensor, random_complex, random_simple, random_tensor,
    random_unitary, random_vector, rng,
};
use srank_core::contraction::{contract, DualTensor};
use srank_core::decomp::{schmidt, takagi, youla};
use srank_core::jamiolkowski::{classify_map, jam_j, jam_j1, jam_j2, FourLegTensor, MapClass};
use srank_core::json::{
    parse_four_leg, parse_tableau, parse_tensor, serialize_four_leg, serialize_tableau,
    serialize_tensor,
};
use srank_core::linalg::{orthonormality_defect, svd};
use srank_core::srank::{is_simple, overlap_score, quadratic_witness, s_rank, Witness};
use srank_core::symmetry::{antisym_inner, sym_inner, vee, wedge};
use srank_core::tableau::{enumerate_partitions, enumerate_tableaux};
use srank_core::young::{alpha_is_simple, alpha_simple, young_projector};
use srank_core::{CMatrix, Error, Partition, Permutation, SymmetryClass, Tensor, YoungTableau};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn contraction_agrees_with_the_inner_product_oracle() {
    let mut generator = rng(0xACE_0001);
    for (n, k) in [(2usize, 3usize), (3, 3), (3, 4), (4, 2), (5, 3)] {
        for class in [
            SymmetryClass::General,
            SymmetryClass::Symmetric,
            SymmetryClass::Antisymmetric,
        ] {
            if class == SymmetryClass::Antisymmetric && k > n {
                continue;
            }
            let u = random_class_tensor(&mut generator, n, k, &class);
            for l in 1..k {
                let probe = random_tensor(&mut generator, n, l);
                let fast = contract(&DualTensor::new(probe.clone()), &u).unwrap();
                let slow = contraction_oracle(&probe, &u);
                assert!(
                    fast.distance(&slow).unwrap() <= 1e-12 * u.norm() * probe.norm(),
                    "paths disagree at n={n} k={k} l={l} class={}",
                    class.name()
                );
            }
        }
    }
}

#[test]
fn pairing_identities_bridge_tensors_and_matrix_functions() {
    // ⟨∨fᵢ, ∨gᵢ⟩ computed two ways: a dense sum over n^k coefficients,
    // and a k×k permanent. Same for wedges and determinants.
    let mut generator = rng(0xACE_0002);
    for (n, k) in [(3usize, 2usize), (4, 3), (5, 3), (6, 4)] {
        let fs: Vec<Vec<Complex64>> = (0..k).map(|_| random_vector(&mut generator, n)).collect();
        let gs: Vec<Vec<Complex64>> = (0..k).map(|_| random_vector(&mut generator, n)).collect();

        let dense = vee(&fs).unwrap().inner_product(&vee(&gs).unwrap()).unwrap();
        let scale = dense.norm().max(1.0);
        assert!(
            (dense - sym_inner(&fs, &gs).unwrap()).norm() <= 1e-11 * scale,
            "permanent pairing at n={n} k={k}"
        );

        let dense = wedge(&fs)
            .unwrap()
            .inner_product(&wedge(&gs).unwrap())
            .unwrap();
        let scale = dense.norm().max(1.0);
        assert!(
            (dense - antisym_inner(&fs, &gs).unwrap()).norm() <= 1e-11 * scale,
            "determinant pairing at n={n} k={k}"
        );
    }
}

#[test]
fn svd_reconstructs_and_stays_orthonormal() {
    let mut generator = rng(0xACE_0003);
    for (rows, cols) in [(3usize, 3usize), (8, 5), (5, 8), (16, 16), (32, 7), (7, 32)] {
        let data: Vec<Complex64> = (0..rows * cols)
            .map(|_| random_complex(&mut generator))
            .collect();
        let a = CMatrix::from_vec(rows, cols, data).unwrap();
        let dec = svd(&a).unwrap();
        let err = dec.reconstruct().sub(&a).unwrap().frobenius_norm();
        assert!(
            err <= 1e-9 * a.frobenius_norm(),
            "reconstruction error {err} at {rows}x{cols}"
        );
        assert!(orthonormality_defect(&dec.u) < 1e-10);
        assert!(orthonormality_defect(&dec.v) < 1e-10);
        let mut sorted = dec.values.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_eq!(sorted, dec.values, "singular values must be descending");
    }
}

#[test]
fn young_projectors_intertwine_slotwise_unitaries() {
    // π_α (U^{⊗k} u) = U^{⊗k} (π_α u): the projector is built from slot
    // permutations, which commute with one-body rotations.
    let mut generator = rng(0xACE_0004);
    for k in 2..=4usize {
        let n = 3;
        let u = random_tensor(&mut generator, n, k);
        let q = random_unitary(&mut generator, n);
        for partition in enumerate_partitions(k).unwrap() {
            for tableau in enumerate_tableaux(&partition).unwrap() {
                let pi = young_projector(&tableau).unwrap();
                let a = pi.apply(&u.apply_slotwise(&q).unwrap()).unwrap();
                let b = pi.apply(&u).unwrap().apply_slotwise(&q).unwrap();
                assert!(
                    a.distance(&b).unwrap() <= 1e-10 * u.norm(),
                    "intertwining fails for {tableau:?}"
                );
            }
        }
    }
}

#[test]
fn verdicts_are_invariant_under_symmetry_transformations() {
    // Scalars and slotwise unitaries change neither the S-rank nor the
    // simplicity verdict, in any exchange class.
    let mut generator = rng(0xACE_0005);
    for class in [
        SymmetryClass::General,
        SymmetryClass::Symmetric,
        SymmetryClass::Antisymmetric,
    ] {
        for simple in [true, false] {
            let (n, k) = (4usize, 2usize);
            let u = if simple {
                random_simple(&mut generator, n, k, &class)
            } else {
                random_class_tensor(&mut generator, n, k, &class)
            };
            let rank = s_rank(&u, 1e-9).unwrap();
            let verdict = is_simple(&u, 1e-9).unwrap().simple;

            let scaled = u.scale(c(0.3, -1.7));
            assert_eq!(s_rank(&scaled, 1e-9).unwrap(), rank);
            assert_eq!(is_simple(&scaled, 1e-9).unwrap().simple, verdict);

            let q = random_unitary(&mut generator, n);
            let rotated = u.apply_slotwise(&q).unwrap();
            assert_eq!(s_rank(&rotated, 1e-9).unwrap(), rank);
            assert_eq!(is_simple(&rotated, 1e-9).unwrap().simple, verdict);
        }
    }

    // Young sectors: the verdict of a sector member survives a rotation.
    let alpha1 = YoungTableau::new(
        Partition::new(&[2, 1]).unwrap(),
        vec![vec![1, 2], vec![3]],
    )
    .unwrap();
    let x1 = random_vector(&mut generator, 3);
    let x2 = random_vector(&mut generator, 3);
    let v = alpha_simple(&alpha1, &[x1, x2], 1e-9).unwrap();
    let q = random_unitary(&mut generator, 3);
    let rotated = v.apply_slotwise(&q).unwrap();
    let before = alpha_is_simple(&alpha1, &v, 1e-9).unwrap();
    let after = alpha_is_simple(&alpha1, &rotated, 1e-9).unwrap();
    assert_eq!(before.simple, after.simple);
    assert_eq!(before.s_rank, after.s_rank);
    assert!(before.simple);
}

#[test]
fn witnesses_survive_small_perturbations() {
    // Entanglement is an open condition: a 1e−6 in-sector perturbation
    // moves the witness value by O(1e−6), so it remains conclusive.
    let mut generator = rng(0xACE_0006);

    // Symmetric: e₁∨e₂ plus noise keeps its product witness near ¼.
    let v = vee(&[
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
    ])
    .unwrap();
    let noise = random_class_tensor(&mut generator, 3, 2, &SymmetryClass::Symmetric);
    let noisy = v
        .add(&noise.scale(c(1e-6 / noise.norm(), 0.0)))
        .unwrap()
        .into_class(SymmetryClass::Symmetric, 1e-9)
        .unwrap();
    match quadratic_witness(&noisy, 1e-9).unwrap().unwrap() {
        Witness::Product { i, j, lhs, rhs, .. } => {
            assert_eq!(i, vec![1, 1]);
            assert_eq!(j, vec![2, 2]);
            assert!((rhs - lhs).norm() > 0.25 - 1e-4);
        }
        other => panic!("expected a product witness, got {other:?}"),
    }

    // Antisymmetric: e₁∧e₂ + e₃∧e₄ plus noise keeps its bracket near 1/12.
    let w = wedge(&[
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
    ])
    .unwrap()
    .add(&wedge(&[
        vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
    ])
    .unwrap())
    .unwrap();
    let noise = random_class_tensor(&mut generator, 4, 2, &SymmetryClass::Antisymmetric);
    let noisy = w
        .add(&noise.scale(c(1e-6 / noise.norm(), 0.0)))
        .unwrap()
        .into_class(SymmetryClass::Antisymmetric, 1e-9)
        .unwrap();
    match quadratic_witness(&noisy, 1e-9).unwrap().unwrap() {
        Witness::Bracket { value, .. } => {
            assert!((value - c(1.0 / 12.0, 0.0)).norm() < 1e-4);
        }
        other => panic!("expected a bracket witness, got {other:?}"),
    }
}

#[test]
fn map_classification_follows_reshuffle_parity() {
    let mut generator = rng(0xACE_0007);
    let n = 3;
    let coeffs: Vec<Complex64> = (0..n * n * n * n)
        .map(|_| random_complex(&mut generator))
        .collect();
    let phi = FourLegTensor::from_coeffs(n, coeffs).unwrap();

    // Classification demands self-adjointness (λ_{ijkl} = λ_{klij}), so
    // symmetrize under the pair swap first; the J-parity parts of a
    // self-adjoint map then land in the named classes, while the raw
    // generic tensor is in neither.
    let mut adj = FourLegTensor::zero(n).unwrap();
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                for l in 0..n {
                    adj.set(a, b, k, l, phi.get(k, l, a, b));
                }
            }
        }
    }
    let herm = phi
        .sub(&adj.scale(c(-1.0, 0.0)))
        .unwrap()
        .scale(c(0.5, 0.0));
    let plus = herm
        .sub(&jam_j(&herm).scale(c(-1.0, 0.0)))
        .unwrap()
        .scale(c(0.5, 0.0));
    let minus = herm.sub(&jam_j(&herm)).unwrap().scale(c(0.5, 0.0));
    assert_eq!(classify_map(&plus, 1e-9), MapClass::Bosonic);
    assert_eq!(classify_map(&minus, 1e-9), MapClass::Fermionic);
    assert_eq!(classify_map(&phi, 1e-9), MapClass::Neither);

    // Reshuffle algebra: J and J₂ are involutions, J₁ has order three,
    // and J₂∘J = J₁ — all exact coefficient permutations.
    assert_eq!(jam_j(&jam_j(&phi)), phi);
    assert_eq!(jam_j2(&jam_j2(&phi)), phi);
    let j1 = jam_j1(&phi);
    assert_eq!(jam_j2(&jam_j(&phi)), j1);
    assert_eq!(jam_j1(&jam_j1(&j1)), phi);
}

#[test]
fn json_round_trips_are_exact_and_stable() {
    let mut generator = rng(0xACE_0008);

    for class in [
        SymmetryClass::General,
        SymmetryClass::Symmetric,
        SymmetryClass::Antisymmetric,
    ] {
        let u = random_class_tensor(&mut generator, 3, 3, &class);
        let text = serialize_tensor(&u);
        let back = parse_tensor(&text, 1e-9).unwrap();
        assert_eq!(back, u, "value round trip for {}", class.name());
        assert_eq!(serialize_tensor(&back), text, "byte stability");
    }

    // Sparse tensors drop their zero entries but parse back equal.
    let mut u = Tensor::zero(4, 2).unwrap();
    u = u
        .add(&Tensor::simple(&[
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, -2.5), c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap())
        .unwrap();
    let text = serialize_tensor(&u);
    assert_eq!(parse_tensor(&text, 1e-9).unwrap(), u);

    let tableau = YoungTableau::new(
        Partition::new(&[3, 1]).unwrap(),
        vec![vec![1, 3, 4], vec![2]],
    )
    .unwrap();
    let text = serialize_tableau(&tableau);
    assert_eq!(parse_tableau(&text).unwrap(), tableau);

    let coeffs: Vec<Complex64> = (0..16).map(|_| random_complex(&mut generator)).collect();
    let phi = FourLegTensor::from_coeffs(2, coeffs).unwrap();
    let text = serialize_four_leg(&phi);
    assert_eq!(parse_four_leg(&text).unwrap(), phi);
    assert_eq!(serialize_four_leg(&parse_four_leg(&text).unwrap()), text);
}

#[test]
fn permutation_action_is_a_right_action_on_indices() {
    let mut generator = rng(0xACE_0009);
    let u = random_tensor(&mut generator, 3, 4);
    let perms = Permutation::all(4).unwrap();
    for a in perms.iter().step_by(5) {
        for b in perms.iter().step_by(7) {
            let left = u.permute(a).unwrap().permute(b).unwrap();
            let right = u.permute(&a.then(b)).unwrap();
            assert!(left.distance(&right).unwrap() == 0.0, "composition law");
        }
    }
}

#[test]
fn decompositions_scale_homogeneously() {
    let mut generator = rng(0xACE_000A);
    let factor = c(0.0, 2.0); // modulus 2, pure phase twist
    let n = 5;

    let u = random_tensor(&mut generator, n, 2);
    let base = schmidt(&u, 1e-9).unwrap();
    let scaled = schmidt(&u.scale(factor), 1e-9).unwrap();
    assert_eq!(base.lambdas.len(), scaled.lambdas.len());
    for (a, b) in base.lambdas.iter().zip(&scaled.lambdas) {
        assert!((2.0 * a - b).abs() < 1e-9 * base.lambdas[0]);
    }

    let v = srank_core::symmetry::symmetrize(&random_tensor(&mut generator, n, 2)).unwrap();
    let base = takagi(&v, 1e-9).unwrap();
    let scaled = takagi(&v.scale(factor), 1e-9).unwrap();
    assert_eq!(base.lambdas.len(), scaled.lambdas.len());
    for (a, b) in base.lambdas.iter().zip(&scaled.lambdas) {
        assert!((2.0 * a - b).abs() < 1e-9 * base.lambdas[0]);
    }

    let w = srank_core::symmetry::antisymmetrize(&random_tensor(&mut generator, n, 2)).unwrap();
    let base = youla(&w, 1e-9).unwrap();
    let scaled = youla(&w.scale(factor), 1e-9).unwrap();
    assert_eq!(base.lambdas.len(), scaled.lambdas.len());
    for (a, b) in base.lambdas.iter().zip(&scaled.lambdas) {
        assert!((2.0 * a - b).abs() < 1e-9 * base.lambdas[0]);
    }
}

#[test]
fn failure_modes_carry_typed_errors() {
    let zero = Tensor::zero(3, 2).unwrap();
    assert!(matches!(s_rank(&zero, 1e-9), Err(Error::ZeroTensor)));

    let unnormalized = Tensor::simple(&[
        vec![c(2.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0)],
    ])
    .unwrap();
    assert!(matches!(
        overlap_score(&unnormalized, 1e-9),
        Err(Error::NotNormalized { .. })
    ));

    assert!(matches!(
        parse_tensor(r#"{"n":2,"k":2,"symmetry":"young","entries":[]}"#, 1e-9),
        Err(Error::Parse { .. })
    ));

    let probe = DualTensor::new(Tensor::zero(3, 3).unwrap());
    assert!(matches!(
        contract(&probe, &zero),
        Err(Error::OrderMismatch { .. })
    ));

    // A state outside the requested sector is rejected with the measured
    // deviation.
    let alpha1 = YoungTableau::new(
        Partition::new(&[2, 1]).unwrap(),
        vec![vec![1, 2], vec![3]],
    )
    .unwrap();
    let product = Tensor::simple(&[
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
    ])
    .unwrap();
    assert!(matches!(
        alpha_is_simple(&alpha1, &product, 1e-9),
        Err(Error::NotInIrreducible { .. })
    ));
}
