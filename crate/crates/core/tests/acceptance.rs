//! Acceptance suite: ten classification criteria, one test per criterion,
//! each ending in a single PASS line. Tolerances are pinned in the code
//! of each criterion and must not be loosened.

mod common;

use num_complex::Complex64;

use common::{
    contraction_oracle, random_class_tensor, random_complex, random_simple, random_tensor,
    random_unitary, random_vector, rng,
};
use srank_core::contraction::{contract, contraction_matrix, DualTensor};
use srank_core::decomp::{schmidt, takagi, youla};
use srank_core::jamiolkowski::{
    jam_j, jam_j1, jam_j2, map_rank, pure_state_projector, state_to_map, FourLegTensor,
};
use srank_core::linalg::{matrix_rank, orthonormality_defect, svd};
use srank_core::srank::{
    is_simple, overlap_score, quadratic_witness, s_rank, tensor_square_test, Witness,
};
use srank_core::symmetry::{induced_basis, sector_dimension, vee, wedge};
use srank_core::tableau::{enumerate_partitions, enumerate_tableaux};
use srank_core::young::{
    alpha_is_simple, alpha_simple, central_symmetrizer, mu_constant, young_projector,
    young_symmetrizer,
};
use srank_core::{CMatrix, Partition, Permutation, SymmetryClass, Tensor, YoungTableau};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn e(n: usize, i: usize) -> Vec<Complex64> {
    let mut v = vec![c(0.0, 0.0); n];
    v[i] = c(1.0, 0.0);
    v
}

/// f = e₁ + e₂ + 2e₃ in C³.
fn f3() -> Vec<Complex64> {
    vec![c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]
}

/// The quartic power f⊗f⊗f⊗f of f = e₁ + e₂ + 2e₃, tagged symmetric.
fn quartic() -> Tensor {
    Tensor::simple(&[f3(), f3(), f3(), f3()])
        .unwrap()
        .into_class(SymmetryClass::Symmetric, 1e-12)
        .unwrap()
}

/// w₁ = e₁∧e₂ + e₂∧e₃ (simple: equals e₂∧(e₃−e₁)).
fn pair_chain() -> Tensor {
    wedge(&[e(3, 0), e(3, 1)])
        .unwrap()
        .add(&wedge(&[e(3, 1), e(3, 2)]).unwrap())
        .unwrap()
}

/// w₂ = e₁∧e₂ + e₃∧e₄ (entangled).
fn disjoint_pairs() -> Tensor {
    wedge(&[e(4, 0), e(4, 1)])
        .unwrap()
        .add(&wedge(&[e(4, 2), e(4, 3)]).unwrap())
        .unwrap()
}

#[test]
fn criterion_01_golden_s_ranks() {
    // e₁∨e₂ has S-rank 2.
    let v = vee(&[e(3, 0), e(3, 1)]).unwrap();
    assert_eq!(s_rank(&v, 1e-9).unwrap(), 2);

    // The quartic power has S-rank 1, and the factor is recoverable: the
    // top right-singular vector of the slot-1 flattening is conj(f)/‖f‖,
    // so rebuilding its fourth power reproduces u up to phase, < 1e−9.
    let u = quartic();
    assert_eq!(s_rank(&u, 1e-9).unwrap(), 1);
    let m = contraction_matrix(&u, 0).unwrap();
    let dec = svd(&m).unwrap();
    let factor: Vec<Complex64> = dec.v.column(0).iter().map(|z| z.conj()).collect();
    let rebuilt = Tensor::simple(&[
        factor.clone(),
        factor.clone(),
        factor.clone(),
        factor.clone(),
    ])
    .unwrap()
    .normalized()
    .unwrap();
    let unit = u.normalized().unwrap();
    let phase = unit.inner_product(&rebuilt).unwrap();
    assert!(
        (phase.norm() - 1.0).abs() < 1e-9,
        "factorization misses: |<u, f^4>| = {}",
        phase.norm()
    );
    let aligned = rebuilt.scale(phase.conj() / phase.norm());
    assert!(unit.distance(&aligned).unwrap() < 1e-9);
    // And the recovered factor is parallel to e₁ + e₂ + 2e₃.
    let f_unit = Tensor::vector(&f3()).unwrap().normalized().unwrap();
    let factor_t = Tensor::vector(&factor).unwrap();
    let cos = f_unit.inner_product(&factor_t).unwrap().norm() / factor_t.norm();
    assert!((cos - 1.0).abs() < 1e-12);

    // e₁∧e₂ + e₂∧e₃ has S-rank 2 = k (simple); e₁∧e₂ + e₃∧e₄ has 4.
    let w1 = pair_chain();
    assert_eq!(s_rank(&w1, 1e-9).unwrap(), 2);
    assert!(is_simple(&w1, 1e-9).unwrap().simple);
    let w2 = disjoint_pairs();
    assert_eq!(s_rank(&w2, 1e-9).unwrap(), 4);
    assert!(!is_simple(&w2, 1e-9).unwrap().simple);

    println!("criterion 01 (golden S-ranks): PASS");
}

#[test]
fn criterion_02_quadratic_witness_goldens() {
    // e₁∨e₂: the lexicographically first witness is u^{11}u^{22} = 0
    // against u^{12}u^{21} = ¼.
    let v = vee(&[e(3, 0), e(3, 1)]).unwrap();
    match quadratic_witness(&v, 1e-9).unwrap().unwrap() {
        Witness::Product { i, j, lhs, rhs, .. } => {
            assert_eq!(i, vec![1, 1]);
            assert_eq!(j, vec![2, 2]);
            assert!(lhs.norm() <= 1e-12);
            assert!((rhs - c(0.25, 0.0)).norm() <= 1e-12);
        }
        other => panic!("expected a product witness, got {other:?}"),
    }

    // The quartic power admits no witness (all products are powers of 2
    // counting the 3-components, which index swaps preserve).
    assert!(quadratic_witness(&quartic(), 1e-9).unwrap().is_none());

    // w₁: every bracket vanishes; w₂: the first bracket is exactly 1/12.
    assert!(quadratic_witness(&pair_chain(), 1e-9).unwrap().is_none());
    match quadratic_witness(&disjoint_pairs(), 1e-9).unwrap().unwrap() {
        Witness::Bracket { i, j, value } => {
            assert_eq!(i, vec![1, 2, 3]);
            assert_eq!(j, vec![4]);
            assert!((value - c(1.0 / 12.0, 0.0)).norm() <= 1e-12);
        }
        other => panic!("expected a bracket witness, got {other:?}"),
    }

    println!("criterion 02 (quadratic-criterion goldens): PASS");
}

#[test]
fn criterion_03_contraction_goldens() {
    let u = quartic();
    let f = Tensor::vector(&f3()).unwrap();

    // ι_{e₂⊗e₂⊗e₂}(u) = e₁ + e₂ + 2e₃ to 1e−10 componentwise.
    let probe = DualTensor::new(Tensor::simple(&[e(3, 1), e(3, 1), e(3, 1)]).unwrap());
    let out = contract(&probe, &u).unwrap();
    assert!(out.distance(&f).unwrap() < 1e-10);

    // ι_{e₁∨e₁∨e₃}(u) = 2(e₁ + e₂ + 2e₃) to 1e−10.
    let probe = DualTensor::new(vee(&[e(3, 0), e(3, 0), e(3, 2)]).unwrap());
    let out = contract(&probe, &u).unwrap();
    assert!(out.distance(&f.scale(c(2.0, 0.0))).unwrap() < 1e-10);

    // The three single-vector contractions of w₁ = e₁∧e₂ + e₂∧e₃, exact:
    // ι_{e₁}w = ½e₂, ι_{e₂}w = ½(e₃ − e₁), ι_{e₃}w = −½e₂.
    let w = pair_chain();
    let cases: [(usize, Vec<Complex64>); 3] = [
        (0, vec![c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.0)]),
        (1, vec![c(-0.5, 0.0), c(0.0, 0.0), c(0.5, 0.0)]),
        (2, vec![c(0.0, 0.0), c(-0.5, 0.0), c(0.0, 0.0)]),
    ];
    for (i, expected) in cases {
        let probe = Tensor::vector(&e(3, i)).unwrap();
        let out = contract(&DualTensor::new(probe.clone()), &w).unwrap();
        let expected = Tensor::vector(&expected).unwrap();
        // The arithmetic is exact in binary floating point.
        assert!(out.distance(&expected).unwrap() <= 1e-15);
        // Cross-check through the independent inner-product oracle.
        assert!(out.distance(&contraction_oracle(&probe, &w)).unwrap() <= 1e-15);
    }

    println!("criterion 03 (contraction goldens): PASS");
}

#[test]
fn criterion_04_dimension_formulas() {
    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    }

    for n in 1..=5 {
        for k in 1..=4 {
            let sym = induced_basis(n, k, &SymmetryClass::Symmetric).unwrap();
            assert_eq!(sym.len(), binom(n + k - 1, k), "sym count at n={n}, k={k}");
            assert_eq!(
                sector_dimension(n, k, &SymmetryClass::Symmetric).unwrap(),
                sym.len()
            );
            let anti = induced_basis(n, k, &SymmetryClass::Antisymmetric).unwrap();
            assert_eq!(anti.len(), binom(n, k), "antisym count at n={n}, k={k}");
            assert_eq!(
                sector_dimension(n, k, &SymmetryClass::Antisymmetric).unwrap(),
                anti.len()
            );
        }
    }

    // n = 3, k = 3: blocks of dimension 10, 1, and 8 + 8 (isotypic 16).
    let sym3 = young_projector(&Partition::new(&[3]).unwrap().canonical_tableau()).unwrap();
    assert_eq!(sym3.trace_on(3), srank_core::young::Coeff::new(10, 1));
    let anti3 = young_projector(&Partition::new(&[1, 1, 1]).unwrap().canonical_tableau()).unwrap();
    assert_eq!(anti3.trace_on(3), srank_core::young::Coeff::new(1, 1));
    let mixed = Partition::new(&[2, 1]).unwrap();
    for tableau in [
        YoungTableau::new(mixed.clone(), vec![vec![1, 2], vec![3]]).unwrap(),
        YoungTableau::new(mixed.clone(), vec![vec![1, 3], vec![2]]).unwrap(),
    ] {
        let pi = young_projector(&tableau).unwrap();
        assert_eq!(pi.trace_on(3), srank_core::young::Coeff::new(8, 1));
    }
    let central = central_symmetrizer(&mixed).unwrap();
    assert_eq!(central.trace_on(3), srank_core::young::Coeff::new(16, 1));

    println!("criterion 04 (dimension formulas): PASS");
}

#[test]
fn criterion_05_equivalence_oracle_suite() {
    // Four independent simplicity tests must agree on every sample:
    // S-rank minimality, the tensor-square test, absence of a quadratic
    // witness, and (general/symmetric) overlap score 1 within 1e−7.
    let mut generator = rng(0x5EED_0005);
    let mut trials = 0usize;

    let check = |u: &Tensor, constructed_simple: bool, label: &str| {
        let verdict = is_simple(u, 1e-9).unwrap();
        let square = tensor_square_test(u, 1e-9).unwrap();
        let witness = quadratic_witness(u, 1e-9).unwrap();
        assert_eq!(
            verdict.simple, square,
            "{label}: rank path {} vs tensor-square {}",
            verdict.simple, square
        );
        assert_eq!(
            verdict.simple,
            witness.is_none(),
            "{label}: rank path vs witness {witness:?}"
        );
        if matches!(
            u.symmetry(),
            SymmetryClass::General | SymmetryClass::Symmetric
        ) {
            let score = overlap_score(&u.normalized().unwrap(), 1e-9).unwrap();
            assert_eq!(
                verdict.simple,
                (score - 1.0).abs() <= 1e-7,
                "{label}: rank path vs overlap {score}"
            );
        }
        if constructed_simple {
            assert!(verdict.simple, "{label}: constructed simple misclassified");
        }
    };

    // General and symmetric classes: all n, k in 2..=4.
    for class in [SymmetryClass::General, SymmetryClass::Symmetric] {
        let mut count = 0;
        for n in 2..=4 {
            for k in 2..=4 {
                for t in 0..13 {
                    let simple = t % 2 == 0;
                    let u = if simple {
                        random_simple(&mut generator, n, k, &class)
                    } else {
                        random_class_tensor(&mut generator, n, k, &class)
                    };
                    check(&u, simple, &format!("{} n={n} k={k} t={t}", class.name()));
                    count += 1;
                }
            }
        }
        assert!(count >= 100);
        trials += count;
    }

    // Antisymmetric class: n ≥ k so the sector is nonzero. The square
    // test enumerates (k+1)! permutations of an order-2k square, so the
    // k = n = 4 cell (a one-dimensional sector) gets fewer trials.
    let mut count = 0;
    for (n, k, per_cell) in [
        (2usize, 2usize, 40usize),
        (3, 2, 40),
        (4, 2, 40),
        (3, 3, 40),
        (4, 3, 40),
        (4, 4, 4),
    ] {
        for t in 0..per_cell {
            let simple = t % 2 == 0;
            let u = if simple {
                random_simple(&mut generator, n, k, &SymmetryClass::Antisymmetric)
            } else {
                random_class_tensor(&mut generator, n, k, &SymmetryClass::Antisymmetric)
            };
            check(&u, simple, &format!("antisymmetric n={n} k={k} t={t}"));
            count += 1;
        }
    }
    assert!(count >= 200);
    trials += count;

    println!("criterion 05 (equivalence oracle, {trials} trials): PASS");
}

#[test]
fn criterion_06_schmidt_rank_equals_s_rank() {
    let mut generator = rng(0x5EED_0006);
    let mut trials = 0;
    for n in 2..=8 {
        // Constructed ranks 1..n and generic dense samples.
        for r in 1..=n {
            for _ in 0..3 {
                let left: Vec<Vec<Complex64>> =
                    (0..r).map(|_| random_vector(&mut generator, n)).collect();
                let right: Vec<Vec<Complex64>> =
                    (0..r).map(|_| random_vector(&mut generator, n)).collect();
                let mut u = Tensor::zero(n, 2).unwrap();
                for s in 0..r {
                    u = u
                        .add(&Tensor::simple(&[left[s].clone(), right[s].clone()]).unwrap())
                        .unwrap();
                }
                let dec = schmidt(&u, 1e-9).unwrap();
                let rank = s_rank(&u, 1e-9).unwrap();
                assert_eq!(dec.lambdas.len(), rank, "constructed rank at n={n}, r={r}");
                assert_eq!(rank, r, "random factors must be independent");
                trials += 1;
            }
        }
        for _ in 0..15 {
            let u = random_tensor(&mut generator, n, 2);
            let dec = schmidt(&u, 1e-9).unwrap();
            let rank = s_rank(&u, 1e-9).unwrap();
            assert_eq!(dec.lambdas.len(), rank, "generic sample at n={n}");
            // Orthonormal factor systems.
            let left = CMatrix::from_columns(&dec.left).unwrap();
            let right = CMatrix::from_columns(&dec.right).unwrap();
            assert!(orthonormality_defect(&left) < 1e-10);
            assert!(orthonormality_defect(&right) < 1e-10);
            assert!(dec.residual < 1e-9 * u.norm());
            trials += 1;
        }
    }
    assert!(trials >= 200);
    println!("criterion 06 (Schmidt rank = S-rank, {trials} trials): PASS");
}

#[test]
fn criterion_07_decomposition_residuals() {
    let mut generator = rng(0x5EED_0007);

    for n in 2..=8 {
        // Symmetric: dense random, symmetrized.
        for _ in 0..6 {
            let raw = random_tensor(&mut generator, n, 2);
            let v = srank_core::symmetry::symmetrize(&raw).unwrap();
            let dec = takagi(&v, 1e-9).unwrap();
            assert!(
                dec.residual < 1e-8 * v.norm().max(1.0),
                "takagi residual {} at n={n}",
                dec.residual
            );
            assert!(orthonormality_defect(&CMatrix::from_columns(&dec.vectors).unwrap()) < 1e-10);
            // Lambdas agree with the singular values.
            let svals = svd(&srank_core::decomp::coefficient_matrix(&v).unwrap())
                .unwrap()
                .values;
            for (a, b) in dec.lambdas.iter().zip(&svals) {
                assert!((a - b).abs() < 1e-9 * svals[0]);
            }
        }

        // Symmetric with a forced degenerate spectrum.
        let q = random_unitary(&mut generator, n);
        let mut a = Tensor::zero(n, 2).unwrap();
        for r in 0..n.min(4) {
            let col = q.column(r);
            let lam = if r < 2 { 1.0 } else { 0.25 };
            let outer = Tensor::simple(&[col.clone(), col.clone()]).unwrap();
            a = a.add(&outer.scale(c(lam, 0.0))).unwrap();
        }
        let a = a.into_class(SymmetryClass::Symmetric, 1e-9).unwrap();
        let dec = takagi(&a, 1e-9).unwrap();
        assert!(dec.residual < 1e-8, "degenerate takagi at n={n}");
        assert!(orthonormality_defect(&CMatrix::from_columns(&dec.vectors).unwrap()) < 1e-10);

        // Antisymmetric: dense random, antisymmetrized; Slater rank law.
        for _ in 0..6 {
            let raw = random_tensor(&mut generator, n, 2);
            let w = srank_core::symmetry::antisymmetrize(&raw).unwrap();
            if w.norm() < 1e-6 {
                continue;
            }
            let dec = youla(&w, 1e-9).unwrap();
            assert!(
                dec.residual < 1e-8 * w.norm().max(1.0),
                "youla residual {} at n={n}",
                dec.residual
            );
            assert!(orthonormality_defect(&CMatrix::from_columns(&dec.vectors).unwrap()) < 1e-10);
            let rank = s_rank(&w, 1e-9).unwrap();
            assert_eq!(rank, 2 * dec.lambdas.len(), "slater rank law at n={n}");
        }

        // Antisymmetric with equal pair weights (one degenerate cluster).
        if n >= 4 {
            let q = random_unitary(&mut generator, n);
            let w = wedge(&[q.column(0), q.column(1)])
                .unwrap()
                .add(&wedge(&[q.column(2), q.column(3)]).unwrap())
                .unwrap();
            let dec = youla(&w, 1e-9).unwrap();
            assert_eq!(dec.lambdas.len(), 2);
            assert!(dec.residual < 1e-8, "degenerate youla at n={n}");
            assert_eq!(s_rank(&w, 1e-9).unwrap(), 4);
        }
    }

    println!("criterion 07 (decomposition residuals): PASS");
}

#[test]
fn criterion_08_young_algebra() {
    // c_α ∘ c_α = μ(α) c_α exactly, for every tableau with k ≤ 4.
    for k in 1..=4 {
        for partition in enumerate_partitions(k).unwrap() {
            for tableau in enumerate_tableaux(&partition).unwrap() {
                let csym = young_symmetrizer(&tableau).unwrap();
                let square = csym.compose(&csym).unwrap();
                let mu = mu_constant(&tableau).unwrap();
                assert_eq!(square, csym.scale(mu), "c·c = μc for {tableau:?}");
            }
        }
    }

    // Central family: complete and mutually orthogonal, exactly.
    for k in 2..=4 {
        let partitions = enumerate_partitions(k).unwrap();
        let mut total = srank_core::young::SymmetrizerOperator::zero(k);
        let centrals: Vec<_> = partitions
            .iter()
            .map(|p| central_symmetrizer(p).unwrap())
            .collect();
        for (i, eps_i) in centrals.iter().enumerate() {
            total = total.add(eps_i).unwrap();
            for eps_j in centrals.iter().skip(i + 1) {
                assert!(
                    eps_i.compose(eps_j).unwrap().is_zero(),
                    "orthogonality at k={k}"
                );
            }
        }
        assert_eq!(
            total,
            srank_core::young::SymmetrizerOperator::one(k),
            "completeness at k={k}"
        );
        // Materialized at n = 3: applying Σ ε_λ to a random tensor is the
        // identity to 1e−12.
        let mut generator = rng(0x5EED_0008 + k as u64);
        let u = random_tensor(&mut generator, 3, k);
        let mut acc = Tensor::zero(3, k).unwrap();
        for eps in &centrals {
            acc = acc.add(&eps.apply(&u).unwrap()).unwrap();
        }
        assert!(acc.distance(&u).unwrap() < 1e-12 * u.norm());
    }

    // μ(λ)·m(λ) = k! with the multiplicity m read off exact traces at
    // n = 4 (all sectors nonzero there); cross-checked at n = 3 where the
    // sector survives.
    for k in 1..=4 {
        let factorial: i64 = (1..=k as i64).product();
        for partition in enumerate_partitions(k).unwrap() {
            let tableau = partition.canonical_tableau();
            let mu = mu_constant(&tableau).unwrap();
            let central = central_symmetrizer(&partition).unwrap();
            let pi = young_projector(&tableau).unwrap();
            for n in [3usize, 4] {
                let dim = pi.trace_on(n);
                if dim == srank_core::young::Coeff::new(0, 1) {
                    continue;
                }
                let multiplicity = central.trace_on(n) / dim;
                assert_eq!(
                    mu * multiplicity,
                    srank_core::young::Coeff::new(factorial, 1),
                    "μ·m = k! for {partition:?} at n={n}"
                );
            }
        }
    }

    // The two (2,1) projectors match their printed four-term expansions
    // coefficientwise.
    let third = srank_core::young::Coeff::new(1, 3);
    let alpha1 = YoungTableau::new(
        Partition::new(&[2, 1]).unwrap(),
        vec![vec![1, 2], vec![3]],
    )
    .unwrap();
    let pi1 = young_projector(&alpha1).unwrap();
    let id = Permutation::identity(3);
    let s12 = Permutation::from_one_based(&[2, 1, 3]).unwrap();
    let s13 = Permutation::from_one_based(&[3, 2, 1]).unwrap();
    let c132 = Permutation::from_one_based(&[3, 1, 2]).unwrap();
    let c123 = Permutation::from_one_based(&[2, 3, 1]).unwrap();
    assert_eq!(pi1.terms().len(), 4);
    assert_eq!(pi1.coefficient(&id), third);
    assert_eq!(pi1.coefficient(&s12), third);
    assert_eq!(pi1.coefficient(&s13), -third);
    assert_eq!(pi1.coefficient(&c132), -third);

    let alpha2 = YoungTableau::new(
        Partition::new(&[2, 1]).unwrap(),
        vec![vec![1, 3], vec![2]],
    )
    .unwrap();
    let pi2 = young_projector(&alpha2).unwrap();
    assert_eq!(pi2.terms().len(), 4);
    assert_eq!(pi2.coefficient(&id), third);
    assert_eq!(pi2.coefficient(&s13), third);
    assert_eq!(pi2.coefficient(&s12), -third);
    assert_eq!(pi2.coefficient(&c123), -third);

    println!("criterion 08 (Young algebra): PASS");
}

#[test]
fn criterion_09_alpha_simple_states() {
    let alpha1 = YoungTableau::new(
        Partition::new(&[2, 1]).unwrap(),
        vec![vec![1, 2], vec![3]],
    )
    .unwrap();

    // alpha_simple(α₁, (e₁, e₂)) ∝ e₁⊗e₁⊗e₂ − e₂⊗e₁⊗e₁.
    let v = alpha_simple(&alpha1, &[e(3, 0), e(3, 1)], 1e-9).unwrap();
    let expected = Tensor::simple(&[e(3, 0), e(3, 0), e(3, 1)])
        .unwrap()
        .sub(&Tensor::simple(&[e(3, 1), e(3, 0), e(3, 0)]).unwrap())
        .unwrap();
    let cosine = v.inner_product(&expected).unwrap().norm() / (v.norm() * expected.norm());
    assert!(cosine > 1.0 - 1e-10, "cosine {cosine}");

    // It classifies as simple with S-rank 2 = number of rows.
    let verdict = alpha_is_simple(&alpha1, &v, 1e-9).unwrap();
    assert!(verdict.simple);
    assert_eq!(verdict.s_rank, 2);
    assert_eq!(verdict.minimal_rank, 2);

    // Construction on random independent vectors stays simple.
    let mut generator = rng(0x5EED_0009);
    for _ in 0..10 {
        let x1 = random_vector(&mut generator, 3);
        let x2 = random_vector(&mut generator, 3);
        let s = alpha_simple(&alpha1, &[x1, x2], 1e-9).unwrap();
        let verdict = alpha_is_simple(&alpha1, &s, 1e-9).unwrap();
        assert!(verdict.simple);
        assert_eq!(verdict.s_rank, 2);
    }

    // A generic element of the sector has S-rank 3: project random
    // tensors with π_{α₁}.
    let pi = young_projector(&alpha1).unwrap();
    for t in 0..10 {
        let u = pi.apply(&random_tensor(&mut generator, 3, 3)).unwrap();
        assert!(u.norm() > 1e-6);
        let verdict = alpha_is_simple(&alpha1, &u, 1e-9).unwrap();
        assert_eq!(verdict.s_rank, 3, "generic sector element, trial {t}");
        assert!(!verdict.simple);
    }

    // Same conclusion for v + (unitarily rotated v): the rotation keeps
    // the sector, the sum breaks simplicity.
    let q = random_unitary(&mut generator, 3);
    let rotated = v.apply_slotwise(&q).unwrap();
    let sum = v.add(&rotated).unwrap();
    let verdict = alpha_is_simple(&alpha1, &sum, 1e-9).unwrap();
    assert!(!verdict.simple);
    assert_eq!(verdict.s_rank, 3);

    println!("criterion 09 (alpha-simple states): PASS");
}

#[test]
fn criterion_10_map_rank_law() {
    let mut generator = rng(0x5EED_0010);

    // Bosonic: v = Σ λ_a u_a ⊗ u_a with orthonormal u_a → map rank r².
    for r in 1..=3usize {
        for n in [2 * r.max(1), 6, 8] {
            if n < r {
                continue;
            }
            let q = random_unitary(&mut generator, n);
            let mut v = Tensor::zero(n, 2).unwrap();
            for a in 0..r {
                let col = q.column(a);
                let lam = 1.0 + a as f64;
                let outer = Tensor::simple(&[col.clone(), col.clone()]).unwrap();
                v = v.add(&outer.scale(c(lam, 0.0))).unwrap();
            }
            let v = v.into_class(SymmetryClass::Symmetric, 1e-9).unwrap();
            let phi = state_to_map(&v, 1e-9).unwrap();
            assert_eq!(map_rank(&phi, 1e-9).unwrap(), r * r, "bosonic r={r} n={n}");
            // Round trip to the projector.
            let rho = pure_state_projector(&v).unwrap();
            assert!(jam_j1(&phi).distance(&rho).unwrap() < 1e-10);
        }
    }

    // Fermionic: w = Σ λ_a f_a ∧ g_a on 2r orthonormal vectors → 4r².
    for r in 1..=3usize {
        for n in [2 * r, 6, 8] {
            if n < 2 * r {
                continue;
            }
            let q = random_unitary(&mut generator, n);
            let mut w = Tensor::zero(n, 2).unwrap();
            for a in 0..r {
                let lam = 1.0 + (a as f64) * 0.5;
                let block = wedge(&[q.column(2 * a), q.column(2 * a + 1)]).unwrap();
                w = w.add(&block.scale(c(lam, 0.0))).unwrap();
            }
            let w = w.into_class(SymmetryClass::Antisymmetric, 1e-9).unwrap();
            let phi = state_to_map(&w, 1e-9).unwrap();
            assert_eq!(
                map_rank(&phi, 1e-9).unwrap(),
                4 * r * r,
                "fermionic r={r} n={n}"
            );
            let rho = pure_state_projector(&w).unwrap();
            assert!(jam_j1(&phi).distance(&rho).unwrap() < 1e-10);
        }
    }

    // Reshuffle triangle on a random four-leg tensor, exact.
    let n = 3;
    let coeffs: Vec<Complex64> = (0..n * n * n * n)
        .map(|_| random_complex(&mut generator))
        .collect();
    let phi = FourLegTensor::from_coeffs(n, coeffs).unwrap();
    assert_eq!(jam_j(&jam_j(&phi)), phi);
    assert_eq!(jam_j2(&jam_j(&phi)), jam_j1(&phi));

    println!("criterion 10 (map rank law): PASS");
}

// The flattening rank of a simple product must be 1 regardless of
// dimension.
#[test]
fn flattening_sanity() {
    let mut generator = rng(0x5EED_FFFF);
    let u = Tensor::simple(&[
        random_vector(&mut generator, 5),
        random_vector(&mut generator, 5),
        random_vector(&mut generator, 5),
    ])
    .unwrap();
    let m = contraction_matrix(&u, 1).unwrap();
    assert_eq!(matrix_rank(&m, 1e-9).unwrap(), 1);
}
