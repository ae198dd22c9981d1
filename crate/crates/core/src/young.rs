//! Young symmetrizers, tableau-sector projectors, and α-simple states.
//!
//! Elements of the group algebra `Q[S_k]` are kept exactly, as maps from
//! permutations to rationals. For a Young tableau `α` with row group `P`
//! (permutations preserving each row setwise) and column group `Q`, the
//! Young symmetrizer is
//!
//! `c_α = Σ_{τ∈P, σ∈Q} sgn(σ) · (τ∘σ)`,
//!
//! which satisfies `c_α · c_α = μ c_α` with `μ = k!/f^λ` (`f^λ` counts
//! standard tableaux of the shape). The sector projector is `π_α = c_α/μ`,
//! realized on tensors as `u ↦ Σ coeff(g) · U_g u`. Summing over **all**
//! `k!` numberings of a shape gives the central projector
//! `ε_λ = (1/μ²) Σ_T c_T` onto the full isotypic block; the family
//! `{ε_λ}` over partitions of `k` is a complete orthogonal set.
//!
//! A state of the sector `H^α = π_α((C^n)^{⊗k})` is *α-simple* when it is
//! `π_α(x_{α(1)} ⊗ … ⊗ x_{α(k)})` for independent vectors `x₁,…,x_r` (one
//! per row; `α(i)` is the row containing box `i`).

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{Partition, YoungTableau};
use crate::tensor::Tensor;

/// Exact scalar type of the group algebra.
pub type Coeff = Ratio<i64>;

/// Largest `k` accepted by [`central_symmetrizer`] (it sums `k!` tableaux).
pub const MAX_CENTRAL_K: usize = 6;

/// An exact element `Σ coeff(g) · g` of the group algebra `Q[S_k]`,
/// realized on tensors as `Σ coeff(g) · U_g`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizerOperator {
    k: usize,
    terms: BTreeMap<Permutation, Coeff>,
}

impl SymmetrizerOperator {
    /// The zero element of `Q[S_k]`.
    pub fn zero(k: usize) -> Self {
        SymmetrizerOperator {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The identity element (the identity permutation with coefficient 1).
    pub fn one(k: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Permutation::identity(k), Coeff::from_integer(1));
        SymmetrizerOperator { k, terms }
    }

    /// Degree `k` of the underlying symmetric group.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The nonzero terms, keyed by permutation.
    pub fn terms(&self) -> &BTreeMap<Permutation, Coeff> {
        &self.terms
    }

    /// The coefficient of one permutation (0 if absent).
    pub fn coefficient(&self, g: &Permutation) -> Coeff {
        self.terms.get(g).copied().unwrap_or_else(Coeff::zero)
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, g: Permutation, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::OrderMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let mut out = self.clone();
        for (g, &c) in &other.terms {
            out.insert(g.clone(), c);
        }
        Ok(out)
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-Coeff::from_integer(1)))
    }

    /// Exact scalar multiple.
    pub fn scale(&self, factor: Coeff) -> Self {
        if factor.is_zero() {
            return SymmetrizerOperator::zero(self.k);
        }
        SymmetrizerOperator {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(g, &c)| (g.clone(), c * factor))
                .collect(),
        }
    }

    /// Exact group-algebra product `(A·B) = Σ A_g B_h · (g∘h)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::OrderMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let mut out = SymmetrizerOperator::zero(self.k);
        for (g, &a) in &self.terms {
            for (h, &b) in &other.terms {
                out.insert(g.then(h), a * b);
            }
        }
        Ok(out)
    }

    /// Realizes the element on a tensor: `Σ coeff(g) · U_g u`.
    pub fn apply(&self, u: &Tensor) -> Result<Tensor> {
        if u.k() != self.k {
            return Err(Error::OrderMismatch {
                left: self.k,
                right: u.k(),
            });
        }
        let mut acc = Tensor::zero(u.n(), u.k())?;
        for (g, &c) in &self.terms {
            let factor = Complex64::new(ratio_to_f64(c), 0.0);
            acc = acc.add(&u.permute(g)?.scale(factor))?;
        }
        Ok(acc)
    }

    /// Exact trace of the realization on `(C^n)^{⊗k}`:
    /// `tr U_g = n^{#cycles(g)}`, so `tr = Σ coeff(g) · n^{#cycles(g)}`.
    pub fn trace_on(&self, n: usize) -> Coeff {
        let mut total = Coeff::zero();
        for (g, &c) in &self.terms {
            let mut power: i64 = 1;
            for _ in 0..cycle_count(g) {
                power *= n as i64;
            }
            total += c * Coeff::from_integer(power);
        }
        total
    }
}

fn cycle_count(g: &Permutation) -> usize {
    let k = g.degree();
    let mut seen = vec![false; k];
    let mut cycles = 0;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = g.image(p);
        }
    }
    cycles
}

fn ratio_to_f64(r: Coeff) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Enumerates the subgroup of `S_k` preserving each block setwise, as the
/// product of the full symmetric groups on the blocks. Blocks hold 1-based
/// box labels; boxes are tensor slots.
fn block_group(k: usize, blocks: &[Vec<usize>]) -> Result<Vec<Permutation>> {
    let mut members = vec![Permutation::identity(k)];
    for block in blocks {
        let arrangements = Permutation::all(block.len())?;
        let mut next = Vec::with_capacity(members.len() * arrangements.len());
        for base in &members {
            for arr in &arrangements {
                let mut images: Vec<usize> = base.images().to_vec();
                for (pos, &box_label) in block.iter().enumerate() {
                    images[box_label - 1] = block[arr.image(pos)] - 1;
                }
                next.push(Permutation::from_zero_based(&images)?);
            }
        }
        members = next;
    }
    Ok(members)
}

/// Row symmetrizer `a_α = Σ_{τ∈P} τ` of a tableau.
pub fn row_symmetrizer(tableau: &YoungTableau) -> Result<SymmetrizerOperator> {
    let mut out = SymmetrizerOperator::zero(tableau.k());
    for g in block_group(tableau.k(), tableau.rows())? {
        out.insert(g, Coeff::from_integer(1));
    }
    Ok(out)
}

/// Column antisymmetrizer `b_α = Σ_{σ∈Q} sgn(σ) σ` of a tableau.
pub fn column_antisymmetrizer(tableau: &YoungTableau) -> Result<SymmetrizerOperator> {
    let cols: Vec<Vec<usize>> = (0..tableau.partition().cols())
        .map(|c| tableau.column(c))
        .collect();
    let mut out = SymmetrizerOperator::zero(tableau.k());
    for g in block_group(tableau.k(), &cols)? {
        out.insert(g.clone(), Coeff::from_integer(g.sign() as i64));
    }
    Ok(out)
}

/// Young symmetrizer `c_α = a_α · b_α = Σ_{τ∈P,σ∈Q} sgn(σ)(τ∘σ)`.
pub fn young_symmetrizer(tableau: &YoungTableau) -> Result<SymmetrizerOperator> {
    row_symmetrizer(tableau)?.compose(&column_antisymmetrizer(tableau)?)
}

/// The proportionality constant `μ` in `c_α · c_α = μ c_α`.
///
/// `μ` equals the coefficient of the identity in `c_α·c_α`, because the
/// identity appears in `c_α` with coefficient exactly 1 (`τσ = e` forces
/// `τ = σ⁻¹ ∈ P ∩ Q = {e}`). It is always the integer `k!/f^λ`.
pub fn mu_constant(tableau: &YoungTableau) -> Result<Coeff> {
    let c = young_symmetrizer(tableau)?;
    let square = c.compose(&c)?;
    Ok(square.coefficient(&Permutation::identity(tableau.k())))
}

/// Sector projector `π_α = c_α / μ`, an exact idempotent of `Q[S_k]`.
pub fn young_projector(tableau: &YoungTableau) -> Result<SymmetrizerOperator> {
    let c = young_symmetrizer(tableau)?;
    let mu = mu_constant(tableau)?;
    Ok(c.scale(Coeff::from_integer(1) / mu))
}

/// Central projector `ε_λ = (1/μ²) Σ_T c_T` over **all** `k!` numberings
/// `T` of the shape `λ`; projects onto the full isotypic block.
pub fn central_symmetrizer(partition: &Partition) -> Result<SymmetrizerOperator> {
    let k = partition.k();
    if k > MAX_CENTRAL_K {
        return Err(Error::SizeGuardExceeded {
            operation: "central symmetrizer",
            limit: MAX_CENTRAL_K,
            requested: k,
        });
    }
    let mu = mu_constant(&partition.canonical_tableau())?;
    let mut sum = SymmetrizerOperator::zero(k);
    for tableau in crate::tableau::enumerate_tableaux(partition)? {
        sum = sum.add(&young_symmetrizer(&tableau)?)?;
    }
    Ok(sum.scale(Coeff::from_integer(1) / (mu * mu)))
}

/// Insertion map `i_α`: places `x_{α(s)}` in slot `s`, where `α(s)` is the
/// row containing box `s`. Takes one vector per row.
pub fn insert_vectors(tableau: &YoungTableau, vectors: &[Vec<Complex64>]) -> Result<Tensor> {
    let r = tableau.partition().rows();
    if vectors.len() != r {
        return Err(Error::OrderMismatch {
            left: r,
            right: vectors.len(),
        });
    }
    let slots: Vec<Vec<Complex64>> = (1..=tableau.k())
        .map(|b| vectors[tableau.row_of(b)].clone())
        .collect();
    Tensor::simple(&slots)
}

/// The α-simple state `π_α(i_α(x₁,…,x_r))`, tagged with its Young class.
///
/// Fails with [`Error::DependentVectors`] when the projection collapses
/// (below `eps` relative to the inserted product), which happens exactly
/// when the inserted vectors are linearly dependent.
pub fn alpha_simple(
    tableau: &YoungTableau,
    vectors: &[Vec<Complex64>],
    eps: f64,
) -> Result<Tensor> {
    let inserted = insert_vectors(tableau, vectors)?;
    let norm_in = inserted.norm();
    if norm_in == 0.0 {
        return Err(Error::DependentVectors);
    }
    let projector = young_projector(tableau)?;
    let projected = projector.apply(&inserted)?;
    if projected.norm() <= eps * norm_in {
        return Err(Error::DependentVectors);
    }
    projected.into_class(crate::tensor::SymmetryClass::Young(tableau.clone()), eps)
}

/// Verifies `u ∈ H^α` up to `eps·‖u‖`; returns the deviation `‖π_α u − u‖`.
pub fn sector_deviation(tableau: &YoungTableau, u: &Tensor) -> Result<f64> {
    let projector = young_projector(tableau)?;
    projector.apply(u)?.distance(u)
}

/// Classifies a state of the sector `H^α`: simple means S-rank equal to
/// the number of rows of the diagram.
///
/// Fails with [`Error::NotInIrreducible`] when `‖π_α u − u‖ > eps·‖u‖`.
pub fn alpha_is_simple(
    tableau: &YoungTableau,
    u: &Tensor,
    eps: f64,
) -> Result<crate::srank::Verdict> {
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let deviation = sector_deviation(tableau, u)?;
    let tolerance = eps * u.norm();
    if deviation > tolerance {
        return Err(Error::NotInIrreducible {
            deviation,
            tolerance,
        });
    }
    let tagged = u
        .clone()
        .into_class(crate::tensor::SymmetryClass::Young(tableau.clone()), eps)?;
    crate::srank::is_simple(&tagged, eps)
}
