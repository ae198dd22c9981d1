//! Permutations of tensor slots and iteration over the symmetric group.
//!
//! A [`Permutation`] `g` of degree `k` acts on an order-`k` tensor by carrying
//! the factor at position `g(p)` to position `p`:
//!
//! > U_g(f₁ ⊗ … ⊗ f_k) = f_{g(1)} ⊗ … ⊗ f_{g(k)},
//!
//! equivalently, on coefficients, `(g·u)^{i₁…i_k} = u^{i_{g⁻¹(1)} … i_{g⁻¹(k)}}`.
//! Applying `a` and then `b` equals applying the single permutation
//! [`Permutation::then`]`(a, b) = a ∘ b` (function composition,
//! `(a∘b)(p) = a(b(p))`); see the unit tests for the pinned identity.

use crate::error::{Error, Result};

/// A permutation of `{1, …, k}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[p] = g(p)`, all 0-based.
    images: Vec<usize>,
}

impl Permutation {
    /// Identity permutation of degree `k`.
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// Builds a permutation from 1-based images `g(1), …, g(k)`.
    ///
    /// Fails with [`Error::InvalidPermutation`] unless the list is a
    /// bijection of `1..=k`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &im in images {
            if im == 0 || im > k || seen[im - 1] {
                return Err(Error::InvalidPermutation {
                    images: images.to_vec(),
                });
            }
            seen[im - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&im| im - 1).collect(),
        })
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &im in images {
            if im >= k || seen[im] {
                return Err(Error::InvalidPermutation {
                    images: images.iter().map(|&i| i + 1).collect(),
                });
            }
            seen[im] = true;
        }
        Ok(Permutation {
            images: images.to_vec(),
        })
    }

    /// The transposition of slots `a` and `b` (0-based) in degree `k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Degree `k`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image `g(p)`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p]
    }

    /// 0-based image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image list, for display and serialization.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (p, &im) in self.images.iter().enumerate() {
            inv[im] = p;
        }
        Permutation { images: inv }
    }

    /// Function composition `self ∘ other`, i.e. `p ↦ self(other(p))`.
    ///
    /// Applying `a` to a tensor and then `b` equals applying `a.then(b)`
    /// in one step: `permute(permute(u, a), b) = permute(u, a.then(b))`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p]).collect(),
        }
    }

    /// Sign of the permutation: `+1` for even, `−1` for odd.
    pub fn sign(&self) -> i32 {
        // Count cycles; parity = (-1)^(k - #cycles).
        let k = self.images.len();
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
                p = self.images[p];
            }
        }
        if (k - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &im)| p == im)
    }

    /// Enumerates all `k!` permutations of degree `k` in lexicographic order
    /// of their image lists.
    ///
    /// Guarded to `k ≤ 10` (10! ≈ 3.6 million) to keep accidental blow-ups
    /// out of library code; every caller in this crate stays far below that.
    pub fn all(k: usize) -> Result<Vec<Permutation>> {
        const LIMIT: usize = 10;
        if k > LIMIT {
            return Err(Error::SizeGuardExceeded {
                operation: "symmetric group enumeration",
                limit: LIMIT,
                requested: k,
            });
        }
        let mut out = Vec::with_capacity((1..=k.max(1)).product());
        let mut images: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            // Next lexicographic image list.
            if !next_permutation(&mut images) {
                break;
            }
        }
        Ok(out)
    }
}

/// Advances `a` to its next lexicographic permutation in place; returns
/// `false` when `a` was already the last one.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_signs() {
        let id = Permutation::identity(4);
        assert!(id.is_identity());
        assert_eq!(id.sign(), 1);
        let t = Permutation::transposition(4, 1, 3);
        assert_eq!(t.sign(), -1);
        let three_cycle = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(three_cycle.sign(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_based(&[0, 2]).is_err());
        assert!(Permutation::from_one_based(&[1, 4, 3]).is_err());
    }

    #[test]
    fn compose_and_invert() {
        let a = Permutation::from_one_based(&[2, 1, 3]).unwrap(); // (12)
        let b = Permutation::from_one_based(&[3, 2, 1]).unwrap(); // (13)
        // a ∘ b sends 1 ↦ a(b(1)) = a(3) = 3, 2 ↦ a(2) = 1, 3 ↦ a(1) = 2.
        let ab = a.then(&b);
        assert_eq!(ab.images_one_based(), vec![3, 1, 2]);
        assert!(a.then(&a.inverse()).is_identity());
        assert!(ab.then(&ab.inverse()).is_identity());
    }

    #[test]
    fn enumerates_symmetric_group() {
        let s4 = Permutation::all(4).unwrap();
        assert_eq!(s4.len(), 24);
        let evens = s4.iter().filter(|g| g.sign() == 1).count();
        assert_eq!(evens, 12);
        // Lexicographic: identity first, reversal last.
        assert!(s4[0].is_identity());
        assert_eq!(s4[23].images_one_based(), vec![4, 3, 2, 1]);
        assert!(Permutation::all(11).is_err());
    }
}
