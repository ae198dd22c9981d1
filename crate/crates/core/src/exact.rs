//! Exact rank computation over the Gaussian rationals `Q(i)`.
//!
//! Every finite `f64` is a dyadic rational, so a complex matrix whose
//! entries were produced by exact arithmetic embeds losslessly into
//! `Q(i) = Q + Qi`. Fraction-free Gaussian elimination over that field
//! yields the true rank, which test suites use to cross-check the
//! floating-point rank decisions of [`crate::linalg`].

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element `re + im·i` of `Q(i)` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    /// Real part.
    pub re: BigRational,
    /// Imaginary part.
    pub im: BigRational,
}

impl GaussianRational {
    /// Exact zero.
    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    /// Builds from integer real and imaginary parts.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// Exact embedding of a complex double (every finite `f64` is rational).
    pub fn from_complex(z: Complex64) -> Result<Self> {
        let re = BigRational::from_float(z.re).ok_or(Error::Parse {
            message: format!("non-finite real part {} has no rational value", z.re),
        })?;
        let im = BigRational::from_float(z.im).ok_or(Error::Parse {
            message: format!("non-finite imaginary part {} has no rational value", z.im),
        })?;
        Ok(GaussianRational { re, im })
    }

    /// Whether the value is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    /// Product `(a+bi)(c+di) = (ac−bd) + (ad+bc)i`.
    pub fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Exact inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let denom = &self.re * &self.re + &self.im * &self.im;
        if denom.is_zero() {
            return None;
        }
        Some(GaussianRational {
            re: &self.re / &denom,
            im: -(&self.im / &denom),
        })
    }

    /// Quotient; `None` when dividing by zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.mul(&inv))
    }
}

/// Exact rank of a row-major `rows × cols` matrix over `Q(i)` by Gaussian
/// elimination.
pub fn exact_rank(rows: usize, cols: usize, entries: &[GaussianRational]) -> Result<usize> {
    if entries.len() != rows * cols {
        return Err(Error::DimensionMismatch {
            left: rows * cols,
            right: entries.len(),
        });
    }
    let mut a: Vec<Vec<GaussianRational>> = (0..rows)
        .map(|i| entries[i * cols..(i + 1) * cols].to_vec())
        .collect();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        // Find a nonzero pivot in this column at or below pivot_row.
        let mut found = None;
        for row in pivot_row..rows {
            if !a[row][col].is_zero() {
                found = Some(row);
                break;
            }
        }
        let Some(p) = found else { continue };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col]
            .inverse()
            .expect("pivot is nonzero by selection");
        for row in pivot_row + 1..rows {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].mul(&inv);
            for c in col..cols {
                let delta = factor.mul(&a[pivot_row][c]);
                a[row][c] = a[row][c].sub(&delta);
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    Ok(rank)
}

/// Exact rank of a complex matrix whose entries embed into `Q(i)`.
pub fn exact_rank_from_complex(rows: usize, cols: usize, entries: &[Complex64]) -> Result<usize> {
    let exact: Result<Vec<GaussianRational>> = entries
        .iter()
        .map(|&z| GaussianRational::from_complex(z))
        .collect();
    exact_rank(rows, cols, &exact?)
}

/// The multiplicative identity of `Q(i)`.
pub fn one() -> GaussianRational {
    GaussianRational {
        re: BigRational::one(),
        im: BigRational::zero(),
    }
}
