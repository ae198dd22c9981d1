//! Partitions and Young tableaux.
//!
//! A partition `λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_r ≥ 1)` of `k` fixes a Young diagram
//! with `λ_i` boxes in row `i`. A [`YoungTableau`] is a *numbering* of those
//! boxes by `1, …, k` — an arbitrary bijection, not necessarily standard —
//! so each diagram carries exactly `k!` tableaux. Tableaux parametrize the
//! symmetrizer operators of [`crate::young`]; the exchange statistics of a
//! `k`-particle state are encoded by which tableau's projector fixes it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Guard for partition/tableau enumeration: `k!` grows fast.
pub const MAX_ENUMERATION_K: usize = 8;

/// A partition of a positive integer, stored as weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, validating that parts are positive and weakly
    /// decreasing.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.is_empty()
            || parts.iter().any(|&p| p == 0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(Error::InvalidPartition {
                parts: parts.to_vec(),
            });
        }
        Ok(Partition {
            parts: parts.to_vec(),
        })
    }

    /// The weight `k = Σ λ_i`.
    pub fn k(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows `r`.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Row lengths.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of columns (equals `λ₁`).
    pub fn cols(&self) -> usize {
        self.parts[0]
    }

    /// Length of column `c` (0-based): the number of rows with `λ_i > c`.
    pub fn col_len(&self, c: usize) -> usize {
        self.parts.iter().filter(|&&p| p > c).count()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (0..self.cols()).map(|c| self.col_len(c)).collect(),
        }
    }

    /// The canonical row-reading tableau: boxes numbered `1..=k` row by row.
    pub fn canonical_tableau(&self) -> YoungTableau {
        let mut rows = Vec::with_capacity(self.parts.len());
        let mut next = 1;
        for &len in &self.parts {
            rows.push((next..next + len).collect());
            next += len;
        }
        YoungTableau {
            partition: self.clone(),
            rows,
        }
    }
}

/// A Young diagram numbered bijectively by `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungTableau {
    partition: Partition,
    /// `rows[r]` lists the box numbers in row `r`, left to right (1-based
    /// box numbers).
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    /// Builds a tableau from its partition and row numbering, validating
    /// shape and bijectivity.
    pub fn new(partition: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let k = partition.k();
        let shape_ok = rows.len() == partition.rows()
            && rows
                .iter()
                .zip(partition.parts())
                .all(|(row, &len)| row.len() == len);
        let mut seen = vec![false; k + 1];
        let mut bijective = true;
        for &b in rows.iter().flatten() {
            if b == 0 || b > k || seen[b] {
                bijective = false;
                break;
            }
            seen[b] = true;
        }
        if !shape_ok || !bijective {
            return Err(Error::InvalidTableau {
                rows,
                parts: partition.parts().to_vec(),
            });
        }
        Ok(YoungTableau { partition, rows })
    }

    /// The underlying partition.
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The weight `k`.
    pub fn k(&self) -> usize {
        self.partition.k()
    }

    /// Row numbering (1-based box numbers, rows top to bottom).
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The 0-based row containing box number `b` (1-based).
    pub fn row_of(&self, b: usize) -> usize {
        self.rows
            .iter()
            .position(|row| row.contains(&b))
            .expect("box number validated at construction")
    }

    /// Box numbers in column `c` (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c).copied())
            .collect()
    }
}

/// Enumerates all partitions of `k` in descending lexicographic order.
///
/// Guarded to `k ≤` [`MAX_ENUMERATION_K`].
pub fn enumerate_partitions(k: usize) -> Result<Vec<Partition>> {
    if k == 0 || k > MAX_ENUMERATION_K {
        return Err(Error::SizeGuardExceeded {
            operation: "partition enumeration",
            limit: MAX_ENUMERATION_K,
            requested: k,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(k, k, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Enumerates all `k!` numberings of the diagram of `partition`, in
/// lexicographic order of the row-major numbering.
///
/// Guarded to `k ≤` [`MAX_ENUMERATION_K`].
pub fn enumerate_tableaux(partition: &Partition) -> Result<Vec<YoungTableau>> {
    let k = partition.k();
    if k > MAX_ENUMERATION_K {
        return Err(Error::SizeGuardExceeded {
            operation: "tableau enumeration",
            limit: MAX_ENUMERATION_K,
            requested: k,
        });
    }
    let mut numbering: Vec<usize> = (1..=k).collect();
    let mut out = Vec::with_capacity((1..=k).product());
    loop {
        let mut rows = Vec::with_capacity(partition.rows());
        let mut pos = 0;
        for &len in partition.parts() {
            rows.push(numbering[pos..pos + len].to_vec());
            pos += len;
        }
        out.push(YoungTableau {
            partition: partition.clone(),
            rows,
        });
        if !next_lex(&mut numbering) {
            break;
        }
    }
    Ok(out)
}

fn next_lex(a: &mut [usize]) -> bool {
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
