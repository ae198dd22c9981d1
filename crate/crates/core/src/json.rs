//! JSON input/output for tensors, tableaux, decompositions, and four-leg
//! tensors.
//!
//! The shared tensor format (indices 1-based, omitted entries zero):
//!
//! ```json
//! { "n": 3, "k": 2, "symmetry": "general",
//!   "entries": [ { "idx": [1, 2], "re": 0.5, "im": 0.0 } ] }
//! ```
//!
//! with `"symmetry"` one of `"general"`, `"symmetric"`, `"antisymmetric"`.
//! Young-sector tags have no representation here: a Young-classed tensor
//! serializes with `"general"`, and the tableau travels in its own file:
//!
//! ```json
//! { "partition": [2, 1], "numbering": [[1, 2], [3]] }
//! ```
//!
//! Decompositions serialize as
//!
//! ```json
//! { "kind": "schmidt", "lambdas": [1.0], "vectors": [[{ "re": 1.0, "im": 0.0 }]],
//!   "residual": 0.0 }
//! ```
//!
//! with `"kind"` one of `"schmidt"` (vectors: left factors then right
//! factors), `"symmetric"` (vectors: the congruence basis), or
//! `"antisymmetric"` (vectors: `f` halves then `g` halves). Four-leg
//! tensors mirror the tensor format with `k = 4` and a `"legs"`
//! annotation. All serializers emit fields in a fixed order, so equal
//! inputs give byte-identical output.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::decomp::{SchmidtDecomposition, SlaterDecomposition, TakagiDecomposition};
use crate::error::{Error, Result};
use crate::jamiolkowski::FourLegTensor;
use crate::tableau::{Partition, YoungTableau};
use crate::tensor::{SymmetryClass, Tensor};

/// One complex number as `{ "re": …, "im": … }`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ComplexDto {
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

impl From<Complex64> for ComplexDto {
    fn from(z: Complex64) -> Self {
        ComplexDto { re: z.re, im: z.im }
    }
}

impl From<ComplexDto> for Complex64 {
    fn from(d: ComplexDto) -> Self {
        Complex64::new(d.re, d.im)
    }
}

/// One nonzero tensor entry with its 1-based multi-index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryDto {
    /// 1-based multi-index, one value per slot.
    pub idx: Vec<usize>,
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

/// The shared on-disk tensor document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorDto {
    /// Single-particle dimension.
    pub n: usize,
    /// Order (number of slots).
    pub k: usize,
    /// `"general"`, `"symmetric"`, or `"antisymmetric"`.
    pub symmetry: String,
    /// Nonzero entries; anything omitted is zero.
    pub entries: Vec<EntryDto>,
}

/// The on-disk tableau document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauDto {
    /// Partition parts, non-increasing.
    pub partition: Vec<usize>,
    /// Box numbering, row by row.
    pub numbering: Vec<Vec<usize>>,
}

/// The on-disk decomposition document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionDto {
    /// `"schmidt"`, `"symmetric"`, or `"antisymmetric"`.
    pub kind: String,
    /// Coefficients, descending.
    pub lambdas: Vec<f64>,
    /// Vector systems (see module docs for the per-kind layout).
    pub vectors: Vec<Vec<ComplexDto>>,
    /// Frobenius reconstruction residual.
    pub residual: f64,
}

fn default_legs() -> Vec<String> {
    ["out1", "in1", "out2", "in2"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// The on-disk four-leg tensor document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FourLegDto {
    /// Leg dimension.
    pub n: usize,
    /// Always 4.
    pub k: usize,
    /// Leg labels, fixed as `["out1", "in1", "out2", "in2"]`.
    #[serde(default = "default_legs")]
    pub legs: Vec<String>,
    /// Nonzero entries with 1-based four-part indices.
    pub entries: Vec<EntryDto>,
}

fn parse_error(context: &str, err: impl std::fmt::Display) -> Error {
    Error::Parse {
        message: format!("{context}: {err}"),
    }
}

fn class_of_name(name: &str) -> Result<SymmetryClass> {
    match name {
        "general" => Ok(SymmetryClass::General),
        "symmetric" => Ok(SymmetryClass::Symmetric),
        "antisymmetric" => Ok(SymmetryClass::Antisymmetric),
        other => Err(Error::Parse {
            message: format!(
                "unknown symmetry {other:?} (expected \"general\", \"symmetric\", or \"antisymmetric\")"
            ),
        }),
    }
}

fn name_of_class(class: &SymmetryClass) -> &'static str {
    match class {
        SymmetryClass::General | SymmetryClass::Young(_) => "general",
        SymmetryClass::Symmetric => "symmetric",
        SymmetryClass::Antisymmetric => "antisymmetric",
    }
}

/// Parses the shared tensor format, verifying the declared symmetry to
/// `eps`.
pub fn parse_tensor(text: &str, eps: f64) -> Result<Tensor> {
    let dto: TensorDto =
        serde_json::from_str(text).map_err(|e| parse_error("tensor document", e))?;
    let class = class_of_name(&dto.symmetry)?;
    let entries: Vec<(Vec<usize>, Complex64)> = dto
        .entries
        .iter()
        .map(|e| (e.idx.clone(), Complex64::new(e.re, e.im)))
        .collect();
    if dto.n == 0 {
        return Err(Error::Parse {
            message: "tensor dimension n must be at least 1".to_string(),
        });
    }
    Tensor::from_entries(dto.n, dto.k, &entries, class, eps)
}

/// Serializes a tensor to the shared format (Young tags degrade to
/// `"general"`); entries appear in row-major index order.
pub fn serialize_tensor(u: &Tensor) -> String {
    let mut entries = Vec::new();
    let mut idx = vec![0usize; u.k()];
    loop {
        let z = u.coeff(&idx);
        if z != Complex64::new(0.0, 0.0) {
            entries.push(EntryDto {
                idx: idx.iter().map(|&i| i + 1).collect(),
                re: z.re,
                im: z.im,
            });
        }
        if !crate::tensor::next_index(&mut idx, u.n()) {
            break;
        }
    }
    let dto = TensorDto {
        n: u.n(),
        k: u.k(),
        symmetry: name_of_class(u.symmetry()).to_string(),
        entries,
    };
    serde_json::to_string(&dto).expect("tensor DTOs always serialize")
}

/// Parses the tableau format.
pub fn parse_tableau(text: &str) -> Result<YoungTableau> {
    let dto: TableauDto =
        serde_json::from_str(text).map_err(|e| parse_error("tableau document", e))?;
    let partition = Partition::new(&dto.partition)?;
    YoungTableau::new(partition, dto.numbering)
}

/// Serializes a tableau.
pub fn serialize_tableau(t: &YoungTableau) -> String {
    let dto = TableauDto {
        partition: t.partition().parts().to_vec(),
        numbering: t.rows().to_vec(),
    };
    serde_json::to_string(&dto).expect("tableau DTOs always serialize")
}

fn vectors_to_dto(vectors: &[Vec<Complex64>]) -> Vec<Vec<ComplexDto>> {
    vectors
        .iter()
        .map(|v| v.iter().map(|&z| ComplexDto::from(z)).collect())
        .collect()
}

/// Packs a bipartite singular decomposition (vectors: left factors, then
/// right factors).
pub fn schmidt_dto(d: &SchmidtDecomposition) -> DecompositionDto {
    let mut vectors = vectors_to_dto(&d.left);
    vectors.extend(vectors_to_dto(&d.right));
    DecompositionDto {
        kind: "schmidt".to_string(),
        lambdas: d.lambdas.clone(),
        vectors,
        residual: d.residual,
    }
}

/// Packs a congruence diagonalization.
pub fn takagi_dto(d: &TakagiDecomposition) -> DecompositionDto {
    DecompositionDto {
        kind: "symmetric".to_string(),
        lambdas: d.lambdas.clone(),
        vectors: vectors_to_dto(&d.vectors),
        residual: d.residual,
    }
}

/// Packs a pair-block decomposition (vectors: `f` halves, then `g`
/// halves).
pub fn youla_dto(d: &SlaterDecomposition) -> DecompositionDto {
    DecompositionDto {
        kind: "antisymmetric".to_string(),
        lambdas: d.lambdas.clone(),
        vectors: vectors_to_dto(&d.vectors),
        residual: d.residual,
    }
}

/// Serializes a decomposition document.
pub fn serialize_decomposition(dto: &DecompositionDto) -> String {
    serde_json::to_string(dto).expect("decomposition DTOs always serialize")
}

/// Parses the four-leg format (requires `k = 4` and, when present, the
/// canonical leg labels).
pub fn parse_four_leg(text: &str) -> Result<FourLegTensor> {
    let dto: FourLegDto =
        serde_json::from_str(text).map_err(|e| parse_error("four-leg document", e))?;
    if dto.k != 4 {
        return Err(Error::WrongOrder {
            expected: 4,
            got: dto.k,
        });
    }
    if dto.legs != default_legs() {
        return Err(Error::Parse {
            message: format!("unexpected leg labels {:?}", dto.legs),
        });
    }
    let mut out = FourLegTensor::zero(dto.n)?;
    let mut seen = std::collections::HashSet::new();
    for entry in &dto.entries {
        if entry.idx.len() != 4 {
            return Err(Error::IndexOutOfRange {
                index: entry.idx.clone(),
                n: dto.n,
                k: 4,
            });
        }
        let mut zero_based = [0usize; 4];
        for (slot, &i) in entry.idx.iter().enumerate() {
            if i == 0 || i > dto.n {
                return Err(Error::IndexOutOfRange {
                    index: entry.idx.clone(),
                    n: dto.n,
                    k: 4,
                });
            }
            zero_based[slot] = i - 1;
        }
        if !seen.insert(zero_based) {
            return Err(Error::DuplicateEntry {
                index: entry.idx.clone(),
            });
        }
        out.set(
            zero_based[0],
            zero_based[1],
            zero_based[2],
            zero_based[3],
            Complex64::new(entry.re, entry.im),
        );
    }
    Ok(out)
}

/// Serializes a four-leg tensor; entries appear in row-major index order.
pub fn serialize_four_leg(phi: &FourLegTensor) -> String {
    let n = phi.n();
    let mut entries = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let z = phi.get(a, b, c, d);
                    if z != Complex64::new(0.0, 0.0) {
                        entries.push(EntryDto {
                            idx: vec![a + 1, b + 1, c + 1, d + 1],
                            re: z.re,
                            im: z.im,
                        });
                    }
                }
            }
        }
    }
    let dto = FourLegDto {
        n,
        k: 4,
        legs: default_legs(),
        entries,
    };
    serde_json::to_string(&dto).expect("four-leg DTOs always serialize")
}
