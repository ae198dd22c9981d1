//! `srank` — classify pure many-body states as simple or entangled.
//!
//! Commands read the shared JSON tensor format and report over a strict
//! exit-code protocol: 0 for success (and for "simple"), 3 for a verified
//! entangled state, 1 for parse/validation problems, 2 for internal
//! numerical failures. `--json` switches classification verbs to a
//! machine-readable report with a versioned `"schema"` field; outputs are
//! byte-identical across runs on identical inputs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use srank_core::jamiolkowski::{classify_map, map_rank, state_to_map, MapClass};
use srank_core::json::{
    parse_tableau, parse_tensor, schmidt_dto, serialize_tensor, takagi_dto, youla_dto,
    ComplexDto, DecompositionDto,
};
use srank_core::srank::{is_simple, quadratic_witness, s_rank, Verdict, Witness};
use srank_core::symmetry::{antisymmetrize, symmetrize};
use srank_core::young::{alpha_is_simple, young_projector};
use srank_core::{Error, SymmetryClass, Tensor, YoungTableau, DEFAULT_EPSILON};

const EXIT_ENTANGLED: u8 = 3;
const EXIT_VALIDATION: u8 = 1;
const EXIT_NUMERIC: u8 = 2;

#[derive(Parser)]
#[command(
    name = "srank",
    version,
    about = "Classify pure many-body states as simple or entangled"
)]
struct Cli {
    /// Numerical tolerance; falls back to SRANK_EPSILON, then 1e-9.
    #[arg(long, global = true)]
    epsilon: Option<f64>,

    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the S-rank of a state.
    Srank {
        /// Tensor document.
        input: PathBuf,
    },
    /// Decide simple vs. entangled (exit 0 simple, 3 entangled).
    Simple {
        /// Tensor document.
        input: PathBuf,
    },
    /// Search for a violated quadratic identity (exit 0 none, 3 found).
    Witness {
        /// Tensor document.
        input: PathBuf,
    },
    /// Schmidt decomposition of a two-particle state.
    Schmidt {
        /// Tensor document (order 2).
        input: PathBuf,
    },
    /// Congruence (symmetric) or pairing (antisymmetric) decomposition.
    Slater {
        /// Tensor document (order 2, symmetric or antisymmetric).
        input: PathBuf,
    },
    /// Project a state onto the symmetric or antisymmetric sector and
    /// print the resulting tensor document.
    Project {
        /// Tensor document.
        input: PathBuf,
        /// Target sector: "symmetric" or "antisymmetric".
        #[arg(long)]
        class: String,
    },
    /// Apply a Young-tableau sector projector and print the resulting
    /// tensor document.
    YoungProject {
        /// Tensor document.
        input: PathBuf,
        /// Tableau document.
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Classify a Young-sector state (exit 0 simple, 3 entangled).
    YoungClassify {
        /// Tensor document.
        input: PathBuf,
        /// Tableau document.
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Rank and exchange class of a two-particle state's map.
    JamRank {
        /// Tensor document (order 2, symmetric or antisymmetric).
        input: PathBuf,
    },
}

/// A failure destined for stderr together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NonConvergence { .. } => EXIT_NUMERIC,
            _ => EXIT_VALIDATION,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Versioned machine-readable report; fields appear in declaration order,
/// so identical inputs serialize to identical bytes.
#[derive(Serialize)]
struct Report {
    schema: u32,
    verb: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    score: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionDto>,
}

impl Report {
    fn new(verb: &'static str) -> Self {
        Report {
            schema: 1,
            verb,
            s_rank: None,
            minimal_rank: None,
            simple: None,
            witness: None,
            score: None,
            rank: None,
            class: None,
            decomposition: None,
        }
    }

    fn print(&self) {
        println!(
            "{}",
            serde_json::to_string(self).expect("reports always serialize")
        );
    }
}

/// Witness entry of a JSON report (indices 1-based).
#[derive(Serialize)]
struct WitnessDto {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    slot: Option<usize>,
    i: Vec<usize>,
    j: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<ComplexDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<ComplexDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<ComplexDto>,
}

fn complex_dto(z: Complex64) -> ComplexDto {
    ComplexDto { re: z.re, im: z.im }
}

fn witness_dto(w: &Witness) -> WitnessDto {
    match w {
        Witness::Product {
            slot,
            i,
            j,
            lhs,
            rhs,
        } => WitnessDto {
            kind: "product",
            slot: Some(*slot),
            i: i.clone(),
            j: j.clone(),
            lhs: Some(complex_dto(*lhs)),
            rhs: Some(complex_dto(*rhs)),
            value: None,
        },
        Witness::Bracket { i, j, value } => WitnessDto {
            kind: "bracket",
            slot: None,
            i: i.clone(),
            j: j.clone(),
            lhs: None,
            rhs: None,
            value: Some(complex_dto(*value)),
        },
    }
}

/// Displays a complex number, snapping clean rationals (e.g. `1/12`, `1/4`)
/// for readability; everything else prints as shortest-round-trip floats.
fn format_value(z: Complex64) -> String {
    if z.im.abs() <= 1e-12 * z.norm().max(1.0) {
        return format_real(z.re);
    }
    format!("{}{:+}i", z.re, z.im)
}

fn format_real(x: f64) -> String {
    for q in 1..=10_000u32 {
        let p = (x * f64::from(q)).round();
        if p.abs() > 1e15 {
            break;
        }
        if (x - p / f64::from(q)).abs() <= 1e-12 * x.abs().max(1.0) {
            let p = p as i64;
            if p == 0 {
                return "0".to_string();
            }
            if q == 1 {
                return p.to_string();
            }
            return format!("{p}/{q}");
        }
    }
    x.to_string()
}

fn join_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn format_witness(w: &Witness) -> String {
    match w {
        Witness::Product {
            slot,
            i,
            j,
            lhs,
            rhs,
        } => format!(
            "witness slot {slot}, ({}|{}), lhs {}, rhs {}",
            join_indices(i),
            join_indices(j),
            format_value(*lhs),
            format_value(*rhs)
        ),
        Witness::Bracket { i, j, value } => format!(
            "witness ({}|{}), value {}",
            join_indices(i),
            join_indices(j),
            format_value(*value)
        ),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("cannot read {}: {e}", path.display())))
}

fn load_tensor(path: &Path, eps: f64) -> Result<Tensor, Failure> {
    Ok(parse_tensor(&read_file(path)?, eps)?)
}

fn load_tableau(path: &Path) -> Result<YoungTableau, Failure> {
    Ok(parse_tableau(&read_file(path)?)?)
}

fn resolve_epsilon(flag: Option<f64>) -> Result<f64, Failure> {
    let eps = match flag {
        Some(e) => e,
        None => match std::env::var("SRANK_EPSILON") {
            Ok(text) => text.trim().parse::<f64>().map_err(|e| {
                Failure::validation(format!("SRANK_EPSILON {text:?} is not a number: {e}"))
            })?,
            Err(std::env::VarError::NotPresent) => DEFAULT_EPSILON,
            Err(std::env::VarError::NotUnicode(_)) => {
                return Err(Failure::validation("SRANK_EPSILON is not valid UTF-8"));
            }
        },
    };
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Failure::validation(format!(
            "epsilon must be a positive finite number, got {eps}"
        )));
    }
    Ok(eps)
}

/// Prints a simplicity verdict and returns its exit code.
fn report_verdict(verb: &'static str, verdict: &Verdict, json: bool) -> u8 {
    if json {
        let mut report = Report::new(verb);
        report.s_rank = Some(verdict.s_rank);
        report.minimal_rank = Some(verdict.minimal_rank);
        report.simple = Some(verdict.simple);
        report.witness = verdict.witness.as_ref().map(witness_dto);
        report.score = verdict.score;
        report.print();
    } else {
        let label = if verdict.simple { "simple" } else { "entangled" };
        println!(
            "{label} (S-rank {}, minimal {})",
            verdict.s_rank, verdict.minimal_rank
        );
        if let Some(w) = &verdict.witness {
            println!("{}", format_witness(w));
        }
    }
    if verdict.simple {
        0
    } else {
        EXIT_ENTANGLED
    }
}

fn lambda_lines(lambdas: &[f64], residual: f64) {
    for (r, lambda) in lambdas.iter().enumerate() {
        println!("lambda {}: {lambda}", r + 1);
    }
    println!("residual: {residual:e}");
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let eps = resolve_epsilon(cli.epsilon)?;
    let json = cli.json;

    match cli.command {
        Command::Srank { input } => {
            let u = load_tensor(&input, eps)?;
            let rank = s_rank(&u, eps)?;
            if json {
                let mut report = Report::new("srank");
                report.s_rank = Some(rank);
                report.print();
            } else {
                println!("{rank}");
            }
            Ok(0)
        }

        Command::Simple { input } => {
            let u = load_tensor(&input, eps)?;
            let verdict = is_simple(&u, eps)?;
            Ok(report_verdict("simple", &verdict, json))
        }

        Command::Witness { input } => {
            let u = load_tensor(&input, eps)?;
            match quadratic_witness(&u, eps)? {
                Some(w) => {
                    if json {
                        let mut report = Report::new("witness");
                        report.simple = Some(false);
                        report.witness = Some(witness_dto(&w));
                        report.print();
                    } else {
                        println!("{}", format_witness(&w));
                    }
                    Ok(EXIT_ENTANGLED)
                }
                None => {
                    if json {
                        let mut report = Report::new("witness");
                        report.simple = Some(true);
                        report.print();
                    } else {
                        println!("no witness");
                    }
                    Ok(0)
                }
            }
        }

        Command::Schmidt { input } => {
            let u = load_tensor(&input, eps)?;
            let dec = srank_core::decomp::schmidt(&u, eps)?;
            if json {
                let mut report = Report::new("schmidt");
                report.decomposition = Some(schmidt_dto(&dec));
                report.print();
            } else {
                println!("schmidt rank {}", dec.lambdas.len());
                lambda_lines(&dec.lambdas, dec.residual);
            }
            Ok(0)
        }

        Command::Slater { input } => {
            let u = load_tensor(&input, eps)?;
            match u.symmetry() {
                SymmetryClass::Symmetric => {
                    let dec = srank_core::decomp::takagi(&u, eps)?;
                    if json {
                        let mut report = Report::new("slater");
                        report.decomposition = Some(takagi_dto(&dec));
                        report.print();
                    } else {
                        println!("takagi rank {}", dec.lambdas.len());
                        lambda_lines(&dec.lambdas, dec.residual);
                    }
                }
                SymmetryClass::Antisymmetric => {
                    let dec = srank_core::decomp::youla(&u, eps)?;
                    if json {
                        let mut report = Report::new("slater");
                        report.decomposition = Some(youla_dto(&dec));
                        report.print();
                    } else {
                        println!(
                            "pairing rank {} ({} pairs)",
                            2 * dec.lambdas.len(),
                            dec.lambdas.len()
                        );
                        lambda_lines(&dec.lambdas, dec.residual);
                    }
                }
                other => {
                    return Err(Failure::validation(format!(
                        "slater requires a symmetric or antisymmetric state, got {}",
                        other.name()
                    )));
                }
            }
            Ok(0)
        }

        Command::Project { input, class } => {
            let u = load_tensor(&input, eps)?;
            let projected = match class.as_str() {
                "symmetric" => symmetrize(&u)?,
                "antisymmetric" => antisymmetrize(&u)?,
                other => {
                    return Err(Failure::validation(format!(
                        "--class must be \"symmetric\" or \"antisymmetric\", got {other:?}"
                    )));
                }
            };
            println!("{}", serialize_tensor(&projected));
            Ok(0)
        }

        Command::YoungProject { input, tableau } => {
            let u = load_tensor(&input, eps)?;
            let t = load_tableau(&tableau)?;
            let pi = young_projector(&t)?;
            let projected = pi.apply(&u)?;
            println!("{}", serialize_tensor(&projected));
            Ok(0)
        }

        Command::YoungClassify { input, tableau } => {
            let u = load_tensor(&input, eps)?;
            let t = load_tableau(&tableau)?;
            let verdict = alpha_is_simple(&t, &u, eps)?;
            Ok(report_verdict("young-classify", &verdict, json))
        }

        Command::JamRank { input } => {
            let v = load_tensor(&input, eps)?;
            let phi = state_to_map(&v, eps)?;
            let rank = map_rank(&phi, eps)?;
            let class = match classify_map(&phi, eps) {
                MapClass::Bosonic => "bosonic",
                MapClass::Fermionic => "fermionic",
                MapClass::Neither => "neither",
            };
            if json {
                let mut report = Report::new("jam-rank");
                report.rank = Some(rank);
                report.class = Some(class);
                report.print();
            } else {
                println!("map rank {rank}, {class}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; usage errors are
            // validation failures (exit 1).
            let is_help = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if is_help {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VALIDATION)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
