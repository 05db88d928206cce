//! Command-line front end: golden-table diffing, identity suites,
//! composition demos, and single-quantion queries.
//!
//! Exit codes: 0 success, 1 verification or algebraic failure, 2 usage or
//! input error. Output is a deterministic function of the flags (and seed),
//! independent of how the suite parallelizes internally.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quantion::basis::{basis_table, cell_label, diff_against_golden, BasisName, BasisTable};
use quantion::quantal::{compose, run_suite, MatrixAlgebra, PoissonAlgebra, VerificationReport};
use quantion::representations::zovko_current;
use quantion::{FourVector, Quantion};

#[derive(Parser)]
#[command(name = "qtn", version, about = "Quantion algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Tetrad,
    Quaternion,
    Null,
}

impl From<Basis> for BasisName {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Tetrad => BasisName::Tetrad,
            Basis::Quaternion => BasisName::Quaternion,
            Basis::Null => BasisName::NullTetrad,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis multiplication table and diff it against the
    /// embedded golden copy.
    Tables {
        #[arg(long, value_enum)]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the identity suite (Jacobi, Leibniz, Petersen, and any extras)
    /// for one algebra realization.
    Verify {
        /// Algebra spec: hermitian:N, realsym:N, or poisson:D.
        #[arg(long)]
        algebra: String,
        /// Structure parameter; the suite runs with this value even when
        /// it is foreign to the algebra, so mismatches surface as
        /// Petersen failures.
        #[arg(long, allow_negative_numbers = true)]
        a: i8,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compose two matrix realizations and run the identity suite,
    /// including tensor-rule closure, on the product.
    Compose {
        /// Left factor: hermitian:N or realsym:N.
        #[arg(long)]
        left: String,
        /// Right factor: hermitian:N or realsym:N.
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the current j(q) of a quantion read from FILE and print
    /// its causal class.
    Current {
        /// JSON array of 8 numbers (re/im interleaved).
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Invert a quantion read from FILE.
    Inverse {
        /// JSON array of 8 numbers (re/im interleaved).
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Tables { basis, format } => cmd_tables(basis.into(), format),
        Command::Verify {
            algebra,
            a,
            samples,
            seed,
            tol,
            format,
        } => cmd_verify(&algebra, a, samples, seed, tol, format),
        Command::Compose {
            left,
            right,
            samples,
            seed,
            tol,
            format,
        } => cmd_compose(&left, &right, samples, seed, tol, format),
        Command::Current { input } => cmd_current(&input),
        Command::Inverse { input } => cmd_inverse(&input),
    };
    ExitCode::from(code)
}

// ---------------------------------------------------------------- tables

#[derive(Serialize)]
struct TableOut<'a> {
    basis: &'a str,
    labels: [&'a str; 4],
    cells: [[String; 4]; 4],
    entries: [[Quantion; 4]; 4],
}

fn cmd_tables(name: BasisName, format: Format) -> u8 {
    let table = basis_table(name);
    match format {
        Format::Text => print!("{}", render_table_text(&table)),
        Format::Json => {
            let out = TableOut {
                basis: table.name.as_str(),
                labels: table.labels,
                cells: label_grid(&table),
                entries: table.entries,
            };
            println!("{}", serde_json::to_string(&out).expect("table serializes"));
        }
    }
    let diffs = diff_against_golden(&table);
    if diffs.is_empty() {
        return 0;
    }
    for d in &diffs {
        eprintln!(
            "mismatch at ({}, {}): computed {}, expected {}",
            d.row, d.col, d.computed, d.expected
        );
    }
    1
}

fn label_grid(table: &BasisTable) -> [[String; 4]; 4] {
    std::array::from_fn(|r| std::array::from_fn(|c| cell_label(&table.entries[r][c], table)))
}

fn render_table_text(table: &BasisTable) -> String {
    let cells = label_grid(table);
    // Pad on char count; combining marks throw the eye off by one column
    // at worst and keep the output byte-stable.
    let width = cells
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .chain(table.labels.iter().map(|s| s.chars().count()))
        .max()
        .unwrap_or(1)
        + 2;
    let pad = |s: &str| {
        let fill = width.saturating_sub(s.chars().count());
        format!("{s}{}", " ".repeat(fill))
    };
    let mut out = format!("{} basis, row times column\n\n", table.name.as_str());
    out.push_str(&pad(""));
    for label in table.labels {
        out.push_str(&pad(label));
    }
    out.push('\n');
    for (label, row) in table.labels.iter().zip(&cells) {
        out.push_str(&pad(label));
        for cell in row {
            out.push_str(&pad(cell));
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------- verify

enum AlgebraSpec {
    Hermitian(usize),
    RealSym(usize),
    Poisson(usize),
}

fn parse_spec(spec: &str) -> Result<AlgebraSpec, String> {
    let (kind, num) = spec
        .split_once(':')
        .ok_or_else(|| format!("bad algebra spec `{spec}`: expected kind:N"))?;
    let n: usize = num
        .parse()
        .map_err(|_| format!("bad algebra spec `{spec}`: `{num}` is not a number"))?;
    match kind {
        "hermitian" => Ok(AlgebraSpec::Hermitian(n)),
        "realsym" => Ok(AlgebraSpec::RealSym(n)),
        "poisson" => Ok(AlgebraSpec::Poisson(n)),
        _ => Err(format!(
            "bad algebra spec `{spec}`: kind must be hermitian, realsym, or poisson"
        )),
    }
}

fn build_matrix(spec: &AlgebraSpec) -> Result<MatrixAlgebra, String> {
    match *spec {
        AlgebraSpec::Hermitian(n) => MatrixAlgebra::hermitian(n).map_err(|e| e.to_string()),
        AlgebraSpec::RealSym(n) => MatrixAlgebra::real_symmetric(n).map_err(|e| e.to_string()),
        AlgebraSpec::Poisson(_) => Err("composition requires matrix algebras".to_string()),
    }
}

fn check_suite_flags(samples: u64, tol: f64) -> Result<(), String> {
    if samples < 1 {
        return Err("samples must be at least 1".to_string());
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err("tol must be positive".to_string());
    }
    Ok(())
}

fn cmd_verify(spec: &str, a: i8, samples: u64, seed: u64, tol: f64, format: Format) -> u8 {
    let reports = match verify_reports(spec, a, samples, seed, tol) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    emit_reports(&reports, format);
    if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    }
}

fn verify_reports(
    spec: &str,
    a: i8,
    samples: u64,
    seed: u64,
    tol: f64,
) -> Result<Vec<VerificationReport>, String> {
    check_suite_flags(samples, tol)?;
    match parse_spec(spec)? {
        AlgebraSpec::Poisson(d) => {
            let alg = PoissonAlgebra::new(d)
                .and_then(|alg| alg.with_parameter_a(a))
                .map_err(|e| e.to_string())?;
            Ok(run_suite(&alg, samples, seed, tol))
        }
        matrix => {
            let alg = build_matrix(&matrix)?
                .with_parameter_a(a)
                .map_err(|e| e.to_string())?;
            Ok(run_suite(&alg, samples, seed, tol))
        }
    }
}

fn emit_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(reports).expect("reports serialize")
            );
        }
        Format::Text => {
            for r in reports {
                println!(
                    "{}  {:<10}  samples {}  seed {}  tol {:e}  max_residual {:e}  {}",
                    r.algebra,
                    r.identity.to_string(),
                    r.samples,
                    r.seed,
                    r.tol,
                    r.max_residual,
                    if r.passed() { "pass" } else { "FAIL" }
                );
            }
        }
    }
}

// --------------------------------------------------------------- compose

fn cmd_compose(left: &str, right: &str, samples: u64, seed: u64, tol: f64, format: Format) -> u8 {
    let reports = match compose_reports(left, right, samples, seed, tol) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    emit_reports(&reports, format);
    if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    }
}

fn compose_reports(
    left: &str,
    right: &str,
    samples: u64,
    seed: u64,
    tol: f64,
) -> Result<Vec<VerificationReport>, String> {
    check_suite_flags(samples, tol)?;
    let l = build_matrix(&parse_spec(left)?)?;
    let r = build_matrix(&parse_spec(right)?)?;
    let composed = compose(&l, &r).map_err(|e| e.to_string())?;
    Ok(run_suite(&composed, samples, seed, tol))
}

// ---------------------------------------------------------- file queries

fn read_quantion(path: &Path) -> Result<Quantion, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("invalid quantion in {}: {e}", path.display()))
}

#[derive(Serialize)]
struct CurrentOut {
    j: FourVector,
    class: &'static str,
}

fn cmd_current(path: &Path) -> u8 {
    let q = match read_quantion(path) {
        Ok(q) => q,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let (j, class) = zovko_current(&q);
    let out = CurrentOut {
        j,
        class: class.as_str(),
    };
    println!(
        "{}",
        serde_json::to_string(&out).expect("current serializes")
    );
    0
}

fn cmd_inverse(path: &Path) -> u8 {
    let q = match read_quantion(path) {
        Ok(q) => q,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match q.inverse() {
        Ok(inv) => {
            println!(
                "{}",
                serde_json::to_string(&inv).expect("quantion serializes")
            );
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
