//! Command dispatch for the `spinslice` binary.
//!
//! Exit codes: 0 on success, 1 for bad input or a failed verification, 2 for
//! internal errors.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cobordism::{certify_frame_spin, verify, CobordismError, SliceCertificate};
use crate::document::{parse_document, print_document, Document};
use crate::exactmat::IntMatrix;
use crate::framespin::{assemble, SpinInput};
use crate::oracle::{search_null_cobordant, SearchBudget};
use crate::seifert::{signature_residue, symmetrize, Sign};

#[derive(Debug, Parser)]
#[command(
    name = "spinslice",
    version,
    about = "Seifert matrices of frame-spun knots and slice certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a document and check its validity conditions.
    Validate { file: PathBuf },
    /// Assemble the Seifert matrix of a spin-input and print it as a seifert document.
    Spin {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build and verify a slice certificate for a spin-input (or a directory of them).
    Certify {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate document.
    Verify { cert: PathBuf },
    /// Report unimodularity, signature data and block layout.
    Invariants { file: PathBuf },
    /// Brute-force search for a null-cobordance witness.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

/// A failed command: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl fmt::Display) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn internal(message: impl fmt::Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Validate { file } => load(&file).map(|d| validate(&d)).and_then(|r| r),
        Command::Spin { file, output } => spin(&file, output.as_deref()),
        Command::Certify { input, output } => certify(&input, output.as_deref()),
        Command::Verify { cert } => verify_file(&cert),
        Command::Invariants { file } => load(&file).and_then(|d| invariants(&d)),
        Command::Oracle {
            file,
            max_entry,
            max_size,
        } => oracle(&file, max_entry, max_size),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_or_return(doc: &Document, output: Option<&Path>) -> Result<String, Failure> {
    let text = print_document(doc);
    match output {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::internal(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn sym_label(n: u32) -> &'static str {
    match Sign::pow(n.into()) {
        Sign::Plus => "A+A'",
        Sign::Minus => "A−A'",
    }
}

fn validate(doc: &Document) -> Outcome {
    match doc {
        Document::Matrix(m) => Ok(format!("valid matrix {}x{}\n", m.rows(), m.cols())),
        Document::Seifert { n, matrix } => {
            let det = symmetrize(matrix, *n)
                .and_then(|s| Ok(s.determinant()?))
                .map_err(Failure::input)?;
            crate::seifert::validate_seifert(matrix.clone(), *n).map_err(Failure::input)?;
            Ok(format!("valid; det({})={det}\n", sym_label(*n)))
        }
        Document::SpinInput(input) => {
            let (a, _) = assemble(input).map_err(Failure::input)?;
            Ok(format!(
                "valid spin-input; assembled Seifert matrix {}x{}\n",
                a.rows(),
                a.cols()
            ))
        }
        Document::Certificate(c) => verify(c)
            .map(|()| "valid certificate\n".to_string())
            .map_err(|v| Failure::input(format!("verification failed: {v}"))),
    }
}

fn spin(path: &Path, output: Option<&Path>) -> Outcome {
    let Document::SpinInput(input) = load(path)? else {
        return Err(Failure::input("spin expects a spin-input document"));
    };
    let (a, _) = assemble(&input).map_err(Failure::input)?;
    write_or_return(
        &Document::Seifert {
            n: input.dims().n(),
            matrix: a,
        },
        output,
    )
}

fn certify_one(input: &SpinInput) -> Result<SliceCertificate, Failure> {
    let cert = certify_frame_spin(input).map_err(|e| match e {
        CobordismError::Rejected(_)
        | CobordismError::MiddleBlockMismatch
        | CobordismError::LayoutMismatch { .. } => Failure::internal(e),
        other => Failure::input(other),
    })?;
    verify(&cert)
        .map_err(|v| Failure::internal(format!("certificate failed verification: {v}")))?;
    Ok(cert)
}

fn summary(cert: &SliceCertificate) -> String {
    format!(
        "target size {}, stabilizer rank {}, witness bit-size {}",
        cert.target.rows(),
        cert.stabilizer_rank(),
        cert.witness_bits()
    )
}

fn certify(input: &Path, output: Option<&Path>) -> Outcome {
    if input.is_dir() {
        return certify_dir(input, output);
    }
    let Document::SpinInput(spin) = load(input)? else {
        return Err(Failure::input("certify expects a spin-input document"));
    };
    let cert = certify_one(&spin)?;
    let line = summary(&cert);
    let doc = Document::Certificate(cert);
    match output {
        Some(_) => {
            write_or_return(&doc, output)?;
            Ok(format!("certified: {line}\n"))
        }
        None => {
            eprintln!("certified: {line}");
            write_or_return(&doc, None)
        }
    }
}

/// Certifies every `*.json` spin-input in `dir`; one failing file does not
/// stop the others. Certificates go to `out_dir` as `<stem>.cert.json`.
fn certify_dir(dir: &Path, out_dir: Option<&Path>) -> Outcome {
    let out_dir = out_dir.unwrap_or(dir);
    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::internal(format!("{}: {e}", out_dir.display())))?;
    let mut entries: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .filter(|p| !p.to_string_lossy().ends_with(".cert.json"))
        .collect();
    entries.sort();
    let mut report = String::new();
    let mut worst = 0;
    for path in entries {
        let name = path
            .file_name()
            .unwrap_or_default()
            .to_string_lossy()
            .into_owned();
        let result = match load(&path) {
            Ok(Document::SpinInput(spin)) => certify_one(&spin).and_then(|cert| {
                let stem = path.file_stem().unwrap_or_default().to_string_lossy();
                let target = out_dir.join(format!("{stem}.cert.json"));
                let line = summary(&cert);
                write_or_return(&Document::Certificate(cert), Some(&target))?;
                Ok(line)
            }),
            Ok(other) => Err(Failure::input(format!(
                "not a spin-input ({})",
                other.kind()
            ))),
            Err(f) => Err(f),
        };
        match result {
            Ok(line) => report.push_str(&format!("{name}: certified: {line}\n")),
            Err(f) => {
                report.push_str(&format!("{name}: FAILED: {}\n", f.message));
                worst = worst.max(f.code);
            }
        }
    }
    if worst == 0 {
        Ok(report)
    } else {
        print!("{report}");
        Err(Failure {
            code: worst,
            message: "some inputs could not be certified".into(),
        })
    }
}

fn verify_file(path: &Path) -> Outcome {
    let Document::Certificate(cert) = load(path)? else {
        return Err(Failure::input("verify expects a certificate document"));
    };
    verify(&cert)
        .map(|()| format!("ok: {}\n", summary(&cert)))
        .map_err(|v| Failure::input(format!("verification failed: {v}")))
}

fn form_report(label: &str, s: &IntMatrix) -> Result<String, Failure> {
    let det = s.determinant().map_err(Failure::input)?;
    let mut out = format!("{label}: det = {det}");
    if s.is_symmetric() {
        let i = s.inertia().map_err(Failure::input)?;
        out += &format!(
            ", signature {} (inertia +{} -{} 0x{})",
            i.positive as i64 - i.negative as i64,
            i.positive,
            i.negative,
            i.zero
        );
    } else if s.is_skew_symmetric() {
        out += ", skew-symmetric";
    }
    out.push('\n');
    Ok(out)
}

fn seifert_report(a: &IntMatrix, n: u32) -> Outcome {
    let sym = symmetrize(a, n).map_err(Failure::input)?;
    let det = sym.determinant().map_err(Failure::input)?;
    let label = sym_label(n);
    let mut out = if crate::seifert::is_epsilon_unimodular(a, n) {
        format!("valid; det({label})={det}\n")
    } else {
        format!("invalid; det({label})={det}, expected ±1\n")
    };
    out += &format!("size {}x{}, n = {n}\n", a.rows(), a.cols());
    out += &form_report(label, &sym)?;
    if n.is_multiple_of(2) {
        let r = signature_residue(a, n).map_err(Failure::input)?;
        out += &format!("residue {r} mod 16\n");
    }
    Ok(out)
}

fn invariants(doc: &Document) -> Outcome {
    match doc {
        Document::Matrix(m) => form_report("matrix", m),
        Document::Seifert { n, matrix } => seifert_report(matrix, *n),
        Document::SpinInput(input) => {
            let mut out = input.layout().to_string();
            let (a, _) = assemble(input).map_err(Failure::input)?;
            out += &seifert_report(&a, input.dims().n())?;
            Ok(out)
        }
        Document::Certificate(c) => {
            let mut out = format!(
                "certificate: target {}x{}, stabilizer rank {}, half {}\n",
                c.target.rows(),
                c.target.cols(),
                c.stabilizer_rank(),
                c.half
            );
            out += &match verify(c) {
                Ok(()) => "verification: ok\n".to_string(),
                Err(v) => format!("verification: FAILED ({v})\n"),
            };
            Ok(out)
        }
    }
}

fn oracle(path: &Path, max_entry: u32, max_size: usize) -> Outcome {
    let budget = SearchBudget::new(max_entry, max_size).map_err(Failure::input)?;
    let x = match load(path)? {
        Document::Matrix(m) => m,
        Document::Seifert { matrix, .. } => matrix,
        Document::SpinInput(input) => assemble(&input).map_err(Failure::input)?.0,
        Document::Certificate(c) => c.target.block_sum(&c.stabilizer).map_err(Failure::input)?,
    };
    match search_null_cobordant(&x, &budget).map_err(Failure::input)? {
        Some(p) => Ok(format!("found witness p = {p}\n")),
        None => Ok(format!(
            "unknown: no witness with entries in [-{max_entry}, {max_entry}]\n"
        )),
    }
}
