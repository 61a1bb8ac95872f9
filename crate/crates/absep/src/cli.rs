//! Command-line interface: single-spectrum classification, batch files,
//! Monte Carlo surveys, ordering-template dumps, the golden-example runner,
//! and the brute-force oracle.
//!
//! Everything funnels through [`run_from`], which takes the argument list and
//! output sinks explicitly so the whole surface is testable in-process; the
//! binary wrapper only forwards `std::env::args_os()` and exits with the
//! returned code.
//!
//! Exit codes: 0 success, 1 golden-test failure, 2 input validation,
//! 3 internal inconsistency or numeric failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::criteria::{classify, Report, VerdictKind};
use crate::fixtures;
use crate::linalg::Tolerances;
use crate::matricization::{canonical_pairs, sample_pairs, OrderingPair};
use crate::oracle::{
    random_unitary_falsifier, x_witness, FalsifierWitness, OracleError, XWitness,
    FALSIFIER_DIMENSION_LIMIT,
};
use crate::spectrum::{sample_uniform_simplex, Dims, Spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_GOLDEN_FAILURE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "absep",
    version,
    about = "Classify bipartite spectra as absolutely PPT (absolutely separable) from eigenvalues alone"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a single spectrum and print a JSON report
    Classify(ClassifyArgs),
    /// Classify every line of a CSV or JSONL file
    Batch(BatchArgs),
    /// Survey flat-Dirichlet random spectra and tally verdicts
    Sample(SampleArgs),
    /// Dump canonical (or sampled) ordering-pair templates
    Orderings(OrderingsArgs),
    /// Run the golden checks for the bundled reference spectra
    Examples(ExamplesArgs),
    /// Brute-force validation: unitary falsifier plus x-witness
    Oracle(OracleArgs),
}

/// Flags shared by subcommands that accept one spectrum.
#[derive(Args, Debug)]
struct SpectrumSource {
    /// First subsystem dimension
    #[arg(long)]
    m: Option<usize>,
    /// Second subsystem dimension
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated eigenvalues, any order
    #[arg(long, value_name = "v1,v2,...")]
    eigenvalues: Option<String>,
    /// JSON file {"m": int, "n": int, "eigenvalues": [...], "normalize": bool?}
    #[arg(long, conflicts_with_all = ["m", "n", "eigenvalues"])]
    input: Option<PathBuf>,
    /// Divide the eigenvalues by their sum before validation
    #[arg(long)]
    normalize: bool,
    /// Allowed deviation of the eigenvalue sum from 1
    #[arg(long, default_value_t = 1e-6)]
    sum_tol: f64,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    source: SpectrumSource,
    /// Relative PSD/inequality tolerance
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// CSV (m,n,v1,…) or JSONL (one spectrum object per line) file
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    sum_tol: f64,
    /// Divide each row's eigenvalues by their sum before validation
    #[arg(long)]
    normalize: bool,
    /// Write the JSONL output here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Number of flat-Dirichlet draws
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OrderingsArgs {
    /// Schmidt vector length (matrix size)
    #[arg(long)]
    p: usize,
    /// Sampled discovery instead of the canonical list (required for p ≥ 5)
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExamplesArgs {
    /// Print fixture names and expectations without running
    #[arg(long)]
    list: bool,
    /// Comparison tolerance for expected eigenvalues and margins
    #[arg(long, default_value_t = fixtures::COMPARE_TOLERANCE)]
    tol: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    source: SpectrumSource,
    /// Number of random global unitaries to try
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// One spectrum in the JSON input format.
#[derive(Debug, Serialize, Deserialize)]
struct SpectrumRecord {
    m: usize,
    n: usize,
    eigenvalues: Vec<f64>,
    #[serde(default)]
    normalize: Option<bool>,
}

/// Parses the argument list and runs the selected subcommand, writing to the
/// given sinks. Returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_VALIDATION
                }
            };
        }
    };
    match cli.command {
        Command::Classify(args) => cmd_classify(args, out, err),
        Command::Batch(args) => cmd_batch(args, out, err),
        Command::Sample(args) => cmd_sample(args, out, err),
        Command::Orderings(args) => cmd_orderings(args, out, err),
        Command::Examples(args) => cmd_examples(args, out, err),
        Command::Oracle(args) => cmd_oracle(args, out, err),
    }
}

fn fail(err: &mut dyn Write, message: &str, code: i32) -> i32 {
    let _ = writeln!(err, "error: {message}");
    code
}

fn tolerances_from(rel: f64) -> Result<Tolerances, String> {
    if !rel.is_finite() || rel <= 0.0 {
        return Err(format!("--tol must be positive and finite, got {rel}"));
    }
    Ok(Tolerances {
        psd_rel: rel,
        ..Tolerances::default()
    })
}

fn check_sum_tol(sum_tol: f64) -> Result<(), String> {
    if !sum_tol.is_finite() || sum_tol < 0.0 {
        return Err(format!(
            "--sum-tol must be nonnegative and finite, got {sum_tol}"
        ));
    }
    Ok(())
}

fn make_spectrum(
    m: usize,
    n: usize,
    values: &[f64],
    normalize: bool,
    sum_tol: f64,
) -> Result<Spectrum, String> {
    let dims = Dims::new(m, n).map_err(|e| e.to_string())?;
    let built = if normalize {
        Spectrum::new_normalized(dims, values, sum_tol)
    } else {
        Spectrum::new(dims, values, sum_tol)
    };
    built.map_err(|e| e.to_string())
}

fn parse_eigenvalue_list(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.parse::<f64>()
                .map_err(|e| format!("bad eigenvalue {f:?}: {e}"))
        })
        .collect()
}

fn resolve_spectrum(source: &SpectrumSource) -> Result<Spectrum, String> {
    check_sum_tol(source.sum_tol)?;
    if let Some(path) = &source.input {
        let text =
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let record: SpectrumRecord =
            serde_json::from_str(&text).map_err(|e| format!("bad JSON in {}: {e}", path.display()))?;
        let normalize = record.normalize.unwrap_or(source.normalize);
        return make_spectrum(
            record.m,
            record.n,
            &record.eigenvalues,
            normalize,
            source.sum_tol,
        );
    }
    match (source.m, source.n, &source.eigenvalues) {
        (Some(m), Some(n), Some(list)) => {
            let values = parse_eigenvalue_list(list)?;
            make_spectrum(m, n, &values, source.normalize, source.sum_tol)
        }
        _ => Err("provide --m, --n and --eigenvalues together, or --input FILE".to_owned()),
    }
}

/// Writes the payload to `--output` when given, standard output otherwise.
fn emit(payload: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, payload)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let _ = out.write_all(payload.as_bytes());
            Ok(())
        }
    }
}

fn kind_key(kind: VerdictKind) -> String {
    serde_json::to_value(kind)
        .expect("verdict kind serializes")
        .as_str()
        .expect("verdict kind is a string")
        .to_owned()
}

fn all_kinds() -> [VerdictKind; 4] {
    [
        VerdictKind::AbsolutelyPptExact,
        VerdictKind::AbsolutelyPptSufficient,
        VerdictKind::NotAbsolutelyPpt,
        VerdictKind::Indeterminate,
    ]
}

fn cmd_classify(args: ClassifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let tol = match tolerances_from(args.tol) {
        Ok(t) => t,
        Err(msg) => return fail(err, &msg, EXIT_VALIDATION),
    };
    let spectrum = match resolve_spectrum(&args.source) {
        Ok(s) => s,
        Err(msg) => return fail(err, &msg, EXIT_VALIDATION),
    };
    match classify(&spectrum, &tol) {
        Ok(report) => {
            let mut payload =
                serde_json::to_string_pretty(&report).expect("report serializes");
            payload.push('\n');
            match emit(&payload, &args.output, out) {
                Ok(()) => EXIT_OK,
                Err(msg) => fail(err, &msg, EXIT_VALIDATION),
            }
        }
        Err(e) => fail(err, &e.to_string(), EXIT_INTERNAL),
    }
}

enum BatchFormat {
    Csv,
    JsonLines,
}

fn parse_csv_row(line: &str) -> Result<(usize, usize, Vec<f64>), String> {
    let mut fields = line.split(',').map(str::trim);
    let m = fields
        .next()
        .filter(|f| !f.is_empty())
        .ok_or("missing m")?
        .parse::<usize>()
        .map_err(|e| format!("bad m: {e}"))?;
    let n = fields
        .next()
        .filter(|f| !f.is_empty())
        .ok_or("missing n")?
        .parse::<usize>()
        .map_err(|e| format!("bad n: {e}"))?;
    let values = fields
        .map(|f| {
            f.parse::<f64>()
                .map_err(|e| format!("bad eigenvalue {f:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((m, n, values))
}

fn cmd_batch(args: BatchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let tol = match tolerances_from(args.tol) {
        Ok(t) => t,
        Err(msg) => return fail(err, &msg, EXIT_VALIDATION),
    };
    if let Err(msg) = check_sum_tol(args.sum_tol) {
        return fail(err, &msg, EXIT_VALIDATION);
    }
    let format = match args
        .input
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("csv") => BatchFormat::Csv,
        Some("jsonl") => BatchFormat::JsonLines,
        other => {
            return fail(
                err,
                &format!(
                    "unsupported input extension {:?}; expected .csv or .jsonl",
                    other.unwrap_or("none")
                ),
                EXIT_VALIDATION,
            )
        }
    };
    let text = match fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            return fail(
                err,
                &format!("cannot read {}: {e}", args.input.display()),
                EXIT_VALIDATION,
            )
        }
    };

    #[derive(Serialize)]
    struct LineError<'a> {
        line: usize,
        error: &'a str,
    }

    let mut payload = String::new();
    let mut counts: BTreeMap<String, usize> =
        all_kinds().iter().map(|&k| (kind_key(k), 0)).collect();
    let mut errors = 0usize;
    let mut successes = 0usize;
    let mut attempted = 0usize;

    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        attempted += 1;
        let line_no = index + 1;
        let built = match format {
            BatchFormat::Csv => parse_csv_row(line)
                .and_then(|(m, n, v)| make_spectrum(m, n, &v, args.normalize, args.sum_tol)),
            BatchFormat::JsonLines => serde_json::from_str::<SpectrumRecord>(line)
                .map_err(|e| format!("bad JSON: {e}"))
                .and_then(|r| {
                    let normalize = r.normalize.unwrap_or(args.normalize);
                    make_spectrum(r.m, r.n, &r.eigenvalues, normalize, args.sum_tol)
                }),
        };
        let outcome: Result<Report, String> =
            built.and_then(|s| classify(&s, &tol).map_err(|e| e.to_string()));
        match outcome {
            Ok(report) => {
                successes += 1;
                *counts.entry(kind_key(report.verdict.kind)).or_insert(0) += 1;
                payload.push_str(&serde_json::to_string(&report).expect("report serializes"));
                payload.push('\n');
            }
            Err(message) => {
                errors += 1;
                let record = LineError {
                    line: line_no,
                    error: &message,
                };
                payload.push_str(&serde_json::to_string(&record).expect("error serializes"));
                payload.push('\n');
            }
        }
    }

    #[derive(Serialize)]
    struct Summary<'a> {
        summary: &'a BTreeMap<String, usize>,
    }
    let mut summary = counts;
    summary.insert("errors".to_owned(), errors);
    payload.push_str(&serde_json::to_string(&Summary { summary: &summary }).unwrap());
    payload.push('\n');

    if let Err(msg) = emit(&payload, &args.output, out) {
        return fail(err, &msg, EXIT_VALIDATION);
    }
    if attempted > 0 && successes == 0 {
        return fail(err, "no input line could be processed", EXIT_VALIDATION);
    }
    EXIT_OK
}

fn cmd_sample(args: SampleArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let tol = match tolerances_from(args.tol) {
        Ok(t) => t,
        Err(msg) => return fail(err, &msg, EXIT_VALIDATION),
    };
    let dims = match Dims::new(args.m, args.n) {
        Ok(d) => d,
        Err(e) => return fail(err, &e.to_string(), EXIT_VALIDATION),
    };

    #[derive(Serialize)]
    struct CountFraction {
        count: usize,
        fraction: f64,
    }
    #[derive(Serialize)]
    struct Survey {
        dims: Dims,
        count: usize,
        seed: u64,
        verdicts: BTreeMap<String, CountFraction>,
        criteria: BTreeMap<String, CountFraction>,
    }

    let mut verdict_counts: BTreeMap<String, usize> =
        all_kinds().iter().map(|&k| (kind_key(k), 0)).collect();
    let mut criteria_counts: BTreeMap<String, usize> = BTreeMap::new();
    for spectrum in sample_uniform_simplex(dims, args.count, args.seed) {
        let report = match classify(&spectrum, &tol) {
            Ok(r) => r,
            Err(e) => return fail(err, &e.to_string(), EXIT_INTERNAL),
        };
        *verdict_counts
            .entry(kind_key(report.verdict.kind))
            .or_insert(0) += 1;
        for outcome in &report.criteria {
            let slot = criteria_counts.entry(outcome.name.clone()).or_insert(0);
            if outcome.fired {
                *slot += 1;
            }
        }
    }
    let fraction = |c: usize| {
        if args.count == 0 {
            0.0
        } else {
            c as f64 / args.count as f64
        }
    };
    let survey = Survey {
        dims,
        count: args.count,
        seed: args.seed,
        verdicts: verdict_counts
            .into_iter()
            .map(|(k, c)| {
                (
                    k,
                    CountFraction {
                        count: c,
                        fraction: fraction(c),
                    },
                )
            })
            .collect(),
        criteria: criteria_counts
            .into_iter()
            .map(|(k, c)| {
                (
                    k,
                    CountFraction {
                        count: c,
                        fraction: fraction(c),
                    },
                )
            })
            .collect(),
    };
    let mut payload = serde_json::to_string_pretty(&survey).expect("survey serializes");
    payload.push('\n');
    match emit(&payload, &args.output, out) {
        Ok(()) => EXIT_OK,
        Err(msg) => fail(err, &msg, EXIT_VALIDATION),
    }
}

/// Renders the symbolic entry grid of Λ̂ for one ordering pair: positive
/// ranks appear as "pn", "pn-1", … (for λ_{pn+1−σ₊}) and the strictly lower
/// triangle as "-1", "-2", … (for −λ_{σ₋}).
fn symbolic_grid(op: &OrderingPair) -> Vec<Vec<String>> {
    let p = op.p();
    (0..p)
        .map(|r| {
            (0..p)
                .map(|c| {
                    if r <= c {
                        let rank = op.sigma_plus(r + 1, c + 1);
                        if rank == 1 {
                            format!("{p}n")
                        } else {
                            format!("{p}n-{}", rank - 1)
                        }
                    } else {
                        format!("-{}", op.sigma_minus(c + 1, r + 1))
                    }
                })
                .collect()
        })
        .collect()
}

fn cmd_orderings(args: OrderingsArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.p < 2 {
        return fail(err, "--p must be at least 2", EXIT_VALIDATION);
    }

    #[derive(Serialize)]
    struct Template {
        index: usize,
        sigma_plus: Vec<usize>,
        sigma_minus: Vec<usize>,
        grid: Vec<Vec<String>>,
    }
    #[derive(Serialize)]
    struct Dump {
        p: usize,
        mode: &'static str,
        count: usize,
        templates: Vec<Template>,
    }

    let (mode, pairs): (&'static str, Vec<OrderingPair>) = match args.samples {
        Some(samples) => (
            "sampled",
            sample_pairs(args.p, args.seed, samples),
        ),
        None => match canonical_pairs(args.p) {
            Ok(pairs) => ("canonical", pairs.to_vec()),
            Err(_) => {
                return fail(
                    err,
                    &format!(
                        "no canonical template list for p = {}; pass --samples for sampled discovery",
                        args.p
                    ),
                    EXIT_VALIDATION,
                )
            }
        },
    };
    let templates: Vec<Template> = pairs
        .iter()
        .enumerate()
        .map(|(i, op)| Template {
            index: i + 1,
            sigma_plus: op.sigma_plus_ranks().to_vec(),
            sigma_minus: op.sigma_minus_ranks().to_vec(),
            grid: symbolic_grid(op),
        })
        .collect();
    let dump = Dump {
        p: args.p,
        mode,
        count: templates.len(),
        templates,
    };
    let mut payload = serde_json::to_string_pretty(&dump).expect("dump serializes");
    payload.push('\n');
    match emit(&payload, &args.output, out) {
        Ok(()) => EXIT_OK,
        Err(msg) => fail(err, &msg, EXIT_VALIDATION),
    }
}

fn cmd_examples(args: ExamplesArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if !args.tol.is_finite() || args.tol <= 0.0 {
        return fail(err, "--tol must be positive and finite", EXIT_VALIDATION);
    }
    let mut payload = String::new();
    if args.list {
        for fx in fixtures::all() {
            payload.push_str(&format!(
                "{} ({}x{}): expect {:?}; values {:?}\n",
                fx.name, fx.m, fx.n, fx.expected_verdict, fx.values
            ));
            for &(index, eigs) in fx.expected_eigenvalues {
                payload.push_str(&format!("  matrix {index} eigenvalues {eigs:?}\n"));
            }
            for &(name, margin) in fx.expected_margins {
                payload.push_str(&format!("  margin {name} = {margin}\n"));
            }
        }
        return match emit(&payload, &args.output, out) {
            Ok(()) => EXIT_OK,
            Err(msg) => fail(err, &msg, EXIT_VALIDATION),
        };
    }

    let tol = Tolerances::default();
    let mut passed = 0usize;
    let mut total = 0usize;
    for fx in fixtures::all() {
        let results = match fixtures::run_checks(fx, &tol, args.tol) {
            Ok(r) => r,
            Err(e) => return fail(err, &e.to_string(), EXIT_INTERNAL),
        };
        for r in results {
            total += 1;
            if r.passed {
                passed += 1;
            }
            payload.push_str(&format!(
                "{} {} / {}: {}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.fixture,
                r.check,
                r.detail
            ));
        }
    }
    payload.push_str(&format!("{passed}/{total} checks passed\n"));
    if let Err(msg) = emit(&payload, &args.output, out) {
        return fail(err, &msg, EXIT_VALIDATION);
    }
    if passed == total {
        EXIT_OK
    } else {
        EXIT_GOLDEN_FAILURE
    }
}

fn cmd_oracle(args: OracleArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let tol = match tolerances_from(args.tol) {
        Ok(t) => t,
        Err(msg) => return fail(err, &msg, EXIT_VALIDATION),
    };
    let spectrum = match resolve_spectrum(&args.source) {
        Ok(s) => s,
        Err(msg) => return fail(err, &msg, EXIT_VALIDATION),
    };
    let dims = spectrum.dims();
    if dims.total() > FALSIFIER_DIMENSION_LIMIT {
        return fail(
            err,
            &format!(
                "total dimension {} exceeds the oracle limit {FALSIFIER_DIMENSION_LIMIT}",
                dims.total()
            ),
            EXIT_VALIDATION,
        );
    }

    #[derive(Serialize)]
    struct FalsifierSection {
        trials: usize,
        violation_found: bool,
        witness: Option<FalsifierWitness>,
        note: String,
    }
    #[derive(Serialize)]
    struct OracleOutput {
        dims: Dims,
        seed: u64,
        falsifier: FalsifierSection,
        x_witness_supported: bool,
        x_witness: Option<XWitness>,
    }

    let falsifier = match random_unitary_falsifier(&spectrum, args.trials, args.seed, &tol) {
        Ok(result) => result,
        Err(OracleError::DimensionTooLarge { total, limit }) => {
            return fail(
                err,
                &format!("total dimension {total} exceeds the oracle limit {limit}"),
                EXIT_VALIDATION,
            )
        }
        Err(e) => return fail(err, &e.to_string(), EXIT_INTERNAL),
    };
    let note = match &falsifier {
        Some(w) => format!(
            "violation found at trial {} (evidence of a non-PPT image)",
            w.trial
        ),
        None => format!(
            "no violation found in {} trials (evidence, not proof)",
            args.trials
        ),
    };
    let supported = dims.p() <= 4;
    let witness = if supported {
        match x_witness(&spectrum, &tol) {
            Ok(w) => w,
            Err(e) => return fail(err, &e.to_string(), EXIT_INTERNAL),
        }
    } else {
        None
    };
    let output = OracleOutput {
        dims,
        seed: args.seed,
        falsifier: FalsifierSection {
            trials: args.trials,
            violation_found: falsifier.is_some(),
            witness: falsifier,
            note,
        },
        x_witness_supported: supported,
        x_witness: witness,
    };
    let mut payload = serde_json::to_string_pretty(&output).expect("output serializes");
    payload.push('\n');
    match emit(&payload, &args.output, out) {
        Ok(()) => EXIT_OK,
        Err(msg) => fail(err, &msg, EXIT_VALIDATION),
    }
}
