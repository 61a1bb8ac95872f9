//! Classify whole files of spectra through the command-line entry point.
//!
//! Run with:
//!
//! ```text
//! cargo run -p absep --example batch_files
//! ```
//!
//! The `batch` subcommand reads one spectrum per line — CSV
//! (`m,n,lambda1,...`) or JSONL (`{"m":…,"n":…,"eigenvalues":[…]}`) — and
//! writes one JSON report per line plus a final summary. Bad lines become
//! error records instead of aborting the run, so a long file always produces
//! a complete account. This example builds both file formats in a temporary
//! directory and drives the real CLI on them in-process.

use std::io::Write as _;

use absep::cli;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run_from(args.iter().copied(), &mut out, &mut err);
    if !err.is_empty() {
        eprint!("{}", String::from_utf8_lossy(&err));
    }
    (code, String::from_utf8(out).expect("utf8 output"))
}

fn main() {
    let dir = tempfile::tempdir().expect("tempdir");

    // --- CSV: m, n, then mn eigenvalues; order does not matter. ---
    let csv_path = dir.path().join("spectra.csv");
    let mut csv = std::fs::File::create(&csv_path).expect("create csv");
    writeln!(csv).expect("write"); // blank lines are skipped
    writeln!(csv, "2,2,0.25,0.25,0.25,0.25").expect("write");
    writeln!(csv, "2,2,0.97,0.01,0.01,0.01").expect("write");
    writeln!(csv, "3,3,0.6412,0.0923,0.0905,0.0436,0.0430,0.0311,0.0228,0.0185,0.0171")
        .expect("write");
    writeln!(csv, "2,2,oops").expect("write");
    drop(csv);

    println!("=== batch over CSV ===");
    let (code, out) = run(&[
        "absep",
        "batch",
        "--sum-tol",
        "2e-3",
        "--input",
        csv_path.to_str().expect("path"),
    ]);
    println!("exit code {code}");
    for line in out.lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("json line");
        if let Some(kind) = value["verdict"]["kind"].as_str() {
            println!("  report : {} x {}  ->  {kind}", value["dims"]["m"], value["dims"]["n"]);
        } else if value["error"].is_string() {
            println!("  error  : line {}: {}", value["line"], value["error"]);
        } else {
            println!("  summary: {}", value["summary"]);
        }
    }
    println!();

    // --- JSONL: explicit records; `normalize` rescales raw weights. ---
    let jsonl_path = dir.path().join("spectra.jsonl");
    let mut jsonl = std::fs::File::create(&jsonl_path).expect("create jsonl");
    writeln!(
        jsonl,
        r#"{{"m": 2, "n": 3, "eigenvalues": [0.4, 0.2, 0.15, 0.1, 0.1, 0.05]}}"#
    )
    .expect("write");
    writeln!(
        jsonl,
        r#"{{"m": 2, "n": 2, "eigenvalues": [4.0, 3.0, 2.0, 1.0], "normalize": true}}"#
    )
    .expect("write");
    drop(jsonl);

    println!("=== batch over JSONL ===");
    let (code, out) = run(&[
        "absep",
        "batch",
        "--input",
        jsonl_path.to_str().expect("path"),
    ]);
    println!("exit code {code}");
    for line in out.lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("json line");
        if let Some(kind) = value["verdict"]["kind"].as_str() {
            println!("  report : {} x {}  ->  {kind}", value["dims"]["m"], value["dims"]["n"]);
        } else {
            println!("  summary: {}", value["summary"]);
        }
    }
    println!();

    // Reports can also be routed to a file with --output; stdout stays quiet.
    let out_path = dir.path().join("reports.jsonl");
    let (code, out) = run(&[
        "absep",
        "batch",
        "--input",
        jsonl_path.to_str().expect("path"),
        "--output",
        out_path.to_str().expect("path"),
    ]);
    let written = std::fs::read_to_string(&out_path).expect("read output");
    println!("=== batch with --output ===");
    println!(
        "exit code {code}, stdout {} bytes, file {} lines",
        out.len(),
        written.lines().count()
    );
}
