//! Classify a single spectrum and walk through every part of the report.
//!
//! Run with:
//!
//! ```text
//! cargo run -p absep --example classify_spectrum
//! ```
//!
//! The classifier answers one question from the eigenvalues alone: does every
//! global unitary rotation of this spectrum stay PPT? Three answers are
//! possible — yes (exactly, or by a sufficient condition), no (with a
//! certificate), or indeterminate.

use absep::criteria::{classify, VerdictKind};
use absep::fixtures;
use absep::linalg::Tolerances;

fn main() {
    let tol = Tolerances::default();

    // A qutrit-qutrit spectrum that is absolutely PPT, but not so mixed that
    // the purity ball alone would settle it (it ships as a named fixture).
    let fixture = fixtures::by_name("qutrit-abs-ppt").expect("fixture");
    let spectrum = fixture.spectrum();
    println!("fixture         : {} — {}", fixture.name, fixture.description);

    let report = classify(&spectrum, &tol).expect("classify");

    println!("dims            : {} x {}", report.dims.m(), report.dims.n());
    println!("verdict         : {:?}", report.verdict.kind);
    if let Some(by) = &report.verdict.by {
        println!("decided by      : {by}");
    }
    println!();

    // Every criterion that applies at these dimensions reports whether it
    // fired and by what margin (positive margin = fired with room to spare).
    println!("{:<24} {:>6} {:>12}", "criterion", "fired", "margin");
    for outcome in &report.criteria {
        println!(
            "{:<24} {:>6} {:>12.6}",
            outcome.name, outcome.fired, outcome.margin
        );
    }
    println!();

    // Diagnostics are always present, whatever the verdict.
    let d = &report.diagnostics;
    println!("purity          : {:.6}", d.purity);
    println!("gurvits ball    : {:.6}  (purity at or below this is always separable)", d.gurvits_ball);
    println!("sum criterion   : {:.6}", d.jivulescu_sum3);
    println!("purity window   : [{:.6}, {:.6}]", d.purity_lower, d.purity_upper);
    println!();

    match report.verdict.kind {
        VerdictKind::AbsolutelyPptExact => {
            println!("All canonical matricizations are positive semidefinite, so the");
            println!("answer is exact: no global unitary can break PPT.");
        }
        VerdictKind::AbsolutelyPptSufficient => {
            println!("A sufficient condition fired; the state is absolutely PPT even");
            println!("though no exact test exists at these dimensions.");
        }
        VerdictKind::NotAbsolutelyPpt => {
            let w = report.verdict.witness.as_ref().expect("witness");
            println!("A matricization is not PSD — witness matrix {:?},", w.matrix_index);
            println!("minimum eigenvalue {:?}.", w.min_eigenvalue);
        }
        VerdictKind::Indeterminate => {
            println!("No criterion resolved the spectrum either way.");
        }
    }

    // The full report serializes to JSON; this is the same payload the
    // `classify` subcommand prints.
    println!();
    println!("--- JSON report ---");
    println!("{}", serde_json::to_string_pretty(&report).expect("json"));
}
