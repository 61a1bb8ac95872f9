//! Reference spectra with independently verified expected outcomes.
//!
//! Each fixture carries a spectrum exactly as published (values rounded to
//! four decimals, so the sums miss 1 by up to a few 1e−4 — hence the wide
//! embedded sum tolerance), the expected verdict, expected eigenvalues of
//! selected canonical matricizations, and expected criterion margins. The
//! golden-test runner (`examples` subcommand) and the acceptance suite both
//! consume these.

use crate::criteria::{self, classify, CriteriaError, VerdictKind};
use crate::linalg::{sym_eigenvalues, Tolerances};
use crate::matricization::{build_lambda_sym, canonical_pairs};
use crate::spectrum::{Dims, Spectrum};

/// Comparison tolerance for expected eigenvalues and margins: the published
/// values are rounded to four decimals.
pub const COMPARE_TOLERANCE: f64 = 5e-4;

/// Tighter tolerance used by the acceptance suite for criterion margins.
pub const MARGIN_TOLERANCE: f64 = 1e-4;

/// Sum tolerance for fixture spectra (rounded published values).
pub const FIXTURE_SUM_TOLERANCE: f64 = 2e-3;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub m: usize,
    pub n: usize,
    /// Eigenvalues in descending order, exactly as published.
    pub values: &'static [f64],
    pub expected_verdict: VerdictKind,
    /// Expected ascending eigenvalues of selected canonical matricizations,
    /// keyed by 1-based canonical index.
    pub expected_eigenvalues: &'static [(usize, &'static [f64])],
    /// Expected reduced-set condition detected by the ququart shortcut.
    pub shortcut_condition: Option<u8>,
    /// Expected criterion margins, keyed by criterion name.
    pub expected_margins: &'static [(&'static str, f64)],
}

impl Fixture {
    pub fn dims(&self) -> Dims {
        Dims::new(self.m, self.n).expect("fixture dims are valid")
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::new(self.dims(), self.values, FIXTURE_SUM_TOLERANCE)
            .expect("fixture values form a valid spectrum")
    }
}

const QUTRIT_ABS: Fixture = Fixture {
    name: "qutrit-abs-ppt",
    description: "3x3 spectrum close to maximally mixed; absolutely PPT with \
                  both canonical matrices comfortably PSD",
    m: 3,
    n: 3,
    values: &[
        0.1336, 0.1336, 0.1111, 0.1111, 0.1111, 0.1111, 0.0961, 0.0961, 0.0961,
    ],
    expected_verdict: VerdictKind::AbsolutelyPptExact,
    expected_eigenvalues: &[
        (1, &[0.1510, 0.2122, 0.2435]),
        (2, &[0.1521, 0.2222, 0.2623]),
    ],
    shortcut_condition: None,
    expected_margins: &[(criteria::names::SUFFICIENT_SUM, 0.0211)],
};

const QUTRIT_NOT_ABS: Fixture = Fixture {
    name: "qutrit-not-abs-ppt",
    description: "3x3 spectrum with one dominant eigenvalue; both canonical \
                  matrices develop a negative eigenvalue",
    m: 3,
    n: 3,
    values: &[
        0.6412, 0.0923, 0.0905, 0.0436, 0.0430, 0.0311, 0.0228, 0.0185, 0.0171,
    ],
    expected_verdict: VerdictKind::NotAbsolutelyPpt,
    expected_eigenvalues: &[
        (1, &[-0.5916, 0.0957, 0.6627]),
        (2, &[-0.5849, 0.0970, 0.6714]),
    ],
    shortcut_condition: None,
    expected_margins: &[(criteria::names::NOT_ABS_GENERAL, 0.0215)],
};

const QUQUART_ABS: Fixture = Fixture {
    name: "ququart-abs-ppt",
    description: "4x4 spectrum with a six-fold degenerate tail enabling the \
                  single-matrix shortcut; absolutely PPT",
    m: 4,
    n: 4,
    values: &[
        0.0775, 0.0775, 0.0625, 0.0625, 0.0625, 0.0625, 0.0625, 0.0625, 0.0625, 0.0625, 0.0625,
        0.0625, 0.0625, 0.0625, 0.0475, 0.0475,
    ],
    expected_verdict: VerdictKind::AbsolutelyPptExact,
    expected_eigenvalues: &[(1, &[0.0733, 0.1250, 0.1250, 0.1467])],
    shortcut_condition: Some(3),
    expected_margins: &[(criteria::names::SUFFICIENT_SUM, 0.0025)],
};

const QUQUART_NOT_ABS: Fixture = Fixture {
    name: "ququart-not-abs-ppt",
    description: "4x4 spectrum with one dominant eigenvalue and a six-fold \
                  degenerate tail; the first canonical matrix rejects it",
    m: 4,
    n: 4,
    values: &[
        0.4894, 0.0897, 0.0812, 0.0653, 0.0459, 0.0449, 0.0432, 0.0220, 0.0168, 0.0168, 0.0168,
        0.0168, 0.0168, 0.0168, 0.0154, 0.0026,
    ],
    expected_verdict: VerdictKind::NotAbsolutelyPpt,
    expected_eigenvalues: &[(1, &[-0.4781, 0.0447, 0.0965, 0.4955])],
    shortcut_condition: Some(3),
    expected_margins: &[(criteria::names::NOT_ABS_QUQUART, 0.0300)],
};

/// All fixtures, in presentation order.
pub fn all() -> &'static [Fixture] {
    const ALL: [Fixture; 4] = [QUTRIT_ABS, QUTRIT_NOT_ABS, QUQUART_ABS, QUQUART_NOT_ABS];
    &ALL
}

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    all().iter().find(|fx| fx.name == name)
}

/// Outcome of one golden check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub fixture: &'static str,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

/// Runs every golden check for a fixture: the verdict kind, the expected
/// matricization eigenvalues, the shortcut condition, and the expected
/// margins, all compared within `compare_tol`.
pub fn run_checks(
    fx: &Fixture,
    tol: &Tolerances,
    compare_tol: f64,
) -> Result<Vec<CheckResult>, CriteriaError> {
    let spectrum = fx.spectrum();
    let report = classify(&spectrum, tol)?;
    let mut results = Vec::new();

    results.push(CheckResult {
        fixture: fx.name,
        check: "verdict".to_owned(),
        passed: report.verdict.kind == fx.expected_verdict,
        detail: format!(
            "expected {:?}, got {:?}",
            fx.expected_verdict, report.verdict.kind
        ),
    });

    let pairs = canonical_pairs(spectrum.dims().p())?;
    for &(index, expected) in fx.expected_eigenvalues {
        let matrix = build_lambda_sym(&spectrum, &pairs[index - 1])?;
        let eig = sym_eigenvalues(&matrix, tol)?;
        let worst_gap = expected
            .iter()
            .zip(&eig.eigenvalues)
            .map(|(e, g)| (e - g).abs())
            .fold(0.0f64, f64::max);
        results.push(CheckResult {
            fixture: fx.name,
            check: format!("eigenvalues[{index}]"),
            passed: eig.eigenvalues.len() == expected.len() && worst_gap <= compare_tol,
            detail: format!(
                "expected {:?}, got {:?} (max gap {worst_gap:.2e})",
                expected, eig.eigenvalues
            ),
        });
    }

    if let Some(expected_condition) = fx.shortcut_condition {
        let shortcut = criteria::ququart_shortcut(&spectrum, tol)?;
        let got = shortcut
            .detail
            .get("condition")
            .copied()
            .unwrap_or(0.0) as u8;
        results.push(CheckResult {
            fixture: fx.name,
            check: "shortcut_condition".to_owned(),
            passed: got == expected_condition,
            detail: format!("expected condition {expected_condition}, got {got}"),
        });
    }

    for &(name, expected_margin) in fx.expected_margins {
        let outcome = report.criteria.iter().find(|c| c.name == name);
        let (passed, detail) = match outcome {
            Some(c) => (
                (c.margin - expected_margin).abs() <= compare_tol,
                format!("expected {expected_margin}, got {:.6}", c.margin),
            ),
            None => (false, format!("criterion {name} missing from report")),
        };
        results.push(CheckResult {
            fixture: fx.name,
            check: format!("margin[{name}]"),
            passed,
            detail,
        });
    }

    Ok(results)
}
