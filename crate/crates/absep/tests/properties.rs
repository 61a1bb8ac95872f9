//! Randomized invariant suite over deterministic flat-Dirichlet ensembles.
//!
//! Every test here asserts a *provable* relation between criteria, or pins a
//! counterexample showing why a tempting stronger relation is not asserted.
//! Ensembles are seeded per draw, so failures reproduce exactly.

use absep::criteria::{self, all_rows_dominant, classify, names, VerdictKind};
use absep::linalg::{all_ones_quadratic, is_psd, row_diagonally_dominant, Tolerances};
use absep::matricization::{build_lambda_sym, canonical_pairs, column_major_pair};
use absep::oracle::{random_unitary_falsifier, x_witness};
use absep::spectrum::{sample_uniform_simplex, Dims, Spectrum};

const ENSEMBLE_SIZE: usize = 5_000;
const SEED: u64 = 31_337;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn dims(m: usize, n: usize) -> Dims {
    Dims::new(m, n).expect("dims")
}

/// `t·x + (1−t)·uniform`: pulls a draw toward the simplex center, where the
/// sufficient conditions actually fire. The sum stays 1 exactly up to
/// rounding, so the strict constructor applies.
fn toward_uniform(s: &Spectrum, t: f64) -> Spectrum {
    let center = 1.0 / s.dims().total() as f64;
    let values: Vec<f64> = s.values().iter().map(|v| t * v + (1.0 - t) * center).collect();
    Spectrum::new(s.dims(), &values, 1e-9).expect("mixed spectrum")
}

fn exact_outcome(s: &Spectrum, t: &Tolerances) -> criteria::CriterionOutcome {
    match s.dims().p() {
        2 => criteria::exact_qubit(s, t).expect("exact"),
        3 => criteria::exact_qutrit(s, t).expect("exact"),
        4 => criteria::exact_ququart(s, t).expect("exact"),
        p => panic!("no exact criterion for p = {p}"),
    }
}

/// For m ≤ 3 the two-smallest condition is proven sufficient, so it must
/// agree with the exact tests. (For m ≥ 4 it is *not* sound — see
/// `two_smallest_unsoundness_is_pinned_elsewhere` below — which is why the
/// sweep stops at m = 3.)
#[test]
fn two_smallest_implies_exact_for_m_up_to_3() {
    let t = tol();
    let mut firings = 0usize;
    for &(m, n) in &[(2usize, 2usize), (2, 4), (3, 3), (3, 5)] {
        for s in sample_uniform_simplex(dims(m, n), ENSEMBLE_SIZE, SEED) {
            // Raw draws rarely satisfy the premise for larger grids, so also
            // test a center-pulled copy of every draw.
            for s in [toward_uniform(&s, 0.15), s] {
                let premise = criteria::sufficient_two_smallest(&s, &t);
                if !premise.fired {
                    continue;
                }
                firings += 1;
                let exact = exact_outcome(&s, &t);
                assert!(
                    exact.fired,
                    "two-smallest fired but exact rejected at ({m},{n}): {:?}",
                    s.values()
                );
            }
        }
    }
    assert!(firings > 100, "premise fired only {firings} times; sweep too weak");
}

/// The provable consequence of the two-smallest premise, for every m: from
/// `λ_N + λ_{N−1} ≥ λ₁` and the ordering, `2λ_N + λ_{N−1} + λ_{N−2} ≥
/// 2(λ_N + λ_{N−1}) ≥ 2λ₁ ≥ λ₁ + λ₂`.
#[test]
fn two_smallest_implies_doubled_tail_inequality() {
    let t = tol();
    let mut firings = 0usize;
    for &(m, n) in &[(2usize, 3usize), (3, 3), (4, 4), (5, 5)] {
        for s in sample_uniform_simplex(dims(m, n), ENSEMBLE_SIZE, SEED + 1) {
            let s = toward_uniform(&s, 0.1);
            if !criteria::sufficient_two_smallest(&s, &t).fired {
                continue;
            }
            firings += 1;
            let total = s.dims().total();
            let lhs = 2.0 * s.lambda(total) + s.lambda(total - 1) + s.lambda(total - 2);
            let rhs = s.lambda(1) + s.lambda(2);
            assert!(
                lhs >= rhs - 1e-12,
                "doubled-tail inequality failed at ({m},{n}): {lhs} < {rhs}"
            );
        }
    }
    assert!(firings > 100, "premise fired only {firings} times");
}

/// Pinned counterexample: the two-smallest premise does NOT imply the sum
/// condition, already at m = 3. With six eigenvalues at `a = 1.8b` and three
/// at `b`, the premise holds (`2b ≥ 1.8b`) while the sum condition fails
/// (`3b < 2·1.8b`). The exact test still accepts, as the premise demands.
/// This is why no `two_smallest ⇒ sufficient_sum` chain is asserted above.
#[test]
fn two_smallest_does_not_imply_sufficient_sum() {
    let t = tol();
    let b = 1.0 / 13.8;
    let a = 1.8 * b;
    let values = [a, a, a, a, a, a, b, b, b];
    let s = Spectrum::new(dims(3, 3), &values, 1e-9).expect("spectrum");

    let premise = criteria::sufficient_two_smallest(&s, &t);
    assert!(premise.fired, "premise should fire: margin {}", premise.margin);

    let sum = criteria::sufficient_sum(&s, &t);
    assert!(!sum.fired, "sum condition should fail: margin {}", sum.margin);
    assert!(sum.margin < -0.04, "sum margin should fail decisively, got {}", sum.margin);

    let exact = criteria::exact_qutrit(&s, &t).expect("exact");
    assert!(exact.fired, "exact must accept: margin {}", exact.margin);
}

/// Mechanism behind the sum condition at p = 4: when it fires, every one of
/// the twelve canonical matrices is diagonally dominant in every row (which
/// is what makes them all PSD at once).
#[test]
fn sufficient_sum_forces_diagonal_dominance_at_p4() {
    let t = tol();
    let mut firings = 0usize;
    for &(m, n) in &[(4usize, 4usize), (4, 6)] {
        for s in sample_uniform_simplex(dims(m, n), 1_500, SEED + 2) {
            let s = toward_uniform(&s, 0.12);
            if !criteria::sufficient_sum(&s, &t).fired {
                continue;
            }
            firings += 1;
            for (index, op) in canonical_pairs(4).expect("canonical").iter().enumerate() {
                let matrix = build_lambda_sym(&s, op).expect("matricization");
                assert!(
                    all_rows_dominant(&matrix).expect("dominance"),
                    "matrix {} not dominant though sum fired at ({m},{n})",
                    index + 1
                );
            }
        }
    }
    assert!(firings > 50, "sum condition fired only {firings} times");
}

/// Mechanism behind the general violation criterion: when it fires, the
/// column-major matricization has no diagonally dominant row, its all-ones
/// quadratic form is nonpositive, and it is not PSD.
#[test]
fn violation_breaks_dominance_of_column_major_matrix() {
    let t = tol();
    let mut firings = 0usize;
    for &(m, n) in &[(3usize, 3usize), (3, 5), (4, 4), (4, 6)] {
        for s in sample_uniform_simplex(dims(m, n), 1_500, SEED + 3) {
            let violation = criteria::not_abs_general(&s, &t).expect("criterion");
            if !violation.fired {
                continue;
            }
            firings += 1;
            let matrix = build_lambda_sym(&s, &column_major_pair(s.dims().p()))
                .expect("matricization");
            for row in 0..matrix.size() {
                assert!(
                    !row_diagonally_dominant(&matrix, row).expect("row"),
                    "row {row} dominant though the violation fired at ({m},{n}): {:?}",
                    s.values()
                );
            }
            assert!(
                all_ones_quadratic(&matrix) <= 1e-12,
                "all-ones quadratic positive at ({m},{n})"
            );
            assert!(
                !is_psd(&matrix, &t).expect("psd").is_psd,
                "matrix PSD though the violation fired at ({m},{n})"
            );
        }
    }
    assert!(firings > 500, "violation fired only {firings} times");
}

/// The reduced ququart test must agree with the full twelve-matrix test
/// whenever one of its degeneracy conditions holds. Conditions are forced by
/// averaging the relevant tail block(s) of random draws, which preserves both
/// the ordering and the total sum.
#[test]
fn ququart_shortcut_agrees_with_exact_under_forced_ties() {
    let t = tol();
    // Tail positions are 1-based eigenvalue indices N−7 ..= N−2; each entry
    // lists the blocks to average and the condition that must be detected.
    let cases: [(&[&[usize]], f64); 3] = [
        (&[&[7, 6], &[3, 2]], 1.0),
        (&[&[7, 6, 5], &[3, 2]], 2.0),
        (&[&[7, 6, 5, 4, 3, 2]], 3.0),
    ];
    for &(m, n) in &[(4usize, 4usize), (4, 5)] {
        let total = m * n;
        for (draw, s) in sample_uniform_simplex(dims(m, n), 400, SEED + 4)
            .iter()
            .enumerate()
        {
            for (blocks, expected_condition) in &cases {
                let mut values = s.values().to_vec();
                for block in *blocks {
                    let mean = block
                        .iter()
                        .map(|back| values[total - 1 - back])
                        .sum::<f64>()
                        / block.len() as f64;
                    for back in *block {
                        values[total - 1 - back] = mean;
                    }
                }
                let tied = Spectrum::new(dims(m, n), &values, 1e-9).expect("tied spectrum");
                let shortcut = criteria::ququart_shortcut(&tied, &t).expect("shortcut");
                assert_eq!(
                    shortcut.detail["condition"], *expected_condition,
                    "condition not detected at ({m},{n}) draw {draw}"
                );
                let exact = criteria::exact_ququart(&tied, &t).expect("exact");
                assert_eq!(
                    shortcut.fired, exact.fired,
                    "shortcut disagrees with exact at ({m},{n}) draw {draw}: {:?}",
                    tied.values()
                );
            }
        }
    }
}

/// The x-witness certifies at least as negative a quadratic form as the
/// eigenvector it came from: rearranging |v| into a descending vector and
/// rebuilding with that vector's own compatible ordering can only lower the
/// form (the matrices have nonpositive off-diagonals, so the minimum
/// eigenvector can be taken entrywise nonnegative, and the compatible
/// ordering is the rearrangement that minimizes the form for fixed entries).
#[test]
fn x_witness_dominates_its_eigenvector_quadratic() {
    let t = tol();
    for &(m, n) in &[(3usize, 3usize), (4, 4)] {
        let mut checked = 0usize;
        for s in sample_uniform_simplex(dims(m, n), 400, SEED + 5) {
            if checked >= 50 {
                break;
            }
            let Some(witness) = x_witness(&s, &t).expect("x_witness") else {
                continue;
            };
            checked += 1;
            assert!(witness.eigenvector_quadratic < 0.0);
            assert!(
                witness.compatible_quadratic <= witness.eigenvector_quadratic + 1e-8,
                "compatible quadratic {} above eigenvector quadratic {} at ({m},{n})",
                witness.compatible_quadratic,
                witness.eigenvector_quadratic
            );
        }
        assert_eq!(checked, 50, "not enough witnesses at ({m},{n})");
    }
}

/// Positive-direction agreement at p = 4: spectra close enough to maximally
/// mixed are accepted by the exact test, and no sampled unitary produces a
/// partial-transpose violation on their orbit.
#[test]
fn falsifier_respects_exact_acceptance_at_p4() {
    let t = tol();
    for (i, s) in sample_uniform_simplex(dims(4, 4), 10, SEED + 6)
        .iter()
        .enumerate()
    {
        let s = toward_uniform(s, 0.05);
        let exact = criteria::exact_ququart(&s, &t).expect("exact");
        assert!(exact.fired, "draw {i} unexpectedly rejected");
        let found = random_unitary_falsifier(&s, 300, SEED + 7, &t).expect("falsifier");
        assert!(found.is_none(), "draw {i}: spurious violation {found:?}");
    }
}

/// Reports are invariant under permuting the raw input and swapping the
/// factor order: only the recorded swap flag may differ.
#[test]
fn classification_invariant_under_reordering_and_dims_swap() {
    let t = tol();
    for &(m, n) in &[(3usize, 5usize), (4, 6)] {
        for s in sample_uniform_simplex(dims(m, n), 25, SEED + 8) {
            // Deterministic shuffle: interleave the two halves ascending.
            let sorted = s.values();
            let half = sorted.len() / 2;
            let mut shuffled = Vec::with_capacity(sorted.len());
            for i in 0..half {
                shuffled.push(sorted[sorted.len() - 1 - i]);
                shuffled.push(sorted[i]);
            }
            shuffled.extend_from_slice(&sorted[half..sorted.len() - half]);

            let swapped = Spectrum::new(Dims::new(n, m).expect("dims"), &shuffled, 1e-9)
                .expect("swapped spectrum");
            assert!(swapped.dims().swapped());
            assert_eq!(swapped.values(), s.values());

            let base = classify(&s, &t).expect("classify");
            let other = classify(&swapped, &t).expect("classify");
            assert_eq!(base.verdict, other.verdict);
            assert_eq!(base.criteria, other.criteria);
            assert_eq!(base.diagnostics, other.diagnostics);
        }
    }
}

/// No spectrum's largest eigenvalue can be below the purity-induced floor.
#[test]
fn purity_floor_never_exceeds_largest_eigenvalue() {
    for &(m, n) in &[(2usize, 2usize), (3, 4), (5, 5)] {
        for s in sample_uniform_simplex(dims(m, n), 2_000, SEED + 9) {
            let floor = criteria::min_largest_eigenvalue_given_purity(
                s.purity(),
                s.dims().total(),
            )
            .expect("in range");
            assert!(
                s.lambda(1) >= floor - 1e-12,
                "largest eigenvalue {} below floor {floor} at ({m},{n})",
                s.lambda(1)
            );
        }
    }
}

/// Verdict consistency where no exact test exists (p ≥ 5): positive verdicts
/// carry a sufficient criterion and a violation-free necessity sample;
/// negative verdicts carry a strictly fired violation; indeterminate verdicts
/// carry nothing.
#[test]
fn p5_and_up_verdicts_are_internally_consistent() {
    let t = tol();
    let mut negatives = 0usize;
    for &(m, n) in &[(5usize, 5usize), (5, 6), (6, 6)] {
        for s in sample_uniform_simplex(dims(m, n), 500, SEED + 10) {
            let report = classify(&s, &t).expect("classify");
            let sampled = report
                .diagnostics
                .sampled_necessity
                .as_ref()
                .expect("sampled necessity attached for p >= 5");
            match report.verdict.kind {
                VerdictKind::AbsolutelyPptSufficient => {
                    let by = report.verdict.by.as_deref().expect("by");
                    assert!(by == names::GURVITS_BALL || by == names::SUFFICIENT_SUM);
                    assert_eq!(sampled.violations, 0);
                }
                VerdictKind::NotAbsolutelyPpt => {
                    negatives += 1;
                    assert_eq!(report.verdict.by.as_deref(), Some(names::NOT_ABS_GENERAL));
                    let outcome = report
                        .criteria
                        .iter()
                        .find(|c| c.name == names::NOT_ABS_GENERAL)
                        .expect("criterion");
                    assert!(outcome.fired && outcome.margin > 0.0);
                }
                VerdictKind::Indeterminate => {
                    assert!(report.verdict.by.is_none());
                    assert!(report.verdict.witness.is_none());
                }
                VerdictKind::AbsolutelyPptExact => {
                    panic!("exact verdict impossible at ({m},{n})")
                }
            }
        }
    }
    assert!(negatives > 100, "only {negatives} negative verdicts; sweep too weak");

    // Center-pulled draws must reach the positive sufficient verdict.
    let mut positives = 0usize;
    for s in sample_uniform_simplex(dims(5, 5), 100, SEED + 11) {
        let s = toward_uniform(&s, 0.1);
        let report = classify(&s, &t).expect("classify");
        if report.verdict.kind == VerdictKind::AbsolutelyPptSufficient {
            positives += 1;
        }
    }
    assert!(positives > 50, "only {positives} sufficient verdicts on mixed draws");
}
