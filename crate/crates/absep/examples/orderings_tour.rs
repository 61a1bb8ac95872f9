//! Tour the ordering pairs behind the symmetric matricization test.
//!
//! Run with:
//!
//! ```text
//! cargo run -p absep --example orderings_tour
//! ```
//!
//! For local dimension p, a pair of orderings (sigma_plus, sigma_minus) fills
//! a p x p symmetric matrix from the sorted spectrum: sigma_plus ranks send
//! eigenvalues from the small end, sigma_minus ranks from the large end, and
//! off-diagonal entries are half the difference. The spectrum is absolutely
//! PPT (for p <= 4) exactly when every canonical matrix is positive
//! semidefinite. This example prints the canonical grids, builds the
//! matrices for a sample spectrum, and shows that random sampling of valid
//! pairs rediscovers the canonical lists and nothing else.

use std::collections::HashSet;

use absep::linalg::{is_psd, Tolerances};
use absep::matricization::{
    build_lambda_sym, canonical_pairs, column_major_pair, sample_pairs, OrderingPair,
};
use absep::spectrum::{Dims, Spectrum};

fn print_pair(pair: &OrderingPair, p: usize) {
    // sigma_plus ranks the closed upper triangle (k <= l); sigma_minus ranks
    // only the strict off-diagonal part.
    println!("    sigma_plus ranks        sigma_minus ranks");
    for k in 1..=p {
        let mut left = String::new();
        let mut right = String::new();
        for l in 1..=p {
            if l >= k {
                left.push_str(&format!("{:>4}", pair.sigma_plus(k, l)));
            } else {
                left.push_str("   .");
            }
            if l > k {
                right.push_str(&format!("{:>4}", pair.sigma_minus(k, l)));
            } else {
                right.push_str("   .");
            }
        }
        println!("    {left}        {right}");
    }
}

fn main() {
    let tol = Tolerances::default();

    for p in 2..=4usize {
        let pairs = canonical_pairs(p).expect("canonical list");
        println!("p = {p}: {} canonical ordering pair(s)", pairs.len());
    }
    println!();

    // The full grids for p = 3: the column-major pair and its row-major twin.
    let pairs3 = canonical_pairs(3).expect("p = 3");
    for (i, pair) in pairs3.iter().enumerate() {
        let label = if *pair == column_major_pair(3) {
            " (column-major)"
        } else {
            ""
        };
        println!("p = 3, pair {}{label}:", i + 1);
        print_pair(pair, 3);
    }
    println!();

    // Build the matrices for a concrete qutrit-qutrit spectrum. This one
    // violates the test, and the two canonical matrices disagree on how
    // badly.
    let dims = Dims::new(3, 3).expect("dims");
    let values = [
        0.641_2, 0.092_3, 0.090_5, 0.043_6, 0.043_0, 0.031_1, 0.022_8, 0.018_5, 0.017_1,
    ];
    let spectrum = Spectrum::new_normalized(dims, &values, 1e-3).expect("spectrum");
    println!("matricizations of a violating 3 x 3 spectrum:");
    for (i, pair) in pairs3.iter().enumerate() {
        let matrix = build_lambda_sym(&spectrum, pair).expect("matrix");
        let report = is_psd(&matrix, &tol).expect("psd check");
        println!(
            "  matrix {}: min eigenvalue {:+.6}  (PSD: {})",
            i + 1,
            report.min_eigenvalue,
            report.is_psd
        );
        for r in 0..matrix.size() {
            let row: Vec<String> = (0..matrix.size())
                .map(|c| format!("{:+.4}", matrix.get(r, c)))
                .collect();
            println!("    [ {} ]", row.join("  "));
        }
    }
    println!();

    // Random sampling over valid pairs finds exactly the canonical lists.
    for p in 2..=4usize {
        let canonical: HashSet<OrderingPair> =
            canonical_pairs(p).expect("canonical").iter().cloned().collect();
        let sampled: HashSet<OrderingPair> =
            sample_pairs(p, 7, 20_000).into_iter().collect();
        println!(
            "p = {p}: sampled {} distinct pair(s), canonical {}, equal: {}",
            sampled.len(),
            canonical.len(),
            sampled == canonical
        );
    }
    println!();

    // For p >= 5 no finite canonical list is known; sampling still yields
    // valid pairs for the necessity scan.
    let sampled5 = sample_pairs(5, 7, 5_000);
    println!(
        "p = 5: no canonical list; sampling found {} distinct valid pair(s)",
        sampled5.len()
    );
}
