//! Falsify absolute PPT by brute force: random global unitaries.
//!
//! Run with:
//!
//! ```text
//! cargo run -p absep --example unitary_falsifier
//! ```
//!
//! The definition of "absolutely PPT" quantifies over every global unitary
//! U: the state U diag(lambda) U-dagger must keep a positive partial
//! transpose for all of them. That makes a direct randomized check possible:
//! sample Haar-distributed unitaries, rotate the spectrum, and look for a
//! negative eigenvalue of the partial transpose. A hit disproves absolute
//! PPT outright; a clean run is evidence (not proof) in favor. This oracle
//! is how the fast spectral criteria were cross-checked.

use absep::linalg::{hermitian_min_eigenvalue, Tolerances};
use absep::oracle::{
    conjugate_diag, embed_diag, haar_unitary, partial_transpose, random_unitary_falsifier,
    DensityMatrix,
};
use absep::spectrum::{Dims, Spectrum};

fn main() {
    let tol = Tolerances::default();

    // --- One trial, spelled out. ---
    let dims = Dims::new(2, 3).expect("dims");
    let spectrum =
        Spectrum::new(dims, &[0.40, 0.20, 0.15, 0.10, 0.10, 0.05], 1e-9).expect("spectrum");

    let u = haar_unitary(dims.total(), 42);
    let rotated = DensityMatrix::new(dims, conjugate_diag(&u, spectrum.values()))
        .expect("rotated state");
    let pt = partial_transpose(&rotated);
    let min_eig = hermitian_min_eigenvalue(&pt, &tol).expect("eigenvalue");
    println!("single Haar rotation of a 2 x 3 spectrum:");
    println!("  min eigenvalue of the partial transpose: {min_eig:+.6}");
    println!();

    // --- A spectrum that is not absolutely PPT: the search finds a hit. ---
    println!("searching for a violation (400 trials, seed 0):");
    match random_unitary_falsifier(&spectrum, 400, 0, &tol).expect("falsifier") {
        Some(witness) => println!(
            "  violation at trial {}: min eigenvalue {:+.6}",
            witness.trial, witness.min_eigenvalue
        ),
        None => println!("  no violation found"),
    }
    println!();

    // --- The maximally mixed state: provably absolutely PPT, so every trial
    // --- must come back clean.
    let mixed = Spectrum::max_mixed(dims);
    println!("maximally mixed 2 x 3 state (400 trials, seed 0):");
    match random_unitary_falsifier(&mixed, 400, 0, &tol).expect("falsifier") {
        Some(witness) => println!(
            "  unexpected violation at trial {}: {:+.6}",
            witness.trial, witness.min_eigenvalue
        ),
        None => println!("  all trials clean, as the exact criterion predicts"),
    }
    println!();

    // --- The blind spot: random search can miss thin violation sets. This
    // 4 x 4 spectrum defeats a plausible-looking shortcut (the two-smallest
    // condition) by a hair; its violating unitaries are so rare that Haar
    // sampling never finds them, and only the constructed eigenbasis from
    // the matricization witness exposes the negative direction.
    let narrow = [
        0.091_666_97, 0.088_267_83, 0.084_266_84, 0.081_350_49, 0.080_146_99, 0.079_958_8,
        0.057_661_18, 0.056_410_57, 0.051_312_75, 0.050_496_16, 0.047_098_09, 0.047_050_45,
        0.046_565_6, 0.045_980_3, 0.045_948_34, 0.045_818_63,
    ];
    let dims4 = Dims::new(4, 4).expect("dims");
    let thin = Spectrum::new_normalized(dims4, &narrow, 1e-3).expect("spectrum");
    println!("a 4 x 4 spectrum with a hair-thin violation (400 trials, seed 0):");
    match random_unitary_falsifier(&thin, 400, 0, &tol).expect("falsifier") {
        Some(witness) => println!(
            "  violation at trial {}: {:+.6}",
            witness.trial, witness.min_eigenvalue
        ),
        None => {
            println!("  no violation found by random search, yet the spectral test");
            println!("  proves one exists (see the spectral_witness example).");
        }
    }
    println!();

    // The identity rotation is the diagonal state itself; its partial
    // transpose is the same diagonal matrix, so it can never falsify.
    let diag = embed_diag(&spectrum);
    let diag_pt_min = hermitian_min_eigenvalue(&partial_transpose(&diag), &tol).expect("eig");
    println!("sanity: diagonal embedding has PT min eigenvalue {diag_pt_min:+.6}");
}
