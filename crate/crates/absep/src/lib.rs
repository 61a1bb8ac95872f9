//! Spectral classification of absolute separability for bipartite quantum states.
//!
//! A bipartite state ρ on an `m × n` system is *absolutely PPT* when every
//! global-unitary conjugate `U ρ U†` has a positive partial transpose, and
//! *absolutely separable* when every conjugate is separable. Both properties
//! depend only on the eigenvalue spectrum of ρ. This crate classifies spectra:
//!
//! * for `p = min(m, n) ≤ 4` the question is decided exactly by a finite family
//!   of linear matrix inequalities on small matrices built from the sorted
//!   spectrum ([`matricization`]);
//! * for `p ≥ 5` the full family is unknown, so the classifier combines proven
//!   sufficient conditions (eigenvalue-sum inequalities, the separable ball
//!   around the maximally mixed state) with a proven spectral obstruction, and
//!   reports `indeterminate` when neither side fires ([`criteria`]);
//! * independent brute-force validators conjugate the spectrum by Haar-random
//!   unitaries and hunt for partial-transpose violations, or extract explicit
//!   quadratic-form witnesses from the matricization ([`oracle`]).
//!
//! The [`cli`] module exposes all of this as the `absep` command-line tool;
//! the `examples/` directory demonstrates each capability as a library.
//!
//! ```
//! use absep::{classify, Dims, Spectrum, Tolerances};
//!
//! let dims = Dims::new(2, 2).unwrap();
//! let s = Spectrum::new(dims, &[0.30, 0.25, 0.25, 0.20], 1e-6).unwrap();
//! let report = classify(&s, &Tolerances::default()).unwrap();
//! assert_eq!(report.verdict.kind, absep::VerdictKind::AbsolutelyPptExact);
//! ```

pub mod cli;
pub mod criteria;
pub mod fixtures;
pub mod linalg;
pub mod matricization;
pub mod oracle;
pub mod spectrum;

pub use criteria::{classify, Report, Verdict, VerdictKind};
pub use linalg::Tolerances;
pub use spectrum::{Dims, Spectrum};
