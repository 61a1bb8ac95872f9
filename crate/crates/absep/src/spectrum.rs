//! Validated eigenvalue spectra of bipartite density matrices.
//!
//! A [`Spectrum`] couples bipartite dimensions [`Dims`] with a probability
//! vector of length `m·n` stored in descending order. Construction is the only
//! validation gate in the crate: every classifier and oracle downstream assumes
//! a well-formed spectrum and never re-checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Negative values at least this close to zero are treated as eigensolver dust
/// and clamped to exactly zero; anything lower is rejected.
pub const CLAMP_TOLERANCE: f64 = 1e-12;

/// Errors from [`Dims`] and [`Spectrum`] construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("both factor dimensions must be at least 2, got {m}x{n}")]
    BadDims { m: usize, n: usize },
    #[error("expected {expected} eigenvalues for a {m}x{n} system, got {got}")]
    WrongLength {
        m: usize,
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("eigenvalue #{index} is {value:e}, below the clamp tolerance -1e-12")]
    NegativeEigenvalue { index: usize, value: f64 },
    #[error("eigenvalue sum is {sum}, further than {tolerance:e} from 1")]
    BadSum { sum: f64, tolerance: f64 },
}

/// Bipartite factor dimensions, normalized so that `m ≤ n`.
///
/// Every spectral criterion in this crate is symmetric in the two factors, so
/// the constructor swaps arguments when needed and records the swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dims {
    m: usize,
    n: usize,
    swapped: bool,
}

impl Dims {
    /// Builds dimensions from the two factor sizes in either order.
    ///
    /// Both factors must be at least 2; a 1-dimensional factor makes every
    /// state trivially separable and none of the criteria apply.
    pub fn new(a: usize, b: usize) -> Result<Self, SpectrumError> {
        if a < 2 || b < 2 {
            return Err(SpectrumError::BadDims { m: a, n: b });
        }
        if a <= b {
            Ok(Dims {
                m: a,
                n: b,
                swapped: false,
            })
        } else {
            Ok(Dims {
                m: b,
                n: a,
                swapped: true,
            })
        }
    }

    /// Smaller factor dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Larger factor dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// True when the constructor arguments arrived as `(n, m)` with `n > m`.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// Total Hilbert-space dimension `m·n`.
    pub fn total(&self) -> usize {
        self.m * self.n
    }

    /// The matricization order `p = min(m, n)`; equals `m` after normalization.
    pub fn p(&self) -> usize {
        self.m
    }
}

/// A descending-sorted eigenvalue spectrum of a bipartite density matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    dims: Dims,
    values: Vec<f64>,
}

impl Spectrum {
    /// Validates and sorts a raw eigenvalue list.
    ///
    /// Input order is irrelevant. Values in `[-1e-12, 0)` are clamped to zero;
    /// lower values are rejected. The sum must be within `sum_tolerance` of 1;
    /// the values are *not* renormalized (printed spectra in the literature
    /// often sum to 0.9999 or 1.0004, hence the caller-chosen tolerance).
    pub fn new(dims: Dims, raw: &[f64], sum_tolerance: f64) -> Result<Self, SpectrumError> {
        let expected = dims.total();
        if raw.len() != expected {
            return Err(SpectrumError::WrongLength {
                m: dims.m,
                n: dims.n,
                expected,
                got: raw.len(),
            });
        }
        let mut values = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            if value < -CLAMP_TOLERANCE {
                return Err(SpectrumError::NegativeEigenvalue { index, value });
            }
            values.push(if value < 0.0 { 0.0 } else { value });
        }
        let sum: f64 = values.iter().sum();
        // NaN entries survive the negativity check above (every comparison
        // with NaN is false), so the sum gate must reject non-finite sums
        // explicitly rather than rely on the comparison.
        if !sum.is_finite() || (sum - 1.0).abs() > sum_tolerance {
            return Err(SpectrumError::BadSum {
                sum,
                tolerance: sum_tolerance,
            });
        }
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { dims, values })
    }

    /// Like [`Spectrum::new`] but divides by the sum before validation.
    ///
    /// The raw sum must be positive and finite. After normalization the sum
    /// check always passes, but negativity is still enforced on the scaled
    /// values.
    pub fn new_normalized(
        dims: Dims,
        raw: &[f64],
        sum_tolerance: f64,
    ) -> Result<Self, SpectrumError> {
        let sum: f64 = raw.iter().sum();
        if !sum.is_finite() || sum <= 0.0 {
            return Err(SpectrumError::BadSum {
                sum,
                tolerance: sum_tolerance,
            });
        }
        let scaled: Vec<f64> = raw.iter().map(|v| v / sum).collect();
        Spectrum::new(dims, &scaled, sum_tolerance.max(1e-9))
    }

    /// The maximally mixed state: every eigenvalue equals `1/(m·n)`.
    pub fn max_mixed(dims: Dims) -> Self {
        let total = dims.total();
        Spectrum {
            dims,
            values: vec![1.0 / total as f64; total],
        }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Eigenvalues in descending order; `values()[0]` is λ₁.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The 1-based eigenvalue λ_i (descending convention).
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Purity `tr(ρ²) = Σ λ_i²`; lies in `[1/(mn), 1]` for a valid spectrum.
    pub fn purity(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub(crate) fn from_sorted_unchecked(dims: Dims, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), dims.total());
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Spectrum { dims, values }
    }
}

/// Samples `count` spectra uniformly from the probability simplex
/// (flat Dirichlet), each sorted descending.
///
/// Sample `i` is produced by normalizing `m·n` i.i.d. standard-exponential
/// draws from an RNG keyed by `(seed, i)`, so any prefix of the output is
/// reproducible independently of `count` and items may be generated in any
/// order (or in parallel) without changing the result.
pub fn sample_uniform_simplex(dims: Dims, count: usize, seed: u64) -> Vec<Spectrum> {
    (0..count)
        .map(|i| sample_one_simplex(dims, seed, i as u64))
        .collect()
}

/// The `index`-th spectrum of the `(seed)` stream used by
/// [`sample_uniform_simplex`]; exposed so callers can scan an unbounded stream
/// without materializing a count up front.
pub fn sample_one_simplex(dims: Dims, seed: u64, index: u64) -> Spectrum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let total = dims.total();
    let mut values: Vec<f64> = (0..total).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let sum: f64 = values.iter().sum();
    for v in &mut values {
        *v /= sum;
    }
    values.sort_unstable_by(|a, b| b.total_cmp(a));
    Spectrum::from_sorted_unchecked(dims, values)
}
