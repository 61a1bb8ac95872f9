//! Index-pair sets, ordering pairs, and the symmetric matricizations they
//! generate from a spectrum.
//!
//! For `p = min(m, n)`, the upper triangle of a p×p matricization holds the
//! `p(p+1)/2` smallest eigenvalues of the spectrum and the strict lower
//! triangle the `p(p−1)/2` largest, negated. Which eigenvalue lands in which
//! cell is dictated by an [`OrderingPair`]: a pair of rankings (σ₊, σ₋) of the
//! index-pair sets S₊ = {(k,l) : k ≤ l} and S₋ = {(k,l) : k < l}. The
//! matricizations that matter are the ones whose ranking is *compatible* with
//! some descending vector x — i.e. ranks follow the descending order of the
//! products x_k·x_l. Positive semidefiniteness of the symmetrized
//! matricization over every compatible ordering pair characterizes absolute
//! PPT; for p ≤ 4 the complete list of ordering pairs is known and hardcoded
//! here, while for p ≥ 5 only randomized discovery is available.

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use thiserror::Error;

use crate::linalg::{Matrix, SymMatrix};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatricizationError {
    #[error("ordering pair has p = {got}, spectrum has p = {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the complete list of ordering pairs is only known for 2 <= p <= 4, got p = {p}")]
    UnsupportedP { p: usize },
    #[error("Schmidt vector must have at least one positive entry")]
    ZeroVector,
    #[error("Schmidt vector entries must be descending; violated at index {index}")]
    NotDescending { index: usize },
    #[error("Schmidt vector entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },
    #[error("ranking is not a bijection onto 1..={expected}")]
    NotABijection { expected: usize },
    #[error("sigma_minus does not order S- the same way sigma_plus does")]
    InconsistentOrderings,
}

/// The set S₊ of index pairs `(k, l)` with `1 ≤ k ≤ l ≤ p`, in lexicographic
/// order. Its cardinality is `p(p+1)/2`.
pub fn s_plus(p: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p * (p + 1) / 2);
    for k in 1..=p {
        for l in k..=p {
            out.push((k, l));
        }
    }
    out
}

/// The set S₋ of index pairs `(k, l)` with `1 ≤ k < l ≤ p`, in lexicographic
/// order. Its cardinality is `p(p−1)/2`.
pub fn s_minus(p: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p * (p - 1) / 2);
    for k in 1..=p {
        for l in (k + 1)..=p {
            out.push((k, l));
        }
    }
    out
}

/// Lexicographic position (0-based) of `(k, l)` in S₊.
#[inline]
fn s_plus_index(p: usize, k: usize, l: usize) -> usize {
    debug_assert!(1 <= k && k <= l && l <= p);
    (k - 1) * (2 * p - k + 2) / 2 + (l - k)
}

/// Lexicographic position (0-based) of `(k, l)` in S₋.
#[inline]
fn s_minus_index(p: usize, k: usize, l: usize) -> usize {
    debug_assert!(1 <= k && k < l && l <= p);
    (k - 1) * (2 * p - k) / 2 + (l - k - 1)
}

/// A descending, nonnegative vector of Schmidt coefficients.
///
/// Unit norm is *not* required; compatibility of ordering pairs only depends
/// on the relative order of the pairwise products.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtVector {
    values: Vec<f64>,
}

impl SchmidtVector {
    /// Validates that `values` is non-empty, descending, and nonnegative.
    pub fn new(values: Vec<f64>) -> Result<Self, MatricizationError> {
        if values.is_empty() {
            return Err(MatricizationError::ZeroVector);
        }
        // Reject NaN up front: it is unordered, so the descending check
        // below could not see it.
        if let Some(index) = values.iter().position(|v| v.is_nan()) {
            return Err(MatricizationError::NotDescending { index });
        }
        for (i, &v) in values.iter().enumerate() {
            if v < 0.0 {
                return Err(MatricizationError::NegativeEntry { index: i, value: v });
            }
            if i + 1 < values.len() && v < values[i + 1] {
                return Err(MatricizationError::NotDescending { index: i + 1 });
            }
        }
        Ok(SchmidtVector { values })
    }

    pub fn p(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The product `x_k · x_l` for a 1-based index pair.
    fn product(&self, k: usize, l: usize) -> f64 {
        self.values[k - 1] * self.values[l - 1]
    }
}

/// A pair of rankings (σ₊, σ₋): σ₊ is a bijection S₊ → {1..p(p+1)/2} and σ₋ a
/// bijection S₋ → {1..p(p−1)/2} that orders S₋ exactly as σ₊ does.
///
/// Ranks are stored per lexicographic position of the index-pair sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderingPair {
    p: usize,
    sigma_plus: Vec<usize>,
    sigma_minus: Vec<usize>,
}

impl OrderingPair {
    /// Builds a pair from per-lexicographic-position ranks, validating that
    /// both are bijections and that σ₋ is order-consistent with σ₊ on S₋.
    pub fn new(
        p: usize,
        sigma_plus: Vec<usize>,
        sigma_minus: Vec<usize>,
    ) -> Result<Self, MatricizationError> {
        let p_plus = p * (p + 1) / 2;
        let p_minus = p * (p - 1) / 2;
        if !is_bijection(&sigma_plus, p_plus) {
            return Err(MatricizationError::NotABijection { expected: p_plus });
        }
        if !is_bijection(&sigma_minus, p_minus) {
            return Err(MatricizationError::NotABijection { expected: p_minus });
        }
        let pair = OrderingPair {
            p,
            sigma_plus,
            sigma_minus,
        };
        // Consistency: for any two pairs in S₋, the σ₊ order must imply the
        // same σ₋ order, i.e. σ₋ is the restriction of σ₊ to S₋.
        if pair.sigma_minus != pair.restricted_sigma_minus() {
            return Err(MatricizationError::InconsistentOrderings);
        }
        Ok(pair)
    }

    fn from_sigma_plus(p: usize, sigma_plus: Vec<usize>) -> Self {
        let mut pair = OrderingPair {
            p,
            sigma_plus,
            sigma_minus: Vec::new(),
        };
        pair.sigma_minus = pair.restricted_sigma_minus();
        pair
    }

    /// The σ₋ ranking induced by restricting the σ₊ order to S₋.
    fn restricted_sigma_minus(&self) -> Vec<usize> {
        let minus = s_minus(self.p);
        let mut order: Vec<usize> = (0..minus.len()).collect();
        order.sort_by_key(|&i| {
            let (k, l) = minus[i];
            self.sigma_plus[s_plus_index(self.p, k, l)]
        });
        let mut ranks = vec![0; minus.len()];
        for (rank0, &pos) in order.iter().enumerate() {
            ranks[pos] = rank0 + 1;
        }
        ranks
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// σ₊ rank of the pair `(k, l)`, `k ≤ l`, 1-based.
    pub fn sigma_plus(&self, k: usize, l: usize) -> usize {
        self.sigma_plus[s_plus_index(self.p, k, l)]
    }

    /// σ₋ rank of the pair `(k, l)`, `k < l`, 1-based.
    pub fn sigma_minus(&self, k: usize, l: usize) -> usize {
        self.sigma_minus[s_minus_index(self.p, k, l)]
    }

    /// σ₊ ranks listed per lexicographic position of S₊.
    pub fn sigma_plus_ranks(&self) -> &[usize] {
        &self.sigma_plus
    }

    /// σ₋ ranks listed per lexicographic position of S₋.
    pub fn sigma_minus_ranks(&self) -> &[usize] {
        &self.sigma_minus
    }
}

fn is_bijection(ranks: &[usize], expected: usize) -> bool {
    if ranks.len() != expected {
        return false;
    }
    let mut seen = vec![false; expected];
    for &r in ranks {
        if r == 0 || r > expected || seen[r - 1] {
            return false;
        }
        seen[r - 1] = true;
    }
    true
}

/// The matricization Λ̂(λ; σ₊, σ₋): upper triangle (including the diagonal)
/// holds `λ_{mn+1−σ₊(k,l)}` at `(k, l)`, the strict lower triangle holds
/// `−λ_{σ₋(k,l)}` at `(l, k)`.
pub fn build_lambda_hat(s: &Spectrum, op: &OrderingPair) -> Result<Matrix, MatricizationError> {
    let p = s.dims().p();
    if op.p != p {
        return Err(MatricizationError::DimensionMismatch {
            expected: p,
            got: op.p,
        });
    }
    let total = s.dims().total();
    let mut m = Matrix::zeros(p);
    for k in 1..=p {
        for l in k..=p {
            m.set(k - 1, l - 1, s.lambda(total + 1 - op.sigma_plus(k, l)));
            if k < l {
                m.set(l - 1, k - 1, -s.lambda(op.sigma_minus(k, l)));
            }
        }
    }
    Ok(m)
}

/// The symmetrization Λ̂ + Λ̂ᵀ: diagonal `2λ_{mn+1−σ₊(k,k)}`, off-diagonal
/// `λ_{mn+1−σ₊(k,l)} − λ_{σ₋(k,l)}` for `k < l`.
pub fn build_lambda_sym(s: &Spectrum, op: &OrderingPair) -> Result<SymMatrix, MatricizationError> {
    build_lambda_hat(s, op).map(|m| m.plus_transpose())
}

/// σ₊ templates for p = 4 as ranks per lexicographic position of S₊
/// ((1,1), (1,2), (1,3), (1,4), (2,2), (2,3), (2,4), (3,3), (3,4), (4,4)).
const P4_SIGMA_PLUS: [[usize; 10]; 12] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [1, 2, 3, 4, 5, 6, 8, 7, 9, 10],
    [1, 2, 3, 7, 4, 5, 8, 6, 9, 10],
    [1, 2, 4, 7, 3, 5, 8, 6, 9, 10],
    [1, 2, 3, 6, 4, 5, 8, 7, 9, 10],
    [1, 2, 4, 6, 3, 5, 8, 7, 9, 10],
    [1, 2, 3, 6, 4, 5, 7, 8, 9, 10],
    [1, 2, 4, 6, 3, 5, 7, 8, 9, 10],
    [1, 2, 3, 5, 4, 6, 8, 7, 9, 10],
    [1, 2, 4, 5, 3, 6, 8, 7, 9, 10],
    [1, 2, 3, 5, 4, 6, 7, 8, 9, 10],
    [1, 2, 4, 5, 3, 6, 7, 8, 9, 10],
];

/// σ₋ templates for p = 4 per lexicographic position of S₋
/// ((1,2), (1,3), (1,4), (2,3), (2,4), (3,4)). Templates 3..=8 use the second
/// variant (they rank (2,3) before (1,4)); the rest use the first.
const P4_SIGMA_MINUS: [[usize; 6]; 2] = [[1, 2, 3, 4, 5, 6], [1, 2, 4, 3, 5, 6]];

/// The complete list of ordering pairs for `2 ≤ p ≤ 4`, in the documented
/// template order (1 pair for p = 2, 2 for p = 3, 12 for p = 4). For p ≥ 5
/// the list is not known; use [`sample_pairs`] instead.
pub fn canonical_pairs(p: usize) -> Result<&'static [OrderingPair], MatricizationError> {
    static P2: OnceLock<Vec<OrderingPair>> = OnceLock::new();
    static P3: OnceLock<Vec<OrderingPair>> = OnceLock::new();
    static P4: OnceLock<Vec<OrderingPair>> = OnceLock::new();
    match p {
        2 => Ok(P2.get_or_init(|| vec![row_major_pair(2)])),
        3 => Ok(P3.get_or_init(|| vec![column_major_pair(3), row_major_pair(3)])),
        4 => Ok(P4.get_or_init(|| {
            P4_SIGMA_PLUS
                .iter()
                .enumerate()
                .map(|(t0, plus)| {
                    let minus = if (2..=7).contains(&t0) {
                        P4_SIGMA_MINUS[1]
                    } else {
                        P4_SIGMA_MINUS[0]
                    };
                    OrderingPair::new(4, plus.to_vec(), minus.to_vec())
                        .expect("golden template is valid")
                })
                .collect()
        })),
        _ => Err(MatricizationError::UnsupportedP { p }),
    }
}

/// The ordering pair that ranks index pairs row by row:
/// (1,1), (1,2), …, (1,p), (2,2), …, i.e. ranks follow the lexicographic
/// order of S₊ and S₋ themselves. Compatible with any descending x whose
/// products sort that way; it generates the first canonical template.
pub fn row_major_pair(p: usize) -> OrderingPair {
    let p_plus = p * (p + 1) / 2;
    let p_minus = p * (p - 1) / 2;
    OrderingPair {
        p,
        sigma_plus: (1..=p_plus).collect(),
        sigma_minus: (1..=p_minus).collect(),
    }
}

/// The ordering pair that ranks index pairs column by column:
/// (1,1), (1,2), (2,2), (1,3), (2,3), (3,3), …; σ₊(k,l) = l(l−1)/2 + k and
/// σ₋(k,l) = (l−1)(l−2)/2 + k.
pub fn column_major_pair(p: usize) -> OrderingPair {
    let plus = s_plus(p)
        .into_iter()
        .map(|(k, l)| l * (l - 1) / 2 + k)
        .collect();
    let minus = s_minus(p)
        .into_iter()
        .map(|(k, l)| (l - 1) * (l - 2) / 2 + k)
        .collect();
    OrderingPair {
        p,
        sigma_plus: plus,
        sigma_minus: minus,
    }
}

/// The ordering pair compatible with `x`: σ₊ sorts the products `x_k·x_l`
/// descending (ties broken by lexicographic `(k, l)`), and σ₋ is the
/// restriction of the σ₊ order to S₋.
pub fn compatible_pair_for(x: &SchmidtVector) -> Result<OrderingPair, MatricizationError> {
    if x.values.iter().all(|&v| v == 0.0) {
        return Err(MatricizationError::ZeroVector);
    }
    let p = x.p();
    let plus = s_plus(p);
    let mut order: Vec<usize> = (0..plus.len()).collect();
    // Stable sort on the lexicographic list = lexicographic tie-break.
    order.sort_by(|&a, &b| {
        let (ka, la) = plus[a];
        let (kb, lb) = plus[b];
        x.product(kb, lb).total_cmp(&x.product(ka, la))
    });
    let mut sigma_plus = vec![0; plus.len()];
    for (rank0, &pos) in order.iter().enumerate() {
        sigma_plus[pos] = rank0 + 1;
    }
    Ok(OrderingPair::from_sigma_plus(p, sigma_plus))
}

/// Whether the pair is compatible with `x`: σ₊ ranks must never place a
/// strictly smaller product before a larger one, and σ₋ must order S₋ the
/// same way σ₊ does (the latter holds for every constructed [`OrderingPair`]).
pub fn is_compatible(x: &SchmidtVector, op: &OrderingPair) -> Result<bool, MatricizationError> {
    if x.p() != op.p {
        return Err(MatricizationError::DimensionMismatch {
            expected: x.p(),
            got: op.p,
        });
    }
    let plus = s_plus(op.p);
    for (i, &(ka, la)) in plus.iter().enumerate() {
        for &(kb, lb) in plus.iter().skip(i + 1) {
            let (ra, rb) = (op.sigma_plus(ka, la), op.sigma_plus(kb, lb));
            let (pa, pb) = (x.product(ka, la), x.product(kb, lb));
            if (ra < rb && pa < pb) || (rb < ra && pb < pa) {
                return Ok(false);
            }
        }
    }
    Ok(op.sigma_minus == op.restricted_sigma_minus())
}

/// Signed product multiset E(x): the products `x_k·x_l` over S₊ followed by
/// `−x_k·x_l` over S₋, both in lexicographic order (`p²` values total).
pub fn signed_products(x: &SchmidtVector) -> Vec<f64> {
    let p = x.p();
    let mut out = Vec::with_capacity(p * p);
    for (k, l) in s_plus(p) {
        out.push(x.product(k, l));
    }
    for (k, l) in s_minus(p) {
        out.push(-x.product(k, l));
    }
    out
}

/// Componentwise comparison: `(k, l) ≤ (k', l')` forces `x_k·x_l ≥ x_k'·x_l'`
/// for every descending x, so ranking must respect it even across ties.
#[inline]
fn dominates(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// All orderings of `group` that extend the componentwise partial order,
/// depth-first with candidates tried in lexicographic order, capped.
fn poset_extensions(group: &[(usize, usize)], cap: usize) -> Vec<Vec<(usize, usize)>> {
    fn recurse(
        remaining: &mut Vec<(usize, usize)>,
        prefix: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
        cap: usize,
    ) {
        if out.len() == cap {
            return;
        }
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let candidate = remaining[i];
            let minimal = remaining
                .iter()
                .all(|&other| other == candidate || !dominates(other, candidate));
            if !minimal {
                continue;
            }
            remaining.remove(i);
            prefix.push(candidate);
            recurse(remaining, prefix, out, cap);
            prefix.pop();
            remaining.insert(i, candidate);
            if out.len() == cap {
                return;
            }
        }
    }
    let mut out = Vec::new();
    recurse(&mut group.to_vec(), &mut Vec::new(), &mut out, cap);
    out
}

/// Every ordering pair compatible with `x`, obtained by permuting tied
/// products in all ways that still respect the componentwise order (capped).
/// For an `x` with strictly sorted products this is exactly
/// `[compatible_pair_for(x)]`.
fn compatible_variants(x: &SchmidtVector, cap: usize) -> Vec<OrderingPair> {
    let p = x.p();
    let plus = s_plus(p);
    let mut order: Vec<usize> = (0..plus.len()).collect();
    order.sort_by(|&a, &b| {
        let (ka, la) = plus[a];
        let (kb, lb) = plus[b];
        x.product(kb, lb).total_cmp(&x.product(ka, la))
    });
    // Split the descending product sequence into runs of exactly equal value.
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut last: Option<f64> = None;
    for &pos in &order {
        let (k, l) = plus[pos];
        let value = x.product(k, l);
        if last == Some(value) {
            groups.last_mut().unwrap().push((k, l));
        } else {
            groups.push(vec![(k, l)]);
            last = Some(value);
        }
    }
    let per_group: Vec<Vec<Vec<(usize, usize)>>> = groups
        .iter()
        .map(|g| poset_extensions(g, cap))
        .collect();
    let mut total: usize = 1;
    for g in &per_group {
        total = total.saturating_mul(g.len()).min(cap);
    }
    let mut variants = Vec::with_capacity(total);
    for mut combo in 0..total {
        let mut sigma_plus = vec![0; plus.len()];
        let mut rank = 1;
        for g in &per_group {
            let pick = &g[combo % g.len()];
            combo /= g.len();
            for &(k, l) in pick {
                sigma_plus[s_plus_index(p, k, l)] = rank;
                rank += 1;
            }
        }
        variants.push(OrderingPair::from_sigma_plus(p, sigma_plus));
    }
    variants
}

/// Randomized discovery of ordering pairs for any `p ≥ 2`: draws `samples`
/// random descending positive vectors, collects every ordering pair
/// compatible with each (tied products contribute all of their admissible
/// orderings, capped at 64 per draw), and deduplicates in first-seen order.
///
/// Deterministic per seed, and a longer run extends a shorter one. For
/// p ≤ 4 and a few thousand samples this recovers the complete canonical
/// list; for p ≥ 5 it yields a subset of the (unknown) complete list.
pub fn sample_pairs(p: usize, seed: u64, samples: usize) -> Vec<OrderingPair> {
    const VARIANT_CAP: usize = 64;
    let mut found: Vec<OrderingPair> = Vec::new();
    let mut seen: HashSet<OrderingPair> = HashSet::new();
    for i in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        // Alternate three draw styles: generic vectors exercise strict
        // orderings; power-of-two and small-integer vectors produce exact
        // product ties, which is the only way some orderings ever arise.
        let mut values: Vec<f64> = match i % 3 {
            0 => (0..p).map(|_| rng.sample::<f64, _>(Exp1) + 1e-6).collect(),
            1 => {
                let mut exponent = 0_i32;
                let mut v: Vec<f64> = (0..p)
                    .map(|_| {
                        let x = 2f64.powi(exponent);
                        exponent += rng.random_range(0..=2);
                        x
                    })
                    .collect();
                v.reverse();
                v
            }
            _ => (0..p).map(|_| rng.random_range(1..=6) as f64).collect(),
        };
        values.sort_by(|a, b| b.total_cmp(a));
        let x = SchmidtVector { values };
        for op in compatible_variants(&x, VARIANT_CAP) {
            if seen.insert(op.clone()) {
                found.push(op);
            }
        }
    }
    found
}
