//! Dense linear algebra for small matrices.
//!
//! Everything the classifier needs fits in matrices of order ≤ 72 (twice the
//! largest density-matrix dimension the oracle accepts), so this module keeps
//! to flat-storage types and a cyclic Jacobi eigensolver rather than pulling in
//! a LAPACK binding. Jacobi is exact-arithmetic-convergent on symmetric input,
//! has no balancing or shifting edge cases, and its rotations can be
//! accumulated to recover eigenvectors — which the witness extraction needs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Numerical policy shared by every PSD test and inequality margin.
///
/// A matrix with minimum eigenvalue `μ` counts as PSD when
/// `μ ≥ -(psd_abs + psd_rel · max|entry|)`; inequality criteria apply the same
/// combined tolerance with the largest eigenvalue λ₁ as the scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute floor of the PSD threshold.
    pub psd_abs: f64,
    /// Relative part, scaled by the largest absolute entry of the matrix.
    pub psd_rel: f64,
    /// Jacobi gives up after this many full sweeps.
    pub jacobi_sweep_limit: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            psd_abs: 1e-10,
            psd_rel: 1e-8,
            jacobi_sweep_limit: 64,
        }
    }
}

impl Tolerances {
    /// The PSD acceptance threshold for a matrix with the given largest
    /// absolute entry (or eigenvalue scale for inequality margins).
    pub fn psd_threshold(&self, scale: f64) -> f64 {
        self.psd_abs + self.psd_rel * scale
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("Jacobi failed to converge on a {size}x{size} matrix after {sweeps} sweeps")]
    NoConvergence { size: usize, sweeps: usize },
    #[error("index {index} out of range for a matrix of order {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("rows of unequal length cannot form a square matrix")]
    BadShape,
}

/// A dense real matrix in row-major order (not necessarily symmetric).
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    size: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(size: usize) -> Self {
        Matrix {
            size,
            data: vec![0.0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Matrix::zeros(size);
        for i in 0..size {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.size + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.size + j] = v;
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.size).map(|i| self.get(i, j)).collect()
    }

    /// The symmetric matrix `A + Aᵀ`.
    pub fn plus_transpose(&self) -> SymMatrix {
        let mut s = SymMatrix::zeros(self.size);
        for i in 0..self.size {
            for j in i..self.size {
                s.set(i, j, self.get(i, j) + self.get(j, i));
            }
        }
        s
    }
}

/// A dense symmetric real matrix; `set` writes both mirror entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    size: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(size: usize) -> Self {
        SymMatrix {
            size,
            data: vec![0.0; size * size],
        }
    }

    /// Builds from explicit rows, which must form a square symmetric matrix
    /// (asymmetry beyond exact equality is rejected as a shape error).
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(LinalgError::BadShape);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().take(i) {
                if v != rows[j][i] {
                    return Err(LinalgError::BadShape);
                }
            }
        }
        let mut m = SymMatrix::zeros(size);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.data[i * size + j] = v;
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.size + j]
    }

    /// Sets the `(i, j)` and `(j, i)` entries.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.size + j] = v;
        self.data[j * self.size + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }
}

/// Outcome of a Jacobi eigendecomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Full sweeps performed before the off-diagonal norm dropped below the
    /// convergence target.
    pub iterations: usize,
    /// Always true on the `Ok` path; convergence failure is an error.
    pub converged: bool,
}

/// Frobenius norm of the strict off-diagonal part.
fn off_diagonal_norm(data: &[f64], size: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..size {
        for j in (i + 1)..size {
            let v = data[i * size + j];
            sum += 2.0 * v * v;
        }
    }
    sum.sqrt()
}

/// One cyclic Jacobi pass; rotates `a` in place and applies the same column
/// rotations to `v` when eigenvectors are being accumulated.
fn jacobi_sweep(a: &mut [f64], v: Option<&mut Matrix>, size: usize) {
    let mut vectors = v;
    for p in 0..size - 1 {
        for q in (p + 1)..size {
            let apq = a[p * size + q];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[q * size + q] - a[p * size + p]) / (2.0 * apq);
            let t = if theta >= 0.0 {
                1.0 / (theta + (theta * theta + 1.0).sqrt())
            } else {
                -1.0 / (-theta + (theta * theta + 1.0).sqrt())
            };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let tau = s / (1.0 + c);

            a[p * size + p] -= t * apq;
            a[q * size + q] += t * apq;
            a[p * size + q] = 0.0;
            a[q * size + p] = 0.0;
            for i in 0..size {
                if i == p || i == q {
                    continue;
                }
                let aip = a[i * size + p];
                let aiq = a[i * size + q];
                let new_ip = aip - s * (aiq + tau * aip);
                let new_iq = aiq + s * (aip - tau * aiq);
                a[i * size + p] = new_ip;
                a[p * size + i] = new_ip;
                a[i * size + q] = new_iq;
                a[q * size + i] = new_iq;
            }
            if let Some(vm) = vectors.as_deref_mut() {
                for i in 0..size {
                    let vip = vm.get(i, p);
                    let viq = vm.get(i, q);
                    vm.set(i, p, vip - s * (viq + tau * vip));
                    vm.set(i, q, viq + s * (vip - tau * viq));
                }
            }
        }
    }
}

fn jacobi(
    a: &SymMatrix,
    tol: &Tolerances,
    want_vectors: bool,
) -> Result<(EigenResult, Option<Matrix>), LinalgError> {
    let size = a.size;
    if size == 0 {
        return Ok((
            EigenResult {
                eigenvalues: vec![],
                iterations: 0,
                converged: true,
            },
            want_vectors.then(|| Matrix::zeros(0)),
        ));
    }
    let mut work = a.data.clone();
    let mut vectors = want_vectors.then(|| Matrix::identity(size));
    let norm0 = a.frobenius_norm();
    let target = 1e-14 * norm0;

    let mut sweeps = 0;
    while off_diagonal_norm(&work, size) > target {
        if sweeps == tol.jacobi_sweep_limit {
            return Err(LinalgError::NoConvergence {
                size,
                sweeps: tol.jacobi_sweep_limit,
            });
        }
        jacobi_sweep(&mut work, vectors.as_mut(), size);
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by(|&i, &j| work[i * size + i].total_cmp(&work[j * size + j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| work[i * size + i]).collect();
    let vectors = vectors.map(|vm| {
        let mut sorted = Matrix::zeros(size);
        for (col, &src) in order.iter().enumerate() {
            for i in 0..size {
                sorted.set(i, col, vm.get(i, src));
            }
        }
        sorted
    });
    Ok((
        EigenResult {
            eigenvalues,
            iterations: sweeps,
            converged: true,
        },
        vectors,
    ))
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi, ascending.
///
/// Converges when the off-diagonal Frobenius norm falls below
/// `1e-14 · ‖A‖_F`; errs with [`LinalgError::NoConvergence`] after
/// `tol.jacobi_sweep_limit` sweeps.
pub fn sym_eigenvalues(a: &SymMatrix, tol: &Tolerances) -> Result<EigenResult, LinalgError> {
    jacobi(a, tol, false).map(|(r, _)| r)
}

/// Eigendecomposition with accumulated rotations; column `j` of the returned
/// matrix is a unit eigenvector for `eigenvalues[j]` (ascending order).
pub fn sym_eigen(a: &SymMatrix, tol: &Tolerances) -> Result<(EigenResult, Matrix), LinalgError> {
    jacobi(a, tol, true).map(|(r, v)| (r, v.expect("vectors requested")))
}

/// Verdict of a PSD test, carrying the witness eigenvalue and the threshold
/// that was applied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdReport {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
    pub threshold: f64,
}

/// Tests positive semidefiniteness with the combined absolute/relative
/// tolerance of [`Tolerances`], returning the minimum eigenvalue as witness.
pub fn is_psd(a: &SymMatrix, tol: &Tolerances) -> Result<PsdReport, LinalgError> {
    let eig = sym_eigenvalues(a, tol)?;
    let min_eigenvalue = eig.eigenvalues.first().copied().unwrap_or(0.0);
    let threshold = tol.psd_threshold(a.max_abs_entry());
    Ok(PsdReport {
        is_psd: min_eigenvalue >= -threshold,
        min_eigenvalue,
        threshold,
    })
}

/// Whether `|a_rr| ≥ Σ_{j≠r} |a_rj|` (weak row diagonal dominance, exact
/// comparison — no tolerance).
pub fn row_diagonally_dominant(a: &SymMatrix, row: usize) -> Result<bool, LinalgError> {
    if row >= a.size {
        return Err(LinalgError::IndexOutOfRange {
            index: row,
            size: a.size,
        });
    }
    let mut off = 0.0;
    for j in 0..a.size {
        if j != row {
            off += a.get(row, j).abs();
        }
    }
    Ok(a.get(row, row).abs() >= off)
}

/// The quadratic form `1ᵀ A 1 = Σ_{ij} a_ij` of the all-ones vector.
pub fn all_ones_quadratic(a: &SymMatrix) -> f64 {
    a.data.iter().sum()
}

/// A dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    size: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(size: usize) -> Self {
        CMatrix {
            size,
            data: vec![Complex64::ZERO; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = CMatrix::zeros(size);
        for i in 0..size {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = CMatrix::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(d, 0.0));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.size + j] = v;
    }

    pub fn adjoint(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.norm()))
    }

    /// Max-entry distance from the identity of `A†A`; zero for a unitary.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = self.adjoint().mul(self);
        let mut worst: f64 = 0.0;
        for i in 0..self.size {
            for j in 0..self.size {
                let target = if i == j { Complex64::ONE } else { Complex64::ZERO };
                worst = worst.max((gram.get(i, j) - target).norm());
            }
        }
        worst
    }
}

/// Minimum eigenvalue of a Hermitian matrix via the real embedding
/// `H = X + iY ↦ [[X, -Y], [Y, X]]`, whose spectrum is that of `H` doubled.
///
/// The embedding symmetrizes its input, so matrices that are Hermitian only up
/// to roundoff are handled by their Hermitian part `(H + H†)/2`.
pub fn hermitian_min_eigenvalue(h: &CMatrix, tol: &Tolerances) -> Result<f64, LinalgError> {
    let n = h.size;
    let mut embedded = SymMatrix::zeros(2 * n);
    for i in 0..n {
        for j in i..n {
            let avg = 0.5 * (h.get(i, j) + h.get(j, i).conj());
            // X block (symmetric) and Y block (antisymmetric): entry (i, j).
            embedded.set(i, j, avg.re);
            embedded.set(i + n, j + n, avg.re);
            // [[X, -Y], [Y, X]]: top-right gets -Y_ij, bottom-left +Y_ij; the
            // symmetric setter writes the mirror, and -Y_ji = +Y_ij keeps the
            // embedding consistent.
            embedded.set(i, j + n, -avg.im);
            if i != j {
                embedded.set(i + n, j, avg.im);
            }
        }
    }
    let eig = sym_eigenvalues(&embedded, tol)?;
    Ok(eig.eigenvalues[0])
}
