//! Dense complex linear algebra at desk scale.
//!
//! This module is the oracle layer of the crate: index-level reference
//! implementations of the Kronecker product, partial transposition,
//! realignment, Hermitian spectra, singular values and Schmidt
//! coefficients. The closed forms implemented by the higher modules are
//! always validated against these brute-force maps, so the code here
//! favours obviously-correct loops over clever factorizations. Matrices
//! stay small (at most 64x64), which is why a cyclic Jacobi eigensolver
//! is accurate and fast enough to serve as the one spectral engine.

use num_complex::Complex;
use thiserror::Error;

use crate::scalar::Real;

/// Errors raised by the dense linear-algebra layer.
#[derive(Debug, Error)]
pub enum MatError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is {rows}x{cols}, expected {expected}x{expected}")]
    WrongSize {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is not Hermitian: max |A - A'| entry = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("vector is not normalized: norm = {norm}")]
    NotNormalized { norm: f64 },
}

/// Dense complex matrix in row-major order; the universal carrier for
/// states, blocks, witnesses and channel images.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Build from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(MatError::VectorLength {
                    expected: c,
                    found: row.len(),
                });
            }
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex::new(v, T::zero());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        let n = self.rows.min(self.cols);
        (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * factor)
    }

    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    /// Largest entrywise difference |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }

    /// Largest entrywise deviation from Hermiticity, max |A - A'|.
    pub fn hermiticity_error(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols.min(self.rows) {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.hermiticity_error() <= tol * (T::one() + self.max_abs())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Kronecker product, (A (x) B)[(i*rB+k),(j*cB+l)] = A[i,j] B[k,l].
    pub fn kron(&self, other: &Self) -> Self {
        let (rb, cb) = (other.rows, other.cols);
        ComplexMatrix::from_fn(self.rows * rb, self.cols * cb, |r, c| {
            self[(r / rb, c / cb)] * other[(r % rb, c % cb)]
        })
    }
}

impl<T> std::ops::Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Real> std::ops::Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, other: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }
}

impl<T: Real> std::ops::Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, other: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)])
    }
}

impl<T: Real> std::ops::Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, other: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.matmul(other)
    }
}

/// Outer product u v'.
pub fn outer_product<T: Real>(u: &[Complex<T>], v: &[Complex<T>]) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
}

/// Kronecker product as a free function.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.kron(b)
}

/// Transpose of the second tensor factor of a d^2 x d^2 matrix:
/// out[(i,l),(j,k)] = in[(i,k),(j,l)].
pub fn brute_partial_transpose<T: Real>(
    m: &ComplexMatrix<T>,
    d: usize,
) -> Result<ComplexMatrix<T>, MatError> {
    expect_square_of(m, d * d)?;
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    out[(i * d + l, j * d + k)] = m[(i * d + k, j * d + l)];
                }
            }
        }
    }
    Ok(out)
}

/// Index reshuffle of a bipartite d^2 x d^2 matrix,
/// out[(r1,r2),(c1,c2)] = in[(r2,c2),(r1,c1)].
///
/// The convention is pinned by the block structure it induces on
/// circulant operators (see `circulant::realign_blocks`); on Hermitian
/// input it differs from the plain reshuffle only by entrywise
/// conjugation, so singular values and the trace norm are unaffected.
/// Note this map is not an involution: applying it twice swaps the two
/// tensor legs of the transpose, and only the fourth power is the
/// identity.
pub fn brute_realign<T: Real>(
    m: &ComplexMatrix<T>,
    d: usize,
) -> Result<ComplexMatrix<T>, MatError> {
    expect_square_of(m, d * d)?;
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for r1 in 0..d {
        for r2 in 0..d {
            for c1 in 0..d {
                for c2 in 0..d {
                    out[(r1 * d + r2, c1 * d + c2)] = m[(r2 * d + c2, r1 * d + c1)];
                }
            }
        }
    }
    Ok(out)
}

fn expect_square_of<T: Real>(m: &ComplexMatrix<T>, n: usize) -> Result<(), MatError> {
    if m.rows() != n || m.cols() != n {
        return Err(MatError::WrongSize {
            expected: n,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

/// Eigenvalues (ascending) of a Hermitian matrix, with optional
/// orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct Spectrum<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: Option<ComplexMatrix<T>>,
}

impl<T: Real> Spectrum<T> {
    pub fn min(&self) -> T {
        self.eigenvalues
            .iter()
            .fold(T::infinity(), |acc, &v| acc.min(v))
    }

    pub fn max(&self) -> T {
        self.eigenvalues
            .iter()
            .fold(T::neg_infinity(), |acc, &v| acc.max(v))
    }
}

/// Schmidt coefficients of a bipartite pure state, descending.
#[derive(Clone, Debug)]
pub struct SchmidtData<T> {
    pub coefficients: Vec<T>,
}

const JACOBI_SWEEP_CAP: usize = 100;

/// Eigenvalues of a Hermitian matrix, sorted ascending.
pub fn hermitian_eigenvalues<T: Real>(a: &ComplexMatrix<T>) -> Result<Spectrum<T>, MatError> {
    jacobi_hermitian(a, false)
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian
/// matrix; column j of the eigenvector matrix pairs with eigenvalue j.
pub fn hermitian_eigensystem<T: Real>(a: &ComplexMatrix<T>) -> Result<Spectrum<T>, MatError> {
    jacobi_hermitian(a, true)
}

/// Cyclic Jacobi rotations for complex Hermitian matrices. Convergence
/// when the off-diagonal Frobenius norm drops below 1e-13 * (1 + |A|_F),
/// capped at 100 sweeps; matrices here are at most 64x64, so robustness
/// matters more than asymptotic speed.
fn jacobi_hermitian<T: Real>(
    a: &ComplexMatrix<T>,
    want_vectors: bool,
) -> Result<Spectrum<T>, MatError> {
    if !a.is_square() {
        return Err(MatError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let herm_err = a.hermiticity_error();
    if herm_err > T::of(1e-10) * (T::one() + a.max_abs()) {
        return Err(MatError::NotHermitian {
            deviation: herm_err.to_f64_lossy(),
        });
    }

    let n = a.rows();
    let mut work = a.clone();
    let mut vecs = want_vectors.then(|| ComplexMatrix::<T>::identity(n));
    let threshold = T::of(1e-13) * (T::one() + a.frobenius_norm());
    // Pivots below this cannot push the off-diagonal norm above threshold.
    let pivot_skip = threshold / T::of(n.max(1) as f64);

    let mut converged = n <= 1;
    let mut last_off = T::zero();
    for _ in 0..JACOBI_SWEEP_CAP {
        let off = off_diagonal_norm(&work);
        last_off = off;
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut work, vecs.as_mut(), p, q, pivot_skip);
            }
        }
    }
    if !converged && off_diagonal_norm(&work) > threshold {
        return Err(MatError::NoConvergence {
            sweeps: JACOBI_SWEEP_CAP,
            off_norm: last_off.to_f64_lossy(),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| work[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

    let eigenvalues: Vec<T> = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = vecs.map(|v| {
        ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])])
    });
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut sum = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation zeroing the (p,q) pivot of a Hermitian matrix.
fn rotate<T: Real>(
    a: &mut ComplexMatrix<T>,
    vecs: Option<&mut ComplexMatrix<T>>,
    p: usize,
    q: usize,
    pivot_skip: T,
) {
    let beta = a[(p, q)];
    let abs_beta = beta.norm();
    if abs_beta <= pivot_skip {
        return;
    }
    let n = a.rows();
    let phase = beta / Complex::new(abs_beta, T::zero());
    let two = T::of(2.0);
    let tau = (a[(q, q)].re - a[(p, p)].re) / (two * abs_beta);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        T::one() / (tau - (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    let cs = Complex::new(c, T::zero());
    let s_phase = phase * s; // s e^{i phi}
    let s_phase_conj = phase.conj() * s; // s e^{-i phi}

    // Right-multiply by the rotation: columns p and q.
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * cs - akq * s_phase_conj;
        a[(k, q)] = akp * s_phase + akq * cs;
    }
    // Left-multiply by its adjoint: rows p and q.
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * cs - aqk * s_phase;
        a[(q, k)] = apk * s_phase_conj + aqk * cs;
    }
    // The pivot pair is zero by construction; pin it exactly.
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

    if let Some(v) = vecs {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * cs - vkq * s_phase_conj;
            v[(k, q)] = vkp * s_phase + vkq * cs;
        }
    }
}

/// Positive semidefiniteness of a Hermitian matrix: smallest eigenvalue
/// at least -tol * (1 + |tr A|).
pub fn is_psd<T: Real>(a: &ComplexMatrix<T>, tol: T) -> Result<bool, MatError> {
    let spectrum = hermitian_eigenvalues(a)?;
    let scale = T::one() + a.trace().re.abs();
    Ok(spectrum.min() >= -tol * scale)
}

/// Singular values, descending. Computed as the square roots of the
/// eigenvalues of A'A, with negative round-off clamped to zero.
pub fn singular_values<T: Real>(a: &ComplexMatrix<T>) -> Result<Vec<T>, MatError> {
    let gram = a.dagger().matmul(a);
    let spectrum = hermitian_eigenvalues(&gram)?;
    let mut values: Vec<T> = spectrum
        .eigenvalues
        .into_iter()
        .map(|v| v.max(T::zero()).sqrt())
        .collect();
    values.reverse();
    Ok(values)
}

/// Trace norm: the sum of singular values.
pub fn trace_norm<T: Real>(a: &ComplexMatrix<T>) -> Result<T, MatError> {
    Ok(singular_values(a)?
        .into_iter()
        .fold(T::zero(), |acc, s| acc + s))
}

/// Schmidt coefficients of a unit vector in C^d (x) C^d: the singular
/// values of the d x d matrix Psi with Psi[i,j] = psi[i*d+j], descending.
pub fn schmidt_coefficients<T: Real>(
    psi: &[Complex<T>],
    d: usize,
) -> Result<SchmidtData<T>, MatError> {
    if psi.len() != d * d {
        return Err(MatError::VectorLength {
            expected: d * d,
            found: psi.len(),
        });
    }
    let norm = psi
        .iter()
        .fold(T::zero(), |acc, z| acc + z.norm_sqr())
        .sqrt();
    if (norm - T::one()).abs() > T::of(1e-10) {
        return Err(MatError::NotNormalized {
            norm: norm.to_f64_lossy(),
        });
    }
    let mat = ComplexMatrix::from_fn(d, d, |i, j| psi[i * d + j]);
    Ok(SchmidtData {
        coefficients: singular_values(&mat)?,
    })
}
