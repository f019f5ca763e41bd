//! Entanglement witnesses diagonal in the magic basis.
//!
//! A witness is assembled from a spectral split W = W_+ - W_-: an
//! orthonormal basis (by default the magic basis of twirled maximally
//! entangled vectors), nonnegative eigenvalue magnitudes, and the set of
//! indices whose projectors enter with a minus sign. Sufficient spectral
//! conditions in terms of Schmidt k-norms certify that such a difference
//! is a k-Schmidt witness; for the magic basis every k-norm is exactly
//! k/d, which collapses the certificate to a comparison of averages.
//!
//! The named 9x9 families are built twice, from their printed entry grids
//! and from their spectral decompositions, and the two routes are held to
//! entrywise agreement in the tests.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::belldiag::{bell_projector, sigma_projector, BellError, WeylIndex};
use crate::families::{gamma_state, FamilyError};
use crate::matcore::{outer_product, schmidt_coefficients, ComplexMatrix, MatError};
use crate::scalar::Real;

/// Expectation values below this threshold count as detection.
const DETECTION_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("k = {k} out of range 1..={d}")]
    KOutOfRange { k: usize, d: usize },
    #[error("negative part has {l} indices, needs fewer than {limit}")]
    NegativePartTooLarge { l: usize, limit: usize },
    #[error("eigenvalue list has {found} entries, expected {expected}")]
    EigenvalueCount { expected: usize, found: usize },
    #[error("eigenvalue {index} is negative ({value}); magnitudes must be nonnegative")]
    NegativeEigenvalue { index: usize, value: f64 },
    #[error("negative-part index {index} is out of range or repeated")]
    BadNegativeIndex { index: usize },
    #[error("basis columns are not orthonormal (deviation {deviation:e})")]
    BasisNotOrthonormal { deviation: f64 },
    #[error("k-norm sum of the negative part at level {ell} is {sum}, must be below 1")]
    MuPrecondition { ell: usize, sum: f64 },
    #[error("eigenvalue {index} = {lambda} falls below the spectral floor {floor}")]
    SpectralGap {
        index: usize,
        lambda: f64,
        floor: f64,
    },
    #[error("parameter {name} must be nonnegative, got {value}")]
    NegativeParameter { name: &'static str, value: f64 },
    #[error("witness is {w_rows}x{w_cols} but state is {s_rows}x{s_cols}")]
    DimensionMismatch {
        w_rows: usize,
        w_cols: usize,
        s_rows: usize,
        s_cols: usize,
    },
    #[error("expectation value has non-negligible imaginary part {imag:e}")]
    NonRealExpectation { imag: f64 },
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Bell(#[from] BellError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// The swap operator on C^d (x) C^d; for d = 2 the classic witness with
/// the singlet as its only negative eigendirection.
pub fn flip_operator<T: Real>(d: usize) -> ComplexMatrix<T> {
    let mut f = ComplexMatrix::zeros(d * d, d * d);
    for k in 0..d {
        for l in 0..d {
            f[(k * d + l, l * d + k)] = Complex::new(T::one(), T::zero());
        }
    }
    f
}

/// Squared Schmidt k-norm of a unit vector: the sum of its k largest
/// squared Schmidt coefficients. Monotone in k and equal to 1 at k = d.
pub fn k_norm_sq<T: Real>(psi: &[Complex<T>], d: usize, k: usize) -> Result<T, WitnessError> {
    if k == 0 || k > d {
        return Err(WitnessError::KOutOfRange { k, d });
    }
    let schmidt = schmidt_coefficients(psi, d)?;
    Ok(schmidt
        .coefficients
        .iter()
        .take(k)
        .fold(T::zero(), |acc, &s| acc + s * s))
}

/// Eigenbasis of a spectral witness.
#[derive(Clone, Debug)]
pub enum WitnessBasis<T> {
    /// Magic basis: index alpha = m*d + n labels the twirled maximally
    /// entangled vector with phase m and shift n. Every k-norm is k/d.
    Magic,
    /// Explicit orthonormal columns.
    Explicit(ComplexMatrix<T>),
}

/// A witness given by its eigenvalue magnitudes over an orthonormal basis
/// together with the index set carried by the negative part.
#[derive(Clone, Debug)]
pub struct SpectralWitness<T> {
    d: usize,
    eigenvalues: Vec<T>,
    negative: Vec<usize>,
    basis: WitnessBasis<T>,
}

impl<T: Real> SpectralWitness<T> {
    /// Witness over the magic basis.
    pub fn magic(
        d: usize,
        eigenvalues: Vec<T>,
        negative: Vec<usize>,
    ) -> Result<Self, WitnessError> {
        Self::build(d, eigenvalues, negative, WitnessBasis::Magic)
    }

    /// Witness over explicit orthonormal basis columns.
    pub fn with_basis(
        d: usize,
        eigenvalues: Vec<T>,
        negative: Vec<usize>,
        basis: ComplexMatrix<T>,
    ) -> Result<Self, WitnessError> {
        let n = d * d;
        let gram = basis.dagger().matmul(&basis);
        let deviation = gram.max_abs_diff(&ComplexMatrix::identity(n));
        if basis.rows() != n || basis.cols() != n || deviation > T::of(1e-10) {
            return Err(WitnessError::BasisNotOrthonormal {
                deviation: deviation.to_f64_lossy(),
            });
        }
        Self::build(d, eigenvalues, negative, WitnessBasis::Explicit(basis))
    }

    fn build(
        d: usize,
        eigenvalues: Vec<T>,
        mut negative: Vec<usize>,
        basis: WitnessBasis<T>,
    ) -> Result<Self, WitnessError> {
        let n = d * d;
        if eigenvalues.len() != n {
            return Err(WitnessError::EigenvalueCount {
                expected: n,
                found: eigenvalues.len(),
            });
        }
        for (index, &v) in eigenvalues.iter().enumerate() {
            if v < T::zero() || !v.is_finite() {
                return Err(WitnessError::NegativeEigenvalue {
                    index,
                    value: v.to_f64_lossy(),
                });
            }
        }
        negative.sort_unstable();
        for pair in negative.windows(2) {
            if pair[0] == pair[1] {
                return Err(WitnessError::BadNegativeIndex { index: pair[0] });
            }
        }
        if let Some(&worst) = negative.last() {
            if worst >= n {
                return Err(WitnessError::BadNegativeIndex { index: worst });
            }
        }
        Ok(Self {
            d,
            eigenvalues,
            negative,
            basis,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn negative_indices(&self) -> &[usize] {
        &self.negative
    }

    pub fn has_negative_part(&self) -> bool {
        !self.negative.is_empty()
    }

    /// Signed eigenvalue of index alpha.
    pub fn signed_eigenvalue(&self, alpha: usize) -> T {
        if self.negative.binary_search(&alpha).is_ok() {
            -self.eigenvalues[alpha]
        } else {
            self.eigenvalues[alpha]
        }
    }

    fn basis_vector(&self, alpha: usize) -> Vec<Complex<T>> {
        match &self.basis {
            WitnessBasis::Magic => crate::belldiag::bell_state_vector(
                self.d,
                WeylIndex {
                    m: alpha / self.d,
                    n: alpha % self.d,
                },
            ),
            WitnessBasis::Explicit(columns) => {
                (0..self.d * self.d).map(|i| columns[(i, alpha)]).collect()
            }
        }
    }

    /// Squared Schmidt ell-norm of basis vector alpha. Exactly ell/d for
    /// the magic basis.
    pub fn basis_norm_sq(&self, alpha: usize, ell: usize) -> Result<T, WitnessError> {
        if ell == 0 || ell > self.d {
            return Err(WitnessError::KOutOfRange {
                k: ell,
                d: self.d,
            });
        }
        match &self.basis {
            WitnessBasis::Magic => Ok(T::of(ell as f64) / T::of(self.d as f64)),
            WitnessBasis::Explicit(_) => k_norm_sq(&self.basis_vector(alpha), self.d, ell),
        }
    }

    /// The spectral threshold mu_ell: the k-norm weighted average of the
    /// negative-part eigenvalues divided by the remaining norm budget.
    /// Requires the negative-part ell-norms to sum below 1.
    pub fn mu(&self, ell: usize) -> Result<T, WitnessError> {
        let mut weighted = T::zero();
        let mut norm_sum = T::zero();
        for &alpha in &self.negative {
            let norm = self.basis_norm_sq(alpha, ell)?;
            weighted += self.eigenvalues[alpha] * norm;
            norm_sum += norm;
        }
        if norm_sum >= T::one() {
            return Err(WitnessError::MuPrecondition {
                ell,
                sum: norm_sum.to_f64_lossy(),
            });
        }
        Ok(weighted / (T::one() - norm_sum))
    }

    /// Dense d^2 x d^2 matrix, sum of signed eigenvalues times basis
    /// projectors.
    pub fn assemble(&self) -> ComplexMatrix<T> {
        let n = self.d * self.d;
        let mut w = ComplexMatrix::zeros(n, n);
        for alpha in 0..n {
            let lambda = self.signed_eigenvalue(alpha);
            if lambda == T::zero() {
                continue;
            }
            let psi = self.basis_vector(alpha);
            w = &w + &outer_product(&psi, &psi).scale_re(lambda);
        }
        w
    }
}

/// Certificate produced by the spectral sufficient conditions.
#[derive(Clone, Copy, Debug)]
pub struct KewVerdict<T> {
    /// Whether the witness has a negative part at all; without one the
    /// operator is positive and certification is vacuous.
    pub has_negative_part: bool,
    /// All positive-part eigenvalues clear the mu_k threshold: the
    /// operator is a k-Schmidt witness (sufficient, not necessary).
    pub certified: bool,
    pub mu_k: T,
    /// When the (k+1)-level precondition holds: whether every
    /// positive-part eigenvalue sits strictly below mu_{k+1}, making the
    /// witness provably not a (k+1)-witness. `None` when k+1 exceeds d or
    /// the precondition fails.
    pub not_k_plus_one: Option<bool>,
    pub mu_k_plus_one: Option<T>,
}

/// Evaluate the spectral sufficient conditions at level k.
pub fn certify_k_ew<T: Real>(
    witness: &SpectralWitness<T>,
    k: usize,
) -> Result<KewVerdict<T>, WitnessError> {
    let d = witness.d();
    if k == 0 || k > d {
        return Err(WitnessError::KOutOfRange { k, d });
    }
    let mu_k = witness.mu(k)?;
    let slack = T::of(1e-12) * (T::one() + mu_k.abs());
    let positive = (0..d * d).filter(|a| witness.negative_indices().binary_search(a).is_err());
    let certified = positive
        .clone()
        .all(|alpha| witness.eigenvalues()[alpha] >= mu_k - slack);

    let mut mu_next = None;
    let mut not_next = None;
    if k < d {
        let level_sum: T = witness
            .negative_indices()
            .iter()
            .map(|&a| witness.basis_norm_sq(a, k + 1))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .fold(T::zero(), |acc, v| acc + v);
        if level_sum < T::one() {
            let mu = witness.mu(k + 1)?;
            not_next = Some(positive.clone().all(|alpha| witness.eigenvalues()[alpha] < mu));
            mu_next = Some(mu);
        }
    }
    Ok(KewVerdict {
        has_negative_part: witness.has_negative_part(),
        certified,
        mu_k,
        not_k_plus_one: not_next,
        mu_k_plus_one: mu_next,
    })
}

/// Build a Bell-diagonal witness from a magic-basis spectrum whose first
/// `l` indices (in the fixed order alpha = m*d + n) carry the negative
/// part. Requires l < d and every positive-part eigenvalue to reach the
/// average of the negative part over d - l, which is the magic-basis
/// specialization of the level-1 spectral condition.
pub fn bell_diagonal_witness<T: Real>(
    d: usize,
    l: usize,
    lambdas: &[T],
) -> Result<SpectralWitness<T>, WitnessError> {
    if l >= d {
        return Err(WitnessError::NegativePartTooLarge { l, limit: d });
    }
    if lambdas.len() != d * d {
        return Err(WitnessError::EigenvalueCount {
            expected: d * d,
            found: lambdas.len(),
        });
    }
    let neg_sum = lambdas[..l].iter().fold(T::zero(), |acc, &v| acc + v);
    let mu_1 = neg_sum / T::of((d - l) as f64);
    let slack = T::of(1e-12) * (T::one() + mu_1.abs());
    for (offset, &lambda) in lambdas[l..].iter().enumerate() {
        if lambda < mu_1 - slack {
            return Err(WitnessError::SpectralGap {
                index: l + offset,
                lambda: lambda.to_f64_lossy(),
                floor: mu_1.to_f64_lossy(),
            });
        }
    }
    SpectralWitness::magic(d, lambdas.to_vec(), (0..l).collect())
}

/// Validity verdict for the three-parameter 9x9 witness family.
#[derive(Clone, Copy, Debug)]
pub struct ChoiValidity {
    /// 0 <= a < 2.
    pub range_ok: bool,
    /// a + b + c >= 2.
    pub sum_ok: bool,
    /// bc >= (1-a)^2 whenever a <= 1.
    pub product_ok: bool,
    pub is_witness: bool,
}

/// The three-parameter family on C^3 (x) C^3 generalizing the Choi
/// indecomposable witness (which is a = b = 1, c = 0): diagonal pattern
/// (a, b, c) cycled over the shifted subspaces, -1 off the diagonal of
/// the maximally entangled corner. Returns the entry grid together with
/// the necessary-and-sufficient validity verdict.
pub fn choi_witness<T: Real>(
    a: T,
    b: T,
    c: T,
) -> Result<(ComplexMatrix<T>, ChoiValidity), WitnessError> {
    check_nonnegative("a", a)?;
    check_nonnegative("b", b)?;
    check_nonnegative("c", c)?;
    let mut w = ComplexMatrix::zeros(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                w[(i * 3 + i, j * 3 + j)] = Complex::new(-T::one(), T::zero());
            }
        }
    }
    for k in 0..3 {
        w[(k * 3 + k, k * 3 + k)] = Complex::new(a, T::zero());
        let p1 = k * 3 + (k + 1) % 3;
        let p2 = k * 3 + (k + 2) % 3;
        w[(p1, p1)] = Complex::new(b, T::zero());
        w[(p2, p2)] = Complex::new(c, T::zero());
    }
    let two = T::of(2.0);
    let range_ok = a < two;
    let sum_ok = a + b + c >= two;
    let product_ok = a > T::one() || b * c >= (T::one() - a) * (T::one() - a);
    Ok((
        w,
        ChoiValidity {
            range_ok,
            sum_ok,
            product_ok,
            is_witness: range_ok && sum_ok && product_ok,
        },
    ))
}

/// Spectral route to the same family:
/// (a-2) P_00 + (a+1)(P_10 + P_20) + b Pi_1 + c Pi_2.
pub fn choi_witness_spectral<T: Real>(a: T, b: T, c: T) -> Result<ComplexMatrix<T>, WitnessError> {
    check_nonnegative("a", a)?;
    check_nonnegative("b", b)?;
    check_nonnegative("c", c)?;
    let p00 = bell_projector::<T>(3, WeylIndex { m: 0, n: 0 });
    let p10 = bell_projector::<T>(3, WeylIndex { m: 1, n: 0 });
    let p20 = bell_projector::<T>(3, WeylIndex { m: 2, n: 0 });
    let two = T::of(2.0);
    let w = &p00.scale_re(a - two) + &(&p10 + &p20).scale_re(a + T::one());
    let w = &w + &sigma_projector::<T>(3, 1).scale_re(b);
    Ok(&w + &sigma_projector::<T>(3, 2).scale_re(c))
}

/// Two-parameter 9x9 witness family: the entry grid with 1/-1 on the
/// maximally entangled corner, 1+mu / mu on the first shifted subspace
/// and a flat lambda on the second. At lambda = mu = 0 it coincides with
/// the a = b = 1, c = 0 member of the three-parameter family.
pub fn w_lambda_mu<T: Real>(lambda: T, mu: T) -> Result<ComplexMatrix<T>, WitnessError> {
    check_nonnegative("lambda", lambda)?;
    check_nonnegative("mu", mu)?;
    let mut w = ComplexMatrix::zeros(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            // Maximally entangled corner.
            let (r0, c0) = (i * 3 + i, j * 3 + j);
            w[(r0, c0)] = if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(-T::one(), T::zero())
            };
            // First shifted subspace.
            let (r1, c1) = (i * 3 + (i + 1) % 3, j * 3 + (j + 1) % 3);
            w[(r1, c1)] = if i == j {
                Complex::new(T::one() + mu, T::zero())
            } else {
                Complex::new(mu, T::zero())
            };
            // Second shifted subspace.
            let (r2, c2) = (i * 3 + (i + 2) % 3, j * 3 + (j + 2) % 3);
            w[(r2, c2)] = Complex::new(lambda, T::zero());
        }
    }
    Ok(w)
}

/// Spectral route: -3 P_00 + 2 Pi_0 + Pi_1 + 3 mu P_01 + 3 lambda P_02.
pub fn w_lambda_mu_spectral<T: Real>(lambda: T, mu: T) -> Result<ComplexMatrix<T>, WitnessError> {
    check_nonnegative("lambda", lambda)?;
    check_nonnegative("mu", mu)?;
    let three = T::of(3.0);
    let w = &bell_projector::<T>(3, WeylIndex { m: 0, n: 0 }).scale_re(-three)
        + &sigma_projector::<T>(3, 0).scale_re(T::of(2.0));
    let w = &w + &sigma_projector::<T>(3, 1);
    let w = &w + &bell_projector::<T>(3, WeylIndex { m: 0, n: 1 }).scale_re(three * mu);
    Ok(&w + &bell_projector::<T>(3, WeylIndex { m: 0, n: 2 }).scale_re(three * lambda))
}

/// The reduction-map witness (1/d) I - P^+_d, Bell diagonal with the
/// single negative eigenvalue (1-d)/d on the maximally entangled state.
pub fn reduction_witness<T: Real>(d: usize) -> ComplexMatrix<T> {
    let id = ComplexMatrix::identity(d * d).scale_re(T::one() / T::of(d as f64));
    &id - &crate::belldiag::maximally_entangled(d)
}

/// The (d,k) witness family, 1 <= k <= d-1: diagonal blocks
/// (d-k-1) e_ii + sum_{l=1..k} e_{i+l,i+l}, off-diagonal blocks -e_ij.
/// k = d-1 is d times the reduction witness; (d,k) = (3,1) is the
/// a = b = 1, c = 0 member of the three-parameter family.
pub fn w_dk<T: Real>(d: usize, k: usize) -> Result<ComplexMatrix<T>, WitnessError> {
    if k == 0 || k >= d {
        return Err(WitnessError::KOutOfRange { k, d });
    }
    let mut w = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            if i != j {
                w[(i * d + i, j * d + j)] = Complex::new(-T::one(), T::zero());
            }
        }
    }
    let diag = T::of((d - k - 1) as f64);
    for i in 0..d {
        let pos = i * d + i;
        w[(pos, pos)] = Complex::new(diag, T::zero());
        for l in 1..=k {
            let shifted = i * d + (i + l) % d;
            w[(shifted, shifted)] = Complex::new(T::one(), T::zero());
        }
    }
    Ok(w)
}

/// Spectral route: (d-k) Pi_0 + sum_{l=1..k} Pi_l - d P_00.
pub fn w_dk_spectral<T: Real>(d: usize, k: usize) -> Result<ComplexMatrix<T>, WitnessError> {
    if k == 0 || k >= d {
        return Err(WitnessError::KOutOfRange { k, d });
    }
    let mut w = sigma_projector::<T>(d, 0).scale_re(T::of((d - k) as f64));
    for l in 1..=k {
        w = &w + &sigma_projector::<T>(d, l);
    }
    Ok(&w - &crate::belldiag::maximally_entangled(d).scale_re(T::of(d as f64)))
}

/// Outcome of evaluating a witness against a state.
#[derive(Clone, Debug)]
pub struct WitnessVerdict<T> {
    /// Re Tr(W rho).
    pub value: T,
    /// value < -1e-12: the state is certified entangled by this witness.
    pub detected: bool,
    pub witness: String,
    pub state: String,
}

impl<T: Real> WitnessVerdict<T> {
    pub fn with_labels(mut self, witness: impl Into<String>, state: impl Into<String>) -> Self {
        self.witness = witness.into();
        self.state = state.into();
        self
    }
}

/// Tr(W rho) for Hermitian inputs of matching dimension. The imaginary
/// part of the trace must vanish to 1e-11.
pub fn evaluate<T: Real>(
    w: &ComplexMatrix<T>,
    rho: &ComplexMatrix<T>,
) -> Result<WitnessVerdict<T>, WitnessError> {
    if w.rows() != rho.rows() || w.cols() != rho.cols() || !w.is_square() {
        return Err(WitnessError::DimensionMismatch {
            w_rows: w.rows(),
            w_cols: w.cols(),
            s_rows: rho.rows(),
            s_cols: rho.cols(),
        });
    }
    let mut trace = Complex::new(T::zero(), T::zero());
    for r in 0..w.rows() {
        for c in 0..w.cols() {
            trace += w[(r, c)] * rho[(c, r)];
        }
    }
    if trace.im.abs() > T::of(1e-11) {
        return Err(WitnessError::NonRealExpectation {
            imag: trace.im.to_f64_lossy(),
        });
    }
    Ok(WitnessVerdict {
        value: trace.re,
        detected: trace.re < -T::of(DETECTION_TOL),
        witness: String::new(),
        state: String::new(),
    })
}

/// Minimum of <x (x) y| W |x (x) y> over seeded random product states:
/// numerical necessary-condition evidence of block positivity.
/// Deterministic for a fixed seed.
pub fn block_positivity_sample<T: Real>(w: &ComplexMatrix<T>, trials: usize, seed: u64) -> T {
    assert!(trials >= 1, "at least one trial");
    let n = w.rows();
    let d = (1..=n).find(|k| k * k == n).expect("witness on C^d (x) C^d");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut minimum = T::infinity();
    let mut product = vec![Complex::new(T::zero(), T::zero()); n];
    for _ in 0..trials {
        let x = random_unit_vector::<T>(d, &mut rng);
        let y = random_unit_vector::<T>(d, &mut rng);
        for i in 0..d {
            for j in 0..d {
                product[i * d + j] = x[i] * y[j];
            }
        }
        let image = w.apply(&product);
        let mut value = Complex::new(T::zero(), T::zero());
        for (v, iv) in product.iter().zip(&image) {
            value += v.conj() * iv;
        }
        minimum = minimum.min(value.re);
    }
    minimum
}

fn random_unit_vector<T: Real>(d: usize, rng: &mut impl Rng) -> Vec<Complex<T>> {
    loop {
        let v: Vec<Complex<T>> = (0..d)
            .map(|_| {
                Complex::new(
                    T::of(rng.sample::<f64, _>(StandardNormal)),
                    T::of(rng.sample::<f64, _>(StandardNormal)),
                )
            })
            .collect();
        let norm = v
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt();
        if norm > T::of(1e-6) {
            return v.into_iter().map(|z| z.scale(T::one() / norm)).collect();
        }
    }
}

/// Evaluate the two-parameter witness against the d = 3 gamma family
/// state. Inside the parameter region
/// lambda < (1-gamma^2)/(2+gamma^-2),
/// mu < (1-gamma^2-lambda(2+gamma^-2))/(2+gamma^2)
/// the expectation is strictly negative.
pub fn detect_gamma_family<T: Real>(
    lambda: T,
    mu: T,
    gamma: T,
) -> Result<WitnessVerdict<T>, WitnessError> {
    let w = w_lambda_mu(lambda, mu)?;
    let rho = gamma_state(3, gamma)?.assemble_dense();
    Ok(evaluate(&w, &rho)?.with_labels(
        format!(
            "w_lambda_mu({},{})",
            lambda.to_f64_lossy(),
            mu.to_f64_lossy()
        ),
        format!("gamma_state(3,{})", gamma.to_f64_lossy()),
    ))
}

fn check_nonnegative<T: Real>(name: &'static str, value: T) -> Result<(), WitnessError> {
    if value < T::zero() || !value.is_finite() {
        return Err(WitnessError::NegativeParameter {
            name,
            value: value.to_f64_lossy(),
        });
    }
    Ok(())
}
