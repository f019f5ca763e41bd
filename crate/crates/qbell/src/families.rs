//! Named state families: the epsilon family of two-qutrit bound entangled
//! states, the gamma family of two-qudit states, delta and product
//! probability distributions on the magic simplex, and generalized lattice
//! states built from tensor powers of the Weyl unitaries.

use num_complex::Complex;
use thiserror::Error;

use crate::belldiag::{bell_state_vector, weyl, BellError, BellProbabilities, WeylIndex};
use crate::matcore::{kron, outer_product, ComplexMatrix};
use crate::scalar::Real;

const SIMPLEX_TOL: f64 = 1e-12;
/// Largest dense dimension (D^2 with D = d^copies) a lattice state may
/// occupy; keeps the eigensolver budget at desk scale.
pub const LATTICE_DENSE_CAP: usize = 256;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("parameter {name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },
    #[error("family requires local dimension at least {minimum}, got {found}")]
    DimensionTooSmall { minimum: usize, found: usize },
    #[error("row index {index} out of range for dimension {d}")]
    RowOutOfRange { index: usize, d: usize },
    #[error("weight vector has length {found}, expected {expected}")]
    WeightCount { expected: usize, found: usize },
    #[error("weight {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },
    #[error("weights sum to {sum}, expected 1")]
    WeightsNotNormalized { sum: f64 },
    #[error("lattice subset is empty")]
    EmptySubset,
    #[error("lattice member {index} is malformed or out of range")]
    BadMember { index: usize },
    #[error("duplicate lattice member at position {index}")]
    DuplicateMember { index: usize },
    #[error("lattice state needs dense dimension {required}, cap is {cap}")]
    ScaleCapExceeded { required: usize, cap: usize },
    #[error(transparent)]
    Bell(#[from] BellError),
}

/// Two-qutrit family interpolating between the normalized projectors onto
/// the first and second shifted subspaces, with the maximally entangled
/// projector mixed in. PPT for every eps > 0, entangled (detected by the
/// realignment criterion) for eps != 1.
#[derive(Clone, Copy, Debug)]
pub struct EpsilonFamily<T> {
    eps: T,
}

impl<T: Real> EpsilonFamily<T> {
    pub fn new(eps: T) -> Result<Self, FamilyError> {
        if !(eps > T::zero()) || !eps.is_finite() {
            return Err(FamilyError::NonPositiveParameter {
                name: "eps",
                value: eps.to_f64_lossy(),
            });
        }
        Ok(Self { eps })
    }

    pub fn eps(&self) -> T {
        self.eps
    }

    /// N = 1 / (1 + eps + 1/eps).
    pub fn normalization(&self) -> T {
        T::one() / (T::one() + self.eps + T::one() / self.eps)
    }

    /// Magic-simplex coordinates: weight N on the maximally entangled
    /// projector, and the two shifted subspaces weighted N*eps/3 and
    /// N/(3*eps) uniformly over their phase index.
    pub fn probabilities(&self) -> BellProbabilities<T> {
        let n = self.normalization();
        let third = T::one() / T::of(3.0);
        let w1 = n * self.eps * third;
        let w2 = n / self.eps * third;
        let mut p = vec![T::zero(); 9];
        p[0] = n; // (m, n) = (0, 0)
        for m in 0..3 {
            p[m * 3 + 1] = w1;
            p[m * 3 + 2] = w2;
        }
        BellProbabilities::new(3, p).expect("epsilon family lies on the simplex")
    }
}

/// Convenience constructor for the epsilon family coordinates.
pub fn epsilon_state<T: Real>(eps: T) -> Result<BellProbabilities<T>, FamilyError> {
    Ok(EpsilonFamily::new(eps)?.probabilities())
}

/// Two-qudit family (d >= 3) with spectrum d, a_gamma, 1, b_gamma over the
/// magic projectors, where a_gamma = (gamma^2 + d - 1)/d,
/// b_gamma = (gamma^-2 + d - 1)/d and the normalization is
/// d^2 - 2 + gamma^2 + gamma^-2.
#[derive(Clone, Copy, Debug)]
pub struct GammaFamily<T> {
    d: usize,
    gamma: T,
}

impl<T: Real> GammaFamily<T> {
    pub fn new(d: usize, gamma: T) -> Result<Self, FamilyError> {
        if d < 3 {
            return Err(FamilyError::DimensionTooSmall {
                minimum: 3,
                found: d,
            });
        }
        if !(gamma > T::zero()) || !gamma.is_finite() {
            return Err(FamilyError::NonPositiveParameter {
                name: "gamma",
                value: gamma.to_f64_lossy(),
            });
        }
        Ok(Self { d, gamma })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn a_coeff(&self) -> T {
        let d = T::of(self.d as f64);
        (self.gamma * self.gamma + d - T::one()) / d
    }

    pub fn b_coeff(&self) -> T {
        let d = T::of(self.d as f64);
        (T::one() / (self.gamma * self.gamma) + d - T::one()) / d
    }

    pub fn normalization(&self) -> T {
        let d = T::of(self.d as f64);
        d * d - T::of(2.0) + self.gamma * self.gamma + T::one() / (self.gamma * self.gamma)
    }

    /// p_{00} = d/N, first shifted column a_gamma/N, middle columns 1/N,
    /// last column b_gamma/N (all uniform over the phase index).
    pub fn probabilities(&self) -> BellProbabilities<T> {
        let d = self.d;
        let n = self.normalization();
        let mut p = vec![T::zero(); d * d];
        p[0] = T::of(d as f64) / n;
        for m in 0..d {
            p[m * d + 1] = self.a_coeff() / n;
            for col in 2..d.saturating_sub(1) {
                p[m * d + col] = T::one() / n;
            }
            p[m * d + (d - 1)] = self.b_coeff() / n;
        }
        BellProbabilities::new(d, p).expect("gamma family lies on the simplex")
    }
}

/// Convenience constructor for the gamma family coordinates.
pub fn gamma_state<T: Real>(d: usize, gamma: T) -> Result<BellProbabilities<T>, FamilyError> {
    Ok(GammaFamily::new(d, gamma)?.probabilities())
}

fn validate_simplex<T: Real>(weights: &[T], expected: usize) -> Result<Vec<T>, FamilyError> {
    if weights.len() != expected {
        return Err(FamilyError::WeightCount {
            expected,
            found: weights.len(),
        });
    }
    let tol = T::of(SIMPLEX_TOL);
    let mut cleaned = weights.to_vec();
    let mut sum = T::zero();
    for (index, w) in cleaned.iter_mut().enumerate() {
        if *w < T::zero() {
            if *w < -tol {
                return Err(FamilyError::NegativeWeight {
                    index,
                    value: w.to_f64_lossy(),
                });
            }
            *w = T::zero();
        }
        sum += *w;
    }
    if (sum - T::one()).abs() > tol {
        return Err(FamilyError::WeightsNotNormalized {
            sum: sum.to_f64_lossy(),
        });
    }
    Ok(cleaned)
}

/// Is a weight vector uniform (every entry 1/len) within `tol`?
pub fn is_uniform<T: Real>(weights: &[T], tol: T) -> bool {
    if weights.is_empty() {
        return true;
    }
    let target = T::one() / T::of(weights.len() as f64);
    weights.iter().all(|&w| (w - target).abs() <= tol)
}

/// Single-row distribution p_{mn} = delta_{mk} pi_n: all weight in phase
/// row k. Separable exactly when pi is uniform; non-uniform rows give
/// entangled states (NPT for d = 2).
pub fn delta_distribution<T: Real>(
    d: usize,
    k: usize,
    pi: &[T],
) -> Result<BellProbabilities<T>, FamilyError> {
    if k >= d {
        return Err(FamilyError::RowOutOfRange { index: k, d });
    }
    let pi = validate_simplex(pi, d)?;
    let mut p = vec![T::zero(); d * d];
    for n in 0..d {
        p[k * d + n] = pi[n];
    }
    Ok(BellProbabilities::new(d, p)?)
}

/// Product distribution p_{mn} = q_m p_n. The state splits into a direct
/// sum over the shifted subspaces with blocks p_n * a; separable exactly
/// when p is uniform.
pub fn product_distribution<T: Real>(
    d: usize,
    q: &[T],
    p: &[T],
) -> Result<BellProbabilities<T>, FamilyError> {
    let q = validate_simplex(q, d)?;
    let p = validate_simplex(p, d)?;
    let mut joint = vec![T::zero(); d * d];
    for m in 0..d {
        for n in 0..d {
            joint[m * d + n] = q[m] * p[n];
        }
    }
    Ok(BellProbabilities::new(d, joint)?)
}

/// A subset of the phase/shift lattice over N copies of C^d: each member
/// is a pair of index vectors (phases, shifts), one entry per copy.
#[derive(Clone, Debug)]
pub struct LatticeSubset {
    d: usize,
    copies: usize,
    members: Vec<(Vec<usize>, Vec<usize>)>,
}

impl LatticeSubset {
    pub fn new(
        d: usize,
        copies: usize,
        members: Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<Self, FamilyError> {
        if members.is_empty() {
            return Err(FamilyError::EmptySubset);
        }
        let dim: usize = d.pow(copies as u32);
        let dense = dim * dim;
        if dense > LATTICE_DENSE_CAP {
            return Err(FamilyError::ScaleCapExceeded {
                required: dense,
                cap: LATTICE_DENSE_CAP,
            });
        }
        for (index, (phases, shifts)) in members.iter().enumerate() {
            if phases.len() != copies || shifts.len() != copies {
                return Err(FamilyError::BadMember { index });
            }
            if phases.iter().chain(shifts).any(|&v| v >= d) {
                return Err(FamilyError::BadMember { index });
            }
        }
        let mut seen = members.clone();
        seen.sort();
        for (index, pair) in seen.windows(2).enumerate() {
            if pair[0] == pair[1] {
                let _ = index;
                let position = members
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| **m == pair[0])
                    .nth(1)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                return Err(FamilyError::DuplicateMember { index: position });
            }
        }
        Ok(Self { d, copies, members })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.members
    }

    /// The D-dimensional unitary attached to a member: the tensor product
    /// of the per-copy Weyl unitaries.
    fn member_unitary<T: Real>(&self, member: &(Vec<usize>, Vec<usize>)) -> ComplexMatrix<T> {
        let mut u = ComplexMatrix::<T>::identity(1);
        for (&m, &n) in member.0.iter().zip(&member.1) {
            u = kron(&u, &weyl(self.d, WeylIndex { m, n }));
        }
        u
    }

    /// The uniform mixture of the maximally entangled projectors attached
    /// to the members: a D^2 x D^2 density matrix of rank |I|.
    pub fn state<T: Real>(&self) -> ComplexMatrix<T> {
        let dim: usize = self.d.pow(self.copies as u32);
        let amp = T::one() / T::of(dim as f64).sqrt();
        let weight = T::one() / T::of(self.len() as f64);
        let mut rho = ComplexMatrix::zeros(dim * dim, dim * dim);
        for member in &self.members {
            let u = self.member_unitary::<T>(member);
            // psi = (1 (x) U) psi^+_D has component U[l][k]/sqrt(D) at (k, l).
            let mut psi = vec![Complex::new(T::zero(), T::zero()); dim * dim];
            for k in 0..dim {
                for l in 0..dim {
                    psi[k * dim + l] = u[(l, k)].scale(amp);
                }
            }
            rho = &rho + &outer_product(&psi, &psi).scale_re(weight);
        }
        rho
    }
}

/// Assemble the lattice state of a subset.
pub fn lattice_state<T: Real>(ls: &LatticeSubset) -> ComplexMatrix<T> {
    ls.state()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::belldiag::{
        from_circulant, is_ppt_bell, maximally_entangled, ppt_d3, ppt_d4, sigma_projector,
    };
    use crate::circulant::dense_ppt_oracle;
    use crate::matcore::hermitian_eigenvalues;

    type M = ComplexMatrix<f64>;

    #[test]
    fn epsilon_at_one_is_the_symmetric_point() {
        let bp = epsilon_state(1.0f64).unwrap();
        assert!((bp.get(0, 0) - 1.0 / 3.0).abs() < 1e-15);
        for m in 0..3 {
            assert!((bp.get(m, 1) - 1.0 / 9.0).abs() < 1e-15);
            assert!((bp.get(m, 2) - 1.0 / 9.0).abs() < 1e-15);
        }
        assert!((bp.get(1, 0)).abs() < 1e-15);
    }

    #[test]
    fn epsilon_coordinates_match_their_defining_values() {
        // x_0 = N/3 = z_0, x_1 = N eps / 3, x_2 = N / (3 eps), z_1 = z_2 = 0.
        let fam = EpsilonFamily::new(2.0f64).unwrap();
        let n = fam.normalization();
        let bp = fam.probabilities();
        let x = |col: usize| (bp.get(0, col) + bp.get(1, col) + bp.get(2, col)) / 3.0;
        assert!((x(0) - n / 3.0).abs() < 1e-15);
        assert!((x(1) - n * 2.0 / 3.0).abs() < 1e-15);
        assert!((x(2) - n / 6.0).abs() < 1e-15);
        // Column 0 is concentrated on m = 0, so z_0 = x_0 and the shifted
        // columns are uniform, so z_1 = z_2 = 0.
        let v = ppt_d3(&bp).unwrap();
        assert!(v.c1 && v.c2 && v.psd && v.consistent);
    }

    #[test]
    fn epsilon_small_limit_approaches_projector() {
        let bp = epsilon_state(1e-6f64).unwrap();
        let dense = bp.assemble_dense();
        let target = sigma_projector::<f64>(3, 2).scale_re(1.0 / 3.0);
        assert!(dense.max_abs_diff(&target) <= 1e-5);
        let bp = epsilon_state(1e6f64).unwrap();
        let dense = bp.assemble_dense();
        let target = sigma_projector::<f64>(3, 1).scale_re(1.0 / 3.0);
        assert!(dense.max_abs_diff(&target) <= 1e-5);
    }

    #[test]
    fn epsilon_two_is_ppt_and_ccnr_detected() {
        let bp = epsilon_state(2.0f64).unwrap();
        let cs = bp.to_circulant();
        assert!(cs.is_ppt(1e-10).unwrap());
        assert!(dense_ppt_oracle(&cs.assemble_dense(), 3, 1e-10).unwrap());
        let ccnr = cs.ccnr_value().unwrap();
        assert!(ccnr > 1.0 + 1e-6, "ccnr = {ccnr}");
    }

    #[test]
    fn epsilon_rejects_nonpositive_parameter() {
        assert!(matches!(
            EpsilonFamily::new(0.0f64),
            Err(FamilyError::NonPositiveParameter { .. })
        ));
        assert!(matches!(
            EpsilonFamily::new(-1.0f64),
            Err(FamilyError::NonPositiveParameter { .. })
        ));
    }

    #[test]
    fn gamma_family_matches_printed_qutrit_matrix() {
        for gamma in [0.5f64, 1.0, 2.0] {
            let fam = GammaFamily::new(3, gamma).unwrap();
            let n = fam.normalization();
            let (a, b) = (fam.a_coeff(), fam.b_coeff());
            assert!((a - (gamma * gamma + 2.0) / 3.0).abs() < 1e-15);
            assert!((n - (7.0 + gamma * gamma + 1.0 / (gamma * gamma))).abs() < 1e-12);

            let dense = fam.probabilities().assemble_dense();
            let mut expected = M::zeros(9, 9);
            for i in 0..3 {
                for j in 0..3 {
                    expected[(i * 3 + i, j * 3 + j)] = Complex::new(1.0 / n, 0.0);
                }
            }
            for i in 0..3 {
                let pos1 = i * 3 + (i + 1) % 3;
                let pos2 = i * 3 + (i + 2) % 3;
                expected[(pos1, pos1)] = Complex::new(a / n, 0.0);
                expected[(pos2, pos2)] = Complex::new(b / n, 0.0);
            }
            assert!(dense.max_abs_diff(&expected) <= 1e-12, "gamma {gamma}");
        }
    }

    #[test]
    fn gamma_symmetric_point() {
        let fam = GammaFamily::new(3, 1.0f64).unwrap();
        assert!((fam.a_coeff() - 1.0).abs() < 1e-15);
        assert!((fam.b_coeff() - 1.0).abs() < 1e-15);
        assert!((fam.normalization() - 9.0).abs() < 1e-12);
        let bp = fam.probabilities();
        assert!((bp.get(0, 0) - 3.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn gamma_sum_is_exactly_one() {
        for d in [3usize, 4, 5] {
            for gamma in [0.3f64, 1.0, 2.5] {
                let bp = gamma_state(d, gamma).unwrap();
                let sum: f64 = bp.as_slice().iter().sum();
                assert!((sum - 1.0).abs() < 1e-12, "d={d} gamma={gamma}");
            }
        }
    }

    #[test]
    fn gamma_d4_ppt_matches_oracle() {
        for gamma in [0.7f64, 1.3] {
            let bp = gamma_state(4, gamma).unwrap();
            let closed = ppt_d4(&bp).unwrap();
            let oracle = dense_ppt_oracle(&bp.assemble_dense(), 4, 1e-10).unwrap();
            assert_eq!(closed, oracle);
        }
    }

    #[test]
    fn gamma_recovers_weight_of_maximally_entangled() {
        let fam = GammaFamily::new(3, 0.6f64).unwrap();
        let recovered = from_circulant(&fam.probabilities().to_circulant()).unwrap();
        assert!((recovered.get(0, 0) - 3.0 / fam.normalization()).abs() <= 1e-12);
    }

    #[test]
    fn gamma_guards() {
        assert!(matches!(
            GammaFamily::new(2, 1.0f64),
            Err(FamilyError::DimensionTooSmall { .. })
        ));
        assert!(matches!(
            GammaFamily::new(3, 0.0f64),
            Err(FamilyError::NonPositiveParameter { .. })
        ));
    }

    #[test]
    fn delta_qubit_matrix_and_verdicts() {
        // Uniform row: the printed two-qubit matrix with entries pi/2.
        let bp = delta_distribution(2, 0, &[0.5f64, 0.5]).unwrap();
        let dense = bp.assemble_dense();
        for (r, c_, v) in [
            (0, 0, 0.25),
            (0, 3, 0.25),
            (3, 0, 0.25),
            (3, 3, 0.25),
            (1, 1, 0.25),
            (1, 2, 0.25),
            (2, 1, 0.25),
            (2, 2, 0.25),
        ] {
            assert!((dense[(r, c_)] - Complex::new(v, 0.0)).norm() < 1e-15);
        }
        assert!(is_uniform(&[0.5f64, 0.5], 1e-12));
        assert!(is_ppt_bell(&bp, 1e-10).unwrap());

        // Skewed row is NPT for qubits.
        let bp = delta_distribution(2, 0, &[0.9f64, 0.1]).unwrap();
        assert!(!is_ppt_bell(&bp, 1e-10).unwrap());
    }

    #[test]
    fn delta_uniform_qutrit_passes_both_criteria() {
        let bp = delta_distribution(3, 1, &[1.0f64 / 3.0; 3]).unwrap();
        let cs = bp.to_circulant();
        assert!(cs.is_ppt(1e-10).unwrap());
        assert!(cs.ccnr_value().unwrap() <= 1.0 + 1e-10);
    }

    #[test]
    fn product_distribution_structure() {
        // Blocks scale as p_n times a fixed positive matrix.
        let q = [0.5f64, 0.5];
        let p = [0.8f64, 0.2];
        let bp = product_distribution(2, &q, &p).unwrap();
        let cs = bp.to_circulant();
        let base = cs.block(0).scale_re(1.0 / p[0]);
        let scaled = cs.block(1).scale_re(1.0 / p[1]);
        assert!(base.max_abs_diff(&scaled) <= 1e-13);
        // q uniform makes a = I/d.
        assert!(base.max_abs_diff(&M::identity(2).scale_re(0.5)) <= 1e-14);
        // Oracle decides the verdict; p non-uniform here means entangled.
        assert!(!is_ppt_bell(&bp, 1e-10).unwrap());

        let uniform_p = product_distribution(3, &[0.2f64, 0.5, 0.3], &[1.0f64 / 3.0; 3]).unwrap();
        let cs = uniform_p.to_circulant();
        assert!(cs.is_ppt(1e-10).unwrap());
        assert!(cs.ccnr_value().unwrap() <= 1.0 + 1e-10);

        let mixed = product_distribution(2, &[0.25f64, 0.75], &[0.25f64, 0.75]).unwrap();
        let sum: f64 = mixed.as_slice().iter().sum();
        assert!((sum - 1.0).abs() < 1e-14);
    }

    #[test]
    fn lattice_completeness_is_maximally_mixed() {
        let members = (0..2)
            .flat_map(|m| (0..2).map(move |n| (vec![m], vec![n])))
            .collect();
        let ls = LatticeSubset::new(2, 1, members).unwrap();
        let rho = ls.state::<f64>();
        assert!(rho.max_abs_diff(&M::identity(4).scale_re(0.25)) <= 1e-12);
    }

    #[test]
    fn lattice_single_member_is_maximally_entangled() {
        let ls = LatticeSubset::new(2, 2, vec![(vec![0, 0], vec![0, 0])]).unwrap();
        let rho = ls.state::<f64>();
        assert!(rho.max_abs_diff(&maximally_entangled(4)) <= 1e-13);
    }

    #[test]
    fn lattice_three_members_have_flat_rank_three_spectrum() {
        let members = vec![
            (vec![0, 1], vec![1, 0]),
            (vec![1, 1], vec![0, 1]),
            (vec![0, 0], vec![1, 1]),
        ];
        let ls = LatticeSubset::new(2, 2, members).unwrap();
        let rho = ls.state::<f64>();
        assert!((rho.trace().re - 1.0).abs() < 1e-12);
        let spectrum = hermitian_eigenvalues(&rho).unwrap();
        let zeros = spectrum
            .eigenvalues
            .iter()
            .filter(|v| v.abs() < 1e-11)
            .count();
        let thirds = spectrum
            .eigenvalues
            .iter()
            .filter(|v| (**v - 1.0 / 3.0).abs() < 1e-11)
            .count();
        assert_eq!((zeros, thirds), (13, 3));
    }

    #[test]
    fn lattice_member_unitaries_are_orthogonal() {
        let ls = LatticeSubset::new(2, 2, vec![(vec![0, 0], vec![0, 0])]).unwrap();
        let dim = 4.0;
        let all: Vec<(Vec<usize>, Vec<usize>)> = (0..2)
            .flat_map(|m1| {
                (0..2).flat_map(move |m2| {
                    (0..2).flat_map(move |n1| {
                        (0..2).map(move |n2| (vec![m1, m2], vec![n1, n2]))
                    })
                })
            })
            .collect();
        for a in &all {
            for b in &all {
                let ua = ls.member_unitary::<f64>(a);
                let ub = ls.member_unitary::<f64>(b);
                let tr = ua.matmul(&ub.dagger()).trace();
                let expected = if a == b { dim } else { 0.0 };
                assert!((tr - Complex::new(expected, 0.0)).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn lattice_guards() {
        assert!(matches!(
            LatticeSubset::new(2, 1, vec![]),
            Err(FamilyError::EmptySubset)
        ));
        assert!(matches!(
            LatticeSubset::new(2, 2, vec![(vec![0], vec![0, 0])]),
            Err(FamilyError::BadMember { .. })
        ));
        assert!(matches!(
            LatticeSubset::new(2, 2, vec![(vec![0, 2], vec![0, 0])]),
            Err(FamilyError::BadMember { .. })
        ));
        assert!(matches!(
            LatticeSubset::new(
                2,
                2,
                vec![(vec![0, 0], vec![0, 0]), (vec![0, 0], vec![0, 0])]
            ),
            Err(FamilyError::DuplicateMember { .. })
        ));
        assert!(matches!(
            LatticeSubset::new(2, 5, vec![(vec![0; 5], vec![0; 5])]),
            Err(FamilyError::ScaleCapExceeded { .. })
        ));
    }

    #[test]
    fn bell_vector_matches_projector() {
        let psi = bell_state_vector::<f64>(3, WeylIndex { m: 2, n: 1 });
        let p = outer_product(&psi, &psi);
        let expected = crate::belldiag::bell_projector::<f64>(3, WeylIndex { m: 2, n: 1 });
        assert!(p.max_abs_diff(&expected) == 0.0);
    }
}
