//! Circulant bipartite states on C^d (x) C^d.
//!
//! A circulant state is supported on the direct sum of the d shift-related
//! d-dimensional subspaces spanned by e_i (x) e_{i+n} (indices mod d) and is
//! fully described by d positive d x d blocks a^(n) with unit total trace.
//! Partial transposition and realignment both preserve this structure, so
//! each has a closed form on the blocks; the closed forms here are tested
//! entry-for-entry against the brute-force index maps in `matcore`.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::matcore::{
    brute_partial_transpose, hermitian_eigenvalues, is_psd, trace_norm, ComplexMatrix, MatError,
};
use crate::scalar::Real;

/// Tolerance for the block invariants (Hermitian, PSD, unit total trace).
const STATE_TOL: f64 = 1e-10;
/// Off-support entries larger than this make a dense matrix non-circulant.
const SUPPORT_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum CirculantError {
    #[error("a circulant state needs at least one block")]
    NoBlocks,
    #[error("block {index} is {rows}x{cols}, expected {expected}x{expected}")]
    BlockShape {
        index: usize,
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("block {index} is not Hermitian (deviation {deviation:e})")]
    BlockNotHermitian { index: usize, deviation: f64 },
    #[error("block {index} is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    BlockNotPsd { index: usize, min_eigenvalue: f64 },
    #[error("total trace of the blocks is {trace}, expected 1")]
    TraceNotOne { trace: f64 },
    #[error("entry ({row},{col}) with magnitude {magnitude:e} lies off the circulant support")]
    NotCirculant {
        row: usize,
        col: usize,
        magnitude: f64,
    },
    #[error("matrix contains non-finite entries")]
    NotFinite,
    #[error("channel input is {rows}x{cols}, expected {expected}x{expected}")]
    ChannelInput {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// A circulant density operator: dimension d plus d Hermitian PSD blocks
/// a^(0..d-1) with total trace 1.
#[derive(Clone, Debug)]
pub struct CirculantState<T> {
    d: usize,
    blocks: Vec<ComplexMatrix<T>>,
}

/// The blocks of the partially transposed state, carried on the shifted
/// subspace decomposition e_i (x) e_{-i+n}. Hermitian by construction;
/// deliberately not constrained to be PSD, because their sign is exactly
/// the PPT question.
#[derive(Clone, Debug)]
pub struct PtBlocks<T> {
    d: usize,
    blocks: Vec<ComplexMatrix<T>>,
}

/// The blocks of the realigned operator, carried on the original circulant
/// support. Generally neither Hermitian nor positive.
#[derive(Clone, Debug)]
pub struct RealignedBlocks<T> {
    d: usize,
    blocks: Vec<ComplexMatrix<T>>,
}

impl<T: Real> CirculantState<T> {
    /// Validate and build a state from its blocks.
    pub fn new(blocks: Vec<ComplexMatrix<T>>) -> Result<Self, CirculantError> {
        let d = blocks.len();
        if d == 0 {
            return Err(CirculantError::NoBlocks);
        }
        let tol = T::of(STATE_TOL);
        let mut trace_sum = T::zero();
        for (index, block) in blocks.iter().enumerate() {
            if block.rows() != d || block.cols() != d {
                return Err(CirculantError::BlockShape {
                    index,
                    rows: block.rows(),
                    cols: block.cols(),
                    expected: d,
                });
            }
            if !block.is_finite() {
                return Err(CirculantError::NotFinite);
            }
            let herm = block.hermiticity_error();
            if herm > tol * (T::one() + block.max_abs()) {
                return Err(CirculantError::BlockNotHermitian {
                    index,
                    deviation: herm.to_f64_lossy(),
                });
            }
            if !is_psd(block, tol)? {
                let min = hermitian_eigenvalues(block)?.min();
                return Err(CirculantError::BlockNotPsd {
                    index,
                    min_eigenvalue: min.to_f64_lossy(),
                });
            }
            trace_sum += block.trace().re;
        }
        if (trace_sum - T::one()).abs() > tol {
            return Err(CirculantError::TraceNotOne {
                trace: trace_sum.to_f64_lossy(),
            });
        }
        Ok(Self { d, blocks })
    }

    /// Crate-internal constructor for blocks that are valid by construction.
    pub(crate) fn new_unchecked(blocks: Vec<ComplexMatrix<T>>) -> Self {
        let d = blocks.len();
        debug_assert!(d > 0);
        Self { d, blocks }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[ComplexMatrix<T>] {
        &self.blocks
    }

    pub fn block(&self, n: usize) -> &ComplexMatrix<T> {
        &self.blocks[n]
    }

    /// Seeded random state: each block G'G with complex Gaussian G, then
    /// the whole collection normalized to unit total trace.
    pub fn random<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Self {
        let mut blocks: Vec<ComplexMatrix<T>> = (0..d)
            .map(|_| {
                let g = ComplexMatrix::from_fn(d, d, |_, _| {
                    Complex::new(
                        T::of(rng.sample::<f64, _>(StandardNormal)),
                        T::of(rng.sample::<f64, _>(StandardNormal)),
                    )
                });
                g.dagger().matmul(&g)
            })
            .collect();
        let total = blocks
            .iter()
            .fold(T::zero(), |acc, b| acc + b.trace().re);
        for b in &mut blocks {
            *b = b.scale_re(T::one() / total);
        }
        Self::new_unchecked(blocks)
    }

    /// Dense d^2 x d^2 matrix with entry a^(n)_{ij} at ((i, i+n), (j, j+n)).
    pub fn assemble_dense(&self) -> ComplexMatrix<T> {
        let d = self.d;
        let mut out = ComplexMatrix::zeros(d * d, d * d);
        for (n, block) in self.blocks.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    out[(i * d + (i + n) % d, j * d + (j + n) % d)] = block[(i, j)];
                }
            }
        }
        out
    }

    /// Read the blocks off a dense matrix; any entry of magnitude above
    /// 1e-12 outside the circulant support is an error carrying the worst
    /// offender.
    pub fn from_dense(m: &ComplexMatrix<T>, d: usize) -> Result<Self, CirculantError> {
        if m.rows() != d * d || m.cols() != d * d {
            return Err(CirculantError::BlockShape {
                index: 0,
                rows: m.rows(),
                cols: m.cols(),
                expected: d * d,
            });
        }
        let support_tol = T::of(SUPPORT_TOL);
        let mut worst = (T::zero(), 0usize, 0usize);
        let mut blocks = vec![ComplexMatrix::zeros(d, d); d];
        for r in 0..d * d {
            for c in 0..d * d {
                let (i, k) = (r / d, r % d);
                let (j, l) = (c / d, c % d);
                // On-support means k - i = l - j (mod d).
                if (k + d - i) % d == (l + d - j) % d {
                    let n = (k + d - i) % d;
                    blocks[n][(i, j)] = m[(r, c)];
                } else {
                    let mag = m[(r, c)].norm();
                    if mag > worst.0 {
                        worst = (mag, r, c);
                    }
                }
            }
        }
        if worst.0 > support_tol {
            return Err(CirculantError::NotCirculant {
                row: worst.1,
                col: worst.2,
                magnitude: worst.0.to_f64_lossy(),
            });
        }
        Self::new(blocks)
    }

    /// Closed-form blocks of the partial transpose: the n-th block is
    /// sum_m a^(n+m) masked by the permutation-shift pattern Pi S^m, which
    /// reduces to entry (i,j) of block n coming from a^(n-i-j).
    pub fn pt_blocks(&self) -> PtBlocks<T> {
        let d = self.d;
        let masks = permutation_shift_masks::<T>(d);
        let blocks = (0..d)
            .map(|n| {
                let mut acc = ComplexMatrix::zeros(d, d);
                for m in 0..d {
                    let src = &self.blocks[(n + m) % d];
                    let mask = &masks[m];
                    for i in 0..d {
                        for j in 0..d {
                            acc[(i, j)] += src[(i, j)] * mask[(i, j)];
                        }
                    }
                }
                acc
            })
            .collect();
        PtBlocks { d, blocks }
    }

    /// Closed-form blocks of the realignment: R^(n)_{ij} = a^{(j-i)}_{i+n, i}
    /// (all indices mod d), carried on the original circulant support.
    pub fn realign_blocks(&self) -> RealignedBlocks<T> {
        let d = self.d;
        let blocks = (0..d)
            .map(|n| {
                ComplexMatrix::from_fn(d, d, |i, j| {
                    self.blocks[(j + d - i) % d][((i + n) % d, i)]
                })
            })
            .collect();
        RealignedBlocks { d, blocks }
    }

    /// PPT verdict via the closed form: every partial-transpose block PSD.
    pub fn is_ppt(&self, tol: T) -> Result<bool, CirculantError> {
        for block in &self.pt_blocks().blocks {
            if !is_psd(block, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Trace norm of the realigned operator; a value above 1 certifies
    /// entanglement (realignment criterion).
    pub fn ccnr_value(&self) -> Result<T, CirculantError> {
        Ok(trace_norm(&self.realign_blocks().assemble_dense())?)
    }

    /// Action of the induced channel on a d x d matrix, the linear
    /// extension of e_{kl} -> d * sum_n a^(n)_{kl} e_{k+n,l+n}. The factor
    /// d makes (id (x) channel) P^+_d reproduce the state exactly and
    /// matches the Kraus form of Bell-diagonal channels.
    pub fn channel_apply(&self, x: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>, CirculantError> {
        self.expect_channel_input(x)?;
        let d = self.d;
        let scale = T::of(d as f64);
        let mut out = ComplexMatrix::zeros(d, d);
        for k in 0..d {
            for l in 0..d {
                let xkl = x[(k, l)];
                for (n, block) in self.blocks.iter().enumerate() {
                    out[((k + n) % d, (l + n) % d)] += block[(k, l)].scale(scale) * xkl;
                }
            }
        }
        Ok(out)
    }

    /// The adjoint of `channel_apply` with respect to the trace pairing,
    /// Tr(rho L(X)) = Tr(X L#(rho)): the linear extension of
    /// e_{kl} -> d * sum_n a^(n)_{l-n,k-n} e_{k-n,l-n}.
    pub fn channel_dual_apply(
        &self,
        x: &ComplexMatrix<T>,
    ) -> Result<ComplexMatrix<T>, CirculantError> {
        self.expect_channel_input(x)?;
        let d = self.d;
        let scale = T::of(d as f64);
        let mut out = ComplexMatrix::zeros(d, d);
        for k in 0..d {
            for l in 0..d {
                let xkl = x[(k, l)];
                for (n, block) in self.blocks.iter().enumerate() {
                    let (kn, ln) = ((k + d - n) % d, (l + d - n) % d);
                    out[(kn, ln)] += block[(ln, kn)].scale(scale) * xkl;
                }
            }
        }
        Ok(out)
    }

    /// Block collection of the dual channel, b^(n)_{ij} = a^(-n)_{j+n,i+n}:
    /// the transposed blocks, shift-conjugated and reindexed. A valid
    /// circulant state in its own right.
    pub fn dual(&self) -> CirculantState<T> {
        let d = self.d;
        let blocks = (0..d)
            .map(|n| {
                let src = &self.blocks[(d - n) % d];
                ComplexMatrix::from_fn(d, d, |i, j| src[((j + n) % d, (i + n) % d)])
            })
            .collect();
        Self::new_unchecked(blocks)
    }

    /// Does the induced channel map the identity to the identity?
    pub fn is_unital(&self) -> bool {
        let id = ComplexMatrix::identity(self.d);
        let image = self.channel_apply(&id).expect("identity has channel shape");
        image.max_abs_diff(&id) <= T::of(STATE_TOL)
    }

    /// Trace preservation of the induced channel, checked as unitality of
    /// the dual map.
    pub fn is_trace_preserving(&self) -> bool {
        let id = ComplexMatrix::identity(self.d);
        let image = self
            .channel_dual_apply(&id)
            .expect("identity has channel shape");
        image.max_abs_diff(&id) <= T::of(STATE_TOL)
    }

    fn expect_channel_input(&self, x: &ComplexMatrix<T>) -> Result<(), CirculantError> {
        if x.rows() != self.d || x.cols() != self.d {
            return Err(CirculantError::ChannelInput {
                expected: self.d,
                rows: x.rows(),
                cols: x.cols(),
            });
        }
        Ok(())
    }
}

/// The masks Pi S^m: Pi is the permutation matrix of k -> -k (mod d), S
/// the cyclic shift. Entry (i,j) of Pi S^m is 1 exactly when i+j+m = 0
/// (mod d).
fn permutation_shift_masks<T: Real>(d: usize) -> Vec<ComplexMatrix<T>> {
    (0..d)
        .map(|m| {
            ComplexMatrix::from_fn(d, d, |i, j| {
                if (i + j + m) % d == 0 {
                    Complex::new(T::one(), T::zero())
                } else {
                    Complex::new(T::zero(), T::zero())
                }
            })
        })
        .collect()
}

impl<T: Real> PtBlocks<T> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[ComplexMatrix<T>] {
        &self.blocks
    }

    pub fn block(&self, n: usize) -> &ComplexMatrix<T> {
        &self.blocks[n]
    }

    /// Dense matrix with entry b^(n)_{ij} at ((i, -i+n), (j, -j+n)); equals
    /// the brute-force partial transpose of the assembled state.
    pub fn assemble_dense(&self) -> ComplexMatrix<T> {
        let d = self.d;
        let mut out = ComplexMatrix::zeros(d * d, d * d);
        for (n, block) in self.blocks.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    let row = i * d + ((d - i) % d + n) % d;
                    let col = j * d + ((d - j) % d + n) % d;
                    out[(row, col)] = block[(i, j)];
                }
            }
        }
        out
    }
}

impl<T: Real> RealignedBlocks<T> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[ComplexMatrix<T>] {
        &self.blocks
    }

    pub fn block(&self, n: usize) -> &ComplexMatrix<T> {
        &self.blocks[n]
    }

    /// Dense matrix with entry R^(n)_{ij} at ((i, i+n), (j, j+n)); equals
    /// the brute-force realignment of the assembled state.
    pub fn assemble_dense(&self) -> ComplexMatrix<T> {
        let d = self.d;
        let mut out = ComplexMatrix::zeros(d * d, d * d);
        for (n, block) in self.blocks.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    out[(i * d + (i + n) % d, j * d + (j + n) % d)] = block[(i, j)];
                }
            }
        }
        out
    }
}

/// PPT verdict straight from the dense matrix: eigenvalues of the
/// brute-force partial transpose. The oracle that `CirculantState::is_ppt`
/// must agree with.
pub fn dense_ppt_oracle<T: Real>(
    m: &ComplexMatrix<T>,
    d: usize,
    tol: T,
) -> Result<bool, CirculantError> {
    let pt = brute_partial_transpose(m, d)?;
    Ok(is_psd(&pt, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::brute_realign;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = ComplexMatrix<f64>;
    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    /// Two fixed Hermitian PSD 2x2 blocks with distinct entries.
    fn qubit_state() -> CirculantState<f64> {
        let a = M::from_rows(vec![
            vec![c(0.20, 0.0), c(0.05, 0.02)],
            vec![c(0.05, -0.02), c(0.25, 0.0)],
        ])
        .unwrap();
        let b = M::from_rows(vec![
            vec![c(0.30, 0.0), c(-0.04, 0.01)],
            vec![c(-0.04, -0.01), c(0.25, 0.0)],
        ])
        .unwrap();
        CirculantState::new(vec![a, b]).unwrap()
    }

    fn qutrit_state(seed: u64) -> CirculantState<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        CirculantState::random(3, &mut rng)
    }

    #[test]
    fn assemble_matches_x_state_pattern() {
        let cs = qubit_state();
        let (a, b) = (cs.block(0).clone(), cs.block(1).clone());
        let rho = cs.assemble_dense();
        // Row-by-row pattern of the two-qubit circulant (X) state.
        assert_eq!(rho[(0, 0)], a[(0, 0)]);
        assert_eq!(rho[(0, 3)], a[(0, 1)]);
        assert_eq!(rho[(3, 0)], a[(1, 0)]);
        assert_eq!(rho[(3, 3)], a[(1, 1)]);
        assert_eq!(rho[(1, 1)], b[(0, 0)]);
        assert_eq!(rho[(1, 2)], b[(0, 1)]);
        assert_eq!(rho[(2, 1)], b[(1, 0)]);
        assert_eq!(rho[(2, 2)], b[(1, 1)]);
        for (r, col) in [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)] {
            assert_eq!(rho[(r, col)], c(0.0, 0.0));
        }
    }

    #[test]
    fn assemble_matches_qutrit_pattern() {
        let cs = qutrit_state(1);
        let rho = cs.assemble_dense();
        let (a, b, cc) = (cs.block(0), cs.block(1), cs.block(2));
        // Spot positions from the 9x9 circulant layout.
        assert_eq!(rho[(0, 4)], a[(0, 1)]);
        assert_eq!(rho[(8, 0)], a[(2, 0)]);
        assert_eq!(rho[(1, 5)], b[(0, 1)]);
        assert_eq!(rho[(6, 1)], b[(2, 0)]);
        assert_eq!(rho[(2, 3)], cc[(0, 1)]);
        assert_eq!(rho[(7, 2)], cc[(2, 0)]);
        assert_eq!(rho[(0, 1)], c(0.0, 0.0));
        assert_eq!(rho[(4, 6)], c(0.0, 0.0));
    }

    #[test]
    fn maximally_mixed_blocks_assemble_to_identity() {
        let d = 3;
        let blocks = vec![M::identity(d).scale_re(1.0 / (d * d) as f64); d];
        let cs = CirculantState::new(blocks).unwrap();
        let rho = cs.assemble_dense();
        assert!(rho.max_abs_diff(&M::identity(9).scale_re(1.0 / 9.0)) == 0.0);
    }

    #[test]
    fn from_dense_round_trips() {
        let cs = qutrit_state(2);
        let rho = cs.assemble_dense();
        let back = CirculantState::from_dense(&rho, 3).unwrap();
        for n in 0..3 {
            assert!(back.block(n).max_abs_diff(cs.block(n)) == 0.0);
        }
    }

    #[test]
    fn from_dense_reads_maximally_entangled() {
        let d = 3;
        let mut rho = M::zeros(9, 9);
        for k in 0..d {
            for l in 0..d {
                rho[(k * d + k, l * d + l)] = c(1.0 / d as f64, 0.0);
            }
        }
        let cs = CirculantState::from_dense(&rho, d).unwrap();
        for i in 0..d {
            for j in 0..d {
                assert_eq!(cs.block(0)[(i, j)], c(1.0 / 3.0, 0.0));
            }
        }
        assert!(cs.block(1).max_abs() == 0.0);
        assert!(cs.block(2).max_abs() == 0.0);
    }

    #[test]
    fn from_dense_rejects_off_support_entry() {
        let cs = qutrit_state(3);
        let mut rho = cs.assemble_dense();
        rho[(0, 1)] = c(1e-6, 0.0);
        match CirculantState::from_dense(&rho, 3) {
            Err(CirculantError::NotCirculant { row: 0, col: 1, .. }) => {}
            other => panic!("expected NotCirculant, got {other:?}"),
        }
    }

    #[test]
    fn pt_blocks_match_printed_qubit_example() {
        let cs = qubit_state();
        let (a, b) = (cs.block(0).clone(), cs.block(1).clone());
        let pt = cs.pt_blocks();
        // First block [[a00, b01], [b10, a11]], second [[b00, a01], [a10, b11]].
        assert_eq!(pt.block(0)[(0, 0)], a[(0, 0)]);
        assert_eq!(pt.block(0)[(0, 1)], b[(0, 1)]);
        assert_eq!(pt.block(0)[(1, 0)], b[(1, 0)]);
        assert_eq!(pt.block(0)[(1, 1)], a[(1, 1)]);
        assert_eq!(pt.block(1)[(0, 0)], b[(0, 0)]);
        assert_eq!(pt.block(1)[(0, 1)], a[(0, 1)]);
        assert_eq!(pt.block(1)[(1, 0)], a[(1, 0)]);
        assert_eq!(pt.block(1)[(1, 1)], b[(1, 1)]);
    }

    #[test]
    fn pt_blocks_match_printed_qutrit_example() {
        let cs = qutrit_state(4);
        let (a, b, cc) = (cs.block(0), cs.block(1), cs.block(2));
        let t0 = cs.pt_blocks().block(0).clone();
        // First row (a00, c01, b02), and the rest of the printed pattern.
        assert_eq!(t0[(0, 0)], a[(0, 0)]);
        assert_eq!(t0[(0, 1)], cc[(0, 1)]);
        assert_eq!(t0[(0, 2)], b[(0, 2)]);
        assert_eq!(t0[(1, 0)], cc[(1, 0)]);
        assert_eq!(t0[(1, 1)], b[(1, 1)]);
        assert_eq!(t0[(1, 2)], a[(1, 2)]);
        assert_eq!(t0[(2, 0)], b[(2, 0)]);
        assert_eq!(t0[(2, 1)], a[(2, 1)]);
        assert_eq!(t0[(2, 2)], cc[(2, 2)]);
    }

    #[test]
    fn pt_blocks_agree_with_brute_force() {
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cs: CirculantState<f64> = CirculantState::random(5, &mut rng);
            let closed = cs.pt_blocks().assemble_dense();
            let brute = brute_partial_transpose(&cs.assemble_dense(), 5).unwrap();
            assert!(closed.max_abs_diff(&brute) <= 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn realign_blocks_match_printed_qubit_example() {
        let cs = qubit_state();
        let (a, b) = (cs.block(0).clone(), cs.block(1).clone());
        let r = cs.realign_blocks();
        assert_eq!(r.block(0)[(0, 0)], a[(0, 0)]);
        assert_eq!(r.block(0)[(0, 1)], b[(0, 0)]);
        assert_eq!(r.block(0)[(1, 0)], b[(1, 1)]);
        assert_eq!(r.block(0)[(1, 1)], a[(1, 1)]);
        assert_eq!(r.block(1)[(0, 0)], a[(1, 0)]);
        assert_eq!(r.block(1)[(0, 1)], b[(1, 0)]);
        assert_eq!(r.block(1)[(1, 0)], b[(0, 1)]);
        assert_eq!(r.block(1)[(1, 1)], a[(0, 1)]);
        // Dense first and last rows of the realigned X state.
        let dense = r.assemble_dense();
        assert_eq!(dense[(0, 0)], a[(0, 0)]);
        assert_eq!(dense[(0, 3)], b[(0, 0)]);
        assert_eq!(dense[(3, 0)], b[(1, 1)]);
        assert_eq!(dense[(3, 3)], a[(1, 1)]);
        assert_eq!(dense[(0, 1)], c(0.0, 0.0));
        assert_eq!(dense[(0, 2)], c(0.0, 0.0));
    }

    #[test]
    fn realign_blocks_match_printed_qutrit_example() {
        let cs = qutrit_state(5);
        let (a, b, cc) = (cs.block(0), cs.block(1), cs.block(2));
        let r = cs.realign_blocks();
        let r0 = r.block(0);
        assert_eq!(r0[(0, 0)], a[(0, 0)]);
        assert_eq!(r0[(0, 1)], b[(0, 0)]);
        assert_eq!(r0[(0, 2)], cc[(0, 0)]);
        assert_eq!(r0[(1, 0)], cc[(1, 1)]);
        assert_eq!(r0[(1, 1)], a[(1, 1)]);
        assert_eq!(r0[(1, 2)], b[(1, 1)]);
        assert_eq!(r0[(2, 0)], b[(2, 2)]);
        assert_eq!(r0[(2, 1)], cc[(2, 2)]);
        assert_eq!(r0[(2, 2)], a[(2, 2)]);
        let r1 = r.block(1);
        assert_eq!(r1[(0, 0)], a[(1, 0)]);
        assert_eq!(r1[(0, 1)], b[(1, 0)]);
        assert_eq!(r1[(0, 2)], cc[(1, 0)]);
        assert_eq!(r1[(1, 0)], cc[(2, 1)]);
        assert_eq!(r1[(1, 1)], a[(2, 1)]);
        assert_eq!(r1[(1, 2)], b[(2, 1)]);
        assert_eq!(r1[(2, 0)], b[(0, 2)]);
        assert_eq!(r1[(2, 1)], cc[(0, 2)]);
        assert_eq!(r1[(2, 2)], a[(0, 2)]);
        let r2 = r.block(2);
        assert_eq!(r2[(0, 0)], a[(2, 0)]);
        assert_eq!(r2[(1, 1)], a[(0, 1)]);
        assert_eq!(r2[(2, 2)], a[(1, 2)]);
        assert_eq!(r2[(1, 0)], cc[(0, 1)]);
        assert_eq!(r2[(2, 1)], cc[(1, 2)]);
    }

    #[test]
    fn realign_blocks_agree_with_brute_force() {
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cs: CirculantState<f64> = CirculantState::random(4, &mut rng);
            let closed = cs.realign_blocks().assemble_dense();
            let brute = brute_realign(&cs.assemble_dense(), 4).unwrap();
            assert!(closed.max_abs_diff(&brute) <= 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn ppt_of_maximally_mixed_and_entangled() {
        let d = 3;
        let blocks = vec![M::identity(d).scale_re(1.0 / (d * d) as f64); d];
        let mixed = CirculantState::new(blocks).unwrap();
        assert!(mixed.is_ppt(1e-10).unwrap());

        let mut p_plus = M::zeros(9, 9);
        for k in 0..d {
            for l in 0..d {
                p_plus[(k * d + k, l * d + l)] = c(1.0 / d as f64, 0.0);
            }
        }
        let entangled = CirculantState::from_dense(&p_plus, d).unwrap();
        assert!(!entangled.is_ppt(1e-10).unwrap());
    }

    #[test]
    fn closed_form_ppt_matches_oracle() {
        for d in 2..=5usize {
            for seed in 0..10u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed * 31 + d as u64);
                let cs: CirculantState<f64> = CirculantState::random(d, &mut rng);
                let closed = cs.is_ppt(1e-10).unwrap();
                let oracle = dense_ppt_oracle(&cs.assemble_dense(), d, 1e-10).unwrap();
                assert_eq!(closed, oracle, "d={d} seed={seed}");
            }
        }
    }

    #[test]
    fn ccnr_of_maximally_mixed_is_small() {
        let d = 3;
        let blocks = vec![M::identity(d).scale_re(1.0 / (d * d) as f64); d];
        let cs = CirculantState::new(blocks).unwrap();
        let value = cs.ccnr_value().unwrap();
        assert!((value - 1.0 / 3.0).abs() < 1e-11);
        assert!(value <= 1.0);
    }

    #[test]
    fn channel_on_single_generator() {
        let cs = qubit_state();
        let mut e00 = M::zeros(2, 2);
        e00[(0, 0)] = c(1.0, 0.0);
        let image = cs.channel_apply(&e00).unwrap();
        // d * (a0_00 e00 + a1_00 e11).
        assert_eq!(image[(0, 0)], cs.block(0)[(0, 0)].scale(2.0));
        assert_eq!(image[(1, 1)], cs.block(1)[(0, 0)].scale(2.0));
        assert_eq!(image[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn channel_reproduces_state_from_maximally_entangled() {
        for d in 2..=4usize {
            let mut rng = ChaCha8Rng::seed_from_u64(7 + d as u64);
            let cs: CirculantState<f64> = CirculantState::random(d, &mut rng);
            // (id (x) channel) P^+_d, built generator by generator.
            let mut rho = M::zeros(d * d, d * d);
            for k in 0..d {
                for l in 0..d {
                    let mut ekl = M::zeros(d, d);
                    ekl[(k, l)] = c(1.0, 0.0);
                    let img = cs.channel_apply(&ekl).unwrap();
                    for r in 0..d {
                        for s in 0..d {
                            rho[(k * d + r, l * d + s)] += img[(r, s)].scale(1.0 / d as f64);
                        }
                    }
                }
            }
            assert!(rho.max_abs_diff(&cs.assemble_dense()) <= 1e-12, "d={d}");
        }
    }

    #[test]
    fn duality_identity_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let cs = qutrit_state(6);
        for _ in 0..20 {
            let rho = crate::matcore::tests::random_hermitian(3, &mut rng);
            let x = crate::matcore::tests::random_hermitian(3, &mut rng);
            let lhs = rho.matmul(&cs.channel_apply(&x).unwrap()).trace();
            let rhs = x.matmul(&cs.channel_dual_apply(&rho).unwrap()).trace();
            assert!((lhs - rhs).norm() <= 1e-11);
        }
    }

    #[test]
    fn dual_state_generates_dual_channel() {
        let cs = qutrit_state(8);
        let dual = cs.dual();
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        let x = crate::matcore::tests::random_hermitian(3, &mut rng);
        let via_dual_apply = cs.channel_dual_apply(&x).unwrap();
        let via_dual_state = dual.channel_apply(&x).unwrap();
        assert!(via_dual_apply.max_abs_diff(&via_dual_state) <= 1e-13);
    }

    #[test]
    fn rank_deficient_diagonal_is_not_unital() {
        let mut a0 = M::zeros(2, 2);
        a0[(0, 0)] = c(1.0, 0.0);
        let cs = CirculantState::new(vec![a0, M::zeros(2, 2)]).unwrap();
        assert!(!cs.is_unital());
    }

    #[test]
    fn trace_preservation_matches_dual_unitality() {
        for seed in 0..10u64 {
            let cs = qutrit_state(200 + seed);
            assert_eq!(cs.is_trace_preserving(), cs.dual().is_unital());
        }
    }

    #[test]
    fn invalid_blocks_are_rejected() {
        // Wrong trace.
        let blocks = vec![M::identity(2), M::zeros(2, 2)];
        assert!(matches!(
            CirculantState::new(blocks),
            Err(CirculantError::TraceNotOne { .. })
        ));
        // Not PSD.
        let neg = M::diagonal(&[1.5, -0.5]);
        assert!(matches!(
            CirculantState::new(vec![neg, M::zeros(2, 2)]),
            Err(CirculantError::BlockNotPsd { .. })
        ));
    }
}
