//! Circulant and Bell-diagonal bipartite quantum states.
//!
//! `qbell` constructs, transforms and classifies the circulant class of
//! bipartite density matrices on C^d (x) C^d: states supported on the
//! direct sum of d shift-related subspaces, described by d positive
//! blocks. The Bell-diagonal (magic simplex) states are the circulant
//! subclass whose blocks are circulant matrices, reached by a discrete
//! Fourier transform of the probability weights.
//!
//! What the crate provides:
//!
//! - [`matcore`]: dense complex linear algebra with brute-force reference
//!   implementations of partial transposition, realignment, Hermitian
//!   spectra (cyclic Jacobi) and Schmidt coefficients — the oracle layer.
//! - [`circulant`]: the block model, closed forms for the partial
//!   transpose and realignment, the PPT verdict, the realignment (CCNR)
//!   value, and the induced quantum channels with their duals.
//! - [`belldiag`]: Weyl unitaries, Bell projectors, the Fourier map
//!   between simplex weights and blocks, the orbit structure of the
//!   partial-transpose blocks, and closed-form PPT tests for d = 2, 3, 4.
//! - [`families`]: named families — the bound entangled epsilon family of
//!   two qutrits, the gamma family of two qudits, delta and product
//!   distributions, and generalized lattice states.
//! - [`witness`]: entanglement witnesses diagonal in the magic basis,
//!   Schmidt k-norms, spectral certification, five named witness
//!   families, evaluation against states and sampled block positivity.
//!
//! All numerics are generic over the real scalar through
//! [`scalar::Real`] (f32 or f64); the `*64` aliases below fix the default
//! double-precision instantiations. Every value is immutable after
//! construction and safely shareable across threads.

pub mod belldiag;
pub mod circulant;
pub mod families;
pub mod matcore;
pub mod scalar;
pub mod witness;

pub use belldiag::{BellError, BellProbabilities, WeylIndex};
pub use circulant::{CirculantError, CirculantState, PtBlocks, RealignedBlocks};
pub use families::{EpsilonFamily, FamilyError, GammaFamily, LatticeSubset};
pub use matcore::{ComplexMatrix, MatError, SchmidtData, Spectrum};
pub use scalar::Real;
pub use witness::{SpectralWitness, WitnessError, WitnessVerdict};

/// Default double-precision instantiations.
pub type ComplexMatrix64 = matcore::ComplexMatrix<f64>;
pub type Spectrum64 = matcore::Spectrum<f64>;
pub type SchmidtData64 = matcore::SchmidtData<f64>;
pub type CirculantState64 = circulant::CirculantState<f64>;
pub type PtBlocks64 = circulant::PtBlocks<f64>;
pub type RealignedBlocks64 = circulant::RealignedBlocks<f64>;
pub type BellProbabilities64 = belldiag::BellProbabilities<f64>;
pub type SpectralWitness64 = witness::SpectralWitness<f64>;
pub type WitnessVerdict64 = witness::WitnessVerdict<f64>;

/// Single-precision variants; the spectral tolerances in this crate are
/// calibrated for f64, so these are for rough work.
pub type ComplexMatrix32 = matcore::ComplexMatrix<f32>;
pub type CirculantState32 = circulant::CirculantState<f32>;
pub type BellProbabilities32 = belldiag::BellProbabilities<f32>;
