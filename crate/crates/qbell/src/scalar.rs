//! Scalar abstraction: the real floating-point type underlying all
//! complex matrix entries.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar: f32 or f64.
///
/// All matrix entries are `Complex<T>` with `T: Real`. Tolerances quoted
/// throughout the crate are calibrated for f64; f32 works for the basic
/// algebra but the closed-form/oracle agreement checks assume double
/// precision.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Lift an f64 literal (tolerance, coefficient) into this scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Lossy conversion back to f64, for diagnostics.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
