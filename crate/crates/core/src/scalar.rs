//! Scalar abstraction: the real field underlying all vectors and matrices.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar type for all numerical work: `f32` or `f64`.
///
/// Everything in this crate is generic over `Scalar`; the concrete aliases at
/// the crate root (`Matrix64`, `Vector64`, ...) pin `f64`, which is what the
/// JSON wire format and the CLI use.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64`, for constants like tolerances.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant converts to any Scalar")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
