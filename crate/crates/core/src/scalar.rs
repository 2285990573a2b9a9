//! Scalar abstraction shared by all numeric code in the crate.

use nalgebra::RealField;
use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable everywhere in this crate.
///
/// Combines `nalgebra`'s [`RealField`] (dense linear algebra, eigensolvers)
/// with `num_traits`' [`Float`] (comparisons, classification). Implemented
/// for `f32` and `f64`; the blanket impl picks up any type satisfying the
/// bounds.
pub trait Scalar: RealField + Float + FromPrimitive + ToPrimitive + Copy {}

impl<T> Scalar for T where T: RealField + Float + FromPrimitive + ToPrimitive + Copy {}

/// Shorthand for converting an `f64` literal into the working scalar type.
pub(crate) fn from_f64<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must be representable in the scalar type")
}
