//! Scalar abstraction shared by the formula-level operations.
//!
//! The same slope or charge formula can be evaluated over `f64` for plotting
//! and over [`crate::Rat`] when the answer feeds a decision, so the numeric
//! kernels take any type with ring operations, signs, and a total order on
//! the values actually produced.

use num_traits::{FromPrimitive, Num, Signed};

/// Numbers the stability formulas can be evaluated over.
///
/// Implemented by `f32`/`f64` and by `num_rational` ratios, among others.
pub trait Scalar: Num + Signed + PartialOrd + Clone + FromPrimitive + std::fmt::Debug {}

impl<T> Scalar for T where T: Num + Signed + PartialOrd + Clone + FromPrimitive + std::fmt::Debug {}

/// Embeds an integer into the scalar type.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("integer embeds into scalar")
}

/// Embeds the fraction `n / d` into the scalar type. Panics if `d` is zero.
pub fn ratio<T: Scalar>(n: i64, d: i64) -> T {
    assert!(d != 0, "zero denominator");
    int::<T>(n) / int::<T>(d)
}

/// Embeds `n / 2`, the natural denominator of the ch2 coordinate.
pub fn half<T: Scalar>(n: i64) -> T {
    ratio(n, 2)
}
