//! Tilt-stability computations on a polarized surface, in exact arithmetic.
//!
//! Everything is expressed in the reduced character lattice of a surface with
//! polarization H: a class is (ch0, H.ch1, ch2) plus an optional self
//! intersection ch1^2. The modules build on each other:
//!
//! * [`chern`] - reduced characters, the twist by a slice B = beta*H, and the
//!   discriminants that control stability.
//! * [`stability`] - twisted slopes, the tilted heart, central charges and
//!   tilt slopes at a point (beta, alpha^2).
//! * [`koseki`] - the positive-characteristic correction constant of a
//!   surface, from its numerical invariants.
//! * [`walls`] - pairwise walls in the (beta, alpha^2) half-plane, the
//!   chamber bound, and exhaustive destabilizer searches.
//! * [`vanishing`] - feasibility windows and machine-checkable certificates
//!   for the cohomology vanishing H^1(H (x) K_X) = 0.
//!
//! Formula-level operations are generic over any [`scalar::Scalar`]; the
//! wall enumeration and certificate machinery, whose answers are yes/no,
//! work concretely over [`Rat`] so that every comparison is exact.

pub mod chern;
pub mod error;
pub mod koseki;
pub mod ratstr;
pub mod scalar;
pub mod stability;
pub mod vanishing;
pub mod walls;

pub use chern::{CharVector, TwistedChar};
pub use error::Error;
pub use koseki::{KodairaClass, SurfaceData};
pub use stability::{ChargeValue, ExtendedSlope, HeartPosition, TiltPoint};
pub use vanishing::{Certificate, FeasibilityWindow};
pub use walls::{BetaWindow, DestabilizerCandidate, ScanBounds, WallClass, WallLocus};

/// Exact rational scalar used by every all-or-nothing decision procedure.
pub type Rat = num_rational::BigRational;

/// Wall locus with exact rational coefficients.
pub type Wall = walls::WallLocus<Rat>;

/// Extended slope value over the exact rationals.
pub type Slope = stability::ExtendedSlope<Rat>;

/// Shorthand for building an exact rational from an integer pair.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}
