//! Twisted slopes, the tilted heart, and tilt slopes.
//!
//! A point of the stability half-plane is a slice parameter `beta` together
//! with `alpha^2 > 0` and the surface constants `(C, H^2)`. The central
//! charge carries the positive-characteristic correction term
//! `(C/(2H^2) + alpha^2/2) * ch0 * H^2` in its real part.

use crate::chern::CharVector;
use crate::error::Error;
use crate::scalar::{int, Scalar};

/// Slope value in `Q ∪ {+∞}` (or the chosen scalar's line plus infinity).
/// Infinity compares strictly above every finite value.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtendedSlope<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> PartialOrd for ExtendedSlope<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use ExtendedSlope::*;
        match (self, other) {
            (Infinite, Infinite) => Some(std::cmp::Ordering::Equal),
            (Infinite, Finite(_)) => Some(std::cmp::Ordering::Greater),
            (Finite(_), Infinite) => Some(std::cmp::Ordering::Less),
            (Finite(a), Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl<T> ExtendedSlope<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedSlope::Finite(_))
    }
}

/// Where a slope-semistable sheaf of the given class sits relative to the
/// tilted heart at a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeartPosition {
    /// Positive twisted slope or torsion: the sheaf itself lies in the heart.
    InHeart,
    /// Negative twisted slope: the shift by one lies in the heart.
    ShiftInHeart,
    /// Twisted slope exactly zero: the sheaf straddles the torsion pair.
    Boundary,
}

/// Value of the central charge, split into real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargeValue<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> ChargeValue<T> {
    /// Whether the value lies in the upper half plane union the strictly
    /// negative real axis, the region filled by nonzero heart objects.
    pub fn in_heart_half_plane(&self) -> bool {
        let zero = T::zero();
        self.im > zero || (self.im == zero && self.re < zero)
    }
}

/// A point `(beta, alpha^2)` of the stability half-plane over a surface
/// with correction constant `C >= 0` and degree `H^2 >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TiltPoint<T> {
    beta: T,
    alpha2: T,
    c_x: T,
    h2: i64,
}

impl<T: Scalar> TiltPoint<T> {
    pub fn new(beta: T, alpha2: T, c_x: T, h2: i64) -> Result<Self, Error> {
        if alpha2 <= T::zero() {
            return Err(Error::InvalidParameter("alpha^2 must be positive".into()));
        }
        if c_x < T::zero() {
            return Err(Error::InvalidParameter("C must be nonnegative".into()));
        }
        if h2 < 1 {
            return Err(Error::InvalidParameter("H^2 must be at least 1".into()));
        }
        Ok(TiltPoint { beta, alpha2, c_x, h2 })
    }

    pub fn beta(&self) -> &T {
        &self.beta
    }

    pub fn alpha2(&self) -> &T {
        &self.alpha2
    }

    pub fn c_x(&self) -> &T {
        &self.c_x
    }

    pub fn h2(&self) -> i64 {
        self.h2
    }

    /// The reparametrized height `t^2 = C/H^2 + alpha^2`, in which every
    /// wall becomes the graph of a characteristic-zero wall.
    pub fn t2(&self) -> T {
        self.c_x.clone() / int::<T>(self.h2) + self.alpha2.clone()
    }

    /// Central charge of a class: `re = -dB + (C/(2H^2) + alpha^2/2) r H^2`,
    /// `im = cB`.
    pub fn central_charge(&self, v: &CharVector) -> ChargeValue<T> {
        let t = v.twist(&self.beta, self.h2);
        let two = int::<T>(2);
        let weight = self.c_x.clone() / (two.clone() * int::<T>(self.h2))
            + self.alpha2.clone() / two;
        ChargeValue {
            re: weight * int::<T>(v.r) * int::<T>(self.h2) - t.d_b,
            im: t.c_b,
        }
    }

    /// Tilt slope `nu = -re(Z)/im(Z)`, infinite on the vanishing locus of
    /// the imaginary part.
    pub fn nu_slope(&self, v: &CharVector) -> ExtendedSlope<T> {
        let z = self.central_charge(v);
        if z.im == T::zero() {
            ExtendedSlope::Infinite
        } else {
            ExtendedSlope::Finite(-z.re / z.im)
        }
    }
}

/// Twisted Mumford slope `cB / (H^2 r)`, infinite for torsion classes.
pub fn mu_twisted<T: Scalar>(v: &CharVector, beta: &T, h2: i64) -> ExtendedSlope<T> {
    if v.r == 0 {
        return ExtendedSlope::Infinite;
    }
    let c_b = int::<T>(v.c) - beta.clone() * int::<T>(h2) * int::<T>(v.r);
    ExtendedSlope::Finite(c_b / (int::<T>(h2) * int::<T>(v.r)))
}

/// Position of a slope-semistable sheaf of class `v` relative to the heart
/// at slice `beta`.
pub fn heart_position<T: Scalar>(v: &CharVector, beta: &T, h2: i64) -> HeartPosition {
    match mu_twisted(v, beta, h2) {
        ExtendedSlope::Infinite => HeartPosition::InHeart,
        ExtendedSlope::Finite(mu) => {
            let zero = T::zero();
            if mu > zero {
                HeartPosition::InHeart
            } else if mu < zero {
                HeartPosition::ShiftInHeart
            } else {
                HeartPosition::Boundary
            }
        }
    }
}

/// Whether every map `F -> E` between semistable objects of these tilt
/// slopes must vanish: true exactly when the source slope is strictly
/// larger. Two infinite slopes can coexist, so the answer is then false.
pub fn hom_vanishing<T: Scalar>(slope_f: &ExtendedSlope<T>, slope_e: &ExtendedSlope<T>) -> bool {
    matches!(
        slope_f.partial_cmp(slope_e),
        Some(std::cmp::Ordering::Greater)
    )
}
