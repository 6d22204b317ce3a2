//! Reduced Chern characters on a polarized surface.
//!
//! A class is stored as integers `(r, c, 2d)` with `r = ch0`, `c = H.ch1`
//! and `d = ch2` (twice `d` is integral on a surface), together with an
//! optional self intersection `e = ch1^2`. Twisting along the slice
//! `B = beta*H` replaces each coordinate by its `exp(-B)`-corrected value.

use crate::error::Error;
use crate::scalar::{half, int, Scalar};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Sub};

/// Reduced character `(ch0, H.ch1, ch2)` with optional `ch1^2`.
///
/// Display-style tuples in the tests read `(r, c, d, e)`; the stored third
/// coordinate is `2d` so the type never leaves the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CharVector {
    pub r: i64,
    pub c: i64,
    pub two_d: i64,
    #[serde(default)]
    pub e: Option<i64>,
}

/// Character twisted along `B = beta*H`: `cB = H.ch1^B`, `dB = ch2^B`,
/// `eB = (ch1^B)^2`. The rank is untouched by the twist.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedChar<T> {
    pub r: i64,
    pub c_b: T,
    pub d_b: T,
    pub e_b: Option<T>,
    pub beta: T,
}

impl CharVector {
    pub fn new(r: i64, c: i64, two_d: i64, e: Option<i64>) -> Self {
        CharVector { r, c, two_d, e }
    }

    /// Character of the line bundle `O(kH)`: `(1, k*H^2, k^2*H^2/2, k^2*H^2)`.
    pub fn line_bundle(k: i64, h2: i64) -> Self {
        CharVector::new(1, k * h2, k * k * h2, Some(k * k * h2))
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.c == 0 && self.two_d == 0
    }

    /// The `ch2` coordinate as a scalar.
    pub fn d<T: Scalar>(&self) -> T {
        half(self.two_d)
    }

    /// Twists along `B = beta*H` on a surface with `H^2 = h2`.
    pub fn twist<T: Scalar>(&self, beta: &T, h2: i64) -> TwistedChar<T> {
        let b = beta.clone();
        let h2t = int::<T>(h2);
        let r = int::<T>(self.r);
        let c = int::<T>(self.c);
        let c_b = c.clone() - b.clone() * h2t.clone() * r.clone();
        let d_b = self.d::<T>() - b.clone() * c.clone()
            + b.clone() * b.clone() * h2t.clone() * r.clone() / int::<T>(2);
        let e_b = self.e.map(|e| {
            int::<T>(e) - int::<T>(2) * b.clone() * r.clone() * c.clone()
                + b.clone() * b.clone() * r.clone() * r.clone() * h2t.clone()
        });
        TwistedChar { r: self.r, c_b, d_b, e_b, beta: b }
    }

    /// Character of the derived dual: `(r, -c, d, e)`.
    pub fn dualize(&self) -> Self {
        CharVector::new(self.r, -self.c, self.two_d, self.e)
    }

    /// Character of the shift `E[1]`, i.e. the negated class. The self
    /// intersection is a square, so it survives the sign flip.
    pub fn shift(&self) -> Self {
        CharVector::new(-self.r, -self.c, -self.two_d, self.e)
    }

    /// Numerical discriminant `(H.ch1)^2 - 2 H^2 ch0 ch2`. Independent of
    /// any twist and nonnegative on slope-semistable sheaves.
    pub fn disc_h<T: Scalar>(&self, h2: i64) -> T {
        let c = int::<T>(self.c);
        c.clone() * c - int::<T>(h2) * int::<T>(self.r) * int::<T>(self.two_d)
    }

    /// Bogomolov discriminant `ch1^2 - 2 ch0 ch2`; needs the self intersection.
    pub fn disc_bogomolov<T: Scalar>(&self) -> Result<T, Error> {
        let e = self.e.ok_or(Error::MissingSelfIntersection)?;
        Ok(int::<T>(e) - int::<T>(self.r) * int::<T>(self.two_d))
    }

    /// Corrected discriminant `disc_h + C_X * ch0^2` entering every chamber
    /// bound in positive characteristic (`C_X = 0` recovers disc_h).
    pub fn disc_tilde<T: Scalar>(&self, c_x: &T, h2: i64) -> T {
        let r = int::<T>(self.r);
        self.disc_h::<T>(h2) + c_x.clone() * r.clone() * r
    }

    /// Positive form `(ch1^2 - 2 ch0 ch2 + C_X ch0^2) + C_H (H.ch1^B)^2`
    /// used when the Picard rank exceeds one.
    pub fn q_form<T: Scalar>(&self, beta: &T, c_x: &T, c_h: &T, h2: i64) -> Result<T, Error> {
        let bogo: T = self.disc_bogomolov()?;
        let r = int::<T>(self.r);
        let c_b = int::<T>(self.c) - beta.clone() * int::<T>(h2) * r.clone();
        Ok(bogo + c_x.clone() * r.clone() * r + c_h.clone() * c_b.clone() * c_b)
    }
}

impl<T: Scalar> TwistedChar<T> {
    /// The twisted combination `cB^2 - 2 H^2 r dB`; equal to the untwisted
    /// discriminant for every slice.
    pub fn disc_h(&self, h2: i64) -> T {
        let two = int::<T>(2);
        self.c_b.clone() * self.c_b.clone()
            - two * int::<T>(h2) * int::<T>(self.r) * self.d_b.clone()
    }
}

/// Sums add coordinate-wise. Self intersections do not add without the
/// cross pairing of the two `ch1` classes, so sums drop them.
impl Add for CharVector {
    type Output = CharVector;
    fn add(self, rhs: CharVector) -> CharVector {
        CharVector::new(self.r + rhs.r, self.c + rhs.c, self.two_d + rhs.two_d, None)
    }
}

impl Sub for CharVector {
    type Output = CharVector;
    fn sub(self, rhs: CharVector) -> CharVector {
        CharVector::new(self.r - rhs.r, self.c - rhs.c, self.two_d - rhs.two_d, None)
    }
}
