//! Surface input data and the positive-characteristic correction constant.
//!
//! In characteristic zero the constant is zero and tilt stability needs no
//! correction. In characteristic p > 0 the failure of vanishing theorems is
//! repaired by a constant depending only on coarse numerical invariants of
//! the surface, and only two classes of surfaces contribute.

use crate::error::Error;
use crate::ratstr::serde_rat;
use crate::Rat;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Coarse classification of the surface, as far as the correction constant
/// is concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KodairaClass {
    /// Minimal surface of general type.
    #[serde(rename = "minimal_general_type")]
    MinimalGeneralType,
    /// Quasi-elliptic surface of Kodaira dimension one.
    #[serde(rename = "quasi_elliptic_kodaira_1")]
    QuasiEllipticKodaira1,
    /// Anything else; contributes no correction.
    #[serde(rename = "other")]
    Other,
}

/// Numerical invariants of a polarized surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSurfaceData")]
pub struct SurfaceData {
    pub name: String,
    #[serde(rename = "characteristic")]
    pub char_p: u64,
    pub kodaira_class: KodairaClass,
    #[serde(rename = "K2")]
    pub k2: i64,
    #[serde(rename = "chi_O")]
    pub chi_o: i64,
    #[serde(rename = "H2")]
    pub h2: i64,
    /// Picard-rank correction weight; zero on Picard rank one.
    #[serde(rename = "C_H", with = "serde_rat")]
    pub c_h: Rat,
}

#[derive(Deserialize)]
struct RawSurfaceData {
    name: String,
    characteristic: u64,
    kodaira_class: KodairaClass,
    #[serde(rename = "K2")]
    k2: i64,
    #[serde(rename = "chi_O")]
    chi_o: i64,
    #[serde(rename = "H2")]
    h2: i64,
    #[serde(rename = "C_H", with = "serde_rat", default = "Rat::zero")]
    c_h: Rat,
}

impl TryFrom<RawSurfaceData> for SurfaceData {
    type Error = Error;
    fn try_from(raw: RawSurfaceData) -> Result<Self, Error> {
        SurfaceData::new(
            raw.name,
            raw.characteristic,
            raw.kodaira_class,
            raw.k2,
            raw.chi_o,
            raw.h2,
            raw.c_h,
        )
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl SurfaceData {
    pub fn new(
        name: String,
        char_p: u64,
        kodaira_class: KodairaClass,
        k2: i64,
        chi_o: i64,
        h2: i64,
        c_h: Rat,
    ) -> Result<Self, Error> {
        if char_p != 0 && !is_prime(char_p) {
            return Err(Error::InvalidParameter(format!(
                "characteristic {char_p} is neither 0 nor prime"
            )));
        }
        if h2 < 1 {
            return Err(Error::InvalidParameter("H^2 must be at least 1".into()));
        }
        if c_h < Rat::zero() {
            return Err(Error::InvalidParameter("C_H must be nonnegative".into()));
        }
        Ok(SurfaceData { name, char_p, kodaira_class, k2, chi_o, h2, c_h })
    }

    /// Characteristic-zero surface of degree `h2`, for quick construction.
    pub fn char_zero(name: &str, h2: i64) -> Self {
        SurfaceData::new(name.into(), 0, KodairaClass::Other, 0, 1, h2, Rat::zero())
            .expect("valid surface")
    }
}

/// The correction constant of the surface.
///
/// Zero in characteristic zero. In characteristic p it is
/// `max(0, 2 + 5 K^2 - chi)` on minimal surfaces of general type and
/// `max(0, 2 - chi)` on quasi-elliptic surfaces of Kodaira dimension one;
/// every other surface needs no correction. Quasi-elliptic fibrations do
/// not exist in characteristic zero, so that combination is rejected.
pub fn koseki_constant(s: &SurfaceData) -> Result<Rat, Error> {
    let from_int = |n: i64| Rat::from_integer(n.max(0).into());
    if s.char_p == 0 {
        return match s.kodaira_class {
            KodairaClass::QuasiEllipticKodaira1 => Err(Error::InvalidSurface(
                "quasi-elliptic surfaces exist only in positive characteristic".into(),
            )),
            _ => Ok(Rat::zero()),
        };
    }
    Ok(match s.kodaira_class {
        KodairaClass::MinimalGeneralType => from_int(2 + 5 * s.k2 - s.chi_o),
        KodairaClass::QuasiEllipticKodaira1 => from_int(2 - s.chi_o),
        KodairaClass::Other => Rat::zero(),
    })
}
