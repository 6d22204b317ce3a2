//! String codec for exact rationals.
//!
//! The interchange format is `"p/q"` in lowest terms with positive
//! denominator, shortened to `"p"` when the denominator is one. Serde
//! helpers are provided for struct fields holding [`Rat`] values.

use crate::{Error, Rat};
use num_bigint::BigInt;

/// Formats a rational in the interchange form (`"3/4"`, `"-1/2"`, `"6"`).
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::ParseRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if denom == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// Serde adapter serializing a [`Rat`] field through the string codec.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rat(&raw).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for optional [`Rat`] fields (`null` when absent).
pub mod serde_rat_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rat(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        let raw = Option::<String>::deserialize(d)?;
        raw.map(|s| parse_rat(&s).map_err(serde::de::Error::custom)).transpose()
    }
}
