//! Feasibility windows and vanishing certificates.
//!
//! For a polarized surface with correction constant `C`, a slice `beta` and
//! a height `alpha^2` prove `H^1(H (x) K_X) = 0` as soon as the polarization
//! class and the shifted structure sheaf are both stable there with the
//! right slope ordering. All three constraints are linear in `alpha^2 H^2`,
//! cutting out an interval; its exact midpoint is the witness.

use crate::chern::CharVector;
use crate::error::Error;
use crate::koseki::{koseki_constant, SurfaceData};
use crate::ratstr::serde_rat;
use crate::scalar::int;
use crate::stability::{hom_vanishing, mu_twisted, ExtendedSlope, TiltPoint};
use crate::walls::{chamber_bound, chamber_bound_shifted};
use crate::{rat, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Conclusion stamped on every complete certificate.
pub const CONCLUSION: &str = "H^1(H (x) K_X) = 0";

/// Interval of admissible `alpha^2 H^2` values at a fixed slice: above both
/// stability thresholds, below the slope-ordering bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityWindow {
    #[serde(with = "serde_rat")]
    pub beta: Rat,
    #[serde(with = "serde_rat")]
    pub lo: Rat,
    #[serde(with = "serde_rat")]
    pub hi: Rat,
    pub nonempty: bool,
}

/// Direction of a recorded inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckRelation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = ">")]
    Greater,
}

impl CheckRelation {
    fn eval(self, lhs: &Rat, rhs: &Rat) -> bool {
        match self {
            CheckRelation::Less => lhs < rhs,
            CheckRelation::Greater => lhs > rhs,
        }
    }
}

/// One recorded inequality of a certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(with = "serde_rat")]
    pub lhs: Rat,
    pub rel: CheckRelation,
    #[serde(with = "serde_rat")]
    pub rhs: Rat,
    pub holds: bool,
}

impl Check {
    fn new(name: &str, lhs: Rat, rel: CheckRelation, rhs: Rat) -> Self {
        let holds = rel.eval(&lhs, &rhs);
        Check { name: name.to_string(), lhs, rel, rhs, holds }
    }
}

/// Exact, machine-checkable witness for the vanishing conclusion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub surface: SurfaceData,
    #[serde(rename = "C", with = "serde_rat")]
    pub c: Rat,
    #[serde(with = "serde_rat")]
    pub beta: Rat,
    #[serde(with = "serde_rat")]
    pub alpha2: Rat,
    pub checks: Vec<Check>,
    pub conclusion: String,
}

/// The feasibility window at a slice `0 < beta < 1`:
/// `lo = max((1-beta)C, beta C)`, `hi = beta(1-beta)H^2 - C`, both bounds on
/// `alpha^2 H^2`; nonempty exactly when `lo < hi`.
pub fn window_at_beta(s: &SurfaceData, beta: &Rat) -> Result<FeasibilityWindow, Error> {
    let zero = Rat::zero();
    let one = Rat::one();
    if *beta <= zero || *beta >= one {
        return Err(Error::BetaOutOfRange);
    }
    let c = koseki_constant(s)?;
    let co_beta = &one - beta;
    let lo = std::cmp::max(&co_beta * &c, beta * &c);
    let hi = beta * &co_beta * int::<Rat>(s.h2) - &c;
    let nonempty = lo < hi;
    Ok(FeasibilityWindow { beta: beta.clone(), lo, hi, nonempty })
}

fn finite(slope: ExtendedSlope<Rat>) -> Rat {
    match slope {
        ExtendedSlope::Finite(m) => m,
        ExtendedSlope::Infinite => unreachable!("positive-rank class has finite slope"),
    }
}

/// The six inequalities, recomputed from nothing but `(C, H^2, beta, alpha^2)`.
/// The stability thresholds come from the walls module so certificates and
/// chamber bounds can never drift apart.
fn build_checks(c_x: &Rat, h2: i64, beta: &Rat, alpha2: &Rat) -> Result<Vec<Check>, Error> {
    use CheckRelation::{Greater, Less};
    let zero = Rat::zero;
    let one = Rat::one();
    let h2r = int::<Rat>(h2);
    let h = CharVector::line_bundle(1, h2);
    let o = CharVector::line_bundle(0, h2);
    let a2h2 = alpha2 * &h2r;
    let stable_h = chamber_bound(&h, beta, c_x, h2)? * &h2r;
    let stable_o1 = chamber_bound_shifted(&o.shift(), beta, c_x, h2)? * &h2r;
    Ok(vec![
        Check::new("beta_in_range", beta * &(&one - beta), Greater, zero()),
        Check::new("heart_H", finite(mu_twisted(&h, beta, h2)), Greater, zero()),
        Check::new("heart_O", finite(mu_twisted(&o, beta, h2)), Less, zero()),
        Check::new("stable_H", a2h2.clone(), Greater, stable_h),
        Check::new("stable_O_shift", a2h2, Greater, stable_o1),
        Check::new("slope_order", c_x / &h2r + alpha2, Less, beta * &(&one - beta)),
    ])
}

/// Builds a certificate at `beta` (default `1/2`), taking `alpha^2` as the
/// exact midpoint of the feasibility window. Fails with the window attached
/// when the window is empty, i.e. when the hypothesis fails at this slice.
pub fn make_certificate(s: &SurfaceData, beta: Option<Rat>) -> Result<Certificate, Error> {
    let beta = beta.unwrap_or_else(|| rat(1, 2));
    let window = window_at_beta(s, &beta)?;
    if !window.nonempty {
        return Err(Error::NoCertificate(window));
    }
    let c = koseki_constant(s)?;
    let alpha2 = (&window.lo + &window.hi) / (int::<Rat>(2) * int::<Rat>(s.h2));
    let checks = build_checks(&c, s.h2, &beta, &alpha2)?;
    debug_assert!(checks.iter().all(|ch| ch.holds));
    Ok(Certificate {
        surface: s.clone(),
        c,
        beta,
        alpha2,
        checks,
        conclusion: CONCLUSION.to_string(),
    })
}

/// Independent audit of a certificate. Recomputes the constant from the
/// surface, rebuilds all six checks from scratch, and confirms the strict
/// tilt-slope inequality between the polarization and the shifted structure
/// sheaf directly. Stored values are compared, never trusted.
pub fn verify_certificate(cert: &Certificate) -> bool {
    verify_inner(cert).unwrap_or(false)
}

fn verify_inner(cert: &Certificate) -> Result<bool, Error> {
    let zero = Rat::zero();
    let one = Rat::one();
    let c = koseki_constant(&cert.surface)?;
    if c != cert.c {
        return Ok(false);
    }
    if cert.beta <= zero || cert.beta >= one || cert.alpha2 <= zero {
        return Ok(false);
    }
    let expected = build_checks(&c, cert.surface.h2, &cert.beta, &cert.alpha2)?;
    if cert.checks != expected || !expected.iter().all(|ch| ch.holds) {
        return Ok(false);
    }
    let point = TiltPoint::new(cert.beta.clone(), cert.alpha2.clone(), c, cert.surface.h2)?;
    let h = CharVector::line_bundle(1, cert.surface.h2);
    let o1 = CharVector::line_bundle(0, cert.surface.h2).shift();
    if !hom_vanishing(&point.nu_slope(&h), &point.nu_slope(&o1)) {
        return Ok(false);
    }
    Ok(cert.conclusion == CONCLUSION)
}

/// Windows across the uniform grid `beta = i/(grid+1)`, `i = 1..=grid`.
pub fn feasible_beta_region(
    s: &SurfaceData,
    grid: u32,
) -> Result<Vec<(Rat, FeasibilityWindow)>, Error> {
    let mut out = Vec::with_capacity(grid as usize);
    for i in 1..=i64::from(grid) {
        let beta = Rat::new(i.into(), (i64::from(grid) + 1).into());
        let window = window_at_beta(s, &beta)?;
        out.push((beta, window));
    }
    Ok(out)
}
