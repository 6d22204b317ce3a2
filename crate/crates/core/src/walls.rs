//! Walls, the Gieseker-chamber bound, and brute-force destabilizer searches.
//!
//! Two classes have equal tilt slope along a locus that is linear in the
//! reparametrized height `s = C/H^2 + alpha^2`:
//!
//! ```text
//! k * s = q2 * beta^2 + q1 * beta + q0,      k = (H^2/2)(r_w c_v - r_v c_w)
//! ```
//!
//! In the `(beta, t)` plane with `t^2 = s` a nonempty locus with `k != 0` is
//! a semicircle centered on the beta-axis. Everything here is exact; the
//! enumeration reports candidates in a deterministic lexicographic order.

use crate::chern::CharVector;
use crate::error::Error;
use crate::ratstr::format_rat;
use crate::scalar::{int, Scalar};
use crate::Rat;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Shape of a wall locus within the half-plane `s > C/H^2`.
#[derive(Debug, Clone, PartialEq)]
pub enum WallClass<T> {
    /// Semicircle `(beta - center)^2 + t^2 = radius2` reaching above the floor.
    Circle { center_beta: T, radius2: T },
    /// Vertical line `beta = beta0` (classes of equal Mumford slope).
    VerticalLine { beta0: T },
    /// No point of the half-plane satisfies the equation.
    Empty,
    /// The equation is trivial: proportional classes agree everywhere.
    Everywhere,
}

/// Exact wall equation between two classes, with its classification.
#[derive(Debug, Clone, PartialEq)]
pub struct WallLocus<T> {
    pub k: T,
    pub q2: T,
    pub q1: T,
    pub q0: T,
    pub class: WallClass<T>,
}

/// A class passing every numerical requirement to destabilize `v` somewhere
/// on its wall.
#[derive(Debug, Clone, PartialEq)]
pub struct DestabilizerCandidate {
    pub a: CharVector,
    pub locus: WallLocus<Rat>,
    pub apex_alpha2: Rat,
}

/// Search limits for the destabilizer enumeration: `1 <= r' <= max_rank`,
/// `|c'| <= max_c`, `|2d'| <= max_two_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBounds {
    pub max_rank: i64,
    pub max_c: i64,
    pub max_two_d: i64,
}

impl ScanBounds {
    pub fn new(max_rank: i64, max_c: i64, max_two_d: i64) -> Self {
        ScanBounds { max_rank, max_c, max_two_d }
    }

    /// Number of classes the grid contains.
    pub fn count(&self) -> u128 {
        if self.max_rank < 1 || self.max_c < 0 || self.max_two_d < 0 {
            return 0;
        }
        (self.max_rank as u128)
            * (2 * self.max_c as u128 + 1)
            * (2 * self.max_two_d as u128 + 1)
    }
}

/// Open interval of slice parameters; `None` means unbounded on that side.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BetaWindow {
    pub lo: Option<Rat>,
    pub hi: Option<Rat>,
}

impl BetaWindow {
    pub fn unbounded() -> Self {
        BetaWindow::default()
    }

    pub fn open(lo: Rat, hi: Rat) -> Self {
        BetaWindow { lo: Some(lo), hi: Some(hi) }
    }
}

/// Default cap on the destabilizer search space.
pub const DEFAULT_SCAN_CAP: u64 = 10_000_000;

/// Exact wall equation between `v` and `w` over a surface with constant
/// `C >= 0` and degree `H^2 = h2`. Proportional classes give `Everywhere`;
/// a class with identically infinite slope admits no finite crossing.
pub fn wall_between<T: Scalar>(
    v: &CharVector,
    w: &CharVector,
    c_x: &T,
    h2: i64,
) -> Result<WallLocus<T>, Error> {
    if v.is_zero() || w.is_zero() {
        return Err(Error::DegenerateInput);
    }
    let h2t = int::<T>(h2);
    let (rv, cv, dv) = (int::<T>(v.r), int::<T>(v.c), v.d::<T>());
    let (rw, cw, dw) = (int::<T>(w.r), int::<T>(w.c), w.d::<T>());
    let k = h2t.clone() * (rw.clone() * cv.clone() - rv.clone() * cw.clone()) / int::<T>(2);
    let q2 = -k.clone();
    let q1 = h2t.clone() * (rw * dv.clone() - rv * dw.clone());
    let q0 = dw * cv - dv * cw;

    let zero = T::zero();
    let class = if k == zero {
        if q1 == zero {
            if q0 == zero {
                WallClass::Everywhere
            } else {
                WallClass::Empty
            }
        } else if (v.r == 0 && v.c == 0) || (w.r == 0 && w.c == 0) {
            // one slope is +infinity for every slice: no finite solution
            WallClass::Empty
        } else {
            WallClass::VerticalLine { beta0: -q0.clone() / q1.clone() }
        }
    } else {
        let center = q1.clone() / (int::<T>(2) * k.clone());
        let radius2 = center.clone() * center.clone() + q0.clone() / k.clone();
        if radius2 > c_x.clone() / h2t {
            WallClass::Circle { center_beta: center, radius2 }
        } else {
            WallClass::Empty
        }
    };
    Ok(WallLocus { k, q2, q1, q0, class })
}

/// Exact membership test for the wall equation at `(beta, alpha2)`.
pub fn on_wall<T: Scalar>(
    locus: &WallLocus<T>,
    beta: &T,
    alpha2: &T,
    c_x: &T,
    h2: i64,
) -> bool {
    let s = c_x.clone() / int::<T>(h2) + alpha2.clone();
    locus.k.clone() * s
        == locus.q2.clone() * beta.clone() * beta.clone()
            + locus.q1.clone() * beta.clone()
            + locus.q0.clone()
}

/// The alpha^2 threshold `mu_{B,H}(v) * disc_tilde(v) / H^2` above which `v`
/// sits in its Gieseker chamber. Requires positive rank and positive
/// twisted degree at the slice.
pub fn chamber_bound<T: Scalar>(
    v: &CharVector,
    beta: &T,
    c_x: &T,
    h2: i64,
) -> Result<T, Error> {
    if v.r <= 0 {
        return Err(Error::HypothesisViolated);
    }
    let h2t = int::<T>(h2);
    let r = int::<T>(v.r);
    let c_b = int::<T>(v.c) - beta.clone() * h2t.clone() * r.clone();
    if c_b <= T::zero() {
        return Err(Error::HypothesisViolated);
    }
    let mu = c_b / (h2t.clone() * r);
    Ok(mu * v.disc_tilde::<T>(c_x, h2) / h2t)
}

/// Chamber bound for a shifted class `E[1]` at slice `beta`: the bound of
/// the dual of the underlying class at `-beta`.
pub fn chamber_bound_shifted<T: Scalar>(
    v: &CharVector,
    beta: &T,
    c_x: &T,
    h2: i64,
) -> Result<T, Error> {
    let underlying = v.shift();
    chamber_bound(&underlying.dualize(), &-beta.clone(), c_x, h2)
}

/// All classes `a` within `bounds` that could destabilize `v` somewhere on
/// their wall inside `window`: the twisted degree and Mumford slope
/// sandwiches `0 < cB(a) < cB(v)`, `0 < mu(a) < mu(v)` hold at some wall
/// point, `disc_tilde(a) >= 0`, and (with `require_quotient_positive`)
/// `disc_tilde(v - a) >= 0`. Equal-slope classes never destabilize and are
/// excluded. Output is lexicographic in `(r', c', 2d')`.
pub fn enumerate_destabilizers(
    v: &CharVector,
    window: &BetaWindow,
    c_x: &Rat,
    h2: i64,
    bounds: &ScanBounds,
    require_quotient_positive: bool,
    cap: u64,
) -> Result<Vec<DestabilizerCandidate>, Error> {
    if v.r <= 0 {
        return Err(Error::HypothesisViolated);
    }
    let requested = bounds.count();
    if requested > cap as u128 {
        return Err(Error::BoundsTooLarge { requested, cap: cap as u128 });
    }

    let zero = Rat::zero();
    let floor = c_x / int::<Rat>(h2);
    let mut out = Vec::new();
    for r_a in 1..=bounds.max_rank {
        for c_a in -bounds.max_c..=bounds.max_c {
            // strict slope sandwich mu(a) < mu(v), i.e. c_a r_v < c_v r_a;
            // equality would be a radius-zero wall and never destabilizes
            if (c_a as i128) * (v.r as i128) >= (v.c as i128) * (r_a as i128) {
                continue;
            }
            // beta interval where both degree conditions can hold
            let mut lo = window.lo.clone();
            let mut hi = window.hi.clone();
            // cB(a) > 0 below the slope of a
            tighten_hi(&mut hi, Rat::new(c_a.into(), ((h2 as i128) * (r_a as i128)).into()));
            // cB(a) < cB(v) is linear in beta
            let dr = v.r - r_a;
            let dc = v.c - c_a;
            if dr == 0 {
                if dc <= 0 {
                    continue;
                }
            } else {
                let edge = Rat::new(dc.into(), ((h2 as i128) * (dr as i128)).into());
                if dr > 0 {
                    tighten_hi(&mut hi, edge);
                } else {
                    tighten_lo(&mut lo, edge);
                }
            }
            if let (Some(l), Some(h)) = (&lo, &hi) {
                if l >= h {
                    continue;
                }
            }
            for two_d_a in -bounds.max_two_d..=bounds.max_two_d {
                let a = CharVector::new(r_a, c_a, two_d_a, None);
                if a.disc_tilde::<Rat>(c_x, h2) < zero {
                    continue;
                }
                if require_quotient_positive && (*v - a).disc_tilde::<Rat>(c_x, h2) < zero {
                    continue;
                }
                let locus = wall_between(&a, v, c_x, h2)?;
                let (center, radius2) = match &locus.class {
                    WallClass::Circle { center_beta, radius2 } => (center_beta, radius2),
                    _ => continue,
                };
                let apex_alpha2 = radius2 - &floor;
                if !arc_meets_interval(&lo, &hi, center, &apex_alpha2) {
                    continue;
                }
                out.push(DestabilizerCandidate { a, locus, apex_alpha2 });
            }
        }
    }
    Ok(out)
}

fn tighten_lo(lo: &mut Option<Rat>, candidate: Rat) {
    match lo {
        Some(l) if *l >= candidate => {}
        _ => *lo = Some(candidate),
    }
}

fn tighten_hi(hi: &mut Option<Rat>, candidate: Rat) {
    match hi {
        Some(h) if *h <= candidate => {}
        _ => *hi = Some(candidate),
    }
}

/// Whether the open beta-extent of a circle of squared radius `rho2 > 0`
/// around `center` meets the open interval `(lo, hi)`. Exact: the
/// irrational endpoints are compared by squaring.
fn arc_meets_interval(lo: &Option<Rat>, hi: &Option<Rat>, center: &Rat, rho2: &Rat) -> bool {
    if let (Some(l), Some(h)) = (lo, hi) {
        if l >= h {
            return false;
        }
    }
    // lo < center + rho
    let left_ok = match lo {
        None => true,
        Some(l) => {
            l <= center || {
                let d = l - center;
                &d.clone() * &d < *rho2
            }
        }
    };
    // center - rho < hi
    let right_ok = match hi {
        None => true,
        Some(h) => {
            h >= center || {
                let d = center - h;
                &d.clone() * &d < *rho2
            }
        }
    };
    left_ok && right_ok
}

impl Serialize for WallLocus<Rat> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (class, center_beta, radius2) = match &self.class {
            WallClass::Circle { center_beta, radius2 } => {
                ("circle", Some(format_rat(center_beta)), Some(format_rat(radius2)))
            }
            WallClass::VerticalLine { beta0 } => ("vline", Some(format_rat(beta0)), None),
            WallClass::Empty => ("empty", None, None),
            WallClass::Everywhere => ("everywhere", None, None),
        };
        let mut st = serializer.serialize_struct("WallLocus", 7)?;
        st.serialize_field("k", &format_rat(&self.k))?;
        st.serialize_field("q2", &format_rat(&self.q2))?;
        st.serialize_field("q1", &format_rat(&self.q1))?;
        st.serialize_field("q0", &format_rat(&self.q0))?;
        st.serialize_field("class", class)?;
        st.serialize_field("center_beta", &center_beta)?;
        st.serialize_field("radius2", &radius2)?;
        st.end()
    }
}

impl Serialize for DestabilizerCandidate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DestabilizerCandidate", 3)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("locus", &self.locus)?;
        st.serialize_field("apex_alpha2", &format_rat(&self.apex_alpha2))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rat};
    use num_traits::Zero;

    fn ch(r: i64, c: i64, two_d: i64) -> CharVector {
        CharVector::new(r, c, two_d, None)
    }

    fn zero() -> Rat {
        Rat::zero()
    }

    #[test]
    fn wall_of_polarization_against_shifted_structure_sheaf() {
        let h = CharVector::line_bundle(1, 2);
        let o1 = CharVector::line_bundle(0, 2).shift();
        let wall = wall_between::<Rat>(&h, &o1, &zero(), 2).unwrap();
        assert_eq!(wall.k, rat(-2, 1));
        assert_eq!(wall.q2, rat(2, 1));
        assert_eq!(wall.q1, rat(-2, 1));
        assert_eq!(wall.q0, rat(0, 1));
        assert_eq!(
            wall.class,
            WallClass::Circle { center_beta: rat(1, 2), radius2: rat(1, 4) }
        );
    }

    #[test]
    fn proportional_classes_share_every_point() {
        let v = ch(1, 2, 2);
        let w = ch(2, 4, 4);
        let wall = wall_between::<Rat>(&v, &w, &zero(), 2).unwrap();
        assert_eq!(wall.class, WallClass::Everywhere);
        assert!(on_wall(&wall, &rat(7, 3), &rat(5, 9), &zero(), 2));
    }

    #[test]
    fn point_class_never_crosses_finitely() {
        // (r, c, d) = (1, 0, 0) against the point class (0, 0, 1)
        let wall = wall_between::<Rat>(&ch(1, 0, 0), &ch(0, 0, 2), &zero(), 1).unwrap();
        assert_eq!(wall.class, WallClass::Empty);
    }

    #[test]
    fn equal_slope_pair_gives_the_vertical_wall() {
        // O against an ideal sheaf of a point: both Mumford slope 0
        let wall = wall_between::<Rat>(&ch(1, 0, 0), &ch(1, 0, -2), &zero(), 1).unwrap();
        assert_eq!(wall.class, WallClass::VerticalLine { beta0: rat(0, 1) });
    }

    #[test]
    fn circle_below_the_floor_is_empty() {
        // same pair as the polarization wall, but C so large the circle
        // never reaches s > C/H^2 (radius2 = 1/4 vs floor = 1/2)
        let h = CharVector::line_bundle(1, 2);
        let o1 = CharVector::line_bundle(0, 2).shift();
        let wall = wall_between::<Rat>(&h, &o1, &rat(1, 1), 2).unwrap();
        assert_eq!(wall.class, WallClass::Empty);
        assert_eq!(wall.k, rat(-2, 1));
    }

    #[test]
    fn zero_class_is_degenerate() {
        let z = ch(0, 0, 0);
        assert_eq!(
            wall_between::<Rat>(&z, &ch(1, 0, 0), &zero(), 1),
            Err(Error::DegenerateInput)
        );
        assert_eq!(
            wall_between::<Rat>(&ch(1, 0, 0), &z, &zero(), 1),
            Err(Error::DegenerateInput)
        );
    }

    #[test]
    fn k_is_antisymmetric() {
        let v = ch(2, -3, 5);
        let w = ch(1, 4, -1);
        let vw = wall_between::<Rat>(&v, &w, &rat(1, 3), 2).unwrap();
        let wv = wall_between::<Rat>(&w, &v, &rat(1, 3), 2).unwrap();
        assert_eq!(vw.k, -wv.k.clone());
        assert_eq!(vw.class, wv.class);
    }

    #[test]
    fn membership_on_the_unit_wall() {
        let h = CharVector::line_bundle(1, 2);
        let o1 = CharVector::line_bundle(0, 2).shift();
        let wall = wall_between::<Rat>(&h, &o1, &zero(), 2).unwrap();
        // s = beta(1 - beta): apex point and an off point
        assert!(on_wall(&wall, &rat(1, 2), &rat(1, 4), &zero(), 2));
        assert!(!on_wall(&wall, &rat(1, 2), &rat(1, 8), &zero(), 2));
    }

    #[test]
    fn chamber_bound_of_the_polarization() {
        let h = CharVector::line_bundle(1, 38);
        let bound = chamber_bound::<Rat>(&h, &rat(1, 2), &rat(6, 1), 38).unwrap();
        assert_eq!(bound, rat(3, 38)); // (1 - beta) C / H^2
        let h0 = CharVector::line_bundle(1, 2);
        assert_eq!(chamber_bound::<Rat>(&h0, &rat(1, 3), &zero(), 2).unwrap(), zero());
    }

    #[test]
    fn chamber_bound_worked_value() {
        let v = ch(2, 1, 0);
        assert_eq!(chamber_bound::<Rat>(&v, &zero(), &zero(), 1).unwrap(), rat(1, 2));
    }

    #[test]
    fn chamber_bound_hypotheses() {
        assert_eq!(
            chamber_bound::<Rat>(&ch(0, 1, 0), &zero(), &zero(), 1),
            Err(Error::HypothesisViolated)
        );
        assert_eq!(
            chamber_bound::<Rat>(&ch(-1, 1, 0), &zero(), &zero(), 1),
            Err(Error::HypothesisViolated)
        );
        // twisted degree vanishes at beta = mu
        assert_eq!(
            chamber_bound::<Rat>(&ch(1, 0, 0), &zero(), &zero(), 1),
            Err(Error::HypothesisViolated)
        );
    }

    #[test]
    fn shifted_chamber_bound() {
        let o1 = CharVector::line_bundle(0, 38).shift();
        let bound = chamber_bound_shifted::<Rat>(&o1, &rat(1, 2), &rat(6, 1), 38).unwrap();
        assert_eq!(bound, rat(3, 38)); // beta C / H^2
        let o1c0 = CharVector::line_bundle(0, 2).shift();
        assert_eq!(
            chamber_bound_shifted::<Rat>(&o1c0, &rat(1, 2), &zero(), 2).unwrap(),
            zero()
        );
    }

    #[test]
    fn line_bundles_admit_no_candidates_without_correction() {
        let h = CharVector::line_bundle(1, 2);
        let found = enumerate_destabilizers(
            &h,
            &BetaWindow::unbounded(),
            &zero(),
            2,
            &ScanBounds::new(3, 6, 8),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn ideal_sheaf_candidates_within_small_bounds() {
        // (r, c, d) = (1, 0, -1)
        let v = ch(1, 0, -2);
        let found = enumerate_destabilizers(
            &v,
            &BetaWindow::unbounded(),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        let classes: Vec<CharVector> = found.iter().map(|c| c.a).collect();
        assert_eq!(classes, vec![ch(1, -1, 1), ch(2, -2, 2)]);
        for cand in &found {
            assert_eq!(
                cand.locus.class,
                WallClass::Circle { center_beta: rat(-3, 2), radius2: rat(1, 4) }
            );
            assert_eq!(cand.apex_alpha2, rat(1, 4));
        }
        // a class of equal Mumford slope never appears
        assert!(!classes.contains(&ch(1, 0, 0)));
    }

    #[test]
    fn quotient_filter_is_the_only_difference() {
        let v = ch(1, 0, -2);
        let strict = enumerate_destabilizers(
            &v,
            &BetaWindow::unbounded(),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        let loose = enumerate_destabilizers(
            &v,
            &BetaWindow::unbounded(),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            false,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        let strict_classes: Vec<CharVector> = strict.iter().map(|c| c.a).collect();
        let loose_classes: Vec<CharVector> = loose.iter().map(|c| c.a).collect();
        assert_eq!(loose_classes, vec![ch(1, -1, 1), ch(2, -2, 2), ch(2, -1, 0)]);
        for cand in strict_classes {
            assert!(loose_classes.contains(&cand));
        }
    }

    #[test]
    fn window_restricts_candidates() {
        let v = ch(1, 0, -2);
        // the only wall arc lives over beta in (-2, -1)
        let found = enumerate_destabilizers(
            &v,
            &BetaWindow::open(rat(-1, 1), rat(1, 1)),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        assert!(found.is_empty());
        let found = enumerate_destabilizers(
            &v,
            &BetaWindow::open(rat(-3, 1), rat(-1, 1)),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn oracle_instance_respects_the_chamber_bound() {
        let v = ch(2, 1, 0);
        let found = enumerate_destabilizers(
            &v,
            &BetaWindow::open(rat(-1, 1), rat(1, 1)),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        let bound = chamber_bound::<Rat>(&v, &zero(), &zero(), 1).unwrap();
        for cand in &found {
            assert!(cand.apex_alpha2 <= bound);
        }
    }

    #[test]
    fn cap_refuses_oversized_searches() {
        let v = ch(1, 0, -2);
        let err = enumerate_destabilizers(
            &v,
            &BetaWindow::unbounded(),
            &zero(),
            1,
            &ScanBounds::new(100, 100, 100),
            true,
            1000,
        );
        assert!(matches!(err, Err(Error::BoundsTooLarge { .. })));
    }

    #[test]
    fn enumeration_requires_positive_rank() {
        let err = enumerate_destabilizers(
            &ch(0, 1, 0),
            &BetaWindow::unbounded(),
            &zero(),
            1,
            &ScanBounds::new(1, 1, 1),
            true,
            DEFAULT_SCAN_CAP,
        );
        assert_eq!(err, Err(Error::HypothesisViolated));
    }

    #[test]
    fn enumeration_is_deterministic_and_sorted() {
        let v = ch(2, 1, -2);
        let run = || {
            enumerate_destabilizers(
                &v,
                &BetaWindow::unbounded(),
                &rat(1, 1),
                1,
                &ScanBounds::new(4, 4, 8),
                true,
                DEFAULT_SCAN_CAP,
            )
            .unwrap()
        };
        let first = run();
        let second = run();
        assert_eq!(first, second);
        let keys: Vec<(i64, i64, i64)> = first.iter().map(|c| (c.a.r, c.a.c, c.a.two_d)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn candidates_sit_on_their_walls() {
        use crate::stability::TiltPoint;
        let v = ch(1, 0, -2);
        let found = enumerate_destabilizers(
            &v,
            &BetaWindow::unbounded(),
            &zero(),
            1,
            &ScanBounds::new(2, 2, 4),
            true,
            DEFAULT_SCAN_CAP,
        )
        .unwrap();
        assert!(!found.is_empty());
        for cand in &found {
            let (center, radius2) = match &cand.locus.class {
                WallClass::Circle { center_beta, radius2 } => (center_beta, radius2),
                other => panic!("candidate wall should be a circle, got {other:?}"),
            };
            // rational points on the circle: pick beta, solve for s
            for i in 1..=10 {
                let beta = center + rat(i, 23) * rat(1, 4);
                let off = &beta - center;
                let s = radius2 - &off.clone() * &off;
                if s <= Rat::zero() {
                    continue;
                }
                let p = TiltPoint::new(beta.clone(), s.clone(), zero(), 1).unwrap();
                assert_eq!(p.nu_slope(&cand.a), p.nu_slope(&v));
                assert!(on_wall(&cand.locus, &beta, &s, &zero(), 1));
            }
        }
    }

    #[test]
    fn locus_json_shapes() {
        let h = CharVector::line_bundle(1, 2);
        let o1 = CharVector::line_bundle(0, 2).shift();
        let wall = wall_between::<Rat>(&h, &o1, &zero(), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&wall).unwrap(),
            r#"{"k":"-2","q2":"2","q1":"-2","q0":"0","class":"circle","center_beta":"1/2","radius2":"1/4"}"#
        );
        let vline = wall_between::<Rat>(&ch(1, 0, 0), &ch(1, 0, -2), &zero(), 1).unwrap();
        assert_eq!(
            serde_json::to_string(&vline).unwrap(),
            r#"{"k":"0","q2":"0","q1":"1","q0":"0","class":"vline","center_beta":"0","radius2":null}"#
        );
    }
}
