use num_traits::Zero;
use proptest::prelude::*;
use tiltwalls_core::koseki::{koseki_constant, KodairaClass, SurfaceData};
use tiltwalls_core::vanishing::{
    feasible_beta_region, make_certificate, verify_certificate, window_at_beta, Certificate,
};
use tiltwalls_core::{rat, Rat};

/// Minimal general type in characteristic 2 with K^2 = 1: the constant is
/// max(0, 7 - chi), so chi = 7 - c realizes every c in 0..=10 exactly.
fn surface_with_constant(c: i64, h2: i64) -> SurfaceData {
    let s = SurfaceData::new(
        "s".into(),
        2,
        KodairaClass::MinimalGeneralType,
        1,
        7 - c,
        h2,
        Rat::zero(),
    )
    .unwrap();
    assert_eq!(koseki_constant(&s).unwrap(), rat(c, 1));
    s
}

fn interior_beta() -> impl Strategy<Value = Rat> {
    (2i64..=40).prop_flat_map(|q| (1..q).prop_map(move |p| rat(p, q)))
}

proptest! {
    #[test]
    fn half_slice_window_matches_the_degree_threshold(c in 0i64..=10, h2 in 1i64..=100) {
        let s = surface_with_constant(c, h2);
        let w = window_at_beta(&s, &rat(1, 2)).unwrap();
        prop_assert_eq!(w.nonempty, h2 > 6 * c);
        prop_assert_eq!(make_certificate(&s, None).is_ok(), h2 > 6 * c);
    }

    #[test]
    fn characteristic_zero_always_certifies(h2 in 1i64..=200) {
        let cert = make_certificate(&SurfaceData::char_zero("x", h2), None).unwrap();
        prop_assert!(verify_certificate(&cert));
    }

    #[test]
    fn certificates_survive_serialization(c in 0i64..=10, slack in 1i64..=40) {
        let s = surface_with_constant(c, 6 * c + slack);
        let cert = make_certificate(&s, None).unwrap();
        prop_assert!(verify_certificate(&cert));
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(verify_certificate(&back));
    }

    #[test]
    fn witness_sits_strictly_inside_the_window(
        c in 0i64..=6,
        slack in 1i64..=30,
        beta in interior_beta(),
    ) {
        let h2 = 6 * c + slack;
        let s = surface_with_constant(c, h2);
        let w = window_at_beta(&s, &beta).unwrap();
        if w.nonempty {
            let cert = make_certificate(&s, Some(beta)).unwrap();
            let a2h2 = &cert.alpha2 * rat(h2, 1);
            prop_assert!(w.lo < a2h2 && a2h2 < w.hi);
            prop_assert!(verify_certificate(&cert));
        } else {
            prop_assert!(make_certificate(&s, Some(beta)).is_err());
        }
    }

    #[test]
    fn numeric_tampering_is_rejected(c in 0i64..=4, slack in 1i64..=20, pick in 0usize..5) {
        let h2 = 6 * c + slack;
        let s = surface_with_constant(c, h2);
        let mut cert = make_certificate(&s, None).unwrap();
        match pick {
            0 => cert.alpha2 = window_at_beta(&s, &cert.beta).unwrap().hi / rat(h2, 1),
            1 => cert.alpha2 = &cert.alpha2 + rat(1, 1),
            2 => cert.c = &cert.c + rat(1, 1),
            3 => cert.beta = rat(3, 2),
            _ => cert.checks[3].holds = !cert.checks[3].holds,
        }
        prop_assert!(!verify_certificate(&cert));
    }

    #[test]
    fn beta_grid_is_uniform_and_consistent(grid in 1u32..=24, c in 0i64..=3, slack in 1i64..=20) {
        let s = surface_with_constant(c, 6 * c + slack);
        let region = feasible_beta_region(&s, grid).unwrap();
        prop_assert_eq!(region.len(), grid as usize);
        for (i, (beta, window)) in region.iter().enumerate() {
            prop_assert_eq!(beta, &rat(i as i64 + 1, i64::from(grid) + 1));
            prop_assert_eq!(window, &window_at_beta(&s, beta).unwrap());
        }
    }
}
