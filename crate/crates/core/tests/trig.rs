use std::f64::consts::{FRAC_PI_2, PI};

use epl_core::trig::{chord, chord_bounds_check, curvtri_eval, thirdarc_classify, CurvTriInstance, Regime, C_X, C_Y};
use proptest::prelude::*;

/// Positive parameters up to `pi / 100`.
fn small() -> impl Strategy<Value = f64> {
    (1e-6f64..=1.0).prop_map(|u| u * PI / 100.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn chord_lies_between_its_bounds(theta in 1e-6f64..FRAC_PI_2 - 1e-6) {
        let b = chord_bounds_check(theta).unwrap();
        prop_assert!(b.holds, "{:?}", b);
        let direct = (2.0 - 2.0 * theta.cos()).sqrt();
        prop_assert!((b.value - direct).abs() <= 1e-12);
    }

    #[test]
    fn chord_is_symmetric(theta in -PI..PI) {
        prop_assert_eq!(chord(theta), chord(-theta));
    }

    #[test]
    fn distance_matches_the_coordinates(alpha in small(), beta in small(), theta in small()) {
        let e = curvtri_eval(CurvTriInstance::new(alpha, beta, theta));
        let naive = (e.a[0] - e.c[0]).hypot(e.a[1] - e.c[1]);
        prop_assert!((e.exact - naive).abs() <= 1e-14, "{} vs {}", e.exact, naive);
        prop_assert!((e.x.hypot(e.y) - e.exact).abs() <= 1e-18);
    }

    #[test]
    fn components_stay_within_the_frozen_constants(alpha in small(), beta in small(), theta in small()) {
        let i = CurvTriInstance::new(alpha, beta, theta);
        let e = curvtri_eval(i);
        let s = i.size();
        let main_x = (alpha * alpha - 2.0 * alpha * theta - beta * beta).abs() / 2.0;
        prop_assert!((e.x - main_x).abs() <= C_X * s.powi(4));
        prop_assert!((e.y - (alpha - beta).abs()).abs() <= C_Y * s.powi(3));
    }

    #[test]
    fn regime_follows_the_larger_term(alpha in small(), beta in small(), theta in small()) {
        let t = thirdarc_classify(CurvTriInstance::new(alpha, beta, theta));
        let (diff, sweep) = ((alpha - beta).abs(), alpha * theta);
        prop_assert_eq!(t.value, diff.max(sweep));
        prop_assert_eq!(t.regime == Regime::Difference, diff > sweep);
        prop_assert_eq!(t.error, (t.exact - t.value).abs());
    }

    #[test]
    fn single_precision_tracks_double(alpha in small(), beta in small(), theta in small()) {
        let i = CurvTriInstance::new(alpha, beta, theta);
        let d = curvtri_eval(i).exact;
        let s = curvtri_eval(CurvTriInstance::new(alpha as f32, beta as f32, theta as f32)).exact;
        // rounding the inputs alone moves the result by about eps_f32 x size
        prop_assert!((s as f64 - d).abs() <= 1e-6 * i.size());
    }
}
