mod common;

use epl_core::incidence::io::{rational_point_file, rational_points, LinesFile};
use epl_core::incidence::{
    betweenness_check, build_segment_drawing, count_incidences, dualizable_part,
    dualize_configuration, dualize_line, dualize_point, find_translation, propeller_census,
    st_bound_check, translate, PropellerConfig, RationalLine, RationalPoint,
};
use epl_core::Rational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = RationalPoint<Rational>> {
    (rational(), rational()).prop_map(|(x, y)| RationalPoint::new(x, y))
}

fn line() -> impl Strategy<Value = RationalLine<Rational>> {
    (rational(), rational(), rational())
        .prop_filter_map("a = b = 0", |(a, b, c)| RationalLine::new(a, b, c).ok())
}

/// Small grid points with lines through pairs of them, so incidences are
/// plentiful.
fn configuration() -> impl Strategy<Value = (Vec<RationalPoint<Rational>>, Vec<RationalLine<Rational>>)> {
    (
        prop::collection::btree_set((-3i64..=3, -3i64..=3), 2..16),
        prop::collection::vec((0usize..16, 0usize..16), 1..14),
    )
        .prop_map(|(pts, picks)| {
            let points: Vec<RationalPoint<Rational>> =
                pts.into_iter().map(|(x, y)| RationalPoint::from_ints(x, y)).collect();
            let n = points.len();
            let mut lines: Vec<RationalLine<Rational>> = Vec::new();
            for (i, j) in picks {
                if let Ok(l) = RationalLine::through(&points[i % n], &points[j % n]) {
                    if !lines.contains(&l) {
                        lines.push(l);
                    }
                }
            }
            (points, lines)
        })
        .prop_filter("need a line", |(_, l)| !l.is_empty())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn duality_is_an_involution(p in point(), l in line()) {
        if p.is_origin() {
            prop_assert!(dualize_point(&p).is_err());
        } else {
            prop_assert_eq!(dualize_line(&dualize_point(&p).unwrap()).unwrap(), p);
        }
        if l.through_origin() {
            prop_assert!(dualize_line(&l).is_err());
        } else {
            prop_assert_eq!(dualize_point(&dualize_line(&l).unwrap()).unwrap(), l);
        }
    }

    #[test]
    fn duality_preserves_incidence(p in point(), l in line()) {
        prop_assume!(!p.is_origin() && !l.through_origin());
        let (lp, ql) = (dualize_point(&p).unwrap(), dualize_line(&l).unwrap());
        prop_assert_eq!(l.contains(&p), lp.contains(&ql));
    }

    #[test]
    fn incidences_match_the_pair_scan((points, lines) in configuration()) {
        let expected = common::incidence_count(&points, &lines);
        let s = count_incidences(points, lines);
        prop_assert_eq!(s.incidences(), expected);
        prop_assert!(st_bound_check(&s).holds);
        let d = build_segment_drawing(&s).unwrap();
        prop_assert_eq!(d.total(), common::segment_crossings(&s));
    }

    #[test]
    fn translation_then_duality_keeps_the_count((points, lines) in configuration()) {
        let before = count_incidences(points.clone(), lines.clone()).incidences();
        let t = find_translation(&points, &lines);
        let (points, lines) = translate(&points, &lines, &t);
        let (kept_p, kept_l, filter) = dualizable_part(&points, &lines);
        prop_assert!(filter.dropped_points.is_empty() && filter.dropped_lines.is_empty());
        let s = count_incidences(kept_p, kept_l);
        prop_assert_eq!(s.incidences(), before);
        let d = dualize_configuration(&s).unwrap();
        prop_assert_eq!(d.incidences(), before);
    }

    #[test]
    fn betweenness_readings_agree(p in point(), k1 in rational(), k2 in rational(), p1 in point()) {
        prop_assume!(!p.is_origin() && k1 != k2);
        // points of l(p): x . p = 1, parametrised along the direction (-p.y, p.x)
        let n2 = p.dot(&p);
        let on = |k: &Rational| RationalPoint::new(
            p.x.clone() / n2.clone() - k.clone() * p.y.clone(),
            p.y.clone() / n2.clone() + k.clone() * p.x.clone(),
        );
        let (q, q2) = (on(&k1), on(&k2));
        match betweenness_check(&p, &q, &q2, &p1) {
            Ok(b) => prop_assert_eq!(b.crosses_between, b.lies_between),
            Err(_) => {
                let one = Rational::from_integer(1.into());
                prop_assert!(p1.is_origin() || p1.dot(&q) == one || p1.dot(&q2) == one);
            }
        }
    }

    #[test]
    fn propeller_census_matches_the_recount((points, lines) in configuration(), t in 2usize..4) {
        let t0 = find_translation(&points, &lines);
        let (points, lines) = translate(&points, &lines, &t0);
        let s = count_incidences(points, lines);
        let census = propeller_census(&s, PropellerConfig { t, lo: 1, hi: None }).unwrap();
        let recount = common::propeller_recount(&s, t);
        prop_assert_eq!(census.entries.len(), recount.len());
        for (e, (p, all, heavy, degenerate)) in census.entries.iter().zip(recount) {
            prop_assert_eq!(e.point, p);
            prop_assert_eq!(e.degenerate, degenerate);
            // the two orderings of the propeller may run in opposite directions
            let (mut rall, mut rheavy) = (all.clone(), heavy.clone());
            rall.reverse();
            rheavy.reverse();
            prop_assert!(
                (e.between_all == all && e.between_heavy == heavy)
                    || (e.between_all == rall && e.between_heavy == rheavy),
                "{:?} vs {:?}", e, (all, heavy)
            );
            prop_assert_eq!(e.qualifying_all, e.between_all.iter().filter(|&&c| c >= 1).count());
        }
    }

    #[test]
    fn rational_files_round_trip(points in prop::collection::vec(point(), 0..20), lines in prop::collection::vec(line(), 0..20)) {
        let file = rational_point_file(&points).unwrap();
        prop_assert_eq!(rational_points::<Rational>(&file).unwrap(), points);
        let lf = LinesFile::from_lines(&lines).unwrap();
        let back = LinesFile::parse(&lf.to_json()).unwrap();
        prop_assert_eq!(back.to_lines::<Rational>().unwrap(), lines);
    }
}
