use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::structure::{count_incidences, IncidenceStructure};
use crate::incidence::types::{RationalLine, RationalPoint};
use crate::scalar::ExactScalar;

/// `l(p)`: the points with dot product 1 with `p`.
pub fn dualize_point<Q: ExactScalar>(p: &RationalPoint<Q>) -> Result<RationalLine<Q>> {
    if p.is_origin() {
        return Err(Error::NotDualizable("the origin has no dual line".into()));
    }
    RationalLine::new(p.x.clone(), p.y.clone(), Q::one())
}

/// `p(l)`: the point with dot product 1 with every point of `l`.
pub fn dualize_line<Q: ExactScalar>(l: &RationalLine<Q>) -> Result<RationalPoint<Q>> {
    if l.through_origin() {
        return Err(Error::NotDualizable("a line through the origin has no dual point".into()));
    }
    let (a, b, c) = l.coefficients();
    Ok(RationalPoint::new(a.clone() / c.clone(), b.clone() / c.clone()))
}

/// Dual configuration: the dual points of the lines and the dual lines of
/// the points, with incidences recounted.
pub fn dualize_configuration<Q: ExactScalar>(s: &IncidenceStructure<Q>) -> Result<IncidenceStructure<Q>> {
    let bad_points: Vec<usize> = (0..s.points.len()).filter(|&i| s.points[i].is_origin()).collect();
    let bad_lines: Vec<usize> = (0..s.lines.len()).filter(|&i| s.lines[i].through_origin()).collect();
    if !bad_points.is_empty() || !bad_lines.is_empty() {
        return Err(Error::NotDualizable(format!(
            "points at the origin {bad_points:?}, lines through the origin {bad_lines:?}"
        )));
    }
    let points = s.lines.iter().map(dualize_line).collect::<Result<_>>()?;
    let lines = s.points.iter().map(dualize_point).collect::<Result<_>>()?;
    Ok(count_incidences(points, lines))
}

/// What [`dualizable_part`] left out.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DualFilter {
    pub dropped_points: Vec<usize>,
    pub dropped_lines: Vec<usize>,
}

/// Removes points at the origin and lines through it.
pub fn dualizable_part<Q: ExactScalar>(
    points: &[RationalPoint<Q>],
    lines: &[RationalLine<Q>],
) -> (Vec<RationalPoint<Q>>, Vec<RationalLine<Q>>, DualFilter) {
    let mut filter = DualFilter::default();
    let mut kept_points = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if p.is_origin() {
            filter.dropped_points.push(i);
        } else {
            kept_points.push(p.clone());
        }
    }
    let mut kept_lines = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        if l.through_origin() {
            filter.dropped_lines.push(i);
        } else {
            kept_lines.push(l.clone());
        }
    }
    (kept_points, kept_lines, filter)
}

/// First translation `(k, k^2)`, `k = 1, 2, ...`, after which no point sits
/// at the origin and no line passes through it.
///
/// Each point rules out at most one `k` and each line at most two, so the
/// search ends within `|P| + 2 |L| + 1` steps.
pub fn find_translation<Q: ExactScalar>(
    points: &[RationalPoint<Q>],
    lines: &[RationalLine<Q>],
) -> RationalPoint<Q> {
    (1..)
        .map(|k: i64| RationalPoint::from_ints(k, k * k))
        .find(|t| {
            points.iter().all(|p| !p.translated(t).is_origin())
                && lines.iter().all(|l| !l.translated(t).through_origin())
        })
        .expect("a translation exists")
}

pub fn translate<Q: ExactScalar>(
    points: &[RationalPoint<Q>],
    lines: &[RationalLine<Q>],
    t: &RationalPoint<Q>,
) -> (Vec<RationalPoint<Q>>, Vec<RationalLine<Q>>) {
    (
        points.iter().map(|p| p.translated(t)).collect(),
        lines.iter().map(|l| l.translated(t)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type P = RationalPoint<Rational64>;
    type L = RationalLine<Rational64>;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn point_duals() {
        assert_eq!(dualize_point(&P::from_ints(0, 1)).unwrap(), L::new(r(0, 1), r(1, 1), r(1, 1)).unwrap());
        assert_eq!(dualize_point(&P::from_ints(1, 1)).unwrap(), L::new(r(1, 1), r(1, 1), r(1, 1)).unwrap());
        assert_eq!(dualize_point(&P::from_ints(2, 0)).unwrap(), L::new(r(1, 1), r(0, 1), r(1, 2)).unwrap());
        assert!(matches!(dualize_point(&P::from_ints(0, 0)), Err(Error::NotDualizable(_))));
    }

    #[test]
    fn line_duals() {
        let x1 = L::new(r(1, 1), r(0, 1), r(1, 1)).unwrap();
        assert_eq!(dualize_line(&x1).unwrap(), P::from_ints(1, 0));
        let diag = L::new(r(1, 1), r(1, 1), r(1, 1)).unwrap();
        assert_eq!(dualize_line(&diag).unwrap(), P::from_ints(1, 1));
        let axis = L::new(r(0, 1), r(1, 1), r(0, 1)).unwrap();
        assert!(dualize_line(&axis).is_err());
    }

    #[test]
    fn shifted_square_keeps_eight_incidences() {
        let pts: Vec<P> = [(0, 0), (1, 0), (1, 1), (0, 1)].iter().map(|&(x, y)| P::from_ints(x, y)).collect();
        let lines = vec![
            L::new(r(0, 1), r(1, 1), r(0, 1)).unwrap(),
            L::new(r(1, 1), r(0, 1), r(1, 1)).unwrap(),
            L::new(r(0, 1), r(1, 1), r(1, 1)).unwrap(),
            L::new(r(1, 1), r(0, 1), r(0, 1)).unwrap(),
        ];
        let (p, l) = translate(&pts, &lines, &P::from_ints(3, 3));
        let s = count_incidences(p, l);
        let d = dualize_configuration(&s).unwrap();
        assert_eq!((s.incidences(), d.incidences()), (8, 8));
        assert!(dualize_configuration(&count_incidences(pts, lines)).is_err());
    }

    #[test]
    fn self_dual_pair() {
        let s = count_incidences(vec![P::from_ints(0, 1)], vec![L::new(r(0, 1), r(1, 1), r(1, 1)).unwrap()]);
        let d = dualize_configuration(&s).unwrap();
        assert_eq!(d.points, s.points);
        assert_eq!(d.lines, s.lines);
        assert_eq!(d.incidences(), 1);
    }

    #[test]
    fn translation_clears_degeneracies() {
        let pts = vec![P::from_ints(0, 0), P::from_ints(-1, -1)];
        let lines = vec![L::new(r(1, 1), r(-1, 1), r(0, 1)).unwrap()];
        let t = find_translation(&pts, &lines);
        assert_eq!(t, P::from_ints(2, 4));
        let (p, l) = translate(&pts, &lines, &t);
        let (_, _, f) = dualizable_part(&p, &l);
        assert_eq!(f, DualFilter::default());
    }
}
