use rayon::prelude::*;
use serde::Serialize;

use crate::incidence::types::{RationalLine, RationalPoint};
use crate::scalar::ExactScalar;

/// Points, lines and every exact incidence between them.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceStructure<Q> {
    pub points: Vec<RationalPoint<Q>>,
    pub lines: Vec<RationalLine<Q>>,
    /// `(point, line)` index pairs, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Lines through each point.
    pub lines_of: Vec<Vec<usize>>,
    /// Points on each line.
    pub points_of: Vec<Vec<usize>>,
}

impl<Q: ExactScalar> IncidenceStructure<Q> {
    pub fn incidences(&self) -> usize {
        self.pairs.len()
    }

    /// Drops lines without points and points on no line, keeping order.
    pub fn covered(&self) -> Self {
        let points: Vec<RationalPoint<Q>> = (0..self.points.len())
            .filter(|&p| !self.lines_of[p].is_empty())
            .map(|p| self.points[p].clone())
            .collect();
        let lines: Vec<RationalLine<Q>> = (0..self.lines.len())
            .filter(|&l| !self.points_of[l].is_empty())
            .map(|l| self.lines[l].clone())
            .collect();
        count_incidences(points, lines)
    }
}

/// Tests every point against every line exactly.
pub fn count_incidences<Q: ExactScalar>(
    points: Vec<RationalPoint<Q>>,
    lines: Vec<RationalLine<Q>>,
) -> IncidenceStructure<Q> {
    let lines_of: Vec<Vec<usize>> = points
        .par_iter()
        .map(|p| (0..lines.len()).filter(|&l| lines[l].contains(p)).collect())
        .collect();
    let mut points_of = vec![Vec::new(); lines.len()];
    let mut pairs = Vec::new();
    for (p, ls) in lines_of.iter().enumerate() {
        for &l in ls {
            points_of[l].push(p);
            pairs.push((p, l));
        }
    }
    IncidenceStructure {
        points,
        lines,
        pairs,
        lines_of,
        points_of,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub incidences: usize,
    pub points: usize,
    pub lines: usize,
    /// `I / (|P| |L|)^(2/3)`.
    pub score: f64,
    /// `(|P| |L|)^(2/3)`.
    pub main_term: f64,
    /// `(|P| |L|)^(2/3) + |P| + |L|`.
    pub bound: f64,
}

pub fn sharpness<Q: ExactScalar>(s: &IncidenceStructure<Q>) -> SharpnessReport {
    let (n, m) = (s.points.len(), s.lines.len());
    let main_term = ((n * m) as f64).powf(2.0 / 3.0);
    SharpnessReport {
        incidences: s.incidences(),
        points: n,
        lines: m,
        score: if main_term > 0.0 { s.incidences() as f64 / main_term } else { 0.0 },
        main_term,
        bound: main_term + n as f64 + m as f64,
    }
}

/// The crossing-lemma form of the incidence bound on the covered part:
/// `I - |L| <= max(4 |P|, (100 |P|^2 |L|^2)^(1/3))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StBound {
    pub holds: bool,
    /// `I - |L|`, the segment count.
    pub edges: u64,
    pub points: u64,
    pub lines: u64,
    /// Right-hand side minus `edges`.
    pub slack: f64,
    pub dropped_points: usize,
    pub dropped_lines: usize,
}

pub fn st_bound_check<Q: ExactScalar>(s: &IncidenceStructure<Q>) -> StBound {
    let c = s.covered();
    let (v, l) = (c.points.len() as u64, c.lines.len() as u64);
    let e = c.incidences() as u64 - l;
    let small = e <= 4 * v;
    let cubic = {
        let (e, v, l) = (e as u128, v as u128, l as u128);
        match (e.checked_pow(3), v.checked_mul(v).and_then(|v2| v2.checked_mul(l * l)).and_then(|x| x.checked_mul(100))) {
            (Some(lhs), Some(rhs)) => lhs <= rhs,
            _ => (e as f64).powi(3) <= 100.0 * (v as f64).powi(2) * (l as f64).powi(2),
        }
    };
    let rhs = (4 * v) as f64;
    let rhs = rhs.max((100.0 * (v as f64).powi(2) * (l as f64).powi(2)).cbrt());
    StBound {
        holds: small || cubic,
        edges: e,
        points: v,
        lines: l,
        slack: rhs - e as f64,
        dropped_points: s.points.len() - c.points.len(),
        dropped_lines: s.lines.len() - c.lines.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_st_grid;
    use num_rational::Rational64;

    type P = RationalPoint<Rational64>;
    type L = RationalLine<Rational64>;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    pub(crate) fn unit_square() -> (Vec<P>, Vec<L>) {
        let pts = vec![P::from_ints(0, 0), P::from_ints(1, 0), P::from_ints(1, 1), P::from_ints(0, 1)];
        let lines = vec![
            L::new(q(0), q(1), q(0)).unwrap(),
            L::new(q(1), q(0), q(1)).unwrap(),
            L::new(q(0), q(1), q(1)).unwrap(),
            L::new(q(1), q(0), q(0)).unwrap(),
        ];
        (pts, lines)
    }

    #[test]
    fn unit_square_has_eight() {
        let (p, l) = unit_square();
        let s = count_incidences(p, l);
        assert_eq!(s.incidences(), 8);
        let b = st_bound_check(&s);
        assert!(b.holds);
        assert_eq!(b.edges, 4);
        assert!((b.slack - (25_600f64.cbrt() - 4.0)).abs() < 1e-9);
    }

    #[test]
    fn st_grids() {
        let (p, l) = gen_st_grid::<Rational64>(2).unwrap();
        assert_eq!(count_incidences(p, l).incidences(), 16);
        let (p, l) = gen_st_grid::<Rational64>(5).unwrap();
        let s = count_incidences(p, l);
        assert_eq!(s.incidences(), 625);
        assert!((sharpness(&s).score - 0.630).abs() < 1e-3);
        let b = st_bound_check(&s);
        assert!(b.holds && b.edges == 500);
    }

    #[test]
    fn trivial_cases() {
        let s = count_incidences(vec![P::from_ints(1, 1)], Vec::<L>::new());
        assert_eq!(s.incidences(), 0);
        let s = count_incidences(vec![P::from_ints(1, 1)], vec![L::new(q(1), q(0), q(1)).unwrap()]);
        let b = st_bound_check(&s);
        assert!(b.holds && b.edges == 0);
    }

    #[test]
    fn covered_drops_empty_lines_and_lonely_points() {
        let (mut p, mut l) = unit_square();
        p.push(P::from_ints(5, 5));
        l.push(L::new(q(1), q(1), q(100)).unwrap());
        let b = st_bound_check(&count_incidences(p, l));
        assert_eq!((b.dropped_points, b.dropped_lines, b.points, b.lines), (1, 1, 4, 4));
    }
}
