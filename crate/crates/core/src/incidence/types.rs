use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// Point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint<Q> {
    pub x: Q,
    pub y: Q,
}

impl<Q: ExactScalar> RationalPoint<Q> {
    pub fn new(x: Q, y: Q) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(
            Q::from_parts(x, 1).expect("integer fits"),
            Q::from_parts(y, 1).expect("integer fits"),
        )
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Self) -> Q {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn translated(&self, t: &Self) -> Self {
        Self::new(self.x.clone() + t.x.clone(), self.y.clone() + t.y.clone())
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }
}

/// Line `a x + b y = c`, stored with coprime integer coefficients and the
/// first nonzero of `(a, b)` positive, so structural equality is line
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalLine<Q> {
    a: Q,
    b: Q,
    c: Q,
}

impl<Q: ExactScalar> RationalLine<Q> {
    pub fn new(a: Q, b: Q, c: Q) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Format("line has a = b = 0".into()));
        }
        let [a, b, c] = Q::normalize_triple(&a, &b, &c);
        Ok(Self { a, b, c })
    }

    /// The line through two distinct points.
    pub fn through(p: &RationalPoint<Q>, q: &RationalPoint<Q>) -> Result<Self> {
        let a = q.y.clone() - p.y.clone();
        let b = p.x.clone() - q.x.clone();
        let c = a.clone() * p.x.clone() + b.clone() * p.y.clone();
        Self::new(a, b, c)
    }

    pub fn coefficients(&self) -> (&Q, &Q, &Q) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &RationalPoint<Q>) -> bool {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() == self.c
    }

    pub fn through_origin(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        (self.a.clone() * other.b.clone() - self.b.clone() * other.a.clone()).is_zero()
    }

    /// Unique intersection point, `None` for parallel or equal lines.
    pub fn intersection(&self, other: &Self) -> Option<RationalPoint<Q>> {
        let det = self.a.clone() * other.b.clone() - self.b.clone() * other.a.clone();
        if det.is_zero() {
            return None;
        }
        let x = (self.c.clone() * other.b.clone() - self.b.clone() * other.c.clone()) / det.clone();
        let y = (self.a.clone() * other.c.clone() - self.c.clone() * other.a.clone()) / det;
        Some(RationalPoint::new(x, y))
    }

    /// Position of `p` along the line direction `(b, -a)`.
    pub fn param(&self, p: &RationalPoint<Q>) -> Q {
        self.b.clone() * p.x.clone() - self.a.clone() * p.y.clone()
    }

    pub fn translated(&self, t: &RationalPoint<Q>) -> Self {
        let c = self.c.clone() + self.a.clone() * t.x.clone() + self.b.clone() * t.y.clone();
        Self::new(self.a.clone(), self.b.clone(), c).expect("nonzero normal")
    }
}
