//! Scalar abstractions shared by the float and exact code paths.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FloatConst, FromPrimitive, Signed, ToPrimitive, Zero};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    num_traits::Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Exact field scalar used by the incidence code: any `Ratio` over a signed
/// integer type (`i64`, `i128`, `BigInt`).
pub trait ExactScalar: Clone + Ord + Hash + Debug + Signed + Send + Sync {
    /// `num / den`; `None` when `den == 0` or the value does not fit.
    fn from_parts(num: i64, den: i64) -> Option<Self>;

    /// Reduced numerator and denominator when both fit in `i64`.
    fn to_parts(&self) -> Option<(i64, i64)>;

    fn to_f64(&self) -> f64;

    /// Rescales `(a, b, c)` by a common nonzero factor so that all three are
    /// coprime integers and the first nonzero entry of `(a, b)` is positive.
    /// Returns the input unchanged when `a == b == 0`.
    fn normalize_triple(a: &Self, b: &Self, c: &Self) -> [Self; 3];
}

impl<I> ExactScalar for Ratio<I>
where
    I: Integer + Signed + Clone + Hash + Debug + Send + Sync + FromPrimitive + ToPrimitive,
{
    fn from_parts(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Ratio::new(I::from_i64(num)?, I::from_i64(den)?))
    }

    fn to_parts(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    fn to_f64(&self) -> f64 {
        match (self.numer().to_f64(), self.denom().to_f64()) {
            (Some(n), Some(d)) => n / d,
            _ => f64::NAN,
        }
    }

    fn normalize_triple(a: &Self, b: &Self, c: &Self) -> [Self; 3] {
        if a.is_zero() && b.is_zero() {
            return [a.clone(), b.clone(), c.clone()];
        }
        let lcm = a.denom().lcm(b.denom()).lcm(c.denom());
        let ints: Vec<I> = [a, b, c]
            .iter()
            .map(|v| v.numer().clone() * (lcm.clone() / v.denom().clone()))
            .collect();
        let gcd = ints
            .iter()
            .filter(|v| !v.is_zero())
            .fold(I::zero(), |g, v| g.gcd(v));
        let lead_negative = if !ints[0].is_zero() {
            ints[0].is_negative()
        } else {
            ints[1].is_negative()
        };
        let mut out = ints.into_iter().map(|v| {
            let v = v / gcd.clone();
            Ratio::from_integer(if lead_negative { -v } else { v })
        });
        [out.next().unwrap(), out.next().unwrap(), out.next().unwrap()]
    }
}
