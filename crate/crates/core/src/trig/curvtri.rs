use serde::Serialize;

use crate::scalar::Real;

/// Arcs `alpha` (from `a` to `b`) and `beta` (from `c` to `d`) with the
/// circles through `b` meeting at angle `theta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvTriInstance<T> {
    pub alpha: T,
    pub beta: T,
    pub theta: T,
}

impl<T: Real> CurvTriInstance<T> {
    pub fn new(alpha: T, beta: T, theta: T) -> Self {
        Self { alpha, beta, theta }
    }

    /// `alpha + beta + theta`.
    pub fn size(&self) -> T {
        self.alpha + self.beta + self.theta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvTriEval<T> {
    pub a: [T; 2],
    pub b: [T; 2],
    pub c: [T; 2],
    pub d: [T; 2],
    pub e: [T; 2],
    /// `|a - c|`.
    pub exact: T,
    /// `|alpha^2 - 2 alpha theta - beta^2| / 2 + |alpha - beta|`.
    pub approx: T,
    /// `exact - approx`.
    pub remainder: T,
    /// Horizontal and vertical components of `a - c`, unsigned.
    pub x: T,
    pub y: T,
}

/// Signed `a - c` by product formulas free of cancellation:
/// `X = 2 sin(a/2) sin(a/2 - t) - 2 sin^2(b/2)` and
/// `Y = 2 cos((a+b)/2) sin((a-b)/2) + 4 sin(a/2) sin(t/2) sin((a-t)/2)`.
fn difference<T: Real>(inst: &CurvTriInstance<T>) -> (T, T) {
    let two = T::lit(2.0);
    let CurvTriInstance { alpha, beta, theta } = *inst;
    let (sa, sb, st) = ((alpha / two).sin(), (beta / two).sin(), (theta / two).sin());
    let x = two * sa * (alpha / two - theta).sin() - two * sb * sb;
    let y = two * ((alpha + beta) / two).cos() * ((alpha - beta) / two).sin()
        + T::lit(4.0) * sa * st * ((alpha - theta) / two).sin();
    (x, y)
}

/// The configuration with `b` at the origin, `d = (1, 0)` and
/// `e = (cos theta, sin theta)`.
pub fn curvtri_eval<T: Real>(inst: CurvTriInstance<T>) -> CurvTriEval<T> {
    let CurvTriInstance { alpha, beta, theta } = inst;
    let (x, y) = difference(&inst);
    let exact = x.hypot(y);
    let approx = (alpha * alpha - T::lit(2.0) * alpha * theta - beta * beta).abs() / T::lit(2.0)
        + (alpha - beta).abs();
    CurvTriEval {
        a: [theta.cos() - (alpha - theta).cos(), theta.sin() + (alpha - theta).sin()],
        b: [T::zero(), T::zero()],
        c: [T::one() - beta.cos(), beta.sin()],
        d: [T::one(), T::zero()],
        e: [theta.cos(), theta.sin()],
        exact,
        approx,
        remainder: exact - approx,
        x: x.abs(),
        y: y.abs(),
    }
}

/// Which term dominates the distance from `a` to `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Difference,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThirdArc<T> {
    pub regime: Regime,
    pub value: T,
    pub exact: T,
    pub error: T,
}

/// `|alpha - beta|` when it is at least `alpha theta`, otherwise `alpha theta`;
/// equality goes to the sweep.
pub fn thirdarc_classify<T: Real>(inst: CurvTriInstance<T>) -> ThirdArc<T> {
    let diff = (inst.alpha - inst.beta).abs();
    let sweep = inst.alpha * inst.theta;
    let (regime, value) = if diff > sweep {
        (Regime::Difference, diff)
    } else {
        (Regime::Sweep, sweep)
    };
    let exact = curvtri_eval(inst).exact;
    ThirdArc {
        regime,
        value,
        exact,
        error: (exact - value).abs(),
    }
}
