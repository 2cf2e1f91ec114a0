use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::scalar::Real;
use crate::trig::curvtri::{curvtri_eval, thirdarc_classify, CurvTriInstance};

/// Upper limits of the scanned `(alpha, beta, theta)` box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DomainCaps {
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
}

impl DomainCaps {
    pub const LEMMA: Self = Self::uniform(std::f64::consts::PI / 100.0);
    pub const COROLLARY: Self = Self::uniform(1e-2);

    pub const fn uniform(cap: f64) -> Self {
        Self {
            alpha: cap,
            beta: cap,
            theta: cap,
        }
    }
}

/// Slices of the domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// All three parameters free.
    Full,
    /// `beta = alpha`.
    Symmetric,
    /// `beta = theta = 0`, `alpha` in `[cap / 100, cap]`.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Extreme<T> {
    pub value: T,
    pub at: CurvTriInstance<T>,
}

/// Maxima of the normalized remainders over a scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport<T> {
    pub family: Family,
    pub caps: DomainCaps,
    pub samples: usize,
    pub seed: u64,
    /// `|R| / (alpha + beta + theta)^3`.
    pub cubic: Extreme<T>,
    /// `|R| / (alpha + beta + theta)^2`.
    pub quadratic: Extreme<T>,
    /// `|X - |alpha^2 - 2 alpha theta - beta^2| / 2| / (alpha + beta + theta)^4`.
    pub x_term: Extreme<T>,
    /// `|Y - |alpha - beta|| / (alpha + beta + theta)^3`.
    pub y_term: Extreme<T>,
    /// Third-arc error over `(alpha + beta)^2`, skipping `alpha + beta = 0`.
    pub third_arc: Extreme<T>,
    /// Third-arc error over `(alpha + beta + theta)^2`.
    pub third_arc_full: Extreme<T>,
}

/// Radical inverse of `i` in base `b`.
fn radical_inverse(mut i: u64, b: u64) -> f64 {
    let (mut inv, mut f) = (0.0, 1.0 / b as f64);
    while i > 0 {
        inv += (i % b) as f64 * f;
        i /= b;
        f /= b as f64;
    }
    inv
}

/// Point `i` of the Halton sequence in bases 2, 3, 5, shifted modulo 1.
fn halton(i: u64, shift: [f64; 3]) -> [f64; 3] {
    let mut u = [0.0; 3];
    for (k, b) in [2, 3, 5].into_iter().enumerate() {
        u[k] = (radical_inverse(i + 1, b) + shift[k]).fract();
    }
    u
}

fn instance(family: Family, caps: &DomainCaps, u: [f64; 3]) -> CurvTriInstance<f64> {
    // 1 - u lies in (0, 1], keeping every parameter positive
    let at = |cap: f64, v: f64| cap * (1.0 - v);
    match family {
        Family::Full => CurvTriInstance::new(at(caps.alpha, u[0]), at(caps.beta, u[1]), at(caps.theta, u[2])),
        Family::Symmetric => {
            let a = at(caps.alpha.min(caps.beta), u[0]);
            CurvTriInstance::new(a, a, at(caps.theta, u[2]))
        }
        Family::Boundary => {
            let lo = caps.alpha / 100.0;
            CurvTriInstance::new(lo + (caps.alpha - lo) * u[0], 0.0, 0.0)
        }
    }
}

struct Row<T> {
    index: usize,
    at: CurvTriInstance<T>,
    values: [T; 6],
}

fn pick<T: Real>(a: Extreme<T>, ai: usize, b: Extreme<T>, bi: usize) -> (Extreme<T>, usize) {
    if b.value > a.value || (b.value == a.value && bi < ai) {
        (b, bi)
    } else {
        (a, ai)
    }
}

/// Quasi-random scan of one family: a Halton sequence with a random shift
/// drawn from `seed`.
pub fn remainder_scan<T: Real>(
    caps: DomainCaps,
    family: Family,
    samples: usize,
    seed: u64,
) -> Result<ScanReport<T>> {
    if samples == 0 {
        return Err(param("samples", "must be >= 1"));
    }
    let usable = |c: f64| c.is_finite() && c > 0.0;
    let empty = match family {
        Family::Full => !(usable(caps.alpha) && usable(caps.beta) && usable(caps.theta)),
        Family::Symmetric => !(usable(caps.alpha) && usable(caps.beta) && usable(caps.theta)),
        Family::Boundary => !usable(caps.alpha),
    };
    if empty {
        return Err(Error::EmptyDomain);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
    let two = T::lit(2.0);
    let rows: Vec<Row<T>> = (0..samples)
        .into_par_iter()
        .map(|index| {
            let i = instance(family, &caps, halton(index as u64, shift));
            let at = CurvTriInstance::new(T::lit(i.alpha), T::lit(i.beta), T::lit(i.theta));
            let e = curvtri_eval(at);
            let s = at.size();
            let main_x = (at.alpha * at.alpha - two * at.alpha * at.theta - at.beta * at.beta).abs() / two;
            let third = thirdarc_classify(at).error;
            let ab = at.alpha + at.beta;
            let r = e.remainder.abs();
            Row {
                index,
                at,
                values: [
                    r / s.powi(3),
                    r / s.powi(2),
                    (e.x - main_x).abs() / s.powi(4),
                    (e.y - (at.alpha - at.beta).abs()).abs() / s.powi(3),
                    if ab > T::zero() { third / (ab * ab) } else { T::zero() },
                    third / (s * s),
                ],
            }
        })
        .collect();
    let mut best: Vec<(Extreme<T>, usize)> = (0..6)
        .map(|k| (Extreme { value: rows[0].values[k], at: rows[0].at }, rows[0].index))
        .collect();
    for row in &rows[1..] {
        for (k, slot) in best.iter_mut().enumerate() {
            *slot = pick(slot.0, slot.1, Extreme { value: row.values[k], at: row.at }, row.index);
        }
    }
    let e = |k: usize| best[k].0;
    Ok(ScanReport {
        family,
        caps,
        samples,
        seed,
        cubic: e(0),
        quadratic: e(1),
        x_term: e(2),
        y_term: e(3),
        third_arc: e(4),
        third_arc_full: e(5),
    })
}

/// Safety factor applied to scanned maxima.
pub const SAFETY_FACTOR: f64 = 1.5;
pub const CALIBRATION_SEED: u64 = 0;
pub const CALIBRATION_SAMPLES: usize = 100_000;

/// Frozen constants from the calibration scans: `C_X` and `C_Y` over the
/// lemma domain, `C_THIRD` over the corollary domain, all on the full family.
pub const C_X: f64 = 0.0625;
pub const C_Y: f64 = 0.25;
pub const C_THIRD: f64 = 9.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Calibration {
    pub c_x: f64,
    pub c_y: f64,
    pub c_third: f64,
}

/// Scanned maxima times [`SAFETY_FACTOR`].
pub fn calibrate(lemma: &ScanReport<f64>, corollary: &ScanReport<f64>) -> Calibration {
    Calibration {
        c_x: lemma.x_term.value * SAFETY_FACTOR,
        c_y: lemma.y_term.value * SAFETY_FACTOR,
        c_third: corollary.third_arc.value * SAFETY_FACTOR,
    }
}
