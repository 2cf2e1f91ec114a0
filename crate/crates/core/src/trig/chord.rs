use serde::Serialize;

use crate::error::{param, Result};
use crate::scalar::Real;

/// Distance between two points of a unit circle `theta` apart,
/// `sqrt(2 - 2 cos theta)`, evaluated as `2 |sin(theta / 2)|`.
pub fn chord<T: Real>(theta: T) -> T {
    T::lit(2.0) * (theta / T::lit(2.0)).sin().abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChordBounds<T> {
    pub lower: T,
    pub value: T,
    pub upper: T,
    pub holds: bool,
}

/// `theta - theta^2 / sqrt(12) < chord(theta) < theta - theta^3 / 25` on
/// `(0, pi/2)`.
pub fn chord_bounds_check<T: Real>(theta: T) -> Result<ChordBounds<T>> {
    if !(theta > T::zero() && theta < T::FRAC_PI_2()) {
        return Err(param("theta", "must lie in (0, pi/2)"));
    }
    let lower = theta - theta * theta / T::lit(12.0).sqrt();
    let upper = theta - theta.powi(3) / T::lit(25.0);
    let value = chord(theta);
    Ok(ChordBounds {
        lower,
        value,
        upper,
        holds: lower < value && value < upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, SQRT_2};

    #[test]
    fn chord_values() {
        assert!((chord(FRAC_PI_3) - 1.0).abs() < 1e-15);
        assert!((chord(FRAC_PI_2) - SQRT_2).abs() < 1e-15);
        assert_eq!(chord(0.0), 0.0);
        assert!((chord(1e-8f64) - 1e-8).abs() < 1e-22);
        assert!((chord(FRAC_PI_3 as f32) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn bounds_examples() {
        let b = chord_bounds_check(FRAC_PI_3).unwrap();
        assert!((b.lower - 0.730629).abs() < 1e-6 && (b.upper - 1.001262).abs() < 1e-6);
        assert!(b.holds);
        assert!(chord_bounds_check(1e-3).unwrap().holds);
        assert!(chord_bounds_check(FRAC_PI_2 - 1e-4).unwrap().holds);
        assert!(chord_bounds_check(0.0).is_err());
        assert!(chord_bounds_check(FRAC_PI_2).is_err());
    }
}
