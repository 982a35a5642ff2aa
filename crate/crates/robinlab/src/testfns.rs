//! Seeded families of test functions for the property suites: smooth
//! cosine-series radial profiles and random splines with a zero tail.

use crate::spline::CubicSpline;
use crate::transplant::TestProfile;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Smooth random profile `ψ(t) = a₀ + Σ_{j=1..terms} a_j cos(jπt/T)` with
/// coefficients drawn uniformly from [-1, 1].
pub fn random_cosine_profile(seed: u64, support: f64, terms: usize, samples: usize) -> TestProfile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = (0..=terms).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let f = |t: f64| -> f64 {
        let mut v = coeffs[0];
        for (j, &a) in coeffs.iter().enumerate().skip(1) {
            v += a * (j as f64 * PI * t / support).cos();
        }
        v
    };
    let df = |t: f64| -> f64 {
        let mut v = 0.0;
        for (j, &a) in coeffs.iter().enumerate().skip(1) {
            let w = j as f64 * PI / support;
            v -= a * w * (w * t).sin();
        }
        v
    };
    TestProfile::from_functions(f, df, support, samples).expect("valid cosine profile")
}

/// Natural cubic spline through `knots` random values on `[0, support]`,
/// forced to zero at the right end so it extends by zero to the half-line.
pub fn random_spline(seed: u64, support: f64, knots: usize) -> CubicSpline {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = knots.max(4);
    let x: Vec<f64> = (0..n).map(|i| support * i as f64 / (n - 1) as f64).collect();
    let mut y: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    *y.last_mut().unwrap() = 0.0;
    CubicSpline::natural(x, y).expect("valid random spline")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let a = random_cosine_profile(42, 1.0, 5, 100);
        let b = random_cosine_profile(42, 1.0, 5, 100);
        assert_eq!(a.nodes().1, b.nodes().1);
        let c = random_cosine_profile(43, 1.0, 5, 100);
        assert_ne!(a.nodes().1, c.nodes().1);

        let s1 = random_spline(7, 3.0, 12);
        let s2 = random_spline(7, 3.0, 12);
        assert_eq!(s1.eval(1.234), s2.eval(1.234));
        assert_eq!(s1.value_at_end(), 0.0);
    }
}
