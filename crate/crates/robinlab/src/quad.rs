//! Small quadrature toolbox: trapezoid sums on sampled grids, adaptive
//! Simpson for smooth 1D integrands, and a fixed Gauss–Legendre panel rule.

/// Composite trapezoid rule over sampled nodes (not necessarily uniform).
pub fn trapezoid(t: &[f64], f: &[f64]) -> f64 {
    assert_eq!(t.len(), f.len(), "node/value length mismatch");
    let mut acc = 0.0;
    for i in 1..t.len() {
        acc += 0.5 * (f[i] + f[i - 1]) * (t[i] - t[i - 1]);
    }
    acc
}

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        m: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
                + recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, tol, 48)
}

/// Nodes and weights of the 16-point Gauss–Legendre rule on [-1, 1]
/// (positive half; the rule is symmetric).
const GL16_X: [f64; 8] = [
    0.0950125098376374,
    0.2816035507792589,
    0.4580167776572274,
    0.6178762444026438,
    0.7554044083550030,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];
const GL16_W: [f64; 8] = [
    0.1894506104550685,
    0.1826034150449236,
    0.1691565193950025,
    0.1495959888165767,
    0.1246289712555339,
    0.0951585116824928,
    0.0622535239386479,
    0.0271524594117541,
];

/// Composite 16-point Gauss–Legendre quadrature over `panels` equal panels.
/// Effectively exact for smooth integrands with a modest panel count.
pub fn gauss_panels<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let c = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for k in 0..8 {
            acc += GL16_W[k] * (f(c + half * GL16_X[k]) + f(c - half * GL16_X[k]));
        }
    }
    acc * 0.5 * h
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn trapezoid_linear_exact() {
        let t: Vec<f64> = (0..=10).map(|i| i as f64 * 0.1).collect();
        let f: Vec<f64> = t.iter().map(|&x| 3.0 * x + 1.0).collect();
        assert!((trapezoid(&t, &f) - 2.5).abs() < 1e-14);
    }

    #[test]
    fn simpson_sine() {
        let v = adaptive_simpson(&|x: f64| x.sin(), 0.0, PI, 1e-12);
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn gauss_matches_simpson_on_ellipse_arc() {
        let (a, b) = (2.0, 1.0);
        let g = |t: f64| (a * a * t.sin().powi(2) + b * b * t.cos().powi(2)).sqrt();
        let q1 = gauss_panels(&g, 0.0, 2.0 * PI, 32);
        let q2 = adaptive_simpson(&g, 0.0, 2.0 * PI, 1e-13);
        assert!((q1 - q2).abs() < 1e-10, "{q1} vs {q2}");
    }
}
