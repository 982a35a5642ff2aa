//! Natural cubic splines with exact integrals of `f²` and `f'²`
//! (4-point Gauss per interval, exact through degree 7).

use crate::error::{Error, Result};

const GAUSS4_X: [f64; 4] = [
    -0.8611363115940526,
    -0.3399810435848563,
    0.3399810435848563,
    0.8611363115940526,
];
const GAUSS4_W: [f64; 4] = [
    0.3478548451374538,
    0.6521451548625461,
    0.6521451548625461,
    0.3478548451374538,
];

#[derive(Debug, Clone)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    /// Second derivatives at the knots (zero at both ends).
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn natural(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 3 || y.len() != n {
            return Err(Error::invalid("spline needs >= 3 knots with matching values".to_string()));
        }
        if x.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::invalid("spline knots must be strictly increasing".to_string()));
        }
        // Thomas algorithm for the interior second derivatives.
        let mut diag = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        let mut upper = vec![0.0; n];
        for i in 1..n - 1 {
            let h0 = x[i] - x[i - 1];
            let h1 = x[i + 1] - x[i];
            diag[i] = (h0 + h1) / 3.0;
            upper[i] = h1 / 6.0;
            rhs[i] = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
        }
        for i in 2..n - 1 {
            let lower = (x[i] - x[i - 1]) / 6.0;
            let w = lower / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        let mut m = vec![0.0; n];
        for i in (1..n - 1).rev() {
            m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        }
        Ok(CubicSpline { x, y, m })
    }

    pub fn domain_end(&self) -> f64 {
        *self.x.last().unwrap()
    }

    pub fn value_at_start(&self) -> f64 {
        self.y[0]
    }

    pub fn value_at_end(&self) -> f64 {
        *self.y.last().unwrap()
    }

    fn segment(&self, t: f64) -> usize {
        let n = self.x.len();
        if t <= self.x[0] {
            return 0;
        }
        if t >= self.x[n - 1] {
            return n - 2;
        }
        (self.x.partition_point(|&v| v <= t) - 1).min(n - 2)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let (a, b) = (1.0 - s, s);
        a * self.y[i]
            + b * self.y[i + 1]
            + h * h / 6.0 * ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1])
    }

    pub fn eval_derivative(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let (a, b) = (1.0 - s, s);
        (self.y[i + 1] - self.y[i]) / h
            + h / 6.0 * ((1.0 - 3.0 * a * a) * self.m[i] + (3.0 * b * b - 1.0) * self.m[i + 1])
    }

    fn gauss_integral<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let mut total = 0.0;
        for i in 0..self.x.len() - 1 {
            let (lo, hi) = (self.x[i], self.x[i + 1]);
            let c = 0.5 * (lo + hi);
            let half = 0.5 * (hi - lo);
            let mut local = 0.0;
            for k in 0..4 {
                local += GAUSS4_W[k] * f(c + half * GAUSS4_X[k]);
            }
            total += local * half;
        }
        total
    }

    /// `∫ f(t)² dt` over the knot range, exact.
    pub fn integral_square(&self) -> f64 {
        self.gauss_integral(|t| self.eval(t).powi(2))
    }

    /// `∫ f'(t)² dt` over the knot range, exact.
    pub fn integral_derivative_square(&self) -> f64 {
        self.gauss_integral(|t| self.eval_derivative(t).powi(2))
    }
}

/// Slack of the half-line Robin bound for a function supported on `[0, T]`
/// (extension by zero; requires `f(T) = 0`):
/// `∫ f'² + β f(0)² + β² ∫ f²`, which is nonnegative for every `f ∈ H¹`.
pub fn half_line_form_slack(f: &CubicSpline, beta: f64) -> Result<f64> {
    if f.value_at_end().abs() > 1e-12 {
        return Err(Error::invalid(
            "zero-extension to the half-line requires f = 0 at the right end".to_string(),
        ));
    }
    let f0 = f.value_at_start();
    Ok(f.integral_derivative_square() + beta * f0 * f0 + beta * beta * f.integral_square())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_knots_and_integrates_linear_exactly() {
        let x: Vec<f64> = (0..=10).map(|i| i as f64 * 0.3).collect();
        let y: Vec<f64> = x.iter().map(|&v| 2.0 * v - 1.0).collect();
        let s = CubicSpline::natural(x.clone(), y.clone()).unwrap();
        for (xv, yv) in x.iter().zip(&y) {
            assert!((s.eval(*xv) - yv).abs() < 1e-12);
        }
        // A line interpolated by a natural spline stays a line.
        assert!((s.eval(0.45) - (2.0 * 0.45 - 1.0)).abs() < 1e-12);
        let t = s.domain_end();
        // ∫ (2x-1)² over [0, 3] = [ (2x-1)³/6 ] = (5³+1)/6
        let exact = ((2.0 * t - 1.0).powi(3) + 1.0) / 6.0;
        assert!((s.integral_square() - exact).abs() < 1e-10);
        assert!((s.integral_derivative_square() - 4.0 * t).abs() < 1e-10);
    }

    #[test]
    fn half_line_slack_nonnegative_for_exponential_like() {
        // Dense spline approximation of e^{-t} truncated to 0 at T = 12.
        let n = 200;
        let t_end = 12.0;
        let x: Vec<f64> = (0..=n).map(|i| t_end * i as f64 / n as f64).collect();
        let mut y: Vec<f64> = x.iter().map(|&v| (-v).exp()).collect();
        *y.last_mut().unwrap() = 0.0;
        let s = CubicSpline::natural(x, y).unwrap();
        let slack = half_line_form_slack(&s, -1.0).unwrap();
        // e^{-t} saturates the bound; the truncated spline sits just above.
        assert!(slack > -1e-9, "slack {slack}");
        assert!(slack < 1e-2);
    }

    #[test]
    fn requires_zero_tail() {
        let x: Vec<f64> = (0..=5).map(|i| i as f64).collect();
        let y = vec![1.0, 0.5, 0.2, 0.1, 0.05, 0.02];
        let s = CubicSpline::natural(x, y).unwrap();
        assert!(half_line_form_slack(&s, -1.0).is_err());
    }
}
