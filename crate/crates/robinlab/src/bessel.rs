//! Modified Bessel functions of the first kind, orders 0 and 1.
//!
//! Power series up to the switch point, scaled asymptotic series beyond; the
//! ratio `I1/I0` is provided separately so callers can work at large
//! arguments without overflow.

const SERIES_SWITCH: f64 = 30.0;

/// `I0(x)` by power series; accurate for `|x| <= 30`, overflows never.
fn i0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= q / ((k * k) as f64);
        sum += term;
        if term < sum * 1e-18 {
            break;
        }
    }
    sum
}

/// `I1(x)` by power series.
fn i1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= q / ((k * (k + 1)) as f64);
        sum += term;
        if term < sum * 1e-18 {
            break;
        }
    }
    0.5 * x * sum
}

/// Truncated asymptotic series `sum_k c_k(nu) / x^k` for `e^-x sqrt(2 pi x) I_nu(x)`,
/// summed to its smallest term.
fn asymptotic_tail(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1u32..40 {
        let j = (2 * k - 1) as f64;
        term *= -(mu - j * j) / (k as f64 * 8.0 * x);
        if term.abs() >= prev {
            break;
        }
        sum += term;
        prev = term.abs();
    }
    sum
}

/// `I0(x)` for `x >= 0`. Overflows to infinity past `x ~ 713`.
pub fn i0(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= SERIES_SWITCH {
        i0_series(x)
    } else {
        x.exp() / (2.0 * std::f64::consts::PI * x).sqrt() * asymptotic_tail(0.0, x)
    }
}

/// `I1(x)` for `x >= 0`.
pub fn i1(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= SERIES_SWITCH {
        i1_series(x)
    } else {
        x.exp() / (2.0 * std::f64::consts::PI * x).sqrt() * asymptotic_tail(1.0, x)
    }
}

/// The ratio `I1(x)/I0(x)`, monotone increasing from 0 to 1 on `x >= 0`,
/// free of overflow for any argument.
pub fn i1_over_i0(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= SERIES_SWITCH {
        i1_series(x) / i0_series(x)
    } else {
        asymptotic_tail(1.0, x) / asymptotic_tail(0.0, x)
    }
}
