//! Lowest Robin eigenpair of a geodesic disk by radial reduction.
//!
//! In geodesic polar coordinates the metric of a constant-curvature surface
//! is `dr² + h(r) dθ²` with `h(r) = r²` (flat) or `sin²(√K r)/K` (curvature
//! `K > 0`). Separation in `θ` turns the eigenvalue problem on the disk of
//! radius `R` into a family of fiber problems on `(0, R)`,
//!
//! ```text
//!   -u'' - (h'/2h) u' + (m²/h) u = λ u,   u'(R) = -β u(R),
//! ```
//!
//! with `u` regular at the pole (`u'(0) = 0` for `m = 0`, `u ~ r^m` for
//! `m >= 1`). The ground state lives in the `m = 0` fiber and is positive.
//!
//! The fiber problem is solved by shooting: RK4 integration from a series
//! start at the pole, and bisection on `λ` using the Sturm predicate "no
//! interior node and positive boundary mismatch", which is monotone in `λ`
//! and therefore bracket-safe even when several eigenvalues lie in the
//! initial interval. Two independent reference routes are provided: a
//! modified-Bessel transcendental oracle for the Euclidean disk and a dense
//! 1D finite-element discretization of the same fiber form.

use crate::bessel::i1_over_i0;
use crate::error::{Error, Result};
use crate::linalg::{smallest_eigenpair, SymBanded};
use crate::transplant::TestProfile;

/// Default relative tolerance on the eigenvalue.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Initial bracket is `[25 β², ~0)`; expanded downward by this factor while
/// the lower end is not certified below the ground state.
const BRACKET_INIT_FACTOR: f64 = 25.0;
const BRACKET_EXPANSION: f64 = 4.0;
const MAX_BRACKET_EXPANSIONS: usize = 60;
/// Offset of the series start from the pole, relative to the disk radius.
const START_OFFSET: f64 = 1e-6;
/// Number of `(t, ψ)` samples stored for the eigenfunction.
const PROFILE_SAMPLES: usize = 2000;

/// Lowest Robin eigenpair of a geodesic disk, in the distance-to-boundary
/// variable `t = R - r`, normalized to `ψ(0) = 1` at the boundary.
#[derive(Debug, Clone)]
pub struct RadialGroundState {
    pub curvature: f64,
    pub radius: f64,
    pub beta: f64,
    pub eigenvalue: f64,
    pub profile: TestProfile,
    /// Normalized Robin mismatch `|u'(R) + β u(R)| / ((1+|β|) |u(R)|)` of the
    /// integrated eigenfunction.
    pub ode_residual: f64,
}

#[inline]
fn drift(curvature: f64, r: f64) -> f64 {
    // h'/(2h)
    if curvature == 0.0 {
        1.0 / r
    } else {
        let sk = curvature.sqrt();
        sk / (sk * r).tan()
    }
}

#[inline]
fn metric_h(curvature: f64, r: f64) -> f64 {
    if curvature == 0.0 {
        r * r
    } else {
        let s = (curvature.sqrt() * r).sin();
        s * s / curvature
    }
}

/// Series start near the pole: value and derivative at `r0`.
fn series_start(curvature: f64, mode: u32, lambda: f64, r0: f64) -> (f64, f64) {
    if mode == 0 {
        let a2 = -lambda / 4.0;
        let a4 = a2 * (2.0 * curvature / 3.0 - lambda) / 16.0;
        (
            1.0 + a2 * r0 * r0 + a4 * r0.powi(4),
            2.0 * a2 * r0 + 4.0 * a4 * r0.powi(3),
        )
    } else {
        let mf = mode as f64;
        let b = (curvature * mf * (mf + 1.0) / 3.0 - lambda) / (4.0 * (mf + 1.0));
        let rm = r0.powi(mode as i32);
        (
            rm * (1.0 + b * r0 * r0),
            mf * rm / r0 + (mf + 2.0) * b * rm * r0,
        )
    }
}

struct Shot {
    nodes: usize,
    mismatch: f64,
    u_end: f64,
    v_end: f64,
    u_max: f64,
}

/// Integrate the fiber ODE from the pole to `R` with `steps` RK4 steps,
/// optionally recording `(r, u, u')` every `sample_every` steps. The linear
/// solution is rescaled by exact powers of two when it grows past 1e150; the
/// recorded samples are kept on a common scale.
fn integrate(
    curvature: f64,
    radius: f64,
    mode: u32,
    lambda: f64,
    steps: usize,
    mut samples: Option<&mut Vec<(f64, f64, f64)>>,
    sample_every: usize,
) -> Shot {
    let r0 = START_OFFSET * radius;
    let h_step = (radius - r0) / steps as f64;
    let (mut u, mut v) = series_start(curvature, mode, lambda, r0);
    let rhs = |r: f64, u: f64, v: f64| -> (f64, f64) {
        let pot = if mode == 0 {
            0.0
        } else {
            (mode as f64).powi(2) / metric_h(curvature, r)
        };
        (v, -drift(curvature, r) * v + (pot - lambda) * u)
    };
    let mut nodes = 0usize;
    let mut u_max = u.abs();
    if let Some(s) = samples.as_deref_mut() {
        s.clear();
        s.push((r0, u, v));
    }
    const RESCALE_LIMIT: f64 = 1e150;
    // 2^-512, an exact power of two so rescaling is rounding-free.
    const RESCALE: f64 = 2.225073858507203e-154;
    for i in 0..steps {
        let r = r0 + i as f64 * h_step;
        let (k1u, k1v) = rhs(r, u, v);
        let (k2u, k2v) = rhs(r + 0.5 * h_step, u + 0.5 * h_step * k1u, v + 0.5 * h_step * k1v);
        let (k3u, k3v) = rhs(r + 0.5 * h_step, u + 0.5 * h_step * k2u, v + 0.5 * h_step * k2v);
        let (k4u, k4v) = rhs(r + h_step, u + h_step * k3u, v + h_step * k3v);
        let nu = u + h_step / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        let nv = v + h_step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if nu * u < 0.0 {
            nodes += 1;
        }
        u = nu;
        v = nv;
        if u.abs().max(v.abs()) > RESCALE_LIMIT {
            u *= RESCALE;
            v *= RESCALE;
            u_max *= RESCALE;
            if let Some(s) = samples.as_deref_mut() {
                for e in s.iter_mut() {
                    e.1 *= RESCALE;
                    e.2 *= RESCALE;
                }
            }
        }
        u_max = u_max.max(u.abs());
        if let Some(s) = samples.as_deref_mut() {
            if (i + 1) % sample_every == 0 {
                s.push((r + h_step, u, v));
            }
        }
    }
    Shot {
        nodes,
        mismatch: v, // placeholder, fixed below
        u_end: u,
        v_end: v,
        u_max,
    }
}

fn shoot(curvature: f64, radius: f64, beta: f64, mode: u32, lambda: f64, steps: usize) -> Shot {
    let mut s = integrate(curvature, radius, mode, lambda, steps, None, usize::MAX);
    s.mismatch = s.v_end + beta * s.u_end;
    s
}

/// Sturm predicate: true iff `λ` lies strictly below the lowest eigenvalue
/// of the fiber.
fn below_ground(curvature: f64, radius: f64, beta: f64, mode: u32, lambda: f64, steps: usize) -> bool {
    let s = shoot(curvature, radius, beta, mode, lambda, steps);
    s.nodes == 0 && s.u_end > 0.0 && s.mismatch > 0.0
}

fn validate_disk_args(curvature: f64, radius: f64, beta: f64) -> Result<()> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::invalid(format!("radius must be > 0, got {radius}")));
    }
    if !(curvature >= 0.0) || !curvature.is_finite() {
        return Err(Error::invalid(format!("curvature must be >= 0, got {curvature}")));
    }
    if curvature > 0.0 && radius * curvature.sqrt() >= std::f64::consts::PI {
        return Err(Error::invalid(
            "radius must satisfy R < π/√K on the sphere".to_string(),
        ));
    }
    if !(beta < 0.0) {
        return Err(Error::invalid(format!("beta must be < 0, got {beta}")));
    }
    Ok(())
}

fn integration_steps(radius: f64, bracket_lo: f64) -> usize {
    let k = bracket_lo.abs().sqrt();
    ((600.0 * k.max(1.0) * radius) as usize).clamp(20_000, 300_000)
}

/// Bisection for the lowest eigenvalue of fiber `mode`; returns `(λ, steps)`.
fn solve_fiber(curvature: f64, radius: f64, beta: f64, mode: u32, tol: f64) -> Result<(f64, usize)> {
    validate_disk_args(curvature, radius, beta)?;
    let tol = if tol > 0.0 { tol } else { DEFAULT_TOL };
    let mut lo = -BRACKET_INIT_FACTOR * beta * beta;
    let mut steps = integration_steps(radius, lo);
    let mut expansions = 0;
    while !below_ground(curvature, radius, beta, mode, lo, steps) {
        lo *= BRACKET_EXPANSION;
        expansions += 1;
        if expansions > MAX_BRACKET_EXPANSIONS {
            return Err(Error::solver(format!(
                "no eigenvalue bracket found below {lo:.3e} (invalid input?)"
            )));
        }
        steps = integration_steps(radius, lo);
    }
    // The ground fiber is strictly negative; higher fibers may not bind, so
    // their bracket is allowed to cross into the positive axis.
    let mut hi = -(1e-12_f64).min(beta * beta * 1e-4);
    let mut shrink = 0;
    while below_ground(curvature, radius, beta, mode, hi, steps) {
        if mode == 0 {
            hi *= 1e-3;
            shrink += 1;
            if shrink > 80 {
                return Err(Error::solver("upper bracket end collapsed to zero".to_string()));
            }
        } else {
            hi = if hi < 0.0 { beta * beta } else { hi * BRACKET_EXPANSION };
            shrink += 1;
            if shrink > MAX_BRACKET_EXPANSIONS {
                return Err(Error::solver("no fiber eigenvalue found above the bracket".to_string()));
            }
            steps = integration_steps(radius, lo.abs().max(hi.abs()));
        }
    }
    for _ in 0..300 {
        if hi - lo <= tol * lo.abs().max(hi.abs()).max(1e-300) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if below_ground(curvature, radius, beta, mode, mid, steps) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), steps))
}

/// Lowest eigenvalue of the `mode`-th angular fiber.
pub fn solve_mode(curvature: f64, radius: f64, beta: f64, mode: u32, tol: f64) -> Result<f64> {
    solve_fiber(curvature, radius, beta, mode, tol).map(|(l, _)| l)
}

/// Lowest Robin eigenpair of the geodesic disk (the `m = 0` fiber), with the
/// eigenfunction sampled against distance to the boundary.
pub fn solve_ground_state(
    curvature: f64,
    radius: f64,
    beta: f64,
    tol: f64,
) -> Result<RadialGroundState> {
    let (eigenvalue, steps) = solve_fiber(curvature, radius, beta, 0, tol)?;
    // Final integration pass storing the eigenfunction.
    let sample_every = (steps / PROFILE_SAMPLES).max(1);
    let steps = sample_every * PROFILE_SAMPLES;
    let mut raw = Vec::with_capacity(PROFILE_SAMPLES + 1);
    let shot = {
        let mut s = integrate(
            curvature,
            radius,
            0,
            eigenvalue,
            steps,
            Some(&mut raw),
            sample_every,
        );
        s.mismatch = s.v_end + beta * s.u_end;
        s
    };
    let u_boundary = shot.u_end;
    if !(u_boundary != 0.0) {
        return Err(Error::solver("eigenfunction vanished at the boundary".to_string()));
    }
    let ode_residual = shot.mismatch.abs() / ((1.0 + beta.abs()) * u_boundary.abs());
    // ψ(t) = u(R - t)/u(R) on a grid of t increasing from the boundary. The
    // integration starts at r₀ > 0; the pole node t = R is appended from the
    // series normalization u(0) = 1, u'(0) = 0.
    let mut t = Vec::with_capacity(raw.len() + 1);
    let mut psi = Vec::with_capacity(raw.len() + 1);
    let mut dpsi = Vec::with_capacity(raw.len() + 1);
    for &(r, u, v) in raw.iter().rev() {
        t.push((radius - r).max(0.0));
        psi.push(u / u_boundary);
        dpsi.push(-v / u_boundary);
    }
    // First-order step back from r₀ keeps the value on the (possibly
    // rescaled) sample scale.
    let (r0, u0, v0) = raw[0];
    t.push(radius);
    psi.push((u0 - r0 * v0) / u_boundary);
    dpsi.push(0.0);
    if psi.iter().any(|&p| !(p > 0.0)) {
        return Err(Error::solver(
            "computed ground state is not positive (missed eigenvalue?)".to_string(),
        ));
    }
    let _ = shot.u_max;
    Ok(RadialGroundState {
        curvature,
        radius,
        beta,
        eigenvalue,
        profile: TestProfile::new(t, psi, dpsi)?,
        ode_residual,
    })
}

/// Lowest Robin eigenvalue of the Euclidean disk of radius `R` from the
/// transcendental equation `k I1(kR) = |β| I0(kR)`, `λ = -k²`. Independent
/// of the shooting path.
pub fn euclid_disk_oracle(radius: f64, beta: f64) -> f64 {
    assert!(radius > 0.0 && beta < 0.0);
    let target = -beta;
    // g(k) = k I1(kR)/I0(kR) - |β| is increasing, negative at k = |β|.
    let g = |k: f64| k * i1_over_i0(k * radius) - target;
    let mut lo = target;
    let mut hi = target + 1.0;
    let mut expansions = 0;
    while g(hi) < 0.0 {
        hi *= 2.0;
        expansions += 1;
        assert!(expansions < 200, "oracle bracket expansion diverged");
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let k = 0.5 * (lo + hi);
    -k * k
}

/// Independent dense-grid discretization of the fiber problem: P1 elements
/// on a uniform grid with the weight `√h`, two-point Gauss quadrature per
/// element, Robin term `β √h(R) u(R)²`. Second-order accurate; used as an
/// oracle against the shooting route.
pub fn fd_reference_eigenvalue(
    curvature: f64,
    radius: f64,
    beta: f64,
    mode: u32,
    n: usize,
) -> Result<f64> {
    validate_disk_args(curvature, radius, beta)?;
    let weight = |r: f64| metric_h(curvature, r).sqrt();
    // For m >= 1 the form domain forces u(0) = 0: drop the pole node.
    let offset = if mode == 0 { 0 } else { 1 };
    let ndof = n + 1 - offset;
    let mut a = SymBanded::zeros(ndof, 1);
    let mut mass = SymBanded::zeros(ndof, 1);
    let dr = radius / n as f64;
    let gauss = 0.5 / 3.0_f64.sqrt();
    for e in 0..n {
        let r_left = e as f64 * dr;
        for &gx in &[0.5 - gauss, 0.5 + gauss] {
            let r = r_left + gx * dr;
            let w = 0.5 * dr * weight(r); // quadrature weight x metric weight
            let phi = [1.0 - gx, gx];
            let dphi = [-1.0 / dr, 1.0 / dr];
            let pot = if mode == 0 {
                0.0
            } else {
                (mode as f64).powi(2) / metric_h(curvature, r)
            };
            for li in 0..2 {
                let gi = e + li;
                if gi < offset {
                    continue;
                }
                for lj in 0..=li {
                    let gj = e + lj;
                    if gj < offset {
                        continue;
                    }
                    a.add(gi - offset, gj - offset, w * (dphi[li] * dphi[lj] + pot * phi[li] * phi[lj]));
                    mass.add(gi - offset, gj - offset, w * phi[li] * phi[lj]);
                }
            }
        }
    }
    a.add(ndof - 1, ndof - 1, beta * weight(radius));
    let eig = smallest_eigenpair(&a, &mass, None, 1e-13, 500)?;
    Ok(eig.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_disk_matches_bessel_oracle() {
        let oracle = euclid_disk_oracle(1.0, -1.0);
        // Frozen root of k I1(k) = I0(k): k* = 1.6082794717268793.
        assert!(
            (oracle - (-2.5865628591780898)).abs() < 1e-12,
            "oracle moved: {oracle}"
        );
        let gs = solve_ground_state(0.0, 1.0, -1.0, 1e-13).unwrap();
        assert!((gs.eigenvalue - oracle).abs() < 1e-8, "{} vs {oracle}", gs.eigenvalue);
        assert!(gs.eigenvalue < 0.0);
        assert!(gs.ode_residual < 1e-7);
        assert!((gs.profile.value_at_zero() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn shooting_vs_oracle_grid() {
        for &radius in &[0.5, 2.0] {
            for &beta in &[-0.5, -2.0] {
                let oracle = euclid_disk_oracle(radius, beta);
                let got = solve_mode(0.0, radius, beta, 0, 1e-13).unwrap();
                assert!(
                    (got - oracle).abs() < 1e-8 * oracle.abs().max(1.0),
                    "(R={radius}, β={beta}): {got} vs {oracle}"
                );
            }
        }
    }

    // Large disks approach the half-line level -β² from below at rate ~|β|/R.
    #[test]
    fn half_line_limit_trend() {
        let mut gaps = Vec::new();
        for &radius in &[12.5, 25.0, 50.0] {
            let lambda = solve_mode(0.0, radius, -1.0, 0, 1e-13).unwrap();
            let oracle = euclid_disk_oracle(radius, -1.0);
            assert!((lambda - oracle).abs() < 1e-8);
            assert!(lambda < -1.0, "binding strictly below the threshold");
            let gap = -1.0 - lambda;
            assert!(gap > 0.0 && gap < 1.5 / radius, "R={radius}: gap {gap}");
            gaps.push(gap);
        }
        assert!(gaps[2] < gaps[1] && gaps[1] < gaps[0]);
        // ~1/R decay: halving the gap when doubling R, within 20%.
        assert!((gaps[0] / gaps[1] - 2.0).abs() < 0.4);
        assert!((gaps[1] / gaps[2] - 2.0).abs() < 0.4);
    }

    #[test]
    fn spherical_cap_matches_fd_reference() {
        let shooting = solve_mode(1.0, 0.5 * PI, -1.0, 0, 1e-13).unwrap();
        let fd = fd_reference_eigenvalue(1.0, 0.5 * PI, -1.0, 0, 10_000).unwrap();
        assert!(
            (shooting - fd).abs() < 1e-6 * shooting.abs(),
            "{shooting} vs {fd}"
        );
    }

    #[test]
    fn complement_cap_solvable() {
        // Radius past the equator; needed by the beyond-hemisphere comparison.
        let lambda = solve_mode(1.0, 5.0 * PI / 6.0, -0.01, 0, 1e-12).unwrap();
        assert!(lambda < 0.0);
        let fd = fd_reference_eigenvalue(1.0, 5.0 * PI / 6.0, -0.01, 0, 10_000).unwrap();
        assert!((lambda - fd).abs() < 1e-8, "{lambda} vs {fd}");
    }

    #[test]
    fn fiber_ordering() {
        let m0 = solve_mode(0.0, 1.0, -1.0, 0, 1e-12).unwrap();
        // On the unit disk at β=-1 the m=1 fiber is exactly marginal: u = r
        // solves the fiber equation at λ = 0 and meets u'(1) = u(1).
        let m1 = solve_mode(0.0, 1.0, -1.0, 1, 1e-12).unwrap();
        assert!(m1 > m0, "m=0 fiber must be the ground state: {m0} vs {m1}");
        assert!(m1.abs() < 1e-9, "marginal fiber eigenvalue: {m1}");
        let fd_m1 = fd_reference_eigenvalue(0.0, 1.0, -1.0, 1, 10_000).unwrap();
        assert!((m1 - fd_m1).abs() < 1e-6, "{m1} vs {fd_m1}");
        // A stronger coupling pushes the m=1 fiber strictly below zero.
        let m1_bound = solve_mode(0.0, 1.0, -3.0, 1, 1e-12).unwrap();
        let m0_bound = solve_mode(0.0, 1.0, -3.0, 0, 1e-12).unwrap();
        assert!(m1_bound < 0.0 && m0_bound < m1_bound);

        let c1 = solve_mode(1.0, PI / 3.0, -2.0, 1, 1e-12).unwrap();
        let c2 = solve_mode(1.0, PI / 3.0, -2.0, 2, 1e-12).unwrap();
        assert!(c2 > c1);
        let fd1 = fd_reference_eigenvalue(1.0, PI / 3.0, -2.0, 1, 10_000).unwrap();
        let fd2 = fd_reference_eigenvalue(1.0, PI / 3.0, -2.0, 2, 10_000).unwrap();
        assert!((c1 - fd1).abs() < 1e-6 * c1.abs());
        assert!((c2 - fd2).abs() < 1e-6 * c2.abs());
    }

    #[test]
    fn monotone_in_beta() {
        let l1 = solve_mode(0.0, 1.0, -2.0, 0, 1e-12).unwrap();
        let l2 = solve_mode(0.0, 1.0, -1.0, 0, 1e-12).unwrap();
        let l3 = solve_mode(0.0, 1.0, -0.5, 0, 1e-12).unwrap();
        assert!(l1 < l2 && l2 < l3);
    }

    #[test]
    fn curvature_continuity_at_zero() {
        let flat = solve_mode(0.0, 1.0, -1.0, 0, 1e-12).unwrap();
        let nearly_flat = solve_mode(1e-6, 1.0, -1.0, 0, 1e-12).unwrap();
        assert!((flat - nearly_flat).abs() < 1e-5);
    }

    #[test]
    fn weak_coupling_oracle_slope() {
        // λ/β -> |∂D|/|D| = 2 for the unit disk as β -> 0⁻.
        let beta = -1e-4;
        let lambda = euclid_disk_oracle(1.0, beta);
        assert!((lambda / beta - 2.0).abs() < 0.01 * 2.0);
    }

    #[test]
    fn profile_is_positive_and_normalized() {
        let gs = solve_ground_state(1.0, PI / 3.0, -1.5, 1e-12).unwrap();
        let (t, psi, _) = gs.profile.nodes();
        assert_eq!(t[0], 0.0);
        assert!((psi[0] - 1.0).abs() < 1e-14);
        assert!(psi.iter().all(|&p| p > 0.0));
        assert!((t.last().unwrap() - gs.radius).abs() < 1e-9);
    }

    #[test]
    fn rejects_invalid_arguments() {
        assert!(solve_mode(0.0, 1.0, 1.0, 0, 1e-12).is_err());
        assert!(solve_mode(0.0, -1.0, -1.0, 0, 1e-12).is_err());
        assert!(solve_mode(1.0, PI, -1.0, 0, 1e-12).is_err());
    }
}
