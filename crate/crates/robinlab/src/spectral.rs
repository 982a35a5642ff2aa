//! The eigenvalue curve `β ↦ λ_β(M)` and everything derived from it:
//! Dirichlet-to-Neumann lowest eigenvalues by Robin inversion, the
//! weak-coupling slope `|∂M|/|M|`, and the beyond-hemisphere two-cap
//! comparison.
//!
//! The curve is strictly increasing in `β` with `λ_0 = 0`, so for `λ < 0`
//! there is a unique `β* < 0` with `λ_{β*}(M) = λ`; the lowest eigenvalue of
//! the Dirichlet-to-Neumann map at energy `λ` is then `σ_λ(M) = −β*`. The
//! DtN operator itself is never assembled.

use crate::bessel::i1_over_i0;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::fem2d::{self, TriMesh};
use crate::geometry::{disk_from_perimeter, Branch, GeodesicDisk};
use crate::radial;

/// One eigenvalue solver driving a spectral curve.
pub trait RobinSolver {
    fn lambda(&mut self, beta: f64) -> Result<f64>;
    fn perimeter(&self) -> f64;
    fn area(&self) -> f64;
}

/// Shooting-backed solver for a geodesic disk or cap.
pub struct RadialDiskSolver {
    pub disk: GeodesicDisk,
    pub tol: f64,
}

impl RadialDiskSolver {
    pub fn new(disk: GeodesicDisk, tol: f64) -> Self {
        RadialDiskSolver { disk, tol }
    }
}

impl RobinSolver for RadialDiskSolver {
    fn lambda(&mut self, beta: f64) -> Result<f64> {
        radial::solve_mode(self.disk.curvature(), self.disk.radius(), beta, 0, self.tol)
    }

    fn perimeter(&self) -> f64 {
        self.disk.perimeter()
    }

    fn area(&self) -> f64 {
        self.disk.area()
    }
}

/// FEM-backed solver for a planar domain; consecutive solves reuse the last
/// eigenvector as the start vector.
pub struct FemDomainSolver {
    mesh: TriMesh,
    tol: f64,
    perimeter: f64,
    area: f64,
    par: Parallelism,
    warm: Option<Vec<f64>>,
}

impl FemDomainSolver {
    pub fn from_domain(
        domain: &Domain,
        n_radial: usize,
        n_angular: usize,
        tol: f64,
        par: Parallelism,
    ) -> Result<Self> {
        let mesh = fem2d::mesh_star_shaped(domain, n_radial, n_angular)?;
        Ok(FemDomainSolver {
            mesh,
            tol,
            perimeter: domain.perimeter(),
            area: domain.area(),
            par,
            warm: None,
        })
    }
}

impl RobinSolver for FemDomainSolver {
    fn lambda(&mut self, beta: f64) -> Result<f64> {
        let res = fem2d::solve_lowest_with(&self.mesh, beta, self.tol, self.par, self.warm.as_deref())?;
        self.warm = Some(res.coefficients);
        Ok(res.eigenvalue)
    }

    fn perimeter(&self) -> f64 {
        self.perimeter
    }

    fn area(&self) -> f64 {
        self.area
    }
}

/// A cached, monotone sampled map `β ↦ λ_β`.
pub struct SpectralCurve<S: RobinSolver> {
    solver: S,
    samples: Vec<(f64, f64)>,
}

impl<S: RobinSolver> SpectralCurve<S> {
    pub fn new(solver: S) -> Self {
        SpectralCurve {
            solver,
            samples: Vec::new(),
        }
    }

    pub fn solver(&self) -> &S {
        &self.solver
    }

    pub fn eval(&mut self, beta: f64) -> Result<f64> {
        if let Some(&(_, l)) = self.samples.iter().find(|&&(b, _)| b == beta) {
            return Ok(l);
        }
        let lambda = self.solver.lambda(beta)?;
        let pos = self.samples.partition_point(|&(b, _)| b < beta);
        self.samples.insert(pos, (beta, lambda));
        Ok(lambda)
    }

    pub fn sample_grid(&mut self, betas: &[f64]) -> Result<Vec<(f64, f64)>> {
        betas.iter().map(|&b| self.eval(b).map(|l| (b, l))).collect()
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    /// Strict monotonicity of everything sampled so far.
    pub fn is_strictly_increasing(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].1 > w[0].1)
    }
}

/// Lowest Dirichlet-to-Neumann eigenvalue at energy `lambda < 0` by
/// inverting the Robin curve: bisection (with a secant shortcut) for the
/// `β* < 0` with `λ_{β*} = lambda`; returns `σ = −β* > 0`.
pub fn dtn_lowest<S: RobinSolver>(
    curve: &mut SpectralCurve<S>,
    lambda: f64,
    tol: f64,
) -> Result<f64> {
    if !(lambda < 0.0) {
        return Err(Error::invalid(format!("dtn_lowest needs lambda < 0, got {lambda}")));
    }
    // Bracket: λ(β) is increasing with λ(0⁻) = 0 > lambda.
    let mut hi = -1e-8;
    let mut f_hi = curve.eval(hi)? - lambda;
    let mut expand = 0;
    while f_hi < 0.0 {
        hi *= 1e-2;
        f_hi = curve.eval(hi)? - lambda;
        expand += 1;
        if expand > 20 {
            return Err(Error::solver("lambda not reachable near beta = 0".to_string()));
        }
    }
    let mut lo = -1.0;
    let mut f_lo = curve.eval(lo)? - lambda;
    expand = 0;
    while f_lo > 0.0 {
        lo *= 2.0;
        f_lo = curve.eval(lo)? - lambda;
        expand += 1;
        if expand > 60 {
            return Err(Error::solver(format!(
                "lambda {lambda} outside the achievable range on the search bracket"
            )));
        }
    }
    for _ in 0..200 {
        if f_lo.abs() <= tol {
            return Ok(-lo);
        }
        if f_hi.abs() <= tol {
            return Ok(-hi);
        }
        if (hi - lo).abs() <= 1e-15 * lo.abs().max(hi.abs()) {
            break;
        }
        // Secant candidate, safeguarded to the middle half of the bracket.
        let mut mid = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        let quarter = 0.25 * (hi - lo);
        if !(mid > lo + 0.02 * quarter && mid < hi - 0.02 * quarter) {
            mid = 0.5 * (lo + hi);
        }
        let f_mid = curve.eval(mid)? - lambda;
        if f_mid < 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(-0.5 * (lo + hi))
}

/// Disk Dirichlet-to-Neumann oracle at energy `λ = −k²` on radius `R`:
/// `σ = k I1(kR)/I0(kR)`.
pub fn disk_dtn_oracle(radius: f64, lambda: f64) -> f64 {
    assert!(lambda < 0.0 && radius > 0.0);
    let k = (-lambda).sqrt();
    k * i1_over_i0(k * radius)
}

/// Weak-coupling slope `(d/dβ λ_β)|₀ = |∂M|/|M|`.
pub fn weak_slope(domain: &Domain) -> f64 {
    domain.perimeter() / domain.area()
}

#[derive(Debug, Clone, Copy)]
pub struct WeakSlopeCheck {
    pub exact: f64,
    pub finite_difference: f64,
    pub relative_error: f64,
}

/// Second-order one-sided difference of the curve at `β = 0` (using
/// `λ_0 = 0`): `(λ_{−2h} − 4 λ_{−h}) / (2h)`, compared against `expected`.
pub fn weak_slope_check<S: RobinSolver>(
    solver: &mut S,
    expected: f64,
    h: f64,
) -> Result<WeakSlopeCheck> {
    let l1 = solver.lambda(-h)?;
    let l2 = solver.lambda(-2.0 * h)?;
    let fd = (l2 - 4.0 * l1) / (2.0 * h);
    Ok(WeakSlopeCheck {
        exact: expected,
        finite_difference: fd,
        relative_error: (fd - expected).abs() / expected.abs(),
    })
}

/// Both spherical caps bounded by a geodesic circle of length `perimeter`,
/// solved at coupling `beta`. Beyond the hemisphere the perimeter-matched
/// comparison reverses: the larger cap has the higher (less negative)
/// eigenvalue at weak coupling.
#[derive(Debug, Clone, Copy)]
pub struct CapComparison {
    pub beta: f64,
    pub small_radius: f64,
    pub small_area: f64,
    pub small_lambda: f64,
    pub large_radius: f64,
    pub large_area: f64,
    pub large_lambda: f64,
    /// `λ(large) − λ(small)`, strictly positive in the weak-coupling regime.
    pub gap: f64,
    /// The weak-coupling slope difference `L (1/|small| − 1/|large|) > 0`.
    pub slope_gap: f64,
}

pub fn counterexample_caps(perimeter: f64, beta: f64, tol: f64) -> Result<CapComparison> {
    if !(perimeter > 0.0 && perimeter < 2.0 * std::f64::consts::PI) {
        return Err(Error::invalid(format!(
            "cap perimeter must lie in (0, 2π), got {perimeter}"
        )));
    }
    if !(beta < 0.0) {
        return Err(Error::invalid(format!("beta must be < 0, got {beta}")));
    }
    let small = disk_from_perimeter(1.0, perimeter, Branch::Hemisphere)?;
    let large = disk_from_perimeter(1.0, perimeter, Branch::Complement)?;
    let small_lambda = radial::solve_mode(1.0, small.radius(), beta, 0, tol)?;
    let large_lambda = radial::solve_mode(1.0, large.radius(), beta, 0, tol)?;
    let gap = large_lambda - small_lambda;
    let slope_gap = perimeter * (1.0 / small.area() - 1.0 / large.area());
    if gap <= 0.0 {
        return Err(Error::solver(format!(
            "cap ordering did not reverse at beta = {beta}: gap {gap} (coupling too strong \
             for the weak-coupling regime; slope gap is {slope_gap})"
        )));
    }
    Ok(CapComparison {
        beta,
        small_radius: small.radius(),
        small_area: small.area(),
        small_lambda,
        large_radius: large.radius(),
        large_area: large.area(),
        large_lambda,
        gap,
        slope_gap,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct DtnComparison {
    pub lambda: f64,
    pub sigma_domain: f64,
    pub sigma_disk: f64,
    /// `σ_λ(B°) − σ_λ(M)`, nonnegative within tolerance.
    pub margin: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct DtnOptions {
    pub n_radial: usize,
    pub n_angular: usize,
    pub fem_tol: f64,
    pub radial_tol: f64,
    pub root_tol: f64,
    pub par: Parallelism,
}

impl Default for DtnOptions {
    fn default() -> Self {
        DtnOptions {
            n_radial: 24,
            n_angular: 96,
            fem_tol: 1e-11,
            radial_tol: 1e-12,
            root_tol: 1e-8,
            par: Parallelism::default(),
        }
    }
}

/// `σ_λ(M) ≤ σ_λ(B°)` for a planar domain against its perimeter-matched
/// disk, both sides through the Robin inversion.
pub fn dtn_isoperimetric_check(
    domain: &Domain,
    lambda: f64,
    opts: &DtnOptions,
) -> Result<DtnComparison> {
    let disk = disk_from_perimeter(domain.curvature(), domain.perimeter(), Branch::Hemisphere)?;
    let mut disk_curve = SpectralCurve::new(RadialDiskSolver::new(disk, opts.radial_tol));
    let sigma_disk = dtn_lowest(&mut disk_curve, lambda, opts.root_tol)?;
    let mut fem_curve = SpectralCurve::new(FemDomainSolver::from_domain(
        domain,
        opts.n_radial,
        opts.n_angular,
        opts.fem_tol,
        opts.par,
    )?);
    let sigma_domain = dtn_lowest(&mut fem_curve, lambda, opts.root_tol)?;
    Ok(DtnComparison {
        lambda,
        sigma_domain,
        sigma_disk,
        margin: sigma_disk - sigma_domain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use std::f64::consts::PI;

    #[test]
    fn dtn_disk_matches_bessel_oracle() {
        let disk = GeodesicDisk::new(0.0, 1.0).unwrap();
        let mut curve = SpectralCurve::new(RadialDiskSolver::new(disk, 1e-13));
        for &lambda in &[-0.25, -1.0, -4.0] {
            let sigma = dtn_lowest(&mut curve, lambda, 1e-10).unwrap();
            let oracle = disk_dtn_oracle(1.0, lambda);
            assert!(
                (sigma - oracle).abs() < 1e-6,
                "λ={lambda}: {sigma} vs {oracle}"
            );
            assert!(sigma > 0.0);
        }
        assert!(curve.is_strictly_increasing());
    }

    #[test]
    fn dtn_decreasing_in_lambda_and_vanishing_at_zero() {
        let disk = GeodesicDisk::new(0.0, 1.0).unwrap();
        let mut curve = SpectralCurve::new(RadialDiskSolver::new(disk, 1e-13));
        let s1 = dtn_lowest(&mut curve, -4.0, 1e-10).unwrap();
        let s2 = dtn_lowest(&mut curve, -1.0, 1e-10).unwrap();
        let s3 = dtn_lowest(&mut curve, -0.05, 1e-10).unwrap();
        assert!(s1 > s2 && s2 > s3, "σ must decrease as λ increases");
        // λ → 0⁻ sends σ → 0 (Steklov limit).
        assert!(s3 < 0.12, "σ(-0.05) = {s3}");
        assert!(dtn_lowest(&mut curve, 1.0, 1e-10).is_err());
    }

    #[test]
    fn dtn_inversion_round_trip() {
        // Re-solving at β = −σ_λ must return λ.
        let cap = GeodesicDisk::new(1.0, PI / 3.0).unwrap();
        let mut curve = SpectralCurve::new(RadialDiskSolver::new(cap, 1e-13));
        for &lambda in &[-0.5, -2.0] {
            let sigma = dtn_lowest(&mut curve, lambda, 1e-9).unwrap();
            let back = radial::solve_mode(1.0, PI / 3.0, -sigma, 0, 1e-13).unwrap();
            assert!((back - lambda).abs() < 1e-6, "λ={lambda}: returned {back}");
        }
    }

    #[test]
    fn weak_slope_disk_and_cap() {
        let disk_domain = corpus::circle(1.0, 1024).unwrap();
        assert!((weak_slope(&disk_domain) - 2.0).abs() < 1e-9);
        let mut solver = RadialDiskSolver::new(GeodesicDisk::new(0.0, 1.0).unwrap(), 1e-13);
        let chk = weak_slope_check(&mut solver, 2.0, 1e-3).unwrap();
        assert!(chk.relative_error < 0.01, "{chk:?}");
        // Hemisphere: |∂M|/|M| = 2π / 2π = 1.
        let mut cap_solver = RadialDiskSolver::new(GeodesicDisk::new(1.0, 0.5 * PI).unwrap(), 1e-13);
        let chk_cap = weak_slope_check(&mut cap_solver, 1.0, 1e-3).unwrap();
        assert!(chk_cap.relative_error < 0.01, "{chk_cap:?}");
    }

    #[test]
    fn weak_slope_fem_ellipse() {
        let d = corpus::ellipse(1.5, 1.0, 512).unwrap();
        let expected = weak_slope(&d);
        let mut solver =
            FemDomainSolver::from_domain(&d, 24, 96, 1e-12, Parallelism::default()).unwrap();
        let chk = weak_slope_check(&mut solver, expected, 1e-3).unwrap();
        assert!(chk.relative_error < 0.01, "{chk:?}");
    }

    #[test]
    fn two_cap_counterexample() {
        let cmp = counterexample_caps(PI, -0.01, 1e-12).unwrap();
        assert!((cmp.small_radius - PI / 6.0).abs() < 1e-12);
        assert!((cmp.large_radius - 5.0 * PI / 6.0).abs() < 1e-12);
        assert!(cmp.small_lambda < 0.0 && cmp.large_lambda < 0.0);
        assert!(cmp.gap > 1e-8, "{cmp:?}");
        assert!(cmp.slope_gap > 0.0);
        // Weak-coupling prediction: λ ≈ β |∂|/|area|.
        let predict_small = -0.01 * PI / cmp.small_area;
        assert!((cmp.small_lambda - predict_small).abs() < 0.05 * predict_small.abs());
    }

    #[test]
    fn dtn_isoperimetric_margin_positive() {
        let d = corpus::ellipse_with_perimeter(2.0, 2.0 * PI, 512).unwrap();
        let cmp = dtn_isoperimetric_check(&d, -1.0, &DtnOptions::default()).unwrap();
        assert!(cmp.margin > 0.0, "{cmp:?}");
        assert!(cmp.sigma_domain > 0.0 && cmp.sigma_disk > 0.0);
    }
}
