//! Transplanted test functions and their Rayleigh quotients.
//!
//! A radial profile `ψ` on `[0, T]` of the distance-to-boundary variable is
//! transplanted onto a domain as `u = ψ ∘ ρ`. Because `|∇ρ| = 1` a.e., every
//! term of the Robin quadratic form reduces to a 1D quadrature against the
//! level-set length `L(t)`:
//!
//! ```text
//!   ‖∇u‖²  = ∫₀^{R} ψ'(t)² L(t) dt
//!   ‖u‖²   = ∫₀^{R} ψ(t)²  L(t) dt
//!   ∫_∂ u² = |∂M| ψ(0)²
//! ```
//!
//! Evaluating these on a domain and on the perimeter-matched geodesic disk
//! gives the comparison machinery behind the upper-bound certificates: the
//! disk dominates the norm and gradient terms, the boundary terms agree, so
//! the quotient of the transplanted disk ground state bounds the domain's
//! lowest eigenvalue chain `λ(M) ≤ quotient ≤ λ(disk)`.

use crate::domain::{Domain, DomainKind, EmpiricalProfiles};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::fem2d;
use crate::geometry::{disk_from_perimeter, Branch, GeodesicDisk};
use crate::quad::trapezoid;
use crate::radial;
use serde::Serialize;
use std::f64::consts::PI;

/// Relative perimeter mismatch allowed between a domain and its comparison
/// disk.
const PERIMETER_MATCH_RTOL: f64 = 1e-6;
/// Dense sample count for closed-form disk quadratures.
const DISK_QUAD_SAMPLES: usize = 4000;

/// A sampled radial test function `ψ` with its derivative, on a grid
/// `0 = t_0 < … < t_n = T`. Evaluation is piecewise linear.
#[derive(Debug, Clone)]
pub struct TestProfile {
    t: Vec<f64>,
    psi: Vec<f64>,
    dpsi: Vec<f64>,
}

impl TestProfile {
    pub fn new(t: Vec<f64>, psi: Vec<f64>, dpsi: Vec<f64>) -> Result<Self> {
        if t.len() < 2 || t.len() != psi.len() || t.len() != dpsi.len() {
            return Err(Error::invalid("profile arrays must have equal length >= 2".to_string()));
        }
        if t[0] != 0.0 {
            return Err(Error::invalid("profile grid must start at t = 0".to_string()));
        }
        if t.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::invalid("profile grid must be strictly increasing".to_string()));
        }
        Ok(TestProfile { t, psi, dpsi })
    }

    /// Sample a pair of closures on a uniform grid of `n` intervals.
    pub fn from_functions<F, G>(f: F, df: G, support: f64, n: usize) -> Result<Self>
    where
        F: Fn(f64) -> f64,
        G: Fn(f64) -> f64,
    {
        let t: Vec<f64> = (0..=n).map(|k| support * k as f64 / n as f64).collect();
        let psi = t.iter().map(|&x| f(x)).collect();
        let dpsi = t.iter().map(|&x| df(x)).collect();
        TestProfile::new(t, psi, dpsi)
    }

    pub fn support(&self) -> f64 {
        *self.t.last().unwrap()
    }

    pub fn value_at_zero(&self) -> f64 {
        self.psi[0]
    }

    pub fn nodes(&self) -> (&[f64], &[f64], &[f64]) {
        (&self.t, &self.psi, &self.dpsi)
    }

    fn locate(&self, x: f64) -> (usize, f64) {
        let n = self.t.len();
        if x <= 0.0 {
            return (0, 0.0);
        }
        if x >= self.t[n - 1] {
            return (n - 2, 1.0);
        }
        let i = self.t.partition_point(|&v| v <= x) - 1;
        let i = i.min(n - 2);
        ((i), (x - self.t[i]) / (self.t[i + 1] - self.t[i]))
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (i, w) = self.locate(x);
        self.psi[i] * (1.0 - w) + self.psi[i + 1] * w
    }

    pub fn eval_derivative(&self, x: f64) -> f64 {
        let (i, w) = self.locate(x);
        self.dpsi[i] * (1.0 - w) + self.dpsi[i + 1] * w
    }

    /// Multiply by a constant.
    pub fn scaled(&self, c: f64) -> TestProfile {
        TestProfile {
            t: self.t.clone(),
            psi: self.psi.iter().map(|v| c * v).collect(),
            dpsi: self.dpsi.iter().map(|v| c * v).collect(),
        }
    }
}

/// Where the level-set lengths come from: an empirical raster profile or the
/// closed forms of a geodesic disk.
pub enum ProfileSource<'a> {
    Empirical(&'a EmpiricalProfiles),
    Disk(&'a GeodesicDisk),
}

impl ProfileSource<'_> {
    pub fn in_radius(&self) -> f64 {
        match self {
            ProfileSource::Empirical(p) => p.in_radius,
            ProfileSource::Disk(d) => d.radius(),
        }
    }

    pub fn perimeter(&self) -> f64 {
        match self {
            ProfileSource::Empirical(p) => p.total_perimeter,
            ProfileSource::Disk(d) => d.perimeter(),
        }
    }

    /// Quadrature nodes `(t_k, L(t_k))` covering `[0, R]`.
    pub fn ring_nodes(&self) -> (Vec<f64>, Vec<f64>) {
        match self {
            ProfileSource::Empirical(p) => (p.t.clone(), p.ring.clone()),
            ProfileSource::Disk(d) => {
                let n = DISK_QUAD_SAMPLES;
                let r = d.radius();
                let t: Vec<f64> = (0..=n).map(|k| r * k as f64 / n as f64).collect();
                let ring = t
                    .iter()
                    .map(|&x| d.profiles_at(x).expect("t within [0, R]").0)
                    .collect();
                (t, ring)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RayleighParts {
    pub numerator: f64,
    pub denominator: f64,
    pub quotient: f64,
}

/// Rayleigh quotient of the transplanted profile: trapezoid quadrature of
/// the reduced form against `L(t)`, boundary term `β |∂M| ψ(0)²`.
pub fn transplant_rayleigh(
    source: &ProfileSource,
    psi: &TestProfile,
    beta: f64,
) -> Result<RayleighParts> {
    let r = source.in_radius();
    if psi.support() < r * (1.0 - 1e-9) {
        return Err(Error::invalid(format!(
            "profile support {} is shorter than the in-radius {r}",
            psi.support()
        )));
    }
    let (t, ring) = source.ring_nodes();
    let grad: Vec<f64> = t
        .iter()
        .zip(&ring)
        .map(|(&x, &l)| psi.eval_derivative(x).powi(2) * l)
        .collect();
    let norm: Vec<f64> = t
        .iter()
        .zip(&ring)
        .map(|(&x, &l)| psi.eval(x).powi(2) * l)
        .collect();
    let denominator = trapezoid(&t, &norm);
    if !(denominator > 0.0) {
        return Err(Error::invalid("zero denominator: ψ vanishes on the domain".to_string()));
    }
    let numerator = trapezoid(&t, &grad) + beta * source.perimeter() * psi.value_at_zero().powi(2);
    Ok(RayleighParts {
        numerator,
        denominator,
        quotient: numerator / denominator,
    })
}

/// Margins of the three transplantation comparisons for a single `ψ`:
/// `‖u_disk‖² − ‖u_M‖²`, `‖∇u_disk‖² − ‖∇u_M‖²` (both expected nonnegative),
/// and the boundary-term difference (expected zero).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PropMargins {
    pub norm_margin: f64,
    pub grad_margin: f64,
    pub boundary_gap: f64,
}

pub fn prop_main_check(
    profiles: &EmpiricalProfiles,
    disk: &GeodesicDisk,
    psi: &TestProfile,
) -> Result<PropMargins> {
    let perim = disk.perimeter();
    if (profiles.total_perimeter - perim).abs() > PERIMETER_MATCH_RTOL * perim {
        return Err(Error::invalid(format!(
            "perimeter mismatch: {} vs {perim}",
            profiles.total_perimeter
        )));
    }
    if disk.curvature() > 0.0 {
        let cap = 2.0 * PI / disk.curvature() + 1e-9;
        if profiles.total_area > cap || disk.area() > cap {
            return Err(Error::invalid(
                "comparison requires both areas within a hemisphere".to_string(),
            ));
        }
    }
    if psi.support() < disk.radius() * (1.0 - 1e-9) {
        return Err(Error::invalid("ψ must cover [0, R] of the comparison disk".to_string()));
    }
    let m_side = transplant_rayleigh(&ProfileSource::Empirical(profiles), psi, 0.0)?;
    let b_side = transplant_rayleigh(&ProfileSource::Disk(disk), psi, 0.0)?;
    let psi0 = psi.value_at_zero().powi(2);
    // With β = 0 the numerator is exactly the gradient term.
    Ok(PropMargins {
        norm_margin: b_side.denominator - m_side.denominator,
        grad_margin: b_side.numerator - m_side.numerator,
        boundary_gap: perim * psi0 - profiles.total_perimeter * psi0,
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CertificateTolerances {
    /// Propagated raster-profile uncertainty on the quotient.
    pub profile: f64,
    /// Quadrature-resolution uncertainty (grid-halving estimate).
    pub quadrature: f64,
    /// Disk eigenvalue solver uncertainty.
    pub solver: f64,
}

impl CertificateTolerances {
    pub fn total(&self) -> f64 {
        self.profile + self.quadrature + self.solver
    }
}

/// Upper-bound certificate for one domain at one coupling.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub domain_id: String,
    pub beta: f64,
    /// Exact lowest eigenvalue of the perimeter-matched hemisphere-branch
    /// disk.
    pub lambda_disk: f64,
    /// Rayleigh quotient of the transplanted disk ground state on the domain.
    pub rayleigh: f64,
    /// Direct FEM eigenvalue (planar domains, when requested).
    pub lambda_fem: Option<f64>,
    /// `lambda_disk − rayleigh`; the certified inequality needs this above
    /// `−tolerances.total()`.
    pub margin: f64,
    /// `rayleigh − lambda_fem` when FEM ran (min–max lower-bound check).
    pub fem_margin: Option<f64>,
    /// `lambda_disk − lambda_fem` when FEM ran (the end-to-end chain).
    pub chain_margin: Option<f64>,
    /// Crude FEM discretization scale `2 |λ| h²`, reported alongside.
    pub fem_error_hint: Option<f64>,
    pub tolerances: CertificateTolerances,
}

impl Certificate {
    pub fn pass(&self) -> bool {
        let tol = self.tolerances.total();
        let upper_ok = self.margin >= -tol;
        let fem_ok = match (self.fem_margin, self.fem_error_hint) {
            (Some(m), Some(h)) => m >= -(tol + h),
            _ => true,
        };
        upper_ok && fem_ok
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FemOptions {
    pub n_radial: usize,
    pub n_angular: usize,
    pub tol: f64,
}

impl Default for FemOptions {
    fn default() -> Self {
        FemOptions {
            n_radial: 28,
            n_angular: 112,
            tol: 1e-11,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct UpperBoundOptions {
    pub grid_n: usize,
    pub raster_n: usize,
    pub solver_tol: f64,
    pub fem: Option<FemOptions>,
    pub par: Parallelism,
}

impl Default for UpperBoundOptions {
    fn default() -> Self {
        UpperBoundOptions {
            grid_n: 64,
            raster_n: 512,
            solver_tol: 1e-12,
            fem: None,
            par: Parallelism::default(),
        }
    }
}

/// Absolute error bound for `∫ g(t) dA(t)` when `A` carries an absolute
/// error `eps`: integration by parts gives `eps (|g(R)| + ∫|g'|)`.
fn profile_integral_error(_t: &[f64], g: &[f64], eps: f64) -> f64 {
    let mut total_variation = 0.0;
    for i in 1..g.len() {
        total_variation += (g[i] - g[i - 1]).abs();
    }
    eps * (g.last().unwrap().abs() + total_variation)
}

/// Certify `λ_β(M) ≤ rayleigh(u_M) ≤ λ_β(B°)` for a single domain.
///
/// `B°` is the hemisphere-branch geodesic disk of matching perimeter, `u_M`
/// the transplanted disk ground state. For planar domains with `fem` set the
/// direct eigenvalue is computed as well and `rayleigh` is checked to be an
/// upper bound for it.
pub fn theorem_upper_bound(
    domain_id: &str,
    domain: &Domain,
    beta: f64,
    opts: &UpperBoundOptions,
) -> Result<Certificate> {
    if !(beta < 0.0) {
        return Err(Error::invalid(format!("beta must be < 0, got {beta}")));
    }
    let curvature = domain.curvature();
    if domain.kind() == DomainKind::Spherical {
        let a = domain.area();
        if a > 2.0 * PI + 1e-9 {
            return Err(Error::invalid(format!(
                "spherical domain area {a} exceeds the hemisphere bound 2π"
            )));
        }
    }
    let perimeter = domain.perimeter();
    let disk = disk_from_perimeter(curvature, perimeter, Branch::Hemisphere)?;
    if domain.kind() == DomainKind::Spherical && disk.area() > 2.0 * PI + 1e-9 {
        return Err(Error::invalid("comparison disk exceeds the hemisphere bound".to_string()));
    }
    let ground = radial::solve_ground_state(curvature, disk.radius(), beta, opts.solver_tol)?;
    let profiles = domain.compute_profiles(opts.grid_n, opts.raster_n, opts.par)?;
    if profiles.in_radius > disk.radius() + profiles.meta.in_radius_tol {
        return Err(Error::invalid(format!(
            "in-radius {} exceeds the comparison disk radius {} beyond tolerance",
            profiles.in_radius,
            disk.radius()
        )));
    }

    let source = ProfileSource::Empirical(&profiles);
    let parts = transplant_rayleigh(&source, &ground.profile, beta)?;

    // Quadrature uncertainty: halve the profile grid and compare.
    let halved = EmpiricalProfiles {
        t: profiles.t.iter().copied().step_by(2).collect(),
        area: profiles.area.iter().copied().step_by(2).collect(),
        ring: profiles.ring.iter().copied().step_by(2).collect(),
        ..profiles.clone()
    };
    let parts_half = transplant_rayleigh(&ProfileSource::Empirical(&halved), &ground.profile, beta)?;
    let quad_tol = (parts.quotient - parts_half.quotient).abs() * (2.0 / 3.0) + 1e-13 * parts.quotient.abs();

    // Profile uncertainty propagated through both integrals.
    let (t, _) = source.ring_nodes();
    let gsq: Vec<f64> = t.iter().map(|&x| ground.profile.eval_derivative(x).powi(2)).collect();
    let psq: Vec<f64> = t.iter().map(|&x| ground.profile.eval(x).powi(2)).collect();
    let eps = profiles.meta.area_tol;
    let err_num = profile_integral_error(&t, &gsq, eps);
    let err_den = profile_integral_error(&t, &psq, eps);
    let profile_tol = (err_num + parts.quotient.abs() * err_den) / parts.denominator;

    let solver_tol = (20.0 * opts.solver_tol + 2e-9) * ground.eigenvalue.abs();

    let mut cert = Certificate {
        domain_id: domain_id.to_string(),
        beta,
        lambda_disk: ground.eigenvalue,
        rayleigh: parts.quotient,
        lambda_fem: None,
        margin: ground.eigenvalue - parts.quotient,
        fem_margin: None,
        chain_margin: None,
        fem_error_hint: None,
        tolerances: CertificateTolerances {
            profile: profile_tol,
            quadrature: quad_tol,
            solver: solver_tol,
        },
    };

    if let (Some(fem_opts), DomainKind::Planar) = (opts.fem, domain.kind()) {
        let mesh = fem2d::mesh_star_shaped(domain, fem_opts.n_radial, fem_opts.n_angular)?;
        let fem = fem2d::solve_lowest_with(&mesh, beta, fem_opts.tol, opts.par, None)?;
        cert.lambda_fem = Some(fem.eigenvalue);
        cert.fem_margin = Some(parts.quotient - fem.eigenvalue);
        cert.chain_margin = Some(ground.eigenvalue - fem.eigenvalue);
        cert.fem_error_hint = Some(2.0 * fem.eigenvalue.abs() * fem.h_max * fem.h_max);
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn constant_profile_gives_boundary_over_area() {
        let disk = GeodesicDisk::new(0.0, 1.0).unwrap();
        let psi = TestProfile::from_functions(|_| 1.0, |_| 0.0, 1.0, 64).unwrap();
        let parts = transplant_rayleigh(&ProfileSource::Disk(&disk), &psi, -1.0).unwrap();
        // β |∂M| / |M| = -2π/π = -2
        assert!((parts.quotient + 2.0).abs() < 1e-5, "{}", parts.quotient);

        let d = corpus::ellipse(2.0, 1.0, 512).unwrap();
        let p = d.compute_profiles(48, 384, Parallelism::default()).unwrap();
        let psi_e = TestProfile::from_functions(|_| 1.0, |_| 0.0, p.in_radius, 64).unwrap();
        let pe = transplant_rayleigh(&ProfileSource::Empirical(&p), &psi_e, -1.0).unwrap();
        let expect = -p.total_perimeter / p.total_area;
        // A(R) closes to the true area within the raster tolerance.
        assert!(
            (pe.quotient - expect).abs() < 3.0 * p.meta.area_tol,
            "{} vs {expect}",
            pe.quotient
        );
    }

    #[test]
    fn ground_state_reproduces_its_eigenvalue() {
        for (k, r) in [(0.0, 1.0), (1.0, PI / 3.0)] {
            let gs = radial::solve_ground_state(k, r, -1.0, 1e-13).unwrap();
            let disk = GeodesicDisk::new(k, r).unwrap();
            let parts = transplant_rayleigh(&ProfileSource::Disk(&disk), &gs.profile, -1.0).unwrap();
            assert!(
                (parts.quotient - gs.eigenvalue).abs() < 1e-5,
                "K={k}: {} vs {}",
                parts.quotient,
                gs.eigenvalue
            );
        }
    }

    #[test]
    fn zero_profile_rejected() {
        let disk = GeodesicDisk::new(0.0, 1.0).unwrap();
        let psi = TestProfile::from_functions(|_| 0.0, |_| 0.0, 1.0, 8).unwrap();
        assert!(transplant_rayleigh(&ProfileSource::Disk(&disk), &psi, -1.0).is_err());
    }

    #[test]
    fn prop_margins_identity_case() {
        let d = corpus::circle(1.0, 1024).unwrap();
        let p = d.compute_profiles(48, 384, Parallelism::default()).unwrap();
        let disk = disk_from_perimeter(0.0, p.total_perimeter, Branch::Hemisphere).unwrap();
        let psi = TestProfile::from_functions(
            |t| (1.0 - t).cosh(),
            |t| -(1.0 - t).sinh(),
            disk.radius().max(p.in_radius),
            512,
        )
        .unwrap();
        let m = prop_main_check(&p, &disk, &psi).unwrap();
        assert_eq!(m.boundary_gap, 0.0);
        // Identity case: margins vanish up to the profile tolerance scale.
        let scale = 4.0 * p.meta.area_tol;
        assert!(m.norm_margin.abs() < scale, "{m:?}");
        assert!(m.grad_margin.abs() < scale * 2.0, "{m:?}");
    }

    #[test]
    fn prop_margins_strict_case_and_scaling_invariance() {
        let d = corpus::ellipse_with_perimeter(2.0, 2.0 * PI, 1024).unwrap();
        let p = d.compute_profiles(64, 512, Parallelism::default()).unwrap();
        let disk = disk_from_perimeter(0.0, p.total_perimeter, Branch::Hemisphere).unwrap();
        let support = disk.radius();
        let psi = TestProfile::from_functions(
            |t| 1.0 + 0.3 * (PI * t / support).cos() + 0.1 * (2.0 * PI * t / support).cos(),
            |t| {
                -0.3 * PI / support * (PI * t / support).sin()
                    - 0.2 * PI / support * (2.0 * PI * t / support).sin()
            },
            support,
            512,
        )
        .unwrap();
        let m = prop_main_check(&p, &disk, &psi).unwrap();
        assert!(m.norm_margin > 0.0, "{m:?}");
        assert!(m.grad_margin > 0.0, "{m:?}");
        assert!(m.boundary_gap.abs() < 1e-10);
        // Margins keep their sign when ψ is rescaled by a constant.
        let m2 = prop_main_check(&p, &disk, &psi.scaled(3.7)).unwrap();
        assert!(m2.norm_margin > 0.0 && m2.grad_margin > 0.0);
        assert!((m2.norm_margin - 3.7f64.powi(2) * m.norm_margin).abs() < 1e-9 * m2.norm_margin.abs());
    }

    #[test]
    fn rayleigh_scaling_covariance() {
        // Scaling the disk by s and β by 1/s scales the quotient by 1/s².
        let disk = GeodesicDisk::new(0.0, 1.0).unwrap();
        let psi = TestProfile::from_functions(|t| (-(1.3) * t).exp(), |t| -1.3 * (-(1.3) * t).exp(), 1.0, 800)
            .unwrap();
        let base = transplant_rayleigh(&ProfileSource::Disk(&disk), &psi, -1.0).unwrap();
        let s = 2.5;
        let disk_s = GeodesicDisk::new(0.0, s).unwrap();
        let (t, psi_v, dpsi_v) = psi.nodes();
        let psi_s = TestProfile::new(
            t.iter().map(|&x| x * s).collect(),
            psi_v.to_vec(),
            dpsi_v.iter().map(|&v| v / s).collect(),
        )
        .unwrap();
        let scaled = transplant_rayleigh(&ProfileSource::Disk(&disk_s), &psi_s, -1.0 / s).unwrap();
        assert!(
            (scaled.quotient - base.quotient / (s * s)).abs() < 1e-8 * base.quotient.abs(),
            "{} vs {}",
            scaled.quotient,
            base.quotient / (s * s)
        );
    }

    #[test]
    fn upper_bound_certificate_disk_equality() {
        let d = corpus::circle(1.0, 1024).unwrap();
        let opts = UpperBoundOptions::default();
        let cert = theorem_upper_bound("disk", &d, -1.0, &opts).unwrap();
        assert!(cert.pass(), "{cert:?}");
        assert!(cert.margin.abs() < cert.tolerances.total());
    }

    #[test]
    fn upper_bound_certificate_ellipse_with_fem() {
        let d = corpus::ellipse_with_perimeter(2.0, 2.0 * PI, 1024).unwrap();
        let opts = UpperBoundOptions {
            fem: Some(FemOptions::default()),
            ..Default::default()
        };
        let cert = theorem_upper_bound("ellipse-2.0", &d, -1.0, &opts).unwrap();
        assert!(cert.pass(), "{cert:?}");
        assert!(cert.margin > 0.05, "strictly below the disk: {cert:?}");
        let fem = cert.lambda_fem.unwrap();
        assert!(fem < cert.rayleigh && cert.rayleigh < cert.lambda_disk);
    }

    #[test]
    fn upper_bound_certificate_spherical_cap() {
        let cap = corpus::spherical_cap(PI / 4.0, 768).unwrap();
        let opts = UpperBoundOptions {
            raster_n: 384,
            ..Default::default()
        };
        let cert = theorem_upper_bound("cap", &cap, -1.0, &opts).unwrap();
        assert!(cert.pass(), "{cert:?}");
        assert!(cert.margin.abs() < cert.tolerances.total());
    }

    #[test]
    fn min_max_lower_bound_for_any_profile() {
        // Any transplanted profile sits above the direct eigenvalue.
        let d = corpus::ellipse_with_perimeter(1.5, 2.0 * PI, 512).unwrap();
        let p = d.compute_profiles(48, 384, Parallelism::default()).unwrap();
        let mesh = fem2d::mesh_star_shaped(&d, 24, 96).unwrap();
        let fem = fem2d::solve_lowest(&mesh, -1.0, 1e-11).unwrap();
        for decay in [0.5, 1.0, 2.0] {
            let psi = TestProfile::from_functions(
                |t| (-decay * t).exp(),
                |t| -decay * (-decay * t).exp(),
                p.in_radius * 1.01,
                400,
            )
            .unwrap();
            let parts = transplant_rayleigh(&ProfileSource::Empirical(&p), &psi, -1.0).unwrap();
            assert!(
                parts.quotient >= fem.eigenvalue - 0.02,
                "decay {decay}: {} vs {}",
                parts.quotient,
                fem.eigenvalue
            );
        }
    }
}
