//! Attractive Robin Laplacians on unbounded three-dimensional cones
//! `Λ = R₊ × m` over a spherical cross-section `m ⊂ S²`.
//!
//! For a circular cross-section of perimeter `L` the lowest eigenvalue is
//! exactly `−(2πβ/L)²`, attained by `exp(−2π x₃/L)`; the essential spectrum
//! starts at `−β²`. For a general admissible cross-section (`|∂m| < 2π`,
//! `|m| < 2π`) the same function transplanted through the distance to `∂m`
//! certifies an upper bound below the circular value.
//!
//! With `α = arcsin(L/2π)`, `s = sin α`, `c(t) = cos(α − t)`, the transplanted
//! function at unit coupling is `u(r, x) = exp(−r·c(ρ(x))/s)` and every term
//! of the quadratic form reduces to a 1D quadrature over the cross-section
//! profiles, because the `r`-integrals are elementary:
//! `∫₀^∞ rᵏ e^{−ar} dr = k!/a^{k+1}`. Concretely
//!
//! ```text
//!   ‖∇u‖²   = ∫ [ s/(4c) + sin²(α−t)·s/(4c³) ] L(t) dt
//!   ‖u‖²    = (s³/4) ∫ L(t)/c(t)³ dt
//!   ∫_∂ u²  = |∂m| · s²/(4 cos²α)
//! ```
//!
//! General `β < 0` is recovered by the exact scaling `λ_β = β² λ_{−1}`.

use crate::domain::{Domain, DomainKind, EmpiricalProfiles};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::quad::trapezoid;
use serde::Serialize;
use std::f64::consts::PI;

/// Admissibility margin below 2π at which the half-space degeneration
/// warning fires.
const NEAR_HALFSPACE_MARGIN: f64 = 1e-3;

/// Exact ground data of the circular cone with cross-section perimeter `L`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CircularCone {
    pub eigenvalue: f64,
    /// Half-aperture `α = arcsin(L/2π)`.
    pub half_aperture: f64,
    /// Decay rate of the `β = −1` eigenfunction `exp(−2π x₃ / L)`.
    pub decay_rate: f64,
}

pub fn circular_cone_eigenvalue(perimeter: f64, beta: f64) -> Result<CircularCone> {
    if !(perimeter > 0.0 && perimeter < 2.0 * PI) {
        return Err(Error::invalid(format!(
            "cross-section perimeter must lie in (0, 2π), got {perimeter}"
        )));
    }
    if !(beta < 0.0) {
        return Err(Error::invalid(format!("beta must be < 0, got {beta}")));
    }
    let ratio = 2.0 * PI / perimeter;
    Ok(CircularCone {
        eigenvalue: -(ratio * beta) * (ratio * beta),
        half_aperture: (perimeter / (2.0 * PI)).asin(),
        decay_rate: ratio,
    })
}

/// Bottom of the essential spectrum.
pub fn essential_threshold(beta: f64) -> f64 {
    -beta * beta
}

/// A spherical cross-section with its level-set profiles.
pub struct ConeCrossSection {
    pub perimeter: f64,
    pub area: f64,
    pub profiles: EmpiricalProfiles,
}

impl ConeCrossSection {
    pub fn from_domain(
        domain: &Domain,
        grid_n: usize,
        raster_n: usize,
        par: Parallelism,
    ) -> Result<Self> {
        if domain.kind() != DomainKind::Spherical {
            return Err(Error::invalid("cone cross-sections live on the unit sphere".to_string()));
        }
        let perimeter = domain.perimeter();
        let area = domain.area();
        if perimeter >= 2.0 * PI {
            return Err(Error::invalid(format!(
                "cross-section perimeter {perimeter} must be below 2π"
            )));
        }
        if area >= 2.0 * PI {
            return Err(Error::invalid(format!(
                "cross-section area {area} must be below 2π"
            )));
        }
        let profiles = domain.compute_profiles(grid_n, raster_n, par)?;
        Ok(ConeCrossSection {
            perimeter,
            area,
            profiles,
        })
    }
}

/// The three reduced terms of the cone form at `β = −1`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConeTerms {
    pub gradient: f64,
    pub norm: f64,
    pub boundary: f64,
}

/// Evaluate the reduced integrals on quadrature nodes `(t, L(t))`.
fn cone_terms(t: &[f64], ring: &[f64], perimeter: f64, half_aperture: f64) -> Result<ConeTerms> {
    let s = half_aperture.sin();
    let mut grad = Vec::with_capacity(t.len());
    let mut norm = Vec::with_capacity(t.len());
    for (&x, &l) in t.iter().zip(ring) {
        let c = (half_aperture - x).cos();
        if !(c > 0.0) {
            return Err(Error::invalid(format!(
                "profile reaches past the quarter-sphere: cos(α - t) <= 0 at t = {x}"
            )));
        }
        let sin_a_t = (half_aperture - x).sin();
        grad.push((s / (4.0 * c) + sin_a_t * sin_a_t * s / (4.0 * c * c * c)) * l);
        norm.push(s * s * s / 4.0 * l / (c * c * c));
    }
    let ca = half_aperture.cos();
    Ok(ConeTerms {
        gradient: trapezoid(t, &grad),
        norm: trapezoid(t, &norm),
        boundary: perimeter * s * s / (4.0 * ca * ca),
    })
}

/// Closed-form nodes for the geodesic-disk cross-section of the same
/// perimeter (`L_b(t) = 2π sin(α − t)` on `[0, α]`).
fn cap_nodes(half_aperture: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let t: Vec<f64> = (0..=n).map(|k| half_aperture * k as f64 / n as f64).collect();
    let ring = t.iter().map(|&x| 2.0 * PI * (half_aperture - x).sin()).collect();
    (t, ring)
}

/// Slice-wise comparison margins against the circular cross-section.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConeTermMargins {
    /// `‖∇u_b‖² − ‖∇u_m‖²` (expected nonnegative).
    pub grad_margin: f64,
    /// `‖u_b‖² − ‖u_m‖²` (expected nonnegative).
    pub norm_margin: f64,
    /// Boundary-term difference (expected zero).
    pub boundary_gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeCertificate {
    pub perimeter: f64,
    pub area: f64,
    pub beta: f64,
    pub half_aperture: f64,
    /// Rayleigh quotient of the transplanted circular eigenfunction.
    pub quotient: f64,
    /// Exact circular-cone value `−(2πβ/L)²`.
    pub circular_value: f64,
    /// `circular_value − quotient`; nonnegative within tolerance.
    pub margin: f64,
    pub term_margins: ConeTermMargins,
    pub profile_tol: f64,
    pub quadrature_tol: f64,
    /// Set when the cross-section is within 1e-3 of the half-space limit,
    /// where the bound degenerates.
    pub near_halfspace: bool,
}

impl ConeCertificate {
    pub fn pass(&self) -> bool {
        let tol = self.profile_tol + self.quadrature_tol;
        self.margin >= -tol
            && self.term_margins.grad_margin >= -tol
            && self.term_margins.norm_margin >= -tol
    }
}

/// Certify `λ_β(Λ_m) ≤ quotient ≤ −(2πβ/L)²` for a cross-section through its
/// empirical profiles.
pub fn cone_rayleigh_upper_bound(
    section: &ConeCrossSection,
    beta: f64,
) -> Result<ConeCertificate> {
    if !(beta < 0.0) {
        return Err(Error::invalid(format!("beta must be < 0, got {beta}")));
    }
    let perimeter = section.perimeter;
    let circular = circular_cone_eigenvalue(perimeter, beta)?;
    let alpha = circular.half_aperture;
    let p = &section.profiles;

    let m_terms = cone_terms(&p.t, &p.ring, perimeter, alpha)?;
    let (tb, rb) = cap_nodes(alpha, 4000);
    let b_terms = cone_terms(&tb, &rb, perimeter, alpha)?;

    let quotient_unit = (m_terms.gradient - m_terms.boundary) / m_terms.norm;
    let quotient = beta * beta * quotient_unit;

    // Quadrature estimate from grid halving.
    let th: Vec<f64> = p.t.iter().copied().step_by(2).collect();
    let rh: Vec<f64> = p.ring.iter().copied().step_by(2).collect();
    let half_terms = cone_terms(&th, &rh, perimeter, alpha)?;
    let q_half = (half_terms.gradient - half_terms.boundary) / half_terms.norm;
    let quadrature_tol = beta * beta * ((quotient_unit - q_half).abs() * (2.0 / 3.0) + 1e-13);

    // Profile error propagation: both integrals are ∫ g dA with g smooth.
    let eps = p.meta.area_tol;
    let s = alpha.sin();
    let g_grad = |x: f64| {
        let c = (alpha - x).cos();
        let sa = (alpha - x).sin();
        s / (4.0 * c) + sa * sa * s / (4.0 * c * c * c)
    };
    let g_norm = |x: f64| {
        let c = (alpha - x).cos();
        s * s * s / (4.0 * c * c * c)
    };
    let tv = |g: &dyn Fn(f64) -> f64| -> f64 {
        let mut acc = 0.0;
        for w in p.t.windows(2) {
            acc += (g(w[1]) - g(w[0])).abs();
        }
        acc + g(*p.t.last().unwrap()).abs()
    };
    let err_num = eps * tv(&g_grad);
    let err_den = eps * tv(&g_norm);
    let profile_tol =
        beta * beta * (err_num + quotient_unit.abs() * err_den) / m_terms.norm;

    Ok(ConeCertificate {
        perimeter,
        area: section.area,
        beta,
        half_aperture: alpha,
        quotient,
        circular_value: circular.eigenvalue,
        margin: circular.eigenvalue - quotient,
        term_margins: ConeTermMargins {
            grad_margin: b_terms.gradient - m_terms.gradient,
            norm_margin: b_terms.norm - m_terms.norm,
            boundary_gap: b_terms.boundary - m_terms.boundary,
        },
        profile_tol,
        quadrature_tol,
        near_halfspace: perimeter > 2.0 * PI - NEAR_HALFSPACE_MARGIN
            || section.area > 2.0 * PI - NEAR_HALFSPACE_MARGIN,
    })
}

/// Transplant the circular eigenfunction onto the geodesic-disk cross-section
/// of perimeter `L` using the closed-form profiles: the quotient must
/// reproduce `−(2π/L)²` (β = −1) up to quadrature error.
pub fn circular_self_consistency(perimeter: f64, samples: usize) -> Result<f64> {
    let circular = circular_cone_eigenvalue(perimeter, -1.0)?;
    let alpha = circular.half_aperture;
    let (t, ring) = cap_nodes(alpha, samples);
    let terms = cone_terms(&t, &ring, perimeter, alpha)?;
    Ok((terms.gradient - terms.boundary) / terms.norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn circular_values() {
        let c = circular_cone_eigenvalue(PI, -1.0).unwrap();
        assert_eq!(c.eigenvalue, -4.0);
        assert!((c.half_aperture - (0.5f64).asin()).abs() < 1e-15);
        let c2 = circular_cone_eigenvalue(PI, -2.0).unwrap();
        assert_eq!(c2.eigenvalue, -16.0);
        // Near the half-space limit the eigenvalue meets the threshold.
        let c3 = circular_cone_eigenvalue(2.0 * PI - 1e-9, -1.0).unwrap();
        assert!((c3.eigenvalue - essential_threshold(-1.0)).abs() < 1e-8);
        assert!(circular_cone_eigenvalue(7.0, -1.0).is_err());
        assert!(circular_cone_eigenvalue(PI, 1.0).is_err());
    }

    #[test]
    fn essential_threshold_values() {
        assert_eq!(essential_threshold(-1.0), -1.0);
        assert_eq!(essential_threshold(-2.0), -4.0);
        assert!(essential_threshold(-1e-9).abs() < 1e-17);
    }

    #[test]
    fn self_consistency_on_caps() {
        for &l in &[0.5 * PI, PI, 1.5 * PI] {
            let q = circular_self_consistency(l, 20_000).unwrap();
            let exact = -(2.0 * PI / l).powi(2);
            assert!(
                (q - exact).abs() < 1e-5,
                "L = {l}: {q} vs {exact}"
            );
        }
    }

    /// The 1D reduction agrees with a 2D trapezoid quadrature of the full
    /// form on one case.
    #[test]
    fn reduction_matches_2d_quadrature() {
        let perimeter = PI;
        let alpha = (perimeter / (2.0 * PI)).asin();
        let s = alpha.sin();
        let (t, ring) = cap_nodes(alpha, 800);
        let terms = cone_terms(&t, &ring, perimeter, alpha).unwrap();

        // 2D quadrature over (r, t) with truncation at r_max.
        let c_min = alpha.cos();
        let r_max = 25.0 * s / (2.0 * c_min);
        let nr = 6000;
        let dr = r_max / nr as f64;
        let mut grad2 = 0.0;
        let mut norm2 = 0.0;
        let mut bdry2 = 0.0;
        for ir in 0..=nr {
            let r = ir as f64 * dr;
            let wr = if ir == 0 || ir == nr { 0.5 } else { 1.0 } * dr;
            let mut grad_t = Vec::with_capacity(t.len());
            let mut norm_t = Vec::with_capacity(t.len());
            for (&x, &l) in t.iter().zip(&ring) {
                let c = (alpha - x).cos();
                let sa = (alpha - x).sin();
                let u = (-r * c / s).exp();
                let du_r = (c / s) * u;
                let du_t = (r * sa / s) * u;
                grad_t.push((du_r * du_r * r * r + du_t * du_t) * l);
                norm_t.push(u * u * r * r * l);
            }
            grad2 += wr * trapezoid(&t, &grad_t);
            norm2 += wr * trapezoid(&t, &norm_t);
            let ub = (-r * alpha.cos() / s).exp();
            bdry2 += wr * perimeter * ub * ub * r;
        }
        assert!((grad2 - terms.gradient).abs() < 1e-4 * terms.gradient, "{grad2} vs {}", terms.gradient);
        assert!((norm2 - terms.norm).abs() < 1e-4 * terms.norm);
        assert!((bdry2 - terms.boundary).abs() < 1e-4 * terms.boundary);
    }

    #[test]
    fn cap_cross_section_certificate_tight() {
        let cap = corpus::spherical_cap((0.5f64).asin(), 768).unwrap();
        let cs = ConeCrossSection::from_domain(&cap, 48, 384, Parallelism::default()).unwrap();
        let cert = cone_rayleigh_upper_bound(&cs, -1.0).unwrap();
        assert!(cert.pass(), "{cert:?}");
        // Equality case up to profile noise.
        assert!(
            (cert.quotient - cert.circular_value).abs() < cert.profile_tol + cert.quadrature_tol,
            "{cert:?}"
        );
        assert!(!cert.near_halfspace);
    }

    #[test]
    fn noncircular_cross_section_strictly_below() {
        let blob = corpus::spherical_blob_with_perimeter(0.12, 3, PI, 768).unwrap();
        let cs = ConeCrossSection::from_domain(&blob, 48, 384, Parallelism::default()).unwrap();
        let cert = cone_rayleigh_upper_bound(&cs, -1.0).unwrap();
        assert!(cert.pass(), "{cert:?}");
        assert!(cert.quotient < -4.0, "strictly below the circular value: {cert:?}");
        assert!(cert.term_margins.grad_margin > 0.0);
        assert!(cert.term_margins.norm_margin > 0.0);
        // Discrete spectrum exists: the bound is below the threshold.
        assert!(cert.quotient < essential_threshold(-1.0));
        // Exact β² scaling of the certificate.
        let cert2 = cone_rayleigh_upper_bound(&cs, -2.0).unwrap();
        assert!((cert2.quotient - 4.0 * cert.quotient).abs() < 1e-12 * cert.quotient.abs());
    }

    #[test]
    fn oversized_cross_sections_rejected() {
        let big = corpus::spherical_cap(2.0, 512).unwrap(); // area > 2π
        assert!(ConeCrossSection::from_domain(&big, 48, 384, Parallelism::default()).is_err());
    }
}
