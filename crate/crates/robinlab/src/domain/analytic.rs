//! Analytic boundary descriptors with oracle-grade perimeter and area.
//!
//! Planar shapes are star-shaped polar graphs `r(θ)`; spherical shapes are
//! colatitude graphs `θ(φ)` around the north pole. Perimeter and area come
//! from uniform trapezoid sums of the smooth periodic integrands, which
//! converge to machine precision.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Quadrature points for the periodic integrals.
const PERIODIC_N: usize = 16384;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AnalyticShape {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    /// `|x/a|^p + |y/b|^p = 1` with even integer exponent `p >= 4`.
    Superellipse { a: f64, b: f64, p: u32 },
    /// `r(θ) = base (1 + amplitude cos(lobes θ))`.
    Star { base: f64, amplitude: f64, lobes: u32 },
    SphericalCap { radius: f64 },
    /// Colatitude graph `θ(φ) = base (1 + amplitude cos(lobes φ))`.
    SphericalBlob { base: f64, amplitude: f64, lobes: u32 },
}

fn periodic_integral<F: Fn(f64) -> f64>(f: F) -> f64 {
    let n = PERIODIC_N;
    let h = 2.0 * PI / n as f64;
    (0..n).map(|i| f((i as f64 + 0.5) * h)).sum::<f64>() * h
}

impl AnalyticShape {
    pub fn is_planar(&self) -> bool {
        !matches!(
            self,
            AnalyticShape::SphericalCap { .. } | AnalyticShape::SphericalBlob { .. }
        )
    }

    /// Polar radius and its θ-derivative for the planar shapes.
    pub fn polar(&self, theta: f64) -> (f64, f64) {
        match *self {
            AnalyticShape::Circle { radius } => (radius, 0.0),
            AnalyticShape::Ellipse { a, b } => {
                // r = ab / sqrt(b²cos² + a²sin²)
                let (s, c) = theta.sin_cos();
                let g = (b * b * c * c + a * a * s * s).sqrt();
                let r = a * b / g;
                let dg = (a * a - b * b) * s * c / g;
                (r, -a * b * dg / (g * g))
            }
            AnalyticShape::Superellipse { a, b, p } => {
                let (s, c) = theta.sin_cos();
                let p = p as i32;
                let u = (c / a).abs().powi(p);
                let v = (s / b).abs().powi(p);
                let f = u + v;
                let r = f.powf(-1.0 / p as f64);
                // dF/dθ for even p: p c^{p-1}(-s)/a^p + p s^{p-1} c / b^p
                let df = p as f64 * (-c.powi(p - 1) * s / a.powi(p) + s.powi(p - 1) * c / b.powi(p));
                let dr = -r / (p as f64 * f) * df;
                (r, dr)
            }
            AnalyticShape::Star { base, amplitude, lobes } => {
                let r = base * (1.0 + amplitude * (lobes as f64 * theta).cos());
                let dr = -base * amplitude * lobes as f64 * (lobes as f64 * theta).sin();
                (r, dr)
            }
            _ => panic!("polar() called on a spherical shape"),
        }
    }

    /// Colatitude and φ-derivative for the spherical shapes.
    pub fn colatitude(&self, phi: f64) -> (f64, f64) {
        match *self {
            AnalyticShape::SphericalCap { radius } => (radius, 0.0),
            AnalyticShape::SphericalBlob { base, amplitude, lobes } => {
                let t = base * (1.0 + amplitude * (lobes as f64 * phi).cos());
                let dt = -base * amplitude * lobes as f64 * (lobes as f64 * phi).sin();
                (t, dt)
            }
            _ => panic!("colatitude() called on a planar shape"),
        }
    }

    pub fn perimeter(&self) -> f64 {
        match *self {
            AnalyticShape::Circle { radius } => 2.0 * PI * radius,
            AnalyticShape::SphericalCap { radius } => 2.0 * PI * radius.sin(),
            AnalyticShape::Ellipse { .. }
            | AnalyticShape::Superellipse { .. }
            | AnalyticShape::Star { .. } => periodic_integral(|t| {
                let (r, dr) = self.polar(t);
                (r * r + dr * dr).sqrt()
            }),
            AnalyticShape::SphericalBlob { .. } => periodic_integral(|p| {
                let (t, dt) = self.colatitude(p);
                (dt * dt + t.sin().powi(2)).sqrt()
            }),
        }
    }

    pub fn area(&self) -> f64 {
        match *self {
            AnalyticShape::Circle { radius } => PI * radius * radius,
            AnalyticShape::Ellipse { a, b } => PI * a * b,
            AnalyticShape::SphericalCap { radius } => 2.0 * PI * (1.0 - radius.cos()),
            AnalyticShape::Superellipse { .. } | AnalyticShape::Star { .. } => {
                0.5 * periodic_integral(|t| self.polar(t).0.powi(2))
            }
            AnalyticShape::SphericalBlob { .. } => {
                periodic_integral(|p| 1.0 - self.colatitude(p).0.cos())
            }
        }
    }

    /// Similarity-scale a planar shape; spherical shapes do not scale.
    pub fn scaled(&self, s: f64) -> Option<AnalyticShape> {
        match *self {
            AnalyticShape::Circle { radius } => Some(AnalyticShape::Circle { radius: radius * s }),
            AnalyticShape::Ellipse { a, b } => Some(AnalyticShape::Ellipse { a: a * s, b: b * s }),
            AnalyticShape::Superellipse { a, b, p } => Some(AnalyticShape::Superellipse {
                a: a * s,
                b: b * s,
                p,
            }),
            AnalyticShape::Star { base, amplitude, lobes } => Some(AnalyticShape::Star {
                base: base * s,
                amplitude,
                lobes,
            }),
            _ => None,
        }
    }

    /// Sample the boundary at `n` uniform parameter values.
    pub fn sample_planar(&self, n: usize) -> Vec<[f64; 2]> {
        (0..n)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / n as f64;
                let (r, _) = self.polar(t);
                [r * t.cos(), r * t.sin()]
            })
            .collect()
    }

    /// Sample a spherical boundary at `n` uniform azimuths (unit vectors).
    pub fn sample_spherical(&self, n: usize) -> Vec<[f64; 3]> {
        (0..n)
            .map(|i| {
                let phi = 2.0 * PI * i as f64 / n as f64;
                let (t, _) = self.colatitude(phi);
                [t.sin() * phi.cos(), t.sin() * phi.sin(), t.cos()]
            })
            .collect()
    }
}
