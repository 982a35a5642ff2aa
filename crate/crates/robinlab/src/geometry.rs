//! Geodesic disks on surfaces of constant curvature `K >= 0` and the
//! geometric isoperimetric deficit.
//!
//! On the plane (`K = 0`) a geodesic disk of radius `R` has perimeter `2πR`
//! and area `πR²`; on the sphere of curvature `K > 0` the same quantities are
//! `2π sin(√K R)/√K` and `2π(1 − cos(√K R))/K`, with `0 < R < π/√K`. A
//! geodesic circle on the sphere bounds two disks; [`Branch`] selects which
//! one a perimeter refers to.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Which of the two spherical disks bounded by a geodesic circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The disk contained in a hemisphere (`R <= π/(2√K)`). The only legal
    /// choice on the plane.
    Hemisphere,
    /// The complementary disk (`R >= π/(2√K)`).
    Complement,
}

/// A geodesic disk of constant curvature, stored as `(curvature, radius)`;
/// perimeter and area are always derived from these two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicDisk {
    curvature: f64,
    radius: f64,
}

impl GeodesicDisk {
    pub fn new(curvature: f64, radius: f64) -> Result<Self> {
        if !(curvature >= 0.0) || !curvature.is_finite() {
            return Err(Error::invalid(format!(
                "curvature must be finite and >= 0, got {curvature}"
            )));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::invalid(format!(
                "radius must be finite and > 0, got {radius}"
            )));
        }
        if curvature > 0.0 && radius * curvature.sqrt() >= PI {
            return Err(Error::invalid(format!(
                "radius {radius} exceeds the sphere diameter π/√K = {}",
                PI / curvature.sqrt()
            )));
        }
        Ok(GeodesicDisk { curvature, radius })
    }

    pub fn curvature(&self) -> f64 {
        self.curvature
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn perimeter(&self) -> f64 {
        if self.curvature == 0.0 {
            2.0 * PI * self.radius
        } else {
            let sk = self.curvature.sqrt();
            2.0 * PI * (sk * self.radius).sin() / sk
        }
    }

    pub fn area(&self) -> f64 {
        if self.curvature == 0.0 {
            PI * self.radius * self.radius
        } else {
            // 2π(1 − cos(√K R))/K in a cancellation-free form.
            let half = 0.5 * self.curvature.sqrt() * self.radius;
            4.0 * PI * half.sin().powi(2) / self.curvature
        }
    }

    /// True when the disk fits in a (closed) hemisphere; vacuously true on
    /// the plane.
    pub fn within_hemisphere(&self) -> bool {
        self.curvature == 0.0 || self.radius * self.curvature.sqrt() <= 0.5 * PI + 1e-12
    }

    pub fn branch(&self) -> Branch {
        if self.within_hemisphere() {
            Branch::Hemisphere
        } else {
            Branch::Complement
        }
    }

    /// Level-set profiles of the disk at inner distance `t` from the
    /// boundary: the length of `{ρ = t}` and the area of `{ρ < t}`.
    ///
    /// `L(t) = 2π sin(√K(R−t))/√K` and `A(t) = |disk| − 2π(1−cos(√K(R−t)))/K`
    /// (Euclidean limits `2π(R−t)` and `|disk| − π(R−t)²`).
    pub fn profiles_at(&self, t: f64) -> Result<(f64, f64)> {
        if !(t >= -1e-12 * self.radius && t <= self.radius * (1.0 + 1e-12)) {
            return Err(Error::invalid(format!(
                "profile parameter t={t} outside [0, R={}]",
                self.radius
            )));
        }
        let s = (self.radius - t).max(0.0);
        if self.curvature == 0.0 {
            Ok((2.0 * PI * s, self.area() - PI * s * s))
        } else {
            let sk = self.curvature.sqrt();
            let ring = 2.0 * PI * (sk * s).sin() / sk;
            let cap = 4.0 * PI * (0.5 * sk * s).sin().powi(2) / self.curvature;
            Ok((ring, self.area() - cap))
        }
    }
}

/// Construct the geodesic disk of curvature `K` with the given perimeter.
///
/// On the sphere a geodesic circle of length `L < 2π/√K` bounds two disks;
/// `branch` picks one. `L = 2π/√K` is the equator (both branches coincide).
pub fn disk_from_perimeter(curvature: f64, perimeter: f64, branch: Branch) -> Result<GeodesicDisk> {
    if !(perimeter > 0.0) || !perimeter.is_finite() {
        return Err(Error::invalid(format!(
            "perimeter must be finite and > 0, got {perimeter}"
        )));
    }
    if curvature == 0.0 {
        return match branch {
            Branch::Hemisphere => GeodesicDisk::new(0.0, perimeter / (2.0 * PI)),
            Branch::Complement => Err(Error::invalid(
                "complement branch does not exist at zero curvature".to_string(),
            )),
        };
    }
    let sk = curvature.sqrt();
    let s = perimeter * sk / (2.0 * PI);
    if s > 1.0 + 1e-14 {
        return Err(Error::invalid(format!(
            "perimeter {perimeter} exceeds the largest geodesic circle 2π/√K = {}",
            2.0 * PI / sk
        )));
    }
    let x = s.min(1.0).asin();
    let radius = match branch {
        Branch::Hemisphere => x / sk,
        Branch::Complement => (PI - x) / sk,
    };
    GeodesicDisk::new(curvature, radius)
}

/// The isoperimetric deficit `L² − 4πA + K A²`.
///
/// Nonnegative for any compact simply-connected 2-manifold with curvature
/// bounded above by `K`, and zero exactly for geodesic disks of constant
/// curvature `K`.
pub fn isoperimetric_deficit(perimeter: f64, area: f64, curvature: f64) -> f64 {
    perimeter * perimeter - 4.0 * PI * area + curvature * area * area
}
