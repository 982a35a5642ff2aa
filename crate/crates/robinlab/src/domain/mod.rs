//! Simply-connected domains given by closed boundary polylines, on the plane
//! or on the unit sphere, with distance-to-boundary and the empirical
//! level-set profiles `A(t)` (area within distance `t` of the boundary) and
//! `L(t)` (length of the level set).
//!
//! A planar domain is a positively oriented simple polygon with at least 16
//! vertices approximating a smooth curve. A spherical domain is the region
//! bounded by a closed polyline of unit vectors that contains a declared
//! witness point; its boundary must be positively oriented as seen from the
//! witness. An optional [`AnalyticShape`] descriptor supplies oracle-grade
//! perimeter and area, overriding the polyline estimates.

mod analytic;
mod planar;
mod profiles;
mod spherical;

pub use analytic::AnalyticShape;
pub use profiles::{
    check_profile_domination, DominationReport, EmpiricalProfiles, ProfileMeta,
};

use crate::error::{Error, Result};
use crate::exec::Parallelism;

pub const MIN_BOUNDARY_POINTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    Planar,
    Spherical,
}

#[derive(Debug, Clone)]
enum BoundaryData {
    Planar(Vec<[f64; 2]>),
    Spherical {
        points: Vec<[f64; 3]>,
        witness: [f64; 3],
    },
}

#[derive(Debug, Clone)]
pub struct Domain {
    boundary: BoundaryData,
    analytic: Option<AnalyticShape>,
}

impl Domain {
    /// Planar domain from a positively oriented simple polyline (first point
    /// not repeated at the end).
    pub fn planar(points: Vec<[f64; 2]>, analytic: Option<AnalyticShape>) -> Result<Self> {
        if points.len() < MIN_BOUNDARY_POINTS {
            return Err(Error::invalid(format!(
                "boundary needs at least {MIN_BOUNDARY_POINTS} points, got {}",
                points.len()
            )));
        }
        planar::validate(&points)?;
        if let Some(a) = &analytic {
            if !a.is_planar() {
                return Err(Error::invalid(
                    "spherical analytic descriptor on a planar domain".to_string(),
                ));
            }
        }
        Ok(Domain {
            boundary: BoundaryData::Planar(points),
            analytic,
        })
    }

    /// Spherical domain: the component of the sphere bounded by `points`
    /// that contains `witness`, with the boundary positively oriented as
    /// seen from the witness.
    pub fn spherical(
        points: Vec<[f64; 3]>,
        witness: [f64; 3],
        analytic: Option<AnalyticShape>,
    ) -> Result<Self> {
        if points.len() < MIN_BOUNDARY_POINTS {
            return Err(Error::invalid(format!(
                "boundary needs at least {MIN_BOUNDARY_POINTS} points, got {}",
                points.len()
            )));
        }
        spherical::validate(&points, &witness)?;
        if let Some(a) = &analytic {
            if a.is_planar() {
                return Err(Error::invalid(
                    "planar analytic descriptor on a spherical domain".to_string(),
                ));
            }
        }
        Ok(Domain {
            boundary: BoundaryData::Spherical { points, witness },
            analytic,
        })
    }

    pub fn kind(&self) -> DomainKind {
        match &self.boundary {
            BoundaryData::Planar(_) => DomainKind::Planar,
            BoundaryData::Spherical { .. } => DomainKind::Spherical,
        }
    }

    /// Constant curvature bound of the ambient surface: 0 for the plane, 1
    /// for the unit sphere.
    pub fn curvature(&self) -> f64 {
        match self.kind() {
            DomainKind::Planar => 0.0,
            DomainKind::Spherical => 1.0,
        }
    }

    pub fn analytic(&self) -> Option<&AnalyticShape> {
        self.analytic.as_ref()
    }

    pub fn planar_points(&self) -> Option<&[[f64; 2]]> {
        match &self.boundary {
            BoundaryData::Planar(p) => Some(p),
            _ => None,
        }
    }

    pub fn spherical_points(&self) -> Option<(&[[f64; 3]], [f64; 3])> {
        match &self.boundary {
            BoundaryData::Spherical { points, witness } => Some((points, *witness)),
            _ => None,
        }
    }

    /// Perimeter of the boundary polyline.
    pub fn polyline_perimeter(&self) -> f64 {
        match &self.boundary {
            BoundaryData::Planar(p) => planar::perimeter(p),
            BoundaryData::Spherical { points, .. } => spherical::perimeter(points),
        }
    }

    /// Area enclosed by the polyline (on the sphere: of the component
    /// containing the witness).
    pub fn polyline_area(&self) -> f64 {
        match &self.boundary {
            BoundaryData::Planar(p) => planar::area(p),
            BoundaryData::Spherical { points, witness } => spherical::area(points, *witness),
        }
    }

    /// Perimeter; the analytic descriptor, when present, takes precedence
    /// over the polyline estimate.
    pub fn perimeter(&self) -> f64 {
        self.analytic
            .as_ref()
            .map(|a| a.perimeter())
            .unwrap_or_else(|| self.polyline_perimeter())
    }

    /// Area, analytic when available.
    pub fn area(&self) -> f64 {
        self.analytic
            .as_ref()
            .map(|a| a.area())
            .unwrap_or_else(|| self.polyline_area())
    }

    pub fn contains_planar(&self, x: [f64; 2]) -> bool {
        match &self.boundary {
            BoundaryData::Planar(p) => planar::contains(p, x),
            _ => false,
        }
    }

    pub fn contains_spherical(&self, x: [f64; 3]) -> bool {
        match &self.boundary {
            BoundaryData::Spherical { points, witness } => spherical::contains(points, *witness, x),
            _ => false,
        }
    }

    /// Distance from an interior point to the boundary polyline.
    pub fn distance_to_boundary_planar(&self, x: [f64; 2]) -> Result<f64> {
        match &self.boundary {
            BoundaryData::Planar(p) => {
                if !planar::contains(p, x) {
                    return Err(Error::invalid(format!("point {x:?} is outside the domain")));
                }
                Ok(planar::distance_to_polyline(p, x))
            }
            _ => Err(Error::invalid("planar query on a spherical domain".to_string())),
        }
    }

    /// Great-circle distance from an interior point to the boundary polyline.
    pub fn distance_to_boundary_spherical(&self, x: [f64; 3]) -> Result<f64> {
        match &self.boundary {
            BoundaryData::Spherical { points, witness } => {
                if !spherical::contains(points, *witness, x) {
                    return Err(Error::invalid(format!("point {x:?} is outside the domain")));
                }
                Ok(spherical::distance_to_polyline(points, x))
            }
            _ => Err(Error::invalid("spherical query on a planar domain".to_string())),
        }
    }

    /// Rasterize the domain and accumulate the level-set profiles.
    ///
    /// `grid_n` is the number of `t`-intervals, `raster_n` the number of
    /// raster cells across the larger bounding-box side (plane) or across the
    /// latitude range (sphere).
    pub fn compute_profiles(
        &self,
        grid_n: usize,
        raster_n: usize,
        par: Parallelism,
    ) -> Result<EmpiricalProfiles> {
        profiles::compute(self, grid_n, raster_n, par)
    }
}
