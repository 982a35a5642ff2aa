//! Empirical level-set profiles by rasterization.
//!
//! The domain is covered by a uniform raster (bounding box on the plane,
//! `(φ, θ)` grid with area element `cos θ dφ dθ` on the sphere), the distance
//! to the boundary is evaluated at interior cell centers, and
//!
//! * `A(t_k)` accumulates the weight of cells with distance below `t_k`,
//! * `L(t_k)` is a smoothed (3-point window) difference quotient of `A`,
//! * the in-radius is the largest sampled distance.
//!
//! All stated tolerances scale with the linear cell size and are stored in
//! [`ProfileMeta`].

use super::planar::{row_crossings, SegmentIndex};
use super::spherical::ArcIndex;
use super::{BoundaryData, Domain};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::geometry::GeodesicDisk;
use std::collections::VecDeque;
use std::f64::consts::PI;

pub const MIN_GRID_N: usize = 32;
pub const MIN_RASTER_N: usize = 256;
/// Minimum interior cell count, per t-grid interval.
const MIN_CELLS_PER_BIN: usize = 32;

#[derive(Debug, Clone, Copy)]
pub struct ProfileMeta {
    pub raster_n: usize,
    pub grid_n: usize,
    /// Linear size of a raster cell.
    pub cell_size: f64,
    /// Stated absolute tolerance on `A(t)` (area units).
    pub area_tol: f64,
    /// Stated absolute tolerance on `L(t)`.
    pub ring_tol: f64,
    /// Stated absolute tolerance on the in-radius.
    pub in_radius_tol: f64,
    /// Half-width of the smoothing window used for `L` (1 = 3-point window).
    pub smoothing_halfwidth: usize,
    /// Number of interior raster cells.
    pub interior_cells: usize,
}

/// Sampled parallel-coordinate profiles of a domain.
#[derive(Debug, Clone)]
pub struct EmpiricalProfiles {
    /// `t_0 = 0 < t_1 < … < t_N = R_M`.
    pub t: Vec<f64>,
    /// `A(t_k)`: area within distance `t_k` of the boundary; nondecreasing,
    /// `A(0) = 0`.
    pub area: Vec<f64>,
    /// `L(t_k)`: level-set length estimate; nonnegative.
    pub ring: Vec<f64>,
    /// Largest sampled distance to the boundary.
    pub in_radius: f64,
    /// Oracle-grade domain area (analytic when available).
    pub total_area: f64,
    /// Oracle-grade domain perimeter.
    pub total_perimeter: f64,
    pub meta: ProfileMeta,
}

impl EmpiricalProfiles {
    /// Interpolated `L(t)` (piecewise linear, zero beyond the grid).
    pub fn ring_at(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return self.ring[0];
        }
        if t >= *self.t.last().unwrap() {
            return *self.ring.last().unwrap();
        }
        let i = self.t.partition_point(|&x| x < t).max(1);
        let (t0, t1) = (self.t[i - 1], self.t[i]);
        let w = (t - t0) / (t1 - t0);
        self.ring[i - 1] * (1.0 - w) + self.ring[i] * w
    }
}

pub(super) fn compute(
    domain: &Domain,
    grid_n: usize,
    raster_n: usize,
    par: Parallelism,
) -> Result<EmpiricalProfiles> {
    if grid_n < MIN_GRID_N {
        return Err(Error::invalid(format!("grid_n must be >= {MIN_GRID_N}, got {grid_n}")));
    }
    if raster_n < MIN_RASTER_N {
        return Err(Error::invalid(format!(
            "raster_n must be >= {MIN_RASTER_N}, got {raster_n}"
        )));
    }
    let (distances, cell_size) = match &domain.boundary {
        BoundaryData::Planar(pts) => planar_distances(pts, raster_n, par),
        BoundaryData::Spherical { points, witness } => {
            spherical_distances(points, *witness, raster_n, par)?
        }
    };
    let interior_cells = distances.len();
    if interior_cells < MIN_CELLS_PER_BIN * grid_n {
        return Err(Error::invalid(format!(
            "raster too coarse: {interior_cells} interior cells for {grid_n} profile bins"
        )));
    }

    let in_radius = distances
        .iter()
        .fold(0.0f64, |m, &(d, _)| m.max(d));
    if !(in_radius > 0.0) {
        return Err(Error::invalid("no interior cell has positive boundary distance".to_string()));
    }
    let dt = in_radius / grid_n as f64;
    let mut bins = vec![0.0f64; grid_n + 1];
    for &(d, w) in &distances {
        let b = ((d / dt) as usize).min(grid_n);
        bins[b] += w;
    }
    let t: Vec<f64> = (0..=grid_n).map(|k| k as f64 * dt).collect();
    let mut area = vec![0.0f64; grid_n + 1];
    for k in 1..=grid_n {
        area[k] = area[k - 1] + bins[k - 1];
    }

    // Smoothed difference quotients; A(0) = 0 exactly, so the left end uses
    // the second-order one-sided stencil (4A1 - A2)/(2Δt).
    let n = grid_n;
    let mut ring = vec![0.0f64; n + 1];
    ring[0] = ((4.0 * area[1] - area[2]) / (2.0 * dt)).max(0.0);
    for k in 1..n {
        ring[k] = (area[k + 1] - area[k - 1]) / (2.0 * dt);
    }
    ring[n] = ((3.0 * area[n] - 4.0 * area[n - 1] + area[n - 2]) / (2.0 * dt)).max(0.0);

    let total_perimeter = domain.perimeter();
    let total_area = domain.area();
    let area_tol = total_perimeter * cell_size + 8.0 * cell_size * cell_size;
    let ring_tol = 2.0 * area_tol / dt + 2.0 * dt * total_perimeter / in_radius;
    let meta = ProfileMeta {
        raster_n,
        grid_n,
        cell_size,
        area_tol,
        ring_tol,
        in_radius_tol: 1.5 * cell_size,
        smoothing_halfwidth: 1,
        interior_cells,
    };
    Ok(EmpiricalProfiles {
        t,
        area,
        ring,
        in_radius,
        total_area,
        total_perimeter,
        meta,
    })
}

/// Interior cell distances and weights on the plane: scanline parity per row,
/// pruned point-to-segment distance per interior cell.
fn planar_distances(
    pts: &[[f64; 2]],
    raster_n: usize,
    par: Parallelism,
) -> (Vec<(f64, f64)>, f64) {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in pts {
        xmin = xmin.min(p[0]);
        xmax = xmax.max(p[0]);
        ymin = ymin.min(p[1]);
        ymax = ymax.max(p[1]);
    }
    let cell = ((xmax - xmin).max(ymax - ymin)) / raster_n as f64;
    let nx = ((xmax - xmin) / cell).ceil() as usize + 1;
    let ny = ((ymax - ymin) / cell).ceil() as usize + 1;
    let index = SegmentIndex::build(pts);
    let weight = cell * cell;

    let rows = par.map_indexed(ny, |j| {
        let y = ymin + (j as f64 + 0.5) * cell;
        let mut crossings = Vec::new();
        row_crossings(pts, y, &mut crossings);
        let mut out = Vec::new();
        if crossings.len() < 2 {
            return out;
        }
        // Walk crossing pairs: cells between crossings[2m] and [2m+1] are inside.
        for pair in crossings.chunks(2) {
            if pair.len() < 2 {
                break;
            }
            let i0 = (((pair[0] - xmin) / cell - 0.5).ceil().max(0.0)) as usize;
            let i1 = (((pair[1] - xmin) / cell - 0.5).floor()) as isize;
            let i1 = i1.min(nx as isize - 1);
            let mut i = i0;
            while (i as isize) <= i1 {
                let x = xmin + (i as f64 + 0.5) * cell;
                out.push((index.distance([x, y]), weight));
                i += 1;
            }
        }
        out
    });
    (rows.into_iter().flatten().collect(), cell)
}

/// Interior cell distances and weights on the sphere: rasterized boundary
/// shell plus 4-connected flood fill from the witness, then great-circle
/// distances for the filled cells.
fn spherical_distances(
    pts: &[[f64; 3]],
    witness: [f64; 3],
    raster_n: usize,
    par: Parallelism,
) -> Result<(Vec<(f64, f64)>, f64)> {
    let ntheta = raster_n;
    let nphi = 2 * raster_n;
    let dtheta = PI / ntheta as f64;
    let dphi = 2.0 * PI / nphi as f64;

    let cell_of = |v: [f64; 3]| -> (usize, usize) {
        let theta = v[2].clamp(-1.0, 1.0).asin(); // latitude
        let phi = v[1].atan2(v[0]).rem_euclid(2.0 * PI);
        let j = (((theta + 0.5 * PI) / dtheta) as usize).min(ntheta - 1);
        let i = ((phi / dphi) as usize).min(nphi - 1);
        (i, j)
    };

    // Mark the boundary shell, bridging diagonal steps so a 4-connected
    // flood cannot leak through.
    let mut shell = vec![false; nphi * ntheta];
    let n = pts.len();
    for s in 0..n {
        let a = pts[s];
        let b = pts[(s + 1) % n];
        let gap = super::spherical::arc(a, b);
        let sub = ((gap / (0.3 * dtheta.min(dphi))).ceil() as usize).max(2);
        let mut prev: Option<(usize, usize)> = None;
        for q in 0..=sub {
            let f = q as f64 / sub as f64;
            let v = super::spherical::normalize([
                a[0] + f * (b[0] - a[0]),
                a[1] + f * (b[1] - a[1]),
                a[2] + f * (b[2] - a[2]),
            ]);
            let (i, j) = cell_of(v);
            shell[j * nphi + i] = true;
            if let Some((pi, pj)) = prev {
                let di = {
                    let raw = (i as isize - pi as isize).rem_euclid(nphi as isize);
                    if raw > nphi as isize / 2 { raw - nphi as isize } else { raw }
                };
                let dj = j as isize - pj as isize;
                if di != 0 && dj != 0 {
                    shell[pj * nphi + i] = true;
                }
                // Sub-sampling is finer than the grid, so |di|,|dj| <= 1.
                debug_assert!(di.abs() <= 1 && dj.abs() <= 1);
            }
            prev = Some((i, j));
        }
    }

    let (wi, wj) = cell_of(super::spherical::normalize(witness));
    if shell[wj * nphi + wi] {
        return Err(Error::invalid(
            "raster too coarse: witness cell intersects the boundary shell".to_string(),
        ));
    }
    let mut inside = vec![false; nphi * ntheta];
    let mut queue = VecDeque::new();
    inside[wj * nphi + wi] = true;
    queue.push_back((wi, wj));
    while let Some((i, j)) = queue.pop_front() {
        let push = |ii: usize, jj: usize, inside: &mut Vec<bool>, queue: &mut VecDeque<(usize, usize)>| {
            let id = jj * nphi + ii;
            if !inside[id] && !shell[id] {
                inside[id] = true;
                queue.push_back((ii, jj));
            }
        };
        push((i + 1) % nphi, j, &mut inside, &mut queue);
        push((i + nphi - 1) % nphi, j, &mut inside, &mut queue);
        if j + 1 < ntheta {
            push(i, j + 1, &mut inside, &mut queue);
        }
        if j > 0 {
            push(i, j - 1, &mut inside, &mut queue);
        }
    }

    // Interior cells at full weight; boundary-shell cells at half weight
    // (the shell straddles the curve, so on average half of it is inside).
    let index = ArcIndex::build(pts);
    let rows = par.map_indexed(ntheta, |j| {
        let theta = -0.5 * PI + (j as f64 + 0.5) * dtheta;
        let (sin_t, cos_t) = theta.sin_cos();
        let w_row = cos_t * dtheta * dphi;
        let mut out = Vec::new();
        for i in 0..nphi {
            let id = j * nphi + i;
            let weight = if inside[id] {
                w_row
            } else if shell[id] {
                0.5 * w_row
            } else {
                continue;
            };
            let phi = (i as f64 + 0.5) * dphi;
            let v = [cos_t * phi.cos(), cos_t * phi.sin(), sin_t];
            out.push((index.distance(v), weight));
        }
        out
    });
    Ok((rows.into_iter().flatten().collect(), dtheta.max(dphi)))
}

/// Margins of the level-set domination of a domain by the perimeter-matched
/// geodesic disk: in-radius, deep-set areas `|M(t)| <= |B°(t)|`, and ring
/// lengths `L_M(t) <= L_B°(t)`, each with its stated tolerance.
#[derive(Debug, Clone, Copy)]
pub struct DominationReport {
    pub in_radius_margin: f64,
    pub area_margin: f64,
    pub ring_margin: f64,
    pub tol_in_radius: f64,
    pub tol_area: f64,
    pub tol_ring: f64,
}

impl DominationReport {
    pub fn pass(&self) -> bool {
        self.in_radius_margin >= -self.tol_in_radius
            && self.area_margin >= -self.tol_area
            && self.ring_margin >= -self.tol_ring
    }
}

pub fn check_profile_domination(
    profiles: &EmpiricalProfiles,
    disk: &GeodesicDisk,
) -> Result<DominationReport> {
    let perim = disk.perimeter();
    if (profiles.total_perimeter - perim).abs() > 1e-6 * perim {
        return Err(Error::invalid(format!(
            "perimeter mismatch: domain {} vs disk {perim}",
            profiles.total_perimeter
        )));
    }
    let k = disk.curvature();
    if k > 0.0 {
        let cap = 2.0 * PI / k + 1e-9;
        if profiles.total_area > cap || disk.area() > cap {
            return Err(Error::invalid(
                "domination check requires both areas within a hemisphere".to_string(),
            ));
        }
    }
    let r_disk = disk.radius();
    let disk_area = disk.area();
    let mut area_margin = f64::INFINITY;
    let mut ring_margin = f64::INFINITY;
    for (idx, &t) in profiles.t.iter().enumerate() {
        let (ring_b, area_b) = if t <= r_disk {
            disk.profiles_at(t)?
        } else {
            (0.0, disk_area) // the disk is exhausted beyond its radius
        };
        let deep_b = disk_area - area_b;
        let deep_m = profiles.total_area - profiles.area[idx];
        area_margin = area_margin.min(deep_b - deep_m);
        ring_margin = ring_margin.min(ring_b - profiles.ring[idx]);
    }
    Ok(DominationReport {
        in_radius_margin: r_disk - profiles.in_radius,
        area_margin,
        ring_margin,
        tol_in_radius: profiles.meta.in_radius_tol,
        tol_area: 2.0 * profiles.meta.area_tol,
        tol_ring: profiles.meta.ring_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::geometry::{disk_from_perimeter, Branch};

    #[test]
    fn disk_profiles_match_closed_forms() {
        let d = corpus::circle(1.0, 1024).unwrap();
        let p = d.compute_profiles(48, 384, Parallelism::default()).unwrap();
        let disk = GeodesicDisk::new(0.0, 1.0).unwrap();
        assert!((p.in_radius - 1.0).abs() < p.meta.in_radius_tol);
        assert!((p.area[p.area.len() - 1] - PI).abs() < p.meta.area_tol);
        assert!((p.ring[0] - 2.0 * PI).abs() < p.meta.ring_tol);
        for (k, &t) in p.t.iter().enumerate() {
            let (lb, ab) = disk.profiles_at(t.min(1.0)).unwrap();
            assert!((p.area[k] - ab).abs() < p.meta.area_tol, "A at t={t}");
            assert!((p.ring[k] - lb).abs() < p.meta.ring_tol, "L at t={t}");
        }
    }

    #[test]
    fn area_monotone_ring_nonnegative() {
        let d = corpus::ellipse(1.5, 1.0, 512).unwrap();
        let p = d.compute_profiles(40, 320, Parallelism::default()).unwrap();
        assert_eq!(p.area[0], 0.0);
        for k in 1..p.area.len() {
            assert!(p.area[k] >= p.area[k - 1]);
        }
        assert!(p.ring.iter().all(|&l| l >= 0.0));
        assert!((p.t.last().unwrap() - p.in_radius).abs() < 1e-12);
    }

    #[test]
    fn spherical_cap_profiles_match_closed_forms() {
        let cap = corpus::spherical_cap(0.5 * PI, 768).unwrap();
        let p = cap.compute_profiles(40, 384, Parallelism::default()).unwrap();
        let disk = GeodesicDisk::new(1.0, 0.5 * PI).unwrap();
        assert!((p.total_area - 2.0 * PI).abs() < 1e-6);
        for (k, &t) in p.t.iter().enumerate() {
            let (_, ab) = disk.profiles_at(t.min(disk.radius())).unwrap();
            assert!(
                (p.area[k] - ab).abs() < p.meta.area_tol,
                "A at t={t}: {} vs {ab} (tol {})",
                p.area[k],
                p.meta.area_tol
            );
        }
    }

    #[test]
    fn ellipse_in_radius_equals_semiminor() {
        let d = corpus::ellipse(2.0, 1.0, 1024).unwrap();
        let p = d.compute_profiles(48, 512, Parallelism::default()).unwrap();
        assert!((p.in_radius - 1.0).abs() < p.meta.in_radius_tol, "{}", p.in_radius);
        assert!((p.area.last().unwrap() - 2.0 * PI).abs() < p.meta.area_tol);
    }

    #[test]
    fn refinement_shrinks_total_area_error() {
        let d = corpus::ellipse(2.0, 1.0, 512).unwrap();
        let coarse = d.compute_profiles(32, 256, Parallelism::default()).unwrap();
        let fine = d.compute_profiles(32, 512, Parallelism::default()).unwrap();
        let e_c = (coarse.area.last().unwrap() - coarse.total_area).abs();
        let e_f = (fine.area.last().unwrap() - fine.total_area).abs();
        assert!(
            e_f < e_c / 1.2,
            "refinement did not reduce the closure error: {e_c} -> {e_f}"
        );
    }

    #[test]
    fn domination_equality_and_strict_cases() {
        // Equality case: the disk against itself.
        let d = corpus::circle(1.0, 1024).unwrap();
        let p = d.compute_profiles(48, 384, Parallelism::default()).unwrap();
        let disk = disk_from_perimeter(0.0, p.total_perimeter, Branch::Hemisphere).unwrap();
        let rep = check_profile_domination(&p, &disk).unwrap();
        assert!(rep.pass(), "{rep:?}");

        // Strict case: perimeter-matched 2:1 ellipse.
        let e = corpus::ellipse_with_perimeter(2.0, 2.0 * PI, 1024).unwrap();
        let pe = e.compute_profiles(48, 384, Parallelism::default()).unwrap();
        let disk_e = disk_from_perimeter(0.0, pe.total_perimeter, Branch::Hemisphere).unwrap();
        let rep_e = check_profile_domination(&pe, &disk_e).unwrap();
        assert!(rep_e.pass());
        assert!(rep_e.in_radius_margin > 0.0);
        assert!(rep_e.area_margin > 0.0);

        // Spherical equality case.
        let cap = corpus::spherical_cap(PI / 3.0, 768).unwrap();
        let pc = cap.compute_profiles(40, 384, Parallelism::default()).unwrap();
        let disk_c = disk_from_perimeter(1.0, pc.total_perimeter, Branch::Hemisphere).unwrap();
        let rep_c = check_profile_domination(&pc, &disk_c).unwrap();
        assert!(rep_c.pass(), "{rep_c:?}");

        // Perimeter mismatch is rejected.
        let other = disk_from_perimeter(0.0, 5.0, Branch::Hemisphere).unwrap();
        assert!(check_profile_domination(&p, &other).is_err());
    }

    #[test]
    fn pipeline_deficit_nonnegative() {
        for d in [
            corpus::ellipse(1.3, 1.0, 512).unwrap(),
            corpus::star(1.0, 0.15, 3, 512).unwrap(),
        ] {
            let deficit = crate::geometry::isoperimetric_deficit(d.perimeter(), d.area(), 0.0);
            assert!(deficit >= -1e-9);
        }
    }

    #[test]
    fn coarse_raster_is_rejected() {
        let d = corpus::circle(1.0, 64).unwrap();
        assert!(d.compute_profiles(16, 256, Parallelism::default()).is_err());
        assert!(d.compute_profiles(64, 128, Parallelism::default()).is_err());
    }
}
