//! P1 finite elements for the planar Robin eigenvalue problem.
//!
//! Star-shaped domains are meshed on a polar template: `n_angular` rays from
//! the centroid, `n_radial` rings at fractions of the boundary ray length,
//! with the outer ring resampled on the boundary polyline. Assembly produces
//! banded stiffness `K`, mass `M` and (trapezoid-lumped) boundary mass `B`;
//! the smallest eigenvalue of `(K + βB) x = λ M x` comes from the banded
//! spectrum-slicing solver with shift-and-invert polish, started from the
//! all-ones vector.

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::linalg::{smallest_eigenpair, SymBanded};
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct TriMesh {
    pub vertices: Vec<[f64; 2]>,
    /// Positively oriented index triples.
    pub triangles: Vec<[usize; 3]>,
    /// Boundary edges ordered along the boundary.
    pub boundary_edges: Vec<[usize; 2]>,
    /// Longest edge in the mesh.
    pub h_max: f64,
}

#[derive(Debug, Clone)]
pub struct FemEigenResult {
    pub eigenvalue: f64,
    /// P1 coefficient vector over the mesh vertices.
    pub coefficients: Vec<f64>,
    pub h_max: f64,
    pub iterations: usize,
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub2(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn len2(a: [f64; 2]) -> f64 {
    (a[0] * a[0] + a[1] * a[1]).sqrt()
}

impl TriMesh {
    pub fn triangle_area(&self, t: [usize; 3]) -> f64 {
        let [a, b, c] = t.map(|i| self.vertices[i]);
        0.5 * cross2(sub2(b, a), sub2(c, a))
    }

    pub fn area(&self) -> f64 {
        self.triangles.iter().map(|&t| self.triangle_area(t)).sum()
    }

    pub fn boundary_length(&self) -> f64 {
        self.boundary_edges
            .iter()
            .map(|&[i, j]| len2(sub2(self.vertices[j], self.vertices[i])))
            .sum()
    }

    /// Largest index distance within a triangle = half bandwidth of the
    /// assembled matrices.
    pub fn bandwidth(&self) -> usize {
        self.triangles
            .iter()
            .map(|t| {
                let mx = t.iter().max().unwrap();
                let mn = t.iter().min().unwrap();
                mx - mn
            })
            .max()
            .unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        for (k, &t) in self.triangles.iter().enumerate() {
            if self.triangle_area(t) <= 0.0 {
                return Err(Error::mesh(format!("triangle {k} has non-positive area")));
            }
        }
        Ok(())
    }

    /// Congruent copy: rotate by `angle`, then translate.
    pub fn transformed(&self, angle: f64, shift: [f64; 2]) -> TriMesh {
        let (s, c) = angle.sin_cos();
        let mut out = self.clone();
        for v in &mut out.vertices {
            *v = [c * v[0] - s * v[1] + shift[0], s * v[0] + c * v[1] + shift[1]];
        }
        out
    }
}

/// Polar-graded mesh of a star-shaped planar domain. Star-shapedness with
/// respect to the vertex centroid is checked by ray sampling: every ray must
/// cross the boundary exactly once.
pub fn mesh_star_shaped(domain: &Domain, n_radial: usize, n_angular: usize) -> Result<TriMesh> {
    let pts = domain
        .planar_points()
        .ok_or_else(|| Error::mesh("star mesher needs a planar domain".to_string()))?;
    if n_radial < 2 || n_angular < 8 {
        return Err(Error::mesh(format!(
            "mesh resolution too small: {n_radial} x {n_angular}"
        )));
    }
    let n = pts.len();
    let centroid = {
        let mut c = [0.0, 0.0];
        for p in pts {
            c[0] += p[0];
            c[1] += p[1];
        }
        [c[0] / n as f64, c[1] / n as f64]
    };

    // Boundary ray lengths at the mesh azimuths. The half-open side rule
    // (`> 0` vs `<= 0` against the ray line) counts a crossing through a
    // polyline vertex exactly once.
    let mut ray = vec![0.0f64; n_angular];
    for (j, r) in ray.iter_mut().enumerate() {
        let theta = 2.0 * PI * j as f64 / n_angular as f64;
        let d = [theta.cos(), theta.sin()];
        let mut hits = Vec::new();
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let side_a = cross2(d, sub2(a, centroid)) > 0.0;
            let side_b = cross2(d, sub2(b, centroid)) > 0.0;
            if side_a == side_b {
                continue;
            }
            let e = sub2(b, a);
            let f = sub2(a, centroid);
            let t = cross2(f, e) / cross2(d, e);
            if t > 1e-12 {
                hits.push(t);
            }
        }
        if hits.len() != 1 {
            return Err(Error::mesh(format!(
                "domain is not star-shaped about its centroid: ray {j} crosses the boundary {} times",
                hits.len()
            )));
        }
        *r = hits[0];
    }

    let mut vertices = Vec::with_capacity(1 + n_radial * n_angular);
    vertices.push(centroid);
    for i in 1..=n_radial {
        let frac = i as f64 / n_radial as f64;
        for (j, &r) in ray.iter().enumerate() {
            let theta = 2.0 * PI * j as f64 / n_angular as f64;
            vertices.push([
                centroid[0] + frac * r * theta.cos(),
                centroid[1] + frac * r * theta.sin(),
            ]);
        }
    }

    let mut triangles = Vec::with_capacity(2 * n_radial * n_angular);
    for j in 0..n_angular {
        triangles.push([0, 1 + j, 1 + (j + 1) % n_angular]);
    }
    for i in 1..n_radial {
        let inner = 1 + (i - 1) * n_angular;
        let outer = 1 + i * n_angular;
        for j in 0..n_angular {
            let jn = (j + 1) % n_angular;
            triangles.push([inner + j, outer + j, outer + jn]);
            triangles.push([inner + j, outer + jn, inner + jn]);
        }
    }

    let outer = 1 + (n_radial - 1) * n_angular;
    let boundary_edges: Vec<[usize; 2]> = (0..n_angular)
        .map(|j| [outer + j, outer + (j + 1) % n_angular])
        .collect();

    let mut h_max = 0.0f64;
    for t in &triangles {
        for k in 0..3 {
            h_max = h_max.max(len2(sub2(
                vertices[t[(k + 1) % 3]],
                vertices[t[k]],
            )));
        }
    }

    let mesh = TriMesh {
        vertices,
        triangles,
        boundary_edges,
        h_max,
    };
    mesh.validate()?;
    Ok(mesh)
}

/// Assembled P1 matrices.
pub struct FemSystem {
    pub stiffness: SymBanded,
    pub mass: SymBanded,
    pub boundary: SymBanded,
}

pub fn assemble(mesh: &TriMesh, par: Parallelism) -> FemSystem {
    let n = mesh.vertices.len();
    let bw = mesh.bandwidth();
    let mut stiffness = SymBanded::zeros(n, bw);
    let mut mass = SymBanded::zeros(n, bw);
    let mut boundary = SymBanded::zeros(n, 0);

    // Per-chunk local contributions merged in chunk order: deterministic
    // regardless of thread scheduling.
    const CHUNK: usize = 2048;
    let chunks = mesh.triangles.len().div_ceil(CHUNK);
    let locals = par.map_indexed(chunks, |c| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(mesh.triangles.len());
        let mut coo: Vec<(usize, usize, f64, f64)> = Vec::with_capacity((hi - lo) * 6);
        for &tri in &mesh.triangles[lo..hi] {
            let p = tri.map(|i| mesh.vertices[i]);
            let area = 0.5 * cross2(sub2(p[1], p[0]), sub2(p[2], p[0]));
            // Barycentric gradients: ∇λ_k = rot90(edge opposite k) / (2 area).
            let grads: [[f64; 2]; 3] = [
                sub2(p[2], p[1]),
                sub2(p[0], p[2]),
                sub2(p[1], p[0]),
            ]
            .map(|e| [-e[1] / (2.0 * area), e[0] / (2.0 * area)]);
            for a in 0..3 {
                for b in 0..=a {
                    let k = area * (grads[a][0] * grads[b][0] + grads[a][1] * grads[b][1]);
                    let m = area / 12.0 * if a == b { 2.0 } else { 1.0 };
                    coo.push((tri[a], tri[b], k, m));
                }
            }
        }
        coo
    });
    for coo in locals {
        for (i, j, k, m) in coo {
            stiffness.add(i, j, k);
            mass.add(i, j, m);
        }
    }
    for &[i, j] in &mesh.boundary_edges {
        let l = len2(sub2(mesh.vertices[j], mesh.vertices[i]));
        boundary.add(i, i, 0.5 * l);
        boundary.add(j, j, 0.5 * l);
    }
    FemSystem {
        stiffness,
        mass,
        boundary,
    }
}

/// Smallest Robin eigenvalue on the mesh; `warm` seeds the iteration (the
/// all-ones vector otherwise).
pub fn solve_lowest_with(
    mesh: &TriMesh,
    beta: f64,
    tol: f64,
    par: Parallelism,
    warm: Option<&[f64]>,
) -> Result<FemEigenResult> {
    mesh.validate()?;
    let sys = assemble(mesh, par);
    let a = sys.stiffness.add_scaled(&sys.boundary, beta);
    let eig = smallest_eigenpair(&a, &sys.mass, warm, tol, 500)?;
    Ok(FemEigenResult {
        eigenvalue: eig.value,
        coefficients: eig.vector,
        h_max: mesh.h_max,
        iterations: eig.iterations,
    })
}

pub fn solve_lowest(mesh: &TriMesh, beta: f64, tol: f64) -> Result<FemEigenResult> {
    solve_lowest_with(mesh, beta, tol, Parallelism::default(), None)
}

/// Rayleigh quotient of a coefficient vector in the assembled system.
pub fn rayleigh_quotient(mesh: &TriMesh, beta: f64, x: &[f64]) -> f64 {
    let sys = assemble(mesh, Parallelism::default());
    let a = sys.stiffness.add_scaled(&sys.boundary, beta);
    a.quadratic_form(x) / sys.mass.quadratic_form(x)
}

#[derive(Debug, Clone, Copy)]
pub struct Extrapolation {
    pub eigenvalue: f64,
    /// Distance between the extrapolated value and the finest-level value.
    pub error_estimate: f64,
    /// False when the ladder does not decrease monotonically (reported, not
    /// fatal).
    pub monotone: bool,
}

/// Richardson extrapolation of an O(h²) eigenvalue ladder ordered from
/// coarsest to finest.
pub fn extrapolate(results: &[FemEigenResult]) -> Result<Extrapolation> {
    if results.len() < 3 {
        return Err(Error::invalid("extrapolation needs at least 3 ladder levels".to_string()));
    }
    for w in results.windows(2) {
        if w[1].h_max >= w[0].h_max && w[1].h_max != w[0].h_max {
            return Err(Error::invalid("ladder must be ordered from coarse to fine".to_string()));
        }
    }
    let n = results.len();
    let (coarse, fine) = (&results[n - 2], &results[n - 1]);
    let ratio = if fine.h_max > 0.0 && coarse.h_max != fine.h_max {
        (coarse.h_max / fine.h_max).powi(2)
    } else {
        4.0
    };
    let eigenvalue = fine.eigenvalue + (fine.eigenvalue - coarse.eigenvalue) / (ratio - 1.0);
    let diffs: Vec<f64> = results
        .windows(2)
        .map(|w| w[1].eigenvalue - w[0].eigenvalue)
        .collect();
    let monotone = diffs.windows(2).all(|d| d[0] * d[1] >= 0.0);
    Ok(Extrapolation {
        eigenvalue,
        error_estimate: (eigenvalue - fine.eigenvalue).abs(),
        monotone,
    })
}
