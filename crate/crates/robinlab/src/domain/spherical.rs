//! Spherical polyline primitives on the unit sphere: great-circle arc
//! lengths, the signed spherical-excess fan for area and containment, and
//! distance to a polyline of geodesic segments.

use crate::error::{Error, Result};

pub type V3 = [f64; 3];

#[inline]
pub fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn norm(a: V3) -> f64 {
    dot(a, a).sqrt()
}

#[inline]
pub fn normalize(a: V3) -> V3 {
    let n = norm(a);
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Great-circle distance between unit vectors.
#[inline]
pub fn arc(a: V3, b: V3) -> f64 {
    norm(cross(a, b)).atan2(dot(a, b))
}

pub fn perimeter(pts: &[V3]) -> f64 {
    let n = pts.len();
    (0..n).map(|i| arc(pts[i], pts[(i + 1) % n])).sum()
}

/// Signed solid angle of the triangle `(w, p, q)` (van Oosterom–Strackee).
#[inline]
fn signed_excess(w: V3, p: V3, q: V3) -> f64 {
    let triple = dot(w, cross(p, q));
    let denom = 1.0 + dot(w, p) + dot(p, q) + dot(q, w);
    2.0 * triple.atan2(denom)
}

/// Signed area of the polyline as a fan from `x`: the enclosed area `A` when
/// `x` lies in the positively wound component, `A − 4π` when it lies outside.
pub fn fan_area(pts: &[V3], x: V3) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| signed_excess(x, pts[i], pts[(i + 1) % n]))
        .sum()
}

pub fn area(pts: &[V3], witness: V3) -> f64 {
    fan_area(pts, witness)
}

/// A point is inside exactly when the fan sum lands on the positive sheet.
pub fn contains(pts: &[V3], _witness: V3, x: V3) -> bool {
    fan_area(pts, x) > 0.0
}

/// Distance from `x` to the geodesic segment `(a, b)` (both arcs < π).
pub fn arc_segment_distance(a: V3, b: V3, x: V3) -> f64 {
    let n = normalize(cross(a, b));
    let ta = cross(n, a);
    let bt = cross(b, n);
    if dot(ta, x) >= 0.0 && dot(bt, x) >= 0.0 {
        dot(x, n).clamp(-1.0, 1.0).asin().abs()
    } else {
        arc(a, x).min(arc(b, x))
    }
}

pub fn distance_to_polyline(pts: &[V3], x: V3) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| arc_segment_distance(pts[i], pts[(i + 1) % n], x))
        .fold(f64::INFINITY, f64::min)
}

/// Precomputed segment frames for the raster scan: one `acos` per queried
/// point instead of one per segment.
pub struct ArcIndex {
    seg_a: Vec<V3>,
    seg_b: Vec<V3>,
    normal: Vec<V3>,
    tan_a: Vec<V3>,
    tan_b: Vec<V3>,
}

impl ArcIndex {
    pub fn build(pts: &[V3]) -> Self {
        let n = pts.len();
        let mut idx = ArcIndex {
            seg_a: Vec::with_capacity(n),
            seg_b: Vec::with_capacity(n),
            normal: Vec::with_capacity(n),
            tan_a: Vec::with_capacity(n),
            tan_b: Vec::with_capacity(n),
        };
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let nv = normalize(cross(a, b));
            idx.seg_a.push(a);
            idx.seg_b.push(b);
            idx.normal.push(nv);
            idx.tan_a.push(cross(nv, a));
            idx.tan_b.push(cross(b, nv));
        }
        idx
    }

    pub fn distance(&self, x: V3) -> f64 {
        // Maximize the cosine of the distance over all segments.
        let mut best = -1.0f64;
        for k in 0..self.seg_a.len() {
            let c = if dot(self.tan_a[k], x) >= 0.0 && dot(self.tan_b[k], x) >= 0.0 {
                let s = dot(x, self.normal[k]);
                (1.0 - s * s).max(0.0).sqrt()
            } else {
                dot(x, self.seg_a[k]).max(dot(x, self.seg_b[k]))
            };
            if c > best {
                best = c;
            }
        }
        best.clamp(-1.0, 1.0).acos()
    }
}

fn arcs_cross(a: V3, b: V3, c: V3, d: V3) -> bool {
    let n1 = cross(a, b);
    let n2 = cross(c, d);
    // Straddle tests against both great circles.
    if dot(n1, c) * dot(n1, d) >= 0.0 || dot(n2, a) * dot(n2, b) >= 0.0 {
        return false;
    }
    let p = cross(n1, n2);
    let np = norm(p);
    if np == 0.0 {
        return false;
    }
    let p = [p[0] / np, p[1] / np, p[2] / np];
    // The great circles meet at ±p; take the candidate on the minor arc of
    // (c, d) and require it interior to (a, b) as well.
    let mid_cd = [c[0] + d[0], c[1] + d[1], c[2] + d[2]];
    let q = if dot(p, mid_cd) > 0.0 { p } else { [-p[0], -p[1], -p[2]] };
    dot(cross(n1, a), q) > 0.0 && dot(cross(b, n1), q) > 0.0
}

pub fn validate(pts: &[V3], witness: &V3) -> Result<()> {
    for (i, p) in pts.iter().enumerate() {
        if (norm(*p) - 1.0).abs() > 1e-12 {
            return Err(Error::invalid(format!(
                "boundary point {i} is not on the unit sphere (|p| = {})",
                norm(*p)
            )));
        }
    }
    if (norm(*witness) - 1.0).abs() > 1e-9 {
        return Err(Error::invalid("witness point must be a unit vector".to_string()));
    }
    let n = pts.len();
    for i in 0..n {
        if arc(pts[i], pts[(i + 1) % n]) < 1e-15 {
            return Err(Error::invalid(format!("repeated boundary point at index {i}")));
        }
    }
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if arcs_cross(a, b, c, d) {
                return Err(Error::invalid(format!(
                    "boundary self-intersects (segments {i} and {j})"
                )));
            }
        }
    }
    let a = fan_area(pts, *witness);
    if a <= 0.0 {
        return Err(Error::invalid(
            "boundary must wind positively around the witness point".to_string(),
        ));
    }
    if a >= 4.0 * std::f64::consts::PI - 1e-9 {
        return Err(Error::invalid("enclosed area must be smaller than the sphere".to_string()));
    }
    Ok(())
}
