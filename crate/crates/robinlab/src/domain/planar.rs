//! Planar polygon primitives: validation, shoelace area, winding-number
//! containment, point-to-segment distance with bounding-box pruning.

use crate::error::{Error, Result};

#[inline]
fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
fn norm(a: [f64; 2]) -> f64 {
    dot(a, a).sqrt()
}

pub fn perimeter(pts: &[[f64; 2]]) -> f64 {
    let n = pts.len();
    (0..n).map(|i| norm(sub(pts[(i + 1) % n], pts[i]))).sum()
}

/// Shoelace area; positive for counterclockwise orientation.
pub fn signed_area(pts: &[[f64; 2]]) -> f64 {
    let n = pts.len();
    0.5 * (0..n)
        .map(|i| cross(pts[i], pts[(i + 1) % n]))
        .sum::<f64>()
}

pub fn area(pts: &[[f64; 2]]) -> f64 {
    signed_area(pts)
}

/// Proper segment intersection test (shared endpoints between neighbors are
/// not counted).
fn segments_cross(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let d1 = cross(sub(b, a), sub(c, a));
    let d2 = cross(sub(b, a), sub(d, a));
    let d3 = cross(sub(d, c), sub(a, c));
    let d4 = cross(sub(d, c), sub(b, c));
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

pub fn validate(pts: &[[f64; 2]]) -> Result<()> {
    let n = pts.len();
    for i in 0..n {
        let j = (i + 1) % n;
        if norm(sub(pts[j], pts[i])) == 0.0 {
            return Err(Error::invalid(format!("repeated boundary point at index {i}")));
        }
    }
    if signed_area(pts) <= 0.0 {
        return Err(Error::invalid(
            "boundary must be positively oriented (counterclockwise)".to_string(),
        ));
    }
    // O(n²) simplicity check; boundaries are a few thousand points at most.
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue; // neighbors through the wrap-around
            }
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return Err(Error::invalid(format!(
                    "boundary self-intersects (segments {i} and {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Winding-number containment: total subtended angle ≈ 2π inside, 0 outside.
pub fn contains(pts: &[[f64; 2]], x: [f64; 2]) -> bool {
    let n = pts.len();
    let mut angle = 0.0;
    for i in 0..n {
        let a = sub(pts[i], x);
        let b = sub(pts[(i + 1) % n], x);
        angle += cross(a, b).atan2(dot(a, b));
    }
    angle.abs() > std::f64::consts::PI
}

#[inline]
pub fn segment_distance_sq(a: [f64; 2], b: [f64; 2], x: [f64; 2]) -> f64 {
    let ab = sub(b, a);
    let ax = sub(x, a);
    let len2 = dot(ab, ab);
    let s = if len2 > 0.0 { (dot(ax, ab) / len2).clamp(0.0, 1.0) } else { 0.0 };
    let px = [a[0] + s * ab[0], a[1] + s * ab[1]];
    let d = sub(x, px);
    dot(d, d)
}

pub fn distance_to_polyline(pts: &[[f64; 2]], x: [f64; 2]) -> f64 {
    let n = pts.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let d = segment_distance_sq(pts[i], pts[(i + 1) % n], x);
        if d < best {
            best = d;
        }
    }
    best.sqrt()
}

/// Per-segment bounding boxes for the pruned raster distance scan.
pub struct SegmentIndex {
    pub segs: Vec<([f64; 2], [f64; 2])>,
    boxes: Vec<[f64; 4]>, // xmin, xmax, ymin, ymax
}

impl SegmentIndex {
    pub fn build(pts: &[[f64; 2]]) -> Self {
        let n = pts.len();
        let mut segs = Vec::with_capacity(n);
        let mut boxes = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            segs.push((a, b));
            boxes.push([
                a[0].min(b[0]),
                a[0].max(b[0]),
                a[1].min(b[1]),
                a[1].max(b[1]),
            ]);
        }
        SegmentIndex { segs, boxes }
    }

    pub fn distance(&self, x: [f64; 2]) -> f64 {
        let mut best = f64::INFINITY;
        for (k, &(a, b)) in self.segs.iter().enumerate() {
            let bb = &self.boxes[k];
            let dx = (bb[0] - x[0]).max(x[0] - bb[1]).max(0.0);
            let dy = (bb[2] - x[1]).max(x[1] - bb[3]).max(0.0);
            if dx * dx + dy * dy >= best {
                continue;
            }
            let d = segment_distance_sq(a, b, x);
            if d < best {
                best = d;
            }
        }
        best.sqrt()
    }
}

/// Sorted x-crossings of the polyline with the horizontal line `y = yline`;
/// the half-open convention (`p.y <= yline < q.y` or vice versa) makes the
/// parity fill robust against vertices on the line.
pub fn row_crossings(pts: &[[f64; 2]], yline: f64, out: &mut Vec<f64>) {
    out.clear();
    let n = pts.len();
    for i in 0..n {
        let p = pts[i];
        let q = pts[(i + 1) % n];
        if (p[1] <= yline) != (q[1] <= yline) {
            out.push(p[0] + (yline - p[1]) / (q[1] - p[1]) * (q[0] - p[0]));
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
}
