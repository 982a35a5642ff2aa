//! Bundled benchmark domains: ellipses, superellipse "rounded rectangles",
//! smooth star shapes, spherical caps and spherical blobs, with constructors
//! that match a prescribed perimeter exactly (planar: similarity scaling;
//! spherical: root-finding on the base colatitude).

use crate::domain::{AnalyticShape, Domain};
use crate::error::{Error, Result};
use std::f64::consts::PI;

pub struct NamedDomain {
    pub id: String,
    pub domain: Domain,
}

fn planar_from_shape(shape: AnalyticShape, n: usize) -> Result<Domain> {
    Domain::planar(shape.sample_planar(n), Some(shape))
}

fn spherical_from_shape(shape: AnalyticShape, n: usize) -> Result<Domain> {
    Domain::spherical(shape.sample_spherical(n), [0.0, 0.0, 1.0], Some(shape))
}

pub fn circle(radius: f64, n: usize) -> Result<Domain> {
    planar_from_shape(AnalyticShape::Circle { radius }, n)
}

pub fn ellipse(a: f64, b: f64, n: usize) -> Result<Domain> {
    planar_from_shape(AnalyticShape::Ellipse { a, b }, n)
}

pub fn superellipse(a: f64, b: f64, p: u32, n: usize) -> Result<Domain> {
    planar_from_shape(AnalyticShape::Superellipse { a, b, p }, n)
}

pub fn star(base: f64, amplitude: f64, lobes: u32, n: usize) -> Result<Domain> {
    planar_from_shape(AnalyticShape::Star { base, amplitude, lobes }, n)
}

pub fn spherical_cap(radius: f64, n: usize) -> Result<Domain> {
    spherical_from_shape(AnalyticShape::SphericalCap { radius }, n)
}

pub fn spherical_blob(base: f64, amplitude: f64, lobes: u32, n: usize) -> Result<Domain> {
    spherical_from_shape(AnalyticShape::SphericalBlob { base, amplitude, lobes }, n)
}

/// Scale a planar shape so its analytic perimeter equals `perimeter`.
pub fn planar_with_perimeter(shape: AnalyticShape, perimeter: f64, n: usize) -> Result<Domain> {
    let p0 = shape.perimeter();
    let scaled = shape
        .scaled(perimeter / p0)
        .ok_or_else(|| Error::invalid("shape cannot be similarity-scaled".to_string()))?;
    planar_from_shape(scaled, n)
}

pub fn ellipse_with_perimeter(aspect: f64, perimeter: f64, n: usize) -> Result<Domain> {
    planar_with_perimeter(AnalyticShape::Ellipse { a: aspect, b: 1.0 }, perimeter, n)
}

/// Spherical blob with the given lobe pattern whose perimeter equals
/// `perimeter`, found by bisection on the base colatitude. The blob stays
/// inside the open hemisphere, so its area is below 2π.
pub fn spherical_blob_with_perimeter(
    amplitude: f64,
    lobes: u32,
    perimeter: f64,
    n: usize,
) -> Result<Domain> {
    if !(perimeter > 0.0 && perimeter < 2.0 * PI) {
        return Err(Error::invalid(format!(
            "cross-section perimeter must lie in (0, 2π), got {perimeter}"
        )));
    }
    let peri = |base: f64| AnalyticShape::SphericalBlob { base, amplitude, lobes }.perimeter();
    let mut lo = 1e-3;
    let mut hi = (0.5 * PI - 1e-3) / (1.0 + amplitude);
    if peri(lo) > perimeter || peri(hi) < perimeter {
        return Err(Error::invalid(format!(
            "perimeter {perimeter} not reachable for blob (amp {amplitude}, lobes {lobes})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if peri(mid) < perimeter {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    spherical_from_shape(
        AnalyticShape::SphericalBlob { base: 0.5 * (lo + hi), amplitude, lobes },
        n,
    )
}

/// The 12-domain planar benchmark corpus, every member scaled to perimeter
/// exactly 2π: five ellipses (1.2:1 … 3:1), four superellipse rounded
/// squares/rectangles, three smooth star shapes.
pub fn bundled_planar_corpus(n: usize) -> Result<Vec<NamedDomain>> {
    let shapes: Vec<(String, AnalyticShape)> = vec![
        ("ellipse-1.2".into(), AnalyticShape::Ellipse { a: 1.2, b: 1.0 }),
        ("ellipse-1.5".into(), AnalyticShape::Ellipse { a: 1.5, b: 1.0 }),
        ("ellipse-2.0".into(), AnalyticShape::Ellipse { a: 2.0, b: 1.0 }),
        ("ellipse-2.5".into(), AnalyticShape::Ellipse { a: 2.5, b: 1.0 }),
        ("ellipse-3.0".into(), AnalyticShape::Ellipse { a: 3.0, b: 1.0 }),
        (
            "rounded-square-p4".into(),
            AnalyticShape::Superellipse { a: 1.0, b: 1.0, p: 4 },
        ),
        (
            "rounded-square-p6".into(),
            AnalyticShape::Superellipse { a: 1.0, b: 1.0, p: 6 },
        ),
        (
            "rounded-rect-1.5".into(),
            AnalyticShape::Superellipse { a: 1.5, b: 1.0, p: 4 },
        ),
        (
            "rounded-rect-2.0".into(),
            AnalyticShape::Superellipse { a: 2.0, b: 1.0, p: 4 },
        ),
        (
            "star-3".into(),
            AnalyticShape::Star { base: 1.0, amplitude: 0.15, lobes: 3 },
        ),
        (
            "star-4".into(),
            AnalyticShape::Star { base: 1.0, amplitude: 0.12, lobes: 4 },
        ),
        (
            "star-5".into(),
            AnalyticShape::Star { base: 1.0, amplitude: 0.08, lobes: 5 },
        ),
    ];
    shapes
        .into_iter()
        .map(|(id, s)| {
            planar_with_perimeter(s, 2.0 * PI, n).map(|domain| NamedDomain { id, domain })
        })
        .collect()
}

/// Spherical corpus: caps across the admissible radius range plus two
/// perimeter-π blobs.
pub fn bundled_spherical_corpus(n: usize) -> Result<Vec<NamedDomain>> {
    let mut out = Vec::new();
    for (id, r) in [
        ("cap-pi6", PI / 6.0),
        ("cap-pi4", PI / 4.0),
        ("cap-pi3", PI / 3.0),
        ("cap-pi2", PI / 2.0),
    ] {
        out.push(NamedDomain {
            id: id.into(),
            domain: spherical_cap(r, n)?,
        });
    }
    for (id, amp, lobes) in [("blob-2", 0.10, 2u32), ("blob-3", 0.08, 3u32)] {
        out.push(NamedDomain {
            id: id.into(),
            domain: spherical_blob_with_perimeter(amp, lobes, PI, n)?,
        });
    }
    Ok(out)
}

/// Non-circular spherical cross-sections, perimeter-matched to `perimeter`.
pub fn spherical_cross_sections(
    perimeter: f64,
    count: usize,
    n: usize,
) -> Result<Vec<NamedDomain>> {
    let params: [(f64, u32); 10] = [
        (0.05, 2),
        (0.10, 2),
        (0.15, 2),
        (0.05, 3),
        (0.10, 3),
        (0.14, 3),
        (0.05, 4),
        (0.09, 4),
        (0.04, 5),
        (0.07, 5),
    ];
    params
        .iter()
        .take(count)
        .map(|&(amp, lobes)| {
            spherical_blob_with_perimeter(amp, lobes, perimeter, n).map(|domain| NamedDomain {
                id: format!("blob-l{lobes}-a{amp}"),
                domain,
            })
        })
        .collect()
}
