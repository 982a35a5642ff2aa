//! File formats: domain JSON, profile/eigenfunction/sweep CSV (schema
//! versioned in a header comment line), certificate JSON, and a plain text
//! triangle-mesh format.

use crate::domain::{AnalyticShape, Domain, DomainKind};
use crate::error::{Error, Result};
use crate::fem2d::TriMesh;
use crate::transplant::TestProfile;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

pub const CSV_SCHEMA_VERSION: &str = "robinlab-csv v1";

/// On-disk domain representation:
/// `{kind, points: [[…]], analytic?: {type, …}, witness?: […]}`.
#[derive(Serialize, Deserialize)]
struct DomainFile {
    kind: String,
    points: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    analytic: Option<AnalyticShape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<[f64; 3]>,
}

pub fn domain_to_json(domain: &Domain) -> Result<String> {
    let file = match domain.kind() {
        DomainKind::Planar => DomainFile {
            kind: "planar".into(),
            points: domain
                .planar_points()
                .unwrap()
                .iter()
                .map(|p| p.to_vec())
                .collect(),
            analytic: domain.analytic().copied(),
            witness: None,
        },
        DomainKind::Spherical => {
            let (pts, witness) = domain.spherical_points().unwrap();
            DomainFile {
                kind: "spherical".into(),
                points: pts.iter().map(|p| p.to_vec()).collect(),
                analytic: domain.analytic().copied(),
                witness: Some(witness),
            }
        }
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn domain_from_json(text: &str) -> Result<Domain> {
    let file: DomainFile = serde_json::from_str(text)?;
    match file.kind.as_str() {
        "planar" => {
            let pts = file
                .points
                .iter()
                .map(|p| {
                    if p.len() == 2 {
                        Ok([p[0], p[1]])
                    } else {
                        Err(Error::invalid("planar points must have 2 coordinates".to_string()))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Domain::planar(pts, file.analytic)
        }
        "spherical" => {
            let pts = file
                .points
                .iter()
                .map(|p| {
                    if p.len() == 3 {
                        Ok([p[0], p[1], p[2]])
                    } else {
                        Err(Error::invalid("spherical points must have 3 coordinates".to_string()))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let witness = file
                .witness
                .ok_or_else(|| Error::invalid("spherical domain needs a witness point".to_string()))?;
            Domain::spherical(pts, witness, file.analytic)
        }
        k => Err(Error::invalid(format!("unknown domain kind {k:?}"))),
    }
}

pub fn write_domain(path: &Path, domain: &Domain) -> Result<()> {
    fs::write(path, domain_to_json(domain)?)?;
    Ok(())
}

pub fn read_domain(path: &Path) -> Result<Domain> {
    domain_from_json(&fs::read_to_string(path)?)
}

fn csv_header(columns: &str) -> String {
    format!("# {CSV_SCHEMA_VERSION}; columns: {columns}\n")
}

/// Profiles as CSV with columns `t, A, L`.
pub fn profiles_csv(profiles: &crate::domain::EmpiricalProfiles) -> String {
    let mut out = csv_header("t,A,L");
    out.push_str("t,A,L\n");
    for i in 0..profiles.t.len() {
        let _ = writeln!(out, "{},{},{}", profiles.t[i], profiles.area[i], profiles.ring[i]);
    }
    out
}

/// Radial eigenfunction as CSV with columns `t, psi`.
pub fn test_profile_csv(profile: &TestProfile) -> String {
    let mut out = csv_header("t,psi");
    out.push_str("t,psi\n");
    let (t, psi, _) = profile.nodes();
    for i in 0..t.len() {
        let _ = writeln!(out, "{},{}", t[i], psi[i]);
    }
    out
}

/// Generic two-column sweep CSV.
pub fn sweep_csv(xname: &str, yname: &str, rows: &[(f64, f64)]) -> String {
    let mut out = csv_header(&format!("{xname},{yname}"));
    let _ = writeln!(out, "{xname},{yname}");
    for (x, y) in rows {
        let _ = writeln!(out, "{x},{y}");
    }
    out
}

/// FEM eigenvector as CSV with columns `index, x, y, value`.
pub fn eigenvector_csv(mesh: &TriMesh, coefficients: &[f64]) -> String {
    let mut out = csv_header("index,x,y,value");
    out.push_str("index,x,y,value\n");
    for (i, (v, c)) in mesh.vertices.iter().zip(coefficients).enumerate() {
        let _ = writeln!(out, "{i},{},{},{c}", v[0], v[1]);
    }
    out
}

/// Plain text mesh: `nv nt` header line, `nv` vertex lines `x y`, `nt`
/// triangle lines `i j k`.
pub fn mesh_to_text(mesh: &TriMesh) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", mesh.vertices.len(), mesh.triangles.len());
    for v in &mesh.vertices {
        let _ = writeln!(out, "{} {}", v[0], v[1]);
    }
    for t in &mesh.triangles {
        let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
    }
    out
}

/// Parse the text mesh format; boundary edges are reconstructed as the
/// edges incident to exactly one triangle, ordered by walking the loop.
pub fn mesh_from_text(text: &str) -> Result<TriMesh> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines
        .next()
        .ok_or_else(|| Error::invalid("empty mesh file".to_string()))?;
    let mut it = head.split_whitespace();
    let nv: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::invalid("bad mesh header".to_string()))?;
    let nt: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::invalid("bad mesh header".to_string()))?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let line = lines
            .next()
            .ok_or_else(|| Error::invalid("truncated vertex block".to_string()))?;
        let nums: Vec<f64> = line
            .split_whitespace()
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::invalid(format!("bad vertex line: {e}")))?;
        if nums.len() != 2 {
            return Err(Error::invalid("vertex lines need 2 coordinates".to_string()));
        }
        vertices.push([nums[0], nums[1]]);
    }
    let mut triangles = Vec::with_capacity(nt);
    for _ in 0..nt {
        let line = lines
            .next()
            .ok_or_else(|| Error::invalid("truncated triangle block".to_string()))?;
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::invalid(format!("bad triangle line: {e}")))?;
        if nums.len() != 3 || nums.iter().any(|&i| i >= nv) {
            return Err(Error::invalid("triangle lines need 3 valid indices".to_string()));
        }
        triangles.push([nums[0], nums[1], nums[2]]);
    }

    // Boundary = edges seen once, kept in triangle orientation.
    use std::collections::HashMap;
    let mut count: HashMap<(usize, usize), (usize, [usize; 2])> = HashMap::new();
    for t in &triangles {
        for k in 0..3 {
            let (a, b) = (t[k], t[(k + 1) % 3]);
            let key = (a.min(b), a.max(b));
            let e = count.entry(key).or_insert((0, [a, b]));
            e.0 += 1;
        }
    }
    let mut next: HashMap<usize, [usize; 2]> = HashMap::new();
    for (_, (c, edge)) in count {
        if c == 1 {
            next.insert(edge[0], edge);
        }
    }
    if next.is_empty() {
        return Err(Error::invalid("mesh has no boundary".to_string()));
    }
    let start = *next.keys().min().unwrap();
    let mut boundary_edges = Vec::with_capacity(next.len());
    let mut cur = start;
    loop {
        let edge = *next
            .get(&cur)
            .ok_or_else(|| Error::invalid("boundary loop is not closed".to_string()))?;
        boundary_edges.push(edge);
        cur = edge[1];
        if cur == start {
            break;
        }
        if boundary_edges.len() > vertices.len() {
            return Err(Error::invalid("boundary walk did not terminate".to_string()));
        }
    }

    let mut h_max = 0.0f64;
    for t in &triangles {
        for k in 0..3 {
            let a = vertices[t[k]];
            let b = vertices[t[(k + 1) % 3]];
            h_max = h_max.max(((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt());
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

pub fn write_mesh(path: &Path, mesh: &TriMesh) -> Result<()> {
    fs::write(path, mesh_to_text(mesh))?;
    Ok(())
}

pub fn read_mesh(path: &Path) -> Result<TriMesh> {
    mesh_from_text(&fs::read_to_string(path)?)
}

/// Serialize any certificate list as pretty JSON.
pub fn certificates_json<T: Serialize>(certs: &[T]) -> Result<String> {
    Ok(serde_json::to_string_pretty(certs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fem2d::mesh_star_shaped;

    #[test]
    fn domain_json_round_trip() {
        let d = corpus::ellipse(2.0, 1.0, 64).unwrap();
        let text = domain_to_json(&d).unwrap();
        let back = domain_from_json(&text).unwrap();
        assert_eq!(back.kind(), DomainKind::Planar);
        assert!((back.perimeter() - d.perimeter()).abs() < 1e-12);
        assert_eq!(back.planar_points().unwrap().len(), 64);

        let cap = corpus::spherical_cap(0.7, 64).unwrap();
        let text = domain_to_json(&cap).unwrap();
        let back = domain_from_json(&text).unwrap();
        assert_eq!(back.kind(), DomainKind::Spherical);
        assert!((back.area() - cap.area()).abs() < 1e-12);
    }

    #[test]
    fn rejects_malformed_domains() {
        assert!(domain_from_json("{\"kind\":\"planar\",\"points\":[[0,0],[1,0]]}").is_err());
        assert!(domain_from_json("{\"kind\":\"weird\",\"points\":[]}").is_err());
        // Spherical without witness.
        let cap = corpus::spherical_cap(0.7, 64).unwrap();
        let mut v: serde_json::Value =
            serde_json::from_str(&domain_to_json(&cap).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("witness");
        assert!(domain_from_json(&v.to_string()).is_err());
    }

    #[test]
    fn mesh_text_round_trip() {
        let d = corpus::circle(1.0, 256).unwrap();
        let mesh = mesh_star_shaped(&d, 6, 24).unwrap();
        let text = mesh_to_text(&mesh);
        let back = mesh_from_text(&text).unwrap();
        assert_eq!(back.vertices.len(), mesh.vertices.len());
        assert_eq!(back.triangles, mesh.triangles);
        assert_eq!(back.boundary_edges.len(), mesh.boundary_edges.len());
        assert!((back.h_max - mesh.h_max).abs() < 1e-12);
        // Same boundary cycle up to starting point.
        let set_a: std::collections::HashSet<_> =
            mesh.boundary_edges.iter().map(|e| (e[0], e[1])).collect();
        let set_b: std::collections::HashSet<_> =
            back.boundary_edges.iter().map(|e| (e[0], e[1])).collect();
        assert_eq!(set_a, set_b);
    }

    #[test]
    fn csv_headers_carry_schema() {
        let d = corpus::circle(1.0, 512).unwrap();
        let p = d
            .compute_profiles(32, 256, crate::exec::Parallelism::default())
            .unwrap();
        let csv = profiles_csv(&p);
        assert!(csv.starts_with(&format!("# {CSV_SCHEMA_VERSION}")));
        assert_eq!(csv.lines().count(), 2 + p.t.len());
    }
}
