//! Polygon text format.
//!
//! A polygon file is a single JSON object `{"vertices": [[x, y], ...]}`
//! with the vertices in counterclockwise order. Clockwise input is accepted
//! and reversed; collinear vertices are merged on construction.

use crate::error::{Error, Result};
use crate::geom::{orient, Point};
use crate::polygon::ConvexPolygon;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 2]>,
}

pub fn parse_polygon(text: &str) -> Result<ConvexPolygon> {
    let file: PolygonFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidPolygon(format!("bad JSON: {e}")))?;
    if file.vertices.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut pts: Vec<Point> = file.vertices.iter().map(|v| Point::new(v[0], v[1])).collect();
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFiniteInput);
    }
    if signed_area(&pts) < 0.0 {
        pts.reverse();
    }
    let hull = ConvexPolygon::hull(&pts)?;
    // Vertices strictly interior to the hull mean the listed cycle was not
    // convex; points merged on the boundary (duplicates, collinear runs) are
    // fine.
    let tol = 1e-9 * (1.0 + hull.bounding_radius());
    for p in &pts {
        if hull.is_fulldimensional() {
            let depth = hull
                .halfplanes()
                .into_iter()
                .map(|(n, h)| h - n.dot(*p))
                .fold(f64::INFINITY, f64::min);
            if depth > tol.max(1e-7) {
                return Err(Error::InvalidPolygon(
                    "vertices are not in convex position".into(),
                ));
            }
        }
    }
    Ok(hull)
}

pub fn read_polygon(path: &Path) -> Result<ConvexPolygon> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::PolygonRead {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_polygon(&text).map_err(|e| match e {
        Error::PolygonRead { .. } => e,
        other => Error::PolygonRead {
            path: path.display().to_string(),
            reason: other.to_string(),
        },
    })
}

pub fn polygon_to_json(p: &ConvexPolygon) -> String {
    let file = PolygonFile {
        vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

fn signed_area(pts: &[Point]) -> f64 {
    if pts.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..pts.len() {
        acc += orient(pts[0], pts[i], pts[(i + 1) % pts.len()]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ccw_and_cw() {
        let ccw = r#"{"vertices": [[0,0],[1,0],[0,1]]}"#;
        let cw = r#"{"vertices": [[0,0],[0,1],[1,0]]}"#;
        let a = parse_polygon(ccw).unwrap();
        let b = parse_polygon(cw).unwrap();
        assert!(a.approx_eq(&b, 1e-12));
        assert!(a.signed_area() > 0.0);
    }

    #[test]
    fn parse_rejects_nonconvex() {
        let bow = r#"{"vertices": [[0,0],[2,0],[1,0.2],[0,2]]}"#;
        assert!(matches!(
            parse_polygon(bow),
            Err(Error::InvalidPolygon(_))
        ));
    }

    #[test]
    fn parse_accepts_collinear_run() {
        let extra = r#"{"vertices": [[0,0],[1,0],[2,0],[2,2],[0,2]]}"#;
        let p = parse_polygon(extra).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn json_roundtrip() {
        let p = crate::polygon::regular_kgon(5, 0.1).unwrap();
        let q = parse_polygon(&polygon_to_json(&p)).unwrap();
        assert!(p.approx_eq(&q, 1e-12));
    }

    #[test]
    fn read_missing_file_reports_path() {
        let err = read_polygon(Path::new("/nonexistent/poly.json")).unwrap_err();
        assert!(err.to_string().contains("cannot read polygon"));
    }
}
