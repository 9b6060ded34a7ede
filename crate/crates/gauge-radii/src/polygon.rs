//! Convex polygons and their algebra.
//!
//! A `ConvexPolygon` stores a counterclockwise vertex cycle with collinear
//! runs merged and near-duplicate vertices removed. Degenerate bodies are
//! first-class: one vertex is a point, two a segment. Everything here is a
//! pure function of its inputs; tolerances come from [`crate::config`].

use crate::config;
use crate::error::{Error, Result};
use crate::geom::{orient, Mat2, Point};

/// Convex body represented by its counterclockwise vertex cycle.
#[derive(Clone, Debug)]
pub struct ConvexPolygon {
    verts: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds the convex hull of `points`. This is the constructor of
    /// record: it dedups, drops collinear interior points, and orients the
    /// cycle counterclockwise starting from the lexicographic minimum.
    pub fn hull(points: &[Point]) -> Result<ConvexPolygon> {
        convex_hull(points)
    }

    /// Wraps a vertex chain that is already convex and counterclockwise
    /// (e.g. output of clipping or edge-merging). Only merges duplicates and
    /// collinear runs; it does not re-sort.
    pub(crate) fn from_convex_ccw(verts: Vec<Point>) -> Result<ConvexPolygon> {
        if verts.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if verts.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteInput);
        }
        let cleaned = merge_chain(verts);
        Ok(ConvexPolygon { verts: cleaned })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a constructed polygon has at least one vertex
    }

    pub fn is_point(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.verts.len() == 2
    }

    /// True when the polygon has nonempty interior.
    pub fn is_fulldimensional(&self) -> bool {
        self.verts.len() >= 3
    }

    /// Mean of the vertices. Interior for every convex polygon, which is all
    /// the gauge machinery needs; not the area centroid.
    pub fn centroid(&self) -> Point {
        let mut c = Point::ZERO;
        for &v in &self.verts {
            c = c + v;
        }
        c / self.verts.len() as f64
    }

    /// Radius of the smallest origin-centered disk containing the polygon.
    pub fn bounding_radius(&self) -> f64 {
        self.verts.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn signed_area(&self) -> f64 {
        let n = self.verts.len();
        if n < 3 {
            return 0.0;
        }
        let mut acc = 0.0;
        for i in 0..n {
            acc += self.verts[i].cross(self.verts[(i + 1) % n]);
        }
        acc / 2.0
    }

    pub fn translate(&self, t: Point) -> ConvexPolygon {
        ConvexPolygon {
            verts: self.verts.iter().map(|&v| v + t).collect(),
        }
    }

    /// Dilation about the origin. A negative factor is a point reflection,
    /// which preserves orientation in the plane (det t²I > 0), so the cycle
    /// order is kept. A zero factor collapses to the origin point.
    pub fn scale(&self, t: f64) -> ConvexPolygon {
        if t == 0.0 {
            return ConvexPolygon {
                verts: vec![Point::ZERO],
            };
        }
        ConvexPolygon {
            verts: self.verts.iter().map(|&v| v * t).collect(),
        }
    }

    pub fn negate(&self) -> ConvexPolygon {
        self.scale(-1.0)
    }

    pub fn scale_about(&self, center: Point, t: f64) -> ConvexPolygon {
        self.translate(-center).scale(t).translate(center)
    }

    /// Support value `h(P, u) = max_v u·v`. Hot path: no allocation, no
    /// direction check.
    pub fn support_value(&self, u: Point) -> f64 {
        self.verts
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Support value plus the set of attaining vertices (all vertices whose
    /// supporting-plane distance is within `eps_geo`).
    pub fn support(&self, u: Point) -> Result<Support> {
        let un = u.norm();
        if !(un > 0.0) || !un.is_finite() {
            return Err(Error::ZeroDirection);
        }
        let value = self.support_value(u);
        let tol = config::eps_geo() * un * (1.0 + self.bounding_radius());
        let argmax = self
            .verts
            .iter()
            .enumerate()
            .filter(|(_, v)| value - v.dot(u) <= tol)
            .map(|(i, _)| i)
            .collect();
        Ok(Support { value, argmax })
    }

    /// Outward unit normals, one per edge, in edge order (edge `i` joins
    /// vertex `i` to vertex `i+1`).
    pub fn edge_unit_normals(&self) -> Vec<Point> {
        let n = self.verts.len();
        let mut out = Vec::with_capacity(n);
        if n < 2 {
            return out;
        }
        let count = if n == 2 { 2 } else { n };
        for i in 0..count {
            let a = self.verts[i % n];
            let b = self.verts[(i + 1) % n];
            // For a CCW cycle the outward normal is the edge rotated -90°.
            if let Some(u) = (-(b - a).perp()).unit() {
                out.push(u);
            } else {
                out.push(Point::ZERO);
            }
        }
        out
    }

    /// Halfplane representation `n·x <= h`: edge-supported halfplanes for
    /// fulldimensional bodies, a four-halfplane "flat box" for segments and
    /// points. Intersecting all of them reproduces the body.
    pub fn halfplanes(&self) -> Vec<(Point, f64)> {
        match self.verts.len() {
            1 => {
                let p = self.verts[0];
                vec![
                    (Point::new(1.0, 0.0), p.x),
                    (Point::new(-1.0, 0.0), -p.x),
                    (Point::new(0.0, 1.0), p.y),
                    (Point::new(0.0, -1.0), -p.y),
                ]
            }
            2 => {
                let a = self.verts[0];
                let b = self.verts[1];
                let d = (b - a).unit().unwrap_or(Point::new(1.0, 0.0));
                let n = d.perp();
                vec![
                    (n, n.dot(a)),
                    (-n, -n.dot(a)),
                    (d, d.dot(b)),
                    (-d, -d.dot(a)),
                ]
            }
            _ => {
                let normals = self.edge_unit_normals();
                normals
                    .into_iter()
                    .enumerate()
                    .map(|(i, n)| (n, n.dot(self.verts[i])))
                    .collect()
            }
        }
    }

    /// Point membership within tolerance `tol` (absolute, scaled internally
    /// by the body size).
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let scale = 1.0 + self.bounding_radius() + p.norm();
        let t = tol * scale;
        match self.verts.len() {
            1 => (p - self.verts[0]).norm() <= t,
            2 => {
                let a = self.verts[0];
                let b = self.verts[1];
                let d = b - a;
                let len = d.norm();
                if len == 0.0 {
                    return (p - a).norm() <= t;
                }
                let off = d.cross(p - a).abs() / len;
                let along = d.dot(p - a) / len;
                off <= t && along >= -t && along <= len + t
            }
            _ => self
                .halfplanes()
                .into_iter()
                .all(|(n, h)| n.dot(p) <= h + t),
        }
    }

    /// Minkowski sum via merged edge rotation. Exact vertex arithmetic: each
    /// output vertex is a sum of one input vertex from each polygon.
    pub fn minkowski_sum(&self, other: &ConvexPolygon) -> ConvexPolygon {
        if self.is_point() {
            return other.translate(self.verts[0]);
        }
        if other.is_point() {
            return self.translate(other.verts[0]);
        }
        let (pa, ea) = edge_cycle(self);
        let (pb, eb) = edge_cycle(other);
        let mut verts = Vec::with_capacity(ea.len() + eb.len());
        let mut cur = pa + pb;
        let mut i = 0;
        let mut j = 0;
        while i < ea.len() || j < eb.len() {
            verts.push(cur);
            let step = if i == ea.len() {
                let e = eb[j].0;
                j += 1;
                e
            } else if j == eb.len() {
                let e = ea[i].0;
                i += 1;
                e
            } else if ea[i].1 <= eb[j].1 {
                let e = ea[i].0;
                i += 1;
                e
            } else {
                let e = eb[j].0;
                j += 1;
                e
            };
            cur = cur + step;
        }
        ConvexPolygon::from_convex_ccw(verts)
            .expect("minkowski sum of valid polygons is valid")
    }

    /// The difference body `P + (-P)`, centrally symmetric about the origin.
    pub fn difference_body(&self) -> ConvexPolygon {
        self.minkowski_sum(&self.negate())
    }

    /// Minkowski gauge of `x` with respect to this body: the least
    /// `lambda >= 0` with `x ∈ lambda · P`. Requires the origin strictly
    /// inside.
    pub fn gauge_value(&self, x: Point) -> Result<f64> {
        Ok(self.gauge()?.value(x))
    }

    /// Precomputed gauge evaluator for repeated queries against one body.
    pub fn gauge(&self) -> Result<GaugeEvaluator> {
        if !self.is_fulldimensional() {
            return Err(Error::DegenerateGauge);
        }
        let planes = self.halfplanes();
        let interior_tol = 1e-12 * (1.0 + self.bounding_radius());
        if planes.iter().any(|&(_, h)| h <= interior_tol) {
            return Err(Error::GaugeOriginNotInterior);
        }
        Ok(GaugeEvaluator { planes })
    }

    /// Intersection with another convex body; `None` when disjoint.
    pub fn intersect(&self, other: &ConvexPolygon) -> Option<ConvexPolygon> {
        // Clip the higher-dimensional body by the other's halfplanes so the
        // degenerate special cases stay on the subject side.
        let (subject, clipper) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let tol = config::eps_geo()
            * (1.0 + subject.bounding_radius() + clipper.bounding_radius());
        let mut pts: Vec<Point> = subject.verts.clone();
        for (n, h) in clipper.halfplanes() {
            pts = clip_halfplane(&pts, n, h, tol);
            if pts.is_empty() {
                return None;
            }
        }
        ConvexPolygon::hull(&pts).ok()
    }

    /// Image under `x ↦ M x + b`. Reorients when `det(M) < 0`.
    pub fn affine_map(&self, m: &Mat2, b: Point) -> Result<ConvexPolygon> {
        let det = m.det();
        let scale = m.max_abs();
        if !det.is_finite() || det.abs() <= 1e-12 * scale * scale {
            return Err(Error::SingularMap);
        }
        let mut verts: Vec<Point> = self.verts.iter().map(|&v| m.apply(v) + b).collect();
        if det < 0.0 {
            verts.reverse();
        }
        ConvexPolygon::from_convex_ccw(verts)
    }

    /// Equality up to cyclic rotation of the vertex list, within `tol`.
    pub fn approx_eq(&self, other: &ConvexPolygon, tol: f64) -> bool {
        if self.verts.len() != other.verts.len() {
            return false;
        }
        let n = self.verts.len();
        let scale = 1.0 + self.bounding_radius().max(other.bounding_radius());
        let t = tol * scale;
        (0..n).any(|shift| {
            (0..n).all(|i| (self.verts[i] - other.verts[(i + shift) % n]).norm() <= t)
        })
    }
}

/// Support value together with every attaining vertex index.
#[derive(Clone, Debug)]
pub struct Support {
    pub value: f64,
    pub argmax: Vec<usize>,
}

/// Gauge function of a fixed fulldimensional body containing the origin.
#[derive(Clone, Debug)]
pub struct GaugeEvaluator {
    planes: Vec<(Point, f64)>,
}

impl GaugeEvaluator {
    pub fn value(&self, x: Point) -> f64 {
        self.planes
            .iter()
            .map(|&(n, h)| n.dot(x) / h)
            .fold(0.0, f64::max)
    }
}

/// Convex hull of a finite point set (Andrew's monotone chain).
///
/// Collinear interior points are removed; the output cycle is
/// counterclockwise and starts at the lexicographic minimum. Degenerate
/// inputs yield a point or a segment.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFiniteInput);
    }
    let scale = 1.0 + points.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let dedup_tol = config::eps_geo() * scale;

    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| {
        (a.x, a.y)
            .partial_cmp(&(b.x, b.y))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    pts.dedup_by(|a, b| (*a - *b).norm() <= dedup_tol);

    if pts.len() == 1 {
        return Ok(ConvexPolygon { verts: pts });
    }

    let turn_tol = |a: Point, b: Point, c: Point| -> f64 {
        config::eps_geo() * (b - a).norm() * (c - b).norm()
    };
    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if orient(a, b, p) <= turn_tol(a, b, p) {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if orient(a, b, p) <= turn_tol(a, b, p) {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.is_empty() {
        // All points collapsed onto a segment's interior; keep the extremes.
        lower = vec![pts[0], pts[pts.len() - 1]];
    }
    Ok(ConvexPolygon {
        verts: merge_chain(lower),
    })
}

/// Regular k-gon with circumradius 1: vertices
/// `(cos(phase + 2πj/k), sin(phase + 2πj/k))`, `j = 0..k`.
pub fn regular_kgon(k: u32, phase: f64) -> Result<ConvexPolygon> {
    if k < 3 {
        return Err(Error::ParamOutOfRange {
            what: "k",
            value: k as f64,
            range: "[3, ∞)",
        });
    }
    let verts = (0..k)
        .map(|j| {
            let a = phase + 2.0 * std::f64::consts::PI * j as f64 / k as f64;
            Point::new(a.cos(), a.sin())
        })
        .collect();
    ConvexPolygon::from_convex_ccw(verts)
}

/// Minkowski interpolation `(1-λ)K + λC` for `λ ∈ [0,1]`.
pub fn interpolate(k: &ConvexPolygon, c: &ConvexPolygon, lambda: f64) -> Result<ConvexPolygon> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::ParamOutOfRange {
            what: "lambda",
            value: lambda,
            range: "[0, 1]",
        });
    }
    Ok(k.scale(1.0 - lambda).minkowski_sum(&c.scale(lambda)))
}

/// Merges duplicates and collinear runs of a convex CCW chain, cyclically.
fn merge_chain(mut verts: Vec<Point>) -> Vec<Point> {
    let scale = 1.0 + verts.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let dedup_tol = config::eps_geo() * scale;
    loop {
        let n = verts.len();
        if n <= 1 {
            return verts;
        }
        // Cyclic duplicate pass.
        let mut deduped: Vec<Point> = Vec::with_capacity(n);
        for &v in &verts {
            if deduped
                .last()
                .map_or(true, |&last| (v - last).norm() > dedup_tol)
            {
                deduped.push(v);
            }
        }
        while deduped.len() >= 2
            && (deduped[0] - *deduped.last().unwrap()).norm() <= dedup_tol
        {
            deduped.pop();
        }
        if deduped.len() <= 2 {
            return deduped;
        }
        // Cyclic collinear pass.
        let m = deduped.len();
        let mut kept: Vec<Point> = Vec::with_capacity(m);
        for i in 0..m {
            let a = deduped[(i + m - 1) % m];
            let b = deduped[i];
            let c = deduped[(i + 1) % m];
            let tol = config::eps_geo() * (b - a).norm() * (c - b).norm();
            if orient(a, b, c) > tol {
                kept.push(b);
            }
        }
        if kept.is_empty() {
            // Fully collinear cycle: collapse to the extreme segment.
            let (mut lo, mut hi) = (deduped[0], deduped[0]);
            for &v in &deduped {
                if (v.x, v.y) < (lo.x, lo.y) {
                    lo = v;
                }
                if (v.x, v.y) > (hi.x, hi.y) {
                    hi = v;
                }
            }
            return if (hi - lo).norm() <= dedup_tol {
                vec![lo]
            } else {
                vec![lo, hi]
            };
        }
        if kept.len() == verts.len() {
            return kept;
        }
        verts = kept;
    }
}

/// Vertex cycle as (start point, edges with non-decreasing polar angle).
///
/// The cycle is rotated so the minimum-angle edge comes first; its tail
/// vertex is the walk origin. Anchoring on the edge angle rather than a
/// bottom-most vertex keeps the ordering stable when a horizontal edge has
/// floating-point noise in its y coordinates.
fn edge_cycle(p: &ConvexPolygon) -> (Point, Vec<(Point, f64)>) {
    let verts = &p.verts;
    let n = verts.len();
    if n == 1 {
        return (verts[0], Vec::new());
    }
    let raw_angle = |e: Point| -> f64 {
        // Snap near-axis components so a horizontal edge with noise of a few
        // ulps in y lands at angle 0, not 2π - ε. Kinks this introduces are
        // below the collinear-merge tolerance.
        let eps = 1e-12 * (e.x.abs() + e.y.abs());
        let x = if e.x.abs() <= eps { 0.0 } else { e.x };
        let y = if e.y.abs() <= eps { 0.0 } else { e.y };
        let a = y.atan2(x);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    };
    let count = if n == 2 { 2 } else { n };
    let mut edges: Vec<(Point, f64, usize)> = (0..count)
        .map(|i| {
            let e = verts[(i + 1) % n] - verts[i % n];
            (e, raw_angle(e), i % n)
        })
        .collect();
    let min_idx = edges
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.partial_cmp(&b.1 .1).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    edges.rotate_left(min_idx);
    let start = verts[edges[0].2];
    // From the minimum-angle edge the convex sweep is monotone up to fp
    // noise; clamp tiny inversions so the merge comparator stays sane.
    let mut prev = edges[0].1;
    let out = edges
        .into_iter()
        .map(|(e, a, _)| {
            let a = a.max(prev);
            prev = a;
            (e, a)
        })
        .collect();
    (start, out)
}

/// Sutherland–Hodgman style clip of a convex chain by `n·x <= h`.
fn clip_halfplane(pts: &[Point], n: Point, h: f64, tol: f64) -> Vec<Point> {
    match pts.len() {
        0 => Vec::new(),
        1 => {
            if n.dot(pts[0]) <= h + tol {
                pts.to_vec()
            } else {
                Vec::new()
            }
        }
        2 => clip_segment(pts[0], pts[1], n, h, tol),
        _ => {
            let m = pts.len();
            let mut out = Vec::with_capacity(m + 1);
            for i in 0..m {
                let a = pts[i];
                let b = pts[(i + 1) % m];
                let da = n.dot(a) - h;
                let db = n.dot(b) - h;
                if da <= tol {
                    out.push(a);
                }
                if (da <= tol) != (db <= tol) && (da - db).abs() > f64::MIN_POSITIVE {
                    let t = da / (da - db);
                    out.push(a + (b - a) * t.clamp(0.0, 1.0));
                }
            }
            out
        }
    }
}

fn clip_segment(a: Point, b: Point, n: Point, h: f64, tol: f64) -> Vec<Point> {
    let da = n.dot(a) - h;
    let db = n.dot(b) - h;
    if da > tol && db > tol {
        return Vec::new();
    }
    if da <= tol && db <= tol {
        return vec![a, b];
    }
    let t = (da / (da - db)).clamp(0.0, 1.0);
    let cut = a + (b - a) * t;
    if da > tol {
        vec![cut, b]
    } else {
        vec![a, cut]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn square() -> ConvexPolygon {
        ConvexPolygon::hull(&[
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn hull_removes_interior_point() {
        let p = ConvexPolygon::hull(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(0.2, 0.2),
        ])
        .unwrap();
        assert_eq!(p.len(), 3);
        let expect = ConvexPolygon::hull(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(p.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn hull_degenerate_segment() {
        let p = ConvexPolygon::hull(&[Point::new(0.0, 0.0), Point::new(1.0, 1.0)]).unwrap();
        assert!(p.is_segment());
        let q = ConvexPolygon::hull(&[
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.5),
            Point::new(1.0, 1.0),
        ])
        .unwrap();
        assert!(q.is_segment());
        assert!((q.vertices()[0] - Point::new(0.0, 0.0)).norm() < 1e-12);
        assert!((q.vertices()[1] - Point::new(1.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn hull_empty_errors() {
        assert!(matches!(
            ConvexPolygon::hull(&[]),
            Err(Error::EmptyPointSet)
        ));
    }

    #[test]
    fn hull_of_random_cloud_contains_inputs() {
        let mut rng = StdRng::seed_from_u64(42);
        let pts: Vec<Point> = (0..1000)
            .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect();
        let hull = ConvexPolygon::hull(&pts).unwrap();
        // Hull vertices come from the input set.
        for v in hull.vertices() {
            assert!(pts.iter().any(|p| (*p - *v).norm() < 1e-12));
        }
        // Every input lies inside (halfplane test).
        for p in &pts {
            assert!(hull.contains(*p, 1e-9));
        }
    }

    #[test]
    fn support_square() {
        let s = square().support(Point::new(1.0, 0.0)).unwrap();
        assert!((s.value - 1.0).abs() < 1e-15);
        assert_eq!(s.argmax.len(), 2);
    }

    #[test]
    fn support_triangle_apex() {
        let t = regular_kgon(3, std::f64::consts::FRAC_PI_2).unwrap();
        let s = t.support(Point::new(0.0, 1.0)).unwrap();
        assert!((s.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn support_zero_direction_errors() {
        assert!(matches!(
            square().support(Point::ZERO),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn width_nonnegative() {
        let mut rng = StdRng::seed_from_u64(1);
        let t = regular_kgon(7, 0.3).unwrap();
        for _ in 0..100 {
            let u = Point::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
            if u.norm() < 1e-6 {
                continue;
            }
            assert!(t.support_value(u) + t.support_value(-u) >= 0.0);
        }
    }

    #[test]
    fn minkowski_point_translates() {
        let t = regular_kgon(5, 0.0).unwrap();
        let p = ConvexPolygon::hull(&[Point::new(2.0, -1.0)]).unwrap();
        let sum = t.minkowski_sum(&p);
        assert!(sum.approx_eq(&t.translate(Point::new(2.0, -1.0)), 1e-12));
    }

    #[test]
    fn minkowski_squares() {
        let sum = square().minkowski_sum(&square());
        let expect = square().scale(2.0);
        assert!(sum.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn minkowski_support_additivity() {
        let mut rng = StdRng::seed_from_u64(7);
        let mk = |rng: &mut StdRng, n: usize| {
            let pts: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
                .collect();
            ConvexPolygon::hull(&pts).unwrap()
        };
        let p = mk(&mut rng, 8);
        let q = mk(&mut rng, 6);
        let sum = p.minkowski_sum(&q);
        assert!(sum.len() <= p.len() + q.len());
        for _ in 0..100 {
            let a = rng.gen::<f64>() * std::f64::consts::TAU;
            let u = Point::new(a.cos(), a.sin());
            let lhs = sum.support_value(u);
            let rhs = p.support_value(u) + q.support_value(u);
            assert!((lhs - rhs).abs() < 1e-9, "support additivity: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn minkowski_sum_against_pairwise_hull_oracle() {
        // Independent route: hull of all pairwise vertex sums.
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..50 {
            let mk = |rng: &mut StdRng| {
                let n = rng.gen_range(2..8);
                let pts: Vec<Point> = (0..n)
                    .map(|_| Point::new(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0))
                    .collect();
                ConvexPolygon::hull(&pts).unwrap()
            };
            let p = mk(&mut rng);
            let q = mk(&mut rng);
            let fast = p.minkowski_sum(&q);
            let mut sums = Vec::new();
            for a in p.vertices() {
                for b in q.vertices() {
                    sums.push(*a + *b);
                }
            }
            let slow = ConvexPolygon::hull(&sums).unwrap();
            assert!(
                fast.approx_eq(&slow, 1e-9),
                "edge-merge vs pairwise hull mismatch: {:?} vs {:?}",
                fast.vertices(),
                slow.vertices()
            );
        }
    }

    #[test]
    fn difference_body_segment() {
        let s = ConvexPolygon::hull(&[Point::new(0.0, 0.0), Point::new(1.0, 0.0)]).unwrap();
        let d = s.difference_body();
        assert!(d.is_segment());
        let expect =
            ConvexPolygon::hull(&[Point::new(-1.0, 0.0), Point::new(1.0, 0.0)]).unwrap();
        assert!(d.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn difference_body_triangle_is_hexagon() {
        let t = ConvexPolygon::hull(&[
            Point::new(0.0, 0.0),
            Point::new(1.3, 0.2),
            Point::new(0.4, 1.1),
        ])
        .unwrap();
        let d = t.difference_body();
        assert_eq!(d.len(), 6);
        // Central symmetry: vertex set closed under negation.
        for v in d.vertices() {
            assert!(
                d.vertices().iter().any(|w| (*w + *v).norm() < 1e-9),
                "no antipode for {v:?}"
            );
        }
    }

    #[test]
    fn difference_body_translation_invariant() {
        let mut rng = StdRng::seed_from_u64(3);
        let t = regular_kgon(5, 0.1).unwrap();
        for _ in 0..10 {
            let shift = Point::new(rng.gen::<f64>() * 10.0 - 5.0, rng.gen::<f64>() * 10.0 - 5.0);
            let d1 = t.difference_body();
            let d2 = t.translate(shift).difference_body();
            assert!(d1.approx_eq(&d2, 1e-9));
        }
    }

    #[test]
    fn gauge_basics() {
        let sq = square();
        assert_eq!(sq.gauge_value(Point::ZERO).unwrap(), 0.0);
        assert!((sq.gauge_value(Point::new(1.0, 1.0)).unwrap() - 1.0).abs() < 1e-12);
        // Positive homogeneity.
        let x = Point::new(0.3, -0.2);
        for t in [0.5, 2.0, 7.5] {
            let a = sq.gauge_value(x * t).unwrap();
            let b = t * sq.gauge_value(x).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn gauge_requires_interior_origin() {
        let shifted = square().translate(Point::new(5.0, 0.0));
        assert!(matches!(
            shifted.gauge_value(Point::new(1.0, 0.0)),
            Err(Error::GaugeOriginNotInterior)
        ));
    }

    #[test]
    fn intersect_self_is_identity() {
        let t = regular_kgon(6, 0.2).unwrap();
        let i = t.intersect(&t).unwrap();
        assert!(i.approx_eq(&t, 1e-9));
    }

    #[test]
    fn intersect_disjoint_is_none() {
        let a = square();
        let b = ConvexPolygon::hull(&[
            Point::new(2.0, 0.0),
            Point::new(3.0, 0.0),
            Point::new(3.0, 1.0),
            Point::new(2.0, 1.0),
        ])
        .unwrap();
        assert!(a.intersect(&b).is_none());
    }

    #[test]
    fn triangle_meet_reflection_is_hexagon() {
        let s = regular_kgon(3, std::f64::consts::FRAC_PI_2).unwrap();
        let i = s.intersect(&s.negate()).unwrap();
        assert_eq!(i.len(), 6);
        for v in i.vertices() {
            assert!(i.vertices().iter().any(|w| (*w + *v).norm() < 1e-9));
        }
    }

    #[test]
    fn regular_kgon_vertices() {
        let t = regular_kgon(3, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(t
            .vertices()
            .iter()
            .any(|v| (*v - Point::new(0.0, 1.0)).norm() < 1e-12));
        let sq = regular_kgon(4, 0.0).unwrap();
        for v in sq.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        let p = regular_kgon(5, std::f64::consts::FRAC_PI_2).unwrap();
        for v in p.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        assert!(regular_kgon(2, 0.0).is_err());
    }

    #[test]
    fn affine_identity_and_reflection() {
        let t = regular_kgon(5, 0.4).unwrap();
        let id = t.affine_map(&Mat2::IDENTITY, Point::ZERO).unwrap();
        assert!(id.approx_eq(&t, 1e-12));

        let sym = square();
        let neg = sym
            .affine_map(&Mat2::new(-1.0, 0.0, 0.0, -1.0), Point::ZERO)
            .unwrap();
        assert!(neg.approx_eq(&sym, 1e-12));

        assert!(matches!(
            t.affine_map(&Mat2::new(1.0, 2.0, 2.0, 4.0), Point::ZERO),
            Err(Error::SingularMap)
        ));
    }

    #[test]
    fn interpolate_endpoints() {
        let k = ConvexPolygon::hull(&[
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 2.0),
        ])
        .unwrap();
        let c = regular_kgon(6, 0.0).unwrap();
        assert!(interpolate(&k, &c, 0.0).unwrap().approx_eq(&k, 1e-12));
        assert!(interpolate(&k, &c, 1.0).unwrap().approx_eq(&c, 1e-12));
        assert!(interpolate(&k, &c, 1.5).is_err());

        let origin = ConvexPolygon::hull(&[Point::ZERO]).unwrap();
        let half = interpolate(&origin, &c, 0.5).unwrap();
        assert!(half.approx_eq(&c.scale(0.5), 1e-12));
    }


    #[test]
    fn hull_idempotent() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let pts: Vec<Point> = (0..12)
                .map(|_| Point::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
                .collect();
            let h = ConvexPolygon::hull(&pts).unwrap();
            let h2 = ConvexPolygon::hull(h.vertices()).unwrap();
            assert!(h.approx_eq(&h2, 1e-12));
        }
    }
}
