//! Optimal-containment certificates and the simplex/prism reduction.
//!
//! When a translate of `K` sits optimally inside `R·C`, the contact
//! structure is a set of at most three touching points on the gauge
//! boundary whose outer normals admit a convex combination summing to zero.
//! `certify` extracts such a witness from the containment LP; `reduce`
//! turns it into the sandwich `T ⊆ K ⊆ C ⊆ S` where `T` is the simplex
//! spanned by the touching points and `S` the intersection of their
//! supporting halfplanes (a strip when only two points touch).

use crate::config;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polygon::ConvexPolygon;
use crate::radii::{circumradius, diameter, inradius};

/// Touching points, outer normals and convex coefficients witnessing that
/// the normalized body sits optimally in the gauge.
///
/// The witness lives in the normalized frame: `K' = (K - center)/radius`
/// is optimally contained in `C₀`, the gauge translated to its vertex
/// centroid. Points lie on `K' ∩ bd(C₀)`, `normals[j]` is an outer unit
/// normal of `C₀` at `points[j]`, the coefficients are nonnegative, sum to
/// one, and `Σ μ_j u_j = 0`.
#[derive(Clone, Debug)]
pub struct ContainmentCertificate {
    pub points: Vec<Point>,
    pub normals: Vec<Point>,
    pub coefficients: Vec<f64>,
    pub center: Point,
    pub radius: f64,
}

/// Slack report of the four validity assertions, all expected ≤ eps.
#[derive(Clone, Copy, Debug)]
pub struct CertificateCheck {
    /// max_j |gauge(p_j) - 1|: distance of the points from the gauge boundary.
    pub boundary_gap: f64,
    /// max_j (membership violation of p_j in the normalized body).
    pub containment_gap: f64,
    /// max_j (h(C₀, u_j) - u_j·p_j): normal-cone membership slack.
    pub cone_gap: f64,
    /// ‖Σ μ_j u_j‖.
    pub combination_norm: f64,
}

impl CertificateCheck {
    pub fn passes(&self, eps: f64) -> bool {
        self.boundary_gap <= eps
            && self.containment_gap <= eps
            && self.cone_gap <= eps
            && self.combination_norm <= eps
    }

    pub fn worst(&self) -> f64 {
        self.boundary_gap
            .max(self.containment_gap)
            .max(self.cone_gap)
            .max(self.combination_norm)
    }
}

impl ContainmentCertificate {
    pub fn k(&self) -> usize {
        self.points.len()
    }

    /// Normalized pair this certificate refers to.
    pub fn normalized_pair(
        &self,
        k: &ConvexPolygon,
        c: &ConvexPolygon,
    ) -> (ConvexPolygon, ConvexPolygon) {
        let k_norm = k.translate(-self.center).scale(1.0 / self.radius);
        let c0 = c.translate(-c.centroid());
        (k_norm, c0)
    }

    /// Re-checks validity from scratch, independently of how the
    /// certificate was constructed.
    pub fn validate(&self, k: &ConvexPolygon, c: &ConvexPolygon) -> Result<CertificateCheck> {
        let (k_norm, c0) = self.normalized_pair(k, c);
        let gauge = c0.gauge()?;
        let mut boundary_gap = 0.0f64;
        let mut containment_gap = 0.0f64;
        let mut cone_gap = 0.0f64;
        let scale = 1.0 + c0.bounding_radius();
        for (j, &p) in self.points.iter().enumerate() {
            boundary_gap = boundary_gap.max((gauge.value(p) - 1.0).abs());
            let inside = k_norm
                .halfplanes()
                .into_iter()
                .map(|(n, h)| n.dot(p) - h)
                .fold(0.0f64, f64::max);
            containment_gap = containment_gap.max(inside);
            let u = self.normals[j];
            cone_gap = cone_gap.max((c0.support_value(u) - u.dot(p)) / scale);
        }
        let mut combo = Point::ZERO;
        let mut total = 0.0;
        for (j, &mu) in self.coefficients.iter().enumerate() {
            if mu < -1e-12 {
                return Err(Error::NoCertificate);
            }
            combo = combo + self.normals[j] * mu;
            total += mu;
        }
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::NoCertificate);
        }
        Ok(CertificateCheck {
            boundary_gap,
            containment_gap,
            cone_gap,
            combination_norm: combo.norm(),
        })
    }
}

/// Extracts a containment certificate for `(K, C)`, normalizing `K` into
/// optimal position first. Uses the process `eps_cert`.
pub fn certify(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<ContainmentCertificate> {
    certify_with(k, c, config::eps_cert())
}

pub fn certify_with(
    k: &ConvexPolygon,
    c: &ConvexPolygon,
    eps_cert: f64,
) -> Result<ContainmentCertificate> {
    let cr = circumradius(k, c)?;
    if cr.radius <= 1e-300 {
        return Err(Error::ZeroCircumradius);
    }
    match extract(k, c, cr.center, cr.radius, eps_cert) {
        Ok(cert) => Ok(cert),
        Err(Error::NoCertificate) => {
            // Near-degenerate contact (e.g. vertex-on-vertex): nudge K
            // inward and retry once.
            let shrunk = k.scale_about(k.centroid(), 1.0 - 1e-9);
            let cr2 = circumradius(&shrunk, c)?;
            let mut cert = extract(&shrunk, c, cr2.center, cr2.radius, eps_cert * 10.0)?;
            cert.center = cr.center;
            cert.radius = cr.radius;
            Ok(cert)
        }
        Err(e) => Err(e),
    }
}

fn extract(
    k: &ConvexPolygon,
    c: &ConvexPolygon,
    center: Point,
    radius: f64,
    eps_cert: f64,
) -> Result<ContainmentCertificate> {
    let c0 = c.translate(-c.centroid());
    let k_norm = k.translate(-center).scale(1.0 / radius);
    let normals = c0.edge_unit_normals();
    let scale = 1.0 + c0.bounding_radius();

    // Contact rays: one entry per (gauge edge, touching vertex of K').
    let mut rays: Vec<(Point, Point)> = Vec::new(); // (unit normal, touching point)
    for (i, &n) in normals.iter().enumerate() {
        let h = c0.support_value(n);
        let mut touched = false;
        for &v in k_norm.vertices() {
            if n.dot(v) >= h - eps_cert * scale {
                if !touched {
                    rays.push((n, v));
                    touched = true;
                }
            }
        }
        let _ = i;
    }
    if rays.len() < 2 {
        return Err(Error::NoCertificate);
    }

    // Sort by normal angle and check that no open halfplane contains all
    // rays (cyclic gaps ≤ π), the geometric form of 0 ∈ conv{u_j}.
    rays.sort_by(|a, b| a.0.angle().partial_cmp(&b.0.angle()).unwrap());
    rays.dedup_by(|a, b| (a.0 - b.0).norm() < 1e-12 && (a.1 - b.1).norm() < 1e-9);
    let m = rays.len();
    let gap_tol = 1e-7;
    for i in 0..m {
        let a = rays[i].0.angle();
        let b = rays[(i + 1) % m].0.angle() + if i + 1 == m { std::f64::consts::TAU } else { 0.0 };
        if b - a > std::f64::consts::PI + gap_tol {
            return Err(Error::NoCertificate);
        }
    }

    // Pick two or three rays with a zero convex combination.
    let selected = select_zero_combination(&rays)?;

    // Merge rays that touch at the same point (a vertex of C₀): their
    // combined direction stays in that vertex's normal cone.
    let mut groups: Vec<(Point, Point, f64)> = Vec::new(); // (point, Σγu, Σ|γu|-weight)
    for (ray_idx, gamma) in selected {
        let (n, p) = rays[ray_idx];
        if let Some(g) = groups
            .iter_mut()
            .find(|g| (g.0 - p).norm() <= 1e-9 * scale)
        {
            g.1 = g.1 + n * gamma;
            g.2 += gamma;
        } else {
            groups.push((p, n * gamma, gamma));
        }
    }
    if groups.len() < 2 {
        return Err(Error::NoCertificate);
    }
    let mut points = Vec::with_capacity(groups.len());
    let mut out_normals = Vec::with_capacity(groups.len());
    let mut coefficients = Vec::with_capacity(groups.len());
    for (p, weighted, _) in &groups {
        let mu = weighted.norm();
        if mu <= 1e-15 {
            return Err(Error::NoCertificate);
        }
        points.push(*p);
        out_normals.push(*weighted / mu);
        coefficients.push(mu);
    }
    let total: f64 = coefficients.iter().sum();
    for mu in &mut coefficients {
        *mu /= total;
    }

    let cert = ContainmentCertificate {
        points,
        normals: out_normals,
        coefficients,
        center,
        radius,
    };
    let check = cert.validate(k, c)?;
    if check.passes(eps_cert * 10.0) {
        Ok(cert)
    } else {
        Err(Error::NoCertificate)
    }
}

/// Finds ray indices and positive weights with `Σ γ_i u_i = 0`.
/// Prefers an antipodal pair; otherwise takes a ray plus the two rays
/// straddling its antipode.
fn select_zero_combination(rays: &[(Point, Point)]) -> Result<Vec<(usize, f64)>> {
    let m = rays.len();
    for i in 0..m {
        for j in (i + 1)..m {
            if (rays[i].0 + rays[j].0).norm() < 1e-9 {
                return Ok(vec![(i, 0.5), (j, 0.5)]);
            }
        }
    }
    let a = rays[0].0;
    let target = -a;
    for j in 0..m {
        let u = rays[j].0;
        let v = rays[(j + 1) % m].0;
        // target in cone(u, v)? Solve target = s·u + t·v.
        let det = u.cross(v);
        if det.abs() < 1e-12 {
            continue;
        }
        let s = target.cross(v) / det;
        let t = u.cross(target) / det;
        if s >= -1e-12 && t >= -1e-12 {
            let total = 1.0 + s.max(0.0) + t.max(0.0);
            return Ok(vec![
                (0, 1.0 / total),
                (j, s.max(0.0) / total),
                ((j + 1) % m, t.max(0.0) / total),
            ]);
        }
    }
    Err(Error::NoCertificate)
}

/// Intersection of the supporting halfplanes of a certificate: a triangle
/// for three contacts, an unbounded strip for two. For polygon algebra the
/// strip carries a clip to a large box (10³ times the input size).
#[derive(Clone, Debug)]
pub enum Prism {
    Polygon(ConvexPolygon),
    Strip {
        /// Unit normal of the two parallel supporting lines.
        normal: Point,
        /// `lower <= normal·x <= upper` defines the strip.
        lower: f64,
        upper: f64,
        /// Strip ∩ large box, for rendering and polygon ops.
        clip: ConvexPolygon,
    },
}

impl Prism {
    pub fn is_strip(&self) -> bool {
        matches!(self, Prism::Strip { .. })
    }

    /// Support-dominance check that `body ⊆ self` within tolerance.
    pub fn contains_polygon(&self, body: &ConvexPolygon, tol: f64) -> bool {
        match self {
            Prism::Polygon(p) => p
                .halfplanes()
                .into_iter()
                .all(|(n, h)| body.support_value(n) <= h + tol * (1.0 + h.abs())),
            Prism::Strip {
                normal,
                lower,
                upper,
                ..
            } => {
                body.support_value(*normal) <= upper + tol * (1.0 + upper.abs())
                    && -body.support_value(-*normal) >= lower - tol * (1.0 + lower.abs())
            }
        }
    }

    /// `R(T, S)` for a bounded `T`.
    pub fn circumradius_of(&self, t: &ConvexPolygon) -> Result<f64> {
        match self {
            Prism::Polygon(p) => Ok(circumradius(t, p)?.radius),
            Prism::Strip {
                normal,
                lower,
                upper,
                ..
            } => {
                let width = upper - lower;
                if width <= 0.0 {
                    return Err(Error::DegenerateGauge);
                }
                Ok((t.support_value(*normal) + t.support_value(-*normal)) / width)
            }
        }
    }

    /// `r(T, S)`. Zero against a strip: no dilate of an unbounded strip fits
    /// inside a bounded body.
    pub fn inradius_of(&self, t: &ConvexPolygon) -> Result<f64> {
        match self {
            Prism::Polygon(p) => Ok(inradius(t, p)?.radius),
            Prism::Strip { .. } => Ok(0.0),
        }
    }

    /// `D(T, S)`. Against a strip the only finite support ratio is along the
    /// strip normal.
    pub fn diameter_of(&self, t: &ConvexPolygon) -> Result<f64> {
        match self {
            Prism::Polygon(p) => Ok(diameter(t, p)?.value),
            Prism::Strip {
                normal,
                lower,
                upper,
                ..
            } => {
                let width = upper - lower;
                Ok(2.0 * (t.support_value(*normal) + t.support_value(-*normal)) / width)
            }
        }
    }
}

/// Functional guarantees carried by a reduction, all in the normalized frame.
#[derive(Clone, Copy, Debug)]
pub struct ReductionReport {
    pub circumradius_ts: f64,
    pub inradius_ts: f64,
    pub diameter_ts: f64,
    pub inradius_kc: f64,
    pub diameter_kc: f64,
}

/// The simplex/prism sandwich derived from a certificate.
#[derive(Clone, Debug)]
pub struct SimplexReduction {
    pub certificate: ContainmentCertificate,
    /// `T`: hull of the touching points (segment or triangle).
    pub simplex: ConvexPolygon,
    /// `S ⊇ C₀`.
    pub prism: Prism,
    /// `S ∩ (-S)`, populated when the gauge is centrally symmetric.
    pub symmetric_prism: Option<Prism>,
    pub report: ReductionReport,
    pub symmetric_report: Option<ReductionReport>,
}

/// Builds the reduction for `(K, C)`.
pub fn reduce(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<SimplexReduction> {
    let certificate = certify(k, c)?;
    let (k_norm, c0) = certificate.normalized_pair(k, c);
    let simplex = ConvexPolygon::hull(&certificate.points)?;

    let planes: Vec<(Point, f64)> = certificate
        .points
        .iter()
        .zip(&certificate.normals)
        .map(|(&p, &u)| (u, u.dot(p)))
        .collect();
    let box_half = 1e3 * (1.0 + c0.bounding_radius() + k_norm.bounding_radius());
    let prism = prism_from_planes(&planes, box_half)?;

    let symmetric = c0.approx_eq(&c0.negate(), 1e-7);
    let symmetric_prism = if symmetric {
        let mut sym_planes = planes.clone();
        // -S has halfplanes (-u, h) for each (u, h) of S.
        sym_planes.extend(planes.iter().map(|&(u, h)| (-u, h)));
        Some(prism_from_planes(&sym_planes, box_half)?)
    } else {
        None
    };

    let inradius_kc = inradius(&k_norm, &c0)?.radius;
    let diameter_kc = diameter(&k_norm, &c0)?.value;
    let report = ReductionReport {
        circumradius_ts: prism.circumradius_of(&simplex)?,
        inradius_ts: prism.inradius_of(&simplex)?,
        diameter_ts: prism.diameter_of(&simplex)?,
        inradius_kc,
        diameter_kc,
    };
    let symmetric_report = match &symmetric_prism {
        Some(s) => Some(ReductionReport {
            circumradius_ts: s.circumradius_of(&simplex)?,
            inradius_ts: s.inradius_of(&simplex)?,
            diameter_ts: s.diameter_of(&simplex)?,
            inradius_kc,
            diameter_kc,
        }),
        None => None,
    };

    Ok(SimplexReduction {
        certificate,
        simplex,
        prism,
        symmetric_prism,
        report,
        symmetric_report,
    })
}

fn prism_from_planes(planes: &[(Point, f64)], box_half: f64) -> Result<Prism> {
    // Two antipodal supporting lines form a strip; anything that clips to a
    // bounded region within the working box is kept as a polygon.
    if planes.len() == 2 && (planes[0].0 + planes[1].0).norm() < 1e-7 {
        let (u, h_up) = planes[0];
        let (_, h_dn) = planes[1];
        let clip = strip_clip(u, -h_dn, h_up, box_half)?;
        return Ok(Prism::Strip {
            normal: u,
            lower: -h_dn,
            upper: h_up,
            clip,
        });
    }
    let mut pts: Vec<Point> = vec![
        Point::new(-box_half, -box_half),
        Point::new(box_half, -box_half),
        Point::new(box_half, box_half),
        Point::new(-box_half, box_half),
    ];
    let poly = ConvexPolygon::hull(&pts)?;
    let mut clipped = poly;
    for &(n, h) in planes {
        let hp = ConvexPolygon::hull(&clip_points(clipped.vertices(), n, h))?;
        clipped = hp;
    }
    // Bounded iff no vertex rests on the working box.
    let bounded = clipped
        .vertices()
        .iter()
        .all(|v| v.x.abs() < box_half * 0.999 && v.y.abs() < box_half * 0.999);
    if bounded {
        Ok(Prism::Polygon(clipped))
    } else {
        // Nearly-parallel three-normal case degenerates to a strip between
        // the extreme pair.
        pts = clipped.vertices().to_vec();
        let u = planes[0].0;
        let upper = planes[0].1;
        let lower = -pts.iter().map(|p| -u.dot(*p)).fold(f64::NEG_INFINITY, f64::max);
        let clip = strip_clip(u, lower, upper, box_half)?;
        Ok(Prism::Strip {
            normal: u,
            lower,
            upper,
            clip,
        })
    }
}

fn clip_points(pts: &[Point], n: Point, h: f64) -> Vec<Point> {
    let m = pts.len();
    let mut out = Vec::with_capacity(m + 1);
    for i in 0..m {
        let a = pts[i];
        let b = pts[(i + 1) % m];
        let da = n.dot(a) - h;
        let db = n.dot(b) - h;
        if da <= 0.0 {
            out.push(a);
        }
        if (da <= 0.0) != (db <= 0.0) {
            out.push(a + (b - a) * (da / (da - db)));
        }
    }
    out
}

fn strip_clip(u: Point, lower: f64, upper: f64, box_half: f64) -> Result<ConvexPolygon> {
    let d = u.perp();
    let mid = u * ((lower + upper) / 2.0);
    let half_w = (upper - lower) / 2.0;
    Ok(ConvexPolygon::hull(&[
        mid + u * half_w + d * box_half,
        mid + u * half_w - d * box_half,
        mid - u * half_w + d * box_half,
        mid - u * half_w - d * box_half,
    ])?)
}

/// Tests the simplex sandwich `K-K ⊆ D·C ⊆ 3·(K ∩ -K)` that characterizes
/// extremality of triangles for the symmetric-gauge diameter bound.
/// `K` must be a triangle; both bodies are centered before testing. Returns
/// the two inclusion slacks (max support violation, ≤ 0 when the inclusion
/// holds) and a verdict at tolerance `1e-7`.
pub fn bohnenblust_equality_check(
    k: &ConvexPolygon,
    c: &ConvexPolygon,
) -> Result<(bool, [f64; 2])> {
    if k.len() != 3 {
        return Err(Error::NotASimplex);
    }
    let k0 = k.translate(-k.centroid());
    let c0 = c.translate(-c.centroid());
    let d = diameter(&k0, &c0)?.value;

    let kk = k0.difference_body();
    let dc = c0.scale(d);
    let slack1 = inclusion_slack(&kk, &dc);

    let meet = k0
        .intersect(&k0.negate())
        .ok_or(Error::Numerical("triangle does not meet its reflection"))?;
    let triple = meet.scale(3.0);
    let slack2 = inclusion_slack(&dc, &triple);

    let tol = 1e-7;
    Ok((slack1 <= tol && slack2 <= tol, [slack1, slack2]))
}

/// Max over the outer body's edge normals of `h(inner, n) - h(outer, n)`,
/// normalized by the outer body's scale. Nonpositive iff `inner ⊆ outer`.
fn inclusion_slack(inner: &ConvexPolygon, outer: &ConvexPolygon) -> f64 {
    let scale = 1.0 + outer.bounding_radius();
    outer
        .halfplanes()
        .into_iter()
        .map(|(n, h)| (inner.support_value(n) - h) / scale)
        .fold(f64::NEG_INFINITY, f64::max)
}
