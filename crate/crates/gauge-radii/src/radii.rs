//! The four gauge functionals and the diagram map.
//!
//! Circumradius `R(K,C)`: least `λ` with a translate of `K` inside `λC`.
//! Inradius `r(K,C)`: largest `λ` with a translate of `λC` inside `K`.
//! Diameter `D(K,C)`: twice the largest two-point circumradius, equal to the
//! maximal gauge of a vertex difference in the difference body `C - C`.
//! Asymmetry `s(C) = R(-C,C)`.
//!
//! Containment problems become LPs over `(t, λ)` where `t` is the
//! translation. Gauges are re-centered at their vertex centroid before use;
//! every functional here is translation invariant, so that choice is not
//! observable in the results.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::lp::{self, LpProblem, LpStatus};
use crate::polygon::ConvexPolygon;

/// A vertex of `K` resting on an edge of the gauge at optimality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contact {
    pub vertex: usize,
    pub edge: usize,
}

#[derive(Clone, Debug)]
pub struct Circumradius {
    pub radius: f64,
    /// Translation `t` with `K ⊆ t + R·C₀`, `C₀` the centroid-centered gauge.
    pub center: Point,
    pub contacts: Vec<Contact>,
}

#[derive(Clone, Copy, Debug)]
pub struct Inradius {
    pub radius: f64,
    /// Center of the inscribed copy: `t + r·C₀ ⊆ K`.
    pub center: Point,
}

#[derive(Clone, Debug)]
pub struct Diameter {
    pub value: f64,
    pub pair: (Point, Point),
    pub pair_indices: (usize, usize),
}

fn require_gauge(c: &ConvexPolygon) -> Result<()> {
    if c.is_fulldimensional() {
        Ok(())
    } else {
        Err(Error::DegenerateGauge)
    }
}

fn centered(c: &ConvexPolygon) -> ConvexPolygon {
    c.translate(-c.centroid())
}

/// Smallest enclosing homothet. LP over `(t_x, t_y, λ)`: for every outward
/// unit normal `n` of the gauge, `h(K, n) - n·t <= λ·h(C₀, n)`.
pub fn circumradius(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<Circumradius> {
    require_gauge(c)?;
    let c0 = centered(c);
    let normals = c0.edge_unit_normals();
    let mut prob = LpProblem::new(vec![0.0, 0.0, 1.0]);
    for n in &normals {
        let h_c = c0.support_value(*n);
        let h_k = k.support_value(*n);
        prob.add(vec![-n.x, -n.y, -h_c], -h_k);
    }
    let sol = lp::solve(&prob)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::Numerical("circumradius LP did not reach optimality"));
    }
    let center = Point::new(sol.z[0], sol.z[1]);
    let radius = sol.value.max(0.0);
    let mut contacts = Vec::new();
    for &edge in &sol.tight {
        let sup = k.support(normals[edge])?;
        for vertex in sup.argmax {
            contacts.push(Contact { vertex, edge });
        }
    }
    Ok(Circumradius {
        radius,
        center,
        contacts,
    })
}

/// Largest inscribed homothet. LP over `(t_x, t_y, λ)`: for every outward
/// unit normal `w` of `K`, `w·t + λ·h(C₀, w) <= h(K, w)`. Lower-dimensional
/// `K` has inradius zero by convention.
pub fn inradius(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<Inradius> {
    require_gauge(c)?;
    if !k.is_fulldimensional() {
        return Ok(Inradius {
            radius: 0.0,
            center: k.centroid(),
        });
    }
    let c0 = centered(c);
    let mut prob = LpProblem::new(vec![0.0, 0.0, -1.0]);
    for w in k.edge_unit_normals() {
        prob.add(vec![w.x, w.y, c0.support_value(w)], k.support_value(w));
    }
    let sol = lp::solve(&prob)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::Numerical("inradius LP did not reach optimality"));
    }
    Ok(Inradius {
        radius: (-sol.value).max(0.0),
        center: Point::new(sol.z[0], sol.z[1]),
    })
}

/// Gauge diameter with the attaining vertex pair. Scans all vertex pairs of
/// `K` through the difference-body gauge of `C`.
pub fn diameter(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<Diameter> {
    require_gauge(c)?;
    let gauge = c.difference_body().gauge()?;
    let verts = k.vertices();
    let mut best = 0.0;
    let mut pair = (0usize, 0usize);
    for i in 0..verts.len() {
        for j in (i + 1)..verts.len() {
            let g = gauge.value(verts[i] - verts[j]);
            if g > best {
                best = g;
                pair = (i, j);
            }
        }
    }
    Ok(Diameter {
        value: 2.0 * best,
        pair: (verts[pair.0], verts[pair.1]),
        pair_indices: pair,
    })
}

/// Minkowski asymmetry `s(C) = R(-C, C)`.
pub fn asymmetry(c: &ConvexPolygon) -> Result<f64> {
    Ok(circumradius(&c.negate(), c)?.radius)
}

/// Diagram coordinates `(r/R, D/(2R))`.
pub fn diagram_point(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<(f64, f64)> {
    let p = RadiiProfile::compute(k, c)?;
    Ok((p.x, p.y))
}

/// All functionals of a `(K, C)` pair, plus the witnesses.
#[derive(Clone, Debug)]
pub struct RadiiProfile {
    pub inradius: f64,
    pub diameter: f64,
    pub circumradius: f64,
    pub asymmetry: f64,
    pub x: f64,
    pub y: f64,
    pub incenter: Point,
    pub circumcenter: Point,
    pub diameter_pair: (Point, Point),
}

impl RadiiProfile {
    pub fn compute(k: &ConvexPolygon, c: &ConvexPolygon) -> Result<RadiiProfile> {
        let s = asymmetry(c)?;
        Self::compute_with_asymmetry(k, c, s)
    }

    /// Variant for batch evaluation against a fixed gauge whose asymmetry is
    /// already known.
    pub fn compute_with_asymmetry(
        k: &ConvexPolygon,
        c: &ConvexPolygon,
        s: f64,
    ) -> Result<RadiiProfile> {
        let circ = circumradius(k, c)?;
        if circ.radius <= 1e-300 {
            return Err(Error::ZeroCircumradius);
        }
        let inr = inradius(k, c)?;
        let diam = diameter(k, c)?;
        Ok(RadiiProfile {
            inradius: inr.radius,
            diameter: diam.value,
            circumradius: circ.radius,
            asymmetry: s,
            x: inr.radius / circ.radius,
            y: diam.value / (2.0 * circ.radius),
            incenter: inr.center,
            circumcenter: circ.center,
            diameter_pair: diam.pair,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::{interpolate, regular_kgon};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn triangle() -> ConvexPolygon {
        regular_kgon(3, std::f64::consts::FRAC_PI_2).unwrap()
    }

    fn square() -> ConvexPolygon {
        ConvexPolygon::hull(&[
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    fn random_body(rng: &mut StdRng, n: usize) -> ConvexPolygon {
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
            .collect();
        ConvexPolygon::hull(&pts).unwrap()
    }

    #[test]
    fn self_radii() {
        for c in [triangle(), square(), regular_kgon(7, 0.3).unwrap()] {
            let r = circumradius(&c, &c).unwrap().radius;
            assert!((r - 1.0).abs() < 1e-9, "R(C,C) = {r}");
            let i = inradius(&c, &c).unwrap().radius;
            assert!((i - 1.0).abs() < 1e-9, "r(C,C) = {i}");
            let d = diameter(&c, &c).unwrap().value;
            assert!((d - 2.0).abs() < 1e-9, "D(C,C) = {d}");
        }
    }

    #[test]
    fn reversed_triangle_circumradius_is_two() {
        let s = triangle();
        let r = circumradius(&s.negate(), &s).unwrap().radius;
        assert!((r - 2.0).abs() < 1e-9);
    }

    #[test]
    fn segment_in_square() {
        let k = ConvexPolygon::hull(&[Point::new(-1.0, 0.0), Point::new(1.0, 0.0)]).unwrap();
        let r = circumradius(&k, &square()).unwrap().radius;
        assert!((r - 1.0).abs() < 1e-9);
    }

    #[test]
    fn inradius_circumradius_reciprocity() {
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..40 {
            let nk = rng.gen_range(4..9);
            let nc = rng.gen_range(4..9);
            let k = random_body(&mut rng, nk);
            let c = random_body(&mut rng, nc);
            if !k.is_fulldimensional() || !c.is_fulldimensional() {
                continue;
            }
            let r = inradius(&k, &c).unwrap().radius;
            let rr = circumradius(&c, &k).unwrap().radius;
            assert!((r * rr - 1.0).abs() < 1e-7, "r·R = {}", r * rr);
        }
    }

    #[test]
    fn isosceles_family_unit_diameter_inradius() {
        let t = crate::diagram::families::triangle_family(1.0).unwrap();
        let r = inradius(&t, &triangle()).unwrap().radius;
        assert!((r - 0.25).abs() < 1e-9, "r = {r}");
    }

    #[test]
    fn family_diameter_matches_parameter() {
        for d in [1.0, 1.5, 2.0] {
            let t = crate::diagram::families::triangle_family(d).unwrap();
            let diam = diameter(&t, &triangle()).unwrap().value;
            assert!((diam - d).abs() < 1e-9, "D = {diam} for parameter {d}");
        }
    }

    #[test]
    fn diameter_dominates_support_ratio() {
        let mut rng = StdRng::seed_from_u64(12);
        let k = random_body(&mut rng, 8);
        let c = regular_kgon(5, 0.2).unwrap();
        let d = diameter(&k, &c).unwrap().value;
        let kk = k.difference_body();
        let cc = c.difference_body();
        let mut best = 0.0f64;
        for _ in 0..200 {
            let a = rng.gen::<f64>() * std::f64::consts::TAU;
            let u = Point::new(a.cos(), a.sin());
            let ratio = 2.0 * kk.support_value(u) / cc.support_value(u);
            assert!(d >= ratio - 1e-9);
            best = best.max(ratio);
        }
        // Equality is attained at some edge normal of C - C.
        let attained = cc
            .edge_unit_normals()
            .iter()
            .map(|&u| 2.0 * kk.support_value(u) / cc.support_value(u))
            .fold(0.0, f64::max);
        assert!((attained - d).abs() < 1e-9, "{attained} vs {d}");
    }

    #[test]
    fn asymmetry_catalog() {
        assert!((asymmetry(&square()).unwrap() - 1.0).abs() < 1e-9);
        assert!((asymmetry(&triangle()).unwrap() - 2.0).abs() < 1e-9);
        let pentagon = regular_kgon(5, std::f64::consts::FRAC_PI_2).unwrap();
        let s = asymmetry(&pentagon).unwrap();
        assert!((s - (5f64.sqrt() - 1.0)).abs() < 1e-9, "s(P) = {s}");
    }

    #[test]
    fn diagram_point_identity_and_segment() {
        let c = regular_kgon(6, 0.1).unwrap();
        let (x, y) = diagram_point(&c, &c).unwrap();
        assert!((x - 1.0).abs() < 1e-9 && (y - 1.0).abs() < 1e-9);

        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..10 {
            let c = random_body(&mut rng, 7);
            if !c.is_fulldimensional() {
                continue;
            }
            let seg = ConvexPolygon::hull(&[
                Point::new(rng.gen::<f64>(), rng.gen::<f64>()),
                Point::new(rng.gen::<f64>() + 1.5, rng.gen::<f64>()),
            ])
            .unwrap();
            let (x, y) = diagram_point(&seg, &c).unwrap();
            assert!(x.abs() < 1e-9, "segment x = {x}");
            assert!((y - 1.0).abs() < 1e-7, "segment y = {y}");
        }
    }

    #[test]
    fn reversed_triangle_diagram_point() {
        // Independent LP route for the corner (1/4, 1/2): r = 1/2, D = 2, R = 2.
        let s = triangle();
        let p = RadiiProfile::compute(&s.negate(), &s).unwrap();
        assert!((p.inradius - 0.5).abs() < 1e-9);
        assert!((p.diameter - 2.0).abs() < 1e-9);
        assert!((p.circumradius - 2.0).abs() < 1e-9);
        assert!((p.x - 0.25).abs() < 1e-9);
        assert!((p.y - 0.5).abs() < 1e-9);
    }

    #[test]
    fn translation_and_scaling_invariance() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..20 {
            let k = random_body(&mut rng, 6);
            let c = random_body(&mut rng, 6);
            if !c.is_fulldimensional() {
                continue;
            }
            let shift = Point::new(rng.gen::<f64>() * 8.0 - 4.0, rng.gen::<f64>() * 8.0 - 4.0);
            let r0 = circumradius(&k, &c).unwrap().radius;
            let r1 = circumradius(&k.translate(shift), &c).unwrap().radius;
            let r2 = circumradius(&k, &c.translate(shift)).unwrap().radius;
            assert!((r0 - r1).abs() < 1e-8 * (1.0 + r0));
            assert!((r0 - r2).abs() < 1e-8 * (1.0 + r0));

            let t = rng.gen::<f64>() * 2.0 + 0.1;
            let r3 = circumradius(&k.scale(t), &c).unwrap().radius;
            assert!((r3 - t * r0).abs() < 1e-8 * (1.0 + r0));
            let r4 = circumradius(&k, &c.scale(t)).unwrap().radius;
            assert!((r4 - r0 / t).abs() < 1e-8 * (1.0 + r0));
        }
    }

    #[test]
    fn monotonicity_in_both_arguments() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..20 {
            let k1 = random_body(&mut rng, 5);
            let k2 = {
                let mut pts = k1.vertices().to_vec();
                pts.extend((0..3).map(|_| {
                    Point::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0)
                }));
                ConvexPolygon::hull(&pts).unwrap()
            };
            let c1 = regular_kgon(6, 0.0).unwrap();
            let c2 = c1.scale(0.7); // C₂ ⊆ C₁
            let r11 = circumradius(&k1, &c1).unwrap().radius;
            let r21 = circumradius(&k2, &c1).unwrap().radius;
            assert!(r11 <= r21 + 1e-9);
            let r12 = circumradius(&k1, &c2).unwrap().radius;
            assert!(r11 <= r12 + 1e-9);
        }
    }

    #[test]
    fn affine_invariance_of_diagram_point() {
        use crate::geom::Mat2;
        let mut rng = StdRng::seed_from_u64(55);
        for _ in 0..15 {
            let k = random_body(&mut rng, 7);
            let c = random_body(&mut rng, 7);
            if !c.is_fulldimensional() || !k.is_fulldimensional() {
                continue;
            }
            // Keep the condition number moderate.
            let m = Mat2::new(
                rng.gen::<f64>() * 2.0 + 0.5,
                rng.gen::<f64>() - 0.5,
                rng.gen::<f64>() - 0.5,
                rng.gen::<f64>() * 2.0 + 0.5,
            );
            if m.det().abs() < 0.2 {
                continue;
            }
            let b = Point::new(rng.gen::<f64>(), rng.gen::<f64>());
            let (x0, y0) = diagram_point(&k, &c).unwrap();
            let (x1, y1) = diagram_point(
                &k.affine_map(&m, b).unwrap(),
                &c.affine_map(&m, b).unwrap(),
            )
            .unwrap();
            assert!((x0 - x1).abs() < 1e-7, "{x0} vs {x1}");
            assert!((y0 - y1).abs() < 1e-7, "{y0} vs {y1}");
        }
    }

    #[test]
    fn interpolation_moves_diagram_point_linearly() {
        // The linear law needs K in optimal position inside the gauge; put
        // it there first via the circumradius witness.
        let mut rng = StdRng::seed_from_u64(77);
        let c = regular_kgon(5, 0.3).unwrap();
        let c0 = c.translate(-c.centroid());
        for _ in 0..10 {
            let k = random_body(&mut rng, 6);
            let circ = circumradius(&k, &c).unwrap();
            let k_opt = k.translate(-circ.center).scale(1.0 / circ.radius);
            let (x0, y0) = diagram_point(&k_opt, &c0).unwrap();
            for step in 1..10 {
                let lam = step as f64 / 10.0;
                let mid = interpolate(&k_opt, &c0, lam).unwrap();
                let (x, y) = diagram_point(&mid, &c0).unwrap();
                let ex = (1.0 - lam) * x0 + lam;
                let ey = (1.0 - lam) * y0 + lam;
                assert!((x - ex).abs() < 1e-7, "x {x} vs {ex} at λ={lam}");
                assert!((y - ey).abs() < 1e-7, "y {y} vs {ey} at λ={lam}");
            }
        }
    }

    #[test]
    fn diameter_pair_members_are_vertices() {
        let mut rng = StdRng::seed_from_u64(91);
        for _ in 0..20 {
            let k = random_body(&mut rng, 9);
            let c = regular_kgon(6, 0.0).unwrap();
            let d = diameter(&k, &c).unwrap();
            for p in [d.pair.0, d.pair.1] {
                assert!(k.vertices().iter().any(|v| (*v - p).norm() < 1e-12));
            }
        }
    }
}
