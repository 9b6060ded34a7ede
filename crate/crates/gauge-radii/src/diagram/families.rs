//! Closed-form extremal families for the triangle, hexagon and pentagon
//! gauges.
//!
//! Vertex labelings are load-bearing: the hexagon is labeled q1..q6
//! clockwise starting at angle π/2, the pentagon p1..p5 counterclockwise
//! starting at angle π/2. The family constructors below are written against
//! exactly these labelings.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polygon::{regular_kgon, ConvexPolygon};

const SQRT5: f64 = 2.23606797749978969640917366873127623; // √5

/// The regular triangle gauge with apex (0, 1).
pub fn triangle_gauge() -> ConvexPolygon {
    regular_kgon(3, std::f64::consts::FRAC_PI_2).expect("k = 3 is valid")
}

/// Regular triangle vertex labels: p1 = (√3/2, -1/2), p2 = (-√3/2, -1/2),
/// p3 = (0, 1).
pub fn triangle_vertices() -> [Point; 3] {
    let s = 3.0f64.sqrt() / 2.0;
    [
        Point::new(s, -0.5),
        Point::new(-s, -0.5),
        Point::new(0.0, 1.0),
    ]
}

/// Isosceles triangle with circumradius 1 and diameter `d` in the regular
/// triangle gauge, attaining the lower diagram boundary `x = y(1-y)`:
/// `conv{ (p1+p2)/2, (d/2)p1 + (1-d/2)p3, (d/2)p2 + (1-d/2)p3 }`.
/// At `d = 2` the apex hits the base line and the triangle collapses to the
/// segment `[p1, p2]`.
pub fn triangle_family(d: f64) -> Result<ConvexPolygon> {
    if !(1.0..=2.0).contains(&d) {
        return Err(Error::ParamOutOfRange {
            what: "D",
            value: d,
            range: "[1, 2]",
        });
    }
    let [p1, p2, p3] = triangle_vertices();
    let half = d / 2.0;
    ConvexPolygon::hull(&[
        (p1 + p2) * 0.5,
        p1 * half + p3 * (1.0 - half),
        p2 * half + p3 * (1.0 - half),
    ])
}

/// Closed form for the family's inradius: `r = D(2-D)/4` (with `R = 1`).
pub fn triangle_family_inradius(d: f64) -> f64 {
    d * (2.0 - d) / 4.0
}

/// The regular hexagon gauge (circumradius 1, vertex at angle π/2).
pub fn hexagon_gauge() -> ConvexPolygon {
    regular_kgon(6, std::f64::consts::FRAC_PI_2).expect("k = 6 is valid")
}

/// Hexagon vertices q1..q6 in clockwise order starting at angle π/2.
pub fn hexagon_vertices_clockwise() -> [Point; 6] {
    let mut q = [Point::ZERO; 6];
    for (j, slot) in q.iter_mut().enumerate() {
        let a = std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_3 * j as f64;
        *slot = Point::new(a.cos(), a.sin());
    }
    q
}

/// Isosceles triangle family inscribed in the hexagon:
/// `conv{ (1-λ)q1 + λq2, (1-λ)q4 + λq3, (q5+q6)/2 }` for `λ ∈ [0, 1]`.
///
/// All members are optimally inscribed (circumradius 1). The closed form
/// [`hexagon_family_formula`] describes their diagram image on `λ ∈ [1/2, 1]`,
/// where the long pair of the triangle is the one that moves with `λ`; see
/// the formula's docs for the `λ < 1/2` behavior.
pub fn hexagon_family(lambda: f64) -> Result<ConvexPolygon> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::ParamOutOfRange {
            what: "lambda",
            value: lambda,
            range: "[0, 1]",
        });
    }
    let q = hexagon_vertices_clockwise();
    ConvexPolygon::hull(&[
        q[0] * (1.0 - lambda) + q[1] * lambda,
        q[3] * (1.0 - lambda) + q[2] * lambda,
        (q[4] + q[5]) * 0.5,
    ])
}

/// Conjectured left-boundary image of the hexagon family:
/// `f(T_λ, H) = ((λ+1)(2-λ)/(4+λ), (1+λ)/2)`.
///
/// Valid for `λ ∈ [1/2, 1]`, running from the symmetric-gauge corner
/// `(1/2, 3/4)` up to `(2/5, 1)`. For `λ < 1/2` the formula's second entry
/// drops below 3/4, which no body can attain against a symmetric gauge
/// (`R <= (2/3)D` forces `y >= 3/4`); there the triangle's actual diameter
/// is attained by the fixed long pair instead and equals `2-λ`.
pub fn hexagon_family_formula(lambda: f64) -> (f64, f64) {
    (
        (lambda + 1.0) * (2.0 - lambda) / (4.0 + lambda),
        (1.0 + lambda) / 2.0,
    )
}

/// Equivalent closed form on the inradius side: `r = D(3-D)/(3+D)` with
/// `R = 1` and `D = 1 + λ`.
pub fn hexagon_family_inradius_from_diameter(d: f64) -> f64 {
    d * (3.0 - d) / (3.0 + d)
}

/// The regular pentagon gauge (unit circumradius, vertex p1 at angle π/2).
pub fn pentagon_gauge() -> ConvexPolygon {
    regular_kgon(5, std::f64::consts::FRAC_PI_2).expect("k = 5 is valid")
}

/// Pentagon vertices p1..p5 counterclockwise starting at angle π/2.
pub fn pentagon_vertices() -> [Point; 5] {
    let mut p = [Point::ZERO; 5];
    for (j, slot) in p.iter_mut().enumerate() {
        let a = std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * j as f64 / 5.0;
        *slot = Point::new(a.cos(), a.sin());
    }
    p
}

fn pentagon_midpoint(i: usize, j: usize) -> Point {
    let p = pentagon_vertices();
    (p[i - 1] + p[j - 1]) * 0.5
}

/// Conjectured left-boundary family for the pentagon gauge:
/// `conv{ (1-λ)p1 + λp2, (1-λ)p1 + λp5, p34 }` for `λ ∈ [0, 1/2]`.
/// At `λ = 0` it degenerates to the segment `[p1, p34]`.
pub fn pentagon_family(lambda: f64) -> Result<ConvexPolygon> {
    if !(0.0..=0.5).contains(&lambda) {
        return Err(Error::ParamOutOfRange {
            what: "lambda",
            value: lambda,
            range: "[0, 1/2]",
        });
    }
    let p = pentagon_vertices();
    ConvexPolygon::hull(&[
        p[0] * (1.0 - lambda) + p[1] * lambda,
        p[0] * (1.0 - lambda) + p[4] * lambda,
        pentagon_midpoint(3, 4),
    ])
}

/// Diagram image of the pentagon family:
/// `f(T_λ, P) = (λ·(1 + λ(√5-3)/2), 1 + λ(√5-3)/2)` on `λ ∈ [0, 1/2]`.
pub fn pentagon_family_formula(lambda: f64) -> (f64, f64) {
    let y = 1.0 + lambda * (SQRT5 - 3.0) / 2.0;
    (lambda * y, y)
}

/// The two triangles attaining the pentagon's extreme circumradius-to-
/// diameter ratio `R/D = (√5-1)/2`, i.e. `D/R = (√5+1)/2`:
/// the isosceles `T = conv{p34, p15, p12}` with exactly two longest edges,
/// and the equilateral `T' = conv{(1-λ₀)p5 + λ₀p1, (1-λ₀)p2 + λ₀p1, p34}`
/// with `λ₀ = (3-√5)/4`, all of whose edges are longest.
pub fn pentagon_jung_triangles() -> (ConvexPolygon, ConvexPolygon) {
    let p = pentagon_vertices();
    let t = ConvexPolygon::hull(&[
        pentagon_midpoint(3, 4),
        pentagon_midpoint(1, 5),
        pentagon_midpoint(1, 2),
    ])
    .expect("nondegenerate triangle");
    let lambda0 = (3.0 - SQRT5) / 4.0;
    let t_prime = ConvexPolygon::hull(&[
        p[4] * (1.0 - lambda0) + p[0] * lambda0,
        p[1] * (1.0 - lambda0) + p[0] * lambda0,
        pentagon_midpoint(3, 4),
    ])
    .expect("nondegenerate triangle");
    (t, t_prime)
}
