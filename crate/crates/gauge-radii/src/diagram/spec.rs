//! Per-gauge inequality sets, boundary curves and point classification.
//!
//! Every inequality is expressed in diagram coordinates `x = r/R`,
//! `y = D/(2R)` (plus the gauge asymmetry `s`), as a signed slack that is
//! nonnegative exactly when the inequality holds. Proved inequalities gate
//! pass/fail decisions; conjectured boundary curves are carried for
//! rendering only.

use crate::error::{Error, Result};
use crate::gauge::GaugeKind;
use crate::polygon::ConvexPolygon;
use crate::radii::RadiiProfile;

const SQRT5: f64 = 2.23606797749978969640917366873127623;

/// Slack functions. `delta` is the multiplicative model error of a
/// disk-approximating gauge: euclidean-specific inequalities are evaluated
/// at the most favorable point of the bracket
/// `[v/(1+δ), v·(1+δ)]` around each measured functional, which is where the
/// true euclidean value is known to live. Exact gauges pass `δ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IneqKind {
    /// `D <= 2R`, i.e. `y <= 1`.
    DiameterLeTwiceCircum,
    /// `2r + R <= (3/2) D`, i.e. `2x + 1 <= 3y` (planar simplex bound).
    TwoInradiusBound,
    /// `r/R >= (D/2R)(1 - D/2R)`, the lower parabola `x >= y(1-y)`.
    LowerParabola,
    /// `s·r + R <= ((s+1)/2) D`, i.e. `s·x + 1 <= (s+1)·y`.
    ConcentricityGeneral,
    /// `r + R <= D` for symmetric gauges: `x + 1 <= 2y`.
    ConcentricitySymmetric,
    /// `R <= (2/3) D` for symmetric gauges: `y >= 3/4`.
    BohnenblustSymmetric,
    /// `(√5-1) r + R <= (√5/2) D` for the regular pentagon.
    PentagonRight,
    /// `y >= (1+√5)/4` for the regular pentagon.
    PentagonJung,
    /// Regular hexagon: `y < 1` forces `x >= 1/4`
    /// (true whenever `x >= 1/4` or `y >= 1 - guard`).
    HexagonQuarter,
    /// Euclidean lower boundary `2R(2R+√(4R²-D²))r >= D²√(4R²-D²)`,
    /// normalized to `x(1+√(1-y²)) >= 2y²√(1-y²)`.
    Santalo,
    /// Euclidean `y >= √3/2`.
    EuclidJung,
    /// Parallelotope gauge: `D = 2R`, checked as `y >= 1` (pairs with
    /// `DiameterLeTwiceCircum` to pin `y = 1`).
    ParallelotopeCollapse,
}

/// Exclusion band under the top edge inside which the hexagon quarter bound
/// is not asserted.
pub const HEXAGON_TOP_GUARD: f64 = 1e-3;

#[derive(Clone, Copy, Debug)]
pub struct Inequality {
    pub name: &'static str,
    pub kind: IneqKind,
}

impl Inequality {
    pub fn slack(&self, x: f64, y: f64, s: f64, delta: f64) -> f64 {
        match self.kind {
            IneqKind::DiameterLeTwiceCircum => 1.0 - y,
            IneqKind::TwoInradiusBound => 3.0 * y - 2.0 * x - 1.0,
            IneqKind::LowerParabola => x - y * (1.0 - y),
            IneqKind::ConcentricityGeneral => (s + 1.0) * y - s * x - 1.0,
            IneqKind::ConcentricitySymmetric => 2.0 * y - x - 1.0,
            IneqKind::BohnenblustSymmetric => y - 0.75,
            IneqKind::PentagonRight => SQRT5 * y - (SQRT5 - 1.0) * x - 1.0,
            IneqKind::PentagonJung => y - (1.0 + SQRT5) / 4.0,
            IneqKind::HexagonQuarter => (x - 0.25).max(y - (1.0 - HEXAGON_TOP_GUARD)),
            IneqKind::Santalo => santalo_bracket_slack(x, y, delta),
            IneqKind::EuclidJung => y * (1.0 + delta) - 3.0f64.sqrt() / 2.0,
            IneqKind::ParallelotopeCollapse => y - 1.0,
        }
    }
}

fn santalo_slack(x: f64, y: f64) -> f64 {
    let w = (1.0 - (y * y).min(1.0)).max(0.0).sqrt();
    x * (1.0 + w) - 2.0 * y * y * w
}

/// Maximum of the Santaló slack over the bracket box around `(x, y)`.
/// The slack is increasing in `x`; in `y` it has a single interior critical
/// point at `y* = √((4+x)/6)`, so the max is attained at a `y`-endpoint or
/// there.
fn santalo_bracket_slack(x: f64, y: f64, delta: f64) -> f64 {
    if delta == 0.0 {
        return santalo_slack(x, y);
    }
    let xh = x * (1.0 + delta);
    let ylo = y / (1.0 + delta);
    let yhi = (y * (1.0 + delta)).min(1.0);
    let mut best = santalo_slack(xh, ylo).max(santalo_slack(xh, yhi));
    let y_crit = ((4.0 + xh) / 6.0).sqrt();
    if y_crit > ylo && y_crit < yhi {
        best = best.max(santalo_slack(xh, y_crit));
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveStatus {
    Proved,
    Conjectured,
}

/// A boundary curve sampled as a polyline in diagram coordinates.
#[derive(Clone, Debug)]
pub struct BoundaryCurve {
    pub name: &'static str,
    pub status: CurveStatus,
    pub points: Vec<(f64, f64)>,
}

fn curve(name: &'static str, status: CurveStatus, f: impl Fn(f64) -> (f64, f64)) -> BoundaryCurve {
    let n = 200;
    let points = (0..=n).map(|i| f(i as f64 / n as f64)).collect();
    BoundaryCurve {
        name,
        status,
        points,
    }
}

/// Distinguished diagram points worth highlighting in a rendering.
#[derive(Clone, Debug)]
pub struct Landmark {
    pub name: &'static str,
    pub x: f64,
    pub y: f64,
}

/// The full boundary description of one gauge's diagram.
#[derive(Clone, Debug)]
pub struct DiagramSpec {
    pub gauge: GaugeKind,
    pub inequalities: Vec<Inequality>,
    pub curves: Vec<BoundaryCurve>,
    pub landmarks: Vec<Landmark>,
    pub model_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    Interior,
    Boundary { tight: Vec<&'static str> },
    Outside { violated: Vec<&'static str> },
}

impl DiagramSpec {
    pub fn evaluate(&self, profile: &RadiiProfile) -> Vec<(&'static str, f64)> {
        self.inequalities
            .iter()
            .map(|i| {
                (
                    i.name,
                    i.slack(profile.x, profile.y, profile.asymmetry, self.model_error),
                )
            })
            .collect()
    }

    /// Classifies a diagram point against the proved inequalities at
    /// tolerance `tol`.
    pub fn classify(&self, x: f64, y: f64, s: f64, tol: f64) -> Classification {
        let mut violated = Vec::new();
        let mut tight = Vec::new();
        for i in &self.inequalities {
            let slack = i.slack(x, y, s, self.model_error);
            if slack < -tol {
                violated.push(i.name);
            } else if slack <= tol {
                tight.push(i.name);
            }
        }
        if !violated.is_empty() {
            Classification::Outside { violated }
        } else if !tight.is_empty() {
            Classification::Boundary { tight }
        } else {
            Classification::Interior
        }
    }
}

fn ineq(name: &'static str, kind: IneqKind) -> Inequality {
    Inequality { name, kind }
}

/// Inequalities applicable to a gauge of this kind; `symmetric` enables the
/// symmetric-only family.
pub fn inequality_set(kind: GaugeKind, symmetric: bool) -> Vec<Inequality> {
    let mut out = vec![
        ineq("D<=2R", IneqKind::DiameterLeTwiceCircum),
        ineq("2r+R<=1.5D", IneqKind::TwoInradiusBound),
        ineq("lower-parabola", IneqKind::LowerParabola),
        ineq("concentricity", IneqKind::ConcentricityGeneral),
    ];
    if symmetric {
        out.push(ineq("symmetric-concentricity", IneqKind::ConcentricitySymmetric));
        out.push(ineq("bohnenblust", IneqKind::BohnenblustSymmetric));
    }
    match kind {
        GaugeKind::Square | GaugeKind::RegularKGon(4) => {
            out.push(ineq("parallelotope-collapse", IneqKind::ParallelotopeCollapse));
        }
        GaugeKind::RegularKGon(5) => {
            out.push(ineq("pentagon-right", IneqKind::PentagonRight));
            out.push(ineq("pentagon-jung", IneqKind::PentagonJung));
        }
        GaugeKind::RegularKGon(6) => {
            out.push(ineq("hexagon-quarter", IneqKind::HexagonQuarter));
        }
        GaugeKind::DiskApprox(_) => {
            out.push(ineq("santalo", IneqKind::Santalo));
            out.push(ineq("euclid-jung", IneqKind::EuclidJung));
        }
        _ => {}
    }
    out
}

/// Builds the diagram description for a supported gauge kind.
pub fn boundary_spec(kind: GaugeKind) -> Result<DiagramSpec> {
    match kind {
        GaugeKind::Triangle | GaugeKind::RegularKGon(3) => Ok(triangle_spec()),
        GaugeKind::Square | GaugeKind::RegularKGon(4) => Ok(square_spec(kind)),
        GaugeKind::RegularKGon(5) => Ok(pentagon_spec()),
        GaugeKind::RegularKGon(6) => Ok(hexagon_spec()),
        GaugeKind::DiskApprox(m) => Ok(disk_spec(m)),
        other => Err(Error::UnsupportedGauge(other.to_string())),
    }
}

fn triangle_spec() -> DiagramSpec {
    DiagramSpec {
        gauge: GaugeKind::Triangle,
        inequalities: inequality_set(GaugeKind::Triangle, false),
        curves: vec![
            curve("lower-parabola", CurveStatus::Proved, |t| {
                let y = 0.5 + 0.5 * t;
                (y * (1.0 - y), y)
            }),
            curve("right-edge", CurveStatus::Proved, |t| {
                let y = 0.5 + 0.5 * t;
                ((3.0 * y - 1.0) / 2.0, y)
            }),
            curve("top-edge", CurveStatus::Proved, |t| (t, 1.0)),
        ],
        landmarks: vec![
            Landmark {
                name: "segment",
                x: 0.0,
                y: 1.0,
            },
            Landmark {
                name: "reversed gauge",
                x: 0.25,
                y: 0.5,
            },
            Landmark {
                name: "gauge",
                x: 1.0,
                y: 1.0,
            },
        ],
        model_error: 0.0,
    }
}

fn square_spec(kind: GaugeKind) -> DiagramSpec {
    DiagramSpec {
        gauge: kind,
        inequalities: inequality_set(kind, true),
        curves: vec![curve("segment-diagram", CurveStatus::Proved, |t| (t, 1.0))],
        landmarks: vec![
            Landmark {
                name: "segment",
                x: 0.0,
                y: 1.0,
            },
            Landmark {
                name: "gauge",
                x: 1.0,
                y: 1.0,
            },
        ],
        model_error: 0.0,
    }
}

fn hexagon_spec() -> DiagramSpec {
    DiagramSpec {
        gauge: GaugeKind::RegularKGon(6),
        inequalities: inequality_set(GaugeKind::RegularKGon(6), true),
        curves: vec![
            curve("right-edge", CurveStatus::Proved, |t| {
                let y = 0.75 + 0.25 * t;
                (2.0 * y - 1.0, y)
            }),
            curve("top-edge", CurveStatus::Proved, |t| (0.4 + 0.6 * t, 1.0)),
            // Image of the inscribed isosceles family, conjectured extremal.
            curve("left-family", CurveStatus::Conjectured, |t| {
                let lambda = 0.5 + 0.5 * t;
                crate::diagram::families::hexagon_family_formula(lambda)
            }),
            curve("quarter-floor", CurveStatus::Proved, |t| {
                (0.25, 0.75 + 0.25 * t)
            }),
        ],
        landmarks: vec![
            Landmark {
                name: "midpoint triangle",
                x: 0.5,
                y: 0.75,
            },
            Landmark {
                name: "family top",
                x: 0.4,
                y: 1.0,
            },
            Landmark {
                name: "gauge",
                x: 1.0,
                y: 1.0,
            },
        ],
        model_error: 0.0,
    }
}

fn pentagon_spec() -> DiagramSpec {
    let jung_y = (1.0 + SQRT5) / 4.0;
    // T' shares the extreme ratio with T; its inradius coordinate has no
    // short closed form, so compute it once.
    let (_, t_prime) = crate::diagram::families::pentagon_jung_triangles();
    let gauge = crate::diagram::families::pentagon_gauge();
    let tp = RadiiProfile::compute(&t_prime, &gauge).expect("pentagon profile");
    DiagramSpec {
        gauge: GaugeKind::RegularKGon(5),
        inequalities: inequality_set(GaugeKind::RegularKGon(5), false),
        curves: vec![
            curve("right-edge", CurveStatus::Proved, |t| {
                let y = jung_y + (1.0 - jung_y) * t;
                ((SQRT5 * y - 1.0) / (SQRT5 - 1.0), y)
            }),
            curve("jung-edge", CurveStatus::Proved, move |t| {
                let x0 = (1.0 + SQRT5) / 8.0;
                let x1 = (3.0 + SQRT5) / 8.0;
                (x0 + (x1 - x0) * t, jung_y)
            }),
            curve("top-edge", CurveStatus::Proved, |t| (t, 1.0)),
            curve("left-family", CurveStatus::Conjectured, |t| {
                crate::diagram::families::pentagon_family_formula(0.5 * t)
            }),
        ],
        landmarks: vec![
            Landmark {
                name: "isosceles extreme",
                x: (1.0 + SQRT5) / 8.0,
                y: jung_y,
            },
            Landmark {
                name: "equilateral extreme",
                x: tp.x,
                y: tp.y,
            },
            Landmark {
                name: "gauge",
                x: 1.0,
                y: 1.0,
            },
        ],
        model_error: 0.0,
    }
}

fn disk_spec(m: u32) -> DiagramSpec {
    let jung_y = 3.0f64.sqrt() / 2.0;
    DiagramSpec {
        gauge: GaugeKind::DiskApprox(m),
        inequalities: inequality_set(GaugeKind::DiskApprox(m), true),
        curves: vec![
            curve("santalo", CurveStatus::Proved, move |t| {
                let y = jung_y + (1.0 - jung_y) * t;
                let w = (1.0 - y * y).max(0.0).sqrt();
                (2.0 * y * y * w / (1.0 + w), y)
            }),
            curve("jung-edge", CurveStatus::Proved, move |t| {
                let x0 = 0.5;
                let x1 = 3.0f64.sqrt() - 1.0;
                (x0 + (x1 - x0) * t, jung_y)
            }),
            curve("right-edge", CurveStatus::Proved, move |t| {
                let y = jung_y + (1.0 - jung_y) * t;
                (2.0 * y - 1.0, y)
            }),
            curve("top-edge", CurveStatus::Proved, |t| (t, 1.0)),
        ],
        landmarks: vec![
            Landmark {
                name: "equilateral triangle",
                x: 0.5,
                y: jung_y,
            },
            Landmark {
                name: "gauge",
                x: 1.0,
                y: 1.0,
            },
        ],
        model_error: GaugeKind::DiskApprox(m).model_error(),
    }
}

/// Evaluates every applicable proved inequality for the pair `(K, C)` with
/// signed slacks (nonnegative means the inequality holds). Symmetric-only
/// inequalities switch on when `s(C) = 1` within `1e-7`; gauge-specific ones
/// follow `kind`.
pub fn inequality_suite(
    k: &ConvexPolygon,
    c: &ConvexPolygon,
    kind: GaugeKind,
) -> Result<Vec<(&'static str, f64)>> {
    let profile = RadiiProfile::compute(k, c)?;
    Ok(inequality_suite_for_profile(&profile, kind))
}

/// Suite evaluation when the profile is already computed.
pub fn inequality_suite_for_profile(
    profile: &RadiiProfile,
    kind: GaugeKind,
) -> Vec<(&'static str, f64)> {
    let symmetric = (profile.asymmetry - 1.0).abs() <= 1e-7;
    let delta = kind.model_error();
    inequality_set(kind, symmetric)
        .iter()
        .map(|i| (i.name, i.slack(profile.x, profile.y, profile.asymmetry, delta)))
        .collect()
}
