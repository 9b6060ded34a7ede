//! Radii of planar convex bodies under polygonal gauges.
//!
//! For convex bodies `K` and a fulldimensional gauge `C` in the plane, this
//! crate computes the circumradius `R(K,C)` (smallest homothet of `C`
//! covering a translate of `K`), the inradius `r(K,C)` (largest homothet of
//! `C` fitting in `K`), the gauge diameter `D(K,C)` and the Minkowski
//! asymmetry `s(C)`, all by small dense linear programs over translation
//! and scale. On top of those sit optimal-containment certificates, the
//! simplex/prism reduction, extremal triangle families for the regular
//! triangle / hexagon / pentagon gauges, and samplers that populate and
//! verify the `(r/R, D/2R)` diagram of each gauge.

pub mod config;
pub mod containment;
pub mod diagram;
pub mod error;
pub mod gauge;
pub mod geom;
pub mod io;
pub mod lp;
pub mod polygon;
pub mod radii;
pub mod render;

pub use config::{set_tolerances, tolerances, Tolerances};
pub use error::{Error, Result};
pub use gauge::GaugeKind;
pub use geom::{Mat2, Point};
pub use polygon::{convex_hull, interpolate, regular_kgon, ConvexPolygon};
pub use radii::{asymmetry, circumradius, diagram_point, diameter, inradius, RadiiProfile};
