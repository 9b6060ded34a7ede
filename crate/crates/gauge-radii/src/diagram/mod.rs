//! Extremal families, boundary descriptions, samplers and the inequality
//! suite: the machinery that reproduces and checks the (r, D, R) diagrams.

pub mod families;
pub mod sample;
pub mod spec;

pub use families::{
    hexagon_family, pentagon_family, pentagon_jung_triangles, triangle_family,
};
pub use sample::{sample_bodies, triangle_coverage_points, DiagramRun, SamplePoint, Strategy};
pub use spec::{
    boundary_spec, inequality_suite, BoundaryCurve, Classification, CurveStatus, DiagramSpec,
    Inequality, Landmark,
};
