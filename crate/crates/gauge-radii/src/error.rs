use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the geometry, LP and diagram layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("non-finite coordinate in input")]
    NonFiniteInput,

    #[error("zero direction")]
    ZeroDirection,

    #[error("gauge body must contain origin")]
    GaugeOriginNotInterior,

    #[error("gauge must be fulldimensional")]
    DegenerateGauge,

    #[error("singular affine map")]
    SingularMap,

    #[error("{what} out of range: {value} not in {range}")]
    ParamOutOfRange {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("equality case requires a simplex")]
    NotASimplex,

    #[error("no certificate within tolerance")]
    NoCertificate,

    #[error("circumradius is zero; cannot normalize containment")]
    ZeroCircumradius,

    #[error("unsupported gauge kind `{0}`; supported: triangle, square, pentagon, hexagon, kgon:<k>, disk:<m>")]
    UnsupportedGauge(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("cannot read polygon: {path}: {reason}")]
    PolygonRead { path: String, reason: String },

    #[error("numerical failure: {0}")]
    Numerical(&'static str),
}
