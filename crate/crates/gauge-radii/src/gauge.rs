//! Gauge catalog: the named unit bodies the diagram machinery knows about.

use crate::error::{Error, Result};
use crate::polygon::{regular_kgon, ConvexPolygon};
use std::fmt;

/// Which family of boundary curves and inequalities applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaugeKind {
    Triangle,
    Square,
    RegularKGon(u32),
    /// Circumscribed regular m-gon standing in for the euclidean disk.
    DiskApprox(u32),
    Custom,
}

impl GaugeKind {
    /// The unit body of this kind. Triangles and k-gons have circumradius 1
    /// with the first vertex at angle π/2; the square is axis-aligned; the
    /// disk approximation circumscribes the unit disk (touching at edge
    /// midpoints).
    pub fn polygon(self) -> Result<ConvexPolygon> {
        match self {
            GaugeKind::Triangle => regular_kgon(3, std::f64::consts::FRAC_PI_2),
            GaugeKind::Square => regular_kgon(4, std::f64::consts::FRAC_PI_4),
            GaugeKind::RegularKGon(k) => {
                if k < 3 {
                    return Err(Error::ParamOutOfRange {
                        what: "k",
                        value: k as f64,
                        range: "[3, ∞)",
                    });
                }
                regular_kgon(k, std::f64::consts::FRAC_PI_2)
            }
            GaugeKind::DiskApprox(m) => {
                if m < 16 {
                    return Err(Error::ParamOutOfRange {
                        what: "m",
                        value: m as f64,
                        range: "[16, ∞)",
                    });
                }
                let inner = regular_kgon(m, std::f64::consts::FRAC_PI_2)?;
                Ok(inner.scale(1.0 / (std::f64::consts::PI / m as f64).cos()))
            }
            GaugeKind::Custom => Err(Error::UnsupportedGauge("custom".into())),
        }
    }

    /// Multiplicative model error of the polygonal disk stand-in: the true
    /// euclidean functionals lie within a factor `1 + model_error()` of the
    /// measured ones. Zero for exact polygonal gauges.
    pub fn model_error(self) -> f64 {
        match self {
            GaugeKind::DiskApprox(m) => 1.0 / (std::f64::consts::PI / m as f64).cos() - 1.0,
            _ => 0.0,
        }
    }

    pub fn parse(s: &str) -> Result<GaugeKind> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "triangle" => return Ok(GaugeKind::Triangle),
            "square" => return Ok(GaugeKind::Square),
            "pentagon" => return Ok(GaugeKind::RegularKGon(5)),
            "hexagon" => return Ok(GaugeKind::RegularKGon(6)),
            "disk" => return Ok(GaugeKind::DiskApprox(720)),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("kgon:") {
            if let Ok(k) = rest.parse::<u32>() {
                if k >= 3 {
                    return Ok(match k {
                        3 => GaugeKind::Triangle,
                        4 => GaugeKind::Square,
                        _ => GaugeKind::RegularKGon(k),
                    });
                }
            }
        }
        if let Some(rest) = lower.strip_prefix("disk:") {
            if let Ok(m) = rest.parse::<u32>() {
                if m >= 16 {
                    return Ok(GaugeKind::DiskApprox(m));
                }
            }
        }
        Err(Error::UnsupportedGauge(s.to_string()))
    }
}

impl fmt::Display for GaugeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaugeKind::Triangle => write!(f, "triangle"),
            GaugeKind::Square => write!(f, "square"),
            GaugeKind::RegularKGon(5) => write!(f, "pentagon"),
            GaugeKind::RegularKGon(6) => write!(f, "hexagon"),
            GaugeKind::RegularKGon(k) => write!(f, "kgon:{k}"),
            GaugeKind::DiskApprox(m) => write!(f, "disk:{m}"),
            GaugeKind::Custom => write!(f, "custom"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["triangle", "square", "pentagon", "hexagon", "disk:128", "kgon:9"] {
            let kind = GaugeKind::parse(s).unwrap();
            assert_eq!(kind.to_string(), s);
        }
        assert_eq!(GaugeKind::parse("kgon:3").unwrap(), GaugeKind::Triangle);
        assert!(GaugeKind::parse("heptadecagon").is_err());
        assert!(GaugeKind::parse("disk:4").is_err());
    }

    #[test]
    fn disk_approx_circumscribes_unit_disk() {
        let m = 64;
        let disk = GaugeKind::DiskApprox(m).polygon().unwrap();
        // Inradius is exactly 1, circumradius sec(π/m).
        let normals = disk.edge_unit_normals();
        for n in normals {
            let h = disk.support_value(n);
            assert!((h - 1.0).abs() < 1e-12, "apothem {h}");
        }
        let sec = 1.0 / (std::f64::consts::PI / m as f64).cos();
        for v in disk.vertices() {
            assert!((v.norm() - sec).abs() < 1e-12);
        }
    }
}
