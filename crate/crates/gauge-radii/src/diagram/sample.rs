//! Random body samplers that fill the diagrams.
//!
//! Every sample is a pure function of `(seed, index)`: each index gets its
//! own counter-mode RNG stream, so results are identical regardless of
//! evaluation order and can be fanned out across threads.

use crate::diagram::families;
use crate::diagram::spec::inequality_suite_for_profile;
use crate::error::{Error, Result};
use crate::gauge::GaugeKind;
use crate::geom::Point;
use crate::polygon::{interpolate, ConvexPolygon};
use crate::radii::{asymmetry, RadiiProfile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Hull,
    Interpolation,
    FamilyMix,
}

impl Strategy {
    pub fn parse(s: &str) -> Result<Strategy> {
        match s.to_ascii_lowercase().as_str() {
            "hull" => Ok(Strategy::Hull),
            "interp" | "interpolation" => Ok(Strategy::Interpolation),
            "mix" | "family-mix" => Ok(Strategy::FamilyMix),
            _ => Err(Error::InvalidPolygon(format!(
                "unknown strategy `{s}`; expected hull, interp or mix"
            ))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Strategy::Hull => "hull",
            Strategy::Interpolation => "interp",
            Strategy::FamilyMix => "mix",
        }
    }
}

/// One evaluated body: diagram coordinates, raw functionals, and the signed
/// slack of every applicable proved inequality.
#[derive(Clone, Debug)]
pub struct SamplePoint {
    pub index: u64,
    pub x: f64,
    pub y: f64,
    pub inradius: f64,
    pub diameter: f64,
    pub circumradius: f64,
    pub asymmetry: f64,
    pub slacks: Vec<(&'static str, f64)>,
}

impl SamplePoint {
    /// The inequality with the least slack.
    pub fn worst(&self) -> (&'static str, f64) {
        self.slacks
            .iter()
            .cloned()
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap_or(("none", f64::INFINITY))
    }
}

/// A complete sampling run, ready for CSV/SVG output.
#[derive(Clone, Debug)]
pub struct DiagramRun {
    pub gauge_label: String,
    pub strategy: Strategy,
    pub seed: u64,
    pub samples: Vec<SamplePoint>,
}

/// Hull of `min_pts..=max_pts` uniform points in the centered square of
/// half-extent `half`.
pub fn random_hull<R: Rng>(rng: &mut R, min_pts: usize, max_pts: usize, half: f64) -> ConvexPolygon {
    let n = rng.gen_range(min_pts..=max_pts);
    let pts: Vec<Point> = (0..n)
        .map(|_| {
            Point::new(
                (rng.gen::<f64>() * 2.0 - 1.0) * half,
                (rng.gen::<f64>() * 2.0 - 1.0) * half,
            )
        })
        .collect();
    ConvexPolygon::hull(&pts).expect("nonempty point set")
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}

fn family_member(kind: GaugeKind, slot: u64) -> Option<ConvexPolygon> {
    let t = (slot % 101) as f64 / 100.0;
    match kind {
        GaugeKind::Triangle | GaugeKind::RegularKGon(3) => {
            families::triangle_family(1.0 + t).ok()
        }
        GaugeKind::RegularKGon(5) => families::pentagon_family(0.5 * t).ok(),
        GaugeKind::RegularKGon(6) => families::hexagon_family(t).ok(),
        _ => None,
    }
}

fn build_body(
    strategy: Strategy,
    kind: GaugeKind,
    gauge: &ConvexPolygon,
    index: u64,
    rng: &mut ChaCha8Rng,
) -> Result<ConvexPolygon> {
    match strategy {
        Strategy::Hull => Ok(random_hull(rng, 3, 12, 1.0)),
        Strategy::Interpolation => {
            let k0 = random_hull(rng, 3, 12, 1.0);
            let lambda = (index % 11) as f64 / 10.0;
            interpolate(&k0, gauge, lambda)
        }
        Strategy::FamilyMix => match index % 3 {
            0 => match family_member(kind, index / 3) {
                Some(body) => Ok(body),
                None => Ok(random_hull(rng, 3, 12, 1.0)),
            },
            1 => Ok(random_hull(rng, 3, 12, 1.0)),
            _ => {
                let k0 = random_hull(rng, 3, 12, 1.0);
                let lambda = (index % 11) as f64 / 10.0;
                interpolate(&k0, gauge, lambda)
            }
        },
    }
}

/// Evaluates `n` sampled bodies against the gauge. Deterministic in
/// `(seed, index)`; results are ordered by index.
pub fn sample_bodies(
    gauge: &ConvexPolygon,
    kind: GaugeKind,
    n: usize,
    seed: u64,
    strategy: Strategy,
) -> Result<Vec<SamplePoint>> {
    if n == 0 {
        return Err(Error::ParamOutOfRange {
            what: "n",
            value: 0.0,
            range: "[1, ∞)",
        });
    }
    let s = asymmetry(gauge)?;
    let mut out = Vec::with_capacity(n);
    for index in 0..n as u64 {
        let mut rng = rng_for(seed, index);
        let body = build_body(strategy, kind, gauge, index, &mut rng)?;
        let profile = RadiiProfile::compute_with_asymmetry(&body, gauge, s)?;
        let slacks = inequality_suite_for_profile(&profile, kind);
        debug_assert!((0.0..=1.0 + 1e-9).contains(&profile.x));
        debug_assert!((0.0..=1.0 + 1e-9).contains(&profile.y));
        out.push(SamplePoint {
            index,
            x: profile.x,
            y: profile.y,
            inradius: profile.inradius,
            diameter: profile.diameter,
            circumradius: profile.circumradius,
            asymmetry: s,
            slacks,
        });
    }
    Ok(out)
}

/// Diagram points produced by the extremal triangle family plus Minkowski
/// blends toward the gauge, for the triangle gauge. Used to check coverage
/// of the full triangle-gauge region.
pub fn triangle_coverage_points(d_steps: usize, lambda_steps: usize) -> Result<Vec<(f64, f64)>> {
    let s = families::triangle_gauge();
    let s_asym = asymmetry(&s)?;
    let mut out = Vec::with_capacity(d_steps * lambda_steps);
    for i in 0..d_steps {
        let d = 1.0 + i as f64 / (d_steps - 1) as f64;
        let t = families::triangle_family(d.min(2.0))?;
        for j in 0..lambda_steps {
            let lambda = j as f64 / (lambda_steps - 1) as f64;
            let body = interpolate(&t, &s, lambda)?;
            let profile = RadiiProfile::compute_with_asymmetry(&body, &s, s_asym)?;
            out.push((profile.x, profile.y));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_samples_is_an_error() {
        let g = families::triangle_gauge();
        assert!(sample_bodies(&g, GaugeKind::Triangle, 0, 0, Strategy::Hull).is_err());
    }

    #[test]
    fn samples_satisfy_proved_inequalities() {
        let g = families::hexagon_gauge();
        let pts = sample_bodies(&g, GaugeKind::RegularKGon(6), 200, 3, Strategy::FamilyMix).unwrap();
        for p in &pts {
            for (name, slack) in &p.slacks {
                assert!(*slack >= -1e-7, "sample {} violates {name}: {slack}", p.index);
            }
        }
    }

    #[test]
    fn fixed_seed_reproduces_exactly() {
        let g = families::pentagon_gauge();
        let a = sample_bodies(&g, GaugeKind::RegularKGon(5), 50, 11, Strategy::Hull).unwrap();
        let b = sample_bodies(&g, GaugeKind::RegularKGon(5), 50, 11, Strategy::Hull).unwrap();
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.x.to_bits(), q.x.to_bits());
            assert_eq!(p.y.to_bits(), q.y.to_bits());
        }
    }

    #[test]
    fn strategy_parse() {
        assert_eq!(Strategy::parse("hull").unwrap(), Strategy::Hull);
        assert_eq!(Strategy::parse("interp").unwrap(), Strategy::Interpolation);
        assert_eq!(Strategy::parse("mix").unwrap(), Strategy::FamilyMix);
        assert!(Strategy::parse("froth").is_err());
    }
}
