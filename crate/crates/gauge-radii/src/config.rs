//! Process-wide numerical tolerances.
//!
//! All geometry predicates share one tolerance family. Defaults match the
//! library contracts; a CLI front end may override them once at startup
//! before any computation. Stored as atomic bits so the pure computation
//! layers stay lock-free.

use std::sync::atomic::{AtomicU64, Ordering};

/// Tolerance bundle. `geo` drives vertex dedup/collinearity, `lp` the LP
/// optimality/feasibility margins, `cert` contact detection in certificates,
/// `class` diagram classification and check verdicts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub geo: f64,
    pub lp: f64,
    pub cert: f64,
    pub class: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            geo: 1e-9,
            lp: 1e-9,
            cert: 1e-6,
            class: 1e-6,
        }
    }
}

// 0 bits doubles as "unset" (a zero tolerance is never legal).
static GEO: AtomicU64 = AtomicU64::new(0);
static LP: AtomicU64 = AtomicU64::new(0);
static CERT: AtomicU64 = AtomicU64::new(0);
static CLASS: AtomicU64 = AtomicU64::new(0);

fn read(cell: &AtomicU64, default: f64) -> f64 {
    let bits = cell.load(Ordering::Relaxed);
    if bits == 0 {
        default
    } else {
        f64::from_bits(bits)
    }
}

pub fn tolerances() -> Tolerances {
    let d = Tolerances::default();
    Tolerances {
        geo: read(&GEO, d.geo),
        lp: read(&LP, d.lp),
        cert: read(&CERT, d.cert),
        class: read(&CLASS, d.class),
    }
}

/// Install tolerances for the whole process. Call once, before computing.
pub fn set_tolerances(t: Tolerances) {
    assert!(
        t.geo > 0.0 && t.lp > 0.0 && t.cert > 0.0 && t.class > 0.0,
        "tolerances must be positive"
    );
    GEO.store(t.geo.to_bits(), Ordering::Relaxed);
    LP.store(t.lp.to_bits(), Ordering::Relaxed);
    CERT.store(t.cert.to_bits(), Ordering::Relaxed);
    CLASS.store(t.class.to_bits(), Ordering::Relaxed);
}

pub fn eps_geo() -> f64 {
    read(&GEO, Tolerances::default().geo)
}

pub fn eps_lp() -> f64 {
    read(&LP, Tolerances::default().lp)
}

pub fn eps_cert() -> f64 {
    read(&CERT, Tolerances::default().cert)
}

pub fn eps_class() -> f64 {
    read(&CLASS, Tolerances::default().class)
}
