//! Dense linear programs in at most four variables.
//!
//! All containment problems in this crate reduce to
//! `minimize c·z  subject to  a_i·z <= b_i` with `dim(z) <= 4` and up to a
//! few thousand constraints. That regime is the sweet spot for a
//! Seidel-style randomized incremental solver: expected `O(d!·m)` with tiny
//! constants, recursing on dimension whenever a newly inserted constraint
//! cuts off the current optimum.
//!
//! The feasible region is implicitly intersected with the box
//! `|z_k| <= BOX_BOUND`; an optimum pinned to that box is reported as
//! `Unbounded`. The constraint shuffle uses a fixed seed, so identical
//! inputs give bit-identical outputs. Among optimal points the solver
//! returns the lexicographically smallest one, found by re-solving with the
//! objective pinned and each coordinate minimized in turn.

use crate::config;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Box half-width standing in for infinity.
const BOX_BOUND: f64 = 1e8;
/// Fixed shuffle seed; determinism is part of the solver contract.
const SHUFFLE_SEED: u64 = 0x5EED;

pub const MAX_DIM: usize = 4;

#[derive(Clone, Debug)]
pub struct LpConstraint {
    pub row: Vec<f64>,
    pub bound: f64,
}

/// `minimize objective·z` subject to `row·z <= bound` per constraint.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub constraints: Vec<LpConstraint>,
}

impl LpProblem {
    pub fn new(objective: Vec<f64>) -> LpProblem {
        LpProblem {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, row: Vec<f64>, bound: f64) {
        self.constraints.push(LpConstraint { row, bound });
    }

    fn validate(&self) -> Result<usize> {
        let d = self.objective.len();
        if d == 0 || d > MAX_DIM {
            return Err(Error::Numerical("LP dimension must be 1..=4"));
        }
        if self.constraints.is_empty() {
            return Err(Error::Numerical("LP needs at least one constraint"));
        }
        let finite = self.objective.iter().all(|v| v.is_finite())
            && self.constraints.iter().all(|c| {
                c.bound.is_finite() && c.row.len() == d && c.row.iter().all(|v| v.is_finite())
            });
        if !finite {
            return Err(Error::Numerical("LP coefficients must be finite"));
        }
        Ok(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    pub z: Vec<f64>,
    pub value: f64,
    /// Constraints satisfied with equality at `z`, within the solve tolerance.
    pub tight: Vec<usize>,
}

/// Solves with the process default `eps_lp`.
pub fn solve(problem: &LpProblem) -> Result<LpSolution> {
    solve_with(problem, config::eps_lp())
}

/// Solves with an explicit relative tolerance.
pub fn solve_with(problem: &LpProblem, eps: f64) -> Result<LpSolution> {
    let dim = problem.validate()?;
    let rows: Vec<Row> = problem
        .constraints
        .iter()
        .map(|c| Row::from_constraint(c, dim))
        .collect();
    let mut obj = [0.0; MAX_DIM];
    obj[..dim].copy_from_slice(&problem.objective);

    let mut rng = ChaCha8Rng::seed_from_u64(SHUFFLE_SEED);
    let base = match solve_rec(dim, rows.clone(), obj, &mut rng, eps) {
        Some(z) => z,
        None => {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                z: vec![0.0; dim],
                value: f64::NAN,
                tight: Vec::new(),
            })
        }
    };
    if on_box(&base, dim) {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            z: base[..dim].to_vec(),
            value: f64::NEG_INFINITY,
            tight: Vec::new(),
        });
    }
    let value = dot(&obj, &base, dim);

    // Lexicographic refinement: pin the objective, then minimize z_0, pin it,
    // minimize z_1, and so on. Keeps reported optima (and the certificates
    // derived from them) reproducible when the optimal face is not a vertex.
    let mut pinned = rows;
    pinned.push(Row { a: obj, b: value });
    let mut z = base;
    for k in 0..dim {
        let mut ek = [0.0; MAX_DIM];
        ek[k] = 1.0;
        match solve_rec(dim, pinned.clone(), ek, &mut rng, eps) {
            Some(refined) if !on_box(&refined, dim) => {
                z = refined;
                pinned.push(Row { a: ek, b: z[k] });
            }
            // Numerical hiccup in a refinement step: keep the base optimum.
            _ => break,
        }
    }

    let tight = (0..problem.constraints.len())
        .filter(|&i| {
            let r = Row::from_constraint(&problem.constraints[i], dim);
            let s = dot(&r.a, &z, dim);
            s >= r.b - feas_tol(&r, &z, dim, eps)
        })
        .collect();
    Ok(LpSolution {
        status: LpStatus::Optimal,
        z: z[..dim].to_vec(),
        value,
        tight,
    })
}

#[derive(Clone, Copy, Debug)]
struct Row {
    a: [f64; MAX_DIM],
    b: f64,
}

impl Row {
    fn from_constraint(c: &LpConstraint, dim: usize) -> Row {
        let mut a = [0.0; MAX_DIM];
        a[..dim].copy_from_slice(&c.row);
        Row { a, b: c.bound }
    }
}

fn dot(a: &[f64; MAX_DIM], z: &[f64; MAX_DIM], dim: usize) -> f64 {
    (0..dim).map(|i| a[i] * z[i]).sum()
}

fn feas_tol(r: &Row, z: &[f64; MAX_DIM], dim: usize, eps: f64) -> f64 {
    let mut mag = 1.0 + r.b.abs();
    for i in 0..dim {
        mag += (r.a[i] * z[i]).abs();
    }
    eps * mag
}

fn on_box(z: &[f64; MAX_DIM], dim: usize) -> bool {
    (0..dim).any(|k| z[k].abs() >= BOX_BOUND * (1.0 - 1e-6))
}

/// Recursive core: minimizer of `obj` over `rows ∩ box`, or None when
/// infeasible. Consumes an owned row list so it can shuffle in place.
fn solve_rec(
    dim: usize,
    mut rows: Vec<Row>,
    obj: [f64; MAX_DIM],
    rng: &mut ChaCha8Rng,
    eps: f64,
) -> Option<[f64; MAX_DIM]> {
    debug_assert!((1..=MAX_DIM).contains(&dim));
    if dim == 1 {
        return solve_1d(&rows, obj[0], eps);
    }
    rows.shuffle(rng);

    // Start at the box corner minimizing the objective; zero coefficients
    // stay at 0 to keep the point off the box.
    let mut z = [0.0; MAX_DIM];
    for k in 0..dim {
        z[k] = if obj[k] > 0.0 {
            -BOX_BOUND
        } else if obj[k] < 0.0 {
            BOX_BOUND
        } else {
            0.0
        };
    }

    for idx in 0..rows.len() {
        let r = rows[idx];
        let viol = dot(&r.a, &z, dim) - r.b;
        if viol <= feas_tol(&r, &z, dim, eps) {
            continue;
        }
        // The optimum of the first idx+1 constraints lies on this hyperplane.
        // Eliminate the variable with the largest coefficient.
        let k = (0..dim)
            .max_by(|&i, &j| r.a[i].abs().partial_cmp(&r.a[j].abs()).unwrap())
            .unwrap();
        let ak = r.a[k];
        if ak.abs() <= 1e-14 * (1.0 + r.b.abs()) {
            // Degenerate row: 0·z <= b with b < 0 is infeasible, else vacuous.
            if r.b < 0.0 {
                return None;
            }
            continue;
        }

        let keep: Vec<usize> = (0..dim).filter(|&j| j != k).collect();
        let reduce_row = |row: &Row| -> Row {
            let f = row.a[k] / ak;
            let mut a = [0.0; MAX_DIM];
            for (slot, &j) in keep.iter().enumerate() {
                a[slot] = row.a[j] - f * r.a[j];
            }
            Row {
                a,
                b: row.b - f * r.b,
            }
        };

        let mut sub_rows: Vec<Row> = rows[..idx].iter().map(reduce_row).collect();
        // Carry the box limits of the eliminated variable:
        // -B <= (b - Σ a_j z_j)/a_k <= B.
        for sign in [1.0, -1.0] {
            let mut a = [0.0; MAX_DIM];
            for (slot, &j) in keep.iter().enumerate() {
                a[slot] = -sign * r.a[j] / ak;
            }
            sub_rows.push(Row {
                a,
                b: BOX_BOUND - sign * r.b / ak,
            });
        }
        let mut sub_obj = [0.0; MAX_DIM];
        for (slot, &j) in keep.iter().enumerate() {
            sub_obj[slot] = obj[j] - obj[k] * r.a[j] / ak;
        }

        let sub = solve_rec(dim - 1, sub_rows, sub_obj, rng, eps)?;

        let mut lifted = [0.0; MAX_DIM];
        for (slot, &j) in keep.iter().enumerate() {
            lifted[j] = sub[slot];
        }
        let mut rest = 0.0;
        for &j in &keep {
            rest += r.a[j] * lifted[j];
        }
        lifted[k] = (r.b - rest) / ak;
        z = lifted;
    }
    Some(z)
}

fn solve_1d(rows: &[Row], c: f64, eps: f64) -> Option<[f64; MAX_DIM]> {
    let mut lo = -BOX_BOUND;
    let mut hi = BOX_BOUND;
    for r in rows {
        let a = r.a[0];
        if a.abs() <= 1e-14 * (1.0 + r.b.abs()) {
            if r.b < -eps {
                return None;
            }
            continue;
        }
        let bound = r.b / a;
        if a > 0.0 {
            hi = hi.min(bound);
        } else {
            lo = lo.max(bound);
        }
    }
    if lo > hi + eps * (1.0 + lo.abs() + hi.abs()) {
        return None;
    }
    let hi = hi.max(lo);
    let z0 = if c > 0.0 {
        lo
    } else if c < 0.0 {
        hi
    } else {
        0.0f64.clamp(lo, hi)
    };
    let mut z = [0.0; MAX_DIM];
    z[0] = z0;
    Some(z)
}
