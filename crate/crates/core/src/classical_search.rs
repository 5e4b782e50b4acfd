//! Classical searching time on the line graph of `K_(n+1)`:
//! `t_c = jᵀ (I − P_Γ)⁻¹ j` with `j` the normalized all-ones vector on
//! `E(Δ)`, i.e. the expected number of steps until an isotropic edge walk
//! started uniformly on an unmarked edge first stands on a marked edge.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, BoundEntry, Hypotheses, Relation};
use crate::error::{Error, Result};
use crate::linalg;
use crate::operators::LineTransition;
use crate::signed_graph::SignedCompleteGraph;

/// Complements up to this many edges are solved by dense Cholesky.
pub const DIRECT_SOLVE_MAX_EDGES: usize = 2000;

/// Complements up to this many edges get a dense eigensolve of `P_Γ`.
pub const DENSE_EIGEN_MAX_EDGES: usize = 1500;

pub const SOLVER_TOL: f64 = 1e-10;

/// Per-trial step cap for the Monte-Carlo walker.
pub const STEP_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverKind {
    Cholesky,
    ConjugateGradient,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub standard_error: f64,
    pub trials: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HittingTimeResult {
    pub t_c: f64,
    pub lambda_max_p: f64,
    /// `‖j − (I − P)x‖ / ‖j‖`.
    pub solver_residual: f64,
    pub solver: SolverKind,
    pub iterations: usize,
    pub mc_estimate: Option<McEstimate>,
}

pub fn hitting_time(g: &SignedCompleteGraph) -> Result<HittingTimeResult> {
    let p = LineTransition::new(g)?;
    hitting_time_with(&p)
}

pub fn hitting_time_with(p: &LineTransition) -> Result<HittingTimeResult> {
    let m = p.dim();
    let j = vec![1.0 / (m as f64).sqrt(); m];
    let (x, residual, solver, iterations) = if m <= DIRECT_SOLVE_MAX_EDGES {
        let a = DMatrix::identity(m, m) - p.dense()?;
        let chol = a
            .clone()
            .cholesky()
            .ok_or(Error::SolverFailure { residual: f64::NAN })?;
        let b = DVector::from_column_slice(&j);
        let x = chol.solve(&b);
        let residual = (&b - &a * &x).norm() / b.norm();
        (x.as_slice().to_vec(), residual, SolverKind::Cholesky, 0)
    } else {
        let sol =
            linalg::conjugate_gradient(|w, out| p.apply_defect(w, out), &j, SOLVER_TOL, 50 * m);
        (
            sol.x,
            sol.relative_residual,
            SolverKind::ConjugateGradient,
            sol.iterations,
        )
    };
    // Also rejects a NaN residual.
    if residual.is_nan() || residual > SOLVER_TOL {
        return Err(Error::SolverFailure { residual });
    }
    Ok(HittingTimeResult {
        t_c: linalg::dot(&j, &x),
        lambda_max_p: lambda_max_p(p)?,
        solver_residual: residual,
        solver,
        iterations,
        mc_estimate: None,
    })
}

/// Residual target for the power iteration. Its rounding floor sits near
/// `1e-12` at `|E(Δ)| ≈ 8·10⁴`; the eigenvalue error is about
/// `residual² / gap`, far below anything the bounds resolve.
pub const POWER_TOL: f64 = 1e-10;

/// `λ_max(P_Γ)`: dense for small complements, shifted power iteration
/// otherwise. The shift `1/(n−1)` lifts the spectrum to `[0, ∞)`.
pub fn lambda_max_p(p: &LineTransition) -> Result<f64> {
    let m = p.dim();
    if m <= DENSE_EIGEN_MAX_EDGES {
        return Ok(linalg::eigh(&p.dense()?)?.values[0]);
    }
    let res = linalg::power_iteration(
        |w, out| p.apply(w, out),
        vec![1.0; m],
        -p.kernel_eigenvalue(),
        POWER_TOL,
        100_000,
    );
    if res.residual > POWER_TOL {
        return Err(Error::NoConvergence);
    }
    Ok(res.value)
}

/// Monte-Carlo estimate of `t_c`. Trial `i` draws from stream `i` of a
/// ChaCha8 generator keyed by `seed`, so the result does not depend on how
/// trials are scheduled.
pub fn mc_hitting_time(g: &SignedCompleteGraph, trials: u64, seed: u64) -> Result<McEstimate> {
    mc_hitting_time_capped(g, trials, seed, STEP_CAP)
}

pub fn mc_hitting_time_capped(
    g: &SignedCompleteGraph,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let p = LineTransition::new(g)?;
    let size = g.order();
    let mut marked = vec![false; size * size];
    for e in g.marked_edges() {
        marked[e.u * size + e.v] = true;
        marked[e.v * size + e.u] = true;
    }
    let starts = p.complement().edges();
    let n = g.n() as u64;

    let steps: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let start = starts[rng.random_range(0..starts.len())];
            let (mut u, mut v) = (start.u, start.v);
            let mut count = 0u64;
            loop {
                if count == cap {
                    return Err(Error::StepCapExceeded { trial, cap });
                }
                // One of the 2(n−1) edges sharing an endpoint with {u, v}.
                let r = rng.random_range(0..2 * (n - 1));
                let keep = if r < n - 1 { u } else { v };
                let mut w = (r % (n - 1)) as usize;
                let (lo, hi) = if u < v { (u, v) } else { (v, u) };
                if w >= lo {
                    w += 1;
                }
                if w >= hi {
                    w += 1;
                }
                u = keep;
                v = w;
                count += 1;
                if marked[u * size + v] {
                    return Ok(count);
                }
            }
        })
        .collect::<Result<_>>()?;

    let k = steps.len() as f64;
    let mean = steps.iter().map(|&s| s as f64).sum::<f64>() / k;
    let var = if steps.len() > 1 {
        steps
            .iter()
            .map(|&s| (s as f64 - mean).powi(2))
            .sum::<f64>()
            / (k - 1.0)
    } else {
        0.0
    };
    Ok(McEstimate {
        mean,
        standard_error: (var / k).sqrt(),
        trials,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalBounds {
    pub t_c: f64,
    pub lambda_max_p: f64,
    /// `1 / (1 − λ_max(P_Γ))`.
    pub resolvent: f64,
    pub hypotheses: Hypotheses,
    pub checks: Vec<BoundEntry>,
}

pub fn classical_bounds(g: &SignedCompleteGraph) -> Result<ClassicalBounds> {
    let res = hitting_time(g)?;
    Ok(classical_bounds_from(g, &res))
}

pub fn classical_bounds_from(g: &SignedCompleteGraph, res: &HittingTimeResult) -> ClassicalBounds {
    let h = Hypotheses::for_graph(g);
    let (n, e) = (g.n() as f64, g.marked_edge_count() as f64);
    let resolvent = 1.0 / (1.0 - res.lambda_max_p);
    let gate = (bounds::SIXTY_FOUR, h.sixty_four);
    let checks = vec![
        BoundEntry::new(
            "tc_near_resolvent",
            (res.t_c - resolvent).abs(),
            Relation::Le,
            4.0,
            gate,
        ),
        BoundEntry::new(
            "tc_bracket.upper",
            resolvent,
            Relation::Le,
            (n + 1.0) * (n - 1.0) / e,
            gate,
        ),
        BoundEntry::new(
            "tc_bracket.lower",
            resolvent,
            Relation::Ge,
            (n + 1.0) * (n - 1.0) / (2.0 * e),
            gate,
        ),
    ];
    ClassicalBounds {
        t_c: res.t_c,
        lambda_max_p: res.lambda_max_p,
        resolvent,
        hypotheses: h,
        checks,
    }
}
