//! Walk evolution from the uniform state, finding probabilities on the
//! marked arcs, and the searching time `t_f = ⌊π / (2θ_max)⌋`.
//!
//! Step `t` always means `t` applications of `U_σ` to `j`, so `FP(0)` is the
//! probability before the walk starts.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::{self, closed_form, BoundEntry, Hypotheses, Relation};
use crate::error::{Error, Result};
use crate::operators::{self, DiscriminantMatrix};
use crate::signed_graph::SignedCompleteGraph;
use crate::spectral::{self, SpectralSummary};

/// Complex amplitudes indexed by the arc table.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState(Vec<Complex64>);

impl QuantumState {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        QuantumState(amplitudes)
    }

    pub fn from_real(values: &[f64]) -> Self {
        QuantumState(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Normalized all-ones state.
    pub fn uniform(len: usize) -> Self {
        let a = 1.0 / (len as f64).sqrt();
        QuantumState(vec![Complex64::new(a, 0.0); len])
    }

    /// Indicator of a single arc.
    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); len];
        v[index] = Complex64::new(1.0, 0.0);
        QuantumState(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.0
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `self · c`.
    pub fn scaled(&self, c: Complex64) -> Self {
        QuantumState(self.0.iter().map(|z| z * c).collect())
    }

    /// `‖self − other‖²`.
    pub fn distance_sqr(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum()
    }
}

/// Uniform superposition `j` over all `n(n+1)` arcs.
pub fn initial_state(g: &SignedCompleteGraph) -> QuantumState {
    QuantumState::uniform(g.arc_table().len())
}

/// `‖ψ|_{A(Γ)}‖²`.
pub fn finding_probability(g: &SignedCompleteGraph, psi: &QuantumState) -> Result<f64> {
    let len = g.arc_table().len();
    if psi.len() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: psi.len(),
        });
    }
    Ok(marked_mass(g, psi.amplitudes()))
}

fn marked_mass(g: &SignedCompleteGraph, amplitudes: &[Complex64]) -> f64 {
    g.marked_arc_indices()
        .iter()
        .map(|&i| amplitudes[i].norm_sqr())
        .sum()
}

/// `t_f = ⌊π / (2θ_max)⌋`.
pub fn quantum_time(summary: &SpectralSummary) -> Result<u64> {
    summary.ensure_nondegenerate()?;
    Ok((PI / (2.0 * summary.theta_max)).floor() as u64)
}

/// Sequential evolution under `U_σ` with reused buffers.
#[derive(Debug)]
pub struct Walk<'g> {
    graph: &'g SignedCompleteGraph,
    state: Vec<Complex64>,
    next: Vec<Complex64>,
    scratch: Vec<Complex64>,
    steps: u64,
}

impl<'g> Walk<'g> {
    pub fn new(graph: &'g SignedCompleteGraph, start: QuantumState) -> Result<Self> {
        let len = graph.arc_table().len();
        if start.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: start.len(),
            });
        }
        Ok(Walk {
            graph,
            state: start.0,
            next: vec![Complex64::new(0.0, 0.0); len],
            scratch: vec![Complex64::new(0.0, 0.0); graph.order()],
            steps: 0,
        })
    }

    pub fn step(&mut self) {
        operators::apply_u_into(self.graph, &self.state, &mut self.next, &mut self.scratch);
        std::mem::swap(&mut self.state, &mut self.next);
        self.steps += 1;
    }

    pub fn advance(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.state
    }

    pub fn finding_probability(&self) -> f64 {
        marked_mass(self.graph, &self.state)
    }

    pub fn into_state(self) -> QuantumState {
        QuantumState(self.state)
    }
}

/// `U_σ^steps ψ`.
pub fn evolve(g: &SignedCompleteGraph, psi: QuantumState, steps: u64) -> Result<QuantumState> {
    let mut walk = Walk::new(g, psi)?;
    walk.advance(steps);
    Ok(walk.into_state())
}

/// `FP(t)` for `t = 0..=t_max`, plus the spectral `t_f` when it exists.
#[derive(Debug, Clone, Serialize)]
pub struct WalkSeries {
    pub t_max: u64,
    pub fp: Vec<f64>,
    pub t_f: Option<u64>,
    /// `FP(t_f)`, present when `t_f ≤ t_max`.
    pub fp_at_tf: Option<f64>,
}

impl WalkSeries {
    /// Largest `FP(t)` over `t ∈ [from, to]` (clamped) and the step attaining it.
    pub fn max_in_window(&self, from: u64, to: u64) -> Option<(u64, f64)> {
        let to = to.min(self.t_max);
        (from..=to)
            .map(|t| (t, self.fp[t as usize]))
            .max_by(|a, b| a.1.total_cmp(&b.1))
    }
}

/// Exact sequential series from `j`. A degenerate spectrum leaves the `t_f`
/// fields empty but still produces the series.
pub fn run_series(g: &SignedCompleteGraph, t_max: u64) -> Result<WalkSeries> {
    let summary = SpectralSummary::analyze(&DiscriminantMatrix::new(g))?;
    run_series_with(g, t_max, &summary)
}

pub fn run_series_with(
    g: &SignedCompleteGraph,
    t_max: u64,
    summary: &SpectralSummary,
) -> Result<WalkSeries> {
    let mut walk = Walk::new(g, initial_state(g))?;
    let mut fp = Vec::with_capacity(t_max as usize + 1);
    fp.push(walk.finding_probability());
    for _ in 0..t_max {
        walk.step();
        fp.push(walk.finding_probability());
    }
    let t_f = quantum_time(summary).ok();
    let fp_at_tf = t_f.and_then(|t| fp.get(t as usize).copied());
    Ok(WalkSeries {
        t_max,
        fp,
        t_f,
        fp_at_tf,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub t_f: u64,
    pub lambda_max: f64,
    pub theta_max: f64,
    /// `‖U^{t_f}(iβ₋) − (−β₊)‖²`.
    pub beta_transfer: f64,
    /// `‖iβ₋ − j‖²`.
    pub beta_minus_distance: f64,
    /// `‖(−β₊)|_{A(Γ)}‖²`.
    pub beta_plus_mass: f64,
    /// `FP(t_f)` from the exact evolution.
    pub fp_at_tf: f64,
    pub hypotheses: Hypotheses,
    pub checks: Vec<BoundEntry>,
}

impl Diagnostics {
    pub fn all_applicable_pass(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }
}

pub fn asymptotic_diagnostics(g: &SignedCompleteGraph) -> Result<Diagnostics> {
    let summary = spectral::principal_pair(&DiscriminantMatrix::new(g))?;
    asymptotic_diagnostics_with(g, &summary)
}

pub fn asymptotic_diagnostics_with(
    g: &SignedCompleteGraph,
    summary: &SpectralSummary,
) -> Result<Diagnostics> {
    let t_f = quantum_time(summary)?;
    let lifted = spectral::lift_eigenvectors(g, summary)?;
    let i = Complex64::i();
    let i_beta_minus = lifted.beta_minus.scaled(i);
    let neg_beta_plus = lifted.beta_plus.scaled(Complex64::new(-1.0, 0.0));

    let transported = evolve(g, i_beta_minus.clone(), t_f)?;
    let beta_transfer = transported.distance_sqr(&neg_beta_plus);
    let beta_minus_distance = i_beta_minus.distance_sqr(&initial_state(g));
    let beta_plus_mass = finding_probability(g, &neg_beta_plus)?;
    let fp_at_tf = finding_probability(g, &evolve(g, initial_state(g), t_f)?)?;

    let h = Hypotheses::for_graph(g);
    let (n, e, v) = (g.n(), g.marked_edge_count(), g.gamma_order());
    let gated = (bounds::RATIO_66, h.ratio_condition && h.sixty_six);
    let checks = vec![
        BoundEntry::new(
            "beta_close",
            beta_transfer,
            Relation::Le,
            closed_form::beta_close(n, e),
            (bounds::NONDEGENERATE, true),
        ),
        BoundEntry::new(
            "beta_close.remark",
            beta_transfer,
            Relation::Le,
            4.0 * (1.0 - summary.lambda_max),
            (bounds::NONDEGENERATE, true),
        ),
        BoundEntry::new(
            "beta_minus_close",
            beta_minus_distance,
            Relation::Le,
            closed_form::beta_minus_close(n, e, v),
            (bounds::TWO_V, h.two_v_lt_n3),
        ),
        BoundEntry::new(
            "beta_plus_mass",
            beta_plus_mass,
            Relation::Ge,
            closed_form::beta_plus_mass(n, e, v),
            gated,
        ),
        BoundEntry::new(
            "fp_lower",
            fp_at_tf,
            Relation::Ge,
            closed_form::fp_lower(n, e, v),
            gated,
        ),
    ];
    Ok(Diagnostics {
        t_f,
        lambda_max: summary.lambda_max,
        theta_max: summary.theta_max,
        beta_transfer,
        beta_minus_distance,
        beta_plus_mass,
        fp_at_tf,
        hypotheses: h,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_amplitudes() {
        let g = SignedCompleteGraph::new(99, &[(0, 1)]).unwrap();
        let j = initial_state(&g);
        let a = 1.0 / 9900f64.sqrt();
        assert!(j
            .amplitudes()
            .iter()
            .all(|z| (z.re - a).abs() < 1e-16 && z.im == 0.0));
        assert!((finding_probability(&g, &j).unwrap() - 2.0 / 9900.0).abs() < 1e-15);
    }

    #[test]
    fn initial_fp_examples() {
        let g = SignedCompleteGraph::new(99, &[(0, 1), (1, 2)]).unwrap();
        let fp = finding_probability(&g, &initial_state(&g)).unwrap();
        assert!((fp - 0.0004040404040).abs() < 1e-12);
        let g = SignedCompleteGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!((finding_probability(&g, &initial_state(&g)).unwrap() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn concentrated_states() {
        let g = SignedCompleteGraph::new(5, &[(0, 1)]).unwrap();
        let len = g.arc_table().len();
        let on = g.marked_arc_indices()[0];
        assert_eq!(
            finding_probability(&g, &QuantumState::basis(len, on)).unwrap(),
            1.0
        );
        let off = (0..len)
            .find(|i| !g.marked_arc_indices().contains(i))
            .unwrap();
        assert_eq!(
            finding_probability(&g, &QuantumState::basis(len, off)).unwrap(),
            0.0
        );
        assert!(matches!(
            finding_probability(&g, &QuantumState::basis(3, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn triangle_quantum_time() {
        let g = SignedCompleteGraph::new(2, &[(0, 1)]).unwrap();
        let s = spectral::principal_pair(&DiscriminantMatrix::new(&g)).unwrap();
        assert_eq!(quantum_time(&s).unwrap(), 1);
    }

    #[test]
    fn degenerate_series_still_runs() {
        let g = SignedCompleteGraph::new(2, &[(0, 1), (1, 2)]).unwrap();
        let series = run_series(&g, 5).unwrap();
        assert_eq!(series.fp.len(), 6);
        assert!(series.t_f.is_none() && series.fp_at_tf.is_none());
        assert!(matches!(
            asymptotic_diagnostics(&g),
            Err(Error::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn series_is_deterministic_and_normalized() {
        let g = SignedCompleteGraph::new(9, &[(3, 1), (1, 7)]).unwrap();
        let a = run_series(&g, 50).unwrap();
        let b = run_series(&g, 50).unwrap();
        assert_eq!(
            a.fp.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            b.fp.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
        );
        assert!(a.fp.iter().all(|&p| (0.0..=1.0).contains(&p)));
        assert!((a.fp[0] - 4.0 / 90.0).abs() < 1e-15);
    }

    #[test]
    fn norm_conserved_over_long_runs() {
        let g = SignedCompleteGraph::new(6, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let mut walk = Walk::new(&g, initial_state(&g)).unwrap();
        for _ in 0..10_000 {
            walk.step();
        }
        let norm: f64 = walk.amplitudes().iter().map(Complex64::norm_sqr).sum();
        assert!((norm - 1.0).abs() < 1e-10);
    }

    #[test]
    fn diagnostics_on_k100_p2() {
        let g = SignedCompleteGraph::new(99, &[(0, 1)]).unwrap();
        let d = asymptotic_diagnostics(&g).unwrap();
        assert_eq!(d.t_f, 55);
        assert!(d.all_applicable_pass(), "{:?}", d.checks);
        // Closed form of the iβ₋ bound for this instance.
        let bound = (12.0 + 8.0 * 2f64.sqrt()) / (100.0 * 98.0);
        assert!(d.beta_minus_distance <= bound);
        assert!(d.beta_transfer <= 16.0 / 9900.0);
    }
}
