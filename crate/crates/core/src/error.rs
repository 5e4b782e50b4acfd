use thiserror::Error;

use crate::bounds::FailureRecord;

/// Errors raised while building instances or running the numerical routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("host graph K_(n+1) needs n >= 2, got n = {n}")]
    TooSmall { n: usize },

    #[error("the marked subgraph has no edges")]
    EmptySubgraph,

    #[error("vertex {vertex} is outside 0..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },

    #[error("edge {{{u}, {v}}} listed more than once")]
    DuplicateEdge { u: usize, v: usize },

    #[error("({origin}, {terminus}) is not an arc of K_{}", .n + 1)]
    InvalidArc {
        origin: usize,
        terminus: usize,
        n: usize,
    },

    #[error("{{{u}, {v}}} is not an edge of K_{}", .n + 1)]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("every edge of the host graph is marked; the classical walk has no transient states")]
    EmptyComplement,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("n = {n} exceeds the supported limit of {max} for this operation")]
    TooLarge { n: usize, max: usize },

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("matrix is not orthogonal (max |UᵀU − I| = {defect:e})")]
    NotOrthogonal { defect: f64 },

    #[error("eigensolver did not converge")]
    NoConvergence,

    #[error(
        "degenerate spectrum: lambda_max(T) = {lambda_max} reaches 1, so theta_max = 0 and t_f is undefined \
         (the marked subgraph is a spanning complete bipartite graph)"
    )]
    DegenerateSpectrum { lambda_max: f64 },

    #[error("linear solver failed (relative residual {residual:e})")]
    SolverFailure { residual: f64 },

    #[error("trial {trial} exceeded the step cap of {cap}")]
    StepCapExceeded { trial: u64, cap: u64 },

    #[error("at least one Monte-Carlo trial is required")]
    ZeroTrials,

    #[error("invalid subgraph descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("malformed series data: {0}")]
    MalformedSeries(String),

    #[error("bound `{}` failed on n = {} with marked edges {:?}", .0.entry.name, .0.n, .0.marked_edges)]
    BoundViolation(Box<FailureRecord>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
