//! Quantum-walk search for the edges of a marked subgraph Γ of the complete
//! graph `K_(n+1)`, driven by a sign function on arcs, next to its classical
//! counterpart: an isotropic random walk on the line graph.
//!
//! The pipeline is
//! [`SignedCompleteGraph`] → [`DiscriminantMatrix`] → [`SpectralSummary`]
//! → [`run_series`] / [`quantum_time`] on the quantum side, and
//! [`LineTransition`] → [`hitting_time`] on the classical side.
//! [`bounds::verify_all`] checks the spectral inequalities that tie the two
//! together on a concrete instance.
//!
//! ```
//! use signed_search::{quantum_time, run_series, DiscriminantMatrix, SignedCompleteGraph, SpectralSummary};
//!
//! let g = SignedCompleteGraph::new(99, &[(0, 1)])?;
//! let summary = SpectralSummary::analyze(&DiscriminantMatrix::new(&g))?;
//! assert_eq!(quantum_time(&summary)?, 55);
//! let series = run_series(&g, 60)?;
//! assert!(series.fp[55] > 0.97);
//! # Ok::<(), signed_search::Error>(())
//! ```

pub mod bounds;
pub mod classical_search;
pub mod descriptor;
mod error;
pub mod formats;
pub mod linalg;
pub mod operators;
pub mod quantum_search;
pub mod signed_graph;
pub mod spectral;

pub use bounds::{verify_all, BoundEntry, BoundLedger, FailureRecord, Hypotheses, Relation};
pub use classical_search::{hitting_time, mc_hitting_time, HittingTimeResult, McEstimate};
pub use descriptor::SubgraphDescriptor;
pub use error::{Error, Result};
pub use operators::{apply_u, DiscriminantMatrix, LineTransition};
pub use quantum_search::{
    finding_probability, initial_state, quantum_time, run_series, QuantumState, WalkSeries,
};
pub use signed_graph::{
    Arc, ArcTable, ComplementGraph, Edge, SignOrientation, SignedCompleteGraph,
};
pub use spectral::{principal_pair, SpectralSummary};
