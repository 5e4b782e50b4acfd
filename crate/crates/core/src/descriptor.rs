//! JSON descriptors for the marked subgraph.
//!
//! ```json
//! {"kind": "path", "k": 3}
//! {"kind": "complete_bipartite", "a": 2, "b": 3}
//! {"kind": "edges", "edges": [[0, 1], [1, 2]]}
//! ```
//!
//! Generators place their vertices on labels `0, 1, 2, ...`; `k` counts edges
//! for `path`, `matching` and `star`, and vertices (= edges) for `cycle`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed_graph::{SignedCompleteGraph, MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SubgraphDescriptor {
    /// `P_(k+1)`: edges `{i, i+1}` for `i < k`.
    Path {
        k: usize,
    },
    /// `k` disjoint edges `{2i, 2i+1}`.
    Matching {
        k: usize,
    },
    /// `K_(1,k)` centred on vertex 0.
    Star {
        k: usize,
    },
    /// `C_k`, `k >= 3`.
    Cycle {
        k: usize,
    },
    /// `K_(a,b)` with sides `0..a` and `a..a+b`.
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Edges {
        edges: Vec<[usize; 2]>,
    },
}

impl SubgraphDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(e.to_string()))
    }

    /// The marked edge list in external labels.
    pub fn edges(&self) -> Result<Vec<(usize, usize)>> {
        let need = |what: &str, ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidDescriptor(what.to_owned()))
            }
        };
        Ok(match *self {
            SubgraphDescriptor::Path { k } => {
                need("path needs k >= 1", k >= 1)?;
                (0..k).map(|i| (i, i + 1)).collect()
            }
            SubgraphDescriptor::Matching { k } => {
                need("matching needs k >= 1", k >= 1)?;
                (0..k).map(|i| (2 * i, 2 * i + 1)).collect()
            }
            SubgraphDescriptor::Star { k } => {
                need("star needs k >= 1", k >= 1)?;
                (1..=k).map(|i| (0, i)).collect()
            }
            SubgraphDescriptor::Cycle { k } => {
                need("cycle needs k >= 3", k >= 3)?;
                (0..k).map(|i| (i, (i + 1) % k)).collect()
            }
            SubgraphDescriptor::CompleteBipartite { a, b } => {
                need("complete_bipartite needs a, b >= 1", a >= 1 && b >= 1)?;
                (0..a)
                    .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                    .collect()
            }
            SubgraphDescriptor::Edges { ref edges } => {
                need("edge list is empty", !edges.is_empty())?;
                edges.iter().map(|&[u, v]| (u, v)).collect()
            }
        })
    }

    /// Vertices a generator occupies (`0..count`); the largest label plus one
    /// for explicit lists. `None` on arithmetic overflow.
    pub fn vertex_count(&self) -> Option<usize> {
        match *self {
            SubgraphDescriptor::Path { k } | SubgraphDescriptor::Star { k } => k.checked_add(1),
            SubgraphDescriptor::Matching { k } => k.checked_mul(2),
            SubgraphDescriptor::Cycle { k } => Some(k),
            SubgraphDescriptor::CompleteBipartite { a, b } => a.checked_add(b),
            SubgraphDescriptor::Edges { ref edges } => edges
                .iter()
                .flat_map(|e| e.iter())
                .max()
                .and_then(|m| m.checked_add(1)),
        }
    }

    /// Builds `K_(n+1)` with this subgraph marked. Sizes are checked against
    /// `n` before any edge list is generated.
    pub fn instantiate(&self, n: usize) -> Result<SignedCompleteGraph> {
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        // Explicit lists are bounded by the input; the constructor reports
        // the offending label.
        if !matches!(self, SubgraphDescriptor::Edges { .. }) {
            match self.vertex_count() {
                Some(count) if count <= n + 1 => {}
                Some(count) => {
                    return Err(Error::InvalidDescriptor(format!(
                        "subgraph needs {count} vertices but K_{} has {}",
                        n + 1,
                        n + 1
                    )))
                }
                None => return Err(Error::InvalidDescriptor("subgraph size overflows".into())),
            }
        }
        SignedCompleteGraph::new(n, &self.edges()?)
    }
}
