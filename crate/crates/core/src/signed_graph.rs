//! The host complete graph `K_(n+1)`, its symmetric arcs, the sign functions
//! on arcs and edges, and the complement of the marked subgraph.
//!
//! Vertices carry two labelings. *External* labels are whatever the caller
//! used to describe the marked edges. *Canonical* indices reorder the vertex
//! set so the endpoints of the marked subgraph come first (in the order they
//! first appear in the input), followed by the remaining vertices in
//! ascending order. Every matrix in this crate is indexed canonically, which
//! makes the block forms `[[Γ-block, J], [J, rest]]` hold literally.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// An unordered vertex pair `{u, v}`, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Does not reject loops.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// An ordered pair `(origin, terminus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

impl Arc {
    pub fn new(origin: usize, terminus: usize) -> Self {
        Arc { origin, terminus }
    }

    pub fn inverse(self) -> Self {
        Arc {
            origin: self.terminus,
            terminus: self.origin,
        }
    }
}

/// All `n(n+1)` symmetric arcs of `K_(n+1)`, ordered lexicographically by
/// `(origin, terminus)`.
#[derive(Debug, Clone)]
pub struct ArcTable {
    n: usize,
    arcs: Vec<Arc>,
    inverse: Vec<usize>,
}

impl ArcTable {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        let mut arcs = Vec::with_capacity(n * (n + 1));
        for origin in 0..=n {
            for terminus in (0..=n).filter(|&t| t != origin) {
                arcs.push(Arc { origin, terminus });
            }
        }
        let inverse = arcs
            .iter()
            .map(|a| Self::index_unchecked(n, a.terminus, a.origin))
            .collect();
        Ok(ArcTable { n, arcs, inverse })
    }

    #[inline]
    fn index_unchecked(n: usize, origin: usize, terminus: usize) -> usize {
        origin * n
            + if terminus < origin {
                terminus
            } else {
                terminus - 1
            }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    /// Index of `(origin, terminus)` in O(1).
    pub fn index(&self, origin: usize, terminus: usize) -> Result<usize> {
        if origin > self.n || terminus > self.n || origin == terminus {
            return Err(Error::InvalidArc {
                origin,
                terminus,
                n: self.n,
            });
        }
        Ok(Self::index_unchecked(self.n, origin, terminus))
    }

    /// Index of the inverse arc.
    #[inline]
    pub fn inverse_index(&self, index: usize) -> usize {
        self.inverse[index]
    }

    pub fn inverse_indices(&self) -> &[usize] {
        &self.inverse
    }

    /// Indices of all arcs with the given origin, as a contiguous range.
    pub fn outgoing(&self, origin: usize) -> std::ops::Range<usize> {
        origin * self.n..(origin + 1) * self.n
    }
}

/// Which arc of each marked edge carries `σ = -1`.
///
/// `Forward` puts it on the arc whose origin precedes its terminus in the
/// canonical order; `Reverse` on the other one. Every derived quantity is
/// invariant under this choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignOrientation {
    #[default]
    Forward,
    Reverse,
}

/// Largest supported `n`; the arc space of `K_(n+1)` has `n(n+1)` entries.
pub const MAX_N: usize = 2048;

/// A complete graph `K_(n+1)` with a sign function whose marked edges form
/// the subgraph Γ. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SignedCompleteGraph {
    n: usize,
    /// Marked edges in external labels, input order.
    external_edges: Vec<Edge>,
    /// Marked edges in canonical indices, sorted.
    marked_edges: Vec<Edge>,
    /// `canonical_order[i]` is the external label at canonical index `i`.
    canonical_order: Vec<usize>,
    /// Inverse of `canonical_order`.
    position: Vec<usize>,
    gamma_order: usize,
    orientation: SignOrientation,
    /// Row-major `(n+1)^2` marked-pair indicator, canonical indices.
    marked: Vec<bool>,
    arcs: ArcTable,
    sigma: Vec<f64>,
    marked_arcs: Vec<usize>,
}

impl SignedCompleteGraph {
    /// Builds an instance on `K_(n+1)` with the given marked edges
    /// (external labels in `0..=n`).
    pub fn new(n: usize, marked_edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_orientation(n, marked_edges, SignOrientation::Forward)
    }

    pub fn with_orientation(
        n: usize,
        marked_edges: &[(usize, usize)],
        orientation: SignOrientation,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        if marked_edges.is_empty() {
            return Err(Error::EmptySubgraph);
        }
        let size = n + 1;
        let mut seen = vec![false; size * size];
        let mut external_edges = Vec::with_capacity(marked_edges.len());
        for &(a, b) in marked_edges {
            for x in [a, b] {
                if x > n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { vertex: a });
            }
            let e = Edge::new(a, b);
            if std::mem::replace(&mut seen[e.u * size + e.v], true) {
                return Err(Error::DuplicateEdge { u: e.u, v: e.v });
            }
            external_edges.push(e);
        }

        // V(Γ) in order of first appearance, then the rest ascending.
        let mut in_gamma = vec![false; size];
        let mut canonical_order = Vec::with_capacity(size);
        for &(a, b) in marked_edges {
            for x in [a, b] {
                if !in_gamma[x] {
                    in_gamma[x] = true;
                    canonical_order.push(x);
                }
            }
        }
        let gamma_order = canonical_order.len();
        canonical_order.extend((0..size).filter(|&x| !in_gamma[x]));
        let mut position = vec![0; size];
        for (i, &label) in canonical_order.iter().enumerate() {
            position[label] = i;
        }

        let mut canonical: Vec<Edge> = external_edges
            .iter()
            .map(|e| Edge::new(position[e.u], position[e.v]))
            .collect();
        canonical.sort_unstable();

        let mut marked = vec![false; size * size];
        for e in &canonical {
            marked[e.u * size + e.v] = true;
            marked[e.v * size + e.u] = true;
        }

        let arcs = ArcTable::new(n)?;
        let mut sigma = vec![1.0; arcs.len()];
        let mut marked_arcs = Vec::with_capacity(2 * canonical.len());
        for e in &canonical {
            let forward = Self::arc_index(n, e.u, e.v);
            let backward = Self::arc_index(n, e.v, e.u);
            let negative = match orientation {
                SignOrientation::Forward => forward,
                SignOrientation::Reverse => backward,
            };
            sigma[negative] = -1.0;
            marked_arcs.push(forward);
            marked_arcs.push(backward);
        }
        marked_arcs.sort_unstable();

        Ok(SignedCompleteGraph {
            n,
            external_edges,
            marked_edges: canonical,
            canonical_order,
            position,
            gamma_order,
            orientation,
            marked,
            arcs,
            sigma,
            marked_arcs,
        })
    }

    #[inline]
    fn arc_index(n: usize, origin: usize, terminus: usize) -> usize {
        ArcTable::index_unchecked(n, origin, terminus)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices of the host graph, `n + 1`.
    pub fn order(&self) -> usize {
        self.n + 1
    }

    /// `|E(Γ)|`.
    pub fn marked_edge_count(&self) -> usize {
        self.marked_edges.len()
    }

    /// `s = |V(Γ)|`.
    pub fn gamma_order(&self) -> usize {
        self.gamma_order
    }

    /// `t = n + 1 - s`.
    pub fn rest_order(&self) -> usize {
        self.n + 1 - self.gamma_order
    }

    pub fn orientation(&self) -> SignOrientation {
        self.orientation
    }

    /// Marked edges in canonical indices, sorted.
    pub fn marked_edges(&self) -> &[Edge] {
        &self.marked_edges
    }

    /// Marked edges as the caller gave them.
    pub fn external_marked_edges(&self) -> &[Edge] {
        &self.external_edges
    }

    /// External labels of `V(Γ)`, in canonical order.
    pub fn gamma_vertices(&self) -> &[usize] {
        &self.canonical_order[..self.gamma_order]
    }

    pub fn canonical_order(&self) -> &[usize] {
        &self.canonical_order
    }

    pub fn canonical_index(&self, label: usize) -> Result<usize> {
        self.position
            .get(label)
            .copied()
            .ok_or(Error::InvalidVertex {
                vertex: label,
                n: self.n,
            })
    }

    pub fn external_label(&self, index: usize) -> usize {
        self.canonical_order[index]
    }

    pub fn arc_table(&self) -> &ArcTable {
        &self.arcs
    }

    /// `σ` per canonical arc index.
    pub fn sigma_values(&self) -> &[f64] {
        &self.sigma
    }

    #[inline]
    pub fn sigma_at(&self, arc_index: usize) -> f64 {
        self.sigma[arc_index]
    }

    /// Canonical arc indices of the `2|E(Γ)|` marked arcs, ascending.
    pub fn marked_arc_indices(&self) -> &[usize] {
        &self.marked_arcs
    }

    /// Whether the canonical pair `{u, v}` is marked.
    #[inline]
    pub fn is_marked(&self, u: usize, v: usize) -> bool {
        self.marked[u * (self.n + 1) + v]
    }

    fn canonical_arc(&self, arc: Arc) -> Result<(usize, usize)> {
        let invalid = Error::InvalidArc {
            origin: arc.origin,
            terminus: arc.terminus,
            n: self.n,
        };
        if arc.origin > self.n || arc.terminus > self.n || arc.origin == arc.terminus {
            return Err(invalid);
        }
        Ok((self.position[arc.origin], self.position[arc.terminus]))
    }

    /// `σ(a)` for an arc given in external labels.
    pub fn sigma(&self, arc: Arc) -> Result<i8> {
        let (o, t) = self.canonical_arc(arc)?;
        Ok(self.sigma[Self::arc_index(self.n, o, t)] as i8)
    }

    /// `τ(uv) = σ((u,v))·σ((v,u))` for an edge given in external labels.
    pub fn tau(&self, edge: Edge) -> Result<i8> {
        let (u, v) = (edge.u, edge.v);
        if u > self.n || v > self.n || u == v {
            return Err(Error::InvalidEdge { u, v, n: self.n });
        }
        Ok(self.sigma(Arc::new(u, v))? * self.sigma(Arc::new(v, u))?)
    }

    /// Degree of each canonical vertex inside Γ.
    pub fn gamma_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for e in &self.marked_edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// `A(Γ)` as an `s × s` matrix over the leading canonical indices.
    pub fn gamma_adjacency(&self) -> DMatrix<f64> {
        let s = self.gamma_order;
        let mut a = DMatrix::zeros(s, s);
        for e in &self.marked_edges {
            a[(e.u, e.v)] = 1.0;
            a[(e.v, e.u)] = 1.0;
        }
        a
    }

    /// Whether Γ is a complete bipartite graph on all `n + 1` vertices,
    /// decided combinatorially by 2-colouring.
    pub fn is_spanning_complete_bipartite(&self) -> bool {
        let size = self.n + 1;
        if self.gamma_order != size {
            return false;
        }
        let mut adjacency = vec![Vec::new(); size];
        for e in &self.marked_edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        let mut colour: Vec<Option<bool>> = vec![None; size];
        colour[0] = Some(false);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            let c = colour[x].expect("coloured before push");
            for &y in &adjacency[x] {
                match colour[y] {
                    None => {
                        colour[y] = Some(!c);
                        stack.push(y);
                    }
                    Some(cy) if cy == c => return false,
                    Some(_) => {}
                }
            }
        }
        if colour.iter().any(Option::is_none) {
            // Disconnected graphs with edges are never complete bipartite.
            return false;
        }
        let left = colour.iter().filter(|c| **c == Some(false)).count();
        let right = size - left;
        self.marked_edges.len() == left * right
    }
}

/// `Δ = K_(n+1) − E(Γ)`, kept in canonical indices.
#[derive(Debug, Clone)]
pub struct ComplementGraph {
    n: usize,
    edges: Vec<Edge>,
    degrees: Vec<usize>,
    /// Row-major `(n+1)^2` map from a vertex pair to its edge index.
    index: Vec<Option<u32>>,
}

impl ComplementGraph {
    pub fn new(g: &SignedCompleteGraph) -> Self {
        let n = g.n();
        let size = n + 1;
        let mut edges = Vec::with_capacity(n * size / 2 - g.marked_edge_count());
        let mut degrees = vec![0; size];
        let mut index = vec![None; size * size];
        for u in 0..size {
            for v in u + 1..size {
                if g.is_marked(u, v) {
                    continue;
                }
                let k = edges.len() as u32;
                index[u * size + v] = Some(k);
                index[v * size + u] = Some(k);
                degrees[u] += 1;
                degrees[v] += 1;
                edges.push(Edge { u, v });
            }
        }
        ComplementGraph {
            n,
            edges,
            degrees,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let size = self.n + 1;
        if u >= size || v >= size {
            return None;
        }
        self.index[u * size + v].map(|k| k as usize)
    }

    /// `N(Δ)`: rows are vertices, columns are edges of Δ.
    pub fn incidence(&self) -> DMatrix<i64> {
        let mut m = DMatrix::zeros(self.n + 1, self.edges.len());
        for (k, e) in self.edges.iter().enumerate() {
            m[(e.u, k)] = 1;
            m[(e.v, k)] = 1;
        }
        m
    }

    pub fn adjacency(&self) -> DMatrix<i64> {
        let size = self.n + 1;
        let mut m = DMatrix::zeros(size, size);
        for e in &self.edges {
            m[(e.u, e.v)] = 1;
            m[(e.v, e.u)] = 1;
        }
        m
    }

    pub fn degree_matrix(&self) -> DMatrix<i64> {
        let d: Vec<i64> = self.degrees.iter().map(|&d| d as i64).collect();
        DMatrix::from_diagonal(&nalgebra::DVector::from_vec(d))
    }

    /// Line-graph neighbours of edge `k`: the edges of Δ sharing an endpoint.
    pub fn line_neighbors(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        let e = self.edges[k];
        let size = self.n + 1;
        [e.u, e.v].into_iter().flat_map(move |x| {
            (0..size)
                .filter(move |&w| w != e.u && w != e.v)
                .filter_map(move |w| self.edge_index(x, w))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_k5() -> SignedCompleteGraph {
        SignedCompleteGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn example_instance_shape() {
        let g = example_k5();
        assert_eq!(g.gamma_order(), 4);
        assert_eq!(g.rest_order(), 1);
        assert_eq!(g.canonical_order(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn smallest_instance() {
        let g = SignedCompleteGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((g.gamma_order(), g.rest_order()), (2, 1));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SignedCompleteGraph::new(4, &[]),
            Err(Error::EmptySubgraph)
        ));
        assert!(matches!(
            SignedCompleteGraph::new(1, &[(0, 1)]),
            Err(Error::TooSmall { n: 1 })
        ));
        assert!(matches!(
            SignedCompleteGraph::new(3, &[(0, 4)]),
            Err(Error::InvalidVertex { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            SignedCompleteGraph::new(3, &[(2, 2)]),
            Err(Error::LoopEdge { vertex: 2 })
        ));
        assert!(matches!(
            SignedCompleteGraph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
    }

    #[test]
    fn sigma_on_example() {
        let g = example_k5();
        assert_eq!(g.sigma(Arc::new(0, 1)).unwrap(), -1);
        assert_eq!(g.sigma(Arc::new(1, 0)).unwrap(), 1);
        assert_eq!(g.sigma(Arc::new(2, 3)).unwrap(), -1);
        assert_eq!(g.sigma(Arc::new(3, 4)).unwrap(), 1);
        assert_eq!(g.sigma(Arc::new(4, 3)).unwrap(), 1);
        assert!(matches!(
            g.sigma(Arc::new(2, 2)),
            Err(Error::InvalidArc { .. })
        ));
    }

    #[test]
    fn tau_on_example() {
        let g = example_k5();
        assert_eq!(g.tau(Edge::new(1, 2)).unwrap(), -1);
        assert_eq!(g.tau(Edge::new(3, 4)).unwrap(), 1);
        assert!(matches!(
            g.tau(Edge::new(0, 7)),
            Err(Error::InvalidEdge { .. })
        ));
        let product: i8 = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| Edge::new(u, v)))
            .map(|e| g.tau(e).unwrap())
            .product();
        assert_eq!(product, -1);
    }

    #[test]
    fn canonical_order_moves_gamma_first() {
        let g = SignedCompleteGraph::new(5, &[(4, 2), (2, 5)]).unwrap();
        assert_eq!(g.canonical_order(), &[4, 2, 5, 0, 1, 3]);
        assert_eq!(g.gamma_vertices(), &[4, 2, 5]);
        // (4,2): 4 precedes 2 canonically, so σ((4,2)) = -1.
        assert_eq!(g.sigma(Arc::new(4, 2)).unwrap(), -1);
        assert_eq!(g.sigma(Arc::new(2, 4)).unwrap(), 1);
        assert_eq!(g.sigma(Arc::new(2, 5)).unwrap(), -1);
        assert_eq!(g.marked_edges(), &[Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn reverse_orientation_flips_sigma_not_tau() {
        let edges = [(0, 1), (1, 2)];
        let f = SignedCompleteGraph::new(3, &edges).unwrap();
        let r = SignedCompleteGraph::with_orientation(3, &edges, SignOrientation::Reverse).unwrap();
        assert_eq!(r.sigma(Arc::new(0, 1)).unwrap(), 1);
        assert_eq!(r.sigma(Arc::new(1, 0)).unwrap(), -1);
        for u in 0..4 {
            for v in u + 1..4 {
                let e = Edge::new(u, v);
                assert_eq!(f.tau(e).unwrap(), r.tau(e).unwrap());
            }
        }
    }

    #[test]
    fn arc_table_counts() {
        assert_eq!(ArcTable::new(2).unwrap().len(), 6);
        assert_eq!(ArcTable::new(4).unwrap().len(), 20);
        assert_eq!(ArcTable::new(99).unwrap().len(), 99 * 100);
        assert!(matches!(ArcTable::new(1), Err(Error::TooSmall { n: 1 })));
    }

    #[test]
    fn arc_table_is_lexicographic_with_involutive_inverse() {
        let table = ArcTable::new(6).unwrap();
        let arcs = table.arcs();
        assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        for (i, arc) in arcs.iter().enumerate() {
            let j = table.inverse_index(i);
            assert_ne!(i, j);
            assert_eq!(table.inverse_index(j), i);
            assert_eq!(table.arc(j).origin, table.arc(i).terminus);
            assert_eq!(table.index(arc.origin, arc.terminus).unwrap(), i);
        }
        for v in 0..=6 {
            assert!(table.outgoing(v).all(|i| table.arc(i).origin == v));
        }
    }

    #[test]
    fn complement_of_triangle_edge_is_path() {
        let g = SignedCompleteGraph::new(2, &[(0, 1)]).unwrap();
        let d = ComplementGraph::new(&g);
        assert_eq!(d.edges(), &[Edge::new(0, 2), Edge::new(1, 2)]);
        assert_eq!(d.degrees(), &[1, 1, 2]);
    }

    #[test]
    fn complement_of_example() {
        let g = example_k5();
        let d = ComplementGraph::new(&g);
        assert_eq!(d.edge_count(), 7);
        let gd = g.gamma_degrees();
        for (dv, gv) in d.degrees().iter().zip(&gd) {
            assert_eq!(*dv, 4 - gv);
        }
    }

    #[test]
    fn incidence_identity_is_exact() {
        for (n, edges) in [
            (4, vec![(0, 1), (1, 2), (2, 3)]),
            (6, vec![(3, 5), (0, 2)]),
            (3, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ] {
            let g = SignedCompleteGraph::new(n, &edges).unwrap();
            let d = ComplementGraph::new(&g);
            let nmat = d.incidence();
            let lhs = &nmat * nmat.transpose();
            assert_eq!(lhs, d.adjacency() + d.degree_matrix());
        }
    }

    #[test]
    fn line_neighbours_share_an_endpoint() {
        let g = SignedCompleteGraph::new(5, &[(0, 1), (2, 3)]).unwrap();
        let d = ComplementGraph::new(&g);
        for k in 0..d.edge_count() {
            let e = d.edges()[k];
            let nb: Vec<_> = d.line_neighbors(k).collect();
            let expected = (0..d.edge_count())
                .filter(|&f| f != k && (d.edges()[f].contains(e.u) || d.edges()[f].contains(e.v)))
                .count();
            assert_eq!(nb.len(), expected);
            assert!(!nb.contains(&k));
        }
    }

    #[test]
    fn complete_bipartite_detection() {
        // K_{1,2} spanning K_3.
        assert!(SignedCompleteGraph::new(2, &[(0, 1), (1, 2)])
            .unwrap()
            .is_spanning_complete_bipartite());
        // Single edge in K_3 is not spanning.
        assert!(!SignedCompleteGraph::new(2, &[(0, 1)])
            .unwrap()
            .is_spanning_complete_bipartite());
        // C_4 = K_{2,2} spanning K_4.
        assert!(
            SignedCompleteGraph::new(3, &[(0, 1), (1, 2), (2, 3), (3, 0)])
                .unwrap()
                .is_spanning_complete_bipartite()
        );
        // P_4 spans K_4 and is bipartite but not complete bipartite.
        assert!(!SignedCompleteGraph::new(3, &[(0, 1), (1, 2), (2, 3)])
            .unwrap()
            .is_spanning_complete_bipartite());
        // Triangle is not bipartite.
        assert!(!SignedCompleteGraph::new(2, &[(0, 1), (1, 2), (0, 2)])
            .unwrap()
            .is_spanning_complete_bipartite());
        // Perfect matching on K_4 spans but is disconnected.
        assert!(!SignedCompleteGraph::new(3, &[(0, 1), (2, 3)])
            .unwrap()
            .is_spanning_complete_bipartite());
    }
}
