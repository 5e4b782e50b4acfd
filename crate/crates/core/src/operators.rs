//! Vertex-space matrices `T_Γ`, `P_Γ`, `Q_Γ` and the arc-space walk operator
//! `U_σ = S(2 d*_σ d_σ − I)`.
//!
//! Every vertex of `K_(n+1)` has degree `n`, so the general-graph weights
//! `1/sqrt(deg u · deg v)` collapse to `1/n` and the coin weights to
//! `1/sqrt(n)`. An extension to other host graphs would have to restore the
//! per-vertex degrees in [`d_sigma_apply`], [`apply_u_into`] and
//! [`DiscriminantMatrix::new`].

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quantum_search::QuantumState;
use crate::signed_graph::{ComplementGraph, SignedCompleteGraph};

/// Largest `n` for which [`build_u_dense`] will allocate.
pub const DENSE_U_MAX_N: usize = 40;

/// Largest `|E(Δ)|` for which [`LineTransition::dense`] will allocate.
pub const DENSE_P_MAX_EDGES: usize = 3000;

/// `T_Γ = T_σ = d_σ S d*_σ`, indexed canonically.
#[derive(Debug, Clone)]
pub struct DiscriminantMatrix {
    matrix: DMatrix<f64>,
    s: usize,
    t: usize,
}

impl DiscriminantMatrix {
    pub fn new(g: &SignedCompleteGraph) -> Self {
        let size = g.order();
        let w = 1.0 / g.n() as f64;
        let matrix = DMatrix::from_fn(size, size, |u, v| {
            if u == v {
                0.0
            } else if g.is_marked(u, v) {
                -w
            } else {
                w
            }
        });
        DiscriminantMatrix {
            matrix,
            s: g.gamma_order(),
            t: g.rest_order(),
        }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.matrix
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn order(&self) -> usize {
        self.matrix.nrows()
    }
}

/// The classical walk operator `P_Γ = A(L(Δ)) / (2(n−1))` on `E(Δ)`, kept
/// matrix-free, together with its vertex-space companion
/// `Q_Γ = (N Nᵀ − 2I) / (2(n−1))`.
#[derive(Debug, Clone)]
pub struct LineTransition {
    n: usize,
    complement: ComplementGraph,
    /// `2(n−1)·Q_Γ`, exact integers.
    q_scaled: DMatrix<i64>,
}

impl LineTransition {
    pub fn new(g: &SignedCompleteGraph) -> Result<Self> {
        let complement = ComplementGraph::new(g);
        if complement.edge_count() == 0 {
            return Err(Error::EmptyComplement);
        }
        let n = g.n();
        let s = g.gamma_order();
        let deg = g.gamma_degrees();
        let ni = n as i64;
        // [[J_s + (n−3)I_s − A(Γ) − D(Γ), J], [J, J_t + (n−3)I_t]]
        let q_scaled = DMatrix::from_fn(g.order(), g.order(), |u, v| {
            let mut x = 1;
            if u == v {
                x += ni - 3;
                if u < s {
                    x -= deg[u] as i64;
                }
            } else if g.is_marked(u, v) {
                x -= 1;
            }
            x
        });
        let gram = complement.adjacency() + complement.degree_matrix();
        assert_eq!(
            &q_scaled + DMatrix::<i64>::identity(g.order(), g.order()) * 2,
            gram,
            "block form of Q disagrees with the incidence Gram matrix"
        );
        Ok(LineTransition {
            n,
            complement,
            q_scaled,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complement(&self) -> &ComplementGraph {
        &self.complement
    }

    pub fn dim(&self) -> usize {
        self.complement.edge_count()
    }

    /// The common nonzero weight `1 / (2(n−1))`.
    pub fn weight(&self) -> f64 {
        1.0 / (2.0 * (self.n as f64 - 1.0))
    }

    /// The eigenvalue `−1/(n−1)` that separates the spectra of P and Q.
    pub fn kernel_eigenvalue(&self) -> f64 {
        -1.0 / (self.n as f64 - 1.0)
    }

    /// `out = P_Γ w` in `O(|E(Δ)|)`.
    pub fn apply(&self, w: &[f64], out: &mut [f64]) {
        let edges = self.complement.edges();
        let mut at_vertex = vec![0.0; self.n + 1];
        for (e, &x) in edges.iter().zip(w) {
            at_vertex[e.u] += x;
            at_vertex[e.v] += x;
        }
        let c = self.weight();
        for ((e, &x), y) in edges.iter().zip(w).zip(out.iter_mut()) {
            *y = c * (at_vertex[e.u] + at_vertex[e.v] - 2.0 * x);
        }
    }

    /// `out = (I − P_Γ) w`, evaluated as `μ·(I − P)1 + (I − P)(w − μ1)` with
    /// `μ` the mean of `w`. Near the solution of the hitting-time system `w`
    /// is almost constant and `P w ≈ w`, so the direct difference loses most
    /// of its digits; `(I − P)1 = (2n − deg u − deg v)/(2(n−1))` is exact.
    pub fn apply_defect(&self, w: &[f64], out: &mut [f64]) {
        let mean = w.iter().sum::<f64>() / w.len() as f64;
        let d: Vec<f64> = w.iter().map(|x| x - mean).collect();
        self.apply(&d, out);
        let deg = self.complement.degrees();
        let c = self.weight();
        let two_n = 2 * self.n;
        for ((e, &x), y) in self.complement.edges().iter().zip(&d).zip(out.iter_mut()) {
            let row = (two_n - deg[e.u] - deg[e.v]) as f64 * c;
            *y = x - *y + mean * row;
        }
    }

    /// `out = Nᵀ u`: lifts a vertex vector to `E(Δ)`.
    pub fn lift(&self, u: &[f64]) -> Vec<f64> {
        self.complement
            .edges()
            .iter()
            .map(|e| u[e.u] + u[e.v])
            .collect()
    }

    /// Dense `P_Γ`. Only for small complements.
    pub fn dense(&self) -> Result<DMatrix<f64>> {
        let m = self.dim();
        if m > DENSE_P_MAX_EDGES {
            return Err(Error::TooLarge {
                n: self.n,
                max: DENSE_P_MAX_EDGES,
            });
        }
        let c = self.weight();
        let mut p = DMatrix::zeros(m, m);
        for k in 0..m {
            for f in self.complement.line_neighbors(k) {
                p[(k, f)] = c;
            }
        }
        Ok(p)
    }

    /// `2(n−1)·Q_Γ` with exact integer entries.
    pub fn q_scaled(&self) -> &DMatrix<i64> {
        &self.q_scaled
    }

    pub fn q(&self) -> DMatrix<f64> {
        let c = self.weight();
        self.q_scaled.map(|x| x as f64 * c)
    }

    /// `A(L(Δ))` as adjacency lists, for walkers and sparse consumers.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.dim())
            .map(|k| self.complement.line_neighbors(k).collect())
            .collect()
    }
}

/// `m = d_σ ψ`: `m_v = Σ_{t(a)=v} σ(a) ψ_a / sqrt(n)`.
pub fn d_sigma_apply(g: &SignedCompleteGraph, psi: &[Complex64]) -> Vec<Complex64> {
    let table = g.arc_table();
    let sigma = g.sigma_values();
    let mut m = vec![Complex64::new(0.0, 0.0); g.order()];
    for (i, &amp) in psi.iter().enumerate() {
        m[table.arc(i).terminus] += amp * sigma[i];
    }
    let scale = 1.0 / (g.n() as f64).sqrt();
    m.iter_mut().for_each(|x| *x *= scale);
    m
}

/// `d*_σ f`: `(d*_σ f)_a = σ(a) f_{t(a)} / sqrt(n)`.
pub fn d_sigma_adjoint_apply(g: &SignedCompleteGraph, f: &[f64]) -> Vec<f64> {
    let scale = 1.0 / (g.n() as f64).sqrt();
    g.arc_table()
        .arcs()
        .iter()
        .zip(g.sigma_values())
        .map(|(a, &s)| s * f[a.terminus] * scale)
        .collect()
}

/// `S x`: `(S x)_a = x_{a⁻¹}`.
pub fn swap_apply<T: Copy>(g: &SignedCompleteGraph, x: &[T]) -> Vec<T> {
    g.arc_table()
        .inverse_indices()
        .iter()
        .map(|&j| x[j])
        .collect()
}

/// `out = U_σ ψ` without allocating; `m` is vertex-sized scratch.
///
/// `(U_σ ψ)_a = (2/sqrt(n))·σ(a⁻¹)·m_{o(a)} − ψ_{a⁻¹}` with `m = d_σ ψ`.
pub fn apply_u_into(
    g: &SignedCompleteGraph,
    psi: &[Complex64],
    out: &mut [Complex64],
    m: &mut [Complex64],
) {
    let n = g.n();
    let table = g.arc_table();
    let sigma = g.sigma_values();
    let inverse = table.inverse_indices();
    m.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
    for origin in 0..=n {
        for (i, terminus) in table.outgoing(origin).zip((0..=n).filter(|&t| t != origin)) {
            m[terminus] += psi[i] * sigma[i];
        }
    }
    // 2/sqrt(n) from U times 1/sqrt(n) from d_σ.
    let c = 2.0 / n as f64;
    for (origin, &mv) in m.iter().enumerate() {
        let mo = mv * c;
        for i in table.outgoing(origin) {
            let j = inverse[i];
            out[i] = mo * sigma[j] - psi[j];
        }
    }
}

/// `U_σ ψ`.
pub fn apply_u(g: &SignedCompleteGraph, psi: &QuantumState) -> Result<QuantumState> {
    let len = g.arc_table().len();
    if psi.len() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: psi.len(),
        });
    }
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    let mut m = vec![Complex64::new(0.0, 0.0); g.order()];
    apply_u_into(g, psi.amplitudes(), &mut out, &mut m);
    Ok(QuantumState::from_amplitudes(out))
}

fn dense_guard(g: &SignedCompleteGraph) -> Result<()> {
    if g.n() > DENSE_U_MAX_N {
        return Err(Error::TooLarge {
            n: g.n(),
            max: DENSE_U_MAX_N,
        });
    }
    Ok(())
}

/// Dense `U_σ` from the entrywise formula
/// `2σ(a⁻¹)σ(b)/sqrt(deg o(a)·deg t(b)) − δ_{a⁻¹,b}` for `t(b) = o(a)`.
pub fn build_u_dense(g: &SignedCompleteGraph) -> Result<DMatrix<f64>> {
    dense_guard(g)?;
    let table = g.arc_table();
    let len = table.len();
    let n = g.n();
    let mut u = DMatrix::zeros(len, len);
    for (ia, a) in table.arcs().iter().enumerate() {
        let inv = table.inverse_index(ia);
        let s_inv = g.sigma_at(inv);
        for x in (0..=n).filter(|&x| x != a.origin) {
            let ib = table.index(x, a.origin)?;
            let delta = if ib == inv { 1.0 } else { 0.0 };
            u[(ia, ib)] = 2.0 * s_inv * g.sigma_at(ib) / n as f64 - delta;
        }
    }
    Ok(u)
}

/// Dense `d_σ`, rows indexed by vertices and columns by arcs.
pub fn d_sigma_dense(g: &SignedCompleteGraph) -> Result<DMatrix<f64>> {
    dense_guard(g)?;
    let table = g.arc_table();
    let scale = 1.0 / (g.n() as f64).sqrt();
    let mut d = DMatrix::zeros(g.order(), table.len());
    for (i, a) in table.arcs().iter().enumerate() {
        d[(a.terminus, i)] = g.sigma_at(i) * scale;
    }
    Ok(d)
}

/// Dense arc-reversal `S`.
pub fn swap_dense(g: &SignedCompleteGraph) -> Result<DMatrix<f64>> {
    dense_guard(g)?;
    let table = g.arc_table();
    let mut s = DMatrix::zeros(table.len(), table.len());
    for i in 0..table.len() {
        s[(i, table.inverse_index(i))] = 1.0;
    }
    Ok(s)
}
