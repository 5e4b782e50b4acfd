//! Dense symmetric eigendecomposition and the small iterative kernels the
//! classical side needs. The dense solver is nalgebra's; everything here
//! only adapts it to descending order and this crate's error type.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Symmetry tolerance, relative to `max(1, max |M_ij|)`.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues in non-increasing order with matching orthonormal columns.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

impl SymmetricEigen {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, i: usize) -> DVector<f64> {
        self.vectors.column(i).into_owned()
    }
}

pub fn max_asymmetry(m: &DMatrix<f64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in i + 1..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

/// Symmetric eigendecomposition, eigenvalues sorted descending.
pub fn eigh(m: &DMatrix<f64>) -> Result<SymmetricEigen> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let scale = m.amax().max(1.0);
    let asymmetry = max_asymmetry(m);
    if asymmetry > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric { asymmetry });
    }
    let dim = m.nrows();
    let eig = m
        .clone()
        .try_symmetric_eigen(f64::EPSILON, 200 * dim.max(1))
        .ok_or(Error::NoConvergence)?;
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(dim, dim);
    for (k, &i) in order.iter().enumerate() {
        vectors.set_column(k, &eig.eigenvectors.column(i));
    }
    Ok(SymmetricEigen { values, vectors })
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Result of an iterative solve.
#[derive(Debug, Clone)]
pub struct IterativeSolution {
    pub x: Vec<f64>,
    /// `‖b − Ax‖ / ‖b‖`, recomputed from the final iterate.
    pub relative_residual: f64,
    pub iterations: usize,
}

/// Conjugate gradients for a symmetric positive-definite operator.
///
/// The recursively updated residual drifts from the true one on long runs,
/// so convergence is confirmed against `b − Ax` and the iteration restarts
/// from the current iterate (a few times at most) if that check fails.
pub fn conjugate_gradient<F>(
    apply: F,
    b: &[f64],
    rel_tol: f64,
    max_iter: usize,
) -> IterativeSolution
where
    F: Fn(&[f64], &mut [f64]),
{
    let dim = b.len();
    let b_norm = norm(b);
    let mut x = vec![0.0; dim];
    if b_norm == 0.0 {
        return IterativeSolution {
            x,
            relative_residual: 0.0,
            iterations: 0,
        };
    }
    let mut ap = vec![0.0; dim];
    let mut iterations = 0;
    let true_residual = |x: &[f64], ap: &mut [f64]| -> Vec<f64> {
        apply(x, ap);
        b.iter().zip(ap.iter()).map(|(bi, ai)| bi - ai).collect()
    };
    let mut r = b.to_vec();
    for _restart in 0..5 {
        let mut p = r.clone();
        let mut rr = dot(&r, &r);
        // Aim below the target so the true residual clears it.
        let target = 0.1 * rel_tol * b_norm;
        while iterations < max_iter && rr.sqrt() > target {
            apply(&p, &mut ap);
            let alpha = rr / dot(&p, &ap);
            for i in 0..dim {
                x[i] += alpha * p[i];
                r[i] -= alpha * ap[i];
            }
            let rr_next = dot(&r, &r);
            let beta = rr_next / rr;
            for i in 0..dim {
                p[i] = r[i] + beta * p[i];
            }
            rr = rr_next;
            iterations += 1;
        }
        r = true_residual(&x, &mut ap);
        if norm(&r) <= rel_tol * b_norm || iterations >= max_iter {
            break;
        }
    }
    IterativeSolution {
        relative_residual: norm(&r) / b_norm,
        x,
        iterations,
    }
}

/// Leading eigenpair of a symmetric operator by shifted power iteration.
#[derive(Debug, Clone)]
pub struct PowerResult {
    pub value: f64,
    pub vector: Vec<f64>,
    /// `‖Av − λv‖` at exit.
    pub residual: f64,
    pub iterations: usize,
}

/// Power iteration on `A + shift·I`. The shift must make `A + shift·I`
/// positive semidefinite so the top eigenvalue dominates in modulus.
pub fn power_iteration<F>(
    apply: F,
    start: Vec<f64>,
    shift: f64,
    tol: f64,
    max_iter: usize,
) -> PowerResult
where
    F: Fn(&[f64], &mut [f64]),
{
    let dim = start.len();
    let mut v = start;
    let n0 = norm(&v);
    v.iter_mut().for_each(|x| *x /= n0);
    let mut av = vec![0.0; dim];
    let mut value = 0.0;
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    while iterations < max_iter {
        apply(&v, &mut av);
        value = dot(&v, &av);
        residual = av
            .iter()
            .zip(&v)
            .map(|(a, x)| (a - value * x).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            break;
        }
        for i in 0..dim {
            av[i] += shift * v[i];
        }
        let nn = norm(&av);
        for i in 0..dim {
            v[i] = av[i] / nn;
        }
        iterations += 1;
    }
    PowerResult {
        value,
        vector: v,
        residual,
        iterations,
    }
}
