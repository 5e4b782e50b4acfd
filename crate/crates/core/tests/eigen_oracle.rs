//! The sequential walk against `U^t = Q B^t Qᵀ`, where `B` is the real Schur
//! form of the dense operator. `U` is orthogonal, so `B` is block diagonal
//! with `1×1` blocks `±1` and `2×2` blocks carrying `e^{±iθ}`; each block is
//! powered through its eigenvalues.

use nalgebra::{DMatrix, DVector, Schur};
use num_complex::Complex64;
use signed_search::operators::build_u_dense;
use signed_search::quantum_search::{finding_probability, initial_state};
use signed_search::spectral::spectral_mapping_check;
use signed_search::{run_series, QuantumState, SignedCompleteGraph};

/// `B^t` for a `2×2` block with eigenvalues `λ ≠ λ̄`.
fn block_power(b: &DMatrix<f64>, step: u32) -> DMatrix<f64> {
    let (tr, det) = (
        b[(0, 0)] + b[(1, 1)],
        b[(0, 0)] * b[(1, 1)] - b[(0, 1)] * b[(1, 0)],
    );
    let lambda = Complex64::new(tr / 2.0, (det - tr * tr / 4.0).sqrt());
    let (l, lc) = (lambda.powu(step), lambda.conj().powu(step));
    let bc = b.map(|x| Complex64::new(x, 0.0));
    let id = DMatrix::<Complex64>::identity(2, 2);
    let p =
        ((&bc - &id * lambda.conj()) * l - (&bc - &id * lambda) * lc) / (lambda - lambda.conj());
    p.map(|z| z.re)
}

fn oracle_series(g: &SignedCompleteGraph, t_max: u32) -> Vec<f64> {
    let u = build_u_dense(g).unwrap();
    let dim = u.nrows();
    let (q, b) = Schur::new(u).unpack();
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < dim {
        let size = if i + 1 < dim && b[(i + 1, i)].abs() > 1e-12 {
            2
        } else {
            1
        };
        blocks.push((i, size));
        i += size;
    }
    let block_mass: f64 = blocks
        .iter()
        .map(|&(i, s)| b.view((i, i), (s, s)).iter().map(|x| x * x).sum::<f64>())
        .sum();
    let off = b.norm_squared() - block_mass;
    assert!(off < 1e-18, "off-block mass {off:e}");

    let psi0: Vec<f64> = initial_state(g).amplitudes().iter().map(|z| z.re).collect();
    let coeff = q.transpose() * DVector::from_vec(psi0);
    (0..=t_max)
        .map(|step| {
            let mut c = DVector::zeros(dim);
            for &(i, s) in &blocks {
                let part = coeff.rows(i, s);
                if s == 1 {
                    c[i] = b[(i, i)].powi(step as i32) * part[0];
                } else {
                    let bt = block_power(&b.view((i, i), (2, 2)).into_owned(), step);
                    c.rows_mut(i, 2).copy_from(&(bt * part));
                }
            }
            let psi = &q * c;
            let state = QuantumState::from_real(psi.as_slice());
            finding_probability(g, &state).unwrap()
        })
        .collect()
}

#[test]
fn sequential_matches_diagonalized_powers() {
    let cases: [(usize, &[(usize, usize)]); 4] = [
        (6, &[(0, 1)]),
        (7, &[(0, 1), (1, 2), (2, 3)]),
        (8, &[(0, 1), (2, 3)]),
        (8, &[(5, 1), (5, 2), (5, 7)]),
    ];
    for (n, edges) in cases {
        let g = SignedCompleteGraph::new(n, edges).unwrap();
        let oracle = oracle_series(&g, 60);
        let series = run_series(&g, 60).unwrap();
        for (step, (a, b)) in oracle.iter().zip(&series.fp).enumerate() {
            assert!(
                (a - b).abs() < 1e-8,
                "n={n} {edges:?} step {step}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn mapping_holds_on_examples() {
    for (n, edges) in [
        (4, vec![(0, 1), (1, 2), (2, 3)]),
        (5, vec![(0, 1), (2, 3), (4, 5)]),
        (6, vec![(0, 1), (0, 2), (0, 3), (1, 2)]),
    ] {
        let g = SignedCompleteGraph::new(n, &edges).unwrap();
        let report = spectral_mapping_check(&g).unwrap();
        assert!(report.passed, "n={n}: {:e}", report.max_distance);
        assert_eq!(
            report.matches.len() + 2 * report.excluded.len(),
            2 * (n + 1)
        );
    }
}
