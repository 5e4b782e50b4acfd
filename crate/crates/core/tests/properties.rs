use std::collections::BTreeSet;

use nalgebra::DVector;
use num_complex::Complex64;
use proptest::prelude::*;
use signed_search::bounds::closed_form::holds;
use signed_search::formats::{parse_series_csv, write_series_csv};
use signed_search::operators::{apply_u, build_u_dense, DiscriminantMatrix};
use signed_search::spectral::SpectralSummary;
use signed_search::{
    ComplementGraph, Edge, QuantumState, Relation, SignOrientation, SignedCompleteGraph,
    SubgraphDescriptor,
};

/// `(n, edges)` with a non-empty simple edge set on `0..=n`.
fn instance(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2..=max_n).prop_flat_map(|n| {
        let pair = (0..=n, 0..=n).prop_filter("loop", |(u, v)| u != v);
        (Just(n), prop::collection::vec(pair, 1..=2 * n)).prop_map(|(n, pairs)| {
            let set: BTreeSet<(usize, usize)> = pairs
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            (n, set.into_iter().collect())
        })
    })
}

fn state(len: usize, seed: u64) -> QuantumState {
    // Cheap deterministic fill; the strategy supplies the seed.
    let mut x = seed | 1;
    let mut next = move || {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        (x >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };
    QuantumState::from_amplitudes((0..len).map(|_| Complex64::new(next(), next())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn walk_is_unitary(n in 2usize..=200, k in 1usize..=4, seed: u64) {
        let g = SubgraphDescriptor::Star { k: k.min(n) }.instantiate(n).unwrap();
        let psi = state(g.arc_table().len(), seed);
        let out = apply_u(&g, &psi).unwrap();
        prop_assert!((out.norm() - psi.norm()).abs() <= 1e-12 * psi.norm());
    }

    #[test]
    fn dense_and_matrix_free_agree((n, edges) in instance(10), seed: u64) {
        let g = SignedCompleteGraph::new(n, &edges).unwrap();
        let u = build_u_dense(&g).unwrap().map(|x| Complex64::new(x, 0.0));
        let psi = state(g.arc_table().len(), seed);
        let dense = u * DVector::from_column_slice(psi.amplitudes());
        let free = apply_u(&g, &psi).unwrap();
        for (a, b) in dense.iter().zip(free.amplitudes()) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn orientation_leaves_t_unchanged((n, edges) in instance(12)) {
        let fwd = SignedCompleteGraph::with_orientation(n, &edges, SignOrientation::Forward).unwrap();
        let rev = SignedCompleteGraph::with_orientation(n, &edges, SignOrientation::Reverse).unwrap();
        let (tf, tr) = (DiscriminantMatrix::new(&fwd), DiscriminantMatrix::new(&rev));
        prop_assert_eq!(tf.matrix(), tr.matrix());
        let (sf, sr) = (
            SpectralSummary::analyze(&tf).unwrap(),
            SpectralSummary::analyze(&tr).unwrap(),
        );
        prop_assert_eq!(sf.eigenvalues, sr.eigenvalues);
        for (a, b) in fwd.sigma_values().iter().zip(rev.sigma_values()) {
            prop_assert!(a.abs() == 1.0 && b.abs() == 1.0);
        }
    }

    #[test]
    fn tau_marks_exactly_gamma((n, edges) in instance(12)) {
        let g = SignedCompleteGraph::new(n, &edges).unwrap();
        let negative = (0..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| Edge::new(u, v)))
            .filter(|&e| g.tau(e).unwrap() == -1)
            .count();
        prop_assert_eq!(negative, edges.len());
        prop_assert_eq!(g.marked_arc_indices().len(), 2 * edges.len());
        let minus = g.sigma_values().iter().filter(|&&s| s == -1.0).count();
        prop_assert_eq!(minus, edges.len());
    }

    #[test]
    fn arc_involution(n in 2usize..=30) {
        let g = SignedCompleteGraph::new(n, &[(0, 1)]).unwrap();
        let arcs = g.arc_table();
        for i in 0..arcs.len() {
            let inv = arcs.inverse_index(i);
            prop_assert_eq!(arcs.inverse_index(inv), i);
            prop_assert_eq!(arcs.arc(inv).origin, arcs.arc(i).terminus);
            prop_assert_eq!(arcs.arc(inv).terminus, arcs.arc(i).origin);
        }
    }

    #[test]
    fn complement_incidence_identity((n, edges) in instance(12)) {
        let g = SignedCompleteGraph::new(n, &edges).unwrap();
        let delta = ComplementGraph::new(&g);
        let nm = delta.incidence();
        prop_assert_eq!(&nm * nm.transpose(), delta.adjacency() + delta.degree_matrix());
    }

    #[test]
    fn series_csv_round_trip(fp in prop::collection::vec(0.0f64..=1.0, 1..50)) {
        let back = parse_series_csv(&write_series_csv(&fp)).unwrap();
        prop_assert_eq!(back.len(), fp.len());
        for (a, b) in back.iter().zip(&fp) {
            prop_assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn descriptor_json_round_trip((_, edges) in instance(12)) {
        let d = SubgraphDescriptor::Edges { edges: edges.iter().map(|&(u, v)| [u, v]).collect() };
        let text = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(SubgraphDescriptor::parse(&text).unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn l1_against_l2(h in prop::collection::vec(-1e3f64..1e3, 1..=100)) {
        let m = h.len() as f64;
        let l1: f64 = h.iter().map(|x| x.abs()).sum();
        let l2sq: f64 = h.iter().map(|x| x * x).sum();
        prop_assert!(holds(l1 * l1, Relation::Le, m * l2sq));
    }

    #[test]
    fn bounded_l2_against_l1(
        n in 1usize..=500,
        unit in prop::collection::vec(0.0f64..=1.0, 1..=100),
    ) {
        let nf = n as f64;
        let h: Vec<f64> = unit.iter().map(|u| u * nf).collect();
        let l2sq: f64 = h.iter().map(|x| x * x).sum();
        prop_assert!(holds(l2sq, Relation::Le, nf * h.iter().sum::<f64>()));
    }
}
