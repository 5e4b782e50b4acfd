//! Finding-probability series for paths marked in K_100, checked row by row
//! against the published data (row `r` holds the value after `r − 1` steps).

use signed_search::{run_series, SubgraphDescriptor};

fn fixture(text: &str) -> Vec<f64> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let mut cols = line.split_whitespace();
            let row: usize = cols.next().unwrap().parse().unwrap();
            assert_eq!(row, i + 1);
            cols.next().unwrap().parse().unwrap()
        })
        .collect()
}

fn check(k: usize, text: &str, expected_t_f: u64) {
    let data = fixture(text);
    assert_eq!(data.len(), 100);
    let g = SubgraphDescriptor::Path { k }.instantiate(99).unwrap();
    let series = run_series(&g, 100).unwrap();
    assert_eq!(series.t_f, Some(expected_t_f));
    for (step, (&want, &got)) in data.iter().zip(&series.fp).enumerate() {
        // Ten significant digits in the data.
        let tol = 1e-9 * want.max(1e-3);
        assert!(
            (got - want).abs() <= tol,
            "P{} step {step}: {got} vs {want}",
            k + 1
        );
    }
}

#[test]
fn path2() {
    check(1, include_str!("fixtures/k100_path2.dat"), 55);
}

#[test]
fn path3() {
    check(2, include_str!("fixtures/k100_path3.dat"), 39);
}

#[test]
fn path4() {
    check(3, include_str!("fixtures/k100_path4.dat"), 32);
}

#[test]
fn initial_value_is_marked_fraction() {
    for k in 1..=3 {
        let g = SubgraphDescriptor::Path { k }.instantiate(99).unwrap();
        let fp0 = run_series(&g, 0).unwrap().fp[0];
        assert!((fp0 - 2.0 * k as f64 / 9900.0).abs() < 1e-16);
    }
}
