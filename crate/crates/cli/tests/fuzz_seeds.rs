//! Replays the checked-in fuzz corpus through the same checks as the fuzz
//! targets, so stable toolchains exercise them too.

use std::path::PathBuf;

use signed_search::formats::{parse_series_csv, write_series_csv};
use signed_search::SubgraphDescriptor;
use signed_search_cli::ExperimentConfig;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = std::fs::read_to_string(&path).unwrap();
            (path, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn descriptor_seeds() {
    let mut accepted = 0;
    for (path, text) in seeds("descriptor") {
        let d =
            SubgraphDescriptor::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if d.instantiate(16).is_ok() {
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn series_seeds() {
    for (_, text) in seeds("series_csv") {
        if let Ok(fp) = parse_series_csv(&text) {
            let again = parse_series_csv(&write_series_csv(&fp)).unwrap();
            assert_eq!(fp, again);
        }
    }
}

#[test]
fn config_seeds() {
    for (path, text) in seeds("config") {
        let config = ExperimentConfig::from_json(&text)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(
            ExperimentConfig::from_json(&config.to_json()).unwrap(),
            config
        );
    }
}

#[test]
fn hostile_inputs_are_errors() {
    for text in [
        r#"{"kind":"complete_bipartite","a":18446744073709551615,"b":2}"#,
        r#"{"kind":"path","k":4000000000}"#,
        r#"{"kind":"edges","edges":[[0,18446744073709551615]]}"#,
    ] {
        let d = SubgraphDescriptor::parse(text).unwrap();
        assert!(d.instantiate(16).is_err(), "{text}");
    }
    assert!(ExperimentConfig::from_json(
        r#"{"n":18446744073709551615,"subgraph":{"kind":"path","k":1}}"#
    )
    .is_err());
    assert!(parse_series_csv("t,probability\n0,1e400\n").is_err());
}
