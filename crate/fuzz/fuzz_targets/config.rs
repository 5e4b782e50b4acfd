#![no_main]
use libfuzzer_sys::fuzz_target;
use signed_search_cli::ExperimentConfig;

fuzz_target!(|data: &str| {
    if let Ok(config) = ExperimentConfig::from_json(data) {
        let again = ExperimentConfig::from_json(&config.to_json()).expect("round trip");
        assert_eq!(again, config);
    }
});
