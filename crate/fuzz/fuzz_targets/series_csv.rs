#![no_main]
use libfuzzer_sys::fuzz_target;
use signed_search::formats::{parse_series_csv, write_series_csv};

fuzz_target!(|data: &str| {
    if let Ok(fp) = parse_series_csv(data) {
        // Anything accepted must survive a write/parse cycle unchanged.
        let again = parse_series_csv(&write_series_csv(&fp)).expect("re-parse");
        assert_eq!(
            fp.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            again.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
        );
    }
});
