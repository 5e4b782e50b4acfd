#![no_main]
use libfuzzer_sys::fuzz_target;
use signed_search::SubgraphDescriptor;

fuzz_target!(|data: &str| {
    if let Ok(d) = SubgraphDescriptor::parse(data) {
        // Sizes are validated against n before anything is generated, so
        // hostile generator parameters must come back as errors.
        let _ = d.instantiate(16);
        let _ = d.vertex_count();
    }
});
