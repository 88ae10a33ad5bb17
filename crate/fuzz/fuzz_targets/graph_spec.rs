#![no_main]

use cil::graph::GraphSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = text.parse::<GraphSpec>() else {
        return;
    };
    // file: specs are rejected by the pure builder; everything else must
    // either build cleanly or report a typed error.
    let Ok(graph) = spec.build() else {
        return;
    };
    assert_eq!(graph.complement().complement(), graph);
    if graph.n() <= 10 {
        assert_eq!(
            graph.enumerate_independent_sets(2),
            graph.complement().enumerate_cliques(2)
        );
    }
});
