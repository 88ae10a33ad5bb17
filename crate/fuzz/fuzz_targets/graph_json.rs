#![no_main]

use cil::graph::{Graph, GraphJson};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = serde_json::from_slice::<GraphJson>(data) else {
        return;
    };
    if parsed.edges.len() > 4096 {
        return;
    }
    let Ok(graph) = Graph::try_from(parsed) else {
        return;
    };
    assert_eq!(graph.complement().complement(), graph);
    // Accepted graphs reserialize to a canonical form that parses back.
    let json = serde_json::to_string(&GraphJson::from(&graph)).unwrap();
    let again: Graph = serde_json::from_str::<GraphJson>(&json)
        .unwrap()
        .try_into()
        .unwrap();
    assert_eq!(again, graph);
});
