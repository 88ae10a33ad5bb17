#![no_main]

use cil::homology::{BettiJson, BettiTable};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = serde_json::from_slice::<BettiJson>(data) else {
        return;
    };
    if parsed.entries.len() > 4096 {
        return;
    }
    let table = BettiTable::from(parsed);
    // reg/pd extraction and rendering must not panic; zero entries are
    // dropped so a second round trip is stable.
    if !table.is_empty() {
        let _ = table.reg_pd().unwrap();
        let _ = table.render_text();
    }
    let json = serde_json::to_string(&BettiJson::from(&table)).unwrap();
    let again = BettiTable::from(serde_json::from_str::<BettiJson>(&json).unwrap());
    assert_eq!(again, table);
});
