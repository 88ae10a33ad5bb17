#![no_main]

use cil::ideal::{IdealJson, MonomialIdeal};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = serde_json::from_slice::<IdealJson>(data) else {
        return;
    };
    if parsed.gens.len() > 256 {
        return;
    }
    let Ok(ideal) = MonomialIdeal::try_from(parsed) else {
        return;
    };
    // Canonicalization is idempotent through the wire format.
    let json = serde_json::to_string(&IdealJson::from(&ideal)).unwrap();
    let again: MonomialIdeal = serde_json::from_str::<IdealJson>(&json)
        .unwrap()
        .try_into()
        .unwrap();
    assert_eq!(again, ideal);

    // Minimal transversal families are antichains, so the dual stays small
    // for bounded n; the involution must hold. The generator cap keeps
    // worst-case fold costs out of the fuzzing hot path.
    if ideal.n() <= 10 && ideal.num_generators() <= 32 && !ideal.is_zero() && !ideal.is_unit() {
        let dual = ideal.alexander_dual().unwrap();
        assert_eq!(dual.alexander_dual().unwrap(), ideal);
    }
});
