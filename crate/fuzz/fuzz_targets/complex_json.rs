#![no_main]

use cil::complex::{stanley_reisner_complex, stanley_reisner_ideal, ComplexJson, SimplicialComplex};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = serde_json::from_slice::<ComplexJson>(data) else {
        return;
    };
    if parsed.facets.len() > 256 {
        return;
    }
    let Ok(complex) = SimplicialComplex::try_from(parsed) else {
        return;
    };
    let json = serde_json::to_string(&ComplexJson::from(&complex)).unwrap();
    let again: SimplicialComplex = serde_json::from_str::<ComplexJson>(&json)
        .unwrap()
        .try_into()
        .unwrap();
    assert_eq!(again, complex);

    if complex.n() <= 9 && !complex.is_void() {
        let ideal = stanley_reisner_ideal(&complex).unwrap();
        let back = stanley_reisner_complex(&ideal).unwrap();
        assert_eq!(back, complex);
    }
});
