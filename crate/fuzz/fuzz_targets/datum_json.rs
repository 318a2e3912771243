#![no_main]

use libfuzzer_sys::fuzz_target;
use realrad::galois::GaloisDatum;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = GaloisDatum::from_json_str(s) {
        let back = GaloisDatum::from_json(&d.to_json()).expect("round trip");
        assert_eq!(back.g(), d.g());
        assert_eq!(back.n(), d.n());
    }
});
