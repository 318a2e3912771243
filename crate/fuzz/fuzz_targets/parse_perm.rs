#![no_main]

use libfuzzer_sys::fuzz_target;
use realrad::group::Perm;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = Perm::parse_auto(s) {
        assert!(p.then(&p.inverse()).is_identity());
        let _ = p.to_string();
    }
    let _ = Perm::parse(s, 12);
});
