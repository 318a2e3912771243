#![no_main]

use libfuzzer_sys::fuzz_target;
use realrad::galois::parse_unit_subgroup;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(s) = std::str::from_utf8(rest) else {
        return;
    };
    // keep n small: lookup by order enumerates subgroups
    let _ = parse_unit_subgroup(u64::from(n % 64), s);
});
