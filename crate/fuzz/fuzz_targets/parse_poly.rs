#![no_main]

use libfuzzer_sys::fuzz_target;
use realrad::arith::{parse_poly_quadratic, parse_poly_rational, QuadraticField};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_poly_rational(s) {
        // printing and reparsing must give the same polynomial
        let again = parse_poly_rational(&f.to_string()).expect("reparse");
        assert_eq!(f, again);
    }
    let k = QuadraticField::new(2).unwrap();
    if let Ok(f) = parse_poly_quadratic(s, k) {
        let again = parse_poly_quadratic(&f.to_string(), k).expect("reparse");
        assert_eq!(f, again);
    }
});
