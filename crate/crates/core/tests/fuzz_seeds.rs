//! Replays the fuzz corpus seeds through the same checks the fuzz targets
//! make, so the seeds stay valid without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use realrad::arith::{parse_poly_quadratic, parse_poly_rational, QuadraticField};
use realrad::galois::{parse_unit_subgroup, GaloisDatum};
use realrad::group::Perm;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read(&p).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn polynomial_seeds() {
    let k = QuadraticField::new(2).unwrap();
    for (name, data) in seeds("parse_poly") {
        let s = std::str::from_utf8(&data).unwrap();
        let mut parsed = false;
        if let Ok(f) = parse_poly_rational(s) {
            assert_eq!(parse_poly_rational(&f.to_string()).unwrap(), f, "{name}");
            parsed = true;
        }
        if let Ok(f) = parse_poly_quadratic(s, k) {
            assert_eq!(
                parse_poly_quadratic(&f.to_string(), k).unwrap(),
                f,
                "{name}"
            );
            parsed = true;
        }
        assert!(parsed, "seed {name} does not parse");
    }
}

#[test]
fn permutation_seeds() {
    for (name, data) in seeds("parse_perm") {
        let s = std::str::from_utf8(&data).unwrap();
        let p = Perm::parse_auto(s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(
            Perm::parse(&p.to_string(), p.degree()).unwrap(),
            p,
            "{name}"
        );
    }
}

#[test]
fn datum_seeds() {
    for (name, data) in seeds("datum_json") {
        let s = std::str::from_utf8(&data).unwrap();
        let d = GaloisDatum::from_json_str(s).unwrap_or_else(|e| panic!("{name}: {e}"));
        let back = GaloisDatum::from_json(&d.to_json()).unwrap();
        assert_eq!(back.g(), d.g());
        assert_eq!(back.n(), d.n());
    }
}

#[test]
fn subgroup_spec_seeds() {
    for (name, data) in seeds("subgroup_spec") {
        let (&n, rest) = data.split_first().unwrap();
        let s = std::str::from_utf8(rest).unwrap();
        parse_unit_subgroup(u64::from(n % 64), s).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
