//! Plain-text rendering of the reports. Every verdict field that appears
//! in the JSON output appears here too.

use std::fmt::Write;

use realrad::classify::{RootReport, SexticReport, TowerReport, Verdict};
use realrad::galois::{DatumJson, GaloisDatum, GaloisGroupReport};
use realrad::group::oracle::SweepReport;
use realrad::rre::RreVerdict;

fn root_line(out: &mut String, i: usize, r: &RootReport) {
    let _ = write!(
        out,
        "  root {} in {} (exactly [{}, {}]): {:?}",
        i + 1,
        r.interval.approx,
        r.interval.lo,
        r.interval.hi,
        r.status
    );
    if let Some(reason) = r.reason {
        let _ = write!(out, " ({reason:?}: {})", reason.describe());
    }
    out.push('\n');
    if let Some(note) = &r.note {
        let _ = writeln!(out, "    note: {note}");
    }
    if let Some(t) = &r.tower {
        for (i, s) in t.steps.iter().enumerate() {
            let _ = writeln!(out, "    r{} = ({})^(1/{})", i + 1, s.radicand, s.index);
        }
        let _ = writeln!(out, "    root = {}", t.root);
    }
}

pub fn verdict(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {}", v.polynomial);
    let _ = writeln!(out, "ground field: {}", v.ground_field);
    let _ = writeln!(out, "degree: {}", v.degree);
    let c = &v.certificates;
    match &c.irreducibility {
        Some(m) => {
            let _ = writeln!(out, "irreducible: {m}");
        }
        None => {
            let _ = writeln!(out, "irreducible: not certified");
        }
    }
    if let Some(d) = &c.discriminant {
        let _ = writeln!(out, "discriminant: {d}");
    }
    if let Some(g) = &c.galois_group {
        let _ = writeln!(out, "Galois group: {:?} (order {})", g.label, g.order);
    }
    if let Some(o) = &c.cubic_obstruction {
        let _ = writeln!(
            out,
            "cubic obstruction: {:?} (discriminant / -3 = {})",
            o.outcome, o.ratio
        );
    }
    let _ = writeln!(out, "real roots: {}", v.real_root_count);
    for (i, r) in v.real_roots.iter().enumerate() {
        root_line(&mut out, i, r);
    }
    let _ = writeln!(out, "summary: {:?}", v.summary);
    out
}

fn tower_block(out: &mut String, t: &TowerReport) {
    let _ = writeln!(out, "  over {}:", t.ground);
    for line in &t.transcript {
        let _ = writeln!(out, "    # {line}");
    }
    for (i, s) in t.steps.iter().enumerate() {
        let _ = writeln!(out, "    r{} = ({})^(1/{})", i + 1, s.radicand, s.index);
    }
    let _ = writeln!(out, "    root = {}", t.root);
    let c = &t.check;
    let _ = writeln!(
        out,
        "    check: {} (enclosure [{}, {}], residual contains 0: {}, inside isolating interval: {}, radicands positive: {}, {} bits)",
        if c.passed() { "passed" } else { "FAILED" },
        c.root_enclosure.lo,
        c.root_enclosure.hi,
        c.residual_contains_zero,
        c.matches_isolating_interval,
        c.steps_real,
        c.precision_bits
    );
}

pub fn towers(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {} over {}", v.polynomial, v.ground_field);
    let mut any = false;
    for (i, r) in v.real_roots.iter().enumerate() {
        match &r.tower {
            Some(t) => {
                any = true;
                let _ = writeln!(out, "root {} in {}", i + 1, r.interval.approx);
                tower_block(&mut out, t);
            }
            None => {
                let why = r.reason.map_or("undecided", |x| x.describe());
                let _ = writeln!(
                    out,
                    "root {} in {}: no tower ({:?}; {why})",
                    i + 1,
                    r.interval.approx,
                    r.status
                );
            }
        }
    }
    if !any {
        let _ = writeln!(out, "no real radical tower was constructed");
    }
    out
}

pub fn galois_group(poly: &str, g: &GaloisGroupReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {poly}");
    let _ = writeln!(
        out,
        "Galois group: {:?} (order {}, degree {})",
        g.label, g.order, g.degree
    );
    let _ = writeln!(
        out,
        "discriminant: {} ({}a square)",
        g.discriminant,
        if g.discriminant_is_square { "" } else { "not " }
    );
    if let Some(r) = &g.resolvent {
        let _ = writeln!(out, "resolvent cubic: {r}");
    }
    if let Some(roots) = &g.resolvent_rational_roots {
        let _ = writeln!(out, "resolvent rational roots: [{}]", roots.join(", "));
    }
    out
}

pub fn rre_verdict(v: &RreVerdict) -> String {
    match v {
        RreVerdict::ChainFound { witness } => {
            let orders: Vec<String> = witness
                .subgroups()
                .iter()
                .map(|g| g.order().to_string())
                .collect();
            let primes: Vec<String> = witness.primes().iter().map(u64::to_string).collect();
            format!(
                "ChainFound: subgroup orders {} with prime steps [{}]",
                orders.join(" < "),
                primes.join(", ")
            )
        }
        RreVerdict::NoChain { enumerated } => {
            format!(
                "NoChain: every admissible chain failed ({enumerated} invariant subgroups built)"
            )
        }
        RreVerdict::AbelianIndexNotTwoPower { index } => {
            format!("AbelianIndexNotTwoPower({index}): the abelian part has degree {index}, not a power of 2")
        }
        RreVerdict::NotApplicable { reason } => format!("NotApplicable: {reason}"),
    }
}

pub fn datum(j: &DatumJson, d: &GaloisDatum, v: &RreVerdict) -> String {
    let mut out = String::new();
    let l = &j.labels;
    for (name, label) in [
        ("field", &l.field),
        ("base", &l.base),
        ("splitting field", &l.splitting_field),
        ("abelian field", &l.abelian_field),
    ] {
        if !label.is_empty() {
            let _ = writeln!(out, "{name}: {label}");
        }
    }
    let _ = writeln!(
        out,
        "|G| = {}, |U| = {}, |N| = {}, |M| = {}, degree {}",
        d.g().order(),
        d.u().order(),
        d.n().order(),
        d.m().order(),
        d.field_degree()
    );
    let _ = writeln!(out, "quasireal: {}", d.is_quasireal());
    if let Some(r) = d.radical_by_construction() {
        let _ = writeln!(out, "radical by construction: {r}");
    }
    let _ = writeln!(out, "verdict: {}", rre_verdict(v));
    out
}

pub fn sweeps(reports: &[SweepReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "{} {}: {} instances, {} checked, {} counterexamples",
            if r.passed() { "ok  " } else { "FAIL" },
            r.name,
            r.instances,
            r.checked,
            r.counterexamples.len()
        );
        for c in r.counterexamples.iter().take(5) {
            let _ = writeln!(out, "    {c}");
        }
    }
    out
}

pub fn sextic(r: &SexticReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {}", r.polynomial);
    if let Some(m) = &r.irreducibility {
        let _ = writeln!(out, "irreducible over Q: {m}");
    }
    let _ = writeln!(out, "real roots: {}", r.real_root_count);
    let _ = writeln!(
        out,
        "over Q(sqrt(3)): u = {}, v = {} (u*v equals the sextic: {})",
        r.factor_u, r.factor_v, r.factor_product_check
    );
    let _ = writeln!(
        out,
        "u: {} real root(s), constant in (-2, 2): {}; v: {} real root(s), constant in (-2, 2): {}",
        r.u_real_roots, r.u_three_root_criterion, r.v_real_roots, r.v_three_root_criterion
    );
    for (i, x) in r.roots.iter().enumerate() {
        let _ = writeln!(
            out,
            "  root {} in {} (exactly [{}, {}]): factor {}, {:?}",
            i + 1,
            x.interval.approx,
            x.interval.lo,
            x.interval.hi,
            x.factor,
            x.status
        );
    }
    let _ = writeln!(out, "tower for u's root over Q:");
    tower_block(&mut out, &r.u_tower_over_q);
    let _ = writeln!(
        out,
        "roots in a real repeated radical extension: {} of {}",
        r.roots_in_rre, r.real_root_count
    );
    out
}
