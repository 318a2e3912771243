//! The sextic `(X³ − 3X + 3)² − 3`: four real roots, exactly one of which
//! lies in a real repeated radical extension of Q.
//!
//! Over `Q(√3)` it factors as `u·v` with `u = X³ − 3X + 3 + √3` (one real
//! root, reachable by Cardano) and `v = X³ − 3X + 3 − √3` (three real
//! roots, so none reachable).

use serde::Serialize;

use super::{build_cubic_tower, normalize_tower};
use super::{classify, tower_over_rationals, ClassifyError, RootStatusKind, TowerReport, Verdict};
use crate::arith::{
    irreducibility_certificate, parse_poly_quadratic, parse_poly_rational, IrreducibilityMethod,
    IrreducibilityStatus, QuadraticField,
};
use crate::interval::IntervalJson;
use crate::roots::{
    cubic_three_root_criterion, isolate_real_roots, real_root_count, DEFAULT_WIDTH_EXP,
};

pub const SEXTIC: &str = "(x^3 - 3x + 3)^2 - 3";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseStudyRoot {
    pub interval: IntervalJson,
    /// `"u"` or `"v"`.
    pub factor: &'static str,
    pub status: RootStatusKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SexticReport {
    pub polynomial: String,
    pub irreducibility: Option<IrreducibilityMethod>,
    pub real_root_count: usize,
    pub factor_u: String,
    pub factor_v: String,
    /// `u·v` equals the sextic, checked by exact multiplication.
    pub factor_product_check: bool,
    /// Whether the constant `a` of `X³ − 3X + a` lies strictly in `(−2, 2)`.
    pub u_three_root_criterion: bool,
    pub v_three_root_criterion: bool,
    pub u_real_roots: usize,
    pub v_real_roots: usize,
    pub u_verdict: Verdict,
    pub v_verdict: Verdict,
    /// The tower for `u`'s real root with `√3` adjoined first, checked
    /// against the sextic over Q.
    pub u_tower_over_q: TowerReport,
    pub roots: Vec<CaseStudyRoot>,
    pub roots_in_rre: usize,
}

pub fn analyze_sextic_case_study() -> Result<SexticReport, ClassifyError> {
    let f = parse_poly_rational(SEXTIC).expect("literal");
    let cert = irreducibility_certificate(&f)?;
    let irreducibility = match cert.status {
        IrreducibilityStatus::Irreducible(m) => Some(m),
        _ => None,
    };
    let q3 = QuadraticField::new(3).expect("3 is squarefree");
    let u = parse_poly_quadratic("x^3 - 3x + 3 + sqrt(3)", q3).expect("literal");
    let v = parse_poly_quadratic("x^3 - 3x + 3 - sqrt(3)", q3).expect("literal");
    let factor_product_check = &u * &v == f.lift_to(q3);
    let three = q3.elem(crate::arith::int(3), crate::arith::int(0));
    let u_a = three.clone() + &q3.sqrt_d();
    let v_a = three - &q3.sqrt_d();

    let u_verdict = classify(&u)?;
    let v_verdict = classify(&v)?;

    let t = normalize_tower(&tower_over_rationals(&build_cubic_tower(&u)?));
    let f_roots = isolate_real_roots(&f, DEFAULT_WIDTH_EXP)?;
    let u_roots = isolate_real_roots(&u, DEFAULT_WIDTH_EXP + 4)?;
    let target = f_roots
        .iter()
        .find(|r| r.to_interval().overlaps(&u_roots[0].to_interval()))
        .expect("u's root is a root of the sextic");
    let check = t.verify(&f, target)?;
    let u_tower_over_q = t.report(check);

    let roots = f_roots
        .iter()
        .map(|r| {
            let in_u = u_roots
                .iter()
                .any(|x| x.to_interval().overlaps(&r.to_interval()));
            CaseStudyRoot {
                interval: r.to_json(),
                factor: if in_u { "u" } else { "v" },
                status: if in_u {
                    u_verdict.real_roots[0].status
                } else {
                    v_verdict.real_roots[0].status
                },
            }
        })
        .collect::<Vec<_>>();
    let roots_in_rre = roots
        .iter()
        .filter(|r| r.status == RootStatusKind::InRealRRE)
        .count();
    Ok(SexticReport {
        polynomial: f.to_string(),
        irreducibility,
        real_root_count: real_root_count(&f)?,
        factor_u: u.to_string(),
        factor_v: v.to_string(),
        factor_product_check,
        u_three_root_criterion: cubic_three_root_criterion(&u_a),
        v_three_root_criterion: cubic_three_root_criterion(&v_a),
        u_real_roots: real_root_count(&u)?,
        v_real_roots: real_root_count(&v)?,
        u_verdict,
        v_verdict,
        u_tower_over_q,
        roots,
        roots_in_rre,
    })
}
