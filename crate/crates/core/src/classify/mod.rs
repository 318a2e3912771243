//! Decides, for an irreducible polynomial over Q or `Q(√d)`, which of its
//! real roots lie in real repeated radical extensions of the ground field,
//! building explicit real radical towers where the argument is
//! constructive.

mod case_study;
mod ground;
mod tower;

use serde::Serialize;

use crate::arith::{ArithError, IrreducibilityMethod, IrreducibilityStatus, Poly};
use crate::galois::{GaloisGroupLabel, GaloisGroupReport};
use crate::interval::IntervalJson;
use crate::roots::{isolate_real_roots, IsolatingInterval, RootError, DEFAULT_WIDTH_EXP};

pub use case_study::{analyze_sextic_case_study, CaseStudyRoot, SexticReport};
pub use ground::Ground;
pub use tower::{
    build_cubic_tower, build_quartic_tower, normalize_tower, tower_over_rationals, Expr,
    RadicalTower, StepReport, TowerCheck, TowerError, TowerReport, TowerStep, VERIFY_WIDTH_EXP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("constant polynomial")]
    Constant,
    #[error("polynomial is reducible, with factor {factor}")]
    Reducible { factor: String },
    #[error("expected a cubic, got degree {0}")]
    NotCubic(usize),
    #[error("irreducibility could not be certified")]
    UnknownIrreducibility,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error("tower for real root {0} failed numeric verification")]
    TowerNotVerified(usize),
}

/// Why a root is or is not in a real repeated radical extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    /// Degree 1 or 2: the quadratic formula with a real square root.
    DegreeAtMostTwo,
    /// A cubic with one real root: Cardano's formula uses only real radicals.
    CubicOneRealRoot,
    /// A quartic with two real roots: built from the resolvent cubic.
    QuarticTwoRealRoots,
    /// All roots real and the Galois group a 2-group: a tower of real
    /// quadratic steps.
    GaloisTwoGroup,
    /// Odd degree with two or more real roots: a root in a real repeated
    /// radical extension would have to be the only real root.
    OddDegreeSeveralRealRoots,
    /// All roots real but the splitting field degree is not a power of 2.
    RealSplittingNotTwoPower,
}

impl Reason {
    pub fn describe(self) -> &'static str {
        match self {
            Reason::DegreeAtMostTwo => "degree at most 2: quadratic formula",
            Reason::CubicOneRealRoot => "irreducible cubic with exactly one real root",
            Reason::QuarticTwoRealRoots => "irreducible quartic with exactly two real roots",
            Reason::GaloisTwoGroup => "all roots real and the Galois group is a 2-group",
            Reason::OddDegreeSeveralRealRoots => {
                "odd degree with at least two real roots: an expressible real root would be the only one"
            }
            Reason::RealSplittingNotTwoPower => {
                "all roots real and the splitting field degree is not a power of 2"
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootStatusKind {
    InRealRRE,
    NotInRealRRE,
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub interval: IntervalJson,
    pub status: RootStatusKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tower: Option<TowerReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Summary {
    AllInRealRRE,
    NoneInRealRRE,
    Mixed,
    NoRealRoots,
    Unsupported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    /// `Δ/(−3)` is not a square: `K(α)` is not a repeated radical extension.
    ObstructionPresent,
    /// `Δ/(−3)` is a square; this alone decides nothing.
    ObstructionAbsent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub discriminant: String,
    pub ratio: String,
    pub outcome: Obstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificates {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducibility: Option<IrreducibilityMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub galois_group: Option<GaloisGroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic_obstruction: Option<ObstructionReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub polynomial: String,
    pub ground_field: String,
    pub degree: usize,
    pub real_root_count: usize,
    pub real_roots: Vec<RootReport>,
    pub summary: Summary,
    pub certificates: Certificates,
}

impl Verdict {
    pub fn count(&self, kind: RootStatusKind) -> usize {
        self.real_roots.iter().filter(|r| r.status == kind).count()
    }

    pub fn reasons(&self) -> Vec<Reason> {
        self.real_roots.iter().filter_map(|r| r.reason).collect()
    }
}

/// Whether a cubic's discriminant has the form `−3m²` in the ground field,
/// a necessary condition for `K(α)` to be radical over a quasireal `K`.
pub fn cubic_radical_obstruction<K: Ground>(
    f: &Poly<K>,
) -> Result<ObstructionReport, ClassifyError> {
    if f.degree() != Some(3) {
        return Err(ClassifyError::NotCubic(f.deg()));
    }
    require_irreducible(f)?;
    let disc = f.monic().discriminant()?;
    let ratio = disc.clone() / &K::from_int(f.tag(), -3);
    let outcome = if ratio.sqrt().is_some() {
        Obstruction::ObstructionAbsent
    } else {
        Obstruction::ObstructionPresent
    };
    Ok(ObstructionReport {
        discriminant: disc.to_string(),
        ratio: ratio.to_string(),
        outcome,
    })
}

fn require_irreducible<K: Ground>(
    f: &Poly<K>,
) -> Result<Option<IrreducibilityMethod>, ClassifyError> {
    match K::certificate(f)?.status {
        IrreducibilityStatus::Irreducible(m) => Ok(Some(m)),
        IrreducibilityStatus::Reducible(h) => Err(ClassifyError::Reducible {
            factor: K::render(&h),
        }),
        IrreducibilityStatus::Unknown => Ok(None),
    }
}

pub fn classify<K: Ground>(f: &Poly<K>) -> Result<Verdict, ClassifyError> {
    classify_with_width(f, DEFAULT_WIDTH_EXP)
}

fn report(iv: &IsolatingInterval, status: RootStatusKind, reason: Option<Reason>) -> RootReport {
    RootReport {
        interval: iv.to_json(),
        status,
        reason,
        note: None,
        tower: None,
    }
}

fn verified<K: Ground>(
    f: &Poly<K>,
    t: &RadicalTower<K>,
    iv: &IsolatingInterval,
    i: usize,
) -> Result<TowerReport, ClassifyError> {
    let t = normalize_tower(t);
    let check = t.verify(f, iv)?;
    if !check.passed() {
        return Err(ClassifyError::TowerNotVerified(i));
    }
    Ok(t.report(check))
}

/// Quadratic formula towers for the real roots of a degree-1 or -2 `f`,
/// in ascending order.
fn low_degree_towers<K: Ground>(f: &Poly<K>) -> Vec<RadicalTower<K>> {
    let g = f.monic();
    let tag = g.tag();
    let mut t = RadicalTower::new(tag);
    if g.deg() == 1 {
        t.root = Expr::Num(-g.coeff(0));
        return vec![t];
    }
    let (p, q) = (g.coeff(1), g.coeff(0));
    let disc = p.clone() * &p - &(K::from_int(tag, 4) * &q);
    t.transcript.push(format!("discriminant {disc} > 0"));
    let s = t.push(2, Expr::Num(disc));
    let half = K::from_int(tag, 2);
    let minus_p = Expr::Num(-p);
    let mut lo = t.clone();
    lo.root = (minus_p.clone() - s.clone()) / Expr::Num(half.clone());
    t.root = (minus_p + s) / Expr::Num(half);
    vec![lo, t]
}

pub fn classify_with_width<K: Ground>(
    f: &Poly<K>,
    width_exp: u32,
) -> Result<Verdict, ClassifyError> {
    if f.is_zero() || f.is_constant() {
        return Err(ClassifyError::Constant);
    }
    let n = f.deg();
    let method = require_irreducible(f)?;
    let roots = isolate_real_roots(f, width_exp)?;
    let k = roots.len();
    let mut certificates = Certificates {
        irreducibility: method.clone(),
        discriminant: (n >= 2)
            .then(|| f.monic().discriminant().map(|d| d.to_string()))
            .transpose()?,
        galois_group: None,
        cubic_obstruction: None,
    };
    let all = |status, reason| {
        roots
            .iter()
            .map(|iv| report(iv, status, reason))
            .collect::<Vec<_>>()
    };
    let mut real_roots: Vec<RootReport> = if method.is_none() {
        let mut v = all(RootStatusKind::Unsupported, None);
        for r in &mut v {
            r.note = Some("irreducibility could not be certified".into());
        }
        v
    } else if k == 0 {
        Vec::new()
    } else if n <= 2 {
        let towers = low_degree_towers(f);
        let mut out = Vec::new();
        for (i, (iv, t)) in roots.iter().zip(&towers).enumerate() {
            let mut r = report(iv, RootStatusKind::InRealRRE, Some(Reason::DegreeAtMostTwo));
            r.tower = Some(verified(f, t, iv, i)?);
            out.push(r);
        }
        out
    } else if n % 2 == 1 && k >= 2 {
        let mut v = all(
            RootStatusKind::NotInRealRRE,
            Some(Reason::OddDegreeSeveralRealRoots),
        );
        if k == n && !n.is_power_of_two() {
            for r in &mut v {
                r.note = Some("also: all roots are real and the degree is not a power of 2".into());
            }
        }
        v
    } else if n == 3 {
        let t = build_cubic_tower(f)?;
        let mut r = report(
            &roots[0],
            RootStatusKind::InRealRRE,
            Some(Reason::CubicOneRealRoot),
        );
        r.tower = Some(verified(f, &t, &roots[0], 0)?);
        vec![r]
    } else if n == 4 && k == 2 {
        let towers = build_quartic_tower(f)?;
        let mut out = Vec::new();
        for (i, (iv, t)) in roots.iter().zip(&towers).enumerate() {
            let mut r = report(
                iv,
                RootStatusKind::InRealRRE,
                Some(Reason::QuarticTwoRealRoots),
            );
            r.tower = Some(verified(f, t, iv, i)?);
            out.push(r);
        }
        out
    } else if n == 4 && k == 4 {
        match K::quartic_galois_group(f) {
            Some(g) => {
                let two_group = matches!(
                    g.label,
                    GaloisGroupLabel::V4 | GaloisGroupLabel::C4 | GaloisGroupLabel::D4
                );
                certificates.galois_group = Some(g);
                if two_group {
                    all(RootStatusKind::InRealRRE, Some(Reason::GaloisTwoGroup))
                } else {
                    all(
                        RootStatusKind::NotInRealRRE,
                        Some(Reason::RealSplittingNotTwoPower),
                    )
                }
            }
            None => {
                let mut v = all(RootStatusKind::Unsupported, None);
                for r in &mut v {
                    r.note = Some(format!(
                        "Galois group of a quartic over {} is not computed",
                        f.tag()
                    ));
                }
                v
            }
        }
    } else if k == n && !n.is_power_of_two() {
        all(
            RootStatusKind::NotInRealRRE,
            Some(Reason::RealSplittingNotTwoPower),
        )
    } else {
        let mut v = all(RootStatusKind::Unsupported, None);
        for r in &mut v {
            r.note = Some(format!(
                "degree {n} with {k} real root{} is outside the decided cases",
                if k == 1 { "" } else { "s" }
            ));
        }
        v
    };
    if n == 3 && method.is_some() {
        certificates.cubic_obstruction = Some(cubic_radical_obstruction(f)?);
    }
    if n % 2 == 1 && k >= 2 && method.is_some() {
        debug_assert!(real_roots
            .iter()
            .all(|r| r.reason == Some(Reason::OddDegreeSeveralRealRoots)));
    }
    real_roots.shrink_to_fit();
    let summary = summarize(&real_roots, k);
    Ok(Verdict {
        polynomial: K::render(f),
        ground_field: f.tag().to_string(),
        degree: n,
        real_root_count: k,
        real_roots,
        summary,
        certificates,
    })
}

fn summarize(roots: &[RootReport], k: usize) -> Summary {
    if k == 0 {
        return Summary::NoRealRoots;
    }
    let count = |s| roots.iter().filter(|r| r.status == s).count();
    if count(RootStatusKind::Unsupported) > 0 {
        Summary::Unsupported
    } else if count(RootStatusKind::InRealRRE) == k {
        Summary::AllInRealRRE
    } else if count(RootStatusKind::NotInRealRRE) == k {
        Summary::NoneInRealRRE
    } else {
        Summary::Mixed
    }
}
