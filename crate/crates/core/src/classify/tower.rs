//! Real radical towers: a sequence of steps `r_i = ρ_i^(1/n_i)`, each
//! radicand an exact expression in the ground field and earlier steps, plus
//! an expression for the root. Verification is by interval evaluation only.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use super::ground::Ground;
use crate::arith::integer::factor_u64;
use crate::arith::{Field, Poly, QuadFieldElem, Rational, RationalField};
use crate::galois::quartic_resolvent_cubic;
use crate::interval::{Interval, IntervalJson};
use crate::roots::{isolate_real_roots, IsolatingInterval};

/// Width exponent of the final root enclosure.
pub const VERIFY_WIDTH_EXP: u32 = 30;
const PRECISIONS: [u32; 6] = [64, 128, 256, 512, 1024, 2048];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error("discriminant {0} is not negative: the cubic has three real roots")]
    DiscriminantNotNegative(String),
    #[error("expected a polynomial of degree {expected}, got {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("expected exactly {expected} real roots, found {found}")]
    RealRootCount { expected: usize, found: usize },
    #[error("resolvent cubic has {0} real roots; it must have exactly one")]
    ResolventRealRoots(usize),
    #[error("step {0} refers to a later step")]
    ForwardReference(usize),
    #[error("step {0} has index below 2")]
    BadIndex(usize),
    #[error("even root of a negative radicand at step {0}")]
    NegativeRadicand(usize),
    #[error("root enclosure did not reach width 2^-{0}")]
    PrecisionExhausted(u32),
    #[error("interval arithmetic failed: {0}")]
    Interval(String),
    #[error("polynomial error: {0}")]
    Poly(String),
}

/// An exact expression over the ground field `K` and the tower's steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr<K> {
    Num(K),
    /// The value of step `i`.
    Step(usize),
    Add(Box<Expr<K>>, Box<Expr<K>>),
    Sub(Box<Expr<K>>, Box<Expr<K>>),
    Mul(Box<Expr<K>>, Box<Expr<K>>),
    Div(Box<Expr<K>>, Box<Expr<K>>),
    Neg(Box<Expr<K>>),
}

impl<K: Field> Expr<K> {
    pub fn num(k: K) -> Self {
        Expr::Num(k)
    }

    pub fn as_num(&self) -> Option<&K> {
        match self {
            Expr::Num(k) => Some(k),
            _ => None,
        }
    }

    /// Largest step referenced, if any.
    pub fn max_step(&self) -> Option<usize> {
        match self {
            Expr::Num(_) => None,
            Expr::Step(i) => Some(*i),
            Expr::Neg(a) => a.max_step(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.max_step().max(b.max_step())
            }
        }
    }

    pub fn map_steps(&self, f: &impl Fn(usize) -> Expr<K>) -> Expr<K> {
        match self {
            Expr::Num(k) => Expr::Num(k.clone()),
            Expr::Step(i) => f(*i),
            Expr::Neg(a) => -a.map_steps(f),
            Expr::Add(a, b) => a.map_steps(f) + b.map_steps(f),
            Expr::Sub(a, b) => a.map_steps(f) - b.map_steps(f),
            Expr::Mul(a, b) => a.map_steps(f) * b.map_steps(f),
            Expr::Div(a, b) => a.map_steps(f) / b.map_steps(f),
        }
    }

    pub fn map_nums<L: Field>(&self, f: &impl Fn(&K) -> Expr<L>) -> Expr<L> {
        match self {
            Expr::Num(k) => f(k),
            Expr::Step(i) => Expr::Step(*i),
            Expr::Neg(a) => -a.map_nums(f),
            Expr::Add(a, b) => a.map_nums(f) + b.map_nums(f),
            Expr::Sub(a, b) => a.map_nums(f) - b.map_nums(f),
            Expr::Mul(a, b) => a.map_nums(f) * b.map_nums(f),
            Expr::Div(a, b) => a.map_nums(f) / b.map_nums(f),
        }
    }

    fn eval(&self, steps: &[Interval], prec: u32) -> Result<Interval, TowerError> {
        let iv = match self {
            Expr::Num(k) => k.to_interval(prec + 8),
            Expr::Step(i) => steps[*i].clone(),
            Expr::Neg(a) => a.eval(steps, prec)?.neg(),
            Expr::Add(a, b) => a.eval(steps, prec)?.add(&b.eval(steps, prec)?),
            Expr::Sub(a, b) => a.eval(steps, prec)?.sub(&b.eval(steps, prec)?),
            Expr::Mul(a, b) => a.eval(steps, prec)?.mul(&b.eval(steps, prec)?),
            Expr::Div(a, b) => a
                .eval(steps, prec)?
                .div(&b.eval(steps, prec)?)
                .map_err(|e| TowerError::Interval(e.to_string()))?,
        };
        Ok(iv.rounded(prec))
    }

    fn render(&self, out: &mut String, top: bool) {
        let wrap = |out: &mut String, f: &dyn Fn(&mut String)| {
            if !top {
                out.push('(');
            }
            f(out);
            if !top {
                out.push(')');
            }
        };
        match self {
            Expr::Num(k) => {
                let s = k.to_string();
                if top || !(s.starts_with('-') || s.contains([' ', '/'])) {
                    out.push_str(&s);
                } else {
                    out.push('(');
                    out.push_str(&s);
                    out.push(')');
                }
            }
            Expr::Step(i) => out.push_str(&format!("r{}", i + 1)),
            Expr::Neg(a) => {
                out.push('-');
                a.render(out, false);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    Expr::Mul(..) => "*",
                    _ => "/",
                };
                wrap(out, &|out: &mut String| {
                    a.render(out, false);
                    out.push_str(op);
                    b.render(out, false);
                });
            }
        }
    }
}

impl<K: Field> fmt::Display for Expr<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, true);
        f.write_str(&s)
    }
}

impl<K: Field> Add for Expr<K> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        match (self, o) {
            (Expr::Num(a), Expr::Num(b)) => Expr::Num(a + &b),
            (Expr::Num(a), b) if a.is_zero_elem() => b,
            (a, Expr::Num(b)) if b.is_zero_elem() => a,
            (a, b) => Expr::Add(Box::new(a), Box::new(b)),
        }
    }
}

impl<K: Field> Sub for Expr<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        match (self, o) {
            (Expr::Num(a), Expr::Num(b)) => Expr::Num(a - &b),
            (a, Expr::Num(b)) if b.is_zero_elem() => a,
            (Expr::Num(a), b) if a.is_zero_elem() => -b,
            (a, Expr::Num(b)) if b.is_neg() => Expr::Add(Box::new(a), Box::new(Expr::Num(-b))),
            // a - (-k)/e  =>  a + k/e
            (a, Expr::Div(n, e)) if matches!(&*n, Expr::Num(k) if k.is_neg()) => {
                Expr::Add(Box::new(a), Box::new(-*n / *e))
            }
            (a, b) => Expr::Sub(Box::new(a), Box::new(b)),
        }
    }
}

impl<K: Field> Mul for Expr<K> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        match (self, o) {
            (Expr::Num(a), Expr::Num(b)) => Expr::Num(a * &b),
            (Expr::Num(a), _) if a.is_zero_elem() => Expr::Num(a),
            (_, Expr::Num(b)) if b.is_zero_elem() => Expr::Num(b),
            (Expr::Num(a), b) if a == K::one_of(a.tag()) => b,
            (a, Expr::Num(b)) if b == K::one_of(b.tag()) => a,
            (Expr::Num(a), Expr::Neg(b)) => Expr::Num(-a) * *b,
            (a, b) => Expr::Mul(Box::new(a), Box::new(b)),
        }
    }
}

impl<K: Field> Div for Expr<K> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        match (self, o) {
            (Expr::Num(a), Expr::Num(b)) if !b.is_zero_elem() => Expr::Num(a / &b),
            (a, Expr::Num(b)) if b == K::one_of(b.tag()) => a,
            (a, b) => Expr::Div(Box::new(a), Box::new(b)),
        }
    }
}

impl<K: Field> Neg for Expr<K> {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            Expr::Num(a) => Expr::Num(-a),
            Expr::Neg(a) => *a,
            Expr::Mul(a, b) if matches!(&*a, Expr::Num(_)) => -*a * *b,
            a => Expr::Neg(Box::new(a)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStep<K> {
    pub index: u32,
    pub radicand: Expr<K>,
}

/// A real radical tower over `K` ending in the expression `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalTower<K: Field> {
    pub tag: K::Tag,
    pub steps: Vec<TowerStep<K>>,
    pub root: Expr<K>,
    /// Human-readable account of how the tower was built.
    pub transcript: Vec<String>,
}

/// Numeric evidence that a tower computes a given real root of `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerCheck {
    pub root_enclosure: IntervalJson,
    pub width_exp: u32,
    pub precision_bits: u32,
    pub residual: IntervalJson,
    pub residual_contains_zero: bool,
    pub matches_isolating_interval: bool,
    pub steps_real: bool,
}

impl TowerCheck {
    pub fn passed(&self) -> bool {
        self.residual_contains_zero && self.matches_isolating_interval && self.steps_real
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub index: u32,
    pub radicand: String,
    pub real: bool,
}

/// Serializable form of a tower with its check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub ground: String,
    pub steps: Vec<StepReport>,
    pub root: String,
    pub transcript: Vec<String>,
    pub check: TowerCheck,
}

impl<K: Field> RadicalTower<K> {
    pub fn new(tag: K::Tag) -> Self {
        Self {
            tag,
            steps: Vec::new(),
            root: Expr::Num(K::zero_of(tag)),
            transcript: Vec::new(),
        }
    }

    /// Adjoins the real `index`-th root of `radicand` and returns it.
    pub fn push(&mut self, index: u32, radicand: Expr<K>) -> Expr<K> {
        self.steps.push(TowerStep { index, radicand });
        Expr::Step(self.steps.len() - 1)
    }

    pub fn indices(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.index).collect()
    }

    /// Structural checks: indices at least 2 and radicands that only use
    /// earlier steps.
    pub fn validate(&self) -> Result<(), TowerError> {
        for (i, s) in self.steps.iter().enumerate() {
            if s.index < 2 {
                return Err(TowerError::BadIndex(i));
            }
            if s.radicand.max_step().is_some_and(|j| j >= i) {
                return Err(TowerError::ForwardReference(i));
            }
        }
        if self.root.max_step().is_some_and(|j| j >= self.steps.len()) {
            return Err(TowerError::ForwardReference(self.steps.len()));
        }
        Ok(())
    }

    fn step_values(&self, prec: u32) -> Result<(Vec<Interval>, bool), TowerError> {
        let mut vals: Vec<Interval> = Vec::with_capacity(self.steps.len());
        let mut all_clear = true;
        for (i, s) in self.steps.iter().enumerate() {
            let r = s.radicand.eval(&vals, prec)?;
            if s.index % 2 == 0 {
                if r.is_negative() {
                    return Err(TowerError::NegativeRadicand(i));
                }
                all_clear &= !num_traits::Signed::is_negative(r.lo());
            }
            let v = r
                .try_nth_root(s.index, prec)
                .map_err(|e| TowerError::Interval(e.to_string()))?;
            vals.push(v);
        }
        Ok((vals, all_clear))
    }

    /// Encloses a tower expression to width below `2^-width_exp`, raising
    /// the working precision as needed. Also reports whether every even
    /// radicand was certified non-negative.
    pub fn enclose(
        &self,
        e: &Expr<K>,
        width_exp: u32,
    ) -> Result<(Interval, u32, bool), TowerError> {
        self.validate()?;
        let target = Rational::new(1.into(), num_bigint::BigInt::from(1) << width_exp as usize);
        let mut last = None;
        for prec in PRECISIONS {
            let (vals, clear) = match self.step_values(prec) {
                Ok(v) => v,
                Err(TowerError::Interval(_)) => continue,
                Err(e) => return Err(e),
            };
            let iv = match e.eval(&vals, prec) {
                Ok(iv) => iv,
                Err(TowerError::Interval(_)) => continue,
                Err(e) => return Err(e),
            };
            if iv.width() <= target {
                if clear {
                    return Ok((iv, prec, true));
                }
                last = Some((iv, prec));
            }
        }
        match last {
            Some((iv, prec)) => Ok((iv, prec, false)),
            None => Err(TowerError::PrecisionExhausted(width_exp)),
        }
    }

    /// Checks that the root expression encloses the real root of `f`
    /// isolated by `target`, and no other.
    pub fn verify(
        &self,
        f: &Poly<K>,
        target: &IsolatingInterval,
    ) -> Result<TowerCheck, TowerError> {
        let (iv, prec, steps_real) = self.enclose(&self.root, VERIFY_WIDTH_EXP)?;
        let residual = f.eval_interval(&iv, prec);
        let roots = isolate_real_roots(f, VERIFY_WIDTH_EXP + 10)
            .map_err(|e| TowerError::Poly(e.to_string()))?;
        let hits: Vec<&IsolatingInterval> = roots
            .iter()
            .filter(|r| r.to_interval().overlaps(&iv))
            .collect();
        let matches = hits.len() == 1 && hits[0].to_interval().overlaps(&target.to_interval());
        Ok(TowerCheck {
            root_enclosure: IntervalJson::from(&iv),
            width_exp: VERIFY_WIDTH_EXP,
            precision_bits: prec,
            residual: IntervalJson::from(&residual),
            residual_contains_zero: residual.contains_zero(),
            matches_isolating_interval: matches,
            steps_real,
        })
    }

    pub fn report(&self, check: TowerCheck) -> TowerReport {
        TowerReport {
            ground: self.tag.to_string(),
            steps: self
                .steps
                .iter()
                .map(|s| StepReport {
                    index: s.index,
                    radicand: s.radicand.to_string(),
                    real: check.steps_real || s.index % 2 == 1,
                })
                .collect(),
            root: self.root.to_string(),
            transcript: self.transcript.clone(),
            check,
        }
    }
}

impl<K: Field> fmt::Display for RadicalTower<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "over {}:", self.tag)?;
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "  r{} = ({})^(1/{})", i + 1, s.radicand, s.index)?;
        }
        write!(f, "  root = {}", self.root)
    }
}

/// Splits every composite index into prime steps, smallest prime first:
/// `a^(1/(pm))` becomes `(a^(1/p))^(1/m)`.
pub fn normalize_tower<K: Field>(t: &RadicalTower<K>) -> RadicalTower<K> {
    let mut out = RadicalTower::new(t.tag);
    out.transcript = t.transcript.clone();
    let mut map: Vec<usize> = Vec::with_capacity(t.steps.len());
    for s in &t.steps {
        let radicand = s.radicand.map_steps(&|j| Expr::Step(map[j]));
        let mut primes: Vec<u32> = Vec::new();
        for (p, e) in factor_u64(s.index as u64) {
            primes.extend(std::iter::repeat_n(p as u32, e as usize));
        }
        let mut cur = radicand;
        for p in primes {
            cur = out.push(p, cur);
        }
        map.push(out.steps.len() - 1);
    }
    out.root = t.root.map_steps(&|j| Expr::Step(map[j]));
    out
}

/// A tower over `Q(√d)` rewritten over Q by adjoining `√d` first.
pub fn tower_over_rationals(t: &RadicalTower<QuadFieldElem>) -> RadicalTower<Rational> {
    let mut out = RadicalTower::<Rational>::new(RationalField);
    let d = Rational::from_integer(t.tag.d().into());
    let sqrt_d = out.push(2, Expr::Num(d));
    let lift = |k: &QuadFieldElem| {
        Expr::Num(k.rational_part().clone()) + Expr::Num(k.sqrt_part().clone()) * sqrt_d.clone()
    };
    for s in &t.steps {
        let radicand = s.radicand.map_steps(&|j| Expr::Step(j + 1)).map_nums(&lift);
        out.push(s.index, radicand);
    }
    out.root = t.root.map_steps(&|j| Expr::Step(j + 1)).map_nums(&lift);
    out.transcript = std::iter::once(format!("adjoin sqrt({}) to reach {}", t.tag.d(), t.tag))
        .chain(t.transcript.iter().cloned())
        .collect();
    out
}

fn check_degree<K: Field>(f: &Poly<K>, n: usize) -> Result<Poly<K>, TowerError> {
    if f.degree() != Some(n) {
        return Err(TowerError::WrongDegree {
            expected: n,
            found: f.deg(),
        });
    }
    Ok(f.monic())
}

/// Appends Cardano's real radicals for the unique real root of the monic
/// cubic `X³ + a₂X² + a₁X + a₀` with negative discriminant.
fn cardano_into<K: Ground>(t: &mut RadicalTower<K>, g: &Poly<K>) -> Result<Expr<K>, TowerError> {
    let tag = g.tag();
    let k = |n: i64| K::from_int(tag, n);
    let disc = g
        .discriminant()
        .map_err(|e| TowerError::Poly(e.to_string()))?;
    if !disc.is_neg() {
        return Err(TowerError::DiscriminantNotNegative(disc.to_string()));
    }
    let (a2, a1, a0) = (g.coeff(2), g.coeff(1), g.coeff(0));
    // X = Y − a₂/3 gives Y³ + bY + c
    let shift = a2.clone() / &k(3);
    let b = a1.clone() - &(a2.clone() * &a2 / &k(3));
    let c = k(2) * &a2 * &a2 * &a2 / &k(27) - &(a2.clone() * &a1 / &k(3)) + &a0;
    let half_c = c.clone() / &k(2);
    let y = if b.is_zero_elem() {
        t.transcript.push(format!(
            "depressed cubic Y^3 + ({c}); Y is the real cube root of {}",
            -c.clone()
        ));
        t.push(3, Expr::Num(-c.clone()))
    } else {
        let d = half_c.clone() * &half_c + &(b.clone() * &b * &b / &k(27));
        t.transcript.push(format!(
            "depressed cubic Y^3 + ({b})Y + ({c}); c^2/4 + b^3/27 = {d} > 0"
        ));
        let s = match d.sqrt() {
            Some(s) => Expr::Num(s),
            None => t.push(2, Expr::Num(d)),
        };
        // take the sign that avoids cancellation
        let radicand = if c.is_pos() {
            Expr::Num(-half_c) - s
        } else {
            Expr::Num(-half_c) + s
        };
        let w = t.push(3, radicand);
        t.transcript
            .push("Y = w - b/(3w) with w the real cube root".into());
        w.clone() - Expr::Num(b / &k(3)) / w
    };
    Ok(y - Expr::Num(shift))
}

/// Real radical tower for the real root of an irreducible cubic with
/// exactly one real root.
pub fn build_cubic_tower<K: Ground>(f: &Poly<K>) -> Result<RadicalTower<K>, TowerError> {
    let g = check_degree(f, 3)?;
    let mut t = RadicalTower::new(g.tag());
    t.root = cardano_into(&mut t, &g)?;
    Ok(t)
}

/// Picks the candidate whose enclosure midpoint is nearest `target`.
fn choose<K: Field>(
    t: &RadicalTower<K>,
    cands: [Expr<K>; 2],
    target: &Interval,
) -> Result<Expr<K>, TowerError> {
    let mut best: Option<(Rational, Expr<K>)> = None;
    for c in cands {
        let (iv, _, _) = t.enclose(&c, 2 * VERIFY_WIDTH_EXP)?;
        let dist = num_traits::Signed::abs(&(iv.midpoint() - target.midpoint()));
        if best.as_ref().is_none_or(|(d, _)| dist < *d) {
            best = Some((dist, c));
        }
    }
    Ok(best.expect("two candidates").1)
}

/// `√e` as a new step, or exactly when `e` is a square in the ground field.
fn sqrt_step<K: Ground>(t: &mut RadicalTower<K>, e: Expr<K>) -> Expr<K> {
    if let Some(s) = e.as_num().and_then(Field::sqrt) {
        return Expr::Num(s);
    }
    t.push(2, e)
}

/// Real radical towers for the two real roots (ascending) of an irreducible
/// quartic with exactly two real roots `α < β`.
///
/// With `γ, δ` the complex pair, `r = αβ + γδ` is the unique real root of
/// the resolvent cubic. Then `αβ` is a root of `Z² − rZ + d`, `α + β` of
/// `Z² + aZ + (b − r)`, and `α, β` of `Z² − (α+β)Z + αβ`; each choice of
/// branch is made by comparing with the isolated roots.
pub fn build_quartic_tower<K: Ground>(f: &Poly<K>) -> Result<[RadicalTower<K>; 2], TowerError> {
    let g = check_degree(f, 4)?;
    let tag = g.tag();
    let k = |n: i64| K::from_int(tag, n);
    let real = isolate_real_roots(&g, 2 * VERIFY_WIDTH_EXP + 10)
        .map_err(|e| TowerError::Poly(e.to_string()))?;
    if real.len() != 2 {
        return Err(TowerError::RealRootCount {
            expected: 2,
            found: real.len(),
        });
    }
    let (ia, ib) = (real[0].to_interval(), real[1].to_interval());
    let res = quartic_resolvent_cubic(&g).map_err(|e| TowerError::Poly(e.to_string()))?;
    let res_real = isolate_real_roots(&res, 8).map_err(|e| TowerError::Poly(e.to_string()))?;
    if res_real.len() != 1 {
        return Err(TowerError::ResolventRealRoots(res_real.len()));
    }
    let mut t = RadicalTower::new(tag);
    t.transcript.push(format!(
        "resolvent cubic {} has one real root r",
        K::render(&res)
    ));
    let r = match K::root_in_field(&res) {
        Some(r) => {
            t.transcript.push(format!("r = {r} lies in {tag}"));
            Expr::Num(r)
        }
        None => {
            t.transcript.push("r is built by Cardano's formula".into());
            cardano_into(&mut t, &res)?
        }
    };
    let (a, b, d) = (g.coeff(3), g.coeff(2), g.coeff(0));
    let two = Expr::Num(k(2));
    let four = Expr::Num(k(4));

    let s1 = sqrt_step(
        &mut t,
        r.clone() * r.clone() - four.clone() * Expr::Num(d.clone()),
    );
    let prod = choose(
        &t,
        [
            (r.clone() + s1.clone()) / two.clone(),
            (r.clone() - s1) / two.clone(),
        ],
        &ia.mul(&ib),
    )?;
    t.transcript
        .push("alpha*beta is a root of Z^2 - rZ + d".into());

    let v = Expr::Num(-a.clone());
    let s2 = sqrt_step(
        &mut t,
        v.clone() * v.clone() - four.clone() * (Expr::Num(b) - r),
    );
    let sum = choose(
        &t,
        [
            (v.clone() + s2.clone()) / two.clone(),
            (v - s2) / two.clone(),
        ],
        &ia.add(&ib),
    )?;
    t.transcript
        .push("alpha+beta is a root of Z^2 + aZ + (b - r)".into());

    let s3 = sqrt_step(&mut t, sum.clone() * sum.clone() - four * prod);
    t.transcript
        .push("alpha, beta are the roots of Z^2 - (alpha+beta)Z + alpha*beta".into());
    let lo = (sum.clone() - s3.clone()) / two.clone();
    let hi = (sum + s3) / two;
    let mut low = t.clone();
    low.root = lo;
    t.root = hi;
    Ok([low, t])
}
