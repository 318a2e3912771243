//! Real-root counting and isolation with Sturm sequences.
//!
//! Works over any [`Field`]: signs of polynomial values at rational points
//! are decided exactly, so the same code handles `Q` and `Q(√d)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::arith::{ArithError, Field, Poly, Rational};
use crate::interval::{Interval, IntervalJson};

/// Default isolation width exponent: intervals are narrowed below `2^-20`.
pub const DEFAULT_WIDTH_EXP: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("the zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("empty interval: lower bound {0} is not below upper bound {1}")]
    EmptyInterval(String, String),
    #[error("interval does not isolate a single root")]
    NotIsolating,
}

impl From<ArithError> for RootError {
    fn from(_: ArithError) -> Self {
        RootError::ZeroPolynomial
    }
}

/// The standard chain `f, f', -rem(f, f'), …` ending in a nonzero constant.
pub fn sturm_chain<K: Field>(f: &Poly<K>) -> Result<Vec<Poly<K>>, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !f.is_squarefree() {
        return Err(RootError::NotSquarefree);
    }
    let mut chain = vec![f.clone()];
    if f.is_constant() {
        return Ok(chain);
    }
    chain.push(f.derivative());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    debug_assert!(chain.last().unwrap().is_constant());
    Ok(chain)
}

/// A bound of a root search: a rational point or one of the infinities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

fn sign_at_bound<K: Field>(p: &Poly<K>, b: &Bound) -> Ordering {
    match b {
        Bound::At(x) => p.sign_at(x),
        Bound::PosInfinity => p.lead().sign(),
        Bound::NegInfinity => {
            let s = p.lead().sign();
            if p.deg() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }
    }
}

/// Sign changes along the chain at `b`, skipping zeros.
pub fn sign_variations<K: Field>(chain: &[Poly<K>], b: &Bound) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in chain {
        let s = sign_at_bound(p, b);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCount {
    /// Distinct real roots in the requested range.
    pub count: usize,
    /// True when the input had repeated factors and was reduced first.
    pub squarefree_reduced: bool,
}

/// Counts distinct real roots in `(lo, hi]`; absent bounds are infinite.
pub fn count_real_roots<K: Field>(
    f: &Poly<K>,
    lo: Option<&Rational>,
    hi: Option<&Rational>,
) -> Result<RootCount, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Err(RootError::EmptyInterval(a.to_string(), b.to_string()));
        }
    }
    let g = f.squarefree_part()?;
    let squarefree_reduced = g.deg() != f.deg();
    let chain = sturm_chain(&g)?;
    let lo = lo.map_or(Bound::NegInfinity, |x| Bound::At(x.clone()));
    let hi = hi.map_or(Bound::PosInfinity, |x| Bound::At(x.clone()));
    let count = sign_variations(&chain, &lo) - sign_variations(&chain, &hi);
    Ok(RootCount {
        count,
        squarefree_reduced,
    })
}

/// Number of distinct real roots on the whole line.
pub fn real_root_count<K: Field>(f: &Poly<K>) -> Result<usize, RootError> {
    Ok(count_real_roots(f, None, None)?.count)
}

/// Closed rational interval holding exactly one real root.
///
/// Either the polynomial changes sign strictly between the endpoints, or
/// `hi` is itself the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn to_interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn to_json(&self) -> IntervalJson {
        IntervalJson::from(&self.to_interval())
    }

    /// Re-checks that `f` changes sign on the interval or vanishes at `hi`,
    /// and that no other root lies inside.
    pub fn isolates<K: Field>(&self, f: &Poly<K>) -> bool {
        if self.lo >= self.hi {
            return false;
        }
        let g = match f.squarefree_part() {
            Ok(g) => g,
            Err(_) => return false,
        };
        let sl = g.sign_at(&self.lo);
        let sh = g.sign_at(&self.hi);
        let sign_ok = sh == Ordering::Equal || (sl != Ordering::Equal && sl != sh);
        let one = matches!(
            count_real_roots(&g, Some(&self.lo), Some(&self.hi)),
            Ok(RootCount { count: 1, .. })
        );
        sign_ok && one && sl != Ordering::Equal
    }
}

fn target_width(width_exp: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << width_exp as usize)
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Isolates every distinct real root, in increasing order, to width below
/// `2^-width_exp`.
pub fn isolate_real_roots<K: Field>(
    f: &Poly<K>,
    width_exp: u32,
) -> Result<Vec<IsolatingInterval>, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let g = f.squarefree_part()?;
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&g)?;
    let b = g.cauchy_bound();
    let mut out = Vec::new();
    // Work list of half-open (a, b] cells with their root counts.
    let count = |a: &Rational, b: &Rational| {
        sign_variations(&chain, &Bound::At(a.clone()))
            - sign_variations(&chain, &Bound::At(b.clone()))
    };
    let mut stack = vec![(-b.clone(), b.clone())];
    let mut found: Vec<(Rational, Rational)> = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match count(&lo, &hi) {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let m = half(&lo, &hi);
                stack.push((lo, m.clone()));
                stack.push((m, hi));
            }
        }
    }
    found.sort();
    let tw = target_width(width_exp);
    for (lo, hi) in found {
        out.push(refine_cell(&g, lo, hi, &tw));
    }
    Ok(out)
}

/// Narrows a cell `(lo, hi]` known to hold exactly one root of squarefree `g`.
fn refine_cell<K: Field>(
    g: &Poly<K>,
    mut lo: Rational,
    mut hi: Rational,
    tw: &Rational,
) -> IsolatingInterval {
    let s_hi = g.sign_at(&hi);
    if s_hi == Ordering::Equal {
        let w = std::cmp::min(
            tw.clone(),
            (&hi - &lo) / Rational::from_integer(BigInt::from(2)),
        );
        return IsolatingInterval { lo: &hi - w, hi };
    }
    while g.sign_at(&lo) == Ordering::Equal || &(&hi - &lo) > tw {
        let m = half(&lo, &hi);
        match g.sign_at(&m) {
            Ordering::Equal => {
                let w = std::cmp::min(
                    tw.clone(),
                    (&m - &lo) / Rational::from_integer(BigInt::from(2)),
                );
                return IsolatingInterval { lo: &m - w, hi: m };
            }
            s if s == s_hi => hi = m,
            _ => lo = m,
        }
    }
    IsolatingInterval { lo, hi }
}

/// Narrows an isolating interval of `f` to width below `2^-width_exp`.
pub fn refine<K: Field>(
    f: &Poly<K>,
    iv: &IsolatingInterval,
    width_exp: u32,
) -> Result<IsolatingInterval, RootError> {
    let g = f.squarefree_part()?;
    if !iv.isolates(&g) {
        return Err(RootError::NotIsolating);
    }
    Ok(refine_cell(
        &g,
        iv.lo.clone(),
        iv.hi.clone(),
        &target_width(width_exp),
    ))
}

/// `-2 < a < 2` under the real embedding: the condition for
/// `X³ - 3X + a` to have three real roots.
pub fn cubic_three_root_criterion<K: Field>(a: &K) -> bool {
    let two = K::from_int(a.tag(), 2);
    (a.clone() - &two).is_neg() && (a.clone() + &two).is_pos()
}

/// True when `x` is an exact rational root sitting at the top of `iv`.
pub fn exact_root<K: Field>(f: &Poly<K>, iv: &IsolatingInterval) -> Option<Rational> {
    f.eval_rational(&iv.hi)
        .is_zero_elem()
        .then(|| iv.hi.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_poly_quadratic, parse_poly_rational, rat, QuadraticField};

    fn p(s: &str) -> Poly<Rational> {
        parse_poly_rational(s).unwrap()
    }

    #[test]
    fn chains() {
        assert_eq!(
            sturm_chain(&p("x^2 - 2")).unwrap(),
            vec![p("x^2 - 2"), p("2x"), p("2")]
        );
        assert_eq!(sturm_chain(&p("x - 1")).unwrap(), vec![p("x - 1"), p("1")]);
        let c = sturm_chain(&p("x^3 - 3x + 3")).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c[3].is_constant());
        assert_eq!(sturm_chain(&p("(x-1)^2")), Err(RootError::NotSquarefree));
        assert_eq!(
            sturm_chain(&Poly::<Rational>::zero(crate::arith::RationalField)),
            Err(RootError::ZeroPolynomial)
        );
    }

    #[test]
    fn counts() {
        assert_eq!(real_root_count(&p("x^3 - 6x + 2")).unwrap(), 3);
        assert_eq!(real_root_count(&p("x^3 - 3x + 3")).unwrap(), 1);
        assert_eq!(real_root_count(&p("(x^3 - 3x + 3)^2 - 3")).unwrap(), 4);
        assert_eq!(real_root_count(&p("x^2 + 1")).unwrap(), 0);
        let c = count_real_roots(&p("(x-1)^2 (x+2)"), None, None).unwrap();
        assert_eq!(
            c,
            RootCount {
                count: 2,
                squarefree_reduced: true
            }
        );
        // (lo, hi] semantics
        let f = p("(x - 1)(x - 2)");
        assert_eq!(
            count_real_roots(&f, Some(&int(1)), Some(&int(2)))
                .unwrap()
                .count,
            1
        );
        assert_eq!(
            count_real_roots(&f, Some(&int(0)), Some(&int(1)))
                .unwrap()
                .count,
            1
        );
        assert!(matches!(
            count_real_roots(&f, Some(&int(2)), Some(&int(1))),
            Err(RootError::EmptyInterval(..))
        ));
    }

    #[test]
    fn isolation() {
        let ivs = isolate_real_roots(&p("x^2 - 2"), DEFAULT_WIDTH_EXP).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].hi < int(0) && ivs[1].lo > int(0));
        for iv in &ivs {
            assert!(iv.width() < rat(1, 1 << 20));
            let sq = &iv.lo * &iv.lo;
            assert!(sq > rat(19, 10) && sq < rat(21, 10));
            assert!(iv.isolates(&p("x^2 - 2")));
        }
        let ivs = isolate_real_roots(&p("x^3 - 3x + 3"), DEFAULT_WIDTH_EXP).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].lo > int(-3) && ivs[0].hi < int(-2));
        assert!(isolate_real_roots(&p("x^2 + 1"), 20).unwrap().is_empty());
    }

    #[test]
    fn exact_rational_roots() {
        let f = p("x (x - 1)(x + 1/2)");
        let ivs = isolate_real_roots(&f, 10).unwrap();
        assert_eq!(ivs.len(), 3);
        for iv in &ivs {
            assert!(iv.isolates(&f), "{iv:?}");
        }
        assert_eq!(exact_root(&f, &ivs[1]), Some(int(0)));
    }

    #[test]
    fn refinement() {
        let f = p("x^3 - 6x + 2");
        let ivs = isolate_real_roots(&f, 4).unwrap();
        let r = refine(&f, &ivs[2], 30).unwrap();
        assert!(r.width() < rat(1, 1 << 30));
        assert!(r.lo >= ivs[2].lo && r.hi <= ivs[2].hi);
    }

    #[test]
    fn criterion_examples() {
        let k = QuadraticField::new(3).unwrap();
        assert!(cubic_three_root_criterion(&k.elem(int(3), int(-1))));
        assert!(!cubic_three_root_criterion(&k.elem(int(3), int(1))));
        assert!(cubic_three_root_criterion(&int(0)));
        assert!(!cubic_three_root_criterion(&int(2)));
    }

    #[test]
    fn quadratic_field_counts() {
        let k = QuadraticField::new(3).unwrap();
        let u = parse_poly_quadratic("x^3 - 3x + 3 + sqrt(3)", k).unwrap();
        let v = parse_poly_quadratic("x^3 - 3x + 3 - sqrt(3)", k).unwrap();
        assert_eq!(real_root_count(&u).unwrap(), 1);
        assert_eq!(real_root_count(&v).unwrap(), 3);
        let ivs = isolate_real_roots(&v, 20).unwrap();
        assert_eq!(ivs.len(), 3);
        assert!(ivs.iter().all(|iv| iv.isolates(&v)));
    }
}
