//! Irreducibility certificates over Q and over real quadratic fields.
//!
//! The cascade is sound but incomplete: every `Irreducible` answer names a
//! method whose hypotheses can be re-checked with [`IrreducibilityCertificate::verify`],
//! and anything the cascade cannot settle is reported as `Unknown`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::integer::{divisors, factor_u64, is_prime, primes_up_to, small_prime_divisors};
use super::{is_pth_power, ArithError, Field, Poly, QuadFieldElem, Rational, RationalField};

/// Eisenstein is tried on `f(X + k)` for `|k| ≤ EISENSTEIN_SHIFT_BOUND`.
pub const EISENSTEIN_SHIFT_BOUND: i64 = 10;
/// Reductions modulo primes up to this bound are tested.
pub const MOD_P_PRIME_BOUND: u64 = 100;
/// Rational-root candidate lists longer than this are not enumerated.
const MAX_ROOT_CANDIDATES: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum IrreducibilityMethod {
    /// Degree one.
    Linear,
    /// Degree 2 or 3 with no root in the coefficient field.
    RationalRootAbsentDegreeLe3,
    Eisenstein {
        prime: u64,
        shift: i64,
    },
    ModPIrreducible {
        prime: u64,
    },
    /// Degree 4, no rational root and no factorization into integer quadratics.
    QuarticExhaustive,
    /// `X^p - a` with `p` prime and `a` not a `p`-th power.
    BinomialPthPower {
        p: u64,
    },
    /// Over `Q(√d)`: the norm `f·f̄` is irreducible over Q.
    NormIrreducible {
        norm_method: Box<IrreducibilityMethod>,
    },
    /// Over `Q(√d)`: rational coefficients, odd degree, irreducible over Q.
    OddDegreeRational {
        rational_method: Box<IrreducibilityMethod>,
    },
}

impl fmt::Display for IrreducibilityMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Linear => f.write_str("degree 1"),
            Self::RationalRootAbsentDegreeLe3 => f.write_str("no root in the field, degree <= 3"),
            Self::Eisenstein { prime, shift } => {
                write!(f, "Eisenstein at p={prime}, shift {shift}")
            }
            Self::ModPIrreducible { prime } => write!(f, "irreducible mod {prime}"),
            Self::QuarticExhaustive => f.write_str("exhaustive quadratic-factor search"),
            Self::BinomialPthPower { p } => write!(f, "binomial X^{p} - a, a not a {p}-th power"),
            Self::NormIrreducible { norm_method } => {
                write!(f, "norm polynomial irreducible ({norm_method})")
            }
            Self::OddDegreeRational { rational_method } => {
                write!(f, "odd degree, irreducible over Q ({rational_method})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityStatus<K: Field> {
    Irreducible(IrreducibilityMethod),
    /// A nontrivial factor of the input.
    Reducible(Poly<K>),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityCertificate<K: Field> {
    pub poly: Poly<K>,
    pub status: IrreducibilityStatus<K>,
}

impl<K: Field> IrreducibilityCertificate<K> {
    pub fn is_irreducible(&self) -> bool {
        matches!(self.status, IrreducibilityStatus::Irreducible(_))
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self.status, IrreducibilityStatus::Reducible(_))
    }

    pub fn method(&self) -> Option<&IrreducibilityMethod> {
        match &self.status {
            IrreducibilityStatus::Irreducible(m) => Some(m),
            _ => None,
        }
    }

    fn factor_divides(&self) -> bool {
        match &self.status {
            IrreducibilityStatus::Reducible(g) => {
                g.deg() >= 1 && g.deg() < self.poly.deg() && self.poly.divisible_by(g)
            }
            _ => true,
        }
    }
}

impl IrreducibilityCertificate<Rational> {
    /// Re-checks the stored claim from scratch.
    pub fn verify(&self) -> bool {
        match &self.status {
            IrreducibilityStatus::Unknown => true,
            IrreducibilityStatus::Reducible(_) => self.factor_divides(),
            IrreducibilityStatus::Irreducible(m) => check_rational_method(&self.poly, m),
        }
    }
}

impl IrreducibilityCertificate<QuadFieldElem> {
    pub fn verify(&self) -> bool {
        let f = &self.poly;
        match &self.status {
            IrreducibilityStatus::Unknown => true,
            IrreducibilityStatus::Reducible(_) => self.factor_divides(),
            IrreducibilityStatus::Irreducible(m) => match m {
                IrreducibilityMethod::Linear => f.deg() == 1,
                IrreducibilityMethod::RationalRootAbsentDegreeLe3 => {
                    f.deg() == 2 && quadratic_root_in_field(f).is_none()
                }
                IrreducibilityMethod::NormIrreducible { norm_method } => {
                    check_rational_method(&f.norm(), norm_method)
                }
                IrreducibilityMethod::OddDegreeRational { rational_method } => {
                    f.deg() % 2 == 1
                        && f.to_rational()
                            .is_some_and(|g| check_rational_method(&g, rational_method))
                }
                _ => false,
            },
        }
    }
}

fn check_rational_method(f: &Poly<Rational>, m: &IrreducibilityMethod) -> bool {
    let n = f.deg();
    let ints = f.primitive_integer_coeffs();
    match m {
        IrreducibilityMethod::Linear => n == 1,
        IrreducibilityMethod::RationalRootAbsentDegreeLe3 => {
            (2..=3).contains(&n) && matches!(rational_root(&ints), RootSearch::NoRoot)
        }
        IrreducibilityMethod::Eisenstein { prime, shift } => {
            n >= 1 && {
                let shifted = f.shift(&Rational::from_integer(BigInt::from(*shift)));
                eisenstein_holds(&shifted.primitive_integer_coeffs(), *prime)
            }
        }
        IrreducibilityMethod::ModPIrreducible { prime } => {
            is_prime(*prime) && irreducible_mod_p(&ints, *prime) == Some(true)
        }
        IrreducibilityMethod::QuarticExhaustive => {
            n == 4
                && matches!(rational_root(&ints), RootSearch::NoRoot)
                && matches!(quartic_quadratic_factor(&ints), QuadSearch::None)
        }
        IrreducibilityMethod::BinomialPthPower { p } => binomial_check(f) == Some((*p, true)),
        _ => false,
    }
}

/// Irreducibility certificate for a nonconstant polynomial over Q.
pub fn irreducibility_certificate(
    f: &Poly<Rational>,
) -> Result<IrreducibilityCertificate<Rational>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(ArithError::ConstantPolynomial);
    }
    let status = rational_status(f);
    Ok(IrreducibilityCertificate {
        poly: f.clone(),
        status,
    })
}

fn rational_status(f: &Poly<Rational>) -> IrreducibilityStatus<Rational> {
    use IrreducibilityStatus::*;
    let n = f.deg();
    if n == 1 {
        return Irreducible(IrreducibilityMethod::Linear);
    }
    let ints = f.primitive_integer_coeffs();

    let roots = rational_root(&ints);
    if let RootSearch::Root(r) = &roots {
        let factor = Poly::new(RationalField, vec![-r.clone(), Rational::one()]);
        return Reducible(factor.primitive());
    }
    let no_root = matches!(roots, RootSearch::NoRoot);

    if let Some((p, true)) = binomial_check(f) {
        return Irreducible(IrreducibilityMethod::BinomialPthPower { p });
    }

    for k in shift_order() {
        let shifted = f.shift(&Rational::from_integer(BigInt::from(k)));
        let c = shifted.primitive_integer_coeffs();
        let content = c[..c.len() - 1]
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for p in small_prime_divisors(&content) {
            if eisenstein_holds(&c, p) {
                return Irreducible(IrreducibilityMethod::Eisenstein { prime: p, shift: k });
            }
        }
    }

    if n <= 3 && no_root {
        return Irreducible(IrreducibilityMethod::RationalRootAbsentDegreeLe3);
    }

    if n == 4 && no_root {
        match quartic_quadratic_factor(&ints) {
            QuadSearch::Factor(g) => return Reducible(g),
            QuadSearch::None => return Irreducible(IrreducibilityMethod::QuarticExhaustive),
            QuadSearch::Incomplete => {}
        }
    }

    for p in primes_up_to(MOD_P_PRIME_BOUND) {
        if irreducible_mod_p(&ints, p) == Some(true) {
            return Irreducible(IrreducibilityMethod::ModPIrreducible { prime: p });
        }
    }
    Unknown
}

/// `0, 1, -1, 2, -2, …` up to the shift bound.
fn shift_order() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=EISENSTEIN_SHIFT_BOUND).flat_map(|k| [k, -k]))
}

fn eisenstein_holds(c: &[BigInt], p: u64) -> bool {
    let Some((lead, rest)) = c.split_last() else {
        return false;
    };
    if rest.is_empty() {
        return false;
    }
    let p = BigInt::from(p);
    let p2 = &p * &p;
    !(lead % &p).is_zero() && rest.iter().all(|a| (a % &p).is_zero()) && !(&rest[0] % &p2).is_zero()
}

/// `Some((p, irreducible))` when `f` is a binomial `c·(X^p - a)` of prime degree.
fn binomial_check(f: &Poly<Rational>) -> Option<(u64, bool)> {
    let n = f.deg();
    let c = f.coeffs();
    if n < 2 || c[1..n].iter().any(|x| !x.is_zero()) || c[0].is_zero() {
        return None;
    }
    let p = n as u64;
    if !is_prime(p) {
        return None;
    }
    let a = -(&c[0] / &c[n]);
    Some((p, is_pth_power(&a, n as u32).is_none()))
}

enum RootSearch {
    Root(Rational),
    NoRoot,
    /// Candidate list could not be formed (large unfactored coefficients).
    Incomplete,
}

fn rational_root(ints: &[BigInt]) -> RootSearch {
    if ints[0].is_zero() {
        return RootSearch::Root(Rational::zero());
    }
    let (Some(num), Some(den)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return RootSearch::Incomplete;
    };
    if num.len().saturating_mul(den.len()) > MAX_ROOT_CANDIDATES {
        return RootSearch::Incomplete;
    }
    let f = Poly::new(
        RationalField,
        ints.iter().cloned().map(Rational::from_integer).collect(),
    );
    let bound = f.cauchy_bound();
    let mut cands: Vec<Rational> = Vec::new();
    for q in &den {
        for p in &num {
            let r = Rational::new(p.clone(), q.clone());
            if r <= bound && r.denom() == q {
                cands.push(r.clone());
                cands.push(-r);
            }
        }
    }
    cands.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    for r in cands {
        if f.eval(&r).is_zero() {
            return RootSearch::Root(r);
        }
    }
    RootSearch::NoRoot
}

/// All distinct rational roots, or `None` when a coefficient is too large
/// to enumerate candidates.
pub fn rational_roots(f: &Poly<Rational>) -> Option<Vec<Rational>> {
    let mut g = f.squarefree_part().ok()?;
    let mut out = Vec::new();
    while g.deg() >= 1 {
        let ints: Vec<BigInt> = g.primitive_integer_coeffs();
        match rational_root(&ints) {
            RootSearch::Root(r) => {
                let lin = Poly::new(RationalField, vec![-r.clone(), Rational::one()]);
                g = g.div_rem(&lin).ok()?.0;
                out.push(r);
            }
            RootSearch::NoRoot => break,
            RootSearch::Incomplete => return None,
        }
    }
    out.sort();
    Some(out)
}

enum QuadSearch {
    Factor(Poly<Rational>),
    None,
    Incomplete,
}

/// Searches for a monic integer quadratic factor of the monic transform
/// `lead³·f(X/lead)` of a quartic without rational roots.
fn quartic_quadratic_factor(ints: &[BigInt]) -> QuadSearch {
    let lead = ints[4].clone();
    // F(X) = X⁴ + F3 X³ + F2 X² + F1 X + F0
    let f3 = ints[3].clone();
    let f2 = &ints[2] * &lead;
    let f1 = &ints[1] * &lead * &lead;
    let f0 = &ints[0] * &lead * &lead * &lead;
    let Some(divs) = divisors(&f0) else {
        return QuadSearch::Incomplete;
    };
    let monic = Poly::new(
        RationalField,
        [&f0, &f1, &f2, &f3, &BigInt::one()]
            .iter()
            .map(|c| Rational::from_integer((*c).clone()))
            .collect(),
    );
    for d0 in divs.iter().flat_map(|d| [d.clone(), -d.clone()]) {
        let e0 = &f0 / &d0;
        // (X² + aX + d0)(X² + cX + e0): a + c = F3, ac = F2 - d0 - e0, a·e0 + c·d0 = F1.
        let mut a_cands = Vec::new();
        if d0 != e0 {
            let num = &f1 - &d0 * &f3;
            let den = &e0 - &d0;
            if (&num % &den).is_zero() {
                a_cands.push(num / den);
            }
        } else if &d0 * &f3 == f1 {
            let prod = &f2 - &d0 - &e0;
            let disc = &f3 * &f3 - BigInt::from(4) * &prod;
            if !disc.is_negative() {
                let s = disc.sqrt();
                if &s * &s == disc && (&f3 + &s).is_even() {
                    a_cands.push((&f3 + &s) / 2);
                }
            }
        }
        for a in a_cands {
            let g = Poly::new(
                RationalField,
                vec![
                    Rational::from_integer(d0.clone()),
                    Rational::from_integer(a),
                    Rational::one(),
                ],
            );
            if monic.divisible_by(&g) {
                // g(lead·X) divides f up to a constant.
                let back = g.scale_arg(&Rational::from_integer(lead.clone()));
                return QuadSearch::Factor(back.primitive());
            }
        }
    }
    QuadSearch::None
}

/// Rabin's test on the reduction modulo `p`; `None` when `p` divides the
/// leading coefficient.
fn irreducible_mod_p(ints: &[BigInt], p: u64) -> Option<bool> {
    let pb = BigInt::from(p);
    let mut f: Vec<u64> = ints
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect();
    if *f.last()? == 0 {
        return None;
    }
    let n = f.len() - 1;
    let inv = fp::inv(*f.last().unwrap(), p);
    for c in f.iter_mut() {
        *c = *c * inv % p;
    }
    let x = vec![0, 1];
    // frob[k] = X^(p^k) mod f
    let mut frob = vec![fp::rem(&x, &f, p)];
    for _ in 0..n {
        let next = fp::powmod(frob.last().unwrap(), p, &f, p);
        frob.push(next);
    }
    if fp::trim(frob[n].clone()) != fp::trim(fp::rem(&x, &f, p)) {
        return Some(false);
    }
    for (q, _) in factor_u64(n as u64) {
        let h = fp::sub(&frob[n / q as usize], &x, p);
        if fp::gcd(&h, &f, p).len() > 1 {
            return Some(false);
        }
    }
    Some(true)
}

/// Dense polynomials over F_p as coefficient vectors, low degree first.
mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        crate::arith::integer::mod_pow(a, p - 2, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let li = inv(m[dm], p);
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let c = r[r.len() - 1] * li % p;
            for (i, &mi) in m.iter().enumerate() {
                r[k + i] = (r[k + i] + p - c * mi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(a, m, p);
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base, p), m, p);
            }
            base = rem(&mul(&base, &base, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Monic gcd; the empty vector stands for zero.
    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        if let Some(&l) = a.last() {
            let li = inv(l, p);
            for c in a.iter_mut() {
                *c = *c * li % p;
            }
        }
        a
    }
}

/// Irreducibility certificate over a real quadratic field `Q(√d)`.
pub fn quadratic_irreducibility_certificate(
    f: &Poly<QuadFieldElem>,
) -> Result<IrreducibilityCertificate<QuadFieldElem>, ArithError> {
    use IrreducibilityStatus::*;
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(ArithError::ConstantPolynomial);
    }
    let cert = |status| {
        Ok(IrreducibilityCertificate {
            poly: f.clone(),
            status,
        })
    };
    let field = f.tag();
    let n = f.deg();
    if n == 1 {
        return cert(Irreducible(IrreducibilityMethod::Linear));
    }
    if n == 2 {
        return cert(match quadratic_root_in_field(f) {
            Some(r) => Reducible(Poly::new(field, vec![-r, QuadFieldElem::one_of(field)])),
            None => Irreducible(IrreducibilityMethod::RationalRootAbsentDegreeLe3),
        });
    }
    if let Some(g) = f.to_rational() {
        let over_q = irreducibility_certificate(&g)?;
        match over_q.status {
            Reducible(h) => return cert(Reducible(h.lift_to(field))),
            Irreducible(m) if n % 2 == 1 => {
                return cert(Irreducible(IrreducibilityMethod::OddDegreeRational {
                    rational_method: Box::new(m),
                }))
            }
            _ => {}
        }
    }
    let norm = f.norm();
    let norm_cert = irreducibility_certificate(&norm)?;
    if let Irreducible(m) = &norm_cert.status {
        return cert(Irreducible(IrreducibilityMethod::NormIrreducible {
            norm_method: Box::new(m.clone()),
        }));
    }
    // A rational root of f is a rational root of its norm.
    if let RootSearch::Root(r) = rational_root(&norm.primitive_integer_coeffs()) {
        let rq = QuadFieldElem::from_rational(field, r);
        if f.eval(&rq).is_zero_elem() {
            return cert(Reducible(Poly::new(
                field,
                vec![-rq, QuadFieldElem::one_of(field)],
            )));
        }
    }
    cert(Unknown)
}

/// A root in the field of a quadratic, via the discriminant's square root.
fn quadratic_root_in_field<K: Field>(f: &Poly<K>) -> Option<K> {
    let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    let four = K::from_int(f.tag(), 4);
    let two = K::from_int(f.tag(), 2);
    let disc = b.clone() * &b - &(four * &a * &c);
    let s = disc.sqrt()?;
    Some((-b + &s) / &(two * &a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly_quadratic, parse_poly_rational, QuadraticField};

    fn cert(s: &str) -> IrreducibilityCertificate<Rational> {
        irreducibility_certificate(&parse_poly_rational(s).unwrap()).unwrap()
    }

    #[test]
    fn eisenstein_examples() {
        let c = cert("x^3 - 6x + 2");
        assert_eq!(
            c.status,
            IrreducibilityStatus::Irreducible(IrreducibilityMethod::Eisenstein {
                prime: 2,
                shift: 0
            })
        );
        assert!(c.verify());
        let c = cert("(x^3 - 3x + 3)^2 - 3");
        assert_eq!(
            c.status,
            IrreducibilityStatus::Irreducible(IrreducibilityMethod::Eisenstein {
                prime: 3,
                shift: 0
            })
        );
        // x^2 + x + 1 = Φ3 is Eisenstein at 3 after X -> X + 1.
        let c = cert("x^2 + x + 1");
        assert_eq!(
            c.method(),
            Some(&IrreducibilityMethod::Eisenstein { prime: 3, shift: 1 })
        );
        assert!(c.verify());
    }

    #[test]
    fn reducible_examples() {
        let c = cert("x^4 - 1");
        assert_eq!(
            c.status,
            IrreducibilityStatus::Reducible(Poly::from_ints(&[-1, 1]))
        );
        assert!(c.verify());
        let c = cert("x^4 + 4");
        assert!(c.is_reducible() && c.verify());
        let c = cert("(x^2 - 2)(x^2 - 3)");
        match &c.status {
            IrreducibilityStatus::Reducible(g) => assert_eq!(g.deg(), 2),
            s => panic!("{s:?}"),
        }
        assert!(c.verify());
        let c = cert("(3x^2 + 1)(5x^2 - 7)");
        assert!(c.is_reducible() && c.verify());
        assert!(cert("x^3 - x").is_reducible());
    }

    #[test]
    fn other_methods() {
        assert_eq!(
            cert("x^3 - 2").method(),
            Some(&IrreducibilityMethod::BinomialPthPower { p: 3 })
        );
        let c = cert("x^3 - 4");
        assert_eq!(
            c.method(),
            Some(&IrreducibilityMethod::BinomialPthPower { p: 3 })
        );
        assert!(c.verify());
        let c = cert("x^3 + x + 1");
        assert_eq!(
            c.method(),
            Some(&IrreducibilityMethod::RationalRootAbsentDegreeLe3)
        );
        assert!(c.verify());
        let c = cert("x^4 - x - 1");
        assert!(c.is_irreducible() && c.verify());
        let c = cert("x^4 - 10x^2 + 1");
        assert_eq!(c.method(), Some(&IrreducibilityMethod::QuarticExhaustive));
        assert!(c.verify());
        assert!(cert("x^8 - x - 1").is_irreducible());
        assert_eq!(cert("2x + 3").method(), Some(&IrreducibilityMethod::Linear));
    }

    #[test]
    fn rabin_over_small_primes() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(irreducible_mod_p(&ints(&[1, 1, 1]), 2), Some(true));
        assert_eq!(irreducible_mod_p(&ints(&[1, 0, 1]), 2), Some(false));
        assert_eq!(irreducible_mod_p(&ints(&[1, 1, 0, 1]), 2), Some(true));
        // x^4 + 1 splits mod every prime.
        for p in primes_up_to(30) {
            assert_eq!(irreducible_mod_p(&ints(&[1, 0, 0, 0, 1]), p), Some(false));
        }
        assert_eq!(irreducible_mod_p(&ints(&[1, 2]), 2), None);
    }

    #[test]
    fn tampered_certificates_fail() {
        let mut c = cert("x^3 - 6x + 2");
        c.status = IrreducibilityStatus::Irreducible(IrreducibilityMethod::Eisenstein {
            prime: 3,
            shift: 0,
        });
        assert!(!c.verify());
        c.status = IrreducibilityStatus::Reducible(Poly::from_ints(&[-1, 1]));
        assert!(!c.verify());
        c.status = IrreducibilityStatus::Irreducible(IrreducibilityMethod::QuarticExhaustive);
        assert!(!c.verify());
    }

    #[test]
    fn errors() {
        assert_eq!(
            irreducibility_certificate(&Poly::from_ints(&[3])),
            Err(ArithError::ConstantPolynomial)
        );
        assert_eq!(
            irreducibility_certificate(&Poly::zero(RationalField)),
            Err(ArithError::ZeroPolynomial)
        );
    }

    #[test]
    fn over_quadratic_field() {
        let k = QuadraticField::new(3).unwrap();
        let u = parse_poly_quadratic("x^3 - 3x + 3 + sqrt(3)", k).unwrap();
        let c = quadratic_irreducibility_certificate(&u).unwrap();
        assert!(matches!(
            c.method(),
            Some(IrreducibilityMethod::NormIrreducible { .. })
        ));
        assert!(c.verify());
        let g = parse_poly_quadratic("x^2 - 3", k).unwrap();
        let c = quadratic_irreducibility_certificate(&g).unwrap();
        assert!(c.is_reducible() && c.verify());
        let h = parse_poly_quadratic("x^2 - 2", k).unwrap();
        assert!(quadratic_irreducibility_certificate(&h)
            .unwrap()
            .is_irreducible());
        let odd = parse_poly_quadratic("x^3 - 2", k).unwrap();
        let c = quadratic_irreducibility_certificate(&odd).unwrap();
        assert!(matches!(
            c.method(),
            Some(IrreducibilityMethod::OddDegreeRational { .. })
        ));
        assert!(c.verify());
        // x^4 - 9 = (x^2 - 3)(x^2 + 3) over Q already.
        let r = parse_poly_quadratic("x^4 - 9", k).unwrap();
        assert!(quadratic_irreducibility_certificate(&r)
            .unwrap()
            .is_reducible());
    }
}
