use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Field, QuadFieldElem, QuadraticField, Rational, RationalField};
use crate::interval::Interval;

/// Dense univariate polynomial; `coeffs[i]` multiplies `X^i`.
///
/// The zero polynomial has no coefficients. Trailing zeros are stripped on
/// construction, so the last coefficient is always the leading one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<K: Field> {
    tag: K::Tag,
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn new(tag: K::Tag, coeffs: Vec<K>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.tag() == tag));
        let mut p = Self { tag, coeffs };
        p.trim();
        p
    }

    pub fn zero(tag: K::Tag) -> Self {
        Self {
            tag,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: K) -> Self {
        let tag = c.tag();
        Self::new(tag, vec![c])
    }

    pub fn one(tag: K::Tag) -> Self {
        Self::constant(K::one_of(tag))
    }

    /// The indeterminate `X`.
    pub fn x(tag: K::Tag) -> Self {
        Self::new(tag, vec![K::zero_of(tag), K::one_of(tag)])
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        let tag = c.tag();
        let mut coeffs = vec![K::zero_of(tag); deg];
        coeffs.push(c);
        Self::new(tag, coeffs)
    }

    pub fn from_rationals(tag: K::Tag, coeffs: &[Rational]) -> Self {
        Self::new(
            tag,
            coeffs
                .iter()
                .map(|c| K::from_rational(tag, c.clone()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            self.coeffs.pop();
        }
    }

    pub fn tag(&self) -> K::Tag {
        self.tag
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| K::zero_of(self.tag))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for loop bounds.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> K {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| K::zero_of(self.tag))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .is_some_and(|c| *c == K::one_of(self.tag))
    }

    fn check_tag(&self, other: &Self) -> Result<(), ArithError> {
        if self.tag == other.tag {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch(
                self.tag.to_string(),
                other.tag.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_tag(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + &other.coeff(i)).collect();
        Ok(Self::new(self.tag, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_tag(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - &other.coeff(i)).collect();
        Ok(Self::new(self.tag, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_tag(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.tag));
        }
        let mut coeffs = vec![K::zero_of(self.tag); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.clone() * b;
                coeffs[i + j] = coeffs[i + j].clone() + &t;
            }
        }
        Ok(Self::new(self.tag, coeffs))
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        self.check_tag(divisor)?;
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = divisor.deg();
        let lead_inv = divisor.lead().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.tag), self.clone()));
        }
        let mut quot = vec![K::zero_of(self.tag); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * &lead_inv;
            if !c.is_zero_elem() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let t = c.clone() * b;
                    rem[k + j] = rem[k + j].clone() - &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(self.tag, quot), Self::new(self.tag, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, ArithError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `true` when `divisor` divides `self` exactly.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        matches!(self.div_rem(divisor), Ok((_, r)) if r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_tag(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(
            self.tag,
            self.coeffs.iter().map(|a| a.clone() * c).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * &K::from_int(self.tag, i as i64))
            .collect();
        Self::new(self.tag, coeffs)
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero_of(self.tag), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> K {
        self.eval(&K::from_rational(self.tag, x.clone()))
    }

    /// Sign of `self(x)` at a rational point, exactly.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.eval_rational(x).sign()
    }

    /// Interval Horner evaluation, outward-rounded at `prec` after each step.
    pub fn eval_interval(&self, x: &Interval, prec: u32) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&c.to_interval(prec + 8)).rounded(prec);
        }
        acc
    }

    /// `self(X + k)` by repeated synthetic division (Taylor shift).
    pub fn shift(&self, k: &K) -> Self {
        let n = self.coeffs.len();
        let mut c = self.coeffs.clone();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].clone() * k;
                c[j] = c[j].clone() + &t;
            }
        }
        Self::new(self.tag, c)
    }

    /// `self(c·X)`.
    pub fn scale_arg(&self, c: &K) -> Self {
        let mut pw = K::one_of(self.tag);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &pw);
            pw = pw * c;
        }
        Self::new(self.tag, out)
    }

    /// `self(g(X))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(self.tag);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.tag);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `f / gcd(f, f')`, monic: the distinct roots of `f` without multiplicity.
    pub fn squarefree_part(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Self::one(self.tag));
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.div_rem(&g)?.0.monic())
    }

    pub fn is_squarefree(&self) -> bool {
        match self.gcd(&self.derivative()) {
            Ok(g) => g.is_constant(),
            Err(_) => false,
        }
    }

    /// Resultant via the Euclidean remainder sequence over the field.
    pub fn resultant(&self, other: &Self) -> Result<K, ArithError> {
        self.check_tag(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(K::zero_of(self.tag));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = K::one_of(self.tag);
        loop {
            let da = a.deg();
            let db = b.deg();
            if db == 0 {
                return Ok(acc * &b.lead().powu(da as u32));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(K::zero_of(self.tag));
            }
            let dr = r.deg();
            // Res(a, b) = (-1)^(da·db) · lc(b)^(da - dr) · Res(b, r)
            let mut factor = b.lead().powu((da - dr) as u32);
            if (da * db) % 2 == 1 {
                factor = -factor;
            }
            acc = acc * &factor;
            a = b;
            b = r;
        }
    }

    /// `(-1)^(n(n-1)/2) · Res(f, f') / lc(f)`.
    ///
    /// For `X³ + bX + c` this is `-4b³ - 27c²`.
    pub fn discriminant(&self) -> Result<K, ArithError> {
        let n = self.deg();
        if self.is_zero() || n < 2 {
            return Err(ArithError::DegreeTooSmall {
                found: n,
                required: 2,
            });
        }
        let res = self.resultant(&self.derivative())?;
        let mut d = res / &self.lead();
        if (n * (n - 1) / 2) % 2 == 1 {
            d = -d;
        }
        Ok(d)
    }

    pub fn map<L: Field>(&self, tag: L::Tag, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::new(tag, self.coeffs.iter().map(f).collect())
    }

    /// Rational copy of the polynomial when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly<Rational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(RationalField, coeffs))
    }

    /// Rational bound on the absolute value of every real root
    /// (Cauchy: `1 + max|a_i| / |a_n|`).
    pub fn cauchy_bound(&self) -> Rational {
        if self.is_constant() {
            return Rational::one();
        }
        let lead = self.lead();
        // |a_i / a_n| is bounded using a rational lower bound on |a_n|.
        let lead_lower = abs_lower_bound(&lead);
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs_upper_bound())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max / lead_lower
    }
}

/// Rational `0 < L ≤ |c|` for nonzero `c`.
fn abs_lower_bound<K: Field>(c: &K) -> Rational {
    if let Some(r) = c.as_rational() {
        return r.abs();
    }
    let mut prec = 16;
    loop {
        let i = c.to_interval(prec);
        if i.is_positive() {
            return i.lo().clone();
        }
        if i.is_negative() {
            return -i.hi().clone();
        }
        prec *= 2;
    }
}

impl Poly<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            RationalField,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Scales to an integer polynomial with content 1 and positive leading
    /// coefficient; returns the integer coefficients.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    pub fn primitive(&self) -> Self {
        Self::new(
            RationalField,
            self.primitive_integer_coeffs()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    pub fn lift_to(&self, field: QuadraticField) -> Poly<QuadFieldElem> {
        self.map(field, |c| QuadFieldElem::from_rational(field, c.clone()))
    }
}

impl Poly<QuadFieldElem> {
    /// Coefficient-wise Galois conjugate.
    pub fn conjugate(&self) -> Self {
        self.map(self.tag, |c| c.conjugate())
    }

    /// `f · f̄`, which has rational coefficients.
    pub fn norm(&self) -> Poly<Rational> {
        (self * &self.conjugate())
            .to_rational()
            .expect("norm of a polynomial over Q(sqrt d) is rational")
    }
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        self.checked_add(rhs).expect("polynomial field mismatch")
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        self.checked_sub(rhs).expect("polynomial field mismatch")
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        self.checked_mul(rhs).expect("polynomial field mismatch")
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::new(self.tag, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<K: Field> fmt::Display for Poly<K>
where
    Poly<K>: super::parse::DisplayTerms,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::parse::DisplayTerms::write_terms(self, f)
    }
}
