//! Exact scalar and polynomial arithmetic over Q and real quadratic fields.
//!
//! Everything in this module is exact: rationals are kept reduced with a
//! positive denominator, elements of `Q(√d)` carry their `d`, and signs are
//! decided without floating point.

mod cyclotomic;
pub mod integer;
mod irreducible;
mod parse;
mod poly;
mod quadratic;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::cyclotomic_poly;
pub use irreducible::{
    irreducibility_certificate, quadratic_irreducibility_certificate, rational_roots,
    IrreducibilityCertificate, IrreducibilityMethod, IrreducibilityStatus, EISENSTEIN_SHIFT_BOUND,
    MOD_P_PRIME_BOUND,
};
pub use parse::{
    parse_poly, parse_poly_quadratic, parse_poly_rational, DisplayTerms, ParseError, ParseErrorKind,
};
pub use poly::Poly;
pub use quadratic::{QuadFieldElem, QuadraticField};

use crate::interval::Interval;

/// Reduced fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("coefficient fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {found} is below the required minimum {required}")]
    DegreeTooSmall { found: usize, required: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cyclotomic index must be positive")]
    ZeroCyclotomicIndex,
    #[error("{0} is not a squarefree integer greater than 1")]
    InvalidRadicand(u64),
    #[error("constant polynomial has no irreducibility certificate")]
    ConstantPolynomial,
}

/// A subfield of the reals in which all arithmetic is exact.
///
/// The `Tag` distinguishes otherwise identical types: for `Q(√d)` it is the
/// field itself, so that values of different quadratic fields never mix.
pub trait Field:
    Sized
    + Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    type Tag: Copy + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn tag(&self) -> Self::Tag;
    fn from_rational(tag: Self::Tag, r: Rational) -> Self;
    fn is_zero_elem(&self) -> bool;

    /// Sign under the real embedding.
    fn sign(&self) -> Ordering;

    fn as_rational(&self) -> Option<Rational>;

    /// `Some(s)` with `s·s = self` when a square root exists in this field.
    fn sqrt(&self) -> Option<Self>;

    /// `√n` as an element of the field, if it lies there.
    fn sqrt_of_integer(tag: Self::Tag, n: &BigInt) -> Option<Self>;

    /// A rational bound `B ≥ |self|`.
    fn abs_upper_bound(&self) -> Rational;

    /// An enclosing interval with endpoints on the dyadic grid `2^-prec`.
    fn to_interval(&self, prec: u32) -> Interval;

    fn zero_of(tag: Self::Tag) -> Self {
        Self::from_rational(tag, Rational::zero())
    }

    fn one_of(tag: Self::Tag) -> Self {
        Self::from_rational(tag, Rational::one())
    }

    fn from_int(tag: Self::Tag, n: i64) -> Self {
        Self::from_rational(tag, Rational::from_integer(BigInt::from(n)))
    }

    fn inv(&self) -> Self {
        Self::one_of(self.tag()) / self
    }

    fn powu(&self, exp: u32) -> Self {
        let mut acc = Self::one_of(self.tag());
        for _ in 0..exp {
            acc = acc * self;
        }
        acc
    }

    fn is_pos(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl Field for Rational {
    type Tag = RationalField;

    fn tag(&self) -> RationalField {
        RationalField
    }

    fn from_rational(_: RationalField, r: Rational) -> Self {
        r
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn sign(&self) -> Ordering {
        if Signed::is_positive(self) {
            Ordering::Greater
        } else if Signed::is_negative(self) {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        is_pth_power(self, 2)
    }

    fn sqrt_of_integer(_: RationalField, n: &BigInt) -> Option<Self> {
        if n.is_negative() {
            return None;
        }
        let r = n.sqrt();
        (&r * &r == *n).then(|| Rational::from_integer(r))
    }

    fn abs_upper_bound(&self) -> Rational {
        self.abs()
    }

    fn to_interval(&self, prec: u32) -> Interval {
        Interval::point(self.clone()).rounded(prec)
    }
}

/// Tag of the rational field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl fmt::Display for RationalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Returns `r` with `r^p = a` when such a rational exists.
///
/// For even `p` the non-negative root is returned; negative `a` has none.
pub fn is_pth_power(a: &Rational, p: u32) -> Option<Rational> {
    if p == 0 {
        return None;
    }
    if Zero::is_zero(a) {
        return Some(Rational::zero());
    }
    if a.is_negative() && p.is_multiple_of(2) {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(p);
        (num_traits::pow(r.clone(), p as usize) == *n).then_some(r)
    };
    let num = root(a.numer())?;
    let den = root(a.denom())?;
    Some(Rational::new(num, den))
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign_of(r: &Rational) -> i32 {
    match Field::sign(r) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}
