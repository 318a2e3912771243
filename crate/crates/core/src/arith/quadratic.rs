use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::integer::squarefree_decomposition;
use super::{is_pth_power, ArithError, Field, Rational};
use crate::interval::Interval;

/// The real quadratic field `Q(√d)` for a squarefree `d > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    d: u64,
}

impl QuadraticField {
    pub fn new(d: u64) -> Result<Self, ArithError> {
        if d < 2 {
            return Err(ArithError::InvalidRadicand(d));
        }
        let (square, core) = squarefree_decomposition(d);
        if square != 1 || core != d {
            return Err(ArithError::InvalidRadicand(d));
        }
        Ok(Self { d })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn sqrt_d(&self) -> QuadFieldElem {
        QuadFieldElem::new(*self, Rational::zero(), Rational::one())
    }

    pub fn elem(&self, a: Rational, b: Rational) -> QuadFieldElem {
        QuadFieldElem::new(*self, a, b)
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// `a + b√d` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadFieldElem {
    field: QuadraticField,
    a: Rational,
    b: Rational,
}

impl QuadFieldElem {
    pub fn new(field: QuadraticField, a: Rational, b: Rational) -> Self {
        Self { field, a, b }
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &Rational {
        &self.b
    }

    /// Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.field, self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - self.d_rational() * &self.b * &self.b
    }

    fn d_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.field.d))
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "elements of {} and {} cannot be combined",
            self.field, other.field
        );
    }
}

impl fmt::Display for QuadFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.field.d;
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write_sqrt_term(f, &self.b, d, true),
            (false, false) => {
                write!(f, "{}", self.a)?;
                if self.b.is_negative() {
                    f.write_str(" - ")?;
                    write_sqrt_term(f, &-self.b.clone(), d, true)
                } else {
                    f.write_str(" + ")?;
                    write_sqrt_term(f, &self.b, d, true)
                }
            }
        }
    }
}

fn write_sqrt_term(f: &mut fmt::Formatter<'_>, b: &Rational, d: u64, _lead: bool) -> fmt::Result {
    if b.is_one() {
        write!(f, "sqrt({d})")
    } else if *b == -Rational::one() {
        write!(f, "-sqrt({d})")
    } else {
        write!(f, "{b}*sqrt({d})")
    }
}

impl<'a> Add<&'a QuadFieldElem> for QuadFieldElem {
    type Output = QuadFieldElem;
    fn add(self, rhs: &'a QuadFieldElem) -> QuadFieldElem {
        self.check(rhs);
        QuadFieldElem::new(self.field, self.a + &rhs.a, self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadFieldElem> for QuadFieldElem {
    type Output = QuadFieldElem;
    fn sub(self, rhs: &'a QuadFieldElem) -> QuadFieldElem {
        self.check(rhs);
        QuadFieldElem::new(self.field, self.a - &rhs.a, self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadFieldElem> for QuadFieldElem {
    type Output = QuadFieldElem;
    fn mul(self, rhs: &'a QuadFieldElem) -> QuadFieldElem {
        self.check(rhs);
        let d = self.d_rational();
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadFieldElem::new(self.field, a, b)
    }
}

impl<'a> Div<&'a QuadFieldElem> for QuadFieldElem {
    type Output = QuadFieldElem;
    fn div(self, rhs: &'a QuadFieldElem) -> QuadFieldElem {
        self.check(rhs);
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in {}", self.field);
        let c = rhs.conjugate();
        let num = self * &c;
        QuadFieldElem::new(num.field, num.a / &n, num.b / &n)
    }
}

impl Neg for QuadFieldElem {
    type Output = QuadFieldElem;
    fn neg(self) -> QuadFieldElem {
        QuadFieldElem::new(self.field, -self.a, -self.b)
    }
}

impl Field for QuadFieldElem {
    type Tag = QuadraticField;

    fn tag(&self) -> QuadraticField {
        self.field
    }

    fn from_rational(tag: QuadraticField, r: Rational) -> Self {
        QuadFieldElem::new(tag, r, Rational::zero())
    }

    fn is_zero_elem(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: compare `a²` with `b²d` when the parts disagree in sign.
    fn sign(&self) -> Ordering {
        let sa = Field::sign(&self.a);
        let sb = Field::sign(&self.b);
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            _ if sa == sb => sa,
            _ => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * self.d_rational();
                if a2 > b2d {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    /// `(x + y√d)² = x² + dy² + 2xy√d`; the norm of a square is a rational
    /// square, which pins down `x²` up to two candidates.
    fn sqrt(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return Some(self.clone());
        }
        if self.is_neg() {
            return None;
        }
        let field = self.field;
        if self.b.is_zero() {
            if let Some(r) = is_pth_power(&self.a, 2) {
                return Some(QuadFieldElem::from_rational(field, r));
            }
            // a = d·y² gives √a = y√d.
            let y2 = &self.a / self.d_rational();
            return is_pth_power(&y2, 2).map(|y| QuadFieldElem::new(field, Rational::zero(), y));
        }
        let n = is_pth_power(&self.norm(), 2)?;
        let two = Rational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(x) = is_pth_power(&cand, 2) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let s = QuadFieldElem::new(field, x, y);
                if s.clone() * &s == *self {
                    return Some(if s.is_neg() { -s } else { s });
                }
            }
        }
        None
    }

    fn sqrt_of_integer(tag: QuadraticField, n: &BigInt) -> Option<Self> {
        if n.is_negative() {
            return None;
        }
        let v = QuadFieldElem::from_rational(tag, Rational::from_integer(n.clone()));
        Field::sqrt(&v)
    }

    fn abs_upper_bound(&self) -> Rational {
        let d = BigInt::from(self.field.d);
        let root_ceil = {
            let r = d.sqrt();
            if &r * &r == d {
                r
            } else {
                r + 1
            }
        };
        self.a.abs() + self.b.abs() * Rational::from_integer(root_ceil)
    }

    fn to_interval(&self, prec: u32) -> Interval {
        let root = Interval::point(self.d_rational()).nth_root(2, prec + 4);
        let a = Interval::point(self.a.clone());
        let b = Interval::point(self.b.clone());
        a.add(&b.mul(&root)).rounded(prec)
    }
}
