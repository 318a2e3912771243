//! Closed intervals with rational endpoints.
//!
//! Arithmetic is exact; `rounded(prec)` widens outward to the dyadic grid
//! `2^-prec` so that endpoint sizes stay bounded during long evaluations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("interval {0} contains zero")]
    DivisionByZero(String),
    #[error("even root of an interval with negative values: {0}")]
    NegativeEvenRoot(String),
}

fn pow2(prec: u32) -> BigInt {
    BigInt::one() << prec as usize
}

pub fn floor_to_grid(x: &Rational, prec: u32) -> Rational {
    let scaled = x * Rational::from_integer(pow2(prec));
    Rational::new(scaled.floor().to_integer(), pow2(prec))
}

pub fn ceil_to_grid(x: &Rational, prec: u32) -> Rational {
    let scaled = x * Rational::from_integer(pow2(prec));
    Rational::new(scaled.ceil().to_integer(), pow2(prec))
}

/// Largest `k/2^prec` not exceeding `x^(1/n)` for `x ≥ 0`.
fn root_floor(x: &Rational, n: u32, prec: u32) -> Rational {
    // floor(x·2^(prec·n)) = floor(N/D) with the root taken on integers.
    let scale = pow2(prec * n);
    let m = (x.numer() * scale).div_floor(x.denom());
    Rational::new(m.nth_root(n), pow2(prec))
}

fn root_ceil(x: &Rational, n: u32, prec: u32) -> Rational {
    let lower = root_floor(x, n, prec);
    if num_traits::pow(lower.clone(), n as usize) == *x {
        lower
    } else {
        lower + Rational::new(BigInt::one(), pow2(prec))
    }
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    pub fn is_inside(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn rounded(&self, prec: u32) -> Self {
        Self {
            lo: floor_to_grid(&self.lo, prec),
            hi: ceil_to_grid(&self.hi, prec),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.mul(&Interval::point(k.clone()))
    }

    pub fn recip(&self) -> Result<Self, IntervalError> {
        if self.contains_zero() {
            return Err(IntervalError::DivisionByZero(self.to_string()));
        }
        Ok(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self, IntervalError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Interval::point(Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        if n.is_multiple_of(2) && self.contains_zero() {
            // x^n on an interval straddling zero attains 0.
            acc.lo = Rational::zero();
        }
        acc
    }

    /// Enclosure of the real `n`-th root, outward-rounded at `prec`.
    ///
    /// Even roots clamp a slightly negative lower end to zero; an interval
    /// lying entirely below zero is an error.
    pub fn nth_root(&self, n: u32, prec: u32) -> Self {
        self.try_nth_root(n, prec)
            .expect("even root of a negative interval")
    }

    pub fn try_nth_root(&self, n: u32, prec: u32) -> Result<Self, IntervalError> {
        assert!(n >= 1);
        if n == 1 {
            return Ok(self.rounded(prec));
        }
        let signed_root_lo = |x: &Rational| -> Rational {
            if x.is_negative() {
                -root_ceil(&-x.clone(), n, prec)
            } else {
                root_floor(x, n, prec)
            }
        };
        let signed_root_hi = |x: &Rational| -> Rational {
            if x.is_negative() {
                -root_floor(&-x.clone(), n, prec)
            } else {
                root_ceil(x, n, prec)
            }
        };
        if n.is_multiple_of(2) {
            if self.hi.is_negative() {
                return Err(IntervalError::NegativeEvenRoot(self.to_string()));
            }
            let lo = if self.lo.is_negative() {
                Rational::zero()
            } else {
                root_floor(&self.lo, n, prec)
            };
            return Ok(Self {
                lo,
                hi: root_ceil(&self.hi, n, prec),
            });
        }
        Ok(Self {
            lo: signed_root_lo(&self.lo),
            hi: signed_root_hi(&self.hi),
        })
    }

    /// Approximate decimal rendering for reports.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            rational_to_decimal(&self.lo, digits),
            rational_to_decimal(&self.hi, digits)
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Truncated decimal expansion of a rational (toward zero).
pub fn rational_to_decimal(x: &Rational, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let int_part = a.trunc().to_integer();
    let mut frac = a.fract();
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        s.push('.');
        let ten = Rational::from_integer(BigInt::from(10));
        for _ in 0..digits {
            frac *= &ten;
            let d = frac.trunc().to_integer();
            s.push_str(&d.to_string());
            frac = frac.fract();
        }
    }
    s
}

/// Serialized form: exact endpoints as strings plus a decimal preview.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub approx: String,
}

impl From<&Interval> for IntervalJson {
    fn from(i: &Interval) -> Self {
        Self {
            lo: i.lo.to_string(),
            hi: i.hi.to_string(),
            approx: i.to_decimal_string(8),
        }
    }
}
