use super::{ArithError, Poly, Rational, RationalField};
use num_traits::One;

/// The `n`-th cyclotomic polynomial, by dividing `X^n - 1` by `Φ_d` for
/// every proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> Result<Poly<Rational>, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroCyclotomicIndex);
    }
    let mut num = Poly::monomial(Rational::one(), n as usize);
    num = &num - &Poly::one(RationalField);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi = cyclotomic_poly(d)?;
            let (q, r) = num.div_rem(&phi)?;
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::integer::totient;

    #[test]
    fn small_indices() {
        assert_eq!(cyclotomic_poly(1).unwrap(), Poly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4).unwrap(), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6).unwrap(), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(19).unwrap(), Poly::from_ints(&[1; 19]));
        assert_eq!(cyclotomic_poly(0), Err(ArithError::ZeroCyclotomicIndex));
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).unwrap().deg() as u64, totient(n));
        }
    }
}
