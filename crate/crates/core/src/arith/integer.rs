//! Small integer utilities: primality, trial factorization, divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Trial division stops at this prime bound; cofactors above its square
/// are reported as unfactored.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut i = 3u64;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Prime factorization of a `u64` as `(prime, exponent)` pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes `n = s²·c` with `c` squarefree; returns `(s, c)`.
pub fn squarefree_decomposition(n: u64) -> (u64, u64) {
    let mut s = 1;
    let mut c = 1;
    for (p, e) in factor_u64(n) {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            c *= p;
        }
    }
    (s, c)
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factor_u64(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Factorization of `|n|` by trial division. `None` when a cofactor
/// survives the trial bound and is too large to certify as prime.
pub fn factor_bigint(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        if (&n % &bp).is_zero() {
            let mut e = 0;
            while (&n % &bp).is_zero() {
                n /= &bp;
                e += 1;
            }
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let bound = BigInt::from(TRIAL_DIVISION_BOUND);
        if n > &bound * &bound {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

/// Positive divisors of `|n|`, or `None` if `n` cannot be factored.
pub fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let fac = factor_bigint(n)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Prime divisors of `|n|` found below the trial bound. Always sound;
/// complete only when `n` factors within the bound.
pub fn small_prime_divisors(n: &BigInt) -> Vec<u64> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    match factor_bigint(&n) {
        Some(f) => f.into_iter().filter_map(|(p, _)| p.to_u64()).collect(),
        None => {
            let mut out = Vec::new();
            let mut m = n;
            let mut p = 2u64;
            while p <= TRIAL_DIVISION_BOUND {
                let bp = BigInt::from(p);
                if (&m % &bp).is_zero() {
                    out.push(p);
                    while (&m % &bp).is_zero() {
                        m /= &bp;
                    }
                }
                p += if p == 2 { 1 } else { 2 };
            }
            out
        }
    }
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}
