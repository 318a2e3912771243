//! Galois groups of irreducible rational polynomials of degree at most 4,
//! from the discriminant and, for quartics, the resolvent cubic. The C4
//! versus D4 split uses the classical test: with `r` the rational resolvent
//! root, the group is C4 iff `X² − rX + d` and `X² + aX + (b − r)` both
//! split over `Q(√Δ)`.

use std::fmt;

use serde::Serialize;

use super::GaloisError;
use crate::arith::{
    irreducibility_certificate, is_pth_power, rational_roots, Field, Poly, Rational,
};
use crate::group::{Group, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GaloisGroupLabel {
    C1,
    C2,
    /// The alternating group on three roots.
    C3,
    S3,
    V4,
    C4,
    D4,
    A4,
    S4,
}

impl GaloisGroupLabel {
    pub fn order(self) -> usize {
        use GaloisGroupLabel::*;
        match self {
            C1 => 1,
            C2 => 2,
            C3 => 3,
            S3 => 6,
            V4 | C4 => 4,
            D4 => 8,
            A4 => 12,
            S4 => 24,
        }
    }

    /// Number of roots permuted.
    pub fn degree(self) -> usize {
        use GaloisGroupLabel::*;
        match self {
            C1 => 1,
            C2 => 2,
            C3 | S3 => 3,
            _ => 4,
        }
    }

    /// Whether the group lies in the alternating group, i.e. the
    /// discriminant is a square.
    pub fn is_even(self) -> bool {
        use GaloisGroupLabel::*;
        matches!(self, C1 | C3 | V4 | A4)
    }

    /// A transitive permutation group on `0..degree` with this label.
    pub fn transitive_group(self) -> Group {
        use GaloisGroupLabel::*;
        let gens: &[&str] = match self {
            C1 => &[],
            C2 => &["(0 1)"],
            C3 => &["(0 1 2)"],
            S3 => &["(0 1 2)", "(0 1)"],
            V4 => &["(0 1)(2 3)", "(0 2)(1 3)"],
            C4 => &["(0 1 2 3)"],
            D4 => &["(0 1 2 3)", "(0 2)"],
            A4 => &["(0 1 2)", "(0 1)(2 3)"],
            S4 => &["(0 1 2 3)", "(0 1)"],
        };
        let deg = self.degree();
        let perms: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse(s, deg).expect("literal"))
            .collect();
        Group::closure(deg, &perms).expect("small group")
    }
}

impl fmt::Display for GaloisGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisGroupReport {
    pub label: GaloisGroupLabel,
    pub degree: usize,
    pub order: usize,
    /// Discriminant of the monic associate.
    pub discriminant: String,
    pub discriminant_is_square: bool,
    /// Resolvent cubic, quartics only.
    pub resolvent: Option<String>,
    pub resolvent_rational_roots: Option<Vec<String>>,
}

/// The cubic whose roots are `αβ+γδ`, `αγ+βδ`, `αδ+βγ` for the roots of the
/// monic quartic `X⁴ + aX³ + bX² + cX + d`:
/// `Y³ − bY² + (ac − 4d)Y − (a²d − 4bd + c²)`.
pub fn quartic_resolvent_cubic<K: Field>(f: &Poly<K>) -> Result<Poly<K>, GaloisError> {
    if f.degree() != Some(4) {
        return Err(GaloisError::Poly("resolvent cubic needs a quartic".into()));
    }
    if !f.is_monic() {
        return Err(GaloisError::Poly(
            "resolvent cubic needs a monic quartic".into(),
        ));
    }
    let (a, b, c, d) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    let four = K::from_int(f.tag(), 4);
    let c1 = a.clone() * &c - &(four.clone() * &d);
    let c0 = -(a.clone() * &a * &d - &(four * &b * &d) + &(c.clone() * &c));
    Ok(Poly::new(f.tag(), vec![c0, c1, -b, K::one_of(f.tag())]))
}

fn is_square(r: &Rational) -> bool {
    is_pth_power(r, 2).is_some()
}

/// `X² + pX + q` splits over `Q(√delta)` for non-square `delta`.
fn quadratic_splits_over(p: &Rational, q: &Rational, delta: &Rational) -> bool {
    let disc = p.clone() * p - Rational::from_integer(4.into()) * q;
    num_traits::Zero::is_zero(&disc) || is_square(&disc) || is_square(&(disc * delta))
}

/// Galois group of an irreducible polynomial of degree 1 to 4 over Q.
pub fn galois_group_small_degree(f: &Poly<Rational>) -> Result<GaloisGroupReport, GaloisError> {
    let n = match f.degree() {
        Some(n @ 1..=4) => n,
        _ => {
            return Err(GaloisError::Unsupported(format!(
                "Galois group of degree {:?} (1..=4 supported)",
                f.degree()
            )))
        }
    };
    let certified = n == 1
        || irreducibility_certificate(f)
            .map_err(|e| GaloisError::Poly(e.to_string()))?
            .is_irreducible();
    if !certified {
        return Err(GaloisError::Poly(
            "input is not certified irreducible".into(),
        ));
    }
    let g = f.monic();
    let disc = if n == 1 {
        Rational::from_integer(1.into())
    } else {
        g.discriminant()
            .map_err(|e| GaloisError::Poly(e.to_string()))?
    };
    let square = is_square(&disc);
    let mut resolvent = None;
    let mut resolvent_roots = None;
    let label = match n {
        1 => GaloisGroupLabel::C1,
        2 => GaloisGroupLabel::C2,
        3 if square => GaloisGroupLabel::C3,
        3 => GaloisGroupLabel::S3,
        _ => {
            let r = quartic_resolvent_cubic(&g)?;
            let roots = rational_roots(&r)
                .ok_or_else(|| GaloisError::Poly("resolvent root search incomplete".into()))?;
            let label = match (roots.len(), square) {
                (0, true) => GaloisGroupLabel::A4,
                (0, false) => GaloisGroupLabel::S4,
                (1, _) => {
                    let root = &roots[0];
                    let (a, b, d) = (g.coeff(3), g.coeff(2), g.coeff(0));
                    if quadratic_splits_over(&-root.clone(), &d, &disc)
                        && quadratic_splits_over(&a, &(b - root), &disc)
                    {
                        GaloisGroupLabel::C4
                    } else {
                        GaloisGroupLabel::D4
                    }
                }
                _ => GaloisGroupLabel::V4,
            };
            resolvent = Some(r.to_string());
            resolvent_roots = Some(roots.iter().map(Rational::to_string).collect());
            label
        }
    };
    Ok(GaloisGroupReport {
        label,
        degree: n,
        order: label.order(),
        discriminant: disc.to_string(),
        discriminant_is_square: square,
        resolvent,
        resolvent_rational_roots: resolvent_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use GaloisGroupLabel::*;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_ints(c)
    }

    #[test]
    fn resolvent_examples() {
        assert_eq!(
            quartic_resolvent_cubic(&p(&[-1, -1, 0, 0, 1])).unwrap(),
            p(&[-1, 4, 0, 1])
        );
        assert_eq!(
            quartic_resolvent_cubic(&p(&[1, 0, 0, 0, 1])).unwrap(),
            p(&[0, -4, 0, 1])
        );
        assert!(quartic_resolvent_cubic(&p(&[1, 0, 0, 1])).is_err());
        assert!(quartic_resolvent_cubic(&p(&[1, 0, 0, 0, 2])).is_err());
    }

    #[test]
    fn labels() {
        let cases: &[(&[i64], GaloisGroupLabel)] = &[
            (&[-2, 1], C1),
            (&[-2, 0, 1], C2),
            (&[2, -6, 0, 1], S3),
            (&[3, -3, 0, 1], S3),
            (&[1, -3, 0, 1], C3),
            (&[1, 0, 0, 0, 1], V4),
            (&[-2, 0, 0, 0, 1], D4),
            (&[1, 1, 1, 1, 1], C4),
            (&[2, 0, -4, 0, 1], C4),
            (&[1, 0, -10, 0, 1], V4),
            (&[12, 8, 0, 0, 1], A4),
            (&[-1, -1, 0, 0, 1], S4),
        ];
        for (c, want) in cases {
            let r = galois_group_small_degree(&p(c)).unwrap();
            assert_eq!(r.label, *want, "{c:?}");
            assert_eq!(r.label.is_even(), r.discriminant_is_square, "{c:?}");
            assert_eq!(r.label.transitive_group().order(), r.order);
        }
    }

    #[test]
    fn non_monic_input() {
        // 2X^3 - 6X + 2 has the same roots as X^3 - 3X + 1
        assert_eq!(
            galois_group_small_degree(&p(&[2, -6, 0, 2])).unwrap().label,
            C3
        );
    }

    #[test]
    fn rejections() {
        assert!(galois_group_small_degree(&p(&[-6, 0, 1, 0, 1])).is_err());
        assert!(galois_group_small_degree(&p(&[6, -5, 1])).is_err());
        assert!(galois_group_small_degree(&p(&[-2, 0, 0, 0, 0, 1])).is_err());
    }
}
