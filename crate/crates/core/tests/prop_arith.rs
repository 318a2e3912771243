use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use realrad::arith::{
    int, irreducibility_certificate, is_pth_power, parse_poly_quadratic, parse_poly_rational, rat,
    IrreducibilityMethod, IrreducibilityStatus, Poly, QuadraticField, Rational,
};
use realrad::roots::{count_real_roots, isolate_real_roots, real_root_count};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(small_rat(), 1..=max_deg + 1)
        .prop_filter("nonzero", |c| c.iter().any(|x| !x.is_zero()))
        .prop_map(|c| Poly::new(Default::default(), c))
}

fn int_poly(min_deg: usize, max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    (min_deg..=max_deg)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(-12i64..=12, n),
                prop_oneof![Just(1i64), -3i64..=3],
            )
        })
        .prop_filter("nonzero leading", |(_, lead)| *lead != 0)
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            Poly::new(Default::default(), c.into_iter().map(int).collect())
        })
}

fn linear_product(roots: &[Rational]) -> Poly<Rational> {
    roots
        .iter()
        .fold(Poly::new(Default::default(), vec![int(1)]), |acc, r| {
            &acc * &Poly::new(Default::default(), vec![-r.clone(), int(1)])
        })
}

proptest! {
    #[test]
    fn printed_polynomials_parse_back(f in poly(6), g in poly(4), d in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assert_eq!(parse_poly_rational(&f.to_string()).unwrap(), f.clone());
        let k = QuadraticField::new(d).unwrap();
        let coeffs = (0..=f.deg().max(g.deg())).map(|i| k.elem(f.coeff(i), g.coeff(i))).collect();
        let h = Poly::new(k, coeffs);
        prop_assert_eq!(parse_poly_quadratic(&h.to_string(), k).unwrap(), h);
    }

    #[test]
    fn division_identity(f in poly(7), g in poly(4)) {
        let (q, r) = f.div_rem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(
        roots in prop::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d)), 2..=6),
        lead in 1i64..=5,
    ) {
        let f = linear_product(&roots).scale(&int(lead));
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let repeated = distinct.len() < roots.len();
        prop_assert_eq!(f.discriminant().unwrap().is_zero(), repeated);
        prop_assert_eq!(f.squarefree_part().unwrap().deg() < f.deg(), repeated);
        prop_assert_eq!(f.squarefree_part().unwrap().deg(), distinct.len());
    }

    #[test]
    fn pth_power_recovers_root(r in small_rat(), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let a = num_traits::pow(r.clone(), p as usize);
        let expect = if p % 2 == 0 { r.abs() } else { r.clone() };
        prop_assert_eq!(is_pth_power(&a, p), Some(expect));
    }

    #[test]
    fn pth_power_rejects_non_powers(n in 2i64..200, p in prop::sample::select(vec![2u32, 3, 5])) {
        let exact = (1i64..=n).any(|k| k.checked_pow(p) == Some(n));
        prop_assert_eq!(is_pth_power(&int(n), p).is_some(), exact);
    }

    #[test]
    fn reducible_certificates_carry_a_divisor(g in int_poly(1, 3), h in int_poly(1, 3)) {
        let f = &g * &h;
        let cert = irreducibility_certificate(&f).unwrap();
        match cert.status {
            IrreducibilityStatus::Reducible(factor) => {
                prop_assert!(factor.deg() >= 1 && factor.deg() < f.deg());
                let (_, r) = f.div_rem(&factor).unwrap();
                prop_assert!(r.is_zero());
            }
            IrreducibilityStatus::Irreducible(m) => prop_assert!(false, "{} certified irreducible by {:?}", f, m),
            IrreducibilityStatus::Unknown => {}
        }
    }

    #[test]
    fn certificates_are_sound(f in int_poly(2, 6)) {
        let cert = irreducibility_certificate(&f).unwrap();
        match &cert.status {
            IrreducibilityStatus::Irreducible(IrreducibilityMethod::Eisenstein { prime, shift }) => {
                let c = f.shift(&int(*shift)).primitive_integer_coeffs();
                let p = BigInt::from(*prime);
                let n = c.len() - 1;
                prop_assert!(!c[n].is_multiple_of(&p));
                prop_assert!(c[..n].iter().all(|a| a.is_multiple_of(&p)));
                prop_assert!(!c[0].is_multiple_of(&(&p * &p)));
            }
            IrreducibilityStatus::Irreducible(_) => {
                // no rational root at least
                let roots: Vec<Rational> = (-30i64..=30)
                    .flat_map(|n| (1i64..=4).map(move |d| rat(n, d)))
                    .filter(|x| f.eval(x).is_zero())
                    .collect();
                prop_assert!(roots.is_empty() || f.deg() == 1, "root {:?} of {}", roots, f);
            }
            IrreducibilityStatus::Reducible(factor) => {
                let (_, r) = f.div_rem(factor).unwrap();
                prop_assert!(r.is_zero());
            }
            IrreducibilityStatus::Unknown => {}
        }
    }

    #[test]
    fn sturm_count_matches_isolation(f in int_poly(1, 8)) {
        let count = count_real_roots(&f, None, None).unwrap().count;
        let isolated = isolate_real_roots(&f, 12).unwrap();
        prop_assert_eq!(count, isolated.len());
        let g = f.squarefree_part().unwrap();
        for iv in &isolated {
            let (lo, hi) = (g.eval(&iv.lo), g.eval(&iv.hi));
            if iv.lo == iv.hi {
                prop_assert!(lo.is_zero());
            } else {
                prop_assert!(!(lo.is_zero() && hi.is_zero()));
                prop_assert!((lo * hi).is_negative() || g.eval(&iv.hi).is_zero() || g.eval(&iv.lo).is_zero());
            }
        }
        for w in isolated.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn sturm_count_invariant_under_positive_scaling(f in int_poly(1, 7), c in (1i64..=30, 1i64..=30)) {
        let k = rat(c.0, c.1);
        prop_assert_eq!(real_root_count(&f).unwrap(), real_root_count(&f.scale(&k)).unwrap());
    }

    #[test]
    fn depressed_cubic_root_count_follows_discriminant(b in -15i64..=15, c in -15i64..=15) {
        let f = Poly::new(Default::default(), vec![int(c), int(b), int(0), int(1)]);
        let disc = int(-4 * b * b * b - 27 * c * c);
        let n = real_root_count(&f).unwrap();
        if disc.is_positive() {
            prop_assert_eq!(n, 3);
        } else if disc.is_negative() {
            prop_assert_eq!(n, 1);
        }
    }
}
