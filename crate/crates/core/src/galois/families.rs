use super::{Character, DatumExtras, FieldLabels, GaloisDatum, GaloisError};
use crate::arith::integer::{factor_u64, gcd_u64, is_prime, mod_pow};
use crate::arith::{is_pth_power, Rational};
use crate::group::{all_subgroups, Group, Perm};

pub const MAX_BINOMIAL_PRIME: u64 = 19;
pub const MAX_CYCLOTOMIC_INDEX: u64 = 100;

fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let qs: Vec<u64> = factor_u64(phi).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .find(|&g| qs.iter().all(|&q| mod_pow(g, phi / q, p) != 1))
        .unwrap_or(1)
}

fn affine(n: u64, c: u64, b: u64) -> Perm {
    Perm::from_fn(n as usize, |x| ((c * x as u64 + b) % n) as usize).expect("unit multiplier")
}

/// Generators of `(Z/n)^×`, greedily from small residues.
fn unit_group_generators(n: u64) -> Vec<u64> {
    let units: Vec<u64> = (1..n.max(2)).filter(|&u| gcd_u64(u, n) == 1).collect();
    let mut gens: Vec<u64> = Vec::new();
    let mut span: Vec<u64> = vec![1 % n.max(1)];
    for u in units {
        if !span.contains(&(u % n.max(1))) {
            gens.push(u);
            let mut next = span.clone();
            let mut i = 0;
            while i < next.len() {
                for &g in &gens {
                    let y = next[i] * g % n;
                    if !next.contains(&y) {
                        next.push(y);
                    }
                }
                i += 1;
            }
            span = next;
        }
    }
    gens
}

/// Splitting-field data of `X^n − a` for odd `n ≤ 19`, modelled by the
/// affine maps `x ↦ cx + b` on `Z/n`.
///
/// | model                 | field                                   |
/// |-----------------------|-----------------------------------------|
/// | point `x`             | root `α·ζ^x` (`α` the real root)        |
/// | map `x ↦ cx + b`      | `α ↦ α·ζ^b`, `ζ ↦ ζ^c`                  |
/// | translations          | `N = Gal(E/Q(ζ_n))`                     |
/// | stabilizer of 0       | `U = Gal(E/Q(α))`                       |
/// | `x ↦ −x`              | complex conjugation                     |
///
/// The character at each prime `q | n` is `c mod q`. The model is the full
/// Galois group when `X^n − a` is irreducible and `n` is odd.
pub fn build_affine_radical(n: u64, a: &Rational) -> Result<GaloisDatum, GaloisError> {
    if n < 3 || n.is_multiple_of(2) || n > MAX_BINOMIAL_PRIME {
        return Err(GaloisError::Unsupported(format!(
            "radical index {n} (odd, 3..={MAX_BINOMIAL_PRIME})"
        )));
    }
    let primes: Vec<u64> = factor_u64(n).into_iter().map(|(q, _)| q).collect();
    let zero = num_traits::Zero::is_zero(a);
    if zero || primes.iter().any(|&q| is_pth_power(a, q as u32).is_some()) {
        return Err(GaloisError::ReducibleBinomial {
            p: n,
            a: a.to_string(),
        });
    }
    let unit_gens = unit_group_generators(n);
    let mut gens = vec![affine(n, 1, 1)];
    gens.extend(unit_gens.iter().map(|&c| affine(n, c, 0)));
    let g = Group::closure(n as usize, &gens)?;
    let nn = Group::closure(n as usize, &[affine(n, 1, 1)])?;
    let mults: Vec<Perm> = unit_gens.iter().map(|&c| affine(n, c, 0)).collect();
    let u = Group::closure(n as usize, &mults)?;
    // g.gens() keeps the order given: translation first, then multipliers
    let characters = primes
        .iter()
        .map(|&q| {
            let vals = g
                .gens()
                .iter()
                .map(|p| (p.apply(1) as u64 + n - p.apply(0) as u64) % n % q)
                .collect();
            Character::from_generators(&g, q, vals)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let root = format!("({a})^(1/{n})");
    GaloisDatum::new(
        g,
        u,
        nn,
        characters,
        DatumExtras {
            labels: FieldLabels {
                base: "Q".into(),
                field: format!("Q({root})"),
                splitting_field: format!("Q(zeta_{n}, {root})"),
                abelian_field: format!("Q(zeta_{n})"),
            },
            quasireal: true,
            involution: Some(affine(n, n - 1, 0)),
            radical_by_construction: Some(format!("{root} raised to the {n} lies in Q")),
        },
    )
}

/// Splitting-field data of `X^p − a` for an odd prime `p ≤ 19`; requires `a`
/// not to be a `p`-th power.
pub fn build_binomial(p: u64, a: &Rational) -> Result<GaloisDatum, GaloisError> {
    if !is_prime(p) || p == 2 || p > MAX_BINOMIAL_PRIME {
        return Err(GaloisError::Unsupported(format!(
            "binomial degree {p} (odd prime up to {MAX_BINOMIAL_PRIME})"
        )));
    }
    build_affine_radical(p, a)
}

/// The radical extension `Q(2^(1/9))`: `|G:U| = 9`, `N ≅ C9`, with an
/// intermediate field of degree 3.
pub fn synthetic_c9_datum() -> GaloisDatum {
    build_affine_radical(9, &crate::arith::int(2)).expect("2 is not a cube")
}

fn unit_perm(n: u64, u: u64) -> Perm {
    affine(n.max(1), u, 0)
}

/// Multipliers `u` of the elements of a group of unit maps `x ↦ ux`.
pub fn unit_subgroup_generators(h: &Group) -> Vec<u64> {
    h.gens()
        .iter()
        .map(|p| p.apply(1 % h.degree()) as u64)
        .collect()
}

/// The subgroup of `(Z/n)^×` with the given order, when it is unique.
pub fn unit_subgroup_by_order(n: u64, order: usize) -> Result<Vec<u64>, GaloisError> {
    if n == 0 || n > MAX_CYCLOTOMIC_INDEX {
        return Err(GaloisError::Unsupported(format!("cyclotomic index {n}")));
    }
    let full = Group::closure(
        n as usize,
        &unit_group_generators(n)
            .iter()
            .map(|&u| unit_perm(n, u))
            .collect::<Vec<_>>(),
    )?;
    let matches: Vec<Group> = all_subgroups(&full)?
        .into_iter()
        .filter(|h| h.order() == order)
        .collect();
    match matches.as_slice() {
        [h] => Ok(unit_subgroup_generators(h)),
        _ => Err(GaloisError::AmbiguousSubgroup {
            n,
            order,
            count: matches.len(),
        }),
    }
}

/// A subgroup of `(Z/n)^×` written either as its order (when that pins it
/// down) or as `g:` followed by comma-separated generators, e.g. `g:7,11`.
/// An empty generator list is the trivial subgroup.
pub fn parse_unit_subgroup(n: u64, spec: &str) -> Result<Vec<u64>, GaloisError> {
    let spec = spec.trim();
    if let Some(list) = spec.strip_prefix("g:") {
        let mut out = Vec::new();
        for s in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let u: u64 = s.parse().map_err(|_| {
                GaloisError::BadSubgroupSpec(format!(
                    "generator {s:?} is not a non-negative integer"
                ))
            })?;
            if n == 0 || num_integer::gcd(u % n, n) != 1 {
                return Err(GaloisError::NotAUnit(u, n));
            }
            out.push(u % n);
        }
        return Ok(out);
    }
    let order: usize = spec.parse().map_err(|_| {
        GaloisError::BadSubgroupSpec(format!("expected an order or g:a,b,..., got {spec:?}"))
    })?;
    unit_subgroup_by_order(n, order)
}

/// Data for `Q(ζ_n)` over the fixed field of `H_ground`, with `L` the fixed
/// field of `H_field`. `E = Q(ζ_n)` is abelian, so `F = E` and `N = 1`.
pub fn build_cyclotomic(n: u64, ground: &[u64], field: &[u64]) -> Result<GaloisDatum, GaloisError> {
    if n == 0 || n > MAX_CYCLOTOMIC_INDEX {
        return Err(GaloisError::Unsupported(format!(
            "cyclotomic index {n} (1..={MAX_CYCLOTOMIC_INDEX})"
        )));
    }
    for &u in ground.iter().chain(field) {
        if gcd_u64(u % n.max(1), n) != 1 || (n > 1 && u % n == 0) {
            return Err(GaloisError::NotAUnit(u, n));
        }
    }
    let perms = |us: &[u64]| us.iter().map(|&u| unit_perm(n, u % n)).collect::<Vec<_>>();
    let g = Group::closure(n as usize, &perms(ground))?;
    let u = Group::closure(n as usize, &perms(field))?;
    if !u.is_subgroup_of(&g) {
        return Err(GaloisError::FieldNotInGround);
    }
    let trivial = Group::trivial(n as usize);
    let characters = factor_u64(n)
        .into_iter()
        .map(|(q, _)| {
            let vals = unit_subgroup_generators(&g)
                .iter()
                .map(|&u| u % q)
                .collect();
            Character::from_generators(&g, q, vals)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let quasireal = is_quasireal_fixed_field(n, &u);
    let phi: usize = (1..n.max(2)).filter(|&x| gcd_u64(x, n) == 1).count();
    let describe = |h: &Group| -> String {
        if h.order() == phi {
            "Q".into()
        } else if h.is_trivial() {
            format!("Q(zeta_{n})")
        } else {
            format!(
                "fixed field of <{}> in Q(zeta_{n}), degree {}",
                list(&unit_subgroup_generators(h)),
                phi / h.order()
            )
        }
    };
    let radical = u
        .is_trivial()
        .then(|| format!("zeta_{n} raised to the {n} is 1"));
    GaloisDatum::new(
        g.clone(),
        u.clone(),
        trivial,
        characters,
        DatumExtras {
            labels: FieldLabels {
                base: describe(&g),
                field: describe(&u),
                splitting_field: format!("Q(zeta_{n})"),
                abelian_field: format!("Q(zeta_{n})"),
            },
            quasireal,
            involution: None,
            radical_by_construction: radical,
        },
    )
}

fn list(us: &[u64]) -> String {
    us.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

/// The roots of unity in `Q(ζ_n)` are `±ζ_n^j`; the fixed field of `h`
/// contains one other than `±1` iff some `ζ_n^j ≠ ±1` has `uj ≡ j` for
/// every multiplier `u` of `h`.
fn is_quasireal_fixed_field(n: u64, h: &Group) -> bool {
    let us: Vec<u64> = h
        .elements()
        .iter()
        .map(|p| p.apply(1 % h.degree()) as u64)
        .collect();
    (1..n).all(|j| (n.is_multiple_of(2) && 2 * j == n) || us.iter().any(|&u| u * j % n != j))
}

/// A degree-`n` real cyclic field for `n ∈ {2, 4, 8, 16}`: the fixed field
/// of the index-`n` subgroup of `(Z/p)^×` for the least prime
/// `p ≡ 1 (mod 2n)`.
#[derive(Debug, Clone)]
pub struct RealTwoPowerSubfield {
    pub prime: u64,
    pub datum: GaloisDatum,
    /// Complex conjugation (`−1`) lies in `U`, so the field is real.
    pub real: bool,
    /// `G/U` is cyclic of 2-power order.
    pub cyclic_two_group: bool,
}

pub fn real_two_power_subfield(n: u64) -> Result<RealTwoPowerSubfield, GaloisError> {
    if ![2, 4, 8, 16].contains(&n) {
        return Err(GaloisError::Unsupported(format!(
            "witness degree {n} (2, 4, 8 or 16)"
        )));
    }
    let p = (1..)
        .map(|k| 2 * n * k + 1)
        .find(|&q| is_prime(q))
        .expect("Dirichlet");
    let g = primitive_root(p);
    let sub = mod_pow(g, n, p);
    let datum = build_cyclotomic(p, &[g], &[sub])?;
    let real = datum.u().contains(&unit_perm(p, p - 1));
    let quotient = datum.field_degree() as u64;
    // G is cyclic, hence so is G/U
    let cyclic_two_group = datum.g().is_cyclic() && quotient == n && quotient.is_power_of_two();
    Ok(RealTwoPowerSubfield {
        prime: p,
        datum,
        real,
        cyclic_two_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::group::factor_action;

    #[test]
    fn binomial_orders() {
        let d = build_binomial(3, &int(2)).unwrap();
        assert_eq!((d.g().order(), d.u().order(), d.n().order()), (6, 2, 3));
        assert!(d.m().is_trivial());
        let d = build_binomial(7, &int(2)).unwrap();
        assert_eq!(d.g().order(), 42);
        let chi = d.character(7).unwrap();
        let mut image: Vec<u64> = d
            .g()
            .elements()
            .iter()
            .map(|x| chi.value(x).unwrap())
            .collect();
        image.sort();
        image.dedup();
        assert_eq!(image, (1..7).collect::<Vec<_>>());
    }

    #[test]
    fn binomial_rejections() {
        assert!(matches!(
            build_binomial(3, &int(8)),
            Err(GaloisError::ReducibleBinomial { .. })
        ));
        assert!(matches!(
            build_binomial(3, &int(0)),
            Err(GaloisError::ReducibleBinomial { .. })
        ));
        assert!(matches!(
            build_binomial(3, &crate::arith::rat(-1, 27)),
            Err(GaloisError::ReducibleBinomial { .. })
        ));
        assert!(matches!(
            build_binomial(23, &int(2)),
            Err(GaloisError::Unsupported(_))
        ));
        assert!(matches!(
            build_binomial(9, &int(2)),
            Err(GaloisError::Unsupported(_))
        ));
    }

    #[test]
    fn binomial_action_matches_character() {
        for p in [3u64, 5, 7, 11, 13, 17, 19] {
            let d = build_binomial(p, &int(2)).unwrap();
            assert_eq!(d.g().order() as u64, p * (p - 1));
            let fa = factor_action(d.n(), &d.m(), d.u().gens()).unwrap();
            let chi = d.character(p).unwrap();
            let want: Vec<u64> = d.u().gens().iter().map(|x| chi.value(x).unwrap()).collect();
            assert_eq!(fa.exponents, want, "p = {p}");
        }
    }

    #[test]
    fn c9_model() {
        let d = synthetic_c9_datum();
        assert_eq!(d.g().order(), 54);
        assert_eq!(d.field_degree(), 9);
        assert!(d.character(3).is_some());
    }

    #[test]
    fn cyclotomic_19() {
        let h9 = unit_subgroup_by_order(19, 9).unwrap();
        let h3 = unit_subgroup_by_order(19, 3).unwrap();
        let k = build_cyclotomic(19, &h9, &h3).unwrap();
        assert_eq!(k.field_degree(), 3);
        assert!(k.is_quasireal());
        assert!(k.n().is_trivial());
        let l = build_cyclotomic(19, &h9, &[1]).unwrap();
        assert_eq!(l.field_degree(), 9);
        assert!(!l.is_quasireal());
        assert!(l.radical_by_construction().is_some());
    }

    #[test]
    fn cyclotomic_small() {
        let d = build_cyclotomic(5, &[2], &[1]).unwrap();
        assert_eq!(d.g().order(), 4);
        assert!(d.g().is_cyclic());
        // the real subfield Q(sqrt 5) is fixed by -1
        assert!(build_cyclotomic(5, &[2], &[4]).unwrap().is_quasireal());
        assert!(matches!(
            build_cyclotomic(12, &[2], &[1]),
            Err(GaloisError::NotAUnit(2, 12))
        ));
        assert!(matches!(
            build_cyclotomic(7, &[2], &[3]),
            Err(GaloisError::FieldNotInGround)
        ));
        assert!(matches!(
            unit_subgroup_by_order(8, 2),
            Err(GaloisError::AmbiguousSubgroup { count: 3, .. })
        ));
        // i lies in Q(zeta_8) fixed by <5>
        assert!(!build_cyclotomic(8, &[3, 5], &[5]).unwrap().is_quasireal());
        assert!(build_cyclotomic(8, &[3, 5], &[7]).unwrap().is_quasireal());
    }

    #[test]
    fn two_power_subfield_primes() {
        for (n, p) in [(2, 5), (4, 17), (8, 17), (16, 97)] {
            let w = real_two_power_subfield(n).unwrap();
            assert_eq!(w.prime, p);
            assert!(w.real && w.cyclic_two_group);
            assert_eq!(w.datum.field_degree() as u64, n);
            assert!(w.datum.is_quasireal());
        }
        assert!(real_two_power_subfield(1).is_err());
        assert!(real_two_power_subfield(6).is_err());
    }

    #[test]
    fn subgroup_specs() {
        assert_eq!(parse_unit_subgroup(21, "g:5, 2,").unwrap(), vec![5, 2]);
        assert_eq!(parse_unit_subgroup(21, "g:").unwrap(), Vec::<u64>::new());
        assert!(parse_unit_subgroup(7, "1").unwrap().is_empty());
        assert_eq!(parse_unit_subgroup(7, "6").unwrap().len(), 1);
        assert!(matches!(
            parse_unit_subgroup(21, "g:7"),
            Err(GaloisError::NotAUnit(7, 21))
        ));
        assert!(matches!(
            parse_unit_subgroup(21, "g:x"),
            Err(GaloisError::BadSubgroupSpec(_))
        ));
        assert!(matches!(
            parse_unit_subgroup(21, "-2"),
            Err(GaloisError::BadSubgroupSpec(_))
        ));
        assert!(parse_unit_subgroup(0, "g:1").is_err());
    }
}
