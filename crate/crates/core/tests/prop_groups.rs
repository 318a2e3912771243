use proptest::prelude::*;

use realrad::group::oracle::{sweep_normal_closure, sweep_scalar_modules};
use realrad::group::{all_subgroups, factor_action, invariant_subnormal_series, Group, Perm};

const MAX_ORDER: usize = 48;

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |v| Perm::from_fn(degree, |i| v[i]).unwrap())
}

/// A permutation group of degree 4 to 6 with order at most 48.
fn group() -> impl Strategy<Value = Group> {
    (4usize..=6)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(perm(d), 1..=2)))
        .prop_filter_map("order too large", |(d, gens)| {
            Group::closure_capped(d, &gens, MAX_ORDER).ok()
        })
}

/// `M^N` built directly: the subgroup generated by all conjugates.
fn conjugate_closure(m: &Group, n: &Group) -> Group {
    let gens: Vec<Perm> = m
        .gens()
        .iter()
        .flat_map(|x| {
            n.elements()
                .iter()
                .map(move |g| g.inverse().then(x).then(g))
        })
        .collect();
    Group::closure(n.degree(), &gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_idempotent(g in group()) {
        let again = Group::closure(g.degree(), g.elements()).unwrap();
        prop_assert_eq!(again, g);
    }

    #[test]
    fn normal_closure_is_minimal(n in group()) {
        let lattice = all_subgroups(&n).unwrap();
        for m in &lattice {
            let c = m.normal_closure_in(&n).unwrap();
            prop_assert!(m.is_subgroup_of(&c));
            prop_assert!(c.is_normal_in(&n));
            prop_assert_eq!(&c, &conjugate_closure(m, &n));
            let smallest = lattice
                .iter()
                .filter(|k| k.is_normal_in(&n) && m.is_subgroup_of(k))
                .fold(n.clone(), |acc, k| acc.intersection(k));
            prop_assert_eq!(c, smallest);
        }
    }

    #[test]
    fn invariant_series_is_a_normal_invariant_chain(n in group(), pick in any::<prop::sample::Index>()) {
        // inner automorphisms by one element of N
        let a = pick.get(n.elements()).clone();
        let auts = [a];
        let lattice = all_subgroups(&n).unwrap();
        for m in lattice.iter().filter(|m| m.is_invariant_under(&auts)) {
            if !m.is_subnormal_in(&n).unwrap() {
                continue;
            }
            let series = invariant_subnormal_series(m, &n, &auts).unwrap();
            prop_assert_eq!(series.first(), Some(m));
            prop_assert_eq!(series.last(), Some(&n));
            for w in series.windows(2) {
                prop_assert!(w[0].is_normal_in(&w[1]));
                prop_assert!(w[0].is_subgroup_of(&w[1]));
            }
            for s in &series {
                prop_assert!(s.is_invariant_under(&auts));
                prop_assert!(s.elements().iter().all(|x| s.contains(&auts[0].inverse().then(x).then(&auts[0]))));
            }
        }
    }

    #[test]
    fn factor_action_is_multiplicative(r in group()) {
        let lattice = all_subgroups(&r).unwrap();
        let prime_index = lattice.iter().filter(|s| {
            let i = r.order() / s.order();
            s.is_normal_in(&r) && i > 1 && (2..i).all(|k| i % k != 0)
        });
        for s in prime_index {
            let actors: Vec<Perm> = r.elements().to_vec();
            let fa = factor_action(&r, s, &actors).unwrap();
            let p = fa.prime;
            for (i, x) in actors.iter().enumerate() {
                for (j, y) in actors.iter().enumerate() {
                    let xy = x.then(y);
                    let k = actors.iter().position(|z| *z == xy).unwrap();
                    prop_assert_eq!(fa.exponents[k], fa.exponents[i] * fa.exponents[j] % p);
                }
            }
        }
    }

    #[test]
    fn module_oracle_holds_on_generated_instances(seed in any::<u64>()) {
        let rep = sweep_scalar_modules(seed, 8).unwrap();
        prop_assert!(rep.counterexamples.is_empty(), "{:?}", rep.counterexamples);
    }

    #[test]
    fn normal_closure_oracle_holds_on_generated_instances(seed in any::<u64>()) {
        let rep = sweep_normal_closure(MAX_ORDER, seed, 3).unwrap();
        prop_assert!(rep.counterexamples.is_empty(), "{:?}", rep.counterexamples);
    }
}
