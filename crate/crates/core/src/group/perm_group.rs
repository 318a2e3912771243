use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::perm::{Perm, PermError};
use crate::arith::integer::is_prime;

/// Hard cap on materialized group orders.
pub const GROUP_ORDER_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generators have mixed degrees")]
    DegreeMismatch,
    #[error("{0} is not a subgroup of {1}")]
    NotSubgroup(String, String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not subnormal")]
    NotSubnormal,
    #[error("index {0} is not prime")]
    NotPrimeIndex(usize),
    #[error("conjugation does not induce a power map on the factor")]
    IllDefinedAction,
    #[error("{0} is not invariant under the given automorphisms")]
    NotInvariant(String),
    #[error("element list is not closed under multiplication")]
    NotClosed,
}

/// A finite permutation group with its full element list.
///
/// Elements are kept sorted, so two groups on the same points are equal
/// exactly when they contain the same permutations.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, gens {})", self.order(), self)
    }
}

/// Generators in cycle notation, e.g. `<(0 1 2), (0 1)>`.
impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl Group {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            gens: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    pub fn closure(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        Self::closure_capped(degree, gens, GROUP_ORDER_CAP)
    }

    /// Breadth-first enumeration of all products of the generators.
    pub fn closure_capped(degree: usize, gens: &[Perm], cap: usize) -> Result<Self, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self {
            degree,
            gens,
            elements,
        })
    }

    /// Wraps a closed element list, choosing a small generating set.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        let mut by_order: Vec<&Perm> = elements.iter().collect();
        by_order.sort_by_key(|p| std::cmp::Reverse(p.order()));
        let mut g = Self::trivial(degree);
        for p in by_order {
            if !g.contains(p) {
                let mut gens = g.gens.clone();
                gens.push(p.clone());
                g = Self::closure_capped(degree, &gens, elements.len())
                    .map_err(|_| GroupError::NotClosed)?;
            }
        }
        if g.elements != elements {
            return Err(GroupError::NotClosed);
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn index_in(&self, other: &Group) -> Option<usize> {
        self.is_subgroup_of(other)
            .then(|| other.order() / self.order())
    }

    fn require_subgroup(&self, other: &Group) -> Result<(), GroupError> {
        if self.is_subgroup_of(other) {
            Ok(())
        } else {
            Err(GroupError::NotSubgroup(self.to_string(), other.to_string()))
        }
    }

    pub fn is_normal_in(&self, other: &Group) -> bool {
        self.is_subgroup_of(other)
            && other
                .gens
                .iter()
                .all(|n| self.gens.iter().all(|m| self.contains(&m.conjugate_by(n))))
    }

    /// True when conjugation by every `s` maps the group onto itself.
    pub fn is_invariant_under(&self, auts: &[Perm]) -> bool {
        auts.iter()
            .all(|s| self.gens.iter().all(|g| self.contains(&g.conjugate_by(s))))
    }

    pub fn conjugate(&self, s: &Perm) -> Group {
        let gens: Vec<Perm> = self.gens.iter().map(|g| g.conjugate_by(s)).collect();
        let mut elements: Vec<Perm> = self.elements.iter().map(|g| g.conjugate_by(s)).collect();
        elements.sort_unstable();
        Group {
            degree: self.degree,
            gens,
            elements,
        }
    }

    pub fn intersection(&self, other: &Group) -> Group {
        let common: Vec<Perm> = self
            .elements
            .iter()
            .filter(|p| other.contains(p))
            .cloned()
            .collect();
        Group::from_elements(self.degree, common).expect("intersection of subgroups is a subgroup")
    }

    pub fn join(&self, other: &Group) -> Result<Group, GroupError> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Group::closure(self.degree, &gens)
    }

    /// `⟨self, x⟩`.
    pub fn adjoin(&self, x: &Perm) -> Result<Group, GroupError> {
        let mut gens = self.gens.clone();
        gens.push(x.clone());
        Group::closure(self.degree, &gens)
    }

    /// Smallest normal subgroup of `n` containing `self`.
    pub fn normal_closure_in(&self, n: &Group) -> Result<Group, GroupError> {
        self.require_subgroup(n)?;
        let mut h = self.clone();
        'grow: loop {
            for g in h.gens.clone() {
                for x in &n.gens {
                    let c = g.conjugate_by(x);
                    if !h.contains(&c) {
                        h = h.adjoin(&c)?;
                        continue 'grow;
                    }
                }
            }
            return Ok(h);
        }
    }

    /// Subnormality by normal-closure descent: `N ⊇ M^N ⊇ M^(M^N) ⊇ …`
    /// stabilizes at `M` exactly when `M` is subnormal.
    pub fn is_subnormal_in(&self, n: &Group) -> Result<bool, GroupError> {
        self.require_subgroup(n)?;
        let mut h = n.clone();
        loop {
            if h == *self {
                return Ok(true);
            }
            let c = self.normal_closure_in(&h)?;
            if c == h {
                return Ok(false);
            }
            h = c;
        }
    }

    /// Representatives of the right cosets `self·x` in `g`.
    pub fn right_coset_reps(&self, g: &Group) -> Vec<Perm> {
        let mut covered: HashSet<Perm> = HashSet::new();
        let mut reps = Vec::new();
        for x in &g.elements {
            if covered.contains(x) {
                continue;
            }
            for h in &self.elements {
                covered.insert(h.then(x));
            }
            reps.push(x.clone());
        }
        reps
    }

    /// `[a, b] ∈ self` for all generator pairs, i.e. `g/self` is abelian.
    pub fn contains_commutators_of(&self, g: &Group) -> bool {
        g.gens.iter().all(|a| {
            g.gens.iter().all(|b| {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                self.contains(&c)
            })
        })
    }

    pub fn derived_subgroup(&self) -> Result<Group, GroupError> {
        let mut comms = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                comms.push(a.inverse().then(&b.inverse()).then(a).then(b));
            }
        }
        Group::closure(self.degree, &comms)?.normal_closure_in(self)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|a| self.gens.iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements.iter().any(|x| x.order() == n)
    }

    pub fn exponent_multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements.iter().map(Perm::order).collect();
        v.sort_unstable();
        v
    }
}

/// Every subgroup `R` with `m ≤ R ≤ n`, by adjoining one right-coset
/// representative at a time until no new subgroup appears. Sorted by order.
pub fn subgroups_between(m: &Group, n: &Group) -> Result<Vec<Group>, GroupError> {
    m.require_subgroup(n)?;
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut out = vec![m.clone()];
    seen.insert(m.elements.clone());
    let mut i = 0;
    while i < out.len() {
        let s = out[i].clone();
        for x in s.right_coset_reps(n) {
            if s.contains(&x) {
                continue;
            }
            let r = s.adjoin(&x)?;
            if seen.insert(r.elements.clone()) {
                out.push(r);
            }
        }
        i += 1;
    }
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(out)
}

pub fn all_subgroups(g: &Group) -> Result<Vec<Group>, GroupError> {
    subgroups_between(&Group::trivial(g.degree), g)
}

/// A series `M = M₀ ◁ M₁ ◁ … ◁ M_r = N` built by the normal-closure
/// recursion `series(M, N) = series(M, M^N) ++ [N]`. Every term is
/// stabilized by each automorphism that stabilizes `M` and `N`.
pub fn invariant_subnormal_series(
    m: &Group,
    n: &Group,
    auts: &[Perm],
) -> Result<Vec<Group>, GroupError> {
    m.require_subgroup(n)?;
    for (g, name) in [(m, "M"), (n, "N")] {
        if !g.is_invariant_under(auts) {
            return Err(GroupError::NotInvariant(name.into()));
        }
    }
    if !m.is_subnormal_in(n)? {
        return Err(GroupError::NotSubnormal);
    }
    fn rec(m: &Group, n: &Group) -> Result<Vec<Group>, GroupError> {
        if m == n {
            return Ok(vec![n.clone()]);
        }
        let k = m.normal_closure_in(n)?;
        debug_assert!(
            k != *n,
            "proper subnormal subgroup has proper normal closure"
        );
        let mut s = rec(m, &k)?;
        s.push(n.clone());
        Ok(s)
    }
    rec(m, n)
}

/// Refines the normal-closure series until no invariant subgroup fits
/// between consecutive terms: each step `A ◁ B` is split at a largest
/// proper invariant normal subgroup of `B` containing `A`.
pub fn invariant_composition_series(
    m: &Group,
    n: &Group,
    auts: &[Perm],
) -> Result<Vec<Group>, GroupError> {
    let coarse = invariant_subnormal_series(m, n, auts)?;
    let mut out = vec![coarse[0].clone()];
    for w in coarse.windows(2) {
        let mut refined = refine_step(&w[0], &w[1], auts)?;
        refined.remove(0);
        out.extend(refined);
    }
    Ok(out)
}

fn refine_step(a: &Group, b: &Group, auts: &[Perm]) -> Result<Vec<Group>, GroupError> {
    if a == b {
        return Ok(vec![a.clone()]);
    }
    let best = subgroups_between(a, b)?
        .into_iter()
        .rfind(|x| x != a && x != b && x.is_normal_in(b) && x.is_invariant_under(auts));
    match best {
        None => Ok(vec![a.clone(), b.clone()]),
        Some(x) => {
            let mut s = refine_step(a, &x, auts)?;
            s.push(b.clone());
            Ok(s)
        }
    }
}

/// Conjugation action on a factor `R/S` of prime order `p`: each actor
/// sends a generator coset `Sr` to `S r^e`, recorded as `e mod p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorAction {
    pub prime: u64,
    pub coset_generator: Perm,
    pub exponents: Vec<u64>,
}

pub fn factor_action(r: &Group, s: &Group, actors: &[Perm]) -> Result<FactorAction, GroupError> {
    if !s.is_normal_in(r) {
        return Err(GroupError::NotNormal);
    }
    let idx = r.order() / s.order();
    if !is_prime(idx as u64) {
        return Err(GroupError::NotPrimeIndex(idx));
    }
    for (g, name) in [(r, "R"), (s, "S")] {
        if !g.is_invariant_under(actors) {
            return Err(GroupError::NotInvariant(name.into()));
        }
    }
    let p = idx as u64;
    let gen = r
        .elements()
        .iter()
        .find(|x| !s.contains(x))
        .expect("proper factor has a nontrivial coset")
        .clone();
    let powers: Vec<Perm> = (0..p as i64).map(|e| gen.pow(e)).collect();
    let mut exponents = Vec::with_capacity(actors.len());
    for a in actors {
        let img = gen.conjugate_by(a);
        let e = (1..p)
            .find(|&e| s.contains(&img.then(&powers[e as usize].inverse())))
            .ok_or(GroupError::IllDefinedAction)?;
        for x in r.elements() {
            if !s.contains(&x.conjugate_by(a).then(&x.pow(e as i64).inverse())) {
                return Err(GroupError::IllDefinedAction);
            }
        }
        exponents.push(e);
    }
    Ok(FactorAction {
        prime: p,
        coset_generator: gen,
        exponents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn s3() -> Group {
        Group::closure(3, &[p("(0 1 2)", 3), p("(0 1)", 3)]).unwrap()
    }

    /// Affine maps `x ↦ cx + b` on `Z/q`.
    fn affine(q: usize, c: usize, b: usize) -> Perm {
        Perm::from_fn(q, |x| (c * x + b) % q).unwrap()
    }

    #[test]
    fn closures() {
        assert_eq!(Group::closure(2, &[p("(0 1)", 2)]).unwrap().order(), 2);
        assert_eq!(s3().order(), 6);
        let f42 = Group::closure(7, &[affine(7, 1, 1), affine(7, 3, 0)]).unwrap();
        assert_eq!(f42.order(), 42);
        let big = Group::closure_capped(8, &[p("(0 1 2 3 4 5 6 7)", 8), p("(0 1)", 8)], 1000);
        assert_eq!(big.unwrap_err(), GroupError::CapExceeded(1000));
    }

    #[test]
    fn closure_is_idempotent() {
        let g = s3();
        let again = Group::closure(3, g.elements()).unwrap();
        assert_eq!(g, again);
        assert_eq!(Group::from_elements(3, g.elements().to_vec()).unwrap(), g);
    }

    #[test]
    fn normal_closures() {
        let g = s3();
        assert_eq!(g.normal_closure_in(&g).unwrap(), g);
        let t = Group::closure(3, &[p("(0 1)", 3)]).unwrap();
        assert_eq!(t.normal_closure_in(&g).unwrap(), g);
        let c3 = Group::closure(3, &[p("(0 1 2)", 3)]).unwrap();
        assert_eq!(c3.normal_closure_in(&g).unwrap(), c3);
        assert!(matches!(
            g.normal_closure_in(&c3),
            Err(GroupError::NotSubgroup(..))
        ));
    }

    #[test]
    fn subnormality() {
        let g = s3();
        let t = Group::closure(3, &[p("(0 1)", 3)]).unwrap();
        assert!(!t.is_subnormal_in(&g).unwrap());
        assert!(Group::trivial(3).is_subnormal_in(&g).unwrap());
        let c3 = Group::closure(3, &[p("(0 1 2)", 3)]).unwrap();
        assert!(c3.is_subnormal_in(&g).unwrap());
        // in D4, a non-central reflection subgroup is subnormal but not normal
        let d4 = Group::closure(4, &[p("(0 1 2 3)", 4), p("(1 3)", 4)]).unwrap();
        let refl = Group::closure(4, &[p("(1 3)", 4)]).unwrap();
        assert!(!refl.is_normal_in(&d4));
        assert!(refl.is_subnormal_in(&d4).unwrap());
    }

    #[test]
    fn series() {
        let g = s3();
        assert_eq!(
            invariant_subnormal_series(&g, &g, &[]).unwrap(),
            vec![g.clone()]
        );
        let one = Group::trivial(3);
        let c3 = Group::closure(3, &[p("(0 1 2)", 3)]).unwrap();
        assert_eq!(
            invariant_subnormal_series(&one, &g, &[]).unwrap(),
            vec![one.clone(), g.clone()]
        );
        assert_eq!(
            invariant_composition_series(&one, &g, &[]).unwrap(),
            vec![one.clone(), c3, g.clone()]
        );
        let t = Group::closure(3, &[p("(0 1)", 3)]).unwrap();
        assert_eq!(
            invariant_subnormal_series(&t, &g, &[]).unwrap_err(),
            GroupError::NotSubnormal
        );
        let f42 = Group::closure(7, &[affine(7, 1, 1), affine(7, 3, 0)]).unwrap();
        let c7 = Group::closure(7, &[affine(7, 1, 1)]).unwrap();
        assert_eq!(
            invariant_subnormal_series(&c7, &f42, &[]).unwrap(),
            vec![c7.clone(), f42.clone()]
        );
    }

    #[test]
    fn d4_series_is_invariant() {
        let d4 = Group::closure(4, &[p("(0 1 2 3)", 4), p("(1 3)", 4)]).unwrap();
        let refl = Group::closure(4, &[p("(1 3)", 4)]).unwrap();
        let s = invariant_subnormal_series(&refl, &d4, &[p("(1 3)", 4)]).unwrap();
        assert_eq!(s.len(), 3);
        for w in s.windows(2) {
            assert!(w[0].is_normal_in(&w[1]));
        }
        assert!(s.iter().all(|x| x.is_invariant_under(&[p("(1 3)", 4)])));
        // the rotation does not stabilize the reflection subgroup
        assert!(matches!(
            invariant_subnormal_series(&refl, &d4, &[p("(0 1 2 3)", 4)]),
            Err(GroupError::NotInvariant(_))
        ));
    }

    #[test]
    fn factor_actions() {
        let f42 = Group::closure(7, &[affine(7, 1, 1), affine(7, 3, 0)]).unwrap();
        let c7 = Group::closure(7, &[affine(7, 1, 1)]).unwrap();
        let one = Group::trivial(7);
        let fa = factor_action(&c7, &one, &[affine(7, 3, 0), Perm::identity(7)]).unwrap();
        assert_eq!(fa.prime, 7);
        assert_eq!(fa.exponents, vec![3, 1]);
        // inversion on C3 inside S3
        let g = s3();
        let c3 = Group::closure(3, &[p("(0 1 2)", 3)]).unwrap();
        let fa = factor_action(&c3, &Group::trivial(3), &[p("(0 1)", 3)]).unwrap();
        assert_eq!(fa.exponents, vec![2]);
        assert_eq!(
            factor_action(&g, &Group::trivial(3), &[]).unwrap_err(),
            GroupError::NotPrimeIndex(6)
        );
        assert_eq!(
            factor_action(&f42, &c7, &[]).unwrap_err(),
            GroupError::NotPrimeIndex(6)
        );
        let t = Group::closure(3, &[p("(0 1)", 3)]).unwrap();
        assert_eq!(
            factor_action(&g, &t, &[]).unwrap_err(),
            GroupError::NotNormal
        );
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(all_subgroups(&s3()).unwrap().len(), 6);
        let s4 = Group::closure(4, &[p("(0 1 2 3)", 4), p("(0 1)", 4)]).unwrap();
        assert_eq!(all_subgroups(&s4).unwrap().len(), 30);
        let f42 = Group::closure(7, &[affine(7, 1, 1), affine(7, 3, 0)]).unwrap();
        // 1, C2 (7), C3 (7), C6 (7), C7, C7:C2, C7:C3, G
        assert_eq!(all_subgroups(&f42).unwrap().len(), 26);
    }
}
