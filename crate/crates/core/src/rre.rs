//! The decision kernel: given a Galois datum `(G, U, N)` for `L` inside
//! `E`, decide whether `L` sits in a real repeated radical extension by
//! searching for a chain `M = M₀ < M₁ < … < M_r = N` of `U`-invariant
//! subgroups with prime steps, each step `U`-isomorphic to a group of roots
//! of unity in `E`. Together with `|G:UN|` being a power of 2 this is
//! exactly the criterion for quasireal `L`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Serialize, Serializer};

use crate::arith::integer::{is_prime, prime_power};
use crate::galois::{GaloisDatum, GaloisError};
use crate::group::{factor_action, Group, GroupError, Perm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RreError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error("|G:U| = {0} is not an odd prime")]
    NotOddPrimeDegree(usize),
    #[error("V does not lie between U and G")]
    NotIntermediate,
    #[error("no chain exists for U, so intermediate preservation does not apply")]
    NoChainForField,
    #[error("neither the odd-degree nor the prime-power-degree hypotheses hold: {0}")]
    NoBranch(String),
}

/// `|G:UN|`, the degree of `L ∩ F` over the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbelianIndexCheck {
    pub index: usize,
    pub passes: bool,
}

pub fn check_abelian_index(datum: &GaloisDatum) -> AbelianIndexCheck {
    let (g, u, n) = (datum.g(), datum.u(), datum.n());
    let index = g.order() * datum.m().order() / (u.order() * n.order());
    AbelianIndexCheck {
        index,
        passes: index.is_power_of_two(),
    }
}

fn serialize_group<S: Serializer>(g: &Group, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Repr {
        order: usize,
        generators: Vec<String>,
        elements: Vec<String>,
    }
    Repr {
        order: g.order(),
        generators: g.gens().iter().map(Perm::to_string).collect(),
        elements: g.elements().iter().map(Perm::to_string).collect(),
    }
    .serialize(s)
}

/// One inclusion `S < R` of a chain, with the checks made on it by
/// [`verify_step`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    #[serde(serialize_with = "serialize_group")]
    pub subgroup: Group,
    pub prime: u64,
    pub u_invariant: bool,
    pub normal: bool,
    pub character_match: bool,
    /// Exponents by which the generators of `U` act on `R/S`.
    pub action_exponents: Vec<u64>,
    /// Character values at `prime` on the generators of `U`; empty for 2.
    pub character_values: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    #[serde(serialize_with = "serialize_group")]
    pub start: Group,
    pub steps: Vec<ChainStep>,
}

impl ChainWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.prime).collect()
    }

    /// `M₀, M₁, …, M_r`.
    pub fn subgroups(&self) -> Vec<&Group> {
        std::iter::once(&self.start)
            .chain(self.steps.iter().map(|s| &s.subgroup))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum RreVerdict {
    ChainFound {
        witness: ChainWitness,
    },
    /// The search visited every admissible chain; `enumerated` counts the
    /// distinct `U`-invariant subgroups it built.
    NoChain {
        enumerated: usize,
    },
    AbelianIndexNotTwoPower {
        index: usize,
    },
    NotApplicable {
        reason: String,
    },
}

impl RreVerdict {
    pub fn is_chain_found(&self) -> bool {
        matches!(self, RreVerdict::ChainFound { .. })
    }

    pub fn witness(&self) -> Option<&ChainWitness> {
        match self {
            RreVerdict::ChainFound { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RreVerdict::ChainFound { .. } => "ChainFound",
            RreVerdict::NoChain { .. } => "NoChain",
            RreVerdict::AbelianIndexNotTwoPower { .. } => "AbelianIndexNotTwoPower",
            RreVerdict::NotApplicable { .. } => "NotApplicable",
        }
    }
}

/// Order in which coset representatives seed new subgroups. The outcome
/// never depends on it; only the witness may.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchOrder {
    #[default]
    Forward,
    Reversed,
}

/// Checks one step from raw elements, independently of the search: `S` is
/// normal of prime index `p` in `R`, both are `U`-invariant, and for odd
/// `p` every `u` acts on `R/S` as `r ↦ r^{χ_p(u)}`.
pub fn verify_step(datum: &GaloisDatum, s: &Group, r: &Group) -> ChainStep {
    let actors = datum.u().gens();
    let u_invariant = [s, r].iter().all(|h| {
        actors
            .iter()
            .all(|u| h.elements().iter().all(|x| h.contains(&x.conjugate_by(u))))
    });
    let normal = s.is_subgroup_of(r)
        && r.gens()
            .iter()
            .all(|y| s.elements().iter().all(|x| s.contains(&x.conjugate_by(y))));
    let idx = if s.order() > 0 && r.order().is_multiple_of(s.order()) {
        (r.order() / s.order()) as u64
    } else {
        0
    };
    let prime = if is_prime(idx) { idx } else { 0 };
    let mut character_values = Vec::new();
    let mut action_exponents = Vec::new();
    let character_match = if prime == 0 || !normal || !u_invariant {
        false
    } else if prime == 2 {
        action_exponents = vec![1; actors.len()];
        true
    } else if let Some(chi) = datum.character(prime) {
        character_values = actors.iter().map(|u| chi.value(u).unwrap_or(0)).collect();
        let x = r
            .elements()
            .iter()
            .find(|x| !s.contains(x))
            .expect("proper step");
        action_exponents = actors
            .iter()
            .map(|u| {
                let img = x.conjugate_by(u);
                (1..prime)
                    .find(|&e| s.contains(&img.then(&x.pow(e as i64).inverse())))
                    .unwrap_or(0)
            })
            .collect();
        actors.iter().zip(&character_values).all(|(u, &e)| {
            r.elements()
                .iter()
                .all(|x| s.contains(&x.conjugate_by(u).then(&x.pow(e as i64).inverse())))
        })
    } else {
        false
    };
    ChainStep {
        subgroup: r.clone(),
        prime,
        u_invariant,
        normal,
        character_match,
        action_exponents,
        character_values,
    }
}

/// Re-checks a witness against the datum from scratch.
pub fn verify_witness(datum: &GaloisDatum, w: &ChainWitness) -> bool {
    if w.start != datum.m() {
        return false;
    }
    let chain = w.subgroups();
    if chain.last().map(|h| *h != datum.n()).unwrap_or(true) {
        return false;
    }
    chain.windows(2).zip(&w.steps).all(|(pair, stored)| {
        let step = verify_step(datum, pair[0], pair[1]);
        step.prime != 0
            && step.u_invariant
            && step.normal
            && step.character_match
            && step == *stored
    })
}

fn admissible(datum: &GaloisDatum, s: &Group, r: &Group) -> bool {
    let p = (r.order() / s.order()) as u64;
    if !is_prime(p) || !s.is_normal_in(r) {
        return false;
    }
    if p == 2 {
        return true;
    }
    let Some(chi) = datum.character(p) else {
        return false;
    };
    let actors = datum.u().gens();
    match factor_action(r, s, actors) {
        Ok(fa) => actors
            .iter()
            .zip(&fa.exponents)
            .all(|(u, &e)| chi.value(u) == Some(e)),
        Err(_) => false,
    }
}

fn build_witness(datum: &GaloisDatum, chain: &[Group]) -> ChainWitness {
    ChainWitness {
        start: chain[0].clone(),
        steps: chain
            .windows(2)
            .map(|w| verify_step(datum, &w[0], &w[1]))
            .collect(),
    }
}

pub fn find_rre_chain(datum: &GaloisDatum) -> RreVerdict {
    find_rre_chain_with(datum, SearchOrder::Forward)
}

/// Requires `|G:UN|` (the abelian part) to be a power of two, then a breadth-first search upward from `M`. Every
/// `U`-invariant `R` of prime index over `S` equals `⟨S, x^U⟩` for any
/// `x ∈ R \ S`, so seeding from coset representatives of `S` in `N` is
/// exhaustive.
pub fn find_rre_chain_with(datum: &GaloisDatum, order: SearchOrder) -> RreVerdict {
    if !datum.is_quasireal() {
        return RreVerdict::NotApplicable {
            reason: match datum.labels().field.as_str() {
                "" => "the field is not quasireal".to_string(),
                f => format!("{f} is not quasireal"),
            },
        };
    }
    let ci = check_abelian_index(datum);
    if !ci.passes {
        return RreVerdict::AbelianIndexNotTwoPower { index: ci.index };
    }
    let (n, u) = (datum.n(), datum.u());
    let m = datum.m();
    let degree = n.degree();
    let mut parent: HashMap<Group, Option<Group>> = HashMap::from([(m.clone(), None)]);
    let mut seen: HashSet<Group> = HashSet::from([m.clone()]);
    let mut queue = VecDeque::from([m]);
    while let Some(s) = queue.pop_front() {
        if s == *n {
            let mut chain = vec![s.clone()];
            while let Some(Some(prev)) = parent.get(chain.last().expect("nonempty")) {
                chain.push(prev.clone());
            }
            chain.reverse();
            return RreVerdict::ChainFound {
                witness: build_witness(datum, &chain),
            };
        }
        let mut reps = s.right_coset_reps(n);
        if order == SearchOrder::Reversed {
            reps.reverse();
        }
        for x in reps.iter().filter(|x| !s.contains(x)) {
            let mut gens: Vec<Perm> = s.gens().to_vec();
            gens.extend(u.elements().iter().map(|y| x.conjugate_by(y)));
            let r = Group::closure(degree, &gens).expect("subgroup of N");
            seen.insert(r.clone());
            if parent.contains_key(&r) || !admissible(datum, &s, &r) {
                continue;
            }
            parent.insert(r.clone(), Some(s.clone()));
            queue.push_back(r);
        }
    }
    RreVerdict::NoChain {
        enumerated: seen.len(),
    }
}

/// The prime-degree criterion: for `|G:U| = p` an odd prime, `L` is radical
/// iff `|N:M| = p`, `M ◁ N` and `U` acts on `N/M` through the character at
/// `p`.
pub fn check_prime_degree_radical(datum: &GaloisDatum) -> Result<RreVerdict, RreError> {
    let deg = datum.field_degree();
    if deg.is_multiple_of(2) || !is_prime(deg as u64) {
        return Err(RreError::NotOddPrimeDegree(deg));
    }
    let p = deg as u64;
    let (m, n) = (datum.m(), datum.n());
    if n.order() != m.order() * deg || !m.is_normal_in(n) {
        return Ok(RreVerdict::NoChain { enumerated: 1 });
    }
    if datum.character(p).is_none() {
        return Ok(RreVerdict::NotApplicable {
            reason: format!("E has no primitive {p}-th roots of unity"),
        });
    }
    if !admissible(datum, &m, n) {
        return Ok(RreVerdict::NoChain { enumerated: 1 });
    }
    Ok(RreVerdict::ChainFound {
        witness: build_witness(datum, &[m, n.clone()]),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PreservationBranch {
    /// `|L:Q|` odd, with an involution in `U` inverting every character.
    OddDegree,
    /// `|L:Q|` a prime power and `L` quasireal.
    PrimePowerDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Preservation {
    pub branch: PreservationBranch,
    pub verdict: RreVerdict,
}

fn involution_inverts_characters(datum: &GaloisDatum) -> bool {
    let Some(s) = datum.involution() else {
        return false;
    };
    datum
        .characters()
        .all(|chi| chi.value(s) == Some(chi.prime() - 1))
}

/// For `U ≤ V ≤ G`, reruns the chain search for the fixed field `K` of `V`.
/// When `L` lies in a real repeated radical extension and either
/// hypothesis branch holds, so does `K`.
pub fn intermediate_preservation(datum: &GaloisDatum, v: &Group) -> Result<Preservation, RreError> {
    if !datum.u().is_subgroup_of(v) || !v.is_subgroup_of(datum.g()) {
        return Err(RreError::NotIntermediate);
    }
    let deg = datum.field_degree();
    let branch = if deg % 2 == 1 && involution_inverts_characters(datum) {
        PreservationBranch::OddDegree
    } else if deg == 1 || (prime_power(deg as u64).is_some() && datum.is_quasireal()) {
        PreservationBranch::PrimePowerDegree
    } else {
        return Err(RreError::NoBranch(format!("|G:U| = {deg}")));
    };
    if !find_rre_chain(datum).is_chain_found() {
        return Err(RreError::NoChainForField);
    }
    let k = datum.with_field_group(
        v.clone(),
        format!(
            "fixed field of a subgroup of order {} (degree {})",
            v.order(),
            datum.g().order() / v.order()
        ),
    )?;
    Ok(Preservation {
        branch,
        verdict: find_rre_chain(&k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::galois::{
        build_binomial, build_cyclotomic, synthetic_c9_datum, unit_subgroup_by_order,
    };
    use crate::group::subgroups_between;

    fn cyclotomic_19_pair() -> (GaloisDatum, GaloisDatum) {
        let h9 = unit_subgroup_by_order(19, 9).unwrap();
        let h3 = unit_subgroup_by_order(19, 3).unwrap();
        (
            build_cyclotomic(19, &h9, &h3).unwrap(),
            build_cyclotomic(19, &h9, &[1]).unwrap(),
        )
    }

    #[test]
    fn abelian_index_examples() {
        let b = build_binomial(3, &int(2)).unwrap();
        assert_eq!(
            check_abelian_index(&b),
            AbelianIndexCheck {
                index: 1,
                passes: true
            }
        );
        let (k, _) = cyclotomic_19_pair();
        assert_eq!(
            check_abelian_index(&k),
            AbelianIndexCheck {
                index: 3,
                passes: false
            }
        );
        let top = b.with_field_group(b.g().clone(), "Q".into()).unwrap();
        assert_eq!(check_abelian_index(&top).index, 1);
    }

    #[test]
    fn binomial_chain() {
        for p in [3, 5, 7] {
            let d = build_binomial(p, &int(2)).unwrap();
            let v = find_rre_chain(&d);
            let w = v.witness().expect("chain");
            assert_eq!(w.primes(), vec![p]);
            assert!(verify_witness(&d, w));
            assert_eq!(check_prime_degree_radical(&d).unwrap().name(), "ChainFound");
        }
    }

    #[test]
    fn cyclotomic_19_verdicts() {
        let (k, l) = cyclotomic_19_pair();
        assert_eq!(
            find_rre_chain(&k),
            RreVerdict::AbelianIndexNotTwoPower { index: 3 }
        );
        assert_eq!(check_prime_degree_radical(&k).unwrap().name(), "NoChain");
        assert_eq!(find_rre_chain(&l).name(), "NotApplicable");
        assert!(l.radical_by_construction().is_some());
    }

    #[test]
    fn trivial_field_gives_empty_chain() {
        let d = build_binomial(5, &int(3)).unwrap();
        let top = d.with_field_group(d.g().clone(), "Q".into()).unwrap();
        let v = find_rre_chain(&top);
        assert!(v.witness().unwrap().is_empty());
    }

    #[test]
    fn c9_two_step_chain() {
        let d = synthetic_c9_datum();
        let v = find_rre_chain(&d);
        let w = v.witness().unwrap();
        assert_eq!(w.primes(), vec![3, 3]);
        assert!(verify_witness(&d, w));
        assert!(find_rre_chain_with(&d, SearchOrder::Reversed).is_chain_found());
    }

    #[test]
    fn tampered_witness_rejected() {
        let d = build_binomial(7, &int(2)).unwrap();
        let mut w = find_rre_chain(&d).witness().unwrap().clone();
        w.steps[0].character_values[0] = (w.steps[0].character_values[0] % 6) + 1;
        assert!(!verify_witness(&d, &w));
        let mut w2 = find_rre_chain(&d).witness().unwrap().clone();
        w2.start = d.n().clone();
        assert!(!verify_witness(&d, &w2));
    }

    #[test]
    fn wrong_character_blocks_chain() {
        // a datum whose character at 3 disagrees with the action of U on N
        let b = build_binomial(3, &int(2)).unwrap();
        let mut j = b.to_json();
        for c in &mut j.characters {
            c.generator_values = vec![1; c.generator_values.len()];
        }
        let d = GaloisDatum::from_json(&j).unwrap();
        assert_eq!(find_rre_chain(&d), RreVerdict::NoChain { enumerated: 2 });
        assert_eq!(check_prime_degree_radical(&d).unwrap().name(), "NoChain");
    }

    #[test]
    fn preservation_binomial_and_c9() {
        for d in [build_binomial(7, &int(2)).unwrap(), synthetic_c9_datum()] {
            let vs = subgroups_between(d.u(), d.g()).unwrap();
            assert!(vs.len() >= 2);
            for v in &vs {
                let p = intermediate_preservation(&d, v).unwrap();
                assert_eq!(p.branch, PreservationBranch::OddDegree);
                assert!(p.verdict.is_chain_found(), "order {}", v.order());
            }
        }
        assert_eq!(
            subgroups_between(synthetic_c9_datum().u(), synthetic_c9_datum().g())
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn preservation_rejects_bad_v() {
        let d = build_binomial(5, &int(2)).unwrap();
        assert_eq!(
            intermediate_preservation(&d, d.n()),
            Err(RreError::NotIntermediate)
        );
    }

    #[test]
    fn verdict_json_shape() {
        let d = build_binomial(3, &int(2)).unwrap();
        let j = serde_json::to_value(find_rre_chain(&d)).unwrap();
        assert_eq!(j["outcome"], "ChainFound");
        assert_eq!(j["witness"]["steps"][0]["prime"], 3);
        assert_eq!(j["witness"]["steps"][0]["subgroup"]["order"], 3);
        let j = serde_json::to_value(RreVerdict::AbelianIndexNotTwoPower { index: 3 }).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"outcome": "AbelianIndexNotTwoPower", "index": 3})
        );
    }
}
