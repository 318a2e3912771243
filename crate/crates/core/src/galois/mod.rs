//! Galois data `(G, U, N)` plus cyclotomic characters for families where
//! they can be written down exactly. The fields themselves are never
//! materialized: `G = Gal(E/Q)`, `U = Gal(E/L)`, `N = Gal(E/F)` with `F`
//! abelian over the base and containing every root of unity in `E`.

mod families;
mod small_degree;

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::arith::integer::is_prime;
use crate::group::{Group, GroupError, Perm, PermError};

pub use families::{
    build_affine_radical, build_binomial, build_cyclotomic, parse_unit_subgroup,
    real_two_power_subfield, synthetic_c9_datum, unit_subgroup_by_order, unit_subgroup_generators,
    RealTwoPowerSubfield, MAX_BINOMIAL_PRIME, MAX_CYCLOTOMIC_INDEX,
};
pub use small_degree::{
    galois_group_small_degree, quartic_resolvent_cubic, GaloisGroupLabel, GaloisGroupReport,
};

/// Largest permutation degree accepted when reading a datum from JSON.
pub const MAX_DATUM_DEGREE: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaloisError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0} is not a subgroup of G")]
    NotSubgroup(&'static str),
    #[error("N is not normal in G")]
    NotNormal,
    #[error("G/N is not abelian")]
    QuotientNotAbelian,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("character at {0} has {1} generator values, G has {2} generators")]
    CharacterArity(u64, usize, usize),
    #[error("character at {0} is not a homomorphism into (Z/{0})^x")]
    CharacterNotHomomorphism(u64),
    #[error("character at {0} is nontrivial on N")]
    CharacterNontrivialOnN(u64),
    #[error("designated involution is not an element of order 2 in U")]
    BadInvolution,
    #[error("X^{p} - ({a}) is reducible: {a} is a perfect power")]
    ReducibleBinomial { p: u64, a: String },
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("bad subgroup: {0}")]
    BadSubgroupSpec(String),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(u64, u64),
    #[error("field subgroup is not contained in the ground subgroup")]
    FieldNotInGround,
    #[error("(Z/{n})^x has {count} subgroups of order {order}")]
    AmbiguousSubgroup { n: u64, order: usize, count: usize },
    #[error("polynomial error: {0}")]
    Poly(String),
    #[error("invalid datum JSON: {0}")]
    Json(String),
}

/// A homomorphism `G → (Z/p)^×` describing how `G` moves the `p`-th roots
/// of unity: `σ(ε) = ε^{χ(σ)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    prime: u64,
    generator_values: Vec<u64>,
    values: HashMap<Perm, u64>,
}

impl Character {
    /// Extends generator values to all of `g`, failing unless the result
    /// is a well-defined homomorphism.
    pub fn from_generators(
        g: &Group,
        prime: u64,
        generator_values: Vec<u64>,
    ) -> Result<Self, GaloisError> {
        if !is_prime(prime) {
            return Err(GaloisError::NotPrime(prime));
        }
        if generator_values.len() != g.gens().len() {
            return Err(GaloisError::CharacterArity(
                prime,
                generator_values.len(),
                g.gens().len(),
            ));
        }
        let gv: Vec<u64> = generator_values.iter().map(|v| v % prime).collect();
        if gv.contains(&0) {
            return Err(GaloisError::CharacterNotHomomorphism(prime));
        }
        let mut values = HashMap::new();
        values.insert(g.identity(), 1 % prime);
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(x) = queue.pop_front() {
            let vx = values[&x];
            for (gen, &e) in g.gens().iter().zip(&gv) {
                let y = x.then(gen);
                let vy = vx * e % prime;
                match values.get(&y) {
                    Some(&prev) if prev != vy => {
                        return Err(GaloisError::CharacterNotHomomorphism(prime))
                    }
                    Some(_) => {}
                    None => {
                        values.insert(y.clone(), vy);
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(Self {
            prime,
            generator_values: gv,
            values,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Values on the generators of `G`, in order.
    pub fn generator_values(&self) -> &[u64] {
        &self.generator_values
    }

    /// `χ(x)`, or `None` if `x ∉ G`.
    pub fn value(&self, x: &Perm) -> Option<u64> {
        self.values.get(x).copied()
    }
}

/// Human-readable names for the fields in play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct FieldLabels {
    /// Base field, fixed by `G`.
    pub base: String,
    /// The field `L`, fixed by `U`.
    pub field: String,
    /// The Galois closure `E`.
    pub splitting_field: String,
    /// The abelian field `F`, fixed by `N`.
    pub abelian_field: String,
}

/// The configuration `(G, U, N)` with characters. `M = U ∩ N` is always
/// recomputed, never stored.
#[derive(Debug, Clone)]
pub struct GaloisDatum {
    g: Group,
    u: Group,
    n: Group,
    characters: BTreeMap<u64, Character>,
    labels: FieldLabels,
    quasireal: bool,
    involution: Option<Perm>,
    radical_by_construction: Option<String>,
}

/// Optional data attached to a datum beyond the groups and characters.
#[derive(Debug, Clone, Default)]
pub struct DatumExtras {
    pub labels: FieldLabels,
    /// Whether `L` contains no roots of unity other than `±1`.
    pub quasireal: bool,
    /// An element of `U` of order 2 playing the role of complex conjugation.
    pub involution: Option<Perm>,
    /// Set when `L` is radical over the base for a structural reason, e.g.
    /// it is generated by a root of unity.
    pub radical_by_construction: Option<String>,
}

impl GaloisDatum {
    /// Validates: `U, N ≤ G`, `N ◁ G`, `G/N` abelian, every character a
    /// homomorphism trivial on `N`, and the involution (if any) an element
    /// of order 2 in `U`.
    pub fn new(
        g: Group,
        u: Group,
        n: Group,
        characters: Vec<Character>,
        extras: DatumExtras,
    ) -> Result<Self, GaloisError> {
        if !u.is_subgroup_of(&g) {
            return Err(GaloisError::NotSubgroup("U"));
        }
        if !n.is_subgroup_of(&g) {
            return Err(GaloisError::NotSubgroup("N"));
        }
        if !n.is_normal_in(&g) {
            return Err(GaloisError::NotNormal);
        }
        if !n.contains_commutators_of(&g) {
            return Err(GaloisError::QuotientNotAbelian);
        }
        let mut map = BTreeMap::new();
        for c in characters {
            if c.values.len() != g.order() || g.elements().iter().any(|x| c.value(x).is_none()) {
                return Err(GaloisError::CharacterNotHomomorphism(c.prime));
            }
            if n.gens().iter().any(|x| c.value(x) != Some(1)) {
                return Err(GaloisError::CharacterNontrivialOnN(c.prime));
            }
            map.insert(c.prime, c);
        }
        if let Some(s) = &extras.involution {
            if !u.contains(s) || s.order() != 2 {
                return Err(GaloisError::BadInvolution);
            }
        }
        Ok(Self {
            g,
            u,
            n,
            characters: map,
            labels: extras.labels,
            quasireal: extras.quasireal,
            involution: extras.involution,
            radical_by_construction: extras.radical_by_construction,
        })
    }

    pub fn g(&self) -> &Group {
        &self.g
    }

    pub fn u(&self) -> &Group {
        &self.u
    }

    pub fn n(&self) -> &Group {
        &self.n
    }

    /// `M = U ∩ N`.
    pub fn m(&self) -> Group {
        self.u.intersection(&self.n)
    }

    /// `|L : base| = |G : U|`.
    pub fn field_degree(&self) -> usize {
        self.g.order() / self.u.order()
    }

    pub fn character(&self, p: u64) -> Option<&Character> {
        self.characters.get(&p)
    }

    pub fn characters(&self) -> impl Iterator<Item = &Character> {
        self.characters.values()
    }

    pub fn labels(&self) -> &FieldLabels {
        &self.labels
    }

    pub fn is_quasireal(&self) -> bool {
        self.quasireal
    }

    pub fn involution(&self) -> Option<&Perm> {
        self.involution.as_ref()
    }

    pub fn radical_by_construction(&self) -> Option<&str> {
        self.radical_by_construction.as_deref()
    }

    /// The datum for the intermediate field fixed by `v` (`U ≤ V ≤ G`). A
    /// subfield of a quasireal field is quasireal.
    pub fn with_field_group(&self, v: Group, field_label: String) -> Result<Self, GaloisError> {
        if !self.u.is_subgroup_of(&v) || !v.is_subgroup_of(&self.g) {
            return Err(GaloisError::NotSubgroup("V"));
        }
        let mut labels = self.labels.clone();
        labels.field = field_label;
        Ok(Self {
            u: v,
            labels,
            radical_by_construction: None,
            ..self.clone()
        })
    }

    pub fn to_json(&self) -> DatumJson {
        let gens = |h: &Group| GroupJson {
            order: Some(h.order()),
            generators: h.gens().iter().map(Perm::to_string).collect(),
        };
        DatumJson {
            degree: self.g.degree(),
            g: gens(&self.g),
            u: gens(&self.u),
            n: gens(&self.n),
            m: Some(gens(&self.m())),
            characters: self
                .characters
                .values()
                .map(|c| CharacterJson {
                    prime: c.prime,
                    generator_values: c.generator_values.clone(),
                })
                .collect(),
            labels: self.labels.clone(),
            quasireal: self.quasireal,
            involution: self.involution.as_ref().map(Perm::to_string),
            radical_by_construction: self.radical_by_construction.clone(),
        }
    }

    /// Rebuilds and revalidates a datum from its JSON form. Stated orders
    /// and `M`, when present, must match what the generators produce.
    pub fn from_json(j: &DatumJson) -> Result<Self, GaloisError> {
        if j.degree == 0 || j.degree > MAX_DATUM_DEGREE {
            return Err(GaloisError::Json(format!(
                "degree must lie in 1..={MAX_DATUM_DEGREE}"
            )));
        }
        let build = |gj: &GroupJson| -> Result<Group, GaloisError> {
            let gens = gj
                .generators
                .iter()
                .map(|s| Perm::parse(s, j.degree))
                .collect::<Result<Vec<_>, _>>()?;
            let h = Group::closure(j.degree, &gens)?;
            if gj.order.is_some_and(|o| o != h.order()) {
                return Err(GaloisError::Json(
                    "stated order differs from generated order".into(),
                ));
            }
            Ok(h)
        };
        let g = build(&j.g)?;
        let u = build(&j.u)?;
        let n = build(&j.n)?;
        let characters = j
            .characters
            .iter()
            .map(|c| Character::from_generators(&g, c.prime, c.generator_values.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let involution = j
            .involution
            .as_deref()
            .map(|s| Perm::parse(s, j.degree))
            .transpose()?;
        let datum = Self::new(
            g,
            u,
            n,
            characters,
            DatumExtras {
                labels: j.labels.clone(),
                quasireal: j.quasireal,
                involution,
                radical_by_construction: j.radical_by_construction.clone(),
            },
        )?;
        if let Some(mj) = &j.m {
            if build(mj)? != datum.m() {
                return Err(GaloisError::Json("M differs from U ∩ N".into()));
            }
        }
        Ok(datum)
    }

    pub fn from_json_str(s: &str) -> Result<Self, GaloisError> {
        let j: DatumJson = serde_json::from_str(s).map_err(|e| GaloisError::Json(e.to_string()))?;
        Self::from_json(&j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    /// Generators in cycle notation.
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub prime: u64,
    /// `χ` on each generator of `G`, as residues mod `prime`.
    pub generator_values: Vec<u64>,
}

/// Serialized datum. Groups act on `0..degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumJson {
    pub degree: usize,
    #[serde(rename = "G")]
    pub g: GroupJson,
    #[serde(rename = "U")]
    pub u: GroupJson,
    #[serde(rename = "N")]
    pub n: GroupJson,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<GroupJson>,
    #[serde(default)]
    pub characters: Vec<CharacterJson>,
    #[serde(default)]
    pub labels: FieldLabels,
    #[serde(default)]
    pub quasireal: bool,
    #[serde(default)]
    pub involution: Option<String>,
    #[serde(default)]
    pub radical_by_construction: Option<String>,
}
