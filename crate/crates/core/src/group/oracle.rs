//! Brute-force checks of the group-theoretic facts behind the radical
//! criteria. Each oracle verifies its hypotheses exhaustively, reports a
//! violated hypothesis as an error, and otherwise returns whether the
//! conclusion holds. The sweeps generate instances and count failures.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::catalog::small_groups;
use super::linalg::{all_subspaces, decode, general_linear_group, Mat, Subspace};
use super::perm::{Perm, PermError};
use super::perm_group::{all_subgroups, subgroups_between, Group, GroupError};
use super::table::map_to_perm;
use crate::arith::integer::prime_power;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("generator matrices do not define an action")]
    NotHomomorphism,
    #[error("every module element has order dividing |P| - 1")]
    NoWitnessElement,
    #[error("automorphism does not have order {0}")]
    WrongAutomorphismOrder(u64),
    #[error("{0} is not invariant under the automorphism")]
    NotInvariant(&'static str),
    #[error("M is not subnormal in N")]
    NotSubnormal,
    #[error("no invariant subnormal series with fixed-point-free factors")]
    NoFixedPointFreeSeries,
    #[error("section does not satisfy M <= S normal in R <= N")]
    BadSection,
    #[error("permutation is not a linear map on F_{0}^{1}")]
    NotLinear(u32, usize),
    #[error("index |V:U| is not a power of {0}")]
    IndexNotPrimePower(u32),
    #[error("module is not simple")]
    NotSimple,
    #[error("U-composition factors are not all one-dimensional and isomorphic")]
    FactorsNotEqualScalars,
}

/// Outcome counts for one family of oracle instances.
#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    /// Instances generated.
    pub instances: usize,
    /// Instances whose hypotheses were verified and conclusion checked.
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.checked > 0
    }

    fn record(&mut self, outcome: Result<bool, OracleError>, describe: impl FnOnce() -> String) {
        self.instances += 1;
        match outcome {
            Ok(true) => self.checked += 1,
            Ok(false) => {
                self.checked += 1;
                self.counterexamples.push(describe());
            }
            Err(_) => {}
        }
    }
}

// ---------------------------------------------------------------- modules

/// `F_p^k` with a group acting on the right through matrices.
#[derive(Debug, Clone)]
pub struct MatrixModule {
    p: u32,
    k: usize,
    action: HashMap<Perm, Mat>,
}

impl MatrixModule {
    /// `images[i]` is the matrix of `g.gens()[i]`. Fails unless the
    /// assignment extends to a homomorphism.
    pub fn new(g: &Group, p: u32, k: usize, images: &[Mat]) -> Result<Self, OracleError> {
        if images.len() != g.gens().len() || images.iter().any(|m| m.dim() != k || m.prime() != p) {
            return Err(OracleError::NotHomomorphism);
        }
        let mut action = HashMap::new();
        action.insert(g.identity(), Mat::identity(p, k));
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(x) = queue.pop_front() {
            let mx = action[&x].clone();
            for (gen, img) in g.gens().iter().zip(images) {
                let y = x.then(gen);
                let my = mx.mul(img);
                match action.get(&y) {
                    Some(prev) if *prev != my => return Err(OracleError::NotHomomorphism),
                    Some(_) => {}
                    None => {
                        action.insert(y.clone(), my);
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(Self { p, k, action })
    }

    pub fn matrix(&self, x: &Perm) -> Option<&Mat> {
        self.action.get(x)
    }

    /// Whether some nonzero vector is fixed by every element of `h`.
    pub fn has_fixed_points(&self, h: &Group) -> bool {
        let mats: Vec<&Mat> = h.gens().iter().filter_map(|x| self.action.get(x)).collect();
        let total = (self.p as usize).pow(self.k as u32);
        (1..total).any(|x| {
            let v = decode(self.p, self.k, x);
            mats.iter().all(|m| m.apply(&v) == v)
        })
    }
}

// ---------------------------------------------------------- partitions

/// Every partition of `g` into nontrivial subgroups with pairwise trivial
/// intersections.
pub fn partitions(g: &Group) -> Result<Vec<Vec<Group>>, OracleError> {
    let subs: Vec<Group> = all_subgroups(g)?
        .into_iter()
        .filter(|h| !h.is_trivial())
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut covered: HashSet<Perm> = HashSet::new();
    covered.insert(g.identity());
    fn rec(
        g: &Group,
        subs: &[Group],
        chosen: &mut Vec<usize>,
        covered: &mut HashSet<Perm>,
        out: &mut Vec<Vec<Group>>,
    ) {
        let Some(x) = g.elements().iter().find(|x| !covered.contains(*x)) else {
            out.push(chosen.iter().map(|&i| subs[i].clone()).collect());
            return;
        };
        for (i, h) in subs.iter().enumerate() {
            if h.contains(x)
                && h.elements()
                    .iter()
                    .all(|e| e.is_identity() || !covered.contains(e))
            {
                chosen.push(i);
                for e in h.elements() {
                    covered.insert(e.clone());
                }
                rec(g, subs, chosen, covered, out);
                for e in h.elements() {
                    if !e.is_identity() {
                        covered.remove(e);
                    }
                }
                chosen.pop();
            }
        }
    }
    rec(g, &subs, &mut chosen, &mut covered, &mut out);
    Ok(out)
}

fn check_partition(g: &Group, parts: &[Group]) -> Result<(), OracleError> {
    for h in parts {
        if !h.is_subgroup_of(g) {
            return Err(OracleError::NotPartition(format!("{h} is not a subgroup")));
        }
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if !a.intersection(b).is_trivial() {
                return Err(OracleError::NotPartition(format!("{a} and {b} intersect")));
            }
        }
    }
    let covered: usize = parts.iter().map(|h| h.order() - 1).sum();
    if covered != g.order() - 1 {
        return Err(OracleError::NotPartition(
            "members do not cover the group".into(),
        ));
    }
    Ok(())
}

/// If `g` is partitioned by `parts` and acts on an elementary abelian
/// `p`-group whose nonzero elements have order not dividing `|parts| − 1`,
/// some member has a nonzero fixed vector.
pub fn oracle_partition_fixed_points(
    g: &Group,
    parts: &[Group],
    module: &MatrixModule,
) -> Result<bool, OracleError> {
    check_partition(g, parts)?;
    if module.k == 0 || (parts.len() - 1).is_multiple_of(module.p as usize) {
        return Err(OracleError::NoWitnessElement);
    }
    Ok(parts.iter().any(|h| module.has_fixed_points(h)))
}

fn partition_sweep(name: &str, g: &Group, p: u32, k: usize) -> Result<SweepReport, OracleError> {
    let mut rep = SweepReport::new(name);
    let parts = partitions(g)?;
    let gl = general_linear_group(p, k);
    let ngens = g.gens().len();
    let total = gl.len().pow(ngens as u32);
    for idx in 0..total {
        let images: Vec<Mat> = (0..ngens)
            .map(|i| gl[idx / gl.len().pow(i as u32) % gl.len()].clone())
            .collect();
        let Ok(module) = MatrixModule::new(g, p, k, &images) else {
            continue;
        };
        for (pi, part) in parts.iter().enumerate() {
            rep.record(oracle_partition_fixed_points(g, part, &module), || {
                format!("{name}: partition #{pi}, generator matrices {images:?}")
            });
        }
    }
    Ok(rep)
}

/// `C2×C2` on `F_3²`, over every homomorphism into `GL(2, 3)` and every
/// partition.
pub fn sweep_partition_klein() -> Result<SweepReport, OracleError> {
    let g = Group::closure(
        4,
        &[Perm::parse("(0 1)(2 3)", 4)?, Perm::parse("(0 2)(1 3)", 4)?],
    )?;
    partition_sweep("partition fixed points: C2xC2 on F_3^2", &g, 3, 2)
}

/// The Frobenius group of order 21 on `F_2³`, over every homomorphism into
/// `GL(3, 2)` and every partition.
pub fn sweep_partition_frobenius21() -> Result<SweepReport, OracleError> {
    let g = Group::closure(
        7,
        &[
            Perm::from_fn(7, |x| (x + 1) % 7)?,
            Perm::from_fn(7, |x| 2 * x % 7)?,
        ],
    )?;
    partition_sweep("partition fixed points: F21 on F_2^3", &g, 2, 3)
}

// ------------------------------------------- fixed-point-free sections

/// Whether `x ↦ s⁻¹xs` fixes no nontrivial coset of `s_grp` in `r`.
pub fn acts_fpf_on_section(r: &Group, s_grp: &Group, sigma: &Perm) -> bool {
    r.elements()
        .iter()
        .filter(|x| !s_grp.contains(x))
        .all(|x| !s_grp.contains(&x.conjugate_by(sigma).then(&x.inverse())))
}

/// Order of conjugation by `sigma` as an automorphism of `n`.
pub fn automorphism_order(n: &Group, sigma: &Perm) -> u64 {
    let mut e = 1;
    let mut s = sigma.clone();
    while !n.gens().iter().all(|g| g.conjugate_by(&s) == *g) {
        s = s.then(sigma);
        e += 1;
    }
    e
}

/// Shared state for oracles about one automorphism `σ` of `N`: the
/// subgroup lattice, which members are σ-invariant, and memoized series
/// searches.
pub struct SigmaContext<'a> {
    n: &'a Group,
    sigma: Perm,
    lattice: &'a [Group],
    invariant: Vec<bool>,
}

impl<'a> SigmaContext<'a> {
    pub fn new(n: &'a Group, lattice: &'a [Group], sigma: Perm) -> Self {
        let invariant = lattice
            .iter()
            .map(|h| h.is_invariant_under(std::slice::from_ref(&sigma)))
            .collect();
        Self {
            n,
            sigma,
            lattice,
            invariant,
        }
    }

    fn index(&self, h: &Group) -> Option<usize> {
        self.lattice.iter().position(|x| x == h)
    }

    /// Searches for a σ-invariant series from `m` to `n` whose factors
    /// all admit σ fixed-point-freely.
    pub fn has_fpf_series(&self, m: &Group) -> bool {
        let Some(mi) = self.index(m) else {
            return false;
        };
        let Some(ni) = self.index(self.n) else {
            return false;
        };
        let mut memo: HashMap<usize, bool> = HashMap::new();
        self.fpf_series_from(ni, mi, &mut memo)
    }

    fn fpf_series_from(&self, x: usize, m: usize, memo: &mut HashMap<usize, bool>) -> bool {
        if x == m {
            return true;
        }
        if let Some(&v) = memo.get(&x) {
            return v;
        }
        let (xg, mg) = (&self.lattice[x], &self.lattice[m]);
        let found = (0..self.lattice.len()).any(|y| {
            let yg = &self.lattice[y];
            y != x
                && self.invariant[y]
                && mg.is_subgroup_of(yg)
                && yg.is_normal_in(xg)
                && acts_fpf_on_section(xg, yg, &self.sigma)
                && self.fpf_series_from(y, m, memo)
        });
        memo.insert(x, found);
        found
    }

    fn check_hypotheses(&self, m: &Group, p: u64) -> Result<(), OracleError> {
        if automorphism_order(self.n, &self.sigma) != p {
            return Err(OracleError::WrongAutomorphismOrder(p));
        }
        if !self.n.is_invariant_under(std::slice::from_ref(&self.sigma)) {
            return Err(OracleError::NotInvariant("N"));
        }
        if !m.is_invariant_under(std::slice::from_ref(&self.sigma)) {
            return Err(OracleError::NotInvariant("M"));
        }
        if !m.is_subnormal_in(self.n)? {
            return Err(OracleError::NotSubnormal);
        }
        if !self.has_fpf_series(m) {
            return Err(OracleError::NoFixedPointFreeSeries);
        }
        Ok(())
    }

    /// Fixed-point-free action on every invariant section above `m`, and on
    /// the cosets of `m` itself (so `|N:M| ≡ 1 mod p`).
    pub fn fpf_section(
        &self,
        m: &Group,
        p: u64,
        r: &Group,
        s: &Group,
    ) -> Result<bool, OracleError> {
        self.check_hypotheses(m, p)?;
        if !(m.is_subgroup_of(s) && s.is_normal_in(r) && r.is_subgroup_of(self.n)) {
            return Err(OracleError::BadSection);
        }
        for (h, name) in [(r, "R"), (s, "S")] {
            if !h.is_invariant_under(std::slice::from_ref(&self.sigma)) {
                return Err(OracleError::NotInvariant(name));
            }
        }
        let index_ok = (self.n.order() / m.order()) as u64 % p == 1;
        Ok(index_ok && acts_fpf_on_section(r, s, &self.sigma))
    }

    /// Every subgroup between `m` and `N` is subnormal and σ-invariant;
    /// for `p > 2` invariance of `r` is a hypothesis instead.
    pub fn intermediate_subnormal(
        &self,
        m: &Group,
        p: u64,
        r: &Group,
    ) -> Result<bool, OracleError> {
        self.check_hypotheses(m, p)?;
        if !(m.is_subgroup_of(r) && r.is_subgroup_of(self.n)) {
            return Err(OracleError::BadSection);
        }
        let inv = r.is_invariant_under(std::slice::from_ref(&self.sigma));
        if p > 2 && !inv {
            return Err(OracleError::NotInvariant("R"));
        }
        Ok(r.is_subnormal_in(self.n)? && inv)
    }
}

/// Single-instance entry point computing the lattice itself.
pub fn oracle_fpf_section(
    n: &Group,
    m: &Group,
    sigma: &Perm,
    p: u64,
    r: &Group,
    s: &Group,
) -> Result<bool, OracleError> {
    let lattice = subgroups_between(m, n)?;
    SigmaContext::new(n, &lattice, sigma.clone()).fpf_section(m, p, r, s)
}

/// Single-instance entry point computing the lattice itself.
pub fn oracle_intermediate_subnormal(
    n: &Group,
    m: &Group,
    sigma: &Perm,
    p: u64,
    r: &Group,
) -> Result<bool, OracleError> {
    let lattice = subgroups_between(m, n)?;
    SigmaContext::new(n, &lattice, sigma.clone()).intermediate_subnormal(m, p, r)
}

/// Sweep over every group `N` of order `≤ max_order`, every automorphism σ
/// of order `p`, every σ-invariant subnormal `M` admitting a
/// fixed-point-free invariant series, and every `R` (and invariant section
/// `R/S`) between them.
pub fn sweep_subnormal_preservation(
    max_order: usize,
    p: u64,
) -> Result<(SweepReport, SweepReport), OracleError> {
    let mut pres = SweepReport::new(&format!(
        "intermediate subgroups subnormal (|N| <= {max_order}, |sigma| = {p})"
    ));
    let mut sec = SweepReport::new(&format!(
        "fixed-point-free sections (|N| <= {max_order}, |sigma| = {p})"
    ));
    for entry in small_groups(max_order) {
        let table = &entry.table;
        let n = table.regular_rep();
        let lattice = all_subgroups(&n)?;
        let subnormal: Vec<bool> = lattice
            .iter()
            .map(|h| h.is_subnormal_in(&n))
            .collect::<Result<_, _>>()?;
        for aut in table.automorphisms() {
            let sigma = map_to_perm(&aut);
            if automorphism_order(&n, &sigma) != p {
                continue;
            }
            let ctx = SigmaContext::new(&n, &lattice, sigma.clone());
            for (mi, m) in lattice.iter().enumerate() {
                if !(ctx.invariant[mi] && subnormal[mi] && ctx.has_fpf_series(m)) {
                    continue;
                }
                let label = |what: &str| format!("{} sigma={} M={} {what}", entry.name, sigma, m);
                for r in lattice.iter().filter(|r| m.is_subgroup_of(r)) {
                    if p > 2 && !r.is_invariant_under(std::slice::from_ref(&sigma)) {
                        continue;
                    }
                    pres.record(ctx.intermediate_subnormal(m, p, r), || {
                        label(&format!("R={r}"))
                    });
                }
                for (ri, r) in lattice.iter().enumerate() {
                    if !ctx.invariant[ri] || !m.is_subgroup_of(r) {
                        continue;
                    }
                    for (si, s) in lattice.iter().enumerate() {
                        if ctx.invariant[si] && m.is_subgroup_of(s) && s.is_normal_in(r) {
                            sec.record(ctx.fpf_section(m, p, r, s), || {
                                label(&format!("R={r} S={s}"))
                            });
                        }
                    }
                }
            }
        }
    }
    Ok((pres, sec))
}

// ------------------------------------------------- simple modules in char p

/// Checks that every generator of `v` (acting on the `p^k` vectors of
/// `F_p^k`, indexed base `p`) is linear and returns the matrices.
fn linear_generators(v: &Group, p: u32, k: usize) -> Result<Vec<Mat>, OracleError> {
    if v.degree() != (p as usize).pow(k as u32) {
        return Err(OracleError::NotLinear(p, k));
    }
    v.gens()
        .iter()
        .map(|g| {
            let m = Mat::from_perm(p, k, g);
            if m.is_invertible() && m.to_perm() == *g {
                Ok(m)
            } else {
                Err(OracleError::NotLinear(p, k))
            }
        })
        .collect()
}

/// Builds a full `U`-invariant flag greedily and checks that all factors
/// carry the same scalar character. By Jordan–Hölder any full flag
/// exposes the same factors, and one always extends when the factors are
/// one-dimensional.
fn equal_scalar_factors(p: u32, k: usize, u_mats: &[Mat], subspaces: &[Subspace]) -> bool {
    let mut current = Subspace::zero(p, k);
    let mut character: Option<Vec<u32>> = None;
    for d in 1..=k {
        let next = subspaces.iter().find(|w| {
            w.dim() == d
                && w.contains_subspace(&current)
                && u_mats.iter().all(|m| w.is_invariant(m))
        });
        let Some(next) = next else { return false };
        let v = next
            .basis()
            .iter()
            .find(|b| !current.contains(b))
            .expect("larger subspace")
            .clone();
        let chi: Vec<u32> = u_mats
            .iter()
            .map(|m| {
                let img = m.apply(&v);
                (0..p)
                    .find(|&c| {
                        let diff: Vec<u32> = img
                            .iter()
                            .zip(&v)
                            .map(|(a, b)| (a + p - c * b % p) % p)
                            .collect();
                        current.contains(&diff)
                    })
                    .expect("invariant line has a scalar")
            })
            .collect();
        match &character {
            None => character = Some(chi),
            Some(c) if *c != chi => return false,
            _ => {}
        }
        current = next.clone();
    }
    true
}

/// With `|V:U|` a power of `p`, a simple `F_p V`-module whose
/// `U`-composition factors are one-dimensional and isomorphic is itself
/// one-dimensional.
pub fn oracle_scalar_module(v: &Group, u: &Group, p: u32, k: usize) -> Result<bool, OracleError> {
    let subspaces = all_subspaces(p, k);
    scalar_module_with(v, u, p, k, &subspaces)
}

fn scalar_module_with(
    v: &Group,
    u: &Group,
    p: u32,
    k: usize,
    subspaces: &[Subspace],
) -> Result<bool, OracleError> {
    let v_mats = linear_generators(v, p, k)?;
    if !u.is_subgroup_of(v) {
        return Err(GroupError::NotSubgroup(u.to_string(), v.to_string()).into());
    }
    let index = (v.order() / u.order()) as u64;
    if index != 1 && prime_power(index).map(|(q, _)| q) != Some(p as u64) {
        return Err(OracleError::IndexNotPrimePower(p));
    }
    let proper_invariant = subspaces
        .iter()
        .any(|w| w.dim() > 0 && w.dim() < k && v_mats.iter().all(|m| w.is_invariant(m)));
    if k == 0 || proper_invariant {
        return Err(OracleError::NotSimple);
    }
    let u_mats: Vec<Mat> = u.gens().iter().map(|g| Mat::from_perm(p, k, g)).collect();
    if !equal_scalar_factors(p, k, &u_mats, subspaces) {
        return Err(OracleError::FactorsNotEqualScalars);
    }
    Ok(k == 1)
}

pub const MODULE_SWEEP_PRIMES: [u32; 4] = [2, 3, 5, 7];
pub const MODULE_SWEEP_MAX_DIM: usize = 4;
pub const MODULE_SWEEP_MAX_ORDER: usize = 100;

fn random_invertible(rng: &mut ChaCha8Rng, p: u32, k: usize) -> Mat {
    loop {
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..k).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
        let m = Mat::from_rows(p, &refs);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random matrix groups `V ≤ GL(k, p)` with `p ∈ {2,3,5,7}`, `k ≤ 4`,
/// `|V| ≤ 100`, each paired with every subgroup `U` of `p`-power index.
/// Mixes random generators with scalar and monomial ones so that simple
/// modules with scalar-acting `U` occur.
pub fn sweep_scalar_modules(seed: u64, trials: usize) -> Result<SweepReport, OracleError> {
    let mut rep =
        SweepReport::new("simple modules with equal scalar U-factors are one-dimensional");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut subspace_cache: HashMap<(u32, usize), Vec<Subspace>> = HashMap::new();
    for _ in 0..trials {
        let p = MODULE_SWEEP_PRIMES[rng.gen_range(0..MODULE_SWEEP_PRIMES.len())];
        let k = rng.gen_range(1..=MODULE_SWEEP_MAX_DIM);
        if (p as usize).pow(k as u32) > 2401 {
            continue;
        }
        let mut gens: Vec<Mat> = (0..rng.gen_range(1..=2))
            .map(|_| random_invertible(&mut rng, p, k))
            .collect();
        if rng.gen_bool(0.5) {
            let c = rng.gen_range(1..p.max(2));
            gens.push(Mat::scalar(p, k, c.max(1)));
        }
        let perms: Vec<Perm> = gens.iter().map(Mat::to_perm).collect();
        let Ok(v) =
            Group::closure_capped((p as usize).pow(k as u32), &perms, MODULE_SWEEP_MAX_ORDER)
        else {
            continue;
        };
        let subspaces = subspace_cache
            .entry((p, k))
            .or_insert_with(|| all_subspaces(p, k));
        for u in all_subgroups(&v)? {
            rep.record(scalar_module_with(&v, &u, p, k, subspaces), || {
                format!("p={p} k={k} V={v} U={u}")
            });
        }
    }
    Ok(rep)
}

/// `M^N` contains `M`, is normal in `N`, and lies in every normal subgroup
/// of `N` that contains `M`.
pub fn oracle_normal_closure(m: &Group, n: &Group, lattice: &[Group]) -> Result<bool, OracleError> {
    if !m.is_subgroup_of(n) {
        return Err(GroupError::NotSubgroup(m.to_string(), n.to_string()).into());
    }
    let c = m.normal_closure_in(n)?;
    let minimal = lattice
        .iter()
        .filter(|k| k.is_normal_in(n) && m.is_subgroup_of(k))
        .all(|k| c.is_subgroup_of(k));
    Ok(m.is_subgroup_of(&c) && c.is_normal_in(n) && minimal)
}

/// Random permutation groups of degree 4 to 6 and order `<= max_order`,
/// with every subgroup checked by [`oracle_normal_closure`].
pub fn sweep_normal_closure(
    max_order: usize,
    seed: u64,
    trials: usize,
) -> Result<SweepReport, OracleError> {
    let mut rep = SweepReport::new(&format!("normal closure is minimal (|N| <= {max_order})"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let degree = rng.gen_range(4..=6);
        let gens: Vec<Perm> = (0..rng.gen_range(1..=2))
            .map(|_| random_perm(&mut rng, degree))
            .collect();
        let Ok(n) = Group::closure_capped(degree, &gens, max_order) else {
            continue;
        };
        let lattice = all_subgroups(&n)?;
        for m in &lattice {
            rep.record(oracle_normal_closure(m, &n, &lattice), || {
                format!("N={n} M={m}")
            });
        }
    }
    Ok(rep)
}

fn random_perm(rng: &mut ChaCha8Rng, degree: usize) -> Perm {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Perm::from_fn(degree, |x| images[x]).expect("shuffle is a permutation")
}

/// Sizes for [`run_all_sweeps`].
#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub max_order: usize,
    pub module_seed: u64,
    pub module_trials: usize,
    pub closure_max_order: usize,
    pub closure_seed: u64,
    pub closure_trials: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_order: 24,
            module_seed: 1,
            module_trials: 300,
            closure_max_order: 48,
            closure_seed: 1,
            closure_trials: 60,
        }
    }
}

/// Runs the partition, subnormal-preservation, section, module and
/// normal-closure sweeps.
pub fn run_all_sweeps(cfg: &SweepConfig) -> Result<Vec<SweepReport>, OracleError> {
    let (subnormal, sec) = sweep_subnormal_preservation(cfg.max_order, 2)?;
    Ok(vec![
        sweep_partition_klein()?,
        sweep_partition_frobenius21()?,
        subnormal,
        sec,
        sweep_scalar_modules(cfg.module_seed, cfg.module_trials)?,
        sweep_normal_closure(cfg.closure_max_order, cfg.closure_seed, cfg.closure_trials)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn affine(q: usize, c: usize, b: usize) -> Perm {
        Perm::from_fn(q, |x| (c * x + b) % q).unwrap()
    }

    #[test]
    fn normal_closure_sweep_small() {
        let rep = sweep_normal_closure(48, 7, 10).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn klein_partitions() {
        let g = Group::closure(
            4,
            &[
                Perm::parse("(0 1)(2 3)", 4).unwrap(),
                Perm::parse("(0 2)(1 3)", 4).unwrap(),
            ],
        )
        .unwrap();
        let parts = partitions(&g).unwrap();
        let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        assert_eq!(sizes.len(), 2);
        assert!(sizes.contains(&1) && sizes.contains(&3));
    }

    #[test]
    fn frobenius21_partitions() {
        let g = Group::closure(7, &[affine(7, 1, 1), affine(7, 2, 0)]).unwrap();
        let parts = partitions(&g).unwrap();
        let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 8]);
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let g = Group::closure(
            4,
            &[
                Perm::parse("(0 1)(2 3)", 4).unwrap(),
                Perm::parse("(0 2)(1 3)", 4).unwrap(),
            ],
        )
        .unwrap();
        let module =
            MatrixModule::new(&g, 3, 2, &[Mat::identity(3, 2), Mat::identity(3, 2)]).unwrap();
        let three = partitions(&g)
            .unwrap()
            .into_iter()
            .find(|p| p.len() == 3)
            .unwrap();
        assert_eq!(oracle_partition_fixed_points(&g, &three, &module), Ok(true));
        let bad = vec![three[0].clone(), three[1].clone()];
        assert!(matches!(
            oracle_partition_fixed_points(&g, &bad, &module),
            Err(OracleError::NotPartition(_))
        ));
    }

    #[test]
    fn module_rejects_non_homomorphisms() {
        let g = Group::closure(3, &[affine(3, 1, 1)]).unwrap();
        let swap = Mat::from_rows(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(
            MatrixModule::new(&g, 2, 2, &[swap]).unwrap_err(),
            OracleError::NotHomomorphism
        );
    }

    #[test]
    fn fpf_examples() {
        // inversion on C7 inside the order-42 Frobenius group
        let c7 = Group::closure(7, &[affine(7, 1, 1)]).unwrap();
        let one = Group::trivial(7);
        let inv = affine(7, 6, 0);
        assert_eq!(oracle_fpf_section(&c7, &one, &inv, 2, &c7, &c7), Ok(true));
        assert_eq!(oracle_fpf_section(&c7, &one, &inv, 2, &c7, &one), Ok(true));
        // and on C9 inside the affine group of Z/9
        let c9 = Group::closure(9, &[affine(9, 1, 1)]).unwrap();
        let inv9 = affine(9, 8, 0);
        let c3 = Group::closure(9, &[affine(9, 1, 3)]).unwrap();
        let one9 = Group::trivial(9);
        assert_eq!(
            oracle_fpf_section(&c9, &one9, &inv9, 2, &c9, &one9),
            Ok(true)
        );
        assert_eq!(oracle_fpf_section(&c9, &one9, &inv9, 2, &c9, &c3), Ok(true));
        // x ↦ 2x on Z/7 has order 3, not 2
        assert_eq!(
            oracle_fpf_section(&c7, &one, &affine(7, 2, 0), 2, &c7, &one),
            Err(OracleError::WrongAutomorphismOrder(2))
        );
    }

    #[test]
    fn intermediate_subnormal_trivial_cases() {
        let c9 = Group::closure(9, &[affine(9, 1, 1)]).unwrap();
        let one = Group::trivial(9);
        let inv = affine(9, 8, 0);
        assert_eq!(
            oracle_intermediate_subnormal(&c9, &one, &inv, 2, &c9),
            Ok(true)
        );
        assert_eq!(
            oracle_intermediate_subnormal(&c9, &one, &inv, 2, &one),
            Ok(true)
        );
    }

    #[test]
    fn scalar_module_one_dimensional() {
        let m = Mat::scalar(7, 1, 3);
        let v = Group::closure(7, &[m.to_perm()]).unwrap();
        assert_eq!(oracle_scalar_module(&v, &v, 7, 1), Ok(true));
        let u = Group::closure(7, &[Mat::scalar(7, 1, 2).to_perm()]).unwrap();
        assert_eq!(
            oracle_scalar_module(&v, &u, 7, 1),
            Err(OracleError::IndexNotPrimePower(7))
        );
    }

    #[test]
    fn scalar_module_rejects_reducible_and_nonscalar() {
        // upper unitriangular on F_3^2 fixes a line
        let m = Mat::from_rows(3, &[&[1, 1], &[0, 1]]);
        let v = Group::closure(9, &[m.to_perm()]).unwrap();
        assert_eq!(
            oracle_scalar_module(&v, &v, 3, 2),
            Err(OracleError::NotSimple)
        );
        // a Singer cycle of order 8 on F_3^2 is irreducible, and so is U = V
        let singer = Mat::from_rows(3, &[&[0, 1], &[1, 1]]);
        let v = Group::closure(9, &[singer.to_perm()]).unwrap();
        assert_eq!(v.order(), 8);
        assert_eq!(
            oracle_scalar_module(&v, &v, 3, 2),
            Err(OracleError::FactorsNotEqualScalars)
        );
    }

    #[test]
    fn small_subnormal_sweep() {
        let (subnormal, sec) = sweep_subnormal_preservation(12, 2).unwrap();
        assert!(subnormal.passed(), "{subnormal:?}");
        assert!(sec.passed(), "{sec:?}");
    }
}
