//! Groups given by Cayley tables. Used to build the small-group catalog and
//! to realize automorphisms as permutations of the regular representation.

use std::collections::VecDeque;

use super::perm::Perm;
use super::perm_group::Group;

/// Multiplication table on `0..n` with `0` as the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl TableGroup {
    /// Builds and validates a table: identity at 0, inverses, associativity.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Option<Self> {
        assert!(n <= u16::MAX as usize);
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = f(a, b);
                if c >= n {
                    return None;
                }
                mul[a * n + b] = c as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            if mul[a] as usize != a || mul[a * n] as usize != a {
                return None;
            }
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0)? as u16;
            // Latin row
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = mul[a * n + b] as usize;
                if seen[c] {
                    return None;
                }
                seen[c] = true;
            }
        }
        let g = Self { n, mul, inv };
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                        return None;
                    }
                }
            }
        }
        Some(g)
    }

    /// Element `i` is the `i`-th element of the sorted element list.
    pub fn from_perm_group(g: &Group) -> Self {
        let els = g.elements();
        let idx = |p: &Perm| els.binary_search(p).expect("closed group");
        Self::from_fn(els.len(), |a, b| idx(&els[a].then(&els[b]))).expect("permutation group")
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
    }

    /// Pairs `(a, b)` encoded as `a·|B| + b`.
    pub fn direct_product(a: &TableGroup, b: &TableGroup) -> Self {
        let m = b.n;
        Self::from_fn(a.n * m, |x, y| {
            a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
        })
        .expect("direct product")
    }

    /// `⟨a, b | a^m, b^k = a^t, b a = a^r b⟩` with elements `a^i b^j`
    /// encoded as `j·m + i`. `None` when the data do not define a group of
    /// order `m·k`.
    pub fn metacyclic(m: usize, k: usize, r: usize, t: usize) -> Option<Self> {
        let mut rp = vec![1usize % m.max(1); k];
        for j in 1..k {
            rp[j] = rp[j - 1] * r % m;
        }
        if rp[k - 1] * r % m != 1 % m || (t * r) % m != t % m {
            return None;
        }
        Self::from_fn(m * k, |x, y| {
            let (i, j) = (x % m, x / m);
            let (i2, j2) = (y % m, y / m);
            let wrap = if j + j2 >= k { t } else { 0 };
            let ni = (i + i2 * rp[j] + wrap) % m;
            ((j + j2) % k) * m + ni
        })
    }

    /// `H ⋊ C_k` with `(x, i)(y, j) = (x·φ^i(y), i + j)`, encoded as
    /// `i·|H| + x`. Requires `φ^k = 1`.
    pub fn semidirect(h: &TableGroup, k: usize, phi: &[u16]) -> Option<Self> {
        let m = h.n;
        let mut pows: Vec<Vec<u16>> = vec![(0..m as u16).collect()];
        for i in 1..=k {
            let prev = &pows[i - 1];
            pows.push((0..m).map(|x| phi[prev[x] as usize]).collect());
        }
        if pows[k].iter().enumerate().any(|(x, &y)| x != y as usize) {
            return None;
        }
        Self::from_fn(m * k, |a, b| {
            let (x, i) = (a % m, a / m);
            let (y, j) = (b % m, b / m);
            ((i + j) % k) * m + h.mul(x, pows[i][y] as usize)
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        mask[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// A generating set chosen greedily from elements of large order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.n).collect();
        by_order.sort_by_key(|&a| std::cmp::Reverse(self.elem_order(a)));
        let mut gens = Vec::new();
        let mut mask = self.generated(&gens);
        for a in by_order {
            if !mask[a] {
                gens.push(a);
                mask = self.generated(&gens);
            }
        }
        gens
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism into `target`, if the
    /// assignment is consistent on every edge of the Cayley graph.
    pub fn extend_hom(
        &self,
        target: &TableGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<u16>> {
        const UNSET: u16 = u16::MAX;
        let mut map = vec![UNSET; self.n];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = target.mul(map[x] as usize, img) as u16;
                if map[y] == UNSET {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        map.iter().all(|&v| v != UNSET).then_some(map)
    }

    /// Every bijective homomorphism to `target`, or only the first one.
    fn isomorphisms(&self, target: &TableGroup, first_only: bool) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        if self.n != target.n {
            return out;
        }
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.elem_order(g);
                (0..target.n)
                    .filter(|&y| target.elem_order(y) == o)
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; gens.len()];
        if candidates.iter().any(Vec::is_empty) {
            return out;
        }
        loop {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, v)| v[c]).collect();
            if let Some(map) = self.extend_hom(target, &gens, &images) {
                let mut seen = vec![false; self.n];
                if map
                    .iter()
                    .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
                {
                    out.push(map);
                    if first_only {
                        return out;
                    }
                }
            }
            // odometer over candidate images
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    /// All automorphisms as element maps, by brute force over generator
    /// images. Intended for groups of a few dozen elements.
    pub fn automorphisms(&self) -> Vec<Vec<u16>> {
        self.isomorphisms(self, false)
    }

    /// Per-element `(order, centralizer size, number of square roots)`,
    /// sorted; equal for isomorphic groups.
    pub fn signature(&self) -> Vec<(usize, usize, usize)> {
        let mut roots = vec![0usize; self.n];
        for y in 0..self.n {
            roots[self.mul(y, y)] += 1;
        }
        let mut sig: Vec<(usize, usize, usize)> = (0..self.n)
            .map(|a| {
                let cent = (0..self.n)
                    .filter(|&b| self.mul(a, b) == self.mul(b, a))
                    .count();
                (self.elem_order(a), cent, roots[a])
            })
            .collect();
        sig.sort_unstable();
        sig
    }

    pub fn is_isomorphic(&self, other: &TableGroup) -> bool {
        self.n == other.n
            && self.signature() == other.signature()
            && !self.isomorphisms(other, true).is_empty()
    }

    /// Right regular representation `ρ_g: x ↦ x·g` on `0..n`.
    pub fn regular_rep(&self) -> Group {
        let gens: Vec<Perm> = self
            .generators()
            .iter()
            .map(|&g| self.regular_perm(g))
            .collect();
        Group::closure(self.n, &gens).expect("regular representation within cap")
    }

    pub fn regular_perm(&self, g: usize) -> Perm {
        Perm::from_fn(self.n, |x| self.mul(x, g)).expect("Latin table")
    }
}

/// An element map `α` as a permutation of `0..n`. In the regular
/// representation, conjugation by it satisfies `α⁻¹ ρ_g α = ρ_{α(g)}`.
pub fn map_to_perm(map: &[u16]) -> Perm {
    Perm::from_images(map.iter().map(|&v| v as u32).collect()).expect("bijective map")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        let q8 = TableGroup::metacyclic(4, 2, 3, 2).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!((1..8).filter(|&a| q8.elem_order(a) == 2).count(), 1);
        let d8 = TableGroup::metacyclic(4, 2, 3, 0).unwrap();
        assert_eq!((1..8).filter(|&a| d8.elem_order(a) == 2).count(), 5);
        assert!(!q8.is_isomorphic(&d8));
        assert!(TableGroup::metacyclic(4, 2, 2, 0).is_none());
        let v4 = TableGroup::direct_product(&TableGroup::cyclic(2), &TableGroup::cyclic(2));
        assert!(v4.is_abelian());
        assert_eq!(v4.generators().len(), 2);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(TableGroup::cyclic(7).automorphisms().len(), 6);
        let v4 = TableGroup::direct_product(&TableGroup::cyclic(2), &TableGroup::cyclic(2));
        assert_eq!(v4.automorphisms().len(), 6);
        let q8 = TableGroup::metacyclic(4, 2, 3, 2).unwrap();
        assert_eq!(q8.automorphisms().len(), 24);
        let s3 = TableGroup::metacyclic(3, 2, 2, 0).unwrap();
        assert_eq!(s3.automorphisms().len(), 6);
    }

    #[test]
    fn semidirect_and_regular_rep() {
        let c7 = TableGroup::cyclic(7);
        let times2: Vec<u16> = (0..7).map(|x| (2 * x % 7) as u16).collect();
        let f21 = TableGroup::semidirect(&c7, 3, &times2).unwrap();
        assert_eq!(f21.order(), 21);
        assert!(!f21.is_abelian());
        assert!(TableGroup::semidirect(&c7, 2, &times2).is_none());
        let reg = f21.regular_rep();
        assert_eq!(reg.order(), 21);
        assert!(TableGroup::from_perm_group(&reg).is_isomorphic(&f21));
    }

    #[test]
    fn automorphisms_act_by_conjugation() {
        let g = TableGroup::metacyclic(3, 2, 2, 0).unwrap();
        for a in g.automorphisms() {
            let s = map_to_perm(&a);
            for x in 0..g.order() {
                assert_eq!(
                    g.regular_perm(x).conjugate_by(&s),
                    g.regular_perm(a[x] as usize)
                );
            }
        }
    }
}
