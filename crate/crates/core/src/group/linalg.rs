//! Small matrices and subspaces over a prime field, with row vectors
//! acting on the right so that matrix products match permutation products.

use super::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    p: u32,
    k: usize,
    a: Vec<u32>,
}

impl Mat {
    pub fn identity(p: u32, k: usize) -> Self {
        let mut a = vec![0; k * k];
        for i in 0..k {
            a[i * k + i] = 1;
        }
        Self { p, k, a }
    }

    pub fn from_rows(p: u32, rows: &[&[u32]]) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k), "matrix must be square");
        Self {
            p,
            k,
            a: rows.iter().flat_map(|r| r.iter().map(|x| x % p)).collect(),
        }
    }

    pub fn scalar(p: u32, k: usize, c: u32) -> Self {
        let mut m = Self::identity(p, k);
        for x in &mut m.a {
            *x = *x * c % p;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.k + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.a[i * self.k..(i + 1) * self.k]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let k = self.k;
        let mut a = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut s = 0u64;
                for t in 0..k {
                    s += self.get(i, t) as u64 * other.get(t, j) as u64;
                }
                a[i * k + j] = (s % self.p as u64) as u32;
            }
        }
        Mat { p: self.p, k, a }
    }

    pub fn pow(&self, e: u32) -> Mat {
        (0..e).fold(Mat::identity(self.p, self.k), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.p, self.k)
    }

    /// `v·A` for a row vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        (0..self.k)
            .map(|j| {
                let s: u64 = (0..self.k)
                    .map(|i| v[i] as u64 * self.get(i, j) as u64)
                    .sum();
                (s % self.p as u64) as u32
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u32>> = (0..self.k).map(|i| self.row(i).to_vec()).collect();
        rref(self.p, rows).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.k
    }

    /// The matrix as a permutation of the `p^k` vectors, indexed base `p`.
    pub fn to_perm(&self) -> Perm {
        let n = (self.p as usize).pow(self.k as u32);
        Perm::from_fn(n, |x| {
            encode(self.p, &self.apply(&decode(self.p, self.k, x)))
        })
        .expect("invertible matrix permutes vectors")
    }

    /// Recovers the matrix of a linear permutation of vectors.
    pub fn from_perm(p: u32, k: usize, perm: &Perm) -> Mat {
        let mut a = Vec::with_capacity(k * k);
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = 1;
            a.extend(decode(p, k, perm.apply(encode(p, &e))));
        }
        Mat { p, k, a }
    }
}

pub fn encode(p: u32, v: &[u32]) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

pub fn decode(p: u32, k: usize, mut x: usize) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = (x % p as usize) as u32;
            x /= p as usize;
            d
        })
        .collect()
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    crate::arith::integer::mod_inverse(a as u64, p as u64).expect("nonzero residue mod prime")
        as u32
}

/// Reduced row echelon form with zero rows dropped.
pub fn rref(p: u32, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let k = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..k {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in &mut rows[r] {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..k {
                    rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// A subspace of `F_p^k`, stored as its reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u32,
    k: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn span(p: u32, k: usize, vectors: Vec<Vec<u32>>) -> Self {
        Self {
            p,
            k,
            basis: rref(p, vectors),
        }
    }

    pub fn zero(p: u32, k: usize) -> Self {
        Self {
            p,
            k,
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(self.p, rows).len() == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn is_invariant(&self, m: &Mat) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }

    /// Every vector of the subspace.
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let d = self.dim();
        let count = (self.p as usize).pow(d as u32);
        (0..count)
            .map(|c| {
                let coeffs = decode(self.p, d, c);
                let mut v = vec![0u32; self.k];
                for (b, &c) in self.basis.iter().zip(&coeffs) {
                    for j in 0..self.k {
                        v[j] = (v[j] + c * b[j]) % self.p;
                    }
                }
                v
            })
            .collect()
    }
}

/// All subspaces of `F_p^k`, enumerated through their reduced echelon forms.
pub fn all_subspaces(p: u32, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let pivots: Vec<usize> = (0..k).filter(|&c| mask & (1 << c) != 0).collect();
        // free slots: row i, column j > pivot i that is not a pivot column
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| {
                ((pc + 1)..k)
                    .filter(|j| !pivots.contains(j))
                    .map(move |j| (i, j))
            })
            .collect();
        let total = (p as usize).pow(slots.len() as u32);
        for assignment in 0..total {
            let vals = decode(p, slots.len(), assignment);
            let mut basis: Vec<Vec<u32>> = pivots
                .iter()
                .map(|&pc| {
                    let mut r = vec![0; k];
                    r[pc] = 1;
                    r
                })
                .collect();
            for (&(i, j), &v) in slots.iter().zip(&vals) {
                basis[i][j] = v;
            }
            out.push(Subspace { p, k, basis });
        }
    }
    out
}

/// All invertible `k×k` matrices over `F_p`; only sensible for tiny `p^(k²)`.
pub fn general_linear_group(p: u32, k: usize) -> Vec<Mat> {
    let n = (p as usize).pow((k * k) as u32);
    (0..n)
        .map(|x| Mat {
            p,
            k,
            a: decode(p, k * k, x),
        })
        .filter(Mat::is_invertible)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_orders() {
        assert_eq!(general_linear_group(2, 2).len(), 6);
        assert_eq!(general_linear_group(3, 2).len(), 48);
        assert_eq!(general_linear_group(2, 3).len(), 168);
    }

    /// Gaussian binomial counts of subspaces.
    #[test]
    fn subspace_counts() {
        assert_eq!(all_subspaces(2, 2).len(), 5);
        assert_eq!(all_subspaces(3, 2).len(), 6);
        assert_eq!(all_subspaces(2, 3).len(), 16);
        assert_eq!(all_subspaces(2, 4).len(), 67);
        assert_eq!(all_subspaces(7, 4).len(), 1 + 400 + 2850 + 400 + 1);
    }

    #[test]
    fn perm_round_trip_and_products() {
        let a = Mat::from_rows(3, &[&[1, 1], &[0, 1]]);
        let b = Mat::from_rows(3, &[&[0, 1], &[2, 0]]);
        let pa = a.to_perm();
        assert_eq!(Mat::from_perm(3, 2, &pa), a);
        assert_eq!(pa.then(&b.to_perm()), a.mul(&b).to_perm());
        assert_eq!(a.pow(3), Mat::identity(3, 2));
    }

    #[test]
    fn membership() {
        let w = Subspace::span(5, 3, vec![vec![1, 2, 0], vec![2, 4, 0]]);
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&[3, 1, 0]));
        assert!(!w.contains(&[0, 0, 1]));
        assert_eq!(w.vectors().len(), 5);
        let diag = Mat::from_rows(5, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert!(w.is_invariant(&diag));
    }
}
