use std::fmt;

/// A permutation of `0..n`, acting on the right: `x^(ab) = (x^a)^b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("image list is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("permutations of degree {0} and {1} cannot be combined")]
    DegreeMismatch(usize, usize),
    #[error("cycle notation error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Points above this are rejected by the cycle-notation parser.
pub const MAX_PARSE_DEGREE: usize = 10_000;

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotBijective(n));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from a point map on `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self, PermError> {
        Self::from_images((0..n).map(|i| f(i) as u32).collect())
    }

    /// Product of the given cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(PermError::NotBijective(n));
                }
                touched[x] = true;
                images[x] = c[(i + 1) % c.len()] as u32;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn checked_then(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// `s⁻¹ · self · s`.
    pub fn conjugate_by(&self, s: &Perm) -> Perm {
        s.inverse().then(self).then(s)
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    /// Points may be separated by spaces or commas.
    pub fn parse(s: &str, degree: usize) -> Result<Perm, PermError> {
        if degree > MAX_PARSE_DEGREE {
            return Err(PermError::Parse {
                pos: 0,
                msg: format!("degree {degree} exceeds {MAX_PARSE_DEGREE}"),
            });
        }
        let cycles = parse_cycles(s)?;
        let refs: Vec<&[usize]> = cycles.iter().map(|(_, c)| c.as_slice()).collect();
        for (pos, c) in &cycles {
            if let Some(&x) = c.iter().find(|&&x| x >= degree) {
                return Err(PermError::Parse {
                    pos: *pos,
                    msg: format!("point {x} outside 0..{degree}"),
                });
            }
        }
        Perm::from_cycles(degree, &refs).map_err(|_| PermError::Parse {
            pos: 0,
            msg: "cycles are not disjoint".into(),
        })
    }

    /// Parses cycle notation, taking the degree as one more than the largest
    /// point mentioned.
    pub fn parse_auto(s: &str) -> Result<Perm, PermError> {
        let cycles = parse_cycles(s)?;
        let n = cycles
            .iter()
            .flat_map(|(_, c)| c.iter())
            .max()
            .map_or(1, |m| m + 1);
        Perm::parse(s, n)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<(usize, Vec<usize>)>, PermError> {
    let b = s.as_bytes();
    let err = |pos: usize, msg: &str| PermError::Parse {
        pos,
        msg: msg.to_string(),
    };
    let mut i = 0;
    let mut out = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < b.len() && b[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == b.len() {
        return Err(err(i, "empty input"));
    }
    while i < b.len() {
        if b[i] != b'(' {
            return Err(err(i, "expected '('"));
        }
        let start = i;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i < b.len() && b[i] == b',' && !cycle.is_empty() {
                i += 1;
                skip_ws(&mut i);
            }
            match b.get(i) {
                None => return Err(err(i, "unclosed cycle")),
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let s0 = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    let txt = std::str::from_utf8(&b[s0..i]).expect("ascii");
                    let v: usize = txt
                        .parse()
                        .ok()
                        .filter(|&v| v < MAX_PARSE_DEGREE)
                        .ok_or_else(|| err(s0, "point too large"))?;
                    cycle.push(v);
                }
                Some(_) => return Err(err(i, "unexpected character")),
            }
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != cycle.len() {
            return Err(err(start, "repeated point in cycle"));
        }
        if cycle.len() > 1 {
            out.push((start, cycle));
        }
        skip_ws(&mut i);
    }
    Ok(out)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_action() {
        let a = Perm::parse("(0 1)", 3).unwrap();
        let b = Perm::parse("(1 2)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).to_string(), "(0 2 1)");
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::parse("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse("()", 4).unwrap(), Perm::identity(4));
        assert_eq!(Perm::parse("(2, 0)", 3).unwrap().to_string(), "(0 2)");
        assert_eq!(Perm::parse_auto("(4 5)").unwrap().degree(), 6);
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse("(0 1", 3).is_err());
        assert!(Perm::parse("(0 0)", 3).is_err());
        assert!(Perm::parse("(0 5)", 3).is_err());
        assert!(Perm::parse("(0 1)(1 2)", 3).is_err());
        assert!(Perm::parse("0 1", 3).is_err());
        assert!(Perm::parse("", 3).is_err());
    }

    #[test]
    fn inverse_pow_conjugate() {
        let p = Perm::parse("(0 1 2 3)", 4).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.pow(4), Perm::identity(4));
        assert_eq!(p.pow(-1), p.inverse());
        let s = Perm::parse("(0 1)", 4).unwrap();
        // s⁻¹ p s relabels the cycle by s
        assert_eq!(p.conjugate_by(&s).to_string(), "(0 2 3 1)");
    }
}
