use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{1..degree}` stored as an image array.
///
/// Composition follows the right-action convention: in `p.compose(q)` the
/// permutation `p` acts first, so `k^(pq) = (k^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // zero-based images
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree >= 1, "permutation degree must be positive");
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its one-based image list, so `images[k-1]`
    /// is the image of `k`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::NotAPermutation("empty image list".into()));
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &im in images {
            if im == 0 || im > degree {
                return Err(Error::PointOutOfRange { point: im, degree });
            }
            if std::mem::replace(&mut seen[im - 1], true) {
                return Err(Error::NotAPermutation(format!("image {im} repeated")));
            }
            out.push((im - 1) as u32);
        }
        Ok(Perm { images: out })
    }

    /// Permutation from disjoint or overlapping cycles; cycles are multiplied
    /// left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut p = Perm::identity(degree);
        for cycle in cycles {
            let mut seen = Vec::with_capacity(cycle.len());
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if seen.contains(&pt) {
                    return Err(Error::NotAPermutation(format!(
                        "point {pt} repeated in a cycle"
                    )));
                }
                seen.push(pt);
            }
            if cycle.len() < 2 {
                continue;
            }
            let mut c = Perm::identity(degree);
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                c.images[from] = to as u32;
            }
            p = &p * &c;
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `k`. Panics if `k` is out of range.
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    pub fn try_apply(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.degree() {
            return Err(Error::PointOutOfRange {
                point: k,
                degree: self.degree(),
            });
        }
        Ok(self.apply(k))
    }

    #[inline]
    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub(crate) fn images0(&self) -> &[u32] {
        &self.images
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    #[inline]
    fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn invert(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Perm) -> Perm {
        by.invert().then(self).then(by)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.degree() == other.degree() && self.then(other) == other.then(self)
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.images[i] as usize != i)
            .map(|i| i + 1)
            .collect()
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`. Whitespace is ignored;
    /// `()` and `id` denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        Self::parse_cycles_with(text, degree, |tok| tok.parse::<usize>().ok())
    }

    /// Cycle notation over arbitrary point labels resolved by `lookup`.
    pub fn parse_cycles_with<F>(text: &str, degree: usize, lookup: F) -> Result<Perm>
    where
        F: Fn(&str) -> Option<usize>,
    {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "()" || compact == "id" {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let cycle = inner
                .split(',')
                .map(|tok| {
                    lookup(tok).ok_or_else(|| Error::Parse(format!("unknown point {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        Perm::from_cycles(degree, &cycles)
    }

    /// Cycle notation with points rendered by `label`; the identity is `()`.
    pub fn to_cycle_string_with<F>(&self, label: F) -> String
    where
        F: Fn(usize) -> String,
    {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter().map(|&k| label(k)).collect::<Vec<_>>().join(",")
                )
            })
            .collect()
    }
}

impl Mul<&Perm> for &Perm {
    type Output = Perm;

    /// Right-action product; panics on degree mismatch.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "degree mismatch in permutation product"
        );
        self.then(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string_with(|k| k.to_string()))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}
