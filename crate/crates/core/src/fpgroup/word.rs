use std::fmt;
use std::ops::Mul;

/// A word in a free group. Letter `k > 0` is generator `k` (one-based) and
/// `-k` its inverse.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn empty() -> FreeWord {
        FreeWord(Vec::new())
    }

    /// Wraps a letter sequence as given; panics on a zero letter.
    pub fn new(letters: Vec<i32>) -> FreeWord {
        assert!(
            letters.iter().all(|&l| l != 0),
            "zero is not a valid letter"
        );
        FreeWord(letters)
    }

    pub fn generator(k: usize) -> FreeWord {
        FreeWord(vec![k as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: i32) {
        assert!(letter != 0, "zero is not a valid letter");
        self.0.push(letter);
    }

    /// Free reduction: cancels adjacent `k, -k` pairs.
    pub fn reduce(&self) -> FreeWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != -w[1])
    }

    /// Cyclic reduction of an already reduced word.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let w = self.reduce().0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord(w[lo..hi].to_vec())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        FreeWord(out).reduce()
    }

    /// `by^-1 * self * by`, reduced.
    pub fn conj(&self, by: &FreeWord) -> FreeWord {
        (&(&by.inverse() * self) * by).reduce()
    }

    /// `a^-1 b^-1 a b`, reduced.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = a.inverse().0;
        out.extend(b.inverse().0);
        out.extend_from_slice(&a.0);
        out.extend_from_slice(&b.0);
        FreeWord(out).reduce()
    }

    pub fn max_generator(&self) -> usize {
        self.0
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Renders with generator names, e.g. `x*y^-1*t`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&l| {
                let name = names
                    .get(l.unsigned_abs() as usize - 1)
                    .cloned()
                    .unwrap_or_else(|| format!("g{}", l.unsigned_abs()));
                if l < 0 {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl From<Vec<i32>> for FreeWord {
    fn from(v: Vec<i32>) -> FreeWord {
        FreeWord::new(v)
    }
}

impl Mul<&FreeWord> for &FreeWord {
    type Output = FreeWord;

    /// Concatenation without reduction.
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        out.extend_from_slice(&rhs.0);
        FreeWord(out)
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
