use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::{eval_word, Perm};

use super::{FreeWord, Presentation};

/// Default cap on simultaneously live cosets.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[inline]
fn col(letter: i32) -> usize {
    if letter > 0 {
        2 * (letter as usize - 1)
    } else {
        2 * ((-letter) as usize - 1) + 1
    }
}

/// A closed coset table. Cosets are numbered from 1, coset 1 being the
/// subgroup itself; each generator has a forward and an inverse column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    num_generators: usize,
    rows: Vec<Vec<u32>>,
    relators: Vec<FreeWord>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    /// Image of coset `c` under letter `letter`, or `None` if undefined.
    pub fn entry(&self, c: usize, letter: i32) -> Option<usize> {
        match self.rows[c - 1][col(letter)] {
            0 => None,
            v => Some(v as usize),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&v| v != 0))
    }

    /// Follows `w` from coset `c`.
    pub fn trace(&self, c: usize, w: &FreeWord) -> Option<usize> {
        let mut cur = c;
        for &l in w.letters() {
            cur = self.entry(cur, l)?;
        }
        Some(cur)
    }

    /// Permutation action of each generator on the cosets.
    pub fn coset_action(&self) -> Result<Vec<Perm>> {
        if !self.is_closed() {
            return Err(Error::TableNotClosed);
        }
        let perms = (0..self.num_generators)
            .map(|g| {
                let images: Vec<usize> = self.rows.iter().map(|r| r[2 * g] as usize).collect();
                Perm::from_images(&images)
            })
            .collect::<Result<Vec<_>>>()?;
        for r in &self.relators {
            if !eval_word(self.index(), &perms, r)?.is_identity() {
                return Err(Error::Internal(format!("relator {r:?} acts non-trivially")));
            }
        }
        Ok(perms)
    }

    /// Evaluates `w` in the coset action.
    pub fn word_image(&self, w: &FreeWord) -> Result<Perm> {
        word_image(&self.coset_action()?, w)
    }
}

/// Product of `images` along `w`.
pub fn word_image(images: &[Perm], w: &FreeWord) -> Result<Perm> {
    let degree = images
        .first()
        .map(Perm::degree)
        .ok_or_else(|| Error::InvalidSpec("no generator images".into()))?;
    eval_word(degree, images, w)
}

struct Enumerator<'a> {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max: usize,
    queue: VecDeque<u32>,
    relators: &'a [FreeWord],
}

impl<'a> Enumerator<'a> {
    fn defined(&self) -> usize {
        self.parent.len() - 1
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn find(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(0, self.cols));
        self.live += 1;
        c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<()> {
        let mut c = c;
        if self.live >= self.max {
            self.lookahead();
            c = self.find(c);
            if self.get(c, x) != 0 {
                return Ok(());
            }
            if self.live >= self.max {
                return Err(Error::CosetLimit { limit: self.max });
            }
        }
        let d = self.new_coset();
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == 0 {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, 0);
                }
                let e1 = self.find(e);
                let f1 = self.find(f);
                let t = self.get(e1, x);
                if t != 0 {
                    self.merge(f1, t);
                } else {
                    let s = self.get(f1, x ^ 1);
                    if s != 0 {
                        self.merge(e1, s);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Scans `w` from `c`, defining new cosets when `fill` is set.
    fn scan(&mut self, c: u32, w: &[i32], fill: bool) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                let n = self.get(f, col(w[i]));
                if n == 0 {
                    break;
                }
                f = n;
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let n = self.get(b, col(-w[j as usize]));
                if n == 0 {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let x = col(w[i]);
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, col(w[i]))?;
            // a lookahead inside define may have merged f or b away
            f = self.find(f);
            b = self.find(b);
        }
    }

    fn lookahead(&mut self) {
        let mut c = 1u32;
        while (c as usize) <= self.defined() {
            if self.is_live(c) {
                for r in self.relators {
                    if !self.is_live(c) {
                        break;
                    }
                    self.scan(c, r.letters(), false)
                        .expect("lookahead never defines");
                }
            }
            c += 1;
        }
    }
}

/// Enumerates the right cosets of the subgroup generated by `subgroup` in
/// the group presented by `p`, by relator-based (HLT) enumeration with
/// lookahead. Cosets are renumbered in order of definition when the table
/// closes.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[FreeWord],
    max_cosets: usize,
) -> Result<CosetTable> {
    let n = p.num_generators();
    for w in subgroup {
        if let Some(&l) = w.letters().iter().find(|l| l.unsigned_abs() as usize > n) {
            return Err(Error::LetterOutOfRange {
                letter: l,
                generators: n,
            });
        }
    }
    let cols = 2 * n;
    let relators = p.relators();
    let mut e = Enumerator {
        cols,
        table: vec![0; 2 * cols],
        parent: vec![0, 1],
        live: 1,
        max: max_cosets.max(1),
        queue: VecDeque::new(),
        relators,
    };
    for w in subgroup {
        let w = w.reduce();
        e.scan(1, w.letters(), true)?;
    }
    let mut c = 1u32;
    while (c as usize) <= e.defined() {
        for r in relators {
            if !e.is_live(c) {
                break;
            }
            e.scan(c, r.letters(), true)?;
        }
        for x in 0..cols {
            if !e.is_live(c) {
                break;
            }
            if e.get(c, x) == 0 {
                e.define(c, x)?;
            }
        }
        c += 1;
    }
    // compaction
    let mut renumber = vec![0u32; e.parent.len()];
    let mut next = 0u32;
    for c in 1..e.parent.len() as u32 {
        if e.is_live(c) {
            next += 1;
            renumber[c as usize] = next;
        }
    }
    let mut rows = Vec::with_capacity(next as usize);
    for c in 1..e.parent.len() as u32 {
        if e.is_live(c) {
            let row = (0..cols)
                .map(|x| match e.get(c, x) {
                    0 => 0,
                    v => renumber[e.find(v) as usize],
                })
                .collect();
            rows.push(row);
        }
    }
    let table = CosetTable {
        num_generators: n,
        rows,
        relators: relators.to_vec(),
    };
    if !table.is_closed() {
        return Err(Error::TableNotClosed);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group() {
        let p = Presentation::parse("a | a^3").unwrap();
        let t = todd_coxeter(&p, &[], DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(t.index(), 3);
        let act = t.coset_action().unwrap();
        assert_eq!(act[0].order(), 3);
    }

    #[test]
    fn symmetric_group_s3() {
        let p = Presentation::parse("a, b | a^3, b^2, (a*b)^2").unwrap();
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), 6);
        let b = p.parse_word("b").unwrap();
        let t = todd_coxeter(&p, std::slice::from_ref(&b), 100).unwrap();
        assert_eq!(t.index(), 3);
        let act = t.coset_action().unwrap();
        assert_eq!(word_image(&act, &b).unwrap().apply(1), 1);
    }

    #[test]
    fn a5_presentation() {
        let p = Presentation::parse("x, y | x^5, y^2, (x*y)^3").unwrap();
        assert_eq!(todd_coxeter(&p, &[], 1000).unwrap().index(), 60);
        let x = p.parse_word("x").unwrap();
        assert_eq!(todd_coxeter(&p, &[x], 1000).unwrap().index(), 12);
    }

    #[test]
    fn trivial_relations_collapse() {
        let p = Presentation::parse("a, b | a^2, b^3, a*b = b*a, a*b^-1").unwrap();
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), 1);
    }

    #[test]
    fn limit_is_reported() {
        let p = Presentation::parse("x, y | x^5, y^2, (x*y)^3").unwrap();
        assert_eq!(
            todd_coxeter(&p, &[], 10).unwrap_err(),
            Error::CosetLimit { limit: 10 }
        );
    }

    #[test]
    fn empty_word_identity() {
        let p = Presentation::parse("a | a^3").unwrap();
        let t = todd_coxeter(&p, &[], 10).unwrap();
        assert!(t.word_image(&FreeWord::empty()).unwrap().is_identity());
        assert!(t
            .word_image(&FreeWord::new(vec![1, -1]))
            .unwrap()
            .is_identity());
        assert!(t.word_image(&FreeWord::new(vec![2])).is_err());
    }
}
