use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fpgroup::FreeWord;

use super::Perm;

/// Default cap on exhaustive element enumeration.
pub const DEFAULT_ELEMENT_BOUND: u128 = 1_000_000;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    trans: Vec<Option<Perm>>,
    inv: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize, gens: Vec<Perm>) -> Level {
        let mut level = Level {
            base,
            gens,
            orbit: Vec::new(),
            trans: vec![None; degree],
            inv: vec![None; degree],
        };
        level.recompute();
        level
    }

    fn recompute(&mut self) {
        let degree = self.trans.len();
        self.trans = vec![None; degree];
        self.inv = vec![None; degree];
        self.orbit.clear();
        self.trans[self.base] = Some(Perm::identity(degree));
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let c = s.image0(b);
                if self.trans[c].is_none() {
                    let u = self.trans[b].as_ref().unwrap() * s;
                    self.trans[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
        for &b in &self.orbit {
            self.inv[b] = Some(self.trans[b].as_ref().unwrap().invert());
        }
    }
}

/// A stabilizer chain `G = G_0 >= G_1 >= ... >= G_k = 1` with one orbit
/// transversal per level.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Deterministic Schreier-Sims. The base starts with `prefix` and
    /// continues with the remaining moved points in ascending order.
    pub fn build(degree: usize, gens: &[Perm], prefix: &[usize]) -> StabChain {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            assert!(p >= 1 && p <= degree, "base point {p} out of range");
            if !base.contains(&(p - 1)) {
                base.push(p - 1);
            }
        }
        let mut moved = vec![false; degree];
        for g in &gens {
            for (i, m) in moved.iter_mut().enumerate() {
                *m |= g.image0(i) != i;
            }
        }
        for (i, &m) in moved.iter().enumerate() {
            if m && !base.contains(&i) {
                base.push(i);
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let lg = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&p| g.image0(p) == p))
                .cloned()
                .collect();
            levels.push(Level::new(b, degree, lg));
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let k = self.levels.len();
        let mut i = k as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut restart = None;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            'scan: for &b in &orbit {
                for s in &gens {
                    let c = s.image0(b);
                    let ub = self.levels[lvl].trans[b].as_ref().unwrap();
                    let uc = self.levels[lvl].inv[c].as_ref().unwrap();
                    let h = &(ub * s) * uc;
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = self.sift_from(lvl + 1, h);
                    if res.is_identity() {
                        continue;
                    }
                    assert!(j < k, "residue moves no base point");
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(res.clone());
                        self.levels[l].recompute();
                    }
                    restart = Some(j as isize);
                    break 'scan;
                }
            }
            i = match restart {
                Some(j) => j,
                None => i - 1,
            };
        }
    }

    fn sift_from(&self, start: usize, mut g: Perm) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let b = g.image0(level.base);
            match &level.inv[b] {
                Some(ui) => g = &g * ui,
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    /// Sifts `g`, returning the residue and the level where sifting stopped.
    pub fn sift(&self, g: &Perm) -> (Perm, usize) {
        self.sift_from(0, g.clone())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g).0.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Base points, one-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base + 1).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of the pointwise stabilizer of the first `depth`
    /// base points.
    pub fn level_generators(&self, depth: usize) -> Vec<Perm> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    fn for_each_element<F: FnMut(&Perm)>(&self, f: &mut F) {
        fn rec<F: FnMut(&Perm)>(levels: &[Level], acc: &Perm, f: &mut F) {
            match levels.split_last() {
                None => f(acc),
                Some((last, rest)) => {
                    for &b in &last.orbit {
                        let next = acc * last.trans[b].as_ref().unwrap();
                        rec(rest, &next, f);
                    }
                }
            }
        }
        rec(&self.levels, &Perm::identity(self.degree), f);
    }
}

/// Points reached from a starting point, with a word over the group's
/// generators reaching each one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub points: Vec<usize>,
    pub words: Vec<FreeWord>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.points.contains(&k)
    }

    pub fn word_for(&self, k: usize) -> Option<&FreeWord> {
        self.points
            .iter()
            .position(|&p| p == k)
            .map(|i| &self.words[i])
    }
}

/// Evaluates a word over `gens` as a permutation.
pub fn eval_word(degree: usize, gens: &[Perm], w: &FreeWord) -> Result<Perm> {
    let mut acc = Perm::identity(degree);
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        let g = gens.get(k.wrapping_sub(1)).ok_or(Error::LetterOutOfRange {
            letter: l,
            generators: gens.len(),
        })?;
        acc = if l > 0 { &acc * g } else { &acc * &g.invert() };
    }
    Ok(acc)
}

/// A permutation group given by generators, with a lazily built
/// stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    bound: u128,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::InvalidSpec("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            bound: DEFAULT_ELEMENT_BOUND,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Sets the cap used by exhaustive searches.
    pub fn with_element_bound(mut self, bound: u128) -> PermGroup {
        self.bound = bound;
        self
    }

    pub fn element_bound(&self) -> u128 {
        self.bound
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::build(self.degree, &self.generators, prefix)
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Perm::is_identity)
    }

    /// Membership by sifting; false for a permutation of another degree.
    pub fn contains(&self, p: &Perm) -> bool {
        self.chain().contains(p)
    }

    pub fn try_contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.contains(p))
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.generators.iter().all(|h| g.contains(h))
    }

    /// All elements, refused when the order exceeds the element bound.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > self.bound {
            return Err(Error::BoundExceeded {
                order,
                bound: self.bound,
            });
        }
        let mut out = Vec::with_capacity(order as usize);
        self.chain().for_each_element(&mut |g| out.push(g.clone()));
        Ok(out)
    }

    pub fn evaluate(&self, w: &FreeWord) -> Result<Perm> {
        eval_word(self.degree, &self.generators, w)
    }

    /// A shortest word over the generators (and their inverses) evaluating
    /// to `p`, found by breadth-first search of the Cayley graph.
    pub fn word_for(&self, p: &Perm) -> Result<FreeWord> {
        if !self.try_contains(p)? {
            return Err(Error::NotInGroup(p.to_string()));
        }
        let order = self.order();
        if order > self.bound {
            return Err(Error::BoundExceeded {
                order,
                bound: self.bound,
            });
        }
        let id = Perm::identity(self.degree);
        if p.is_identity() {
            return Ok(FreeWord::empty());
        }
        let inverses: Vec<Perm> = self.generators.iter().map(Perm::invert).collect();
        let mut seen: std::collections::HashMap<Perm, FreeWord> = std::collections::HashMap::new();
        seen.insert(id.clone(), FreeWord::empty());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let wx = seen[&x].clone();
            for (i, g) in self.generators.iter().enumerate() {
                for (letter, q) in [(i as i32 + 1, g), (-(i as i32 + 1), &inverses[i])] {
                    let y = &x * q;
                    if seen.contains_key(&y) {
                        continue;
                    }
                    let mut w = wx.clone();
                    w.push(letter);
                    if &y == p {
                        return Ok(w);
                    }
                    seen.insert(y.clone(), w);
                    queue.push_back(y);
                }
            }
        }
        Err(Error::Internal("element not reached".into()))
    }

    /// Breadth-first orbit of `k`, trying each generator before its inverse.
    pub fn orbit(&self, k: usize) -> Orbit {
        assert!(k >= 1 && k <= self.degree, "point {k} out of range");
        let inverses: Vec<Perm> = self.generators.iter().map(Perm::invert).collect();
        let mut seen = vec![usize::MAX; self.degree + 1];
        let mut points = vec![k];
        let mut words = vec![FreeWord::empty()];
        seen[k] = 0;
        let mut head = 0;
        while head < points.len() {
            let b = points[head];
            let wb = words[head].clone();
            head += 1;
            for (i, g) in self.generators.iter().enumerate() {
                for (letter, p) in [(i as i32 + 1, g), (-(i as i32 + 1), &inverses[i])] {
                    let c = p.apply(b);
                    if seen[c] == usize::MAX {
                        seen[c] = points.len();
                        points.push(c);
                        let mut w = wb.clone();
                        w.push(letter);
                        words.push(w);
                    }
                }
            }
        }
        Orbit { points, words }
    }

    /// Orbit partition; orbits are sorted and listed by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree + 1];
        let mut out = Vec::new();
        for k in 1..=self.degree {
            if seen[k] {
                continue;
            }
            let mut o = self.orbit(k).points;
            for &p in &o {
                seen[p] = true;
            }
            o.sort_unstable();
            out.push(o);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(1).len() == self.degree
    }

    pub fn point_stabilizer(&self, k: usize) -> PermGroup {
        self.pointwise_stabilizer(&[k])
    }

    /// Subgroup fixing every listed point.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = self.chain_with_base(points);
        let mut distinct = points.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let gens = chain.level_generators(distinct.len());
        PermGroup {
            degree: self.degree,
            generators: gens,
            bound: self.bound,
            chain: OnceLock::new(),
        }
    }

    /// Schreier generators of the stabilizer of `k` written as words over
    /// this group's generators. Only words that enlarge the subgroup spanned
    /// so far are kept.
    pub fn stabilizer_words(&self, k: usize) -> Vec<(FreeWord, Perm)> {
        let orbit = self.orbit(k);
        let target = self.point_stabilizer(k).order();
        let mut kept: Vec<(FreeWord, Perm)> = Vec::new();
        let mut span = PermGroup::trivial(self.degree);
        let mut seen = HashSet::new();
        'outer: for (b, wb) in orbit.points.iter().zip(&orbit.words) {
            for (i, g) in self.generators.iter().enumerate() {
                if span.order() == target {
                    break 'outer;
                }
                let c = g.apply(*b);
                let wc = orbit.word_for(c).expect("orbit closed");
                let mut w = wb.clone();
                w.push(i as i32 + 1);
                let w = (&w * &wc.inverse()).reduce();
                if w.is_empty() || !seen.insert(w.clone()) {
                    continue;
                }
                let p = self.evaluate(&w).expect("letters in range");
                if span.contains(&p) {
                    continue;
                }
                kept.push((w, p));
                span = PermGroup::new(self.degree, kept.iter().map(|(_, p)| p.clone()).collect())
                    .expect("same degree");
            }
        }
        kept
    }

    /// Smallest generating set found greedily from a list of elements.
    fn generated_by(&self, elems: impl IntoIterator<Item = Perm>) -> PermGroup {
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = PermGroup::trivial(self.degree);
        for e in elems {
            if !span.contains(&e) {
                gens.push(e);
                span = PermGroup::new(self.degree, gens.clone()).expect("same degree");
            }
        }
        span.with_element_bound(self.bound)
    }

    /// Subgroup mapping `set` onto itself, by exhaustive search.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<PermGroup> {
        if set.is_empty() {
            return Err(Error::InvalidSpec("empty point set".into()));
        }
        let mut mask = vec![false; self.degree + 1];
        for &p in set {
            if p == 0 || p > self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            mask[p] = true;
        }
        let elems = self.elements()?;
        Ok(self.generated_by(
            elems
                .into_iter()
                .filter(|g| set.iter().all(|&p| mask[g.apply(p)])),
        ))
    }

    /// Centralizer of `p`, by exhaustive search.
    pub fn centralizer(&self, p: &Perm) -> Result<PermGroup> {
        if !self.try_contains(p)? {
            return Err(Error::NotInGroup(p.to_string()));
        }
        let elems = self.elements()?;
        Ok(self.generated_by(elems.into_iter().filter(|g| g.commutes_with(p))))
    }

    /// Lexicographically least element (by image list) of the right coset
    /// `self * x`.
    pub fn min_coset_rep(&self, x: &Perm) -> Perm {
        let chain = self.chain();
        let mut cur = x.clone();
        for level in &chain.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&b| cur.image0(b))
                .expect("orbit contains the base point");
            cur = level.trans[best].as_ref().unwrap() * &cur;
        }
        cur
    }

    /// One representative per right coset `h * x`, each the least element of
    /// its coset, sorted so the identity comes first.
    pub fn right_transversal(&self, h: &PermGroup) -> Result<Vec<Perm>> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: h.degree,
            });
        }
        if let Some(i) = h.generators.iter().position(|g| !self.contains(g)) {
            return Err(Error::NotASubgroup(i + 1));
        }
        let index = self.order() / h.order();
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id.clone()]);
        let mut reps = vec![id];
        while let Some(r) = queue.pop_front() {
            for g in &self.generators {
                let c = h.min_coset_rep(&(&r * g));
                if seen.insert(c.clone()) {
                    reps.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        if reps.len() as u128 != index {
            return Err(Error::Internal(format!(
                "found {} cosets, expected {index}",
                reps.len()
            )));
        }
        reps.sort_by(|a, b| a.images0().cmp(b.images0()));
        Ok(reps)
    }

    /// The unique element agreeing with `candidate` on `probes`.
    pub fn identify_by_action(&self, candidate: &Perm, probes: &[usize]) -> Result<Perm> {
        for &p in probes {
            if p == 0 || p > self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
        }
        self.chain_with_base(probes).identify(candidate, probes)
    }
}

impl StabChain {
    /// The unique element agreeing with `candidate` on `probes`, for a chain
    /// whose base starts with `probes`.
    pub fn identify(&self, candidate: &Perm, probes: &[usize]) -> Result<Perm> {
        if candidate.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: candidate.degree(),
            });
        }
        let mut distinct: Vec<usize> = Vec::new();
        for &p in probes {
            if !distinct.contains(&p) {
                distinct.push(p);
            }
        }
        let m = distinct.len().min(self.levels.len());
        if self.levels[..m]
            .iter()
            .zip(&distinct)
            .any(|(l, &p)| l.base + 1 != p)
        {
            return Err(Error::Internal(
                "chain base does not start with the probes".into(),
            ));
        }
        let on_probes: u128 = self.levels[..m]
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product();
        if on_probes != self.order() {
            return Err(Error::NotFaithful);
        }
        // targets[i] is the required image of distinct[i] under the remaining factor
        let mut targets: Vec<usize> = distinct.iter().map(|&p| candidate.image0(p - 1)).collect();
        let mut factors: Vec<&Perm> = Vec::with_capacity(m);
        for (i, level) in self.levels[..m].iter().enumerate() {
            let t = targets[i];
            let ui = level.inv[t].as_ref().ok_or(Error::NoMatch)?;
            for x in targets.iter_mut() {
                *x = ui.image0(*x);
            }
            factors.push(level.trans[t].as_ref().unwrap());
        }
        if targets.iter().zip(&distinct).any(|(&t, &p)| t != p - 1) {
            return Err(Error::NoMatch);
        }
        let mut g = Perm::identity(self.degree);
        for u in factors.iter().rev() {
            g = &g * u;
        }
        Ok(g)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}
