use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::fpgroup::{todd_coxeter, word_image, FreeWord};
use crate::perm::{Perm, PermGroup, StabChain};
use crate::progenitor::{build_presentation, ProgenitorSpec, Word};

/// A finite image of a progenitor acting on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct SymImage {
    spec: ProgenitorSpec,
    index: usize,
    gens_image: Vec<Perm>,
    ts: Vec<Perm>,
    t_points: Vec<usize>,
    point_to_t: Vec<Option<usize>>,
    control_image: PermGroup,
    t_chain: StabChain,
    group: PermGroup,
    cst: Vec<Word>,
    faithful: bool,
}

impl SymImage {
    pub fn spec(&self) -> &ProgenitorSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// Number of single cosets of `N`.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Images of the presentation generators: control generators, then the
    /// symmetric generator symbol.
    pub fn gens_image(&self) -> &[Perm] {
        &self.gens_image
    }

    /// Image of `t_i`, `i` one-based.
    pub fn t(&self, i: usize) -> &Perm {
        &self.ts[i - 1]
    }

    pub fn ts(&self) -> &[Perm] {
        &self.ts
    }

    /// Coset point `N t_i`.
    pub fn t_point(&self, i: usize) -> usize {
        self.t_points[i - 1]
    }

    pub fn t_points(&self) -> &[usize] {
        &self.t_points
    }

    pub fn control_image(&self) -> &PermGroup {
        &self.control_image
    }

    /// The whole image group.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// Whether `N` maps isomorphically onto its image and acts faithfully on
    /// its generators.
    pub fn control_faithful_on_t_cosets(&self) -> bool {
        self.faithful
    }

    /// Stored coset representative words, indexed by coset point.
    pub fn cst(&self, c: usize) -> &Word {
        &self.cst[c - 1]
    }

    pub fn cst_words(&self) -> &[Word] {
        &self.cst
    }

    /// Product of `t` images along `w`.
    pub fn word_perm(&self, w: &Word) -> Perm {
        let mut p = Perm::identity(self.index);
        for &i in w.letters() {
            p = &p * &self.ts[i - 1];
        }
        p
    }

    /// Coset point reached from coset 1 along `w`.
    pub fn point_of(&self, w: &Word) -> usize {
        w.letters().iter().fold(1, |c, &i| self.ts[i - 1].apply(c))
    }

    /// Action by conjugation on the symmetric generators of an element that
    /// normalizes them.
    pub fn induced_action(&self, g: &Perm) -> Result<Perm> {
        let mut images = Vec::with_capacity(self.n());
        for i in 1..=self.n() {
            let j = self.point_to_t[g.apply(self.t_point(i)) - 1].ok_or_else(|| {
                Error::NotInGroup("element does not normalize the symmetric generators".into())
            })?;
            images.push(j);
        }
        let p = Perm::from_images(&images)?;
        for i in 1..=self.n() {
            if self.t(i).conjugate(g) != *self.t(p.apply(i)) {
                return Err(Error::NotInGroup(
                    "element does not normalize the symmetric generators".into(),
                ));
            }
        }
        Ok(p)
    }

    /// The element of the control image agreeing with `candidate` on the
    /// cosets `N t_i`.
    pub fn identify_control(&self, candidate: &Perm) -> Result<Perm> {
        self.t_chain.identify(candidate, &self.t_points)
    }

    /// Realizes a control permutation (degree `n`) in the image, using the
    /// coset representative words: the coset of `w` goes to that of `w^pi`.
    pub fn control_to_image(&self, pi: &Perm) -> Result<Perm> {
        if pi.degree() != self.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: pi.degree(),
            });
        }
        if !self.spec.control_group().contains(pi) {
            return Err(Error::NotInGroup(self.spec.labels().format_perm(pi)));
        }
        let images: Vec<usize> = self.cst.iter().map(|w| self.point_of(&w.map(pi))).collect();
        let g = Perm::from_images(&images)
            .map_err(|_| Error::NotInGroup(self.spec.labels().format_perm(pi)))?;
        if !self.control_image.contains(&g) {
            return Err(Error::NotInGroup(self.spec.labels().format_perm(pi)));
        }
        Ok(g)
    }
}

/// Enumerates the cosets of `N` in the progenitor image, builds the
/// symmetric generator images and checks the image invariants. `t_words`
/// overrides the words used for the `t_i`.
pub fn build_image(
    spec: &ProgenitorSpec,
    t_words: Option<&[FreeWord]>,
    max_cosets: usize,
) -> Result<SymImage> {
    let pp = build_presentation(spec)?;
    let table = todd_coxeter(&pp.presentation, &pp.control_words, max_cosets)?;
    let index = table.index();
    let gens_image = table.coset_action()?;
    let n = spec.n();
    let words = t_words.unwrap_or(&pp.t_words);
    if words.len() != n {
        return Err(Error::InvalidSpec(format!(
            "{} t-words for {n} symmetric generators",
            words.len()
        )));
    }
    let ts = words
        .iter()
        .map(|w| word_image(&gens_image, w))
        .collect::<Result<Vec<_>>>()?;
    for (i, t) in ts.iter().enumerate() {
        if t.order() != 2 {
            return Err(Error::DegenerateImage(format!(
                "image of t_{} has order {}",
                i + 1,
                t.order()
            )));
        }
        if ts[..i].contains(t) {
            return Err(Error::DegenerateImage(format!(
                "image of t_{} repeats an earlier generator",
                i + 1
            )));
        }
    }
    let m = spec.control_gens().len();
    let control_image = PermGroup::new(index, gens_image[..m].to_vec())?;
    for (g, c) in gens_image[..m].iter().zip(spec.control_gens()) {
        for i in 1..=n {
            if ts[i - 1].conjugate(g) != ts[c.apply(i) - 1] {
                return Err(Error::DegenerateImage(format!(
                    "conjugation by a control generator does not permute the t images like its action on {}",
                    spec.labels().label(i)
                )));
            }
        }
    }
    let t_points: Vec<usize> = ts.iter().map(|t| t.apply(1)).collect();
    let mut point_to_t = vec![None; index];
    for (i, &p) in t_points.iter().enumerate() {
        if point_to_t[p - 1].is_some() {
            return Err(Error::DegenerateImage(
                "two symmetric generators lie in the same coset".into(),
            ));
        }
        point_to_t[p - 1] = Some(i + 1);
    }
    let mut all = gens_image.clone();
    all.extend(ts.iter().cloned());
    let group = PermGroup::new(index, all)?;
    let faithful = control_image.order() == spec.control_group().order()
        && spec.control_faithful(max_cosets).unwrap_or(false);
    if group.order() != index as u128 * control_image.order() {
        return Err(Error::Internal(
            "image order differs from index times |N|".into(),
        ));
    }
    let cst = build_cst(&ts, index)?;
    let t_chain = control_image.chain_with_base(&t_points);
    Ok(SymImage {
        spec: spec.clone(),
        index,
        gens_image,
        ts,
        t_points,
        point_to_t,
        control_image,
        t_chain,
        group,
        cst,
        faithful,
    })
}

fn distances(ts: &[Perm], index: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; index + 1];
    dist[1] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(c) = queue.pop_front() {
        for t in ts {
            let d = t.apply(c);
            if dist[d] == usize::MAX {
                dist[d] = dist[c] + 1;
                queue.push_back(d);
            }
        }
    }
    dist
}

/// Coset representatives: for each coset the shortest word in the `t_i`
/// reaching it from coset 1, ties broken by comparing words from the right.
pub fn build_cst(ts: &[Perm], index: usize) -> Result<Vec<Word>> {
    let dist = distances(ts, index);
    let mut cst = Vec::with_capacity(index);
    for c in 1..=index {
        if dist[c] == usize::MAX {
            return Err(Error::DegenerateImage(format!(
                "coset {c} is not reached by the symmetric generators"
            )));
        }
        let mut rev = Vec::with_capacity(dist[c]);
        let mut cur = c;
        while dist[cur] > 0 {
            let (i, next) = ts
                .iter()
                .enumerate()
                .map(|(i, t)| (i + 1, t.apply(cur)))
                .find(|&(_, d)| dist[d] + 1 == dist[cur])
                .expect("a neighbour one step closer");
            rev.push(i);
            cur = next;
        }
        rev.reverse();
        cst.push(Word::new(rev));
    }
    Ok(cst)
}

/// Shortest words reaching each coset, ties broken lexicographically.
pub fn lex_names(ts: &[Perm], index: usize) -> Vec<Word> {
    let mut names: Vec<Option<Word>> = vec![None; index + 1];
    names[1] = Some(Word::empty());
    let mut queue = VecDeque::from([1usize]);
    while let Some(c) = queue.pop_front() {
        let wc = names[c].clone().unwrap();
        for (i, t) in ts.iter().enumerate() {
            let d = t.apply(c);
            if names[d].is_none() {
                let mut w = wc.clone();
                w.push(i + 1);
                names[d] = Some(w);
                queue.push_back(d);
            }
        }
    }
    names
        .into_iter()
        .skip(1)
        .map(|w| w.unwrap_or_default())
        .collect()
}

/// Outcome of checking one factoring relator in the image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorCheck {
    pub relator: String,
    pub holds: bool,
}

/// Evaluates every factoring relator in the image.
pub fn verify_relators_in_image(
    spec: &ProgenitorSpec,
    img: &SymImage,
) -> Result<Vec<RelatorCheck>> {
    let mut out = Vec::new();
    let labels = spec.labels();
    for r in spec.relators() {
        let pi = spec.control_perm(r)?;
        let g = img.control_to_image(&pi)?;
        let one = &g * &img.word_perm(&r.tail);
        let holds = one.pow(r.power as i64).is_identity();
        let mut text = format!(
            "{} {}",
            labels.format_perm(&pi),
            labels.format_word(&r.tail)
        );
        if r.power != 1 {
            text = format!("[{text}]^{}", r.power);
        }
        if !holds {
            return Err(Error::RelatorFails(text));
        }
        out.push(RelatorCheck {
            relator: text,
            holds,
        });
    }
    Ok(out)
}
