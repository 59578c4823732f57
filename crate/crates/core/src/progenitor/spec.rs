use crate::error::{Error, Result};
use crate::fpgroup::{todd_coxeter, FreeWord, Presentation};
use crate::perm::{Perm, PermGroup};

use super::{LabelMap, Word};

/// Longest relator tail (after power expansion) accepted by the rule
/// derivation.
pub const MAX_TAIL: usize = 12;

/// A factoring relator `(pi * w)^power = 1`, with `pi` given as a word over
/// the control group's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub control_word: FreeWord,
    pub tail: Word,
    pub power: u32,
}

impl Relator {
    pub fn new(control_word: FreeWord, tail: Word) -> Relator {
        Relator {
            control_word,
            tail,
            power: 1,
        }
    }

    pub fn with_power(mut self, power: u32) -> Relator {
        self.power = power;
        self
    }
}

/// An involutory progenitor `2^*n : N` together with factoring relators.
#[derive(Clone, Debug)]
pub struct ProgenitorSpec {
    n: usize,
    control_gens: Vec<Perm>,
    control_presentation: Presentation,
    symbol: String,
    relators: Vec<Relator>,
    labels: LabelMap,
    control: PermGroup,
}

impl ProgenitorSpec {
    /// Validates transitivity, that the control generators satisfy the
    /// control presentation, and that relator letters are in range.
    pub fn new(
        control_gens: Vec<Perm>,
        control_presentation: Presentation,
        relators: Vec<Relator>,
        labels: Option<LabelMap>,
    ) -> Result<ProgenitorSpec> {
        let n = control_gens
            .first()
            .map(Perm::degree)
            .ok_or_else(|| Error::InvalidSpec("no control generators".into()))?;
        if control_gens.len() != control_presentation.num_generators() {
            return Err(Error::InvalidSpec(format!(
                "{} control generators but the presentation has {}",
                control_gens.len(),
                control_presentation.num_generators()
            )));
        }
        let control = PermGroup::new(n, control_gens.clone())?;
        if !control.is_transitive() {
            return Err(Error::InvalidSpec("control group is not transitive".into()));
        }
        for r in control_presentation.relators() {
            if !control.evaluate(r)?.is_identity() {
                return Err(Error::InvalidSpec(format!(
                    "control generators violate relator {}",
                    r.display_with(control_presentation.generator_names())
                )));
            }
        }
        let m = control_gens.len();
        for r in &relators {
            if let Some(&l) = r
                .control_word
                .letters()
                .iter()
                .find(|l| l.unsigned_abs() as usize > m)
            {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    generators: m,
                });
            }
            r.tail.check_range(n)?;
            if r.power == 0 {
                return Err(Error::InvalidSpec("relator power must be positive".into()));
            }
        }
        let labels = labels.unwrap_or_else(|| LabelMap::numeric(n));
        if labels.len() != n {
            return Err(Error::InvalidSpec(format!(
                "{} labels for {} symmetric generators",
                labels.len(),
                n
            )));
        }
        let symbol = ["t", "s", "u", "T"]
            .iter()
            .find(|s| control_presentation.generator_index(s).is_none())
            .map(|s| s.to_string())
            .unwrap_or_else(|| "t_".into());
        Ok(ProgenitorSpec {
            n,
            control_gens,
            control_presentation,
            symbol,
            relators,
            labels,
            control,
        })
    }

    /// Sets the name of the symmetric generator symbol in the presentation.
    pub fn with_symbol(mut self, symbol: &str) -> Result<ProgenitorSpec> {
        if self.control_presentation.generator_index(symbol).is_some() {
            return Err(Error::InvalidSpec(format!(
                "symbol {symbol:?} clashes with a control generator"
            )));
        }
        self.symbol = symbol.to_string();
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn control_gens(&self) -> &[Perm] {
        &self.control_gens
    }

    pub fn control_presentation(&self) -> &Presentation {
        &self.control_presentation
    }

    pub fn control_group(&self) -> &PermGroup {
        &self.control
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    /// Whether the control presentation defines a group no larger than its
    /// permutation action, i.e. the action on the generators is faithful.
    pub fn control_faithful(&self, max_cosets: usize) -> Result<bool> {
        let t = todd_coxeter(&self.control_presentation, &[], max_cosets)?;
        Ok(t.index() as u128 == self.control.order())
    }

    /// The control permutation of a relator.
    pub fn control_perm(&self, r: &Relator) -> Result<Perm> {
        self.control.evaluate(&r.control_word)
    }

    /// Relator `(pi w)^k` gathered into the form `pi' * w'`.
    pub fn normal_form(&self, r: &Relator) -> Result<(Perm, Word)> {
        let pi = self.control_perm(r)?;
        Ok(expand_power(&pi, &r.tail, r.power))
    }
}

/// `(pi * w)^k = pi^k * w^(pi^(k-1)) ... w^pi * w`.
pub fn expand_power(pi: &Perm, w: &Word, k: u32) -> (Perm, Word) {
    let mut letters = Vec::with_capacity(w.len() * k as usize);
    for j in (0..k).rev() {
        letters.extend(w.map(&pi.pow(j as i64)).into_letters());
    }
    (pi.pow(k as i64), Word::new(letters))
}

/// `(pi * t_i)^k` in gathered form: `(pi^k, [i^(pi^(k-1)), ..., i^pi, i])`.
pub fn relator_power_expand(pi: &Perm, i: usize, k: u32) -> (Perm, Word) {
    expand_power(pi, &Word::new(vec![i]), k)
}

/// The finite presentation of a progenitor image, on the control generators
/// followed by one symbol standing for `t_1`.
#[derive(Clone, Debug)]
pub struct ProgenitorPresentation {
    pub presentation: Presentation,
    /// Words for the control generators, generating the subgroup `N`.
    pub control_words: Vec<FreeWord>,
    /// `t_i` as a conjugate of the symbol by a control word.
    pub t_words: Vec<FreeWord>,
}

/// Builds the presentation: control relators, `t^2`, commutators of `t`
/// with generators of the stabilizer of index 1, and the factoring
/// relators with each letter `t_a` written as `t^(w_a)`.
pub fn build_presentation(spec: &ProgenitorSpec) -> Result<ProgenitorPresentation> {
    let m = spec.control_gens.len();
    let s = FreeWord::generator(m + 1);
    let mut names = spec.control_presentation.generator_names().to_vec();
    names.push(spec.symbol.clone());

    let orbit = spec.control.orbit(1);
    let mut t_words = Vec::with_capacity(spec.n);
    for a in 1..=spec.n {
        let w = orbit
            .word_for(a)
            .ok_or_else(|| Error::Internal(format!("no orbit witness for {a}")))?;
        t_words.push(s.conj(w));
    }

    let mut rels: Vec<FreeWord> = spec.control_presentation.relators().to_vec();
    rels.push(s.pow(2));
    for (h, _) in spec.control.stabilizer_words(1) {
        rels.push(FreeWord::commutator(&s, &h));
    }
    for r in &spec.relators {
        let mut w = r.control_word.clone();
        for &a in r.tail.letters() {
            w = &w * &t_words[a - 1];
        }
        rels.push(w.pow(r.power as i64));
    }
    let presentation = Presentation::new(names, rels)?;
    let control_words = (1..=m).map(FreeWord::generator).collect();
    Ok(ProgenitorPresentation {
        presentation,
        control_words,
        t_words,
    })
}
