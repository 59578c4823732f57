use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::progenitor::{LabelMap, Word};

/// An element `pi * w` of a progenitor image: a control permutation on the
/// symmetric generator indices followed by a word in the generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymElement {
    control: Perm,
    word: Word,
    canonical: bool,
}

impl SymElement {
    /// An element in raw (not necessarily canonical) form.
    pub fn new(control: Perm, word: Word) -> SymElement {
        SymElement {
            control,
            word,
            canonical: false,
        }
    }

    pub(crate) fn canonical(control: Perm, word: Word) -> SymElement {
        SymElement {
            control,
            word,
            canonical: true,
        }
    }

    pub fn identity(n: usize) -> SymElement {
        SymElement::canonical(Perm::identity(n), Word::empty())
    }

    /// The symmetric generator `t_i`.
    pub fn generator(n: usize, i: usize) -> SymElement {
        SymElement::new(Perm::identity(n), Word::new(vec![i]))
    }

    pub fn from_control(control: Perm) -> SymElement {
        SymElement::new(control, Word::empty())
    }

    pub fn control(&self) -> &Perm {
        &self.control
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn n(&self) -> usize {
        self.control.degree()
    }

    pub fn into_parts(self) -> (Perm, Word) {
        (self.control, self.word)
    }

    /// Single integer sequence: the images of `1..n` under the control
    /// permutation followed by the word letters.
    pub fn flatten(&self) -> Vec<usize> {
        let mut v = self.control.images();
        v.extend_from_slice(self.word.letters());
        v
    }

    pub fn unflatten(n: usize, seq: &[usize]) -> Result<SymElement> {
        if seq.len() < n || n == 0 {
            return Err(Error::Parse(format!(
                "sequence of length {} is shorter than {n}",
                seq.len()
            )));
        }
        let control = Perm::from_images(&seq[..n])?;
        let word = Word::new(seq[n..].to_vec());
        word.check_range(n)?;
        Ok(SymElement::new(control, word))
    }

    /// Parses `cycles | a.b.c`, optionally wrapped in parentheses. The
    /// control part may be `id` or `()`; the word part may be empty.
    pub fn parse(text: &str, labels: &LabelMap) -> Result<SymElement> {
        let t = text.trim();
        let (left, right) = t
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {text:?}")))?;
        let (left, right) = match right.trim_end().strip_suffix(')') {
            Some(r) if !r.contains('(') => {
                let l = left
                    .trim_start()
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?;
                (l, r)
            }
            _ => (left, right),
        };
        let control = labels.parse_perm(left)?;
        let word = labels.parse_word(right)?;
        Ok(SymElement::new(control, word))
    }

    pub fn format(&self, labels: &LabelMap) -> String {
        let control = if self.control.is_identity() {
            "id".to_string()
        } else {
            labels.format_perm(&self.control)
        };
        format!("{control} | {}", labels.format_word(&self.word))
            .trim_end()
            .to_string()
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {:?}", self.control, self.word)
    }
}

/// `pi u . sigma v = pi sigma . u^sigma v`, without reduction.
pub fn unify(a: &SymElement, b: &SymElement) -> Result<(Perm, Word)> {
    let control = a.control.compose(&b.control)?;
    Ok((control, a.word.map(&b.control).concat(&b.word)))
}
