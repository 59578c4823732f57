use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A word in the symmetric generators, as one-based indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letterwise image `w^p`.
    pub fn map(&self, p: &Perm) -> Word {
        Word(self.0.iter().map(|&i| p.apply(i)).collect())
    }

    pub fn has_adjacent_repeat(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    /// Checks all letters lie in `1..=n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l > n) {
            Some(&l) => Err(Error::LetterOutOfRange {
                letter: l as i32,
                generators: n,
            }),
            None => Ok(()),
        }
    }

    /// Shortlex order comparing words from the right: shorter first, then
    /// lexicographic on the reversed words.
    pub fn cmp_colex(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }

    /// Ordinary shortlex order.
    pub fn cmp_shortlex(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Word {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// External names for the symmetric generator indices. Each index has a
/// machine label (used in files) and a display form (used in output).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<String>,
    display: Vec<String>,
}

impl LabelMap {
    pub fn new(labels: Vec<String>, display: Option<Vec<String>>) -> Result<LabelMap> {
        let display = display.unwrap_or_else(|| labels.clone());
        if display.len() != labels.len() {
            return Err(Error::InvalidSpec(
                "display table length differs from labels".into(),
            ));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(|c: char| c.is_whitespace() || "(),.|".contains(c)) {
                return Err(Error::InvalidSpec(format!("invalid label {l:?}")));
            }
            if labels[..i].contains(l) {
                return Err(Error::InvalidSpec(format!("duplicate label {l:?}")));
            }
        }
        for (i, d) in display.iter().enumerate() {
            if display[..i].contains(d)
                || (labels.contains(d) && labels.iter().position(|l| l == d) != Some(i))
            {
                return Err(Error::InvalidSpec(format!("ambiguous display label {d:?}")));
            }
        }
        Ok(LabelMap { labels, display })
    }

    /// Labels `1..=n`.
    pub fn numeric(n: usize) -> LabelMap {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        LabelMap {
            display: labels.clone(),
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i - 1]
    }

    pub fn display(&self, i: usize) -> &str {
        &self.display[i - 1]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of a machine or display label.
    pub fn index_of(&self, s: &str) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| l == s)
            .or_else(|| self.display.iter().position(|l| l == s))
            .map(|i| i + 1)
    }

    pub fn parse_perm(&self, text: &str) -> Result<Perm> {
        Perm::parse_cycles_with(text, self.len(), |t| self.index_of(t))
    }

    pub fn format_perm(&self, p: &Perm) -> String {
        p.to_cycle_string_with(|k| self.display(k).to_string())
    }

    pub fn parse_letters<S: AsRef<str>>(&self, letters: &[S]) -> Result<Word> {
        letters
            .iter()
            .map(|s| {
                self.index_of(s.as_ref().trim())
                    .ok_or_else(|| Error::Parse(format!("unknown label {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses a dot-separated word such as `b0.0.b0`; empty text is the empty
    /// word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let t = text.trim();
        if t.is_empty() {
            return Ok(Word::empty());
        }
        let parts: Vec<&str> = t.split('.').collect();
        self.parse_letters(&parts)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&i| self.display(i))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Compact name such as `∞01`, used for double coset labels.
    pub fn format_name(&self, w: &Word) -> String {
        if w.is_empty() {
            return "*".into();
        }
        w.letters().iter().map(|&i| self.display(i)).collect()
    }
}
