use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::spec::MAX_TAIL;
use super::{ProgenitorSpec, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Replacement is shorter than the pattern.
    Shortening,
    /// Same length, smaller in the right-to-left order.
    Swap,
    /// Rewrites a word onto its stored coset representative.
    Completion,
}

/// A rewrite `pattern -> perm * replacement`, valid as an identity in the
/// group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub pattern: Word,
    pub perm: Perm,
    pub replacement: Word,
    pub kind: RuleKind,
}

impl Rule {
    /// Orients the identity `lhs = perm * rhs` so that the replacement is
    /// the smaller side in the (length, colex) order. Returns `None` for
    /// identical sides.
    pub fn oriented(lhs: Word, perm: Perm, rhs: Word, kind_if_equal: RuleKind) -> Option<Rule> {
        let kind = if lhs.len() == rhs.len() {
            kind_if_equal
        } else {
            RuleKind::Shortening
        };
        match rhs.cmp_colex(&lhs) {
            Ordering::Less => Some(Rule {
                pattern: lhs,
                perm,
                replacement: rhs,
                kind,
            }),
            Ordering::Greater => Some(Rule {
                pattern: rhs,
                perm: perm.invert(),
                replacement: lhs,
                kind,
            }),
            Ordering::Equal => None,
        }
    }
}

/// `sigma^-1 * rule * sigma`: letters mapped by `sigma`, permutation
/// conjugated. The result may need reorienting, see [`Rule::oriented`].
pub fn conjugate_rule(rule: &Rule, sigma: &Perm) -> Rule {
    Rule {
        pattern: rule.pattern.map(sigma),
        perm: rule.perm.conjugate(sigma),
        replacement: rule.replacement.map(sigma),
        kind: rule.kind,
    }
}

/// Rewrite rules indexed by pattern. `t_i t_i -> 1` is implicit.
#[derive(Clone, Debug, Default)]
pub struct RuleSet {
    rules: Vec<Rule>,
    index: HashMap<Vec<usize>, usize>,
    max_len: usize,
}

impl RuleSet {
    pub fn new() -> RuleSet {
        RuleSet::default()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn max_pattern_len(&self) -> usize {
        self.max_len
    }

    pub fn get(&self, pattern: &[usize]) -> Option<&Rule> {
        self.index.get(pattern).map(|&i| &self.rules[i])
    }

    /// Adds a rule; for a pattern already present the smaller replacement
    /// wins. Returns whether the set changed.
    pub fn insert(&mut self, rule: Rule) -> bool {
        debug_assert_eq!(rule.replacement.cmp_colex(&rule.pattern), Ordering::Less);
        match self.index.get(rule.pattern.letters()) {
            Some(&i) => {
                if rule.replacement.cmp_colex(&self.rules[i].replacement) == Ordering::Less {
                    self.rules[i] = rule;
                    true
                } else {
                    false
                }
            }
            None => {
                self.max_len = self.max_len.max(rule.pattern.len());
                self.index
                    .insert(rule.pattern.letters().to_vec(), self.rules.len());
                self.rules.push(rule);
                true
            }
        }
    }

    pub fn extend(&mut self, other: &RuleSet) {
        for r in &other.rules {
            self.insert(r.clone());
        }
    }

    /// Rules of one kind.
    pub fn count(&self, kind: RuleKind) -> usize {
        self.rules.iter().filter(|r| r.kind == kind).count()
    }
}

/// All ways of writing the relator `pi * w = 1` with a cyclically rotated or
/// inverted word.
fn relator_variants(pi: &Perm, w: &Word) -> Vec<(Perm, Word)> {
    let mut out = Vec::new();
    let inverse = (pi.invert(), w.reversed().map(&pi.invert()));
    for (p, start) in [(pi.clone(), w.clone()), inverse] {
        let mut cur = start;
        for _ in 0..cur.len().max(1) {
            out.push((p.clone(), cur.clone()));
            if cur.is_empty() {
                break;
            }
            // pi a w' = 1  =>  w' pi a = 1  =>  pi w'^pi a = 1
            let letters = cur.letters();
            let mut next = Word::new(letters[1..].to_vec()).map(&p);
            next.push(letters[0]);
            cur = next;
        }
    }
    out
}

/// Rewrite rules from the factoring relators, closed under conjugation by
/// the control group.
///
/// Each relator `pi * P * S = 1` with `|P| >= |S|` and `|P| >= 2` gives
/// `P -> pi^-1 * S^-1`, kept when it shortens or, at equal length, when the
/// replacement is smaller read from the right.
pub fn derive_rules(spec: &ProgenitorSpec) -> Result<RuleSet> {
    let mut base = RuleSet::new();
    for r in spec.relators() {
        let (pi, w) = spec.normal_form(r)?;
        if w.len() > MAX_TAIL {
            return Err(Error::UnsupportedRelator(format!(
                "tail of length {} exceeds the supported maximum {MAX_TAIL}",
                w.len()
            )));
        }
        if w.has_adjacent_repeat() {
            return Err(Error::UnsupportedRelator(
                "tail has equal adjacent letters".into(),
            ));
        }
        for (p, v) in relator_variants(&pi, &w) {
            let letters = v.letters();
            let len = letters.len();
            for cut in 2..=len {
                if cut < len - cut {
                    continue;
                }
                let pattern = Word::new(letters[..cut].to_vec());
                let replacement = Word::new(letters[cut..].iter().rev().copied().collect());
                if let Some(rule) = Rule::oriented(pattern, p.invert(), replacement, RuleKind::Swap)
                {
                    base.insert(rule);
                }
            }
        }
    }
    let elements = spec.control_group().elements()?;
    let mut out = RuleSet::new();
    for rule in base.rules() {
        for sigma in &elements {
            let c = conjugate_rule(rule, sigma);
            if let Some(r) = Rule::oriented(c.pattern, c.perm, c.replacement, c.kind) {
                out.insert(r);
            }
        }
    }
    Ok(out)
}
