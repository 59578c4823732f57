use crate::dcenum::SymImage;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::progenitor::{Rule, RuleKind, RuleSet, Word};

use super::SymElement;

/// One rewriting step: where it applied and the resulting pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub position: usize,
    pub removed: usize,
    pub control: Perm,
    pub word: Word,
}

fn find_redex<'r>(w: &[usize], rules: &'r RuleSet) -> Option<(usize, usize, Option<&'r Rule>)> {
    let max = rules.max_pattern_len();
    for i in 0..w.len() {
        if i + 1 < w.len() && w[i] == w[i + 1] {
            return Some((i, 2, None));
        }
        for len in 2..=max.min(w.len() - i) {
            if let Some(r) = rules.get(&w[i..i + len]) {
                return Some((i, len, Some(r)));
            }
        }
    }
    None
}

/// Rewrites `(pi, w)` to normal form: deletes equal adjacent letters and
/// applies rules at the leftmost possible position, gathering each rule's
/// permutation to the left. Fails after `max_steps` steps.
pub fn canon(raw: (Perm, Word), rules: &RuleSet, max_steps: usize) -> Result<SymElement> {
    canon_traced(raw, rules, max_steps).map(|(e, _)| e)
}

/// As [`canon`], also returning every intermediate pair.
pub fn canon_traced(
    raw: (Perm, Word),
    rules: &RuleSet,
    max_steps: usize,
) -> Result<(SymElement, Vec<Step>)> {
    let (mut pi, w) = raw;
    let n = pi.degree();
    w.check_range(n)?;
    let mut w = w.into_letters();
    let mut trace = Vec::new();
    while let Some((i, len, rule)) = find_redex(&w, rules) {
        if trace.len() >= max_steps {
            return Err(Error::RewriteLimit(max_steps));
        }
        match rule {
            None => {
                w.drain(i..i + 2);
            }
            Some(r) => {
                // u P v = u rho R v = rho u^rho R v
                let mut next: Vec<usize> = w[..i].iter().map(|&l| r.perm.apply(l)).collect();
                next.extend_from_slice(r.replacement.letters());
                next.extend_from_slice(&w[i + len..]);
                pi = &pi * &r.perm;
                w = next;
            }
        }
        trace.push(Step {
            position: i,
            removed: len,
            control: pi.clone(),
            word: Word::new(w.clone()),
        });
    }
    Ok((SymElement::canonical(pi, Word::new(w)), trace))
}

/// Rules sending each one-letter extension `u a` of a stored coset
/// representative `u` onto the representative of its coset.
pub fn completion_rules(img: &SymImage) -> Result<RuleSet> {
    let mut out = RuleSet::new();
    for u in img.cst_words() {
        for a in 1..=img.n() {
            if u.last() == Some(a) {
                continue;
            }
            let mut ua = u.clone();
            ua.push(a);
            let target = img.cst(img.point_of(&ua));
            if *target == ua {
                continue;
            }
            let g = &img.word_perm(&ua) * &img.word_perm(target).invert();
            let pi = img.induced_action(&g)?;
            if let Some(rule) = Rule::oriented(ua, pi, target.clone(), RuleKind::Completion) {
                out.insert(rule);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deletion_only() {
        let rules = RuleSet::new();
        let e = canon((Perm::identity(3), Word::new(vec![3, 3])), &rules, 10).unwrap();
        assert!(e.word().is_empty());
        assert!(e.is_canonical());
        let e = canon(
            (Perm::identity(3), Word::new(vec![1, 2, 2, 1, 3])),
            &rules,
            10,
        )
        .unwrap();
        assert_eq!(e.word(), &Word::new(vec![3]));
    }

    #[test]
    fn rule_gathers_left() {
        let mut rules = RuleSet::new();
        let rho = Perm::parse_cycles("(1,2)", 3).unwrap();
        rules.insert(Rule {
            pattern: Word::new(vec![2, 3]),
            perm: rho.clone(),
            replacement: Word::new(vec![3]),
            kind: RuleKind::Shortening,
        });
        let (e, trace) =
            canon_traced((Perm::identity(3), Word::new(vec![1, 2, 3])), &rules, 10).unwrap();
        assert_eq!(trace[0].control, rho);
        assert_eq!(trace[0].word, Word::new(vec![2, 3]));
        assert_eq!(trace.len(), 2);
        assert!(e.control().is_identity());
        assert_eq!(e.word(), &Word::new(vec![3]));
    }

    #[test]
    fn step_limit() {
        let rules = RuleSet::new();
        let err = canon((Perm::identity(3), Word::new(vec![1, 1, 2, 2])), &rules, 1).unwrap_err();
        assert_eq!(err, Error::RewriteLimit(1));
    }
}
