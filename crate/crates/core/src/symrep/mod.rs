//! Elements of a progenitor image written as `pi * w`: conversion to and
//! from permutations, multiplication, inversion and centralizers.

mod element;
mod rewrite;

pub use element::{unify, SymElement};
pub use rewrite::{canon, canon_traced, completion_rules, Step};

use crate::dcenum::SymImage;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::progenitor::{derive_rules, RuleSet};

pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// How products and equality are decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Rewriting with the derived rule set only.
    Rewrite,
    /// Through the permutation image.
    Image,
}

/// A finite image together with its rewriting rules.
#[derive(Clone, Debug)]
pub struct SymContext {
    image: SymImage,
    rules: RuleSet,
    max_steps: usize,
}

impl SymContext {
    pub fn new(image: SymImage) -> Result<SymContext> {
        let mut rules = derive_rules(image.spec())?;
        rules.extend(&completion_rules(&image)?);
        Ok(SymContext {
            image,
            rules,
            max_steps: DEFAULT_MAX_STEPS,
        })
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> SymContext {
        self.max_steps = max_steps;
        self
    }

    pub fn image(&self) -> &SymImage {
        &self.image
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn n(&self) -> usize {
        self.image.n()
    }

    pub fn identity(&self) -> SymElement {
        SymElement::identity(self.n())
    }

    /// Checks the control permutation lies in `N` and the word is in range.
    pub fn validate(&self, e: &SymElement) -> Result<()> {
        let n = self.n();
        if e.n() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: e.n(),
            });
        }
        e.word().check_range(n)?;
        if !self.image.spec().control_group().contains(e.control()) {
            return Err(Error::NotInGroup(
                self.image.spec().labels().format_perm(e.control()),
            ));
        }
        Ok(())
    }

    fn require_faithful(&self) -> Result<()> {
        if self.image.control_faithful_on_t_cosets() {
            Ok(())
        } else {
            Err(Error::NotFaithful)
        }
    }

    pub fn canon(&self, e: &SymElement) -> Result<SymElement> {
        if e.is_canonical() {
            return Ok(e.clone());
        }
        canon(
            (e.control().clone(), e.word().clone()),
            &self.rules,
            self.max_steps,
        )
    }

    pub fn canon_traced(&self, e: &SymElement) -> Result<(SymElement, Vec<Step>)> {
        canon_traced(
            (e.control().clone(), e.word().clone()),
            &self.rules,
            self.max_steps,
        )
    }

    /// Writes an element of the image as `pi * w` with `w` the stored coset
    /// representative of `N p`.
    pub fn per2sym(&self, p: &Perm) -> Result<SymElement> {
        let img = &self.image;
        if p.degree() != img.index() {
            return Err(Error::DegreeMismatch {
                left: img.index(),
                right: p.degree(),
            });
        }
        if !img.group().contains(p) {
            return Err(Error::NotInGroup(p.to_string()));
        }
        let w = img.cst(p.apply(1));
        let residue = p * &img.word_perm(w).invert();
        let h = img.identify_control(&residue)?;
        if h != residue {
            return Err(Error::NotFaithful);
        }
        let pi = img.induced_action(&h)?;
        Ok(SymElement::canonical(pi, w.clone()))
    }

    pub fn sym2per(&self, e: &SymElement) -> Result<Perm> {
        self.validate(e)?;
        Ok(&self.image.control_to_image(e.control())? * &self.image.word_perm(e.word()))
    }

    pub fn mult(&self, a: &SymElement, b: &SymElement, mode: Mode) -> Result<SymElement> {
        self.validate(a)?;
        self.validate(b)?;
        match mode {
            Mode::Rewrite => {
                self.require_faithful()?;
                canon(unify(a, b)?, &self.rules, self.max_steps)
            }
            Mode::Image => self.per2sym(&(&self.sym2per(a)? * &self.sym2per(b)?)),
        }
    }

    pub fn invert_sym(&self, a: &SymElement, mode: Mode) -> Result<SymElement> {
        self.validate(a)?;
        match mode {
            Mode::Rewrite => {
                self.require_faithful()?;
                let inv = a.control().invert();
                let w = a.word().reversed().map(&inv);
                canon((inv, w), &self.rules, self.max_steps)
            }
            Mode::Image => self.per2sym(&self.sym2per(a)?.invert()),
        }
    }

    pub fn equal_sym(&self, a: &SymElement, b: &SymElement, mode: Mode) -> Result<bool> {
        match mode {
            Mode::Rewrite => {
                self.validate(a)?;
                self.validate(b)?;
                self.require_faithful()?;
                Ok(self.canon(a)? == self.canon(b)?)
            }
            Mode::Image => Ok(self.sym2per(a)? == self.sym2per(b)?),
        }
    }

    /// Order of the centralizer of `a` in the image and generators for it.
    pub fn cenelt(&self, a: &SymElement) -> Result<(u128, Vec<SymElement>)> {
        let p = self.sym2per(a)?;
        let c = self.image.group().centralizer(&p)?;
        let gens = c
            .generators()
            .iter()
            .map(|g| self.per2sym(g))
            .collect::<Result<Vec<_>>>()?;
        Ok((c.order(), gens))
    }
}
