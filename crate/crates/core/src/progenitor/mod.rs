//! Involutory progenitors, their presentations and rewrite rules.

mod rules;
mod spec;
mod word;

pub use rules::{conjugate_rule, derive_rules, Rule, RuleKind, RuleSet};
pub use spec::{
    build_presentation, expand_power, relator_power_expand, ProgenitorPresentation, ProgenitorSpec,
    Relator, MAX_TAIL,
};
pub use word::{LabelMap, Word};
