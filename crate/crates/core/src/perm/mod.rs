//! Permutations and permutation groups.

mod group;
#[allow(clippy::module_inception)]
mod perm;

pub use group::{eval_word, Orbit, PermGroup, StabChain, DEFAULT_ELEMENT_BOUND};
pub use perm::Perm;
