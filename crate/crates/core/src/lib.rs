//! Symmetric generation of finite groups.
//!
//! A progenitor `2^*n : N` is the semidirect product of a free product of
//! `n` involutions `t_1..t_n` with a transitive control group `N` permuting
//! them. Factoring by relators of the form `pi * w` (with `pi` in `N` and
//! `w` a word in the `t_i`) gives finite images, and every element of such
//! an image can be written as `pi * w` with a short word `w`.
//!
//! The crate covers the whole pipeline: permutation groups ([`perm`]),
//! coset enumeration ([`fpgroup`]), progenitor presentations and rewriting
//! rules ([`progenitor`]), double coset enumeration ([`dcenum`]) and the
//! symmetric representation of elements ([`symrep`]).

pub mod cli;
pub mod dcenum;
pub mod error;
pub mod fpgroup;
pub mod perm;
pub mod progenitor;
pub mod spec_file;
pub mod symrep;

pub use error::{Error, Result};
