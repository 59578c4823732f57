//! Free words, finite presentations and coset enumeration.

mod coset_table;
mod presentation;
mod word;

pub use coset_table::{todd_coxeter, word_image, CosetTable, DEFAULT_MAX_COSETS};
pub use presentation::Presentation;
pub use word::FreeWord;
