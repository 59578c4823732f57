//! Finite images of progenitors and double coset enumeration over the
//! control group.

mod graph;
mod image;

pub use graph::{double_cosets, emit_graph, CollapsedGraph, DoubleCoset, Edge, GraphFormat};
pub use image::{
    build_cst, build_image, lex_names, verify_relators_in_image, RelatorCheck, SymImage,
};
