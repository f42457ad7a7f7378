//! Torus diagrams and the slope calculus for cycles drawn on them.

mod diagram;
mod linking;
mod links;
mod slope;

pub use diagram::{CrossingMatrix, TorusDiagram};
pub use linking::torus_link_linking_number;
pub use links::{CycleRange, LinkWitness, SlopeConflict};
pub use slope::SlopeClass;

/// Linkless diagram of `K6 - e` (missing edge 1-4).
pub const K6_MINUS_E_EMBEDDING: &str = include_str!("../../data/embeddings/k6_minus_e.emb");

/// A diagram of `K6 - e` (missing edge 1-2) with one linked pair of triangles.
pub const K6_MINUS_E_LINKED_EMBEDDING: &str =
    include_str!("../../data/embeddings/k6_minus_e_linked.emb");

pub fn k6_minus_e_embedding() -> TorusDiagram {
    TorusDiagram::parse(K6_MINUS_E_EMBEDDING).expect("bundled embedding parses")
}

pub fn k6_minus_e_linked_embedding() -> TorusDiagram {
    TorusDiagram::parse(K6_MINUS_E_LINKED_EMBEDDING).expect("bundled embedding parses")
}
