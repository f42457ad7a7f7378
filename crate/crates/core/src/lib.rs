//! Small-graph topology engine.
//!
//! The crate is organised in four layers:
//!
//! * [`graph`]: simple undirected graphs of order at most [`graph::MAX_ORDER`],
//!   with canonical forms, subgraph and minor containment, cycle enumeration
//!   and graph6 I/O.
//! * [`oracles`]: forbidden-minor predicates for intrinsic linking and
//!   toroidality (nIL, toroidal, TN, maxnIL, MTN).
//! * [`torus`]: torus diagrams, cycle slopes and link detection among
//!   disjoint cycles of a torus embedding.
//! * [`search`]: the recursive MTN search over order-9 graphs, the maxnIL
//!   census for small orders, and certification of supplied embeddings.
//!
//! Vertices are 0-based in the Rust API. Every textual format (embedding
//! files, reports, CLI arguments) uses 1-based labels.

pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod search;
pub mod torus;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Cycle, Graph};
