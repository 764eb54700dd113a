//! Totally odd strong immersions of complete graphs in graph products.
//!
//! * [`graph`]: simple graphs, standard families, the four products, text format.
//! * [`certificate`]: immersion certificates, their JSON form and the verifier.
//! * [`constructions`]: explicit immersions in direct and Cartesian products.
//! * [`solver`]: exhaustive computation of `toi(G)` and `χ(G)` on small graphs.

pub mod certificate;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod solver;

pub use certificate::{verify, Certificate, ClaimLevel, Route, VerificationReport};
pub use error::{Error, Result};
pub use graph::{Graph, PairIndex, ProductKind, Vertex};
