//! H-Hamiltonian spectra of small graphs.
//!
//! For graphs `G` and `H` on the same number of vertices, a pseudoordering is
//! a bijection `f: V(H) -> V(G)` and its sum adds up the `G`-distances between
//! the images of every edge of `H`. This crate computes the full spectrum of
//! such sums and its extremes, the classical Hamiltonian and traceable
//! numbers as the special cases `H = C_n` and `H = P_{n-1}`, the tree surgery
//! that turns any tree into a path without lowering the sum, and exhaustive
//! checks of the resulting extremal statements on small graph families.

pub mod distance;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod pseudoordering;
pub mod transform;
pub mod verify;

pub use distance::DistanceMatrix;
pub use error::{Error, Result};
pub use graph::{Graph, Shape, Vertex, VertexSet};
pub use pseudoordering::{
    pseudo_sum, ExtremalQuery, Extremum, Method, Pseudoordering, SearchConfig, Sense,
    SpectrumReport,
};
