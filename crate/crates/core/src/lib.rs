//! Dominating sets of graphs that exclude `K*_k`, `S*_ℓ` and `P_m` as induced
//! subgraphs.
//!
//! A connected graph with none of these three induced subgraphs has
//! domination number at most `1 + Σ_{i=2}^{m-2} f_{k,ℓ}(i)`, where `f` is
//! built from Ramsey numbers. This crate computes those bounds, builds a
//! dominating set that meets them layer by layer around a root, extracts an
//! induced `K*_k` or `S*_ℓ` from any layer that breaks them, and provides the
//! exact tools (domination number, induced containment, graph6 I/O, small
//! graph corpora) to check all of it.

pub mod bounds;
pub mod construct;
pub mod corpus;
pub mod domination;
pub mod format;
pub mod generators;
pub mod graph;
pub mod ramsey;
mod serde_big;
pub mod subgraph;
pub mod verify;
pub mod witness;

pub use graph::{Graph, GraphError, LayerDecomposition, VertexSet};
