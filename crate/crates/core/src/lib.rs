//! Longest path and longest cycle transversals in chordal graphs.
//!
//! The library recognizes chordal graphs, builds minimal tree
//! representations (clique trees), enumerates longest paths and longest
//! cycles exhaustively at desk scale, solves the Cutter-Chooser game on host
//! trees, and constructs transversals by clique-tree divide and conquer with
//! glue-vertex detours. Every construction can be cross-checked against the
//! brute-force oracles.

pub mod error;
mod flow;
pub mod game;
pub mod generators;
pub mod graph;
pub mod lct;
pub mod leafage;
pub mod lpt;
pub mod oracle;
pub mod rep;
pub mod tree;

mod cut;

pub use error::{Error, Result};
pub use graph::{
    disjoint_set_paths, internally_disjoint_paths, vertex_connectivity, Graph, VertexCycle,
    VertexPath,
};
pub use tree::{helly_point, jordan_separator, leaf_balanced_path, mmf, HostTree, TreePath};
