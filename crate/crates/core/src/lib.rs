//! srclab computes, constructs, verifies, and exhaustively validates strong
//! rainbow connection numbers of small graphs.
//!
//! A coloring of a connected graph is strongly rainbow connected when every
//! vertex pair is joined by a shortest path whose edge colors are pairwise
//! distinct; `src(G)` is the fewest colors achieving that, and `rc(G)` the
//! analogue over paths of any length. The crate provides:
//!
//! - [`graph`]: immutable simple graphs, metric and structural primitives,
//!   graph6 I/O, canonical forms;
//! - [`coloring`]: edge colorings and the rainbow verification engine;
//! - [`solver`]: exact `src`/`rc` with certificates via canonical partition
//!   search;
//! - [`constructions`]: the constructive coloring schemes;
//! - [`structure`]: classifiers, triangle packings, line graphs;
//! - [`harness`]: isomorphism-free enumeration and validation campaigns;
//! - [`cli`]: the `srclab` command-line tool.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod exec;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod structure;

pub use coloring::{EdgeColoring, Verdict};
pub use graph::{Graph, GraphError};
pub use solver::{rc_exact, src_exact, Mode, SolveResult};
