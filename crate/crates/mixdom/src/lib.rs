//! Exact solvers for the mixed dominating set problem on graphs of bounded
//! treewidth.
//!
//! A *mixed dominating set* of a graph `G = (V, E)` is a set `S ⊆ V ∪ E` such
//! that every vertex and every edge is in `S` or adjacent/incident to a member
//! of `S`. The crate provides:
//!
//! * [`graph`]: graphs, mixed neighbourhoods and the domination check;
//! * [`format`]: PACE `.gr` / `.td` readers and writers;
//! * [`treedec`]: tree decompositions, a min-fill heuristic and conversion to
//!   very nice decompositions;
//! * [`amds`]: the nine-state table dynamic program computing `γ_md` and all
//!   minimum mixed dominating sets;
//! * [`mds6`]: a six-state variant whose join step runs through a zeta/Möbius
//!   transform;
//! * [`oracle`]: brute-force ground truth for small graphs;
//! * [`heuristic`]: a greedy upper bound used to prune the table programs.

pub mod amds;
pub mod error;
pub mod format;
pub mod graph;
pub mod heuristic;
pub mod mds6;
pub mod oracle;
pub mod treedec;

pub use error::{Error, Result};
pub use graph::{Graph, MixedElement, MixedSet};
