//! Exact solvers for Graph Motif: given a vertex-colored graph and a
//! multiset of colors, find a connected set of vertices whose colors are
//! exactly that multiset.
//!
//! The solvers are parameterized by structural measures of the input
//! (vertex cover, distance to clique, distance to co-cluster, clique covers,
//! max leaf number) and are cross-checked against an exhaustive oracle.
//! The [`generators`] module builds hard instances from classic NP-hard
//! source problems together with a certificate tying both sides together.

pub mod budget;
pub mod cli;
pub mod combinatorics;
pub mod csct;
pub mod error;
pub mod estimators;
pub mod generators;
pub mod io;
pub mod model;
pub mod sampling;
pub mod solvers;

pub use budget::Budget;
pub use error::{Error, Result};
pub use model::{
    check_solution, connected_components, prune_wrong_colors, verify_solution, Color, Coloring, Graph,
    Instance, Motif, SolveOutcome, Verdict, Vertex, VertexMap,
};
pub use solvers::{solve, Algorithm, SolverConfig};
