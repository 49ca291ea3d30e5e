//! Exact solver toolkit for the {claw, diamond}-free edge deletion problem:
//! given a graph and a budget k, decide whether deleting at most k edges
//! removes every induced claw (K_{1,3}) and diamond (K4 minus an edge).
//!
//! The crate is organized around the pipeline the solver runs:
//!
//! - [`graph`]: immutable simple graphs and the primitive queries.
//! - [`forbidden`]: claw/diamond detection and the greedy edge-disjoint
//!   packing whose vertex set (the modular) drives kernelization.
//! - [`bags`]: the bag decomposition of a {claw, diamond}-free graph and
//!   its classification relative to a modular.
//! - [`kernel`]: the five reduction rules, the trivial-NO shortcut and the
//!   kernel-size audit.
//! - [`solver`]: the bounded search tree: claw 3-way branching plus the
//!   diamond case analysis with its fourteen-pair gadget table.
//! - [`oracle`]: brute-force ground truth, the gadget-table derivation and
//!   the branching-factor recurrence solver.
//! - [`cli`]: file formats, instance generators and the command-line
//!   surface (`solve`, `kernelize`, `check`, `bags`, `oracle`, `gen`,
//!   `bench`).
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run -p cdfree --example solve_instance`.

pub mod bags;
pub mod cli;
pub mod forbidden;
pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod samples;
pub mod scenarios;
pub mod solver;

pub use graph::{Edge, EdgeSet, Graph, VertexId};
