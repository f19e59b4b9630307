//! Edge colorings of the complete graph `K_n` in which every copy of a
//! fixed pattern graph `H` sees at least `q` distinct colors.
//!
//! The crate is organised around the function `f(K_n, H, q)`, the least
//! palette size admitting such a coloring:
//!
//! * [`graph`] holds the data model: pattern graphs, colorings of `K_n`,
//!   exhaustive copy enumeration and the on-disk coloring formats.
//! * [`constructions`] builds the explicit colorings (order, round-robin
//!   1-factorization, XOR) and a seeded resampling construction.
//! * [`verifier`] decides whether a coloring is an `(H, q)`-coloring and
//!   reports per-class statistics.
//! * [`witness`] runs the constructive lower-bound procedures and returns
//!   self-certifying witnesses.
//! * [`solver`] computes `f` exactly for small `n`, with an independent
//!   brute-force oracle.
//! * [`bounds`] evaluates thresholds and exponents with exact rationals and
//!   classifies the growth of `f(K_n, P_v, q)`.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod matching;
pub mod rng;
pub mod solver;
pub mod verifier;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{
    copy_stats, edge_index, edge_pair, enumerate_copies, ColorClassView, ColorId, CopyColorStats, Edge,
    EdgeColoring, PatternGraph, PatternKind, SubgraphCopy,
};
