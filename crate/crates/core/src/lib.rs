//! Exact matching and Laplacian matching polynomials of graphs.
//!
//! The crate computes `M(G, x)`, `LM(G, x)` and their vertex-weighted
//! generalization with integer coefficients, isolates their real roots with
//! Sturm sequences, builds path-trees with their weighted matrices, and runs
//! a suite of checkers for the spectral properties of `LM(G, x)`.

pub mod corpus;
pub mod graph;
pub mod matchpoly;
pub mod pathtree;
pub mod poly;
pub mod spectral;
pub mod verify;

pub use graph::{Edge, Graph, GraphError};
pub use matchpoly::{
    anchored_matching_polynomial, laplacian_matching_polynomial, lm_bruteforce, matching_bruteforce,
    matching_polynomial, HostWeights, MatchPolyError,
};
pub use pathtree::{bethe_tree, PathTree, PathTreeError};
pub use poly::{IntPoly, PolyError, RootSet};
pub use spectral::{char_poly, perron_value, PerronEnclosure, SpectralError, SymIntMatrix};
pub use verify::{CheckConfig, CheckKind, Targets, Verdict, VerificationReport, VerifyError};
