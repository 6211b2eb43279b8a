//! Exact matrix theory of oriented hypergraphs.
//!
//! An oriented hypergraph assigns a sign `±1` to every vertex-edge incidence.
//! This crate builds its incidence, adjacency, degree and Laplacian matrices
//! over exact integers, enumerates signed walks and weak walks by brute force,
//! and checks the identities relating the two on concrete instances.

pub mod builders;
pub mod hypergraph;
pub mod io;
pub mod matrix;
pub mod random;
pub mod sign;
pub mod signed_graph;
pub mod verify;
pub mod walk;

pub use builders::{adjacency_matrix, degree_matrix, dual_laplacian, incidence_matrix, laplacian, switching_matrix};
pub use hypergraph::{
    validate, HypergraphBuilder, HypergraphError, Incidence, IncidenceSpec, OrientedHypergraph, SwitchingFunction,
    ValidationReport, Violation,
};
pub use matrix::{LabeledMatrix, MatrixError};
pub use sign::Sign;
pub use signed_graph::{signed_graph_identities, OrientedSignedGraph, SignedGraphError};
pub use walk::{walk_sign, Anchor, AnchorKind, Walk, WalkCounts, WalkEngine, WalkError, WalkLimits};
