//! Degree class groups (critical groups) and spanning-tree complexity of
//! multigraphs, aimed at the dual graphs of nodal curves.
//!
//! The crate provides:
//!
//! - [`graph`]: multigraphs with loops, parallel edges and genus weights,
//!   plus edge deletion, contraction and wedge sums;
//! - [`linalg`]: exact integer matrices, fraction-free determinants, Smith
//!   normal form with transforms, and element orders in lattice quotients;
//! - [`dcg`]: the intersection (Laplacian) matrix, three independent
//!   spanning-tree counters, and the degree class group;
//! - [`curve_ops`]: blow-up, normalisation and smoothing of nodes, and the
//!   subset-sum complexity formula for iterated blow-ups;
//! - [`families`]: chains of cycles and vine curves with their closed-form
//!   orders and structures;
//! - [`catalog`]: the embedded genus-2 and genus-3 stable graph tables with
//!   recomputation-based verification.
//!
//! All arithmetic is exact; complexity values and invariant factors are
//! arbitrary-precision integers.

pub mod catalog;
pub mod curve_ops;
pub mod dcg;
pub mod families;
pub mod graph;
pub mod linalg;

pub use dcg::{
    complexity_deletion_contraction, complexity_enumeration, complexity_mtt, dcg_report,
    degree_class_group, intersection_matrix, DcgError, DcgReport,
};
pub use graph::{Edge, EdgeId, GraphError, Multigraph};
pub use linalg::{GroupStructure, IntMatrix, SnfResult};
