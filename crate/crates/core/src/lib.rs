//! Order-dependent coloring of digraphs.
//!
//! A vertex order colors a digraph under one rule: when the tail of an arc
//! is colored before its head, the two colors differ. The smallest number
//! of colors over all orders is the dichromatic number, which equals the
//! minimum number of classes each inducing an acyclic subdigraph.
//!
//! Modules, bottom up:
//!
//! - [`digraph`], [`coloring`]: the graph and coloring types;
//! - [`chromatic`], [`seq`]: undirected chromatic numbers and per-order
//!   coloring numbers;
//! - [`dichromatic`]: exact dichromatic number, acyclic-set number and
//!   constructive colorings;
//! - [`bounds`], [`partitions`]: bounds and complete partitions;
//! - [`lmatrix`]: labeled-digraph matrices;
//! - [`io`], [`figures`], [`ensemble`], [`random`], [`enumerate`]: plumbing.

pub mod bounds;
pub mod chromatic;
pub mod coloring;
pub mod dichromatic;
pub mod digraph;
pub mod ensemble;
pub mod enumerate;
pub mod error;
pub mod figures;
pub mod io;
pub mod lmatrix;
pub mod partitions;
pub mod random;
pub mod seq;

pub use coloring::{ColorClassPartition, Coloring, Labeling, SequenceColoring, VertexOrder};
pub use digraph::{vertex_name, Acyclicity, Adjacency, Digraph, UndirectedGraph, Vertex};
pub use error::{Error, Result};
pub use lmatrix::{LMatrix, LabeledDigraph};
pub use seq::ScanMode;
