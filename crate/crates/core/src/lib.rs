//! Exact algorithms for the graph parameters of transportation networks:
//! skeleton dimension, three highway dimensions, the classic width
//! parameters, doubling dimension, the gadget constructions witnessing
//! their relationships, a hub-hierarchy metric embedding, and a k-center
//! baseline pair.
//!
//! All parameter computations use exact rational arithmetic; no floating
//! point is involved anywhere a value or comparison matters.

pub mod build;
pub mod embed;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod highway;
pub mod hitting;
pub mod io;
pub mod kcenter;
pub mod params;
pub mod rational;
pub mod skeleton;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, MetricCheck, PathRecord, ShortestPathTree, VertexId, WeightedGraph};
pub use rational::Rat;
