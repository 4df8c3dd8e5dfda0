//! Rectilinear planarity testing and drawing for outerplanar graphs.
//!
//! A rectilinear drawing maps vertices to points and edges to horizontal or
//! vertical segments with no bends. This crate decides whether a connected
//! outerplanar graph of maximum degree 4 has a planar one, either with a
//! prescribed plane embedding ([`fixed`]) or with any embedding
//! ([`variable`]), builds the angle assignment when it does, and turns that
//! into integer grid coordinates ([`drawing`]).
//!
//! All angles are integer quarter turns. Every verdict can be cross-checked
//! against the exhaustive search in [`oracle`].

pub mod angle;
pub mod cli;
pub mod drawing;
pub mod embedding;
pub mod fixed;
pub mod graph;
pub mod oracle;
pub mod rectirep;
pub mod variable;

pub use angle::{Angle, AngleSet, PairSet};
pub use embedding::{Dart, OuterplaneEmbedding, PlaneEmbedding};
pub use graph::{Graph, GraphError};
pub use rectirep::RectilinearRepresentation;
