//! Rectilinear planarity when the embedding may be chosen freely.

mod compose;
mod cycle;
mod dio;
mod labels;
mod rooted;

pub use compose::test_variable;
pub use cycle::*;
pub use dio::{dio_feasible, DioInstance, DioSolution};
pub use labels::{all_edge_labels, vertex_labels, vertex_labels_of, EdgeLabels, LabelStats};
pub use rooted::test_2con_rooted;

use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VariableError {
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge {0} is not on the outer face")]
    NotOuterEdge(EdgeId),
    #[error("vertex {0} cannot be constrained: it must exist and have degree 2")]
    InvalidChi(Vertex),
    #[error("internal inconsistency: {0}")]
    Internal(&'static str),
}

/// Degree-2 vertices restricted to 90 and 270 degree angles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChiSet(Vec<Vertex>);

impl ChiSet {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        ChiSet(vertices)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vertex> {
        self.0.iter()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }
}
