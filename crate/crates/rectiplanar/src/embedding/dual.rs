//! Extended dual tree of a 2-connected outerplane embedding.

use super::{Dart, EmbeddingError, PlaneEmbedding};
use crate::graph::{EdgeId, Vertex};

/// What lies across one boundary edge of an internal face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualNeighbor {
    /// Another internal face and the position of the shared edge on its cycle.
    Node { node: usize, position: usize },
    /// An outer edge, i.e. a leaf of the extended dual tree.
    Leaf(EdgeId),
}

/// Internal faces of an outerplane embedding, one node each, with a leaf per
/// outer edge.
#[derive(Clone, Debug)]
pub struct DualTree {
    /// `cycles[s][j]` is the dart from the j-th to the (j+1)-th vertex of face s, clockwise.
    pub cycles: Vec<Vec<Dart>>,
    /// Cycle vertices, `vertices[s][j]` being the tail of `cycles[s][j]`.
    pub vertices: Vec<Vec<Vertex>>,
    /// `neighbors[s][j]` lies across `cycles[s][j]`.
    pub neighbors: Vec<Vec<DualNeighbor>>,
    /// Node of each face of the embedding; `None` for the outer face.
    pub node_of_face: Vec<Option<usize>>,
    /// For every dart on an internal face: (node, position).
    pub slot_of_dart: Vec<(usize, usize)>,
}

impl DualTree {
    pub fn internal_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.neighbors
            .iter()
            .flatten()
            .filter(|n| matches!(n, DualNeighbor::Leaf(_)))
            .count()
    }

    pub fn node_count(&self) -> usize {
        self.internal_count() + self.leaf_count()
    }

    /// Number of tree edges: one per edge of the graph.
    pub fn edge_count(&self) -> usize {
        self.node_count().saturating_sub(1)
    }
}

/// Builds the extended dual tree; the embedding must be outerplane and 2-connected.
pub fn extended_dual_tree(o: &PlaneEmbedding) -> Result<DualTree, EmbeddingError> {
    let g = o.graph();
    if g.vertex_count() < 3 || !o.is_outerplane() {
        return Err(EmbeddingError::NotBiconnected);
    }
    let outer = o.outer_face();
    let outer_len = o.face(outer).len();
    if outer_len != g.vertex_count() {
        return Err(EmbeddingError::NotBiconnected);
    }
    let mut node_of_face = vec![None; o.face_count()];
    let mut cycles = Vec::with_capacity(o.face_count() - 1);
    for (f, walk) in o.faces().iter().enumerate() {
        if f != outer {
            node_of_face[f] = Some(cycles.len());
            cycles.push(walk.clone());
        }
    }
    let mut slot_of_dart = vec![(usize::MAX, usize::MAX); o.dart_count()];
    for (s, cyc) in cycles.iter().enumerate() {
        for (j, &d) in cyc.iter().enumerate() {
            slot_of_dart[d.0] = (s, j);
        }
    }
    let vertices: Vec<Vec<Vertex>> = cycles
        .iter()
        .map(|c| c.iter().map(|&d| o.tail(d)).collect())
        .collect();
    let neighbors: Vec<Vec<DualNeighbor>> = cycles
        .iter()
        .map(|c| {
            c.iter()
                .map(|&d| {
                    let t = d.twin();
                    match node_of_face[o.face_of(t)] {
                        Some(node) => DualNeighbor::Node { node, position: slot_of_dart[t.0].1 },
                        None => DualNeighbor::Leaf(d.edge()),
                    }
                })
                .collect()
        })
        .collect();
    Ok(DualTree { cycles, vertices, neighbors, node_of_face, slot_of_dart })
}
