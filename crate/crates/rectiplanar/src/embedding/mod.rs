//! Plane embeddings stored as rotation systems.
//!
//! A dart is a directed copy of an edge: dart `2e` runs from the first endpoint
//! of edge `e` to the second, dart `2e + 1` runs back. Rotations list incident
//! edges clockwise. Each face is the orbit of [`PlaneEmbedding::next`] and lies
//! on the right of its darts, so internal faces are walked clockwise and the
//! outer face counterclockwise.

mod dual;
mod outerplane;

pub use dual::{extended_dual_tree, DualNeighbor, DualTree};
pub use outerplane::{outerplane_embedding, OuterplaneEmbedding};

use crate::graph::{EdgeId, Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    MalformedRotation(Vertex),
    #[error("rotation system is not planar (Euler's formula fails)")]
    NotPlanar,
    #[error("outer face {0} does not exist")]
    NoSuchFace(usize),
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("edge subset does not induce a connected subgraph")]
    DisconnectedSubgraph,
}

/// A directed edge occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    /// The dart of `e` leaving `from`.
    pub fn leaving(g: &Graph, e: EdgeId, from: Vertex) -> Dart {
        let (a, _) = g.endpoints(e);
        Dart(2 * e + usize::from(a != from))
    }

    pub fn edge(self) -> EdgeId {
        self.0 / 2
    }

    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// A connected plane graph: rotation system plus a designated outer face.
#[derive(Clone, Debug)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: Vec<Vec<EdgeId>>,
    /// Position of each dart's edge in the rotation at the dart's tail.
    rot_pos: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    outer: usize,
}

impl PartialEq for PlaneEmbedding {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
            && self.rotation == other.rotation
            && self.face_of[..] == other.face_of[..]
            && self.outer == other.outer
    }
}

/// Face walks of a rotation system; face ids follow the order of their first dart.
pub fn trace_faces(g: &Graph, rotation: &[Vec<EdgeId>]) -> Result<Vec<Vec<Dart>>, EmbeddingError> {
    let rot_pos = rotation_positions(g, rotation)?;
    let (faces, _) = trace(g, rotation, &rot_pos);
    Ok(faces)
}

fn rotation_positions(g: &Graph, rotation: &[Vec<EdgeId>]) -> Result<Vec<usize>, EmbeddingError> {
    if rotation.len() != g.vertex_count() {
        return Err(EmbeddingError::MalformedRotation(rotation.len().min(g.vertex_count())));
    }
    let mut rot_pos = vec![usize::MAX; 2 * g.edge_count()];
    for (v, rot) in rotation.iter().enumerate() {
        if rot.len() != g.degree(v) {
            return Err(EmbeddingError::MalformedRotation(v));
        }
        for (i, &e) in rot.iter().enumerate() {
            if e >= g.edge_count() {
                return Err(EmbeddingError::MalformedRotation(v));
            }
            let (a, b) = g.endpoints(e);
            if a != v && b != v {
                return Err(EmbeddingError::MalformedRotation(v));
            }
            let d = Dart::leaving(g, e, v).0;
            if rot_pos[d] != usize::MAX {
                return Err(EmbeddingError::MalformedRotation(v));
            }
            rot_pos[d] = i;
        }
    }
    Ok(rot_pos)
}

fn trace(g: &Graph, rotation: &[Vec<EdgeId>], rot_pos: &[usize]) -> (Vec<Vec<Dart>>, Vec<usize>) {
    let darts = 2 * g.edge_count();
    let mut face_of = vec![usize::MAX; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = Dart(start);
        loop {
            face_of[d.0] = id;
            walk.push(d);
            d = next_dart(g, rotation, rot_pos, d);
            if d.0 == start {
                break;
            }
        }
        faces.push(walk);
    }
    if g.edge_count() == 0 {
        faces.push(Vec::new());
    }
    (faces, face_of)
}

fn next_dart(g: &Graph, rotation: &[Vec<EdgeId>], rot_pos: &[usize], d: Dart) -> Dart {
    let t = d.twin();
    let v = tail_of(g, t);
    let rot = &rotation[v];
    let i = rot_pos[t.0];
    let e = rot[(i + rot.len() - 1) % rot.len()];
    Dart::leaving(g, e, v)
}

fn tail_of(g: &Graph, d: Dart) -> Vertex {
    let (a, b) = g.endpoints(d.edge());
    if d.0 & 1 == 0 {
        a
    } else {
        b
    }
}

impl PlaneEmbedding {
    /// Builds an embedding of a connected graph with the given outer face id.
    pub fn new(g: &Graph, rotation: Vec<Vec<EdgeId>>, outer: usize) -> Result<Self, EmbeddingError> {
        let rot_pos = rotation_positions(g, &rotation)?;
        let (faces, face_of) = trace(g, &rotation, &rot_pos);
        if g.is_connected()
            && g.vertex_count() + faces.len() != g.edge_count() + 2
            && g.vertex_count() > 0
        {
            return Err(EmbeddingError::NotPlanar);
        }
        if outer >= faces.len() {
            return Err(EmbeddingError::NoSuchFace(outer));
        }
        Ok(PlaneEmbedding { graph: g.clone(), rotation, rot_pos, faces, face_of, outer })
    }

    /// Builds an embedding whose outer face is the face of `outer_dart`.
    pub fn with_outer_dart(g: &Graph, rotation: Vec<Vec<EdgeId>>, outer_dart: Dart) -> Result<Self, EmbeddingError> {
        let mut emb = PlaneEmbedding::new(g, rotation, 0)?;
        if outer_dart.0 >= emb.face_of.len() {
            return Err(EmbeddingError::NoSuchFace(outer_dart.0));
        }
        emb.outer = emb.face_of[outer_dart.0];
        Ok(emb)
    }

    /// The same rotation system with a different outer face.
    pub fn with_outer_face(&self, outer: usize) -> Result<Self, EmbeddingError> {
        if outer >= self.faces.len() {
            return Err(EmbeddingError::NoSuchFace(outer));
        }
        let mut e = self.clone();
        e.outer = outer;
        Ok(e)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: Vertex) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.0]
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    pub fn dart_count(&self) -> usize {
        2 * self.graph.edge_count()
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        tail_of(&self.graph, d)
    }

    pub fn head(&self, d: Dart) -> Vertex {
        tail_of(&self.graph, d.twin())
    }

    /// The dart following `d` on its face.
    pub fn next(&self, d: Dart) -> Dart {
        next_dart(&self.graph, &self.rotation, &self.rot_pos, d)
    }

    /// The dart preceding `d` on its face.
    pub fn prev(&self, d: Dart) -> Dart {
        let v = self.tail(d);
        let rot = &self.rotation[v];
        let i = self.rot_pos[d.0];
        let e = rot[(i + 1) % rot.len()];
        Dart::leaving(&self.graph, e, v).twin()
    }

    /// Index of edge `e` in the rotation at its endpoint `v`.
    pub fn position(&self, v: Vertex, e: EdgeId) -> usize {
        self.rot_pos[Dart::leaving(&self.graph, e, v).0]
    }

    /// The edge after `e` in clockwise order around `v`.
    pub fn cw_next(&self, v: Vertex, e: EdgeId) -> EdgeId {
        let rot = &self.rotation[v];
        rot[(self.position(v, e) + 1) % rot.len()]
    }

    /// The edge before `e` in clockwise order around `v`.
    pub fn cw_pred(&self, v: Vertex, e: EdgeId) -> EdgeId {
        let rot = &self.rotation[v];
        rot[(self.position(v, e) + rot.len() - 1) % rot.len()]
    }

    /// Darts pointing into `v`, in clockwise order of their edges.
    pub fn in_darts(&self, v: Vertex) -> impl Iterator<Item = Dart> + '_ {
        self.rotation[v].iter().map(move |&e| Dart::leaving(&self.graph, e, v).twin())
    }

    /// The outer walk listed in clockwise order.
    pub fn outer_walk_clockwise(&self) -> Vec<Dart> {
        self.faces[self.outer].iter().rev().map(|d| d.twin()).collect()
    }

    /// Vertices of a face walk, one per dart tail.
    pub fn face_vertices(&self, f: usize) -> Vec<Vertex> {
        self.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    /// Whether every vertex lies on the outer face.
    pub fn is_outerplane(&self) -> bool {
        let mut seen = vec![false; self.graph.vertex_count()];
        for &d in &self.faces[self.outer] {
            seen[self.tail(d)] = true;
        }
        self.graph.vertex_count() <= 1 || seen.iter().all(|&s| s)
    }

    /// Mirror image: every rotation reversed, same outer region.
    pub fn reflect(&self) -> PlaneEmbedding {
        let rotation: Vec<Vec<EdgeId>> = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let rot_pos = rotation_positions(&self.graph, &rotation).expect("reversed rotation is valid");
        let (faces, face_of) = trace(&self.graph, &rotation, &rot_pos);
        let outer = match self.faces[self.outer].first() {
            Some(d) => face_of[d.twin().0],
            None => 0,
        };
        PlaneEmbedding { graph: self.graph.clone(), rotation, rot_pos, faces, face_of, outer }
    }

    /// Restriction to the subgraph formed by `sub` (edge ids of this graph).
    pub fn restrict(&self, sub: &[EdgeId]) -> Result<Restriction, EmbeddingError> {
        let (local, vmap, emap) = self.graph.edge_subgraph(sub);
        if !local.is_connected() {
            return Err(EmbeddingError::DisconnectedSubgraph);
        }
        let mut local_edge = vec![usize::MAX; self.graph.edge_count()];
        for (j, &e) in emap.iter().enumerate() {
            local_edge[e] = j;
        }
        let mut local_vertex = vec![usize::MAX; self.graph.vertex_count()];
        for (i, &v) in vmap.iter().enumerate() {
            local_vertex[v] = i;
        }
        let rotation: Vec<Vec<EdgeId>> = vmap
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&e| local_edge[e] != usize::MAX)
                    .map(|&e| local_edge[e])
                    .collect()
            })
            .collect();
        let rot_pos = rotation_positions(&local, &rotation)?;
        let (faces, face_of) = trace(&local, &rotation, &rot_pos);

        let mut uf = UnionFind::new(self.faces.len());
        for e in 0..self.graph.edge_count() {
            if local_edge[e] == usize::MAX {
                uf.union(self.face_of[2 * e], self.face_of[2 * e + 1]);
            }
        }
        let mut class_face = vec![usize::MAX; self.faces.len()];
        for (j, &e) in emap.iter().enumerate() {
            for dir in 0..2 {
                let root = uf.find(self.face_of[2 * e + dir]);
                class_face[root] = face_of[2 * j + dir];
            }
        }
        let face_map: Vec<usize> = (0..self.faces.len()).map(|f| class_face[uf.find(f)]).collect();
        let outer = if local.edge_count() == 0 { 0 } else { face_map[self.outer] };
        let embedding = PlaneEmbedding { graph: local, rotation, rot_pos, faces, face_of, outer };
        Ok(Restriction { embedding, vertex_map: vmap, edge_map: emap, local_vertex, local_edge, face_map })
    }
}

/// Result of [`PlaneEmbedding::restrict`].
#[derive(Clone, Debug)]
pub struct Restriction {
    /// Embedding of the subgraph, with local vertex and edge ids.
    pub embedding: PlaneEmbedding,
    /// Local vertex id to original vertex id.
    pub vertex_map: Vec<Vertex>,
    /// Local edge id to original edge id.
    pub edge_map: Vec<EdgeId>,
    /// Original vertex id to local id, or `usize::MAX`.
    pub local_vertex: Vec<usize>,
    /// Original edge id to local id, or `usize::MAX`.
    pub local_edge: Vec<usize>,
    /// Original face id to the face of the restriction containing it.
    pub face_map: Vec<usize>,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
