//! Outerplanarity recognition by peeling degree-2 vertices.

use std::collections::{HashSet, VecDeque};
use std::ops::Deref;

use super::{Dart, EmbeddingError, PlaneEmbedding};
use crate::graph::{block_cut_tree, EdgeId, Graph, GraphError, Vertex};

/// A plane embedding with every vertex on the outer face.
#[derive(Clone, Debug, PartialEq)]
pub struct OuterplaneEmbedding(PlaneEmbedding);

impl OuterplaneEmbedding {
    /// Wraps an embedding after checking that it is outerplane.
    pub fn new(e: PlaneEmbedding) -> Result<Self, EmbeddingError> {
        if e.is_outerplane() {
            Ok(OuterplaneEmbedding(e))
        } else {
            Err(EmbeddingError::NotOuterplanar)
        }
    }

    pub fn into_inner(self) -> PlaneEmbedding {
        self.0
    }
}

impl Deref for OuterplaneEmbedding {
    type Target = PlaneEmbedding;

    fn deref(&self) -> &PlaneEmbedding {
        &self.0
    }
}

/// The outerplane embedding of a connected graph.
pub fn outerplane_embedding(g: &Graph) -> Result<OuterplaneEmbedding, EmbeddingError> {
    let bct = block_cut_tree(g).map_err(|e| match e {
        GraphError::Disconnected => EmbeddingError::DisconnectedSubgraph,
        _ => EmbeddingError::NotOuterplanar,
    })?;
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    let mut outer_dart = None;
    let mut pos = vec![0usize; g.vertex_count()];
    for block in &bct.blocks {
        if block.trivial {
            let e = block.edges[0];
            let (a, b) = g.endpoints(e);
            rotation[a].push(e);
            rotation[b].push(e);
            outer_dart.get_or_insert(Dart(2 * e));
            continue;
        }
        let cycle = boundary_cycle(g, &block.edges)?;
        let n = cycle.len();
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in cycle.iter().enumerate() {
            let mut local: Vec<(usize, EdgeId)> = g
                .incident(v)
                .iter()
                .filter(|&&e| bct.edge_block[e] == bct.edge_block[block.edges[0]])
                .map(|&e| ((pos[g.other(e, v)] + n - i) % n, e))
                .collect();
            local.sort_unstable();
            rotation[v].extend(local.into_iter().map(|(_, e)| e));
        }
        let e01 = g.edge_between(cycle[0], cycle[1]).expect("cycle edge");
        outer_dart.get_or_insert(Dart::leaving(g, e01, cycle[1]));
    }
    let emb = match outer_dart {
        Some(d) => PlaneEmbedding::with_outer_dart(g, rotation, d)?,
        None => PlaneEmbedding::new(g, rotation, 0)?,
    };
    OuterplaneEmbedding::new(emb)
}

/// Hamiltonian boundary cycle of a 2-connected outerplanar block, in the
/// order used for the clockwise outer walk.
pub(crate) fn boundary_cycle(g: &Graph, edges: &[EdgeId]) -> Result<Vec<Vertex>, EmbeddingError> {
    let (local, vmap) = if edges.len() == g.edge_count() {
        (g.clone(), (0..g.vertex_count()).collect())
    } else {
        let (local, vmap, _) = g.edge_subgraph(edges);
        (local, vmap)
    };
    let n = local.vertex_count();
    if n < 3 {
        return Err(EmbeddingError::NotBiconnected);
    }
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let mut present: HashSet<(usize, usize)> = HashSet::with_capacity(2 * local.edge_count());
    present.extend(local.edges().iter().map(|&(a, b)| key(a, b)));
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| local.neighbors(v).collect()).collect();
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 2).collect();
    let mut order: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    let mut left = n;
    while left > 2 {
        let Some(v) = queue.pop_front() else {
            return Err(EmbeddingError::NotOuterplanar);
        };
        if removed[v] || deg[v] != 2 {
            continue;
        }
        let mut nb = adj[v].iter().copied().filter(|&w| !removed[w]);
        let (x, y) = (nb.next().expect("degree 2"), nb.next().expect("degree 2"));
        removed[v] = true;
        left -= 1;
        order.push((v, x, y));
        if present.insert(key(x, y)) {
            adj[x].push(y);
            adj[y].push(x);
        } else {
            deg[x] -= 1;
            deg[y] -= 1;
            for w in [x, y] {
                if deg[w] == 2 {
                    queue.push_back(w);
                }
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let (a, b) = (rest[0], rest[1]);
    let mut next = vec![usize::MAX; n];
    next[a] = b;
    next[b] = a;
    for &(v, x, y) in order.iter().rev() {
        if next[x] == y {
            next[x] = v;
            next[v] = y;
        } else if next[y] == x {
            next[y] = v;
            next[v] = x;
        } else {
            return Err(EmbeddingError::NotOuterplanar);
        }
    }
    let mut cycle = Vec::with_capacity(n);
    let mut v = 0;
    for _ in 0..n {
        cycle.push(v);
        v = next[v];
    }
    if v != 0 {
        return Err(EmbeddingError::NotOuterplanar);
    }
    verify_cycle(&local, &cycle)?;
    Ok(cycle.into_iter().map(|v| vmap[v]).collect())
}

/// Checks that `cycle` uses real edges and that all other edges are nested chords.
fn verify_cycle(g: &Graph, cycle: &[usize]) -> Result<(), EmbeddingError> {
    let n = cycle.len();
    let mut pos = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut on_cycle = vec![false; g.edge_count()];
    for i in 0..n {
        match g.edge_between(cycle[i], cycle[(i + 1) % n]) {
            Some(e) => on_cycle[e] = true,
            None => return Err(EmbeddingError::NotOuterplanar),
        }
    }
    let mut chords: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| !on_cycle[e])
        .map(|(_, &(a, b))| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .collect();
    chords.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (p, q) in chords {
        while stack.last().is_some_and(|t| t.1 <= p) {
            stack.pop();
        }
        if stack.last().is_some_and(|t| q > t.1) {
            return Err(EmbeddingError::NotOuterplanar);
        }
        stack.push((p, q));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_k23_rejected() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(outerplane_embedding(&k4).unwrap_err(), EmbeddingError::NotOuterplanar);
        let k23 = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(outerplane_embedding(&k23).unwrap_err(), EmbeddingError::NotOuterplanar);
    }

    #[test]
    fn chord6_outer_face_is_the_hexagon() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let o = outerplane_embedding(&g).unwrap();
        assert_eq!(o.face_count(), 3);
        assert_eq!(o.face(o.outer_face()).len(), 6);
        let mut inner: Vec<usize> = (0..3).filter(|&f| f != o.outer_face()).map(|f| o.face(f).len()).collect();
        inner.sort();
        assert_eq!(inner, vec![4, 4]);
    }

    #[test]
    fn trees_and_cactus_graphs_are_outerplane() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(outerplane_embedding(&star).unwrap().is_outerplane());
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let o = outerplane_embedding(&bowtie).unwrap();
        assert_eq!(o.face_count(), 3);
    }

    #[test]
    fn crossing_chords_rejected() {
        // hexagon with chords 0-3 and 1-4 is not outerplanar
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        assert!(outerplane_embedding(&g).is_err());
    }
}
