//! Rectilinear planarity with a fixed plane embedding.
//!
//! 2-connected graphs are handled on the dual tree of their outerplane
//! embedding, with a lower bound on every angle. Graphs with cut vertices are
//! split into blocks whose lower bounds leave room for the rest of the graph
//! at each cut vertex.

mod cut;
mod twocon;
mod values;

pub(crate) use cut::{block_gaps, fill_corners};
pub use twocon::{outer_edge_exists, test_2con_fixed};
pub use values::*;

use thiserror::Error;

use crate::angle::Angle;
use crate::embedding::{outerplane_embedding, Dart, EmbeddingError, PlaneEmbedding, Restriction};
use crate::graph::{block_cut_tree, BlockCutTree, Graph, GraphError, Vertex};
use crate::rectirep::RectilinearRepresentation;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FixedError {
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("graph is not connected")]
    Disconnected,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("internal inconsistency: {0}")]
    Internal(&'static str),
}

impl From<GraphError> for FixedError {
    fn from(_: GraphError) -> Self {
        FixedError::Disconnected
    }
}

/// A lower bound for each angle of an embedding, indexed by in-dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundMap(Vec<Angle>);

impl LowerBoundMap {
    pub fn uniform(e: &PlaneEmbedding, a: Angle) -> Self {
        LowerBoundMap(vec![a; e.dart_count()])
    }

    pub fn from_vec(bounds: Vec<Angle>) -> Self {
        LowerBoundMap(bounds)
    }

    pub fn get(&self, d: Dart) -> Angle {
        self.0[d.0]
    }

    pub fn set(&mut self, d: Dart, a: Angle) {
        self.0[d.0] = a;
    }

    pub fn as_slice(&self) -> &[Angle] {
        &self.0
    }
}

/// How the blocks at a cut vertex look, for degree at most four.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutVertexType {
    /// Only single edges.
    T1,
    /// One 2-connected block and one edge.
    T2,
    /// One 2-connected block and two edges next to each other.
    T3,
    /// One 2-connected block and two edges on different sides of it.
    T4,
    /// Two 2-connected blocks.
    T5,
}

/// Type of cut vertex `c`; `None` if `c` is not a cut vertex or has degree above four.
pub fn classify_cut_vertex(e: &PlaneEmbedding, bct: &BlockCutTree, c: Vertex) -> Option<CutVertexType> {
    if !bct.is_cut_vertex(c) || e.graph().degree(c) > 4 {
        return None;
    }
    let rot = e.rotation(c);
    let trivial = |x: usize| bct.blocks[bct.edge_block[x]].trivial;
    let mut nontrivial: Vec<usize> = rot.iter().filter(|&&x| !trivial(x)).map(|&x| bct.edge_block[x]).collect();
    nontrivial.dedup();
    if nontrivial.len() > 1 && nontrivial.first() == nontrivial.last() {
        nontrivial.pop();
    }
    let singles = rot.iter().filter(|&&x| trivial(x)).count();
    Some(match (nontrivial.len(), singles) {
        (0, _) => CutVertexType::T1,
        (1, 1) => CutVertexType::T2,
        (1, 2) => {
            let deg = rot.len();
            let adjacent = (0..deg).any(|j| trivial(rot[j]) && trivial(rot[(j + 1) % deg]));
            if adjacent {
                CutVertexType::T3
            } else {
                CutVertexType::T4
            }
        }
        _ => CutVertexType::T5,
    })
}

/// A 2-connected block with its embedding and lower bounds.
#[derive(Clone, Debug)]
pub struct BlockInstance {
    pub block: usize,
    pub restriction: Restriction,
    pub bounds: LowerBoundMap,
}

/// Restricts `e` to each non-trivial block and bounds every block angle from
/// below by what the edges of other blocks inside it need.
pub fn build_block_lower_bounds(e: &PlaneEmbedding, bct: &BlockCutTree) -> Result<Vec<BlockInstance>, FixedError> {
    let g = e.graph();
    let mut out = Vec::new();
    for (bi, block) in bct.blocks.iter().enumerate() {
        if block.trivial {
            continue;
        }
        let r = e.restrict(&block.edges)?;
        let local = &r.embedding;
        let mut bounds = LowerBoundMap::uniform(local, Angle::RIGHT);
        for d in 0..local.dart_count() {
            let d = Dart(d);
            let w = local.head(d);
            let le = d.edge();
            let pred = local.cw_pred(w, le);
            let (ow, oe, op) = (r.vertex_map[w], r.edge_map[le], r.edge_map[pred]);
            let deg = g.degree(ow);
            let between = (e.position(ow, oe) + deg - e.position(ow, op)) % deg;
            let others = if between == 0 { deg - 1 } else { between - 1 };
            let q = (1 + others).min(3) as u8;
            bounds.set(d, Angle::from_quarters(q).expect("in range"));
        }
        out.push(BlockInstance { block: bi, restriction: r, bounds });
    }
    Ok(out)
}

/// Decides whether `e` admits a rectilinear representation and builds one.
pub fn test_fixed(e: &PlaneEmbedding) -> Result<Option<RectilinearRepresentation>, FixedError> {
    let g = e.graph();
    if !g.check_degree_bound() {
        return Ok(None);
    }
    if !g.is_connected() {
        return Err(FixedError::Disconnected);
    }
    let mut angles = vec![Angle::ZERO; e.dart_count()];
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(Some(RectilinearRepresentation::new(e.clone(), angles)));
    }
    let bct = block_cut_tree(g)?;
    let instances = build_block_lower_bounds(e, &bct)?;
    let mut reps: Vec<Option<(RectilinearRepresentation, usize)>> = vec![None; bct.blocks.len()];
    for (idx, inst) in instances.iter().enumerate() {
        let Some(rep) = test_2con_fixed(&inst.restriction.embedding, &inst.bounds)? else { return Ok(None) };
        reps[inst.block] = Some((rep, idx));
    }

    for w in 0..n {
        let deg = g.degree(w);
        if deg == 1 {
            let d = e.in_darts(w).next().expect("one in-dart");
            angles[d.0] = Angle::FULL;
            continue;
        }
        if !bct.is_cut_vertex(w) {
            let b = bct.edge_block[g.incident(w)[0]];
            let (rep, idx) = reps[b].as_ref().expect("non-trivial block");
            let r = &instances[*idx].restriction;
            for d in e.in_darts(w) {
                angles[d.0] = rep.angles[local_dart(r, d).0];
            }
            continue;
        }
        let rot = e.rotation(w);
        let gaps = block_gaps(rot, |x| bct.edge_block[x], |p| {
            let x = rot[p];
            match &reps[bct.edge_block[x]] {
                None => 4,
                Some((rep, idx)) => {
                    let d = Dart::leaving(g, x, w).twin();
                    rep.angles[local_dart(&instances[*idx].restriction, d).0].quarters()
                }
            }
        });
        let Some(vals) = fill_corners(deg, &gaps, &[1, 2, 3]) else {
            return Err(FixedError::Internal("cut vertex angles do not fit"));
        };
        for (j, &x) in rot.iter().enumerate() {
            let d = Dart::leaving(g, x, w).twin();
            angles[d.0] = Angle::from_quarters(vals[j]).expect("in range");
        }
    }
    let rep = RectilinearRepresentation::new(e.clone(), angles);
    if !rep.validate() {
        return Err(FixedError::Internal("assembled representation is invalid"));
    }
    Ok(Some(rep))
}

fn local_dart(r: &Restriction, d: Dart) -> Dart {
    Dart(2 * r.local_edge[d.edge()] + (d.0 & 1))
}

/// Decides whether `g` admits an outerplanar rectilinear drawing.
pub fn test_outerplane(g: &Graph) -> Result<Option<RectilinearRepresentation>, FixedError> {
    if !g.is_connected() {
        return Err(FixedError::Disconnected);
    }
    let o = outerplane_embedding(g).map_err(|_| FixedError::NotOuterplanar)?;
    test_fixed(&o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{all_embeddings, enumerate_outerplanar, oracle_fixed, Constraints, DEFAULT_CAP};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn star_center_is_type_one() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let e = outerplane_embedding(&g).unwrap();
        let bct = block_cut_tree(&g).unwrap();
        assert_eq!(classify_cut_vertex(&e, &bct, 0), Some(CutVertexType::T1));
        assert!(test_fixed(&e).unwrap().unwrap().validate());
    }

    #[test]
    fn cut_vertex_types() {
        let sq_pendant = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        let two_squares = graph(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]);
        for (g, t) in [(sq_pendant, CutVertexType::T2), (two_squares, CutVertexType::T5)] {
            let e = outerplane_embedding(&g).unwrap();
            let bct = block_cut_tree(&g).unwrap();
            assert_eq!(classify_cut_vertex(&e, &bct, 0), Some(t));
            assert!(test_fixed(&e).unwrap().is_some());
        }
    }

    #[test]
    fn pendant_raises_the_bound_in_its_face() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        let e = outerplane_embedding(&g).unwrap();
        let bct = block_cut_tree(&g).unwrap();
        let inst = &build_block_lower_bounds(&e, &bct).unwrap()[0];
        let local = &inst.restriction.embedding;
        let c = inst.restriction.local_vertex[0];
        let mut at_c: Vec<u8> = local.in_darts(c).map(|d| inst.bounds.get(d).quarters()).collect();
        at_c.sort_unstable();
        assert_eq!(at_c, vec![1, 2]);
    }

    #[test]
    fn triangle_with_pendant_fails() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        assert_eq!(test_outerplane(&g).unwrap(), None);
    }

    #[test]
    fn agrees_with_oracle_on_small_graphs() {
        for n in 1..=7 {
            for g in enumerate_outerplanar(n) {
                for e in all_embeddings(&g) {
                    let got = test_fixed(&e).unwrap();
                    let want = oracle_fixed(&e, &Constraints::default(), DEFAULT_CAP).unwrap();
                    assert_eq!(got.is_some(), want.feasible, "{:?} outer {}", g.edges(), e.outer_face());
                    if let Some(rep) = got {
                        assert!(rep.validate());
                    }
                }
            }
        }
    }
}
