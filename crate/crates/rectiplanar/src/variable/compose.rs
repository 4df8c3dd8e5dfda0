//! Graphs with cut vertices: blocks are tested separately and glued at the
//! cut vertices, with the block-cut-vertex tree rerooted once.

use crate::angle::{Angle, AngleSet};
use crate::embedding::{Dart, DualTree, PlaneEmbedding};
use crate::fixed::{block_gaps, fill_corners};
use crate::graph::{block_cut_tree, BlockCutTree, EdgeId, Graph, Vertex};
use crate::rectirep::RectilinearRepresentation;

use super::labels::{labels_in, vertex_labels, EdgeLabels};
use super::rooted::{outerplane_block, rooted_in};
use super::VariableError;

/// A non-trivial block with everything the tests need, in local ids.
struct BlockData {
    o: PlaneEmbedding,
    dual: DualTree,
    /// Global id of each local vertex, increasing.
    vmap: Vec<Vertex>,
    /// Global id of each local edge.
    emap: Vec<EdgeId>,
    chi: Vec<bool>,
    labels: EdgeLabels,
    gamma: Vec<Option<AngleSet>>,
}

impl BlockData {
    fn local(&self, v: Vertex) -> usize {
        self.vmap.binary_search(&v).expect("vertex of the block")
    }

    fn has_representation(&self) -> bool {
        self.labels.outer_edges().any(|(_, p)| !p.is_empty())
    }

    fn global_dart(&self, d: Dart) -> Dart {
        Dart(2 * self.emap[d.edge()] + (d.0 & 1))
    }
}

/// Rerooting state over the block-cut-vertex tree.
///
/// Tree edge `t` joins block `bct.tree_edges[t].0` and cut vertex index
/// `bct.tree_edges[t].1`; `out[t]` is the set of inner angle sums at the cut
/// vertex of the side holding the block.
struct BlockTraversalState {
    out: Vec<Option<AngleSet>>,
    /// Tree edges at each block and at each cut vertex.
    at_block: Vec<Vec<usize>>,
    at_cut: Vec<Vec<usize>>,
    /// Number of unfriendly cut vertices of each block, once known.
    unfriendly: Vec<u32>,
}

/// Largest inner angle sum a side may have at a cut vertex shared with a block.
fn threshold(trivial: bool) -> u8 {
    if trivial {
        2
    } else {
        1
    }
}

struct Analysis<'a> {
    g: &'a Graph,
    bct: BlockCutTree,
    data: Vec<Option<BlockData>>,
    state: BlockTraversalState,
}

impl<'a> Analysis<'a> {
    fn new(g: &'a Graph) -> Result<Self, VariableError> {
        let bct = block_cut_tree(g).map_err(|_| VariableError::Disconnected)?;
        let nb = bct.blocks.len();
        let mut at_block = vec![Vec::new(); nb];
        let mut at_cut = vec![Vec::new(); bct.cut_vertices.len()];
        for (t, &(b, c)) in bct.tree_edges.iter().enumerate() {
            at_block[b].push(t);
            at_cut[c].push(t);
        }
        let mut chi_cut = vec![false; bct.cut_vertices.len()];
        for (c, ts) in at_cut.iter().enumerate() {
            chi_cut[c] = ts.iter().filter(|&&t| !bct.blocks[bct.tree_edges[t].0].trivial).count() >= 2;
        }
        let mut data = Vec::with_capacity(nb);
        for (b, block) in bct.blocks.iter().enumerate() {
            if block.trivial {
                data.push(None);
                continue;
            }
            let (sub, vmap, emap) = if nb == 1 {
                (g.clone(), (0..g.vertex_count()).collect(), (0..g.edge_count()).collect())
            } else {
                g.edge_subgraph(&block.edges)
            };
            let (o, dual) = outerplane_block(&sub)?;
            let mut chi = vec![false; sub.vertex_count()];
            for &t in &at_block[b] {
                let c = bct.tree_edges[t].1;
                if chi_cut[c] {
                    let v = bct.cut_vertices[c];
                    chi[vmap.binary_search(&v).expect("cut vertex of the block")] = true;
                }
            }
            let labels = labels_in(&o, &dual, &chi);
            let gamma = vertex_labels(&sub, &labels);
            data.push(Some(BlockData { o, dual, vmap, emap, chi, labels, gamma }));
        }
        let state = BlockTraversalState {
            out: vec![None; bct.tree_edges.len()],
            at_block,
            at_cut,
            unfriendly: vec![0; nb],
        };
        Ok(Analysis { g, bct, data, state })
    }

    fn trivial(&self, b: usize) -> bool {
        self.bct.blocks[b].trivial
    }

    /// Inner angle sums of block `b` alone at its cut vertex `c`.
    fn gamma(&self, b: usize, c: usize) -> AngleSet {
        match &self.data[b] {
            None => AngleSet::single(Angle::ZERO),
            Some(d) => d.gamma[d.local(self.bct.cut_vertices[c])].unwrap_or(AngleSet::EMPTY),
        }
    }

    /// Whether the cut vertex of tree edge `t` is a friendly neighbour of its block.
    fn friendly(&self, t: usize) -> bool {
        let (b, c) = self.bct.tree_edges[t];
        let limit = threshold(self.trivial(b));
        self.state.at_cut[c].iter().filter(|&&u| u != t).all(|&u| {
            let set = self.state.out[u].expect("computed before use");
            set.min().is_some_and(|a| a.quarters() <= limit)
        })
    }

    fn outgoing(&self, t: usize, unfriendly_elsewhere: u32) -> AngleSet {
        let (b, c) = self.bct.tree_edges[t];
        if unfriendly_elsewhere > 0 {
            AngleSet::EMPTY
        } else {
            self.gamma(b, c)
        }
    }

    fn run(&mut self) {
        let nb = self.bct.blocks.len();
        let mut parent = vec![usize::MAX; nb];
        let mut order = vec![0];
        let mut seen = vec![false; nb];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let b = order[head];
            head += 1;
            for &t in &self.state.at_block[b] {
                if t == parent[b] {
                    continue;
                }
                let c = self.bct.tree_edges[t].1;
                for &u in &self.state.at_cut[c] {
                    let b2 = self.bct.tree_edges[u].0;
                    if !seen[b2] {
                        seen[b2] = true;
                        parent[b2] = u;
                        order.push(b2);
                    }
                }
            }
        }
        for &b in order.iter().skip(1).rev() {
            let bad = self.state.at_block[b].iter().filter(|&&t| t != parent[b] && !self.friendly(t)).count() as u32;
            self.state.out[parent[b]] = Some(self.outgoing(parent[b], bad));
        }
        for &b in &order {
            let flags: Vec<(usize, bool)> = self.state.at_block[b].iter().map(|&t| (t, self.friendly(t))).collect();
            let bad = flags.iter().filter(|f| !f.1).count() as u32;
            self.state.unfriendly[b] = bad;
            for (t, ok) in flags {
                if t != parent[b] {
                    self.state.out[t] = Some(self.outgoing(t, bad - u32::from(!ok)));
                }
            }
        }
    }

    /// A block all of whose cut vertices are friendly and that has a
    /// representation of its own.
    fn central_block(&self) -> Option<usize> {
        (0..self.bct.blocks.len())
            .find(|&b| self.state.unfriendly[b] == 0 && self.data[b].as_ref().is_none_or(|d| d.has_representation()))
    }

    /// Representation of a non-trivial block with inner angle sum `mu` at `v`.
    fn block_rep(&self, b: usize, v: Option<(Vertex, u8)>) -> Result<RectilinearRepresentation, VariableError> {
        let d = self.data[b].as_ref().expect("non-trivial block");
        let g = d.o.graph();
        let pick = d.labels.outer_edges().find_map(|(e, set)| {
            let (x, y) = g.endpoints(e);
            set.iter().find_map(|(m, n)| {
                let (m, n) = (m.quarters(), n.quarters());
                match v {
                    None => Some((e, m, n)),
                    Some((w, mu)) => {
                        let w = d.local(w);
                        ((x == w && m == mu) || (y == w && n == mu)).then_some((e, m, n))
                    }
                }
            })
        });
        let (e, m, n) = pick.ok_or(VariableError::Internal("label without a matching outer edge"))?;
        let q = |x| Angle::from_quarters(x).expect("label angle");
        rooted_in(&d.o, &d.dual, &d.chi, e, q(m), q(n))?.ok_or(VariableError::Internal("label not realized"))
    }

    fn build(&self, root: usize) -> Result<RectilinearRepresentation, VariableError> {
        let g = self.g;
        let nb = self.bct.blocks.len();
        let mut reps: Vec<Option<RectilinearRepresentation>> = vec![None; nb];
        // tree edge towards the central block, for every other block
        let mut parent = vec![usize::MAX; nb];
        let mut parent_block_of_cut = vec![usize::MAX; self.bct.cut_vertices.len()];
        if !self.trivial(root) {
            reps[root] = Some(self.block_rep(root, None)?);
        }
        let mut order = vec![root];
        let mut head = 0;
        while head < order.len() {
            let b = order[head];
            head += 1;
            let limit = threshold(self.trivial(b));
            for &t in &self.state.at_block[b] {
                if t == parent[b] {
                    continue;
                }
                let c = self.bct.tree_edges[t].1;
                parent_block_of_cut[c] = b;
                for &u in &self.state.at_cut[c] {
                    let b2 = self.bct.tree_edges[u].0;
                    if b2 == b {
                        continue;
                    }
                    parent[b2] = u;
                    order.push(b2);
                    let mu = self.state.out[u]
                        .and_then(|s| s.min())
                        .map(Angle::quarters)
                        .filter(|&m| m <= limit)
                        .ok_or(VariableError::Internal("unfriendly cut vertex below the central block"))?;
                    if !self.trivial(b2) {
                        reps[b2] = Some(self.block_rep(b2, Some((self.bct.cut_vertices[c], mu)))?);
                    }
                }
            }
        }

        let n = g.vertex_count();
        let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        let mut angles = vec![Angle::ZERO; 2 * g.edge_count()];
        let mut is_cut = vec![false; n];
        for &v in &self.bct.cut_vertices {
            is_cut[v] = true;
        }
        for (b, rep) in reps.iter().enumerate() {
            let Some(rep) = rep else { continue };
            let d = self.data[b].as_ref().expect("non-trivial block");
            for (lw, &w) in d.vmap.iter().enumerate() {
                if is_cut[w] {
                    continue;
                }
                rotation[w] = rep.embedding.rotation(lw).iter().map(|&x| d.emap[x]).collect();
                for ld in rep.embedding.in_darts(lw) {
                    angles[d.global_dart(ld).0] = rep.angle(ld);
                }
            }
        }
        for w in 0..n {
            if g.degree(w) == 1 && !is_cut[w] {
                rotation[w] = g.incident(w).to_vec();
                angles[Dart::leaving(g, g.incident(w)[0], w).twin().0] = Angle::FULL;
            }
        }
        for (c, &v) in self.bct.cut_vertices.iter().enumerate() {
            let (rot, vals) = self.arrange_cut(c, parent_block_of_cut[c], &reps)?;
            for (j, &x) in rot.iter().enumerate() {
                angles[Dart::leaving(g, x, v).twin().0] = Angle::from_quarters(vals[j]).expect("corner value");
            }
            rotation[v] = rot;
        }

        let outer_dart = match &reps[root] {
            None => Dart(2 * self.bct.blocks[root].edges[0]),
            Some(rep) => {
                let d = self.data[root].as_ref().expect("non-trivial block");
                d.global_dart(rep.embedding.face(rep.embedding.outer_face())[0])
            }
        };
        let e = PlaneEmbedding::with_outer_dart(g, rotation, outer_dart)
            .map_err(|_| VariableError::Internal("assembled rotation is not plane"))?;
        let rep = RectilinearRepresentation::new(e, angles);
        match rep.check() {
            Ok(()) => Ok(rep),
            Err(_) => Err(VariableError::Internal("assembled representation is invalid")),
        }
    }

    /// Cyclic order and corner values at cut vertex `c`, with the block on the
    /// central side (`up`) keeping its outer face and every other block seeing
    /// the rest of the graph in its own outer corner.
    fn arrange_cut(
        &self,
        c: usize,
        up: usize,
        reps: &[Option<RectilinearRepresentation>],
    ) -> Result<(Vec<EdgeId>, Vec<u8>), VariableError> {
        let g = self.g;
        let v = self.bct.cut_vertices[c];
        let edges = g.incident(v);
        let block_of = |x: EdgeId| self.bct.edge_block[x];
        // per incident edge: the block's angle ending at it and whether that corner is outer
        let mut corner = vec![(4u8, true); edges.len()];
        let mut local_order: Vec<(usize, Vec<EdgeId>)> = Vec::new();
        for &t in &self.state.at_cut[c] {
            let b = self.bct.tree_edges[t].0;
            let Some(rep) = &reps[b] else { continue };
            let d = self.data[b].as_ref().expect("non-trivial block");
            let lv = d.local(v);
            let order: Vec<EdgeId> = rep.embedding.rotation(lv).iter().map(|&x| d.emap[x]).collect();
            for ld in rep.embedding.in_darts(lv) {
                let x = d.emap[ld.edge()];
                let at = edges.iter().position(|&y| y == x).expect("incident edge");
                corner[at] = (rep.angle(ld).quarters(), rep.embedding.face_of(ld) == rep.embedding.outer_face());
            }
            local_order.push((b, order));
        }
        let angle_of = |x: EdgeId| corner[edges.iter().position(|&y| y == x).expect("incident edge")];

        let mut rot = edges.to_vec();
        let first = rot[0];
        let rest = &mut rot[1..];
        let mut found = None;
        permute(rest, 0, &mut |rest| {
            if found.is_some() {
                return;
            }
            let mut cand = vec![first];
            cand.extend_from_slice(rest);
            let deg = cand.len();
            let pos = |x: EdgeId| cand.iter().position(|&y| y == x).expect("placed");
            let keeps_order = local_order.iter().all(|(_, order)| {
                let p: Vec<usize> = order.iter().map(|&x| pos(x)).collect();
                let start = (0..p.len()).min_by_key(|&i| p[i]).expect("nonempty");
                (1..p.len()).all(|i| p[(start + i) % p.len()] > p[(start + i - 1) % p.len()])
            });
            if !keeps_order {
                return;
            }
            // blocks other than `up` must hold everything else in their outer corner
            let nested = cand.iter().enumerate().all(|(j, &x)| {
                let b = block_of(x);
                if b == up || !angle_of(x).1 {
                    return true;
                }
                let mut i = (j + deg - 1) % deg;
                let mut others = 0;
                while block_of(cand[i]) != b {
                    others += 1;
                    i = (i + deg - 1) % deg;
                }
                others == (0..deg).filter(|&y| block_of(cand[y]) != b).count()
            });
            if !nested {
                return;
            }
            let gaps = block_gaps(&cand, block_of, |p| angle_of(cand[p]).0);
            if let Some(vals) = fill_corners(deg, &gaps, &[1, 2, 3]) {
                found = Some((cand, vals));
            }
        });
        found.ok_or(VariableError::Internal("no arrangement at a cut vertex"))
    }
}

fn permute(a: &mut [EdgeId], k: usize, f: &mut impl FnMut(&[EdgeId])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Decides whether a connected outerplanar graph of maximum degree 4 admits
/// a planar rectilinear drawing, over all its plane embeddings, and builds a
/// representation of one.
pub fn test_variable(g: &Graph) -> Result<Option<RectilinearRepresentation>, VariableError> {
    if !g.is_connected() {
        return Err(VariableError::Disconnected);
    }
    if g.edge_count() == 0 {
        let e = PlaneEmbedding::new(g, vec![Vec::new(); g.vertex_count()], 0).map_err(|_| VariableError::NotOuterplanar)?;
        return Ok(Some(RectilinearRepresentation::new(e, Vec::new())));
    }
    if g.max_degree() > 4 {
        return Ok(None);
    }
    let mut an = Analysis::new(g)?;
    an.run();
    match an.central_block() {
        None => Ok(None),
        Some(b) => an.build(b).map(Some),
    }
}
