//! Rooted test for a 2-connected outerplanar graph: an outer edge `uv` must
//! stay on the outer face with prescribed inner angle sums at `u` and `v`.

use crate::angle::{Angle, PairSet};
use crate::embedding::{extended_dual_tree, outerplane_embedding, Dart, DualNeighbor, DualTree, PlaneEmbedding};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::rectirep::RectilinearRepresentation;

use super::cycle::{extend_promising, pair_slot, witnesses_to_set, CycleLayout, Hanging};
use super::{ChiSet, VariableError};

/// Dual tree of the outerplane embedding hung from the leaf of one outer edge.
pub(crate) struct HungTree<'a> {
    pub o: &'a PlaneEmbedding,
    pub dual: &'a DualTree,
    pub root: usize,
    /// Breadth-first order from the root node.
    pub order: Vec<usize>,
    /// Position of the parent edge on each node's cycle.
    pub parent_pos: Vec<usize>,
}

impl<'a> HungTree<'a> {
    pub fn new(o: &'a PlaneEmbedding, dual: &'a DualTree, edge: EdgeId) -> Result<Self, VariableError> {
        let outer = o.outer_face();
        let inner = [Dart(2 * edge), Dart(2 * edge + 1)]
            .into_iter()
            .find(|&d| o.face_of(d) != outer && o.face_of(d.twin()) == outer)
            .ok_or(VariableError::NotOuterEdge(edge))?;
        let (root, pos) = dual.slot_of_dart[inner.0];
        let n = dual.internal_count();
        let mut parent_pos = vec![usize::MAX; n];
        parent_pos[root] = pos;
        let mut order = Vec::with_capacity(n);
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for (j, nb) in dual.neighbors[s].iter().enumerate() {
                if let DualNeighbor::Node { node, position } = *nb {
                    if j != parent_pos[s] {
                        parent_pos[node] = position;
                        order.push(node);
                    }
                }
            }
        }
        Ok(HungTree { o, dual, root, order, parent_pos })
    }

    fn len(&self, s: usize) -> usize {
        self.dual.cycles[s].len()
    }

    /// `u_i` of node `s`.
    pub fn vertex(&self, s: usize, i: usize) -> Vertex {
        self.dual.vertices[s][(self.parent_pos[s] + 1 + i) % self.len(s)]
    }

    /// Cycle position `i` of node `s`, as an index into its cycle.
    fn slot(&self, s: usize, i: usize) -> usize {
        (self.parent_pos[s] + i) % self.len(s)
    }

    fn child(&self, s: usize, i: usize) -> Option<usize> {
        match self.dual.neighbors[s][self.slot(s, i)] {
            DualNeighbor::Node { node, .. } => Some(node),
            DualNeighbor::Leaf(_) => None,
        }
    }

    fn layout(&self, s: usize, up: &[PairSet], chi: &[bool]) -> CycleLayout {
        let k = self.len(s) - 1;
        let hanging = (1..=k)
            .map(|i| self.child(s, i).map_or(Hanging::Trivial, |c| Hanging::NonTrivial(up[c])))
            .collect();
        let chi = (0..=k).map(|i| chi[self.vertex(s, i)]).collect();
        CycleLayout { hanging, chi }
    }
}

pub(crate) fn chi_mask(g: &Graph, chi: &ChiSet) -> Result<Vec<bool>, VariableError> {
    let mut mask = vec![false; g.vertex_count()];
    for &v in chi.iter() {
        if v >= g.vertex_count() || g.degree(v) != 2 {
            return Err(VariableError::InvalidChi(v));
        }
        mask[v] = true;
    }
    Ok(mask)
}

pub(crate) fn outerplane_block(g: &Graph) -> Result<(PlaneEmbedding, DualTree), VariableError> {
    let o = outerplane_embedding(g).map_err(|_| VariableError::NotOuterplanar)?.into_inner();
    let dual = extended_dual_tree(&o).map_err(|_| VariableError::NotBiconnected)?;
    Ok((o, dual))
}

/// Builds a representation of `g` in which `uv` is on the outer face, the
/// vertices of `chi` have only 90 and 270 degree angles, and the inner angles
/// at the first and second endpoint of `uv` sum to `mu` and `nu`.
pub fn test_2con_rooted(
    g: &Graph,
    uv: EdgeId,
    chi: &ChiSet,
    mu: Angle,
    nu: Angle,
) -> Result<Option<RectilinearRepresentation>, VariableError> {
    if g.max_degree() > 4 {
        return Ok(None);
    }
    let mask = chi_mask(g, chi)?;
    let (o, dual) = outerplane_block(g)?;
    rooted_in(&o, &dual, &mask, uv, mu, nu)
}

/// The rooted test on an already built outerplane embedding and dual tree.
pub(crate) fn rooted_in(
    o: &PlaneEmbedding,
    dual: &DualTree,
    chi: &[bool],
    uv: EdgeId,
    mu: Angle,
    nu: Angle,
) -> Result<Option<RectilinearRepresentation>, VariableError> {
    let g = o.graph();
    if uv >= g.edge_count() {
        return Err(VariableError::NotOuterEdge(uv));
    }
    let tree = HungTree::new(o, dual, uv)?;
    let (m, n) = (mu.quarters(), nu.quarters());
    if !(1..=3).contains(&m) || !(1..=3).contains(&n) {
        return Ok(None);
    }
    let target = if g.endpoints(uv).0 == tree.vertex(tree.root, 0) { (m, n) } else { (n, m) };
    Ok(synthesize(&tree, chi, target))
}

/// Bottom-up pair sets, then the embedding and angles top-down.
pub(crate) fn synthesize(tree: &HungTree, chi: &[bool], target: (u8, u8)) -> Option<RectilinearRepresentation> {
    let nodes = tree.dual.internal_count();
    let mut up = vec![PairSet::EMPTY; nodes];
    for &s in tree.order.iter().rev() {
        let layout = tree.layout(s, &up, chi);
        let opt = layout.optimal_sequence()?;
        up[s] = witnesses_to_set(&layout.summarize(&opt).solve());
        if up[s].is_empty() {
            return None;
        }
    }
    if !up[tree.root].has(target.0, target.1) {
        return None;
    }

    let g = tree.o.graph();
    let mut want = vec![(0u8, 0u8); nodes];
    let mut same = vec![true; nodes];
    let mut rho: Vec<Vec<u8>> = vec![Vec::new(); nodes];
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    want[tree.root] = target;
    let root_len = tree.len(tree.root);
    for j in 0..root_len {
        let w = tree.dual.vertices[tree.root][j];
        let out = tree.dual.cycles[tree.root][j].edge();
        let inn = tree.dual.cycles[tree.root][(j + root_len - 1) % root_len].edge();
        rotation[w] = vec![out, inn];
    }
    for &s in &tree.order {
        let layout = tree.layout(s, &up, chi);
        let opt = layout.optimal_sequence().expect("checked bottom-up");
        let (m, n) = want[s];
        let w = layout.summarize(&opt).solve()[pair_slot(m, n)].expect("pair is in the set");
        let (pairs, io, r) = extend_promising(&layout, &opt, &w);
        rho[s] = r;
        for i in 1..=layout.k() {
            let Some(c) = tree.child(s, i) else { continue };
            want[c] = pairs[i];
            let inside = io.inside(i);
            same[c] = same[s] != inside;
            let e = tree.dual.cycles[s][tree.slot(s, i)].edge();
            let lc = tree.len(c);
            let pc = tree.parent_pos[c];
            let x = tree.dual.cycles[c][(pc + 1) % lc].edge();
            let y = tree.dual.cycles[c][(pc + lc - 1) % lc].edge();
            let x_after = inside == same[s];
            insert_next_to(&mut rotation[tree.vertex(s, i - 1)], e, x, x_after);
            insert_next_to(&mut rotation[tree.vertex(s, i)], e, y, !x_after);
            for j in 1..lc - 1 {
                let w = tree.vertex(c, j);
                let slot = tree.slot(c, j + 1);
                rotation[w] = vec![tree.dual.cycles[c][slot].edge(), tree.dual.cycles[c][tree.slot(c, j)].edge()];
            }
        }
    }

    let root_dart = tree.dual.cycles[tree.root][tree.parent_pos[tree.root]];
    let e = PlaneEmbedding::with_outer_dart(g, rotation, root_dart.twin()).ok()?;
    let mut angles: Vec<Option<Angle>> = vec![None; e.dart_count()];
    let mut mark = vec![(usize::MAX, 0usize); g.vertex_count()];
    for s in 0..nodes {
        let k = tree.len(s) - 1;
        for i in 0..=k {
            mark[tree.vertex(s, i)] = (s, i);
        }
        let start = tree.dual.cycles[s][tree.parent_pos[s]];
        let start = if same[s] { start } else { start.twin() };
        for &d in e.face(e.face_of(start)) {
            let (owner, i) = mark[e.head(d)];
            if owner == s {
                angles[d.0] = Angle::from_quarters(rho[s][i]);
            }
        }
    }
    for w in 0..g.vertex_count() {
        let mut open = None;
        let mut sum = 0u8;
        for d in e.in_darts(w) {
            match angles[d.0] {
                Some(a) => sum += a.quarters(),
                None if open.is_none() => open = Some(d),
                None => return None,
            }
        }
        let d = open?;
        angles[d.0] = Some(Angle::from_quarters(4u8.checked_sub(sum)?)?);
    }
    let angles = angles.into_iter().collect::<Option<Vec<_>>>()?;
    let rep = RectilinearRepresentation::new(e, angles);
    debug_assert!(rep.check().is_ok(), "{:?}", rep.check());
    rep.validate().then_some(rep)
}

fn insert_next_to(rot: &mut Vec<EdgeId>, at: EdgeId, x: EdgeId, after: bool) {
    let p = rot.iter().position(|&y| y == at).expect("shared edge is placed");
    rot.insert(if after { p + 1 } else { p }, x);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{chord6, enumerate_outerplanar, oracle_variable, Rooted, DEFAULT_CAP};

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn square_is_a_rectangle() {
        let g = c4();
        let rep = test_2con_rooted(&g, 0, &ChiSet::default(), Angle::RIGHT, Angle::RIGHT).unwrap().unwrap();
        assert!(rep.validate());
        assert!(test_2con_rooted(&g, 0, &ChiSet::default(), Angle::STRAIGHT, Angle::RIGHT).unwrap().is_none());
        let all = ChiSet::new(vec![0, 1, 2, 3]);
        assert!(test_2con_rooted(&g, 2, &all, Angle::RIGHT, Angle::RIGHT).unwrap().is_some());
    }

    #[test]
    fn chord6_has_a_rooted_representation() {
        let g = chord6();
        let e = g.edge_between(1, 2).unwrap();
        let found = (1..4).flat_map(|m| (1..4).map(move |n| (m, n))).any(|(m, n)| {
            let (a, b) = (Angle::from_quarters(m).unwrap(), Angle::from_quarters(n).unwrap());
            test_2con_rooted(&g, e, &ChiSet::default(), a, b).unwrap().is_some()
        });
        assert!(found);
    }

    fn biconnected(n: usize) -> impl Iterator<Item = Graph> {
        enumerate_outerplanar(n).into_iter().filter(|g| {
            let bct = crate::graph::block_cut_tree(g).unwrap();
            bct.blocks.len() == 1 && !bct.blocks[0].trivial
        })
    }

    #[test]
    fn agrees_with_oracle_on_small_blocks() {
        for n in 3..=7 {
            for g in biconnected(n) {
                let o = outerplane_embedding(&g).unwrap();
                let deg2: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) == 2).collect();
                let chis = [vec![], deg2.clone(), deg2.iter().copied().step_by(2).collect()];
                for chi in chis {
                    let cs = ChiSet::new(chi.clone());
                    for uv in 0..g.edge_count() {
                        if ![2 * uv, 2 * uv + 1].iter().any(|&d| o.face_of(Dart(d)) == o.outer_face()) {
                            continue;
                        }
                        for m in 1..4 {
                            for k in 1..4 {
                                let (a, b) = (Angle::from_quarters(m).unwrap(), Angle::from_quarters(k).unwrap());
                                let got = test_2con_rooted(&g, uv, &cs, a, b).unwrap();
                                let want = oracle_variable(&g, &chi, Some(Rooted { edge: uv, mu: a, nu: b }), DEFAULT_CAP).unwrap();
                                assert_eq!(got.is_some(), want.feasible, "{:?} chi {chi:?} edge {uv} ({m},{k})", g.edges());
                                if let Some(rep) = got {
                                    let (u, v) = g.endpoints(uv);
                                    assert_eq!((rep.phi_int(u).unwrap(), rep.phi_int(v).unwrap()), (a, b));
                                    assert!(rep.respects_chi(&chi));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn matches_oracle_on_chord6() {
        let g = chord6();
        let o = outerplane_embedding(&g).unwrap();
        for uv in 0..g.edge_count() {
            let on_outer = [2 * uv, 2 * uv + 1].iter().any(|&d| o.face_of(Dart(d)) == o.outer_face());
            if !on_outer {
                continue;
            }
            for m in 1..4 {
                for n in 1..4 {
                    let (a, b) = (Angle::from_quarters(m).unwrap(), Angle::from_quarters(n).unwrap());
                    let got = test_2con_rooted(&g, uv, &ChiSet::default(), a, b).unwrap();
                    let want = oracle_variable(&g, &[], Some(Rooted { edge: uv, mu: a, nu: b }), DEFAULT_CAP).unwrap();
                    assert_eq!(got.is_some(), want.feasible, "edge {uv} ({m},{n})");
                    if let Some(rep) = got {
                        let (u, v) = g.endpoints(uv);
                        assert_eq!(rep.phi_int(u).unwrap(), a);
                        assert_eq!(rep.phi_int(v).unwrap(), b);
                    }
                }
            }
        }
    }
}
