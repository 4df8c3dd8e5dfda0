//! Pair sets for every outer edge at once, by rerooting the dual tree.
//!
//! Every internal node keeps cyclic totals over its positions (size classes
//! of the optimal pairs, free units per vertex, constrained vertices). The
//! summary seen from any one neighbour is then those totals minus the few
//! positions next to that neighbour, so each outgoing set costs O(1).

use crate::angle::{AngleSet, PairSet};
use crate::embedding::{Dart, DualNeighbor, DualTree, PlaneEmbedding};
use crate::graph::{EdgeId, Graph};

use super::cycle::{optimal_pair, size_class, witnesses_to_set, CycleSummary, Hanging, OptimalPair};
use super::rooted::{chi_mask, outerplane_block};
use super::{ChiSet, VariableError};

/// Work done by one labeling run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LabelStats {
    /// Outgoing pair sets computed, one per (node, neighbour).
    pub sets_computed: usize,
    /// Sets computed a second time; always zero.
    pub recomputed: usize,
    /// Largest number of passes over a single node's cycle.
    pub max_node_passes: u32,
}

/// Pair sets of the outer edges, oriented from the first to the second endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabels {
    labels: Vec<Option<PairSet>>,
    pub stats: LabelStats,
}

impl EdgeLabels {
    /// `None` for chords.
    pub fn get(&self, e: EdgeId) -> Option<PairSet> {
        self.labels[e]
    }

    pub fn outer_edges(&self) -> impl Iterator<Item = (EdgeId, PairSet)> + '_ {
        self.labels.iter().enumerate().filter_map(|(e, l)| l.map(|p| (e, p)))
    }
}

/// Cyclic totals of one node for the current incoming sets.
#[derive(Clone, Debug, Default)]
struct TraversalState {
    opt: Vec<Option<(u8, u8)>>,
    class: Vec<u8>,
    term: Vec<i32>,
    blocked: u32,
    a: u32,
    b: u32,
    c1: u32,
    d: i32,
    chi_total: u32,
}

struct Labeler<'a> {
    dual: &'a DualTree,
    chi: &'a [bool],
    /// Flat offsets of each node's slots.
    offset: Vec<usize>,
    /// Set arriving at each slot from across it; `None` until known.
    incoming: Vec<Option<PairSet>>,
    /// Set leaving through each slot.
    outgoing: Vec<Option<PairSet>>,
    passes: Vec<u32>,
    stats: LabelStats,
}

impl<'a> Labeler<'a> {
    fn new(dual: &'a DualTree, chi: &'a [bool]) -> Self {
        let mut offset = Vec::with_capacity(dual.internal_count() + 1);
        let mut total = 0;
        for c in &dual.cycles {
            offset.push(total);
            total += c.len();
        }
        offset.push(total);
        Labeler {
            dual,
            chi,
            offset,
            incoming: vec![None; total],
            outgoing: vec![None; total],
            passes: vec![0; dual.internal_count()],
            stats: LabelStats::default(),
        }
    }

    fn hanging(&self, s: usize, j: usize) -> Hanging {
        match self.dual.neighbors[s][j] {
            DualNeighbor::Leaf(_) => Hanging::Trivial,
            DualNeighbor::Node { .. } => Hanging::NonTrivial(self.incoming[self.offset[s] + j].unwrap_or(PairSet::EMPTY)),
        }
    }

    fn state(&mut self, s: usize) -> TraversalState {
        self.passes[s] += 1;
        let len = self.dual.cycles[s].len();
        let hang: Vec<Hanging> = (0..len).map(|j| self.hanging(s, j)).collect();
        let mut st = TraversalState {
            opt: vec![None; len],
            class: vec![0; len],
            term: vec![0; len],
            ..Default::default()
        };
        for j in 0..len {
            let prev = hang[(j + len - 1) % len].is_trivial();
            let next = hang[(j + 1) % len].is_trivial();
            match optimal_pair(prev, hang[j], next) {
                OptimalPair::Pair(m, n) => {
                    st.opt[j] = Some((m, n));
                    st.class[j] = size_class(!hang[j].is_trivial(), (m, n)).unwrap_or(0);
                    match st.class[j] {
                        4 => st.a += 1,
                        3 => st.b += 1,
                        2 => st.c1 += 1,
                        _ => {}
                    }
                }
                OptimalPair::NoRepresentation => st.blocked += 1,
            }
        }
        for x in 0..len {
            let v = self.dual.vertices[s][x];
            if self.chi[v] {
                st.chi_total += 1;
                continue;
            }
            let before = st.opt[(x + len - 1) % len].map_or(0, |p| p.1);
            let after = st.opt[x].map_or(0, |p| p.0);
            st.term[x] = 2 - i32::from(before) - i32::from(after);
            st.d += st.term[x];
        }
        st
    }

    /// Set of the side of `s` away from slot `p`.
    fn outgoing_set(&self, s: usize, p: usize, st: &TraversalState) -> PairSet {
        let len = st.opt.len();
        let k = len - 1;
        let at = |r: usize| (p + r) % len;
        let chi_at = |x: usize| self.chi[self.dual.vertices[s][x]];
        let ends = [self.hanging(s, at(1)), self.hanging(s, at(k))];
        let (u0, uk) = (at(1), p);
        let mut sum = CycleSummary {
            k,
            ends,
            chi_ends: [chi_at(u0), chi_at(uk)],
            chi_next: [chi_at(at(2)), chi_at(at(k))],
            a: 0,
            b: 0,
            c1: 0,
            c2: st.chi_total - u32::from(chi_at(u0)) - u32::from(chi_at(uk)),
            d_mid: 0,
            mu2: 0,
            nu_km1: 0,
        };
        if k >= 3 {
            let near = [at(k), p, at(1)];
            let blocked_near = near.iter().filter(|&&j| st.opt[j].is_none()).count() as u32;
            if st.blocked > blocked_near {
                return PairSet::EMPTY;
            }
            let count = |c: u8| near.iter().filter(|&&j| st.class[j] == c).count() as u32;
            sum.a = st.a - count(4);
            sum.b = st.b - count(3);
            sum.c1 = st.c1 - count(2);
            // u_k, u_0, u_1 and u_{k-1}
            let mut edge_vertices = vec![p, at(1), at(2), at(k)];
            edge_vertices.sort_unstable();
            edge_vertices.dedup();
            let d = st.d - edge_vertices.iter().map(|&x| st.term[x]).sum::<i32>();
            sum.d_mid = u32::try_from(d).expect("middle units are nonnegative");
            sum.mu2 = st.opt[at(2)].expect("middle pair").0;
            sum.nu_km1 = st.opt[at(k - 1)].expect("middle pair").1;
        }
        witnesses_to_set(&sum.solve())
    }

    fn emit(&mut self, s: usize, p: usize, set: PairSet) {
        let slot = self.offset[s] + p;
        if self.outgoing[slot].is_some() {
            self.stats.recomputed += 1;
        }
        self.stats.sets_computed += 1;
        self.outgoing[slot] = Some(set);
        if let DualNeighbor::Node { node, position } = self.dual.neighbors[s][p] {
            self.incoming[self.offset[node] + position] = Some(set);
        }
    }

    fn run(&mut self) {
        let nodes = self.dual.internal_count();
        if nodes == 0 {
            return;
        }
        let mut parent_slot = vec![usize::MAX; nodes];
        let mut order = vec![0];
        let mut seen = vec![false; nodes];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for nb in &self.dual.neighbors[s] {
                if let DualNeighbor::Node { node, position } = *nb {
                    if !seen[node] {
                        seen[node] = true;
                        parent_slot[node] = position;
                        order.push(node);
                    }
                }
            }
        }
        for &s in order.iter().skip(1).rev() {
            let st = self.state(s);
            let set = self.outgoing_set(s, parent_slot[s], &st);
            self.emit(s, parent_slot[s], set);
        }
        for &s in &order {
            let st = self.state(s);
            for p in 0..st.opt.len() {
                if p != parent_slot[s] {
                    let set = self.outgoing_set(s, p, &st);
                    self.emit(s, p, set);
                }
            }
        }
        self.stats.max_node_passes = self.passes.iter().copied().max().unwrap_or(0);
    }
}

/// For every outer edge, the pairs of inner angle sums its endpoints can
/// take in a representation keeping it on the outer face.
pub fn all_edge_labels(g: &Graph, chi: &ChiSet) -> Result<EdgeLabels, VariableError> {
    let mask = chi_mask(g, chi)?;
    let (o, dual) = outerplane_block(g)?;
    Ok(labels_in(&o, &dual, &mask))
}

pub(crate) fn labels_in(o: &PlaneEmbedding, dual: &DualTree, mask: &[bool]) -> EdgeLabels {
    let g = o.graph();
    let mut labels = vec![None; g.edge_count()];
    let mut lab = Labeler::new(dual, mask);
    if g.max_degree() <= 4 {
        lab.run();
    }
    for s in 0..dual.internal_count() {
        let len = dual.cycles[s].len();
        for (p, nb) in dual.neighbors[s].iter().enumerate() {
            let DualNeighbor::Leaf(e) = *nb else { continue };
            let set = lab.outgoing[lab.offset[s] + p].unwrap_or(PairSet::EMPTY);
            let u0 = dual.vertices[s][(p + 1) % len];
            labels[e] = Some(if g.endpoints(e).0 == u0 { set } else { set.swapped() });
        }
    }
    debug_assert!(labels.iter().enumerate().all(|(e, l)| {
        let outer = o.face_of(Dart(2 * e)) == o.outer_face() || o.face_of(Dart(2 * e + 1)) == o.outer_face();
        l.is_some() == outer
    }));
    EdgeLabels { labels, stats: lab.stats }
}

/// Inner angle sums each vertex of degree at most 3 can take on the outer face.
pub fn vertex_labels(g: &Graph, labels: &EdgeLabels) -> Vec<Option<AngleSet>> {
    let mut out: Vec<Option<AngleSet>> = (0..g.vertex_count()).map(|v| (g.degree(v) <= 3).then_some(AngleSet::EMPTY)).collect();
    for (e, set) in labels.outer_edges() {
        let (u, v) = g.endpoints(e);
        if let Some(x) = out[u].as_mut() {
            *x = x.union(set.first_components());
        }
        if let Some(x) = out[v].as_mut() {
            *x = x.union(set.swapped().first_components());
        }
    }
    out
}

/// Shorthand for [`vertex_labels`] over freshly computed edge labels.
pub fn vertex_labels_of(g: &Graph, chi: &ChiSet) -> Result<Vec<Option<AngleSet>>, VariableError> {
    Ok(vertex_labels(g, &all_edge_labels(g, chi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;
    use crate::oracle::{chord6, enumerate_outerplanar, ladder, oracle_variable, Rooted, DEFAULT_CAP};

    fn degree2(g: &Graph) -> Vec<crate::graph::Vertex> {
        (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect()
    }
    use crate::variable::test_2con_rooted;

    fn biconnected(n: usize) -> impl Iterator<Item = Graph> {
        enumerate_outerplanar(n).into_iter().filter(|g| {
            let bct = crate::graph::block_cut_tree(g).unwrap();
            bct.blocks.len() == 1 && !bct.blocks[0].trivial
        })
    }

    #[test]
    fn square_labels() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let l = all_edge_labels(&g, &ChiSet::default()).unwrap();
        assert_eq!(l.outer_edges().count(), 4);
        assert!(l.outer_edges().all(|(_, p)| p == PairSet::from_bits(1)));
        let gamma = vertex_labels(&g, &l);
        assert!(gamma.iter().all(|x| *x == Some(AngleSet::single(Angle::RIGHT))));
    }

    #[test]
    fn triangle_face_empties_everything() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)]).unwrap();
        let l = all_edge_labels(&g, &ChiSet::default()).unwrap();
        assert!(l.outer_edges().all(|(_, p)| p.is_empty()));
        assert!(vertex_labels(&g, &l).iter().flatten().all(|x| x.is_empty()));
    }

    #[test]
    fn ladder_labels() {
        let g = ladder(3);
        let l = all_edge_labels(&g, &ChiSet::default()).unwrap();
        // 10 edges, the two inner rungs are chords
        assert_eq!(l.outer_edges().count(), 8);
        assert_eq!(l.get(g.edge_between(1, 5).unwrap()), None);
        let rung = g.edge_between(0, 4).unwrap();
        assert!(l.get(rung).unwrap().has(1, 1));
        assert_eq!(l.stats.recomputed, 0);
        assert!(l.stats.max_node_passes <= 2);
        assert!(vertex_labels_of(&ladder(2), &ChiSet::default()).unwrap()[0].unwrap().contains(Angle::RIGHT));
    }

    #[test]
    fn each_set_is_computed_once() {
        let g = chord6();
        let l = all_edge_labels(&g, &ChiSet::default()).unwrap();
        // 6 leaves plus both directions of the chord
        assert_eq!(l.stats.sets_computed, 8);
        assert_eq!(l.stats.recomputed, 0);
    }

    #[test]
    fn labels_match_rooted_test_and_oracle() {
        for n in 3..=7 {
            for g in biconnected(n) {
                let deg2 = degree2(&g);
                for chi in [vec![], deg2.clone(), deg2.iter().copied().step_by(2).collect()] {
                    let cs = ChiSet::new(chi.clone());
                    let l = all_edge_labels(&g, &cs).unwrap();
                    for (e, set) in l.outer_edges() {
                        for m in 1..4 {
                            for k in 1..4 {
                                let (a, b) = (Angle::from_quarters(m).unwrap(), Angle::from_quarters(k).unwrap());
                                let rooted = test_2con_rooted(&g, e, &cs, a, b).unwrap();
                                assert_eq!(set.has(m, k), rooted.is_some(), "{:?} chi {chi:?} edge {e}", g.edges());
                                if n <= 6 {
                                    let want = oracle_variable(&g, &chi, Some(Rooted { edge: e, mu: a, nu: b }), DEFAULT_CAP).unwrap();
                                    assert_eq!(set.has(m, k), want.feasible);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
