//! Fixed-embedding test for 2-connected outerplanar graphs with lower bounds.

use super::values::{EndTuple, NodeInstance, Plan, Side, SMALL_PAIRS};
use super::{FixedError, LowerBoundMap};
use crate::angle::{Angle, PairSet};
use crate::embedding::{extended_dual_tree, outerplane_embedding, Dart, DualNeighbor, DualTree, PlaneEmbedding};
use crate::graph::EdgeId;
use crate::rectirep::RectilinearRepresentation;

/// An edge on the outer face of both embeddings, smallest id first.
pub fn outer_edge_exists(e: &PlaneEmbedding, o: &PlaneEmbedding) -> Option<EdgeId> {
    (0..e.graph().edge_count()).find(|&x| {
        let on = |emb: &PlaneEmbedding| {
            emb.face_of(Dart(2 * x)) == emb.outer_face() || emb.face_of(Dart(2 * x + 1)) == emb.outer_face()
        };
        on(e) && on(o)
    })
}

/// The dual tree rooted at an outer edge, with per-node geometry in `e`.
struct Rooted<'a> {
    e: &'a PlaneEmbedding,
    dual: DualTree,
    /// Nodes in breadth-first order from the root.
    order: Vec<usize>,
    parent_pos: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
    /// Same orientation as in the outerplane embedding.
    same: Vec<bool>,
    /// Child node at each position 1..=k (index i - 1), `None` if trivial.
    children: Vec<Vec<Option<usize>>>,
    inside: Vec<Vec<bool>>,
    /// Face of `e` inside the node's cycle next to its root edge.
    face: Vec<usize>,
}

impl Rooted<'_> {
    fn len(&self, s: usize) -> usize {
        self.dual.cycles[s].len()
    }

    /// u_i of node s.
    fn vertex(&self, s: usize, i: usize) -> usize {
        let l = self.len(s);
        self.dual.vertices[s][(self.parent_pos[s] + 1 + i) % l]
    }

    /// Cycle edge of position i (1..=k), i.e. u_{i-1} u_i; position 0 is the root edge.
    fn edge(&self, s: usize, i: usize) -> EdgeId {
        let l = self.len(s);
        self.dual.cycles[s][(self.parent_pos[s] + i) % l].edge()
    }

    fn in_subtree(&self, t: usize, root: usize) -> bool {
        self.tin[root] <= self.tin[t] && self.tin[t] <= self.tout[root]
    }

    /// Deepest internal node whose cycle contains edge x.
    fn deepest_node_of_edge(&self, o: &PlaneEmbedding, x: EdgeId) -> Option<usize> {
        let a = self.dual.node_of_face[o.face_of(Dart(2 * x))];
        let b = self.dual.node_of_face[o.face_of(Dart(2 * x + 1))];
        match (a, b) {
            (Some(a), Some(b)) => Some(if self.tin[a] > self.tin[b] { a } else { b }),
            (a, b) => a.or(b),
        }
    }
}

fn build<'a>(e: &'a PlaneEmbedding, o: &PlaneEmbedding, root_edge: EdgeId) -> Rooted<'a> {
    let dual = extended_dual_tree(o).expect("2-connected outerplane embedding");
    let n_nodes = dual.internal_count();
    let uv = if o.face_of(Dart(2 * root_edge)) == o.outer_face() { Dart(2 * root_edge) } else { Dart(2 * root_edge + 1) };
    let (root, root_pos) = dual.slot_of_dart[uv.twin().0];
    let mut parent_pos = vec![usize::MAX; n_nodes];
    let mut children = vec![Vec::new(); n_nodes];
    let mut order = Vec::with_capacity(n_nodes);
    parent_pos[root] = root_pos;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let s = order[head];
        head += 1;
        let l = dual.cycles[s].len();
        let mut ch = Vec::with_capacity(l - 1);
        for i in 1..l {
            match dual.neighbors[s][(parent_pos[s] + i) % l] {
                DualNeighbor::Node { node, position } => {
                    parent_pos[node] = position;
                    order.push(node);
                    ch.push(Some(node));
                }
                DualNeighbor::Leaf(_) => ch.push(None),
            }
        }
        children[s] = ch;
    }
    // preorder intervals
    let mut tin = vec![0; n_nodes];
    let mut tout = vec![0; n_nodes];
    let mut stack = vec![(root, 0usize)];
    let mut clock = 0;
    while let Some(&mut (s, ref mut next)) = stack.last_mut() {
        if *next == 0 {
            tin[s] = clock;
            clock += 1;
        }
        if *next < children[s].len() {
            let c = children[s][*next];
            *next += 1;
            if let Some(c) = c {
                stack.push((c, 0));
            }
        } else {
            tout[s] = clock - 1;
            stack.pop();
        }
    }
    let mut r = Rooted {
        e,
        dual,
        order,
        parent_pos,
        tin,
        tout,
        same: vec![true; n_nodes],
        inside: vec![Vec::new(); n_nodes],
        children,
        face: vec![usize::MAX; n_nodes],
    };
    r.same[root] = e.face_of(uv) == e.outer_face();
    for idx in 0..r.order.len() {
        let s = r.order[idx];
        let k = r.len(s) - 1;
        let (us, vs) = (r.vertex(s, 0), r.vertex(s, k));
        let root_e = r.edge(s, 0);
        let toward = |from: usize| Dart::leaving(e.graph(), root_e, from);
        r.face[s] = if r.same[s] { e.face_of(toward(vs)) } else { e.face_of(toward(us)) };
        let mut inside = vec![false; k];
        for i in 1..=k {
            let Some(c) = r.children[s][i - 1] else { continue };
            let (w, a, b) = if i < k {
                (r.vertex(s, i), r.edge(s, i), r.edge(s, i + 1))
            } else {
                (r.vertex(s, k - 1), r.edge(s, k - 1), r.edge(s, k))
            };
            let lc = r.len(c);
            let pc = r.parent_pos[c];
            let x = if i < k {
                r.dual.cycles[c][(pc + lc - 1) % lc].edge()
            } else {
                r.dual.cycles[c][(pc + 1) % lc].edge()
            };
            let deg = e.graph().degree(w);
            let off = |y: EdgeId| (e.position(w, y) + deg - e.position(w, b)) % deg;
            let between_b_a = off(x) > 0 && off(x) < off(a);
            let within = if r.same[s] { between_b_a } else { !between_b_a && x != a && x != b };
            inside[i - 1] = within;
            r.same[c] = r.same[s] != within;
        }
        r.inside[s] = inside;
    }
    r
}

/// Lower bounds seen by one node: (in the node's face, in the outer face of its subgraph).
fn node_bounds(r: &Rooted<'_>, o: &PlaneEmbedding, ell: &LowerBoundMap, s: usize) -> (Vec<u8>, Vec<u8>) {
    let e = r.e;
    let g = e.graph();
    let k = r.len(s) - 1;
    let f = r.face[s];
    let mut ell_face = vec![1; k + 1];
    let mut ell_out = vec![1; k + 1];
    for i in 0..=k {
        let w = r.vertex(s, i);
        let d = e.in_darts(w).find(|&d| e.face_of(d) == f).expect("cycle vertex lies on its face");
        ell_face[i] = ell.get(d).quarters();
        if i == 0 || i == k {
            continue;
        }
        let (a, b) = (r.edge(s, i), r.edge(s, i + 1));
        let group = |x: EdgeId| -> usize {
            if x == a {
                return i;
            }
            if x == b {
                return i + 1;
            }
            match (r.children[s][i - 1], r.deepest_node_of_edge(o, x)) {
                (Some(c), Some(t)) if r.in_subtree(t, c) => i,
                _ => i + 1,
            }
        };
        let rot = e.rotation(w);
        let deg = rot.len();
        for j in 0..deg {
            let (p, q) = (rot[(j + deg - 1) % deg], rot[j]);
            if group(p) != group(q) {
                let d = Dart::leaving(g, q, w).twin();
                if e.face_of(d) != f {
                    ell_out[i] = ell.get(d).quarters();
                }
            }
        }
    }
    (ell_face, ell_out)
}

/// Decides whether a 2-connected outerplanar graph has a representation with
/// embedding `e` and every angle at least `ell`; builds one if so.
pub fn test_2con_fixed(e: &PlaneEmbedding, ell: &LowerBoundMap) -> Result<Option<RectilinearRepresentation>, FixedError> {
    let g = e.graph();
    if g.max_degree() > 4 {
        return Ok(None);
    }
    if g.vertex_count() < 3 {
        return Err(FixedError::NotBiconnected);
    }
    let o = outerplane_embedding(g).map_err(|_| FixedError::NotOuterplanar)?.into_inner();
    if o.face(o.outer_face()).len() != g.vertex_count() {
        return Err(FixedError::NotBiconnected);
    }
    let Some(root_edge) = outer_edge_exists(e, &o) else { return Ok(None) };
    let r = build(e, &o, root_edge);
    let n_nodes = r.order.len();

    let mut plans: Vec<Option<Plan>> = vec![None; n_nodes];
    let mut pairs = vec![PairSet::EMPTY; n_nodes];
    let mut witness: Vec<[Option<EndTuple>; 9]> = vec![[None; 9]; n_nodes];
    let root = r.order[0];
    for &s in r.order.iter().rev() {
        let (ell_face, ell_out) = node_bounds(&r, &o, ell, s);
        let sides = r.children[s]
            .iter()
            .zip(&r.inside[s])
            .map(|(c, &inside)| match c {
                None => Side::Trivial,
                Some(c) => Side::NonTrivial { pairs: pairs[*c], inside },
            })
            .collect();
        let inst = NodeInstance { sides, ell_face, ell_out };
        let Some(plan) = Plan::new(&inst) else { return Ok(None) };
        let targets = if s == root { PairSet::ALL } else { SMALL_PAIRS };
        let mut found = PairSet::EMPTY;
        for (mu, nu) in targets.iter() {
            if let Some(t) = plan.solve(mu.quarters(), nu.quarters()) {
                found.insert(mu, nu);
                witness[s][pair_index(mu.quarters(), nu.quarters())] = Some(t);
            }
        }
        if found.is_empty() {
            return Ok(None);
        }
        pairs[s] = found;
        plans[s] = Some(plan);
    }

    let (u, v) = (r.vertex(root, 0), r.vertex(root, r.len(root) - 1));
    let outer_ell = |w: usize| {
        e.in_darts(w)
            .find(|&d| e.face_of(d) == e.outer_face())
            .map_or(1, |d| ell.get(d).quarters())
    };
    let Some((mu, nu)) = pairs[root]
        .iter()
        .map(|(a, b)| (a.quarters(), b.quarters()))
        .find(|&(a, b)| a + outer_ell(u) <= 4 && b + outer_ell(v) <= 4)
    else {
        return Ok(None);
    };

    let mut angles = vec![Angle::ZERO; e.dart_count()];
    let mut target = vec![(0u8, 0u8); n_nodes];
    target[root] = (mu, nu);
    for &s in &r.order {
        let plan = plans[s].as_ref().expect("every node has a plan");
        let (m, n) = target[s];
        let t = witness[s][pair_index(m, n)].expect("pair was found feasible");
        let seq = plan.sequence(&t, m, n);
        let k = r.len(s) - 1;
        for i in 0..=k {
            let w = r.vertex(s, i);
            let d = e.in_darts(w).find(|&d| e.face_of(d) == r.face[s]).expect("on face");
            angles[d.0] = Angle::from_quarters(seq.rho[i]).expect("in range");
            if i >= 1 {
                if let Some(c) = r.children[s][i - 1] {
                    target[c] = (seq.mu[i], seq.nu[i]);
                }
            }
        }
    }
    close_vertices(e, &mut angles, ell)?;
    let rep = RectilinearRepresentation::new(e.clone(), angles);
    debug_assert!(rep.validate(), "{:?}", rep.check());
    Ok(Some(rep))
}

pub(crate) fn pair_index(mu: u8, nu: u8) -> usize {
    usize::from((mu - 1) * 3 + (nu - 1))
}

/// Gives each vertex's single unassigned corner the rest of the full turn.
fn close_vertices(e: &PlaneEmbedding, angles: &mut [Angle], ell: &LowerBoundMap) -> Result<(), FixedError> {
    for w in 0..e.graph().vertex_count() {
        let mut open = None;
        let mut sum = 0u8;
        for d in e.in_darts(w) {
            match angles[d.0].quarters() {
                0 => {
                    if open.replace(d).is_some() {
                        return Err(FixedError::Internal("two open corners at one vertex"));
                    }
                }
                q => sum += q,
            }
        }
        if let Some(d) = open {
            let rest = 4i16 - i16::from(sum);
            if !(1..=4).contains(&rest) || (rest as u8) < ell.get(d).quarters() {
                return Err(FixedError::Internal("closing angle out of range"));
            }
            angles[d.0] = Angle::from_quarters(rest as u8).expect("in range");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::chord6;

    fn right(e: &PlaneEmbedding) -> LowerBoundMap {
        LowerBoundMap::uniform(e, Angle::RIGHT)
    }

    #[test]
    fn square() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let e = outerplane_embedding(&g).unwrap().into_inner();
        let rep = test_2con_fixed(&e, &right(&e)).unwrap().unwrap();
        assert!(rep.validate());
    }

    #[test]
    fn chord6_depends_on_outer_face() {
        let o = outerplane_embedding(&chord6()).unwrap().into_inner();
        for f in 0..o.face_count() {
            let e = o.with_outer_face(f).unwrap();
            let res = test_2con_fixed(&e, &right(&e)).unwrap();
            assert_eq!(res.is_some(), e.face(f).len() == 6, "outer face {f}");
        }
    }
}
