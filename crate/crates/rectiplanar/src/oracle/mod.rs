//! Exhaustive ground truth for small instances.
//!
//! [`oracle_fixed`] searches angle assignments of one embedding;
//! [`oracle_variable`] runs it over every plane embedding of the graph.

mod gen;

pub use gen::{chord6, enumerate_outerplanar, ladder, random_outerplanar};

use crate::angle::Angle;
use crate::embedding::{Dart, PlaneEmbedding};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::rectirep::RectilinearRepresentation;
use thiserror::Error;

pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, above the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Answer of an exhaustive search; the witness is present iff feasible.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleVerdict {
    pub feasible: bool,
    pub witness: Option<RectilinearRepresentation>,
}

impl OracleVerdict {
    fn from_witness(w: Option<RectilinearRepresentation>) -> Self {
        OracleVerdict { feasible: w.is_some(), witness: w }
    }
}

/// Side conditions on the representations searched for.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Lower bound per dart; `None` means 90 degrees everywhere.
    pub ell: Option<Vec<Angle>>,
    /// Degree-2 vertices whose angles must be 90 or 270 degrees.
    pub chi: Vec<Vertex>,
    /// Edge `(u, v)` on the outer face with prescribed inner angles at `u` and `v`.
    pub rooted: Option<Rooted>,
}

/// An outer edge with the required sums of inner angles at its endpoints.
///
/// `mu` applies to the first endpoint of the edge, `nu` to the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rooted {
    pub edge: EdgeId,
    pub mu: Angle,
    pub nu: Angle,
}

/// Searches all angle assignments of `e` under the constraints.
pub fn oracle_fixed(e: &PlaneEmbedding, cons: &Constraints, cap: usize) -> Result<OracleVerdict, OracleError> {
    let n = e.graph().vertex_count();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    Ok(OracleVerdict::from_witness(search(e, cons)))
}

/// Searches every plane embedding of a connected graph.
pub fn oracle_variable(g: &Graph, chi: &[Vertex], rooted: Option<Rooted>, cap: usize) -> Result<OracleVerdict, OracleError> {
    if g.vertex_count() > cap {
        return Err(OracleError::CapExceeded { n: g.vertex_count(), cap });
    }
    let cons = Constraints { ell: None, chi: chi.to_vec(), rooted };
    for emb in all_embeddings(g) {
        if let Some(r) = rooted {
            let outer = emb.outer_face();
            if emb.face_of(Dart(2 * r.edge)) != outer && emb.face_of(Dart(2 * r.edge + 1)) != outer {
                continue;
            }
        }
        if let Some(w) = search(&emb, &cons) {
            return Ok(OracleVerdict::from_witness(Some(w)));
        }
    }
    Ok(OracleVerdict::from_witness(None))
}

/// Every plane embedding of a connected graph: each planar rotation system
/// (first edge of each rotation fixed) combined with each choice of outer face.
pub fn all_embeddings(g: &Graph) -> Vec<PlaneEmbedding> {
    let mut out = Vec::new();
    for_each_planar_rotation(g, |emb| {
        for f in 0..emb.face_count() {
            out.push(emb.with_outer_face(f).expect("face exists"));
        }
    });
    out
}

/// Calls `visit` on each planar rotation system of a connected graph.
pub fn for_each_planar_rotation(g: &Graph, mut visit: impl FnMut(&PlaneEmbedding)) {
    let orders: Vec<Vec<Vec<EdgeId>>> = (0..g.vertex_count()).map(|v| cyclic_orders(g.incident(v))).collect();
    let mut idx = vec![0usize; g.vertex_count()];
    loop {
        let rotation: Vec<Vec<EdgeId>> = idx.iter().enumerate().map(|(v, &i)| orders[v][i].clone()).collect();
        if let Ok(emb) = PlaneEmbedding::new(g, rotation, 0) {
            visit(&emb);
        }
        let mut v = 0;
        loop {
            if v == idx.len() {
                return;
            }
            idx[v] += 1;
            if idx[v] < orders[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn cyclic_orders(edges: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    if edges.len() <= 2 {
        return vec![edges.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = edges[1..].to_vec();
    permutations(&mut rest, 0, &mut |p| {
        let mut o = vec![edges[0]];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn permutations(a: &mut Vec<EdgeId>, k: usize, f: &mut impl FnMut(&[EdgeId])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

struct Search<'a> {
    emb: &'a PlaneEmbedding,
    order: Vec<Dart>,
    lo: Vec<u8>,
    hi: Vec<u8>,
    odd_only: Vec<bool>,
    assign: Vec<u8>,
    face_sum: Vec<i32>,
    face_target: Vec<i32>,
    face_min: Vec<i32>,
    face_max: Vec<i32>,
    vert_sum: Vec<i32>,
    vert_min: Vec<i32>,
    vert_max: Vec<i32>,
    vert_left: Vec<usize>,
    inner_target: Vec<Option<u8>>,
}

fn search(e: &PlaneEmbedding, cons: &Constraints) -> Option<RectilinearRepresentation> {
    let g = e.graph();
    let darts = e.dart_count();
    if darts == 0 {
        return Some(RectilinearRepresentation::new(e.clone(), Vec::new()));
    }
    let mut lo = vec![1u8; darts];
    let mut hi = vec![3u8; darts];
    let mut odd_only = vec![false; darts];
    let mut is_chi = vec![false; g.vertex_count()];
    for &v in &cons.chi {
        is_chi[v] = true;
    }
    for d in 0..darts {
        let w = e.head(Dart(d));
        if g.degree(w) == 1 {
            lo[d] = 4;
            hi[d] = 4;
            continue;
        }
        if let Some(ell) = &cons.ell {
            lo[d] = lo[d].max(ell[d].quarters());
        }
        odd_only[d] = is_chi[w];
    }
    let mut inner_target = vec![None; g.vertex_count()];
    if let Some(r) = cons.rooted {
        let (u, v) = g.endpoints(r.edge);
        for (w, a) in [(u, r.mu), (v, r.nu)] {
            let outer: Vec<Dart> = e.in_darts(w).filter(|&d| e.face_of(d) == e.outer_face()).collect();
            if outer.is_empty() {
                return None;
            }
            if outer.len() == 1 && g.degree(w) > 1 {
                let q = 4u8.checked_sub(a.quarters())?;
                let d = outer[0].0;
                lo[d] = lo[d].max(q);
                hi[d] = hi[d].min(q);
            }
            inner_target[w] = Some(a.quarters());
        }
    }
    if (0..darts).any(|d| lo[d] > hi[d]) {
        return None;
    }
    let contrib = |d: usize| -> (i32, i32) {
        let (mut l, mut h) = (lo[d], hi[d]);
        if odd_only[d] {
            if l == 2 {
                l = 3;
            }
            if h == 2 {
                h = 1;
            }
        }
        (2 - i32::from(h), 2 - i32::from(l))
    };
    let nf = e.face_count();
    let mut face_min = vec![0; nf];
    let mut face_max = vec![0; nf];
    let mut vert_min = vec![0; g.vertex_count()];
    let mut vert_max = vec![0; g.vertex_count()];
    let mut vert_left = vec![0; g.vertex_count()];
    for d in 0..darts {
        let (a, b) = contrib(d);
        let f = e.face_of(Dart(d));
        face_min[f] += a;
        face_max[f] += b;
        let w = e.head(Dart(d));
        vert_min[w] += 2 - b;
        vert_max[w] += 2 - a;
        vert_left[w] += 1;
    }
    let face_target: Vec<i32> = (0..nf).map(|f| if f == e.outer_face() { -4 } else { 4 }).collect();
    let order: Vec<Dart> = e.faces().iter().flatten().copied().collect();
    let mut s = Search {
        emb: e,
        order,
        lo,
        hi,
        odd_only,
        assign: vec![0; darts],
        face_sum: vec![0; nf],
        face_target,
        face_min,
        face_max,
        vert_sum: vec![0; g.vertex_count()],
        vert_min,
        vert_max,
        vert_left,
        inner_target,
    };
    if !s.feasible_face_bounds() {
        return None;
    }
    if s.dfs(0) {
        let angles = s.assign.iter().map(|&q| Angle::from_quarters(q).expect("in range")).collect();
        let rep = RectilinearRepresentation::new(e.clone(), angles);
        debug_assert!(rep.validate());
        Some(rep)
    } else {
        None
    }
}

impl Search<'_> {
    fn feasible_face_bounds(&self) -> bool {
        (0..self.face_sum.len()).all(|f| {
            let need = self.face_target[f] - self.face_sum[f];
            self.face_min[f] <= need && need <= self.face_max[f]
        }) && (0..self.vert_sum.len()).all(|v| {
            self.vert_left[v] == 0 || (self.vert_min[v] <= 4 && 4 <= self.vert_max[v])
        })
    }

    fn dfs(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let d = self.order[i];
        let f = self.emb.face_of(d);
        let w = self.emb.head(d);
        let (lo, hi) = (self.lo[d.0], self.hi[d.0]);
        let (cmin, cmax) = (2 - i32::from(hi), 2 - i32::from(lo));
        let (cmin, cmax) = if self.odd_only[d.0] {
            (if hi == 2 { 1 } else { cmin }, if lo == 2 { -1 } else { cmax })
        } else {
            (cmin, cmax)
        };
        self.face_min[f] -= cmin;
        self.face_max[f] -= cmax;
        self.vert_min[w] -= 2 - cmax;
        self.vert_max[w] -= 2 - cmin;
        self.vert_left[w] -= 1;
        let mut found = false;
        for q in lo..=hi {
            if self.odd_only[d.0] && q == 2 {
                continue;
            }
            let qi = i32::from(q);
            self.face_sum[f] += 2 - qi;
            self.vert_sum[w] += qi;
            let fneed = self.face_target[f] - self.face_sum[f];
            let vneed = 4 - self.vert_sum[w];
            self.assign[d.0] = q;
            let ok = self.face_min[f] <= fneed
                && fneed <= self.face_max[f]
                && self.vert_min[w] <= vneed
                && vneed <= self.vert_max[w]
                && (self.vert_left[w] > 0 || self.inner_ok(w));
            if ok {
                if self.dfs(i + 1) {
                    found = true;
                }
            }
            self.face_sum[f] -= 2 - qi;
            self.vert_sum[w] -= qi;
            if found {
                break;
            }
        }
        self.face_min[f] += cmin;
        self.face_max[f] += cmax;
        self.vert_min[w] += 2 - cmax;
        self.vert_max[w] += 2 - cmin;
        self.vert_left[w] += 1;
        found
    }

    fn inner_ok(&self, w: Vertex) -> bool {
        let Some(t) = self.inner_target[w] else { return true };
        let e = self.emb;
        let inner: u8 = e
            .in_darts(w)
            .filter(|&d| e.face_of(d) != e.outer_face())
            .map(|d| self.assign[d.0])
            .sum();
        inner == t
    }
}
