//! Grid coordinates for a rectilinear representation, plus SVG export.
//!
//! Every edge gets a compass direction from the angles. Faces are cut into
//! rectangles by extra edges out of reflex corners, the outer face is closed
//! off by a frame, and then x and y are assigned separately by longest paths
//! over the segment order relations.

use crate::embedding::Dart;
use crate::graph::Vertex;
use crate::rectirep::{RectilinearRepresentation, RepError};
use std::collections::VecDeque;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawError {
    #[error("invalid representation: {0}")]
    InvalidRepresentation(#[from] RepError),
    #[error("angles give conflicting directions at dart {0}")]
    InconsistentDirections(usize),
}

/// Integer grid positions for every vertex of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub coords: Vec<(i64, i64)>,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Drawing {
    /// Smallest and largest coordinates, or `None` for an empty drawing.
    pub fn bounding_box(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.coords.iter();
        let &(x0, y0) = it.next()?;
        Some(it.fold(((x0, y0), (x0, y0)), |((a, b), (c, d)), &(x, y)| {
            ((a.min(x), b.min(y)), (c.max(x), d.max(y)))
        }))
    }

    /// Shifts every vertex by `(dx, dy)`.
    pub fn translate(&mut self, dx: i64, dy: i64) {
        for p in &mut self.coords {
            p.0 += dx;
            p.1 += dy;
        }
    }
}

// Directions in quarter turns counterclockwise from east, y pointing up.
const EAST: u8 = 0;
const NORTH: u8 = 1;

fn turn(dir: u8, by: i32) -> u8 {
    (i32::from(dir) + by).rem_euclid(4) as u8
}

/// Half-edge structure that grows while faces are cut into rectangles.
struct Mesh {
    head: Vec<usize>,
    next: Vec<usize>,
    angle: Vec<u8>,
    dir: Vec<u8>,
    vertices: usize,
}

impl Mesh {
    fn tail(&self, d: usize) -> usize {
        self.head[d ^ 1]
    }

    fn add_vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    /// Adds an edge `from -> to` with direction `dir`; returns its forward dart.
    fn add_edge(&mut self, from: usize, to: usize, dir: u8) -> usize {
        let d = self.head.len();
        self.head.extend([to, from]);
        self.next.extend([usize::MAX, usize::MAX]);
        self.angle.extend([0, 0]);
        self.dir.extend([dir, turn(dir, 2)]);
        d
    }

    /// Puts a new vertex in the middle of the edge of `d`; `d` keeps the
    /// first half and its twin the second.
    fn split(&mut self, d: usize) {
        let t = d ^ 1;
        let head = self.head[d];
        let x = self.add_vertex();
        let d2 = self.add_edge(x, head, self.dir[d]);
        let t2 = d2 ^ 1;
        let mut before_t = t;
        while self.next[before_t] != t {
            before_t = self.next[before_t];
        }
        let after_d = self.next[d];
        self.head[d] = x;
        // at a degree-one head the walk turns straight back into t
        self.next[d2] = if after_d == t { t2 } else { after_d };
        self.angle[d2] = self.angle[d];
        self.next[d] = d2;
        self.angle[d] = 2;
        if before_t != d {
            self.next[before_t] = t2;
        }
        self.next[t2] = t;
        self.angle[t2] = 2;
    }

    /// Cuts face of `start` until it is a rectangle.
    fn rectangulate(&mut self, start: usize) {
        let mut start = start;
        loop {
            let mut corners = Vec::new();
            let mut d = start;
            loop {
                if self.angle[d] != 2 {
                    corners.push(d);
                }
                d = self.next[d];
                if d == start {
                    break;
                }
            }
            let k = corners.len();
            let Some(i) = (0..k).find(|&i| {
                self.angle[corners[i]] >= 3
                    && self.angle[corners[(i + 1) % k]] == 1
                    && self.angle[corners[(i + 2) % k]] == 1
            }) else {
                debug_assert!(k == 4 && corners.iter().all(|&c| self.angle[c] == 1));
                return;
            };
            let p = corners[i];
            let q = self.next[p];
            let r = self.next[corners[(i + 2) % k]];
            // r leaves the second convex corner; cut it and link the corner at p to it
            self.split(r);
            let s = self.next[r];
            let x = self.head[r];
            let v = self.head[p];
            let a = self.add_edge(v, x, turn(self.dir[p], i32::from(self.angle[p]) - 3));
            let b = a ^ 1;
            self.next[r] = b;
            self.angle[r] = 1;
            self.next[b] = q;
            self.angle[b] = 1;
            self.next[p] = a;
            self.angle[p] -= 1;
            self.next[a] = s;
            self.angle[a] = 1;
            start = p;
        }
    }
}

/// Places every vertex on the integer grid so that the drawing has exactly
/// the rotations, outer face and angles of `rep`.
pub fn realize(rep: &RectilinearRepresentation) -> Result<Drawing, DrawError> {
    rep.check()?;
    let emb = &rep.embedding;
    let g = emb.graph();
    let n = g.vertex_count();
    let m = g.edge_count();
    let edges = g.edges().to_vec();
    let mut coords = vec![(0, 0); n];
    if m == 0 {
        return Ok(Drawing { coords, edges });
    }

    let mut mesh = Mesh {
        head: (0..2 * m).map(|d| emb.head(Dart(d))).collect(),
        next: (0..2 * m).map(|d| emb.next(Dart(d)).0).collect(),
        angle: rep.angles.iter().map(|a| a.quarters()).collect(),
        dir: vec![u8::MAX; 2 * m],
        vertices: n,
    };

    mesh.dir[0] = EAST;
    mesh.dir[1] = turn(EAST, 2);
    let mut queue = VecDeque::from([0, 1]);
    while let Some(d) = queue.pop_front() {
        let nd = mesh.next[d];
        let want = turn(mesh.dir[d], i32::from(mesh.angle[d]) - 2);
        for (e, w) in [(nd, want), (nd ^ 1, turn(want, 2))] {
            if mesh.dir[e] == u8::MAX {
                mesh.dir[e] = w;
                queue.push_back(e);
            } else if mesh.dir[e] != w {
                return Err(DrawError::InconsistentDirections(e));
            }
        }
    }

    let faces: Vec<usize> = emb
        .faces()
        .iter()
        .enumerate()
        .filter(|&(f, _)| f != emb.outer_face())
        .map(|(_, w)| w[0].0)
        .collect();

    // frame around the outer face, hooked to a corner with room in the outer face
    let p = emb
        .face(emb.outer_face())
        .iter()
        .map(|d| d.0)
        .find(|&d| mesh.angle[d] >= 2)
        .expect("outer face turns by a full circle");
    let q = mesh.next[p];
    let big = mesh.angle[p];
    let v = mesh.head[p];
    let out = turn(mesh.dir[p], -1);
    let x = mesh.add_vertex();
    let c: Vec<usize> = (0..4).map(|_| mesh.add_vertex()).collect();
    let a = mesh.add_edge(v, x, out);
    let ring = [
        mesh.add_edge(x, c[0], turn(out, -1)),
        mesh.add_edge(c[0], c[1], turn(out, -2)),
        mesh.add_edge(c[1], c[2], turn(out, 1)),
        mesh.add_edge(c[2], c[3], out),
        mesh.add_edge(c[3], x, turn(out, -1)),
    ];
    mesh.next[p] = a;
    mesh.angle[p] = 1;
    mesh.next[a] = ring[0];
    mesh.angle[a] = 1;
    for w in ring.windows(2) {
        mesh.next[w[0]] = w[1];
        mesh.angle[w[0]] = 1;
    }
    mesh.next[ring[4]] = a ^ 1;
    mesh.angle[ring[4]] = 1;
    mesh.next[a ^ 1] = q;
    mesh.angle[a ^ 1] = big - 1;
    for i in 0..5 {
        let back = ring[4 - i] ^ 1;
        mesh.next[back] = ring[(8 - i) % 5] ^ 1;
        mesh.angle[back] = if i == 4 { 2 } else { 3 };
    }

    for f in faces.into_iter().chain([p]) {
        mesh.rectangulate(f);
    }

    let xs = layer(&mesh, EAST);
    let ys = layer(&mesh, NORTH);
    for (v, c) in coords.iter_mut().enumerate() {
        *c = (xs[v], ys[v]);
    }
    let min_x = coords.iter().map(|c| c.0).min().unwrap_or(0);
    let min_y = coords.iter().map(|c| c.1).min().unwrap_or(0);
    let mut d = Drawing { coords, edges };
    d.translate(-min_x, -min_y);
    Ok(d)
}

/// Longest-path coordinate along the axis of `forward`. Edges across that
/// axis glue vertices into one segment; edges along it order segments.
fn layer(mesh: &Mesh, forward: u8) -> Vec<i64> {
    let nv = mesh.vertices;
    let mut seg: Vec<usize> = (0..nv).collect();
    fn find(seg: &mut [usize], mut v: usize) -> usize {
        while seg[v] != v {
            seg[v] = seg[seg[v]];
            v = seg[v];
        }
        v
    }
    let darts = mesh.head.len();
    for d in (0..darts).step_by(2) {
        if mesh.dir[d] % 2 != forward % 2 {
            let (a, b) = (find(&mut seg, mesh.tail(d)), find(&mut seg, mesh.head[d]));
            seg[a.max(b)] = a.min(b);
        }
    }
    let root: Vec<usize> = (0..nv).map(|v| find(&mut seg, v)).collect();
    let mut succ = vec![Vec::new(); nv];
    let mut indeg = vec![0usize; nv];
    for d in 0..darts {
        if mesh.dir[d] == forward {
            succ[root[mesh.tail(d)]].push(root[mesh.head[d]]);
            indeg[root[mesh.head[d]]] += 1;
        }
    }
    let mut pos = vec![0i64; nv];
    let mut ready: VecDeque<usize> = (0..nv).filter(|&v| root[v] == v && indeg[v] == 0).collect();
    while let Some(s) = ready.pop_front() {
        for &t in &succ[s] {
            pos[t] = pos[t].max(pos[s] + 1);
            indeg[t] -= 1;
            if indeg[t] == 0 {
                ready.push_back(t);
            }
        }
    }
    (0..nv).map(|v| pos[root[v]]).collect()
}

fn direction(from: (i64, i64), to: (i64, i64)) -> Option<u8> {
    match (to.0 - from.0, to.1 - from.1) {
        (dx, 0) if dx > 0 => Some(0),
        (0, dy) if dy > 0 => Some(1),
        (dx, 0) if dx < 0 => Some(2),
        (0, dy) if dy < 0 => Some(3),
        _ => None,
    }
}

/// Whether `d` is a planar rectilinear drawing with exactly the embedding and
/// angles of `rep`.
pub fn validate_geometry(d: &Drawing, rep: &RectilinearRepresentation) -> bool {
    // with the rep's turning sums, matching angles also pin the outer face
    if !rep.validate() {
        return false;
    }
    let emb = &rep.embedding;
    let g = emb.graph();
    if d.coords.len() != g.vertex_count() || d.edges != g.edges() {
        return false;
    }
    let mut dirs = Vec::with_capacity(d.edges.len());
    for &(u, v) in &d.edges {
        match direction(d.coords[u], d.coords[v]) {
            Some(dir) => dirs.push(dir),
            None => return false,
        }
    }
    let mut seen = std::collections::HashSet::new();
    if !d.coords.iter().all(|c| seen.insert(*c)) {
        return false;
    }
    for i in 0..d.edges.len() {
        for j in i + 1..d.edges.len() {
            if segments_clash(d, i, j) {
                return false;
            }
        }
    }
    for (v, &p) in d.coords.iter().enumerate() {
        if (0..d.edges.len()).any(|e| {
            let (a, b) = d.edges[e];
            a != v && b != v && on_segment(p, d.coords[a], d.coords[b])
        }) {
            return false;
        }
    }
    let out_dir = |v: Vertex, e: usize| {
        let (a, _) = d.edges[e];
        if a == v {
            dirs[e]
        } else {
            turn(dirs[e], 2)
        }
    };
    (0..2 * g.edge_count()).all(|i| {
        let dart = Dart(i);
        let w = emb.head(dart);
        let e = dart.edge();
        let ep = emb.cw_pred(w, e);
        let sweep = (i32::from(out_dir(w, ep)) - i32::from(out_dir(w, e))).rem_euclid(4);
        let sweep = if sweep == 0 { 4 } else { sweep };
        sweep == i32::from(rep.angles[i].quarters())
    })
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    let in_range = |v: i64, s: i64, t: i64| s.min(t) <= v && v <= s.max(t);
    (p.0 == a.0 && a.0 == b.0 && in_range(p.1, a.1, b.1))
        || (p.1 == a.1 && a.1 == b.1 && in_range(p.0, a.0, b.0))
}

// two edges clash if they share any point other than a common endpoint
fn segments_clash(d: &Drawing, i: usize, j: usize) -> bool {
    let (a, b) = d.edges[i];
    let (c, e) = d.edges[j];
    let (pa, pb, pc, pe) = (d.coords[a], d.coords[b], d.coords[c], d.coords[e]);
    let (lo1, hi1) = ((pa.0.min(pb.0), pa.1.min(pb.1)), (pa.0.max(pb.0), pa.1.max(pb.1)));
    let (lo2, hi2) = ((pc.0.min(pe.0), pc.1.min(pe.1)), (pc.0.max(pe.0), pc.1.max(pe.1)));
    let lo = (lo1.0.max(lo2.0), lo1.1.max(lo2.1));
    let hi = (hi1.0.min(hi2.0), hi1.1.min(hi2.1));
    if lo.0 > hi.0 || lo.1 > hi.1 {
        return false;
    }
    // the overlap box is a single point that is a shared endpoint
    if lo == hi {
        let shared = [a, b].iter().any(|&x| (x == c || x == e) && d.coords[x] == lo);
        return !shared;
    }
    true
}

/// Renders the drawing as an SVG 1.1 document, `scale` pixels per grid unit.
pub fn export_svg(d: &Drawing, scale: u32) -> Vec<u8> {
    let s = f64::from(scale.max(1));
    let ((x0, y0), (x1, y1)) = d.bounding_box().unwrap_or(((0, 0), (0, 0)));
    let (w, h) = ((x1 - x0 + 2) as f64 * s, (y1 - y0 + 2) as f64 * s);
    // grid y points up, SVG y points down
    let px = |p: (i64, i64)| ((p.0 - x0 + 1) as f64 * s, (y1 - p.1 + 1) as f64 * s);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0.00 0.00 {w:.2} {h:.2}\">"
    );
    for &(u, v) in &d.edges {
        let (a, b) = (px(d.coords[u]), px(d.coords[v]));
        let _ = writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"2\"/>",
            a.0, a.1, b.0, b.1
        );
    }
    let r = s / 8.0;
    for &p in &d.coords {
        let c = px(p);
        let _ = writeln!(out, "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{r:.2}\" fill=\"black\"/>", c.0, c.1);
    }
    out.push_str("</svg>\n");
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixed::{test_fixed, test_outerplane};
    use crate::graph::Graph;
    use crate::oracle::{all_embeddings, chord6, enumerate_outerplanar, ladder};
    use crate::variable::test_variable;

    fn draw(g: &Graph) -> (RectilinearRepresentation, Drawing) {
        let rep = test_variable(g).unwrap().expect("drawable");
        let d = realize(&rep).unwrap();
        (rep, d)
    }

    #[test]
    fn square_is_the_unit_square() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (rep, d) = draw(&g);
        let mut pts = d.coords.clone();
        pts.sort();
        assert_eq!(pts, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert!(validate_geometry(&d, &rep));

        let mut bad = d.clone();
        bad.coords[2] = bad.coords[0];
        assert!(!validate_geometry(&bad, &rep));
        let mut mirrored = d.clone();
        mirrored.coords.iter_mut().for_each(|p| p.0 = -p.0);
        assert!(!validate_geometry(&mirrored, &rep));
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let (rep, d) = draw(&g);
        assert_eq!(d.coords, vec![(0, 0), (1, 0)]);
        assert!(validate_geometry(&d, &rep));
    }

    #[test]
    fn chord6_and_ladder() {
        for g in [chord6(), ladder(3), ladder(20)] {
            let (rep, d) = draw(&g);
            assert!(validate_geometry(&d, &rep));
            let ((_, _), (x, y)) = d.bounding_box().unwrap();
            assert!(x.max(y) <= g.edge_count() as i64);
        }
        let rep = test_outerplane(&chord6()).unwrap().unwrap();
        assert!(validate_geometry(&realize(&rep).unwrap(), &rep));
    }

    #[test]
    fn svg_counts() {
        let (_, d) = draw(&ladder(3));
        let svg = String::from_utf8(export_svg(&d, 20)).unwrap();
        assert_eq!(svg.matches("<line").count(), 10);
        assert_eq!(svg.matches("<circle").count(), 8);
        let empty = String::from_utf8(export_svg(&Drawing { coords: vec![], edges: vec![] }, 10)).unwrap();
        assert!(empty.contains("<svg") && !empty.contains("<line"));
    }

    #[test]
    fn every_small_representation_draws() {
        for n in 1..=7 {
            for g in enumerate_outerplanar(n) {
                let fixed = all_embeddings(&g).into_iter().filter_map(|e| test_fixed(&e).unwrap());
                for rep in test_variable(&g).unwrap().into_iter().chain(fixed) {
                    let d = realize(&rep).unwrap();
                    assert!(validate_geometry(&d, &rep), "{:?}", g.edges());
                    let ((_, _), (x, y)) = d.bounding_box().unwrap();
                    assert!(x.max(y) <= g.edge_count() as i64);
                }
            }
        }
    }
}
