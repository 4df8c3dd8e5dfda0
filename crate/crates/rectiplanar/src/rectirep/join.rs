//! Gluing representations of graphs that share a single cut vertex.

use std::fmt;

use super::{RectilinearRepresentation, RepError};
use crate::angle::Angle;
use crate::embedding::{Dart, PlaneEmbedding};
use crate::graph::{EdgeId, Graph, Vertex};

/// The four conditions a join must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinProperty {
    /// The glued rotation system is a plane embedding whose restrictions are the parts'.
    A,
    /// Every angle at the cut vertex is 90, 180 or 270 degrees.
    B,
    /// The angles at the cut vertex sum to 360 degrees.
    C,
    /// Restricting the result to each part gives back that part's angles.
    D,
}

impl fmt::Display for JoinProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JoinProperty::A => "a",
            JoinProperty::B => "b",
            JoinProperty::C => "c",
            JoinProperty::D => "d",
        };
        f.write_str(s)
    }
}

/// One representation to be joined, with its local vertex ids mapped to the result's.
#[derive(Clone, Copy, Debug)]
pub struct JoinPart<'a> {
    pub rep: &'a RectilinearRepresentation,
    pub vertex_map: &'a [Vertex],
}

fn violated(p: JoinProperty) -> RepError {
    RepError::JoinPropertyViolated(p)
}

/// Joins representations sharing only vertex `c`.
///
/// Edges of the result are the parts' edges concatenated in part order.
/// `rotation_at_c` lists (part, local edge) clockwise around `c`, and
/// `cut_angles[i]` is the angle between entry `i - 1` and entry `i`.
pub fn join(
    parts: &[JoinPart<'_>],
    c: Vertex,
    rotation_at_c: &[(usize, EdgeId)],
    cut_angles: &[Angle],
) -> Result<RectilinearRepresentation, RepError> {
    let a = violated(JoinProperty::A);
    let n = parts.iter().flat_map(|p| p.vertex_map.iter()).max().map_or(0, |&m| m + 1);
    let mut owner = vec![usize::MAX; n];
    let mut offsets = Vec::with_capacity(parts.len());
    let mut edges = Vec::new();
    for (pi, p) in parts.iter().enumerate() {
        let g = p.rep.embedding.graph();
        if p.vertex_map.len() != g.vertex_count() || !p.vertex_map.contains(&c) {
            return Err(a);
        }
        for &v in p.vertex_map {
            if v != c && owner[v] != usize::MAX {
                return Err(a);
            }
            owner[v] = pi;
        }
        offsets.push(edges.len());
        edges.extend(g.edges().iter().map(|&(x, y)| (p.vertex_map[x], p.vertex_map[y])));
    }
    if owner.contains(&usize::MAX) {
        return Err(a);
    }
    let g = Graph::new(n, &edges).map_err(|_| a.clone())?;

    // rotation: copied away from c, prescribed at c
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for (pi, p) in parts.iter().enumerate() {
        let e = &p.rep.embedding;
        for (lv, &v) in p.vertex_map.iter().enumerate() {
            if v != c {
                rotation[v] = e.rotation(lv).iter().map(|&x| x + offsets[pi]).collect();
            }
        }
    }
    let mut seen = vec![false; edges.len()];
    for &(pi, le) in rotation_at_c {
        let Some(&off) = offsets.get(pi) else { return Err(a) };
        let ge = off + le;
        if le >= parts[pi].rep.embedding.graph().edge_count() || seen[ge] {
            return Err(a);
        }
        seen[ge] = true;
        rotation[c].push(ge);
    }
    if rotation[c].len() != g.degree(c) {
        return Err(a);
    }
    for (pi, p) in parts.iter().enumerate() {
        let lc = p.vertex_map.iter().position(|&v| v == c).expect("checked above");
        let own: Vec<EdgeId> = rotation_at_c.iter().filter(|x| x.0 == pi).map(|x| x.1).collect();
        if !is_cyclic_shift(&own, p.rep.embedding.rotation(lc)) {
            return Err(a);
        }
    }
    let emb = PlaneEmbedding::new(&g, rotation, 0).map_err(|_| a.clone())?;

    // the outer face is the unique face restricting to every part's outer face
    let mut maps = Vec::with_capacity(parts.len());
    for (pi, p) in parts.iter().enumerate() {
        let m = p.rep.embedding.graph().edge_count();
        let sub: Vec<EdgeId> = (offsets[pi]..offsets[pi] + m).collect();
        maps.push((sub.clone(), emb.restrict(&sub).map_err(|_| a.clone())?));
    }
    let candidates: Vec<usize> = (0..emb.face_count())
        .filter(|&f| {
            parts.iter().zip(&maps).all(|(p, (_, r))| r.face_map[f] == p.rep.embedding.outer_face())
        })
        .collect();
    if candidates.len() != 1 {
        return Err(a);
    }
    let emb = emb.with_outer_face(candidates[0])?;

    if cut_angles.len() != rotation_at_c.len() {
        return Err(violated(JoinProperty::B));
    }
    if cut_angles.iter().any(|x| !(1..=3).contains(&x.quarters())) {
        return Err(violated(JoinProperty::B));
    }
    if cut_angles.iter().map(|x| u32::from(x.quarters())).sum::<u32>() != 4 {
        return Err(violated(JoinProperty::C));
    }

    let mut angles = vec![Angle::ZERO; emb.dart_count()];
    for (pi, p) in parts.iter().enumerate() {
        let pe = &p.rep.embedding;
        for d in 0..pe.dart_count() {
            if p.vertex_map[pe.head(Dart(d))] != c {
                angles[2 * offsets[pi] + d] = p.rep.angles[d];
            }
        }
    }
    for (i, &ge) in emb.rotation(c).to_vec().iter().enumerate() {
        angles[Dart::leaving(&g, ge, c).twin().0] = cut_angles[i];
    }
    let rep = RectilinearRepresentation::new(emb, angles);

    for (p, (sub, _)) in parts.iter().zip(&maps) {
        let (restricted, _) = rep.restrict(sub)?;
        if restricted.angles != p.rep.angles {
            return Err(violated(JoinProperty::D));
        }
    }
    Ok(rep)
}

fn is_cyclic_shift(a: &[EdgeId], b: &[EdgeId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(s) = b.iter().position(|&x| x == a[0]) else { return false };
    (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_rep() -> RectilinearRepresentation {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let e = PlaneEmbedding::new(&g, vec![vec![0], vec![0]], 0).unwrap();
        RectilinearRepresentation::new(e, vec![Angle::FULL; 2])
    }

    #[test]
    fn two_edges_make_an_l() {
        let r = edge_rep();
        let parts = [
            JoinPart { rep: &r, vertex_map: &[0, 1] },
            JoinPart { rep: &r, vertex_map: &[0, 2] },
        ];
        let out = join(&parts, 0, &[(0, 0), (1, 0)], &[Angle::RIGHT, Angle::REFLEX]).unwrap();
        assert!(out.validate());
    }

    #[test]
    fn bad_sums_are_reported() {
        let r = edge_rep();
        let parts = [
            JoinPart { rep: &r, vertex_map: &[0, 1] },
            JoinPart { rep: &r, vertex_map: &[0, 2] },
        ];
        let err = join(&parts, 0, &[(0, 0), (1, 0)], &[Angle::RIGHT, Angle::RIGHT]).unwrap_err();
        assert_eq!(err, RepError::JoinPropertyViolated(JoinProperty::C));
        let err = join(&parts, 0, &[(0, 0), (1, 0)], &[Angle::ZERO, Angle::FULL]).unwrap_err();
        assert_eq!(err, RepError::JoinPropertyViolated(JoinProperty::B));
        let err = join(&parts, 0, &[(0, 0), (0, 0)], &[Angle::RIGHT, Angle::REFLEX]).unwrap_err();
        assert_eq!(err, RepError::JoinPropertyViolated(JoinProperty::A));
    }
}
