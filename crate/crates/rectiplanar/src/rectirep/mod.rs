//! Rectilinear representations: a plane embedding plus one angle per vertex
//! occurrence on a face.
//!
//! An occurrence is named by the dart entering it. The angle stored for dart
//! `d` is the angle at `head(d)` inside `face(d)`, swept clockwise from the
//! edge preceding `d`'s edge in the rotation to `d`'s edge.

mod join;

pub use join::{join, JoinPart, JoinProperty};

use crate::angle::Angle;
use crate::embedding::{Dart, EmbeddingError, PlaneEmbedding, Restriction};
use crate::graph::{EdgeId, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("no angle for dart {0}")]
    MissingAngle(usize),
    #[error("angle {angle} at dart {dart} is out of range")]
    AngleOutOfRange { dart: usize, angle: u8 },
    #[error("angles around vertex {0} do not sum to 360 degrees")]
    VertexSum(Vertex),
    #[error("face {0} violates the turning condition")]
    FaceSum(usize),
    #[error("vertex {0} occurs more than once on the outer face")]
    MultipleOuterOccurrences(Vertex),
    #[error("vertex {0} is not on the outer face")]
    NotOnOuterFace(Vertex),
    #[error("join property ({0}) violated")]
    JoinPropertyViolated(JoinProperty),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// A plane embedding with an angle for every (vertex occurrence, face) incidence.
#[derive(Clone, Debug, PartialEq)]
pub struct RectilinearRepresentation {
    pub embedding: PlaneEmbedding,
    /// Indexed by dart id.
    pub angles: Vec<Angle>,
}

impl RectilinearRepresentation {
    pub fn new(embedding: PlaneEmbedding, angles: Vec<Angle>) -> Self {
        RectilinearRepresentation { embedding, angles }
    }

    pub fn angle(&self, d: Dart) -> Angle {
        self.angles[d.0]
    }

    /// Whether the angles satisfy the vertex and face conditions.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Like [`validate`](Self::validate), naming the first violation.
    pub fn check(&self) -> Result<(), RepError> {
        let e = &self.embedding;
        let g = e.graph();
        if self.angles.len() != e.dart_count() {
            return Err(RepError::MissingAngle(self.angles.len().min(e.dart_count())));
        }
        for (d, a) in self.angles.iter().enumerate() {
            let q = a.quarters();
            let head_deg = g.degree(e.head(Dart(d)));
            let ok = if head_deg == 1 { q == 4 } else { (1..=3).contains(&q) };
            if !ok {
                return Err(if q == 0 {
                    RepError::MissingAngle(d)
                } else {
                    RepError::AngleOutOfRange { dart: d, angle: q }
                });
            }
        }
        for v in 0..g.vertex_count() {
            if g.degree(v) == 0 {
                continue;
            }
            let sum: u32 = e.in_darts(v).map(|d| u32::from(self.angles[d.0].quarters())).sum();
            if sum != 4 {
                return Err(RepError::VertexSum(v));
            }
        }
        for (f, walk) in e.faces().iter().enumerate() {
            if walk.is_empty() {
                continue;
            }
            let turn: i64 = walk.iter().map(|d| 2 - i64::from(self.angles[d.0].quarters())).sum();
            let want = if f == e.outer_face() { -4 } else { 4 };
            if turn != want {
                return Err(RepError::FaceSum(f));
            }
        }
        Ok(())
    }

    /// Sum of the angles at `v` in internal faces.
    pub fn phi_int(&self, v: Vertex) -> Result<Angle, RepError> {
        let e = &self.embedding;
        let mut outer_hits = 0;
        let mut inner = 0u8;
        for d in e.in_darts(v) {
            if e.face_of(d) == e.outer_face() {
                outer_hits += 1;
            } else {
                inner += self.angles[d.0].quarters();
            }
        }
        match outer_hits {
            0 if e.graph().degree(v) > 0 => Err(RepError::NotOnOuterFace(v)),
            0 | 1 => Ok(Angle::from_quarters(inner).expect("angle sum within a full turn")),
            _ => Err(RepError::MultipleOuterOccurrences(v)),
        }
    }

    /// The angle of `v` in the outer face, if it occurs there exactly once.
    pub fn outer_angle(&self, v: Vertex) -> Result<Angle, RepError> {
        let inner = self.phi_int(v)?;
        Ok(Angle::from_quarters(4 - inner.quarters()).expect("complement of a valid angle"))
    }

    /// Restriction to a connected edge subset, merging angles of merged faces.
    pub fn restrict(&self, sub: &[EdgeId]) -> Result<(RectilinearRepresentation, Restriction), RepError> {
        let r = self.embedding.restrict(sub)?;
        let e = &self.embedding;
        let g = e.graph();
        let mut angles = vec![Angle::ZERO; r.embedding.dart_count()];
        for (j, &q) in r.edge_map.iter().enumerate() {
            for dir in 0..2 {
                let local_in = Dart(2 * j + dir);
                let global_in = Dart(2 * q + dir);
                let w = e.head(global_in);
                let mut sum = 0u8;
                let mut x = q;
                loop {
                    sum += self.angles[Dart::leaving(g, x, w).twin().0].quarters();
                    x = e.cw_pred(w, x);
                    if r.local_edge[x] != usize::MAX {
                        break;
                    }
                }
                angles[local_in.0] = Angle::from_quarters(sum.min(4)).expect("bounded");
            }
        }
        Ok((RectilinearRepresentation::new(r.embedding.clone(), angles), r))
    }

    /// The mirror representation: same angles, reversed rotations.
    pub fn reflect(&self) -> RectilinearRepresentation {
        let e = &self.embedding;
        let mirrored = e.reflect();
        let mut angles = vec![Angle::ZERO; self.angles.len()];
        for d in 0..e.dart_count() {
            let nd = e.next(Dart(d));
            angles[nd.twin().0] = self.angles[d];
        }
        RectilinearRepresentation::new(mirrored, angles)
    }

    /// Whether every angle is at least its bound; `bound` is indexed by dart.
    pub fn respects_lower_bounds(&self, bound: &[Angle]) -> bool {
        self.angles.iter().zip(bound).all(|(a, b)| a >= b)
    }

    /// Whether every angle at a vertex of `chi` is 90 or 270 degrees.
    pub fn respects_chi(&self, chi: &[Vertex]) -> bool {
        chi.iter().all(|&v| {
            self.embedding
                .in_darts(v)
                .all(|d| matches!(self.angles[d.0].quarters(), 1 | 3))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::outerplane_embedding;
    use crate::graph::Graph;

    fn rectangle() -> RectilinearRepresentation {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let e = outerplane_embedding(&g).unwrap().into_inner();
        let angles = (0..8)
            .map(|d| if e.face_of(Dart(d)) == e.outer_face() { Angle::REFLEX } else { Angle::RIGHT })
            .collect();
        RectilinearRepresentation::new(e, angles)
    }

    #[test]
    fn rectangle_validates() {
        let r = rectangle();
        assert!(r.validate());
        assert_eq!(r.phi_int(0).unwrap(), Angle::RIGHT);
    }

    #[test]
    fn flat_square_fails() {
        let mut r = rectangle();
        for d in 0..8 {
            if r.embedding.face_of(Dart(d)) != r.embedding.outer_face() {
                r.angles[d] = Angle::STRAIGHT;
            }
        }
        assert!(!r.validate());
    }

    #[test]
    fn triangle_never_validates() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let e = outerplane_embedding(&g).unwrap().into_inner();
        let inner: Vec<usize> = (0..6).filter(|&d| e.face_of(Dart(d)) != e.outer_face()).collect();
        for code in 0..27u32 {
            let mut angles = vec![Angle::ZERO; 6];
            let mut c = code;
            for &d in &inner {
                let q = (c % 3 + 1) as u8;
                c /= 3;
                angles[d] = Angle::from_quarters(q).unwrap();
                let v = e.head(Dart(d));
                let out = e.in_darts(v).find(|&x| x.0 != d).unwrap();
                angles[out.0] = Angle::from_quarters(4 - q).unwrap();
            }
            let r = RectilinearRepresentation::new(e.clone(), angles);
            assert!(!r.validate());
        }
    }

    #[test]
    fn single_edge_endpoints_have_no_interior() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let e = outerplane_embedding(&g).unwrap().into_inner();
        let r = RectilinearRepresentation::new(e, vec![Angle::FULL; 2]);
        assert!(r.validate());
        assert_eq!(r.phi_int(1).unwrap(), Angle::ZERO);
    }

    #[test]
    fn reflection_stays_valid() {
        let r = rectangle();
        assert!(r.reflect().validate());
        assert_eq!(r.reflect().reflect(), r);
    }
}
