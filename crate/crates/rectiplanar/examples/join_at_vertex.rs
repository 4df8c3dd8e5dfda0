//! Glue two drawn squares at a shared corner.

use rectiplanar::graph::Graph;
use rectiplanar::rectirep::{join, JoinPart};
use rectiplanar::variable::test_variable;
use rectiplanar::Angle;

fn main() {
    let square = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let rep = test_variable(&square).unwrap().unwrap();
    let parts = [
        JoinPart { rep: &rep, vertex_map: &[0, 1, 2, 3] },
        JoinPart { rep: &rep, vertex_map: &[0, 4, 5, 6] },
    ];
    let rot = rep.embedding.rotation(0);
    let order: Vec<(usize, usize)> = rot.iter().map(|&e| (0, e)).chain(rot.iter().map(|&e| (1, e))).collect();
    // each square keeps its 90 degree corner; the two gaps between them share the rest
    for gaps in [[Angle::RIGHT, Angle::RIGHT], [Angle::STRAIGHT, Angle::RIGHT]] {
        let inner = rep.angle(rectiplanar::Dart::leaving(&square, rot[1], 0).twin());
        let angles = [gaps[0], inner, gaps[1], inner];
        match join(&parts, 0, &order, &angles) {
            Ok(j) => println!("gaps {gaps:?}: joined, valid = {}", j.validate()),
            Err(e) => println!("gaps {gaps:?}: rejected, {e}"),
        }
    }
}
