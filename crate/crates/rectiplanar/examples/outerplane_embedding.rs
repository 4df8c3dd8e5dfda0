//! Outerplane embedding and extended dual tree of a 2x3 grid.

use rectiplanar::embedding::{extended_dual_tree, outerplane_embedding};
use rectiplanar::oracle::ladder;

fn main() {
    let g = ladder(2);
    let o = outerplane_embedding(&g).expect("ladders are outerplanar");
    println!("outer face: {:?}", o.face_vertices(o.outer_face()));
    for v in 0..g.vertex_count() {
        println!("  rotation at {v}: {:?}", o.rotation(v));
    }
    let dual = extended_dual_tree(&o).unwrap();
    println!("dual tree: {} internal nodes, {} leaves", dual.internal_count(), dual.leaf_count());
    for (s, vs) in dual.vertices.iter().enumerate() {
        println!("  node {s}: cycle {vs:?}");
    }
}
