//! The same graph, three outer faces, different answers.

use rectiplanar::embedding::outerplane_embedding;
use rectiplanar::fixed::test_fixed;
use rectiplanar::oracle::chord6;

fn main() {
    let g = chord6();
    let o = outerplane_embedding(&g).unwrap();
    for f in 0..o.face_count() {
        let e = o.with_outer_face(f).unwrap();
        let verdict = test_fixed(&e).unwrap();
        println!("outer face {:?}: {}", e.face_vertices(f), if verdict.is_some() { "drawable" } else { "not drawable" });
    }
}
