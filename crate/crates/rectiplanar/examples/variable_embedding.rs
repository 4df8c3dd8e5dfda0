//! Free-embedding test on a few small graphs.

use rectiplanar::graph::Graph;
use rectiplanar::variable::test_variable;

fn main() {
    let cases: [(&str, usize, &[(usize, usize)]); 4] = [
        ("square", 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        ("triangle", 3, &[(0, 1), (1, 2), (2, 0)]),
        ("two squares at a vertex", 7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]),
        ("star", 5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    ];
    for (name, n, edges) in cases {
        let g = Graph::new(n, edges).unwrap();
        match test_variable(&g).unwrap() {
            Some(rep) => {
                let e = &rep.embedding;
                println!("{name}: drawable, outer face {:?}", e.face_vertices(e.outer_face()));
            }
            None => println!("{name}: no rectilinear drawing"),
        }
    }
}
