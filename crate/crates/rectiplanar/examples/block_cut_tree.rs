//! Blocks and cut vertices of a small outerplanar graph.

use rectiplanar::graph::{block_cut_tree, Graph};

fn main() {
    let g = Graph::new(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
    let bct = block_cut_tree(&g).unwrap();
    for (i, b) in bct.blocks.iter().enumerate() {
        println!("block {i}: edges {:?}", b.edges);
    }
    let cuts: Vec<usize> = (0..g.vertex_count()).filter(|&v| bct.is_cut_vertex(v)).collect();
    println!("cut vertices: {cuts:?}");
}
