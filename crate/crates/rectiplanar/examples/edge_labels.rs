//! Which end-angle pairs each outer edge of a 2-connected graph can take.

use rectiplanar::oracle::ladder;
use rectiplanar::variable::{all_edge_labels, vertex_labels, ChiSet};

fn main() {
    let g = ladder(3);
    let chi = ChiSet::new(vec![0]);
    let labels = all_edge_labels(&g, &chi).unwrap();
    for e in 0..g.edge_count() {
        match labels.get(e) {
            Some(set) => println!("edge {e} {:?}: {:?}", g.endpoints(e), set.iter().collect::<Vec<_>>()),
            None => println!("edge {e} {:?}: chord", g.endpoints(e)),
        }
    }
    for (v, gamma) in vertex_labels(&g, &labels).iter().enumerate() {
        if let Some(s) = gamma {
            println!("vertex {v}: inner angle in {:?}", s.iter().collect::<Vec<_>>());
        }
    }
    println!("{:?}", labels.stats);
}
