//! Prescribed inner angles at the ends of an outer edge.

use rectiplanar::graph::Graph;
use rectiplanar::variable::{test_2con_rooted, ChiSet};
use rectiplanar::Angle;

fn main() {
    // a hexagon with a chord from 0 to 3
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
    let chi = ChiSet::new(vec![1]);
    for mu in [Angle::RIGHT, Angle::STRAIGHT, Angle::REFLEX] {
        for nu in [Angle::RIGHT, Angle::STRAIGHT, Angle::REFLEX] {
            let ok = test_2con_rooted(&g, 0, &chi, mu, nu).unwrap().is_some();
            println!("edge 0-1 with {mu} at 0 and {nu} at 1: {ok}");
        }
    }
}
