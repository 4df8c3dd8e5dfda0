//! Draw a graph on the grid and write it as SVG.
//!
//! `cargo run --example draw_svg -- out.svg`

use rectiplanar::drawing::{export_svg, realize, validate_geometry};
use rectiplanar::oracle::ladder;
use rectiplanar::variable::test_variable;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "ladder.svg".into());
    let g = ladder(3);
    let rep = test_variable(&g).unwrap().expect("ladders are drawable");
    let d = realize(&rep).unwrap();
    assert!(validate_geometry(&d, &rep));
    for (v, p) in d.coords.iter().enumerate() {
        println!("{v}: {p:?}");
    }
    std::fs::write(&path, export_svg(&d, 40)).unwrap();
    println!("wrote {path}");
}
