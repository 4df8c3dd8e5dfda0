//! Cross-check the linear-time test against exhaustive search.

use rectiplanar::oracle::{enumerate_outerplanar, oracle_variable, DEFAULT_CAP};
use rectiplanar::variable::test_variable;

fn main() {
    for n in 1..=7 {
        let graphs = enumerate_outerplanar(n);
        let mut drawable = 0;
        for g in &graphs {
            let fast = test_variable(g).unwrap().is_some();
            let slow = oracle_variable(g, &[], None, DEFAULT_CAP).unwrap().feasible;
            assert_eq!(fast, slow, "{:?}", g.edges());
            drawable += usize::from(fast);
        }
        println!("n = {n}: {} graphs, {drawable} drawable, all verdicts agree", graphs.len());
    }
}
