//! Solving 4a + 3b + 2c + d = t with bounded counts.

use rectiplanar::variable::{dio_feasible, DioInstance};

fn main() {
    for (a, b, c1, d, t) in [(2, 1, 0, 0, 11), (0, 0, 3, 0, 7), (1, 1, 1, 1, 9), (5, 0, 0, 0, 21)] {
        let inst = DioInstance { a, b, c1, c2: 0, d, t };
        match dio_feasible(&inst) {
            Some(s) => println!("{inst:?}\n  -> 4*{} + 3*{} + 2*{} + {} = {t}", s.a, s.b, s.c, s.d),
            None => println!("{inst:?}\n  -> no solution"),
        }
    }
}
