//! Bounded solutions of `4a' + 3b' + 2c' + d' = t`.
//!
//! Every cycle of the dual tree needs its angle surplus `t` to be covered by
//! subgraphs flipped inside (worth 4, 3 or 2 each), by degree-2 constrained
//! vertices turned to 270 degrees (worth 2) and by free single units at the
//! remaining vertices.

/// Counts available on one cycle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DioInstance {
    /// Subgraphs whose pair sums to 360 degrees.
    pub a: u32,
    /// Subgraphs whose pair sums to 270 degrees.
    pub b: u32,
    /// Subgraphs whose pair sums to 180 degrees.
    pub c1: u32,
    /// Constrained inner vertices, each able to give two units.
    pub c2: u32,
    /// Single units available at unconstrained inner vertices.
    pub d: u32,
    pub t: u32,
}

impl DioInstance {
    pub fn c(&self) -> u32 {
        self.c1 + self.c2
    }

    fn total(&self) -> u64 {
        4 * u64::from(self.a) + 3 * u64::from(self.b) + 2 * u64::from(self.c()) + u64::from(self.d)
    }
}

/// How many units of each kind are used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DioSolution {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl DioSolution {
    pub fn value(&self) -> u64 {
        4 * u64::from(self.a) + 3 * u64::from(self.b) + 2 * u64::from(self.c) + u64::from(self.d)
    }

    /// Within the bounds of `inst` and summing to its target.
    pub fn solves(&self, inst: &DioInstance) -> bool {
        self.a <= inst.a && self.b <= inst.b && self.c <= inst.c() && self.d <= inst.d && self.value() == u64::from(inst.t)
    }
}

/// Finds a solution, or `None` if the equation has none within the bounds.
pub fn dio_feasible(inst: &DioInstance) -> Option<DioSolution> {
    let t = u64::from(inst.t);
    if t <= 10 || inst.total() <= t + 10 {
        return windowed(inst);
    }
    if !formula(inst) {
        return None;
    }
    let sol = witness(inst);
    debug_assert!(sol.solves(inst), "{inst:?} -> {sol:?}");
    Some(sol)
}

/// Enumeration over the few values a solution can take when `t` is small or
/// the counts barely exceed it.
fn windowed(inst: &DioInstance) -> Option<DioSolution> {
    let t = inst.t;
    let small = t <= 10;
    let tight = inst.total() <= u64::from(t) + 10;
    let range = |have: u32, cap: u32, slack: u32| {
        let hi = if small { have.min(cap) } else { have };
        let lo = if tight { have.saturating_sub(slack) } else { 0 };
        lo..=hi
    };
    let c = inst.c();
    for a in range(inst.a, 2, 2) {
        let ra = t.checked_sub(4 * a)?;
        for b in range(inst.b, 3, 3) {
            let Some(rb) = ra.checked_sub(3 * b) else { break };
            for c in range(c, 5, 5) {
                let Some(d) = rb.checked_sub(2 * c) else { break };
                if range(inst.d, 10, 10).contains(&d) {
                    return Some(DioSolution { a, b, c, d });
                }
            }
        }
    }
    None
}

/// Satisfiability when `t > 10` and the counts exceed `t + 10`.
fn formula(inst: &DioInstance) -> bool {
    let (a, b, c, d, t) = (inst.a, inst.b, inst.c(), inst.d, inst.t);
    match d {
        3.. => true,
        2 => c > 0 || b > 0 || t % 4 != 3,
        1 => {
            c > 0
                || (a == 0 && t % 3 != 2)
                || (b == 0 && matches!(t % 4, 0 | 1))
                || (b == 1 && t % 4 != 2)
                || b == 2
                || (a >= 1 && b >= 3)
        }
        0 => {
            (c == 0 && b == 0 && t % 4 == 0)
                || (c == 0 && b == 1 && matches!(t % 4, 0 | 3))
                || (c == 0 && b == 2 && t % 4 != 1)
                || (c == 0 && a == 0 && t % 3 == 0)
                || (c == 0 && a == 1 && t % 3 != 2)
                || (c == 0 && b >= 3 && a >= 2)
                || (c >= 1 && b == 0 && t % 2 == 0)
                || (c == 1 && a == 0 && t % 3 != 1)
                || (c >= 1 && b >= 1 && a >= 1)
                || (c >= 2 && b >= 1)
        }
    }
}

fn greedy(inst: &DioInstance) -> DioSolution {
    let t = inst.t;
    let a = inst.a.min(t / 4);
    let b = inst.b.min((t - 4 * a) / 3);
    let c = inst.c().min((t - 4 * a - 3 * b) / 2);
    let d = inst.d.min(t - 4 * a - 3 * b - 2 * c);
    DioSolution { a, b, c, d }
}

/// Largest value up to `cap` congruent to `r` modulo 3.
fn top_with_residue(cap: u32, r: u32) -> Option<u32> {
    (0..3).map(|k| cap.checked_sub(k)).find_map(|x| x.filter(|x| x % 3 == r))
}

/// Largest value up to `cap` with the given parity.
fn top_with_parity(cap: u32, p: u32) -> Option<u32> {
    (0..2).map(|k| cap.checked_sub(k)).find_map(|x| x.filter(|x| x % 2 == p))
}

/// Builds a solution for an instance satisfying the formula, case by case.
fn witness(inst: &DioInstance) -> DioSolution {
    let (a, b, c, d, t) = (inst.a, inst.b, inst.c(), inst.d, inst.t);
    let g = greedy(inst);
    if g.solves(inst) {
        return g;
    }
    let sol = |a, b, c, d| DioSolution { a, b, c, d };
    let amax = a.min(t / 4);
    if c == 0 && (d == 1 || d == 0) && b == 2 && t % 4 == 2 {
        return sol(t / 4 - 1, 2, 0, 0);
    }
    if c == 0 && d == 1 && a >= 1 && b >= 3 {
        let r = if t % 3 == 0 { 0 } else { 1 };
        if let Some(x) = top_with_residue(amax, r) {
            let rest = t - 4 * x;
            return if t % 3 == 2 { sol(x, (rest - 1) / 3, 0, 1) } else { sol(x, rest / 3, 0, 0) };
        }
    }
    if c == 0 && d == 0 {
        if a == 1 && t % 3 == 0 {
            return sol(0, t / 3, 0, 0);
        }
        if b >= 3 && a >= 2 {
            if let Some(x) = top_with_residue(amax, t % 3) {
                return sol(x, (t - 4 * x) / 3, 0, 0);
            }
        }
    }
    if d == 0 && c >= 1 && b >= 1 {
        if let Some(bp) = top_with_parity(b.min(t / 3), t % 2) {
            let rest = t - 3 * bp;
            if a >= 1 {
                if b.min(t / 3) == t / 3 {
                    match rest {
                        0 => return sol(0, bp, 0, 0),
                        2 => return sol(0, bp, 1, 0),
                        4 => return sol(1, bp, 0, 0),
                        _ => {}
                    }
                } else {
                    let ap = a.min(rest / 4);
                    return sol(ap, bp, (rest - 4 * ap) / 2, 0);
                }
            } else if c >= 2 {
                return sol(0, bp, rest / 2, 0);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(inst: &DioInstance) -> bool {
        (0..=inst.a).any(|a| {
            (0..=inst.b).any(|b| {
                (0..=inst.c()).any(|c| {
                    let v = 4 * a + 3 * b + 2 * c;
                    v <= inst.t && inst.t - v <= inst.d
                })
            })
        })
    }

    fn inst(a: u32, b: u32, c: u32, d: u32, t: u32) -> DioInstance {
        DioInstance { a, b, c1: c, c2: 0, d, t }
    }

    #[test]
    fn listed_examples() {
        assert_eq!(dio_feasible(&inst(0, 0, 0, 0, 0)), Some(DioSolution::default()));
        let s = dio_feasible(&inst(5, 0, 0, 3, 12)).unwrap();
        assert!(s.solves(&inst(5, 0, 0, 3, 12)));
        assert_eq!(dio_feasible(&inst(10, 0, 0, 2, 15)), None);
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for a in 0..=15 {
            for b in 0..=15 {
                for c in 0..=15 {
                    for d in 0..=15 {
                        for t in 0..=80 {
                            let i = inst(a, b, c, d, t);
                            let got = dio_feasible(&i);
                            assert_eq!(got.is_some(), brute(&i), "{i:?}");
                            if let Some(s) = got {
                                assert!(s.solves(&i), "{i:?} -> {s:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}
