//! Angle values along one cycle of the dual tree with a fixed embedding.
//!
//! The cycle is `u_0, u_1, ..., u_k` with the root edge `u_k u_0`. Position
//! `i` (1..=k) is the edge `u_{i-1} u_i` and the subgraph hanging from it.
//! A non-trivial subgraph contributes `mu_i` at `u_{i-1}` and `nu_i` at `u_i`.

use crate::angle::PairSet;

/// Pairs with both angles in {90, 180}: the only ones a hanging subgraph can use.
pub const SMALL_PAIRS: PairSet = PairSet::from_bits(0b000_011_011);

/// The subgraph hanging from one cycle edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Trivial,
    NonTrivial { pairs: PairSet, inside: bool },
}

impl Side {
    pub fn is_trivial(self) -> bool {
        matches!(self, Side::Trivial)
    }
}

/// One cycle with its lower bounds.
#[derive(Clone, Debug)]
pub struct NodeInstance {
    /// `sides[i - 1]` describes position `i`.
    pub sides: Vec<Side>,
    /// Lower bound at `u_i` in the face of the cycle next to the root edge, i = 0..=k.
    pub ell_face: Vec<u8>,
    /// Lower bound at `u_i` in the outer face of the subgraph, i = 0..=k (ends unused).
    pub ell_out: Vec<u8>,
}

/// Values satisfying the per-cycle conditions; index 0 of `mu`/`nu` is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSequence {
    pub rho: Vec<u8>,
    pub mu: Vec<u8>,
    pub nu: Vec<u8>,
}

/// Per-position bounds on the angles in the cycle's face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoBounds {
    pub lower: Vec<i32>,
    pub upper: Vec<i32>,
}

/// Boundary values at positions 1 and k: (mu_1, nu_1, mu_k, nu_k).
pub type EndTuple = [u8; 4];

/// Everything about a cycle that does not depend on the target pair.
#[derive(Clone, Debug)]
pub struct Plan {
    k: usize,
    /// Chosen (mu_i, nu_i) for i = 2..=k-1, index i.
    mid: Vec<(u8, u8)>,
    ends: [Vec<(u8, u8)>; 2],
    inside: [bool; 2],
    ell_face: Vec<u8>,
    ell_out: Vec<u8>,
    sum_lower_inner: i32,
    sum_upper_mid: i32,
    sigma_mid: i32,
}

fn alpha(inst: &NodeInstance, h: usize) -> i32 {
    4 - i32::from(inst.ell_face[h]) - i32::from(inst.ell_out[h])
}

fn candidates(side: Side) -> Vec<(u8, u8)> {
    match side {
        Side::Trivial => vec![(0, 0)],
        Side::NonTrivial { pairs, .. } => (pairs.intersection(SMALL_PAIRS))
            .iter()
            .map(|(m, n)| (m.quarters(), n.quarters()))
            .collect(),
    }
}

impl Plan {
    /// Fixes the middle values; `None` when no assignment exists for any pair.
    pub fn new(inst: &NodeInstance) -> Option<Plan> {
        let k = inst.sides.len();
        assert!(k >= 2, "a cycle has at least three vertices");
        let nt = |i: usize| (1..=k).contains(&i) && !inst.sides[i - 1].is_trivial();
        for h in 1..k {
            if nt(h) && nt(h + 1) && (inst.ell_face[h] > 1 || inst.ell_out[h] > 1) {
                return None;
            }
        }
        let mut mid = vec![(0u8, 0u8); k + 1];
        for i in 2..k {
            let side = inst.sides[i - 1];
            if side.is_trivial() {
                continue;
            }
            let cands = candidates(side);
            let pick = match (nt(i - 1), nt(i + 1)) {
                (false, false) => cands
                    .into_iter()
                    .filter(|&(m, n)| i32::from(m) <= alpha(inst, i - 1) && i32::from(n) <= alpha(inst, i))
                    .min_by_key(|&(m, n)| (m + n, m)),
                (true, true) => cands.into_iter().find(|&p| p == (1, 1)),
                (true, false) => cands
                    .into_iter()
                    .filter(|&(m, n)| m == 1 && i32::from(n) <= alpha(inst, i))
                    .min_by_key(|&(_, n)| n),
                (false, true) => cands
                    .into_iter()
                    .filter(|&(m, n)| n == 1 && i32::from(m) <= alpha(inst, i - 1))
                    .min_by_key(|&(m, _)| m),
            };
            mid[i] = pick?;
        }
        let upper_at = |i: usize| {
            4 - i32::from(inst.ell_out[i]) - i32::from(mid[i].1) - i32::from(mid[i + 1].0)
        };
        let mut sum_upper_mid = 0;
        for i in 2..k.saturating_sub(1) {
            let u = upper_at(i);
            if i32::from(inst.ell_face[i]) > u {
                return None;
            }
            sum_upper_mid += u;
        }
        let sigma_mid = (2..k)
            .filter(|&i| matches!(inst.sides[i - 1], Side::NonTrivial { inside: true, .. }))
            .map(|i| i32::from(mid[i].0 + mid[i].1))
            .sum();
        let inside_at = |i: usize| matches!(inst.sides[i - 1], Side::NonTrivial { inside: true, .. });
        Some(Plan {
            k,
            mid,
            ends: [candidates(inst.sides[0]), candidates(inst.sides[k - 1])],
            inside: [inside_at(1), inside_at(k)],
            ell_face: inst.ell_face.clone(),
            ell_out: inst.ell_out.clone(),
            sum_lower_inner: (1..k).map(|i| i32::from(inst.ell_face[i])).sum(),
            sum_upper_mid,
            sigma_mid,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// First boundary tuple admitting a solution for the target pair (mu, nu).
    pub fn solve(&self, mu: u8, nu: u8) -> Option<EndTuple> {
        let k = self.k;
        let (mu, nu) = (i32::from(mu), i32::from(nu));
        let alpha = |h: usize| 4 - i32::from(self.ell_face[h]) - i32::from(self.ell_out[h]);
        for &(m1, n1) in &self.ends[0] {
            if i32::from(m1) + i32::from(self.ell_face[0]) > mu {
                continue;
            }
            for &(mk, nk) in &self.ends[1] {
                if i32::from(nk) + i32::from(self.ell_face[k]) > nu {
                    continue;
                }
                let mu2 = if k == 2 { mk } else { self.mid[2].0 };
                let nu_km1 = if k == 2 { n1 } else { self.mid[k - 1].1 };
                if i32::from(n1 + mu2) > alpha(1) || i32::from(nu_km1 + mk) > alpha(k - 1) {
                    continue;
                }
                let t = [m1, n1, mk, nk];
                let (lower, upper) = self.bounds(&t, mu, nu);
                let sigma = self.sigma(&t);
                let target = 2 * (k as i32 - 1);
                if lower + sigma <= target && target <= upper + sigma {
                    return Some(t);
                }
            }
        }
        None
    }

    fn sigma(&self, t: &EndTuple) -> i32 {
        let mut s = self.sigma_mid;
        if self.inside[0] {
            s += i32::from(t[0] + t[1]);
        }
        if self.inside[1] {
            s += i32::from(t[2] + t[3]);
        }
        s
    }

    fn upper_end(&self, i: usize, t: &EndTuple) -> i32 {
        let (_, nu_i, mu_next) = self.pair_at(i, t);
        4 - i32::from(self.ell_out[i]) - i32::from(nu_i) - i32::from(mu_next)
    }

    /// (mu_i, nu_i, mu_{i+1}) with the tuple substituted at positions 1 and k.
    fn pair_at(&self, i: usize, t: &EndTuple) -> (u8, u8, u8) {
        let get = |j: usize| -> (u8, u8) {
            if j == 1 {
                (t[0], t[1])
            } else if j == self.k {
                (t[2], t[3])
            } else if j > self.k {
                (0, 0)
            } else {
                self.mid[j]
            }
        };
        let (m, n) = get(i);
        (m, n, get(i + 1).0)
    }

    fn bounds(&self, t: &EndTuple, mu: i32, nu: i32) -> (i32, i32) {
        let k = self.k;
        let l0 = mu - i32::from(t[0]);
        let lk = nu - i32::from(t[3]);
        let lower = self.sum_lower_inner + l0 + lk;
        let mut upper = self.sum_upper_mid + l0 + lk + self.upper_end(1, t);
        if k >= 3 {
            upper += self.upper_end(k - 1, t);
        }
        (lower, upper)
    }

    /// Per-position bounds for a tuple.
    pub fn rho_bounds(&self, t: &EndTuple, mu: u8, nu: u8) -> RhoBounds {
        let k = self.k;
        let mut lower = vec![0; k + 1];
        let mut upper = vec![0; k + 1];
        lower[0] = i32::from(mu) - i32::from(t[0]);
        upper[0] = lower[0];
        lower[k] = i32::from(nu) - i32::from(t[3]);
        upper[k] = lower[k];
        for i in 1..k {
            lower[i] = i32::from(self.ell_face[i]);
            upper[i] = self.upper_end(i, t);
        }
        RhoBounds { lower, upper }
    }

    /// Full value sequence for a tuple accepted by [`solve`](Self::solve).
    pub fn sequence(&self, t: &EndTuple, mu: u8, nu: u8) -> ValueSequence {
        let k = self.k;
        let mut mus = vec![0; k + 1];
        let mut nus = vec![0; k + 1];
        for i in 1..=k {
            let (m, n, _) = self.pair_at(i, t);
            mus[i] = m;
            nus[i] = n;
        }
        let b = self.rho_bounds(t, mu, nu);
        let lower: i32 = b.lower.iter().sum();
        let mut slack = 2 * (k as i32 - 1) - self.sigma(t) - lower;
        debug_assert!(slack >= 0);
        let mut rho = vec![0; k + 1];
        for i in 0..=k {
            let r = b.upper[i].min(b.lower[i] + slack);
            slack -= r - b.lower[i];
            rho[i] = r as u8;
        }
        debug_assert_eq!(slack, 0);
        ValueSequence { rho, mu: mus, nu: nus }
    }
}

/// Searches values for one cycle and target pair; `None` if there are none.
pub fn find_values_fixed(inst: &NodeInstance, mu: u8, nu: u8) -> Option<ValueSequence> {
    let plan = Plan::new(inst)?;
    let t = plan.solve(mu, nu)?;
    Some(plan.sequence(&t, mu, nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_trivial(k: usize) -> NodeInstance {
        NodeInstance { sides: vec![Side::Trivial; k], ell_face: vec![1; k + 1], ell_out: vec![1; k + 1] }
    }

    #[test]
    fn rectangle() {
        let s = find_values_fixed(&all_trivial(3), 1, 1).unwrap();
        assert_eq!(s.rho, vec![1, 1, 1, 1]);
        assert!(find_values_fixed(&all_trivial(3), 3, 3).is_none());
    }

    #[test]
    fn hexagon_absorbs_slack() {
        let s = find_values_fixed(&all_trivial(5), 1, 1).unwrap();
        assert_eq!(s.rho.iter().map(|&r| i32::from(r)).sum::<i32>(), 8);
        assert!(s.rho.iter().all(|&r| (1..=3).contains(&r)));
    }

    #[test]
    fn triangle_has_no_values() {
        for mu in 1..=3 {
            for nu in 1..=3 {
                assert!(find_values_fixed(&all_trivial(2), mu, nu).is_none());
            }
        }
    }

    #[test]
    fn small_pairs_mask() {
        let v: Vec<(u8, u8)> = SMALL_PAIRS.iter().map(|(a, b)| (a.quarters(), b.quarters())).collect();
        assert_eq!(v, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }
}
