//! One cycle of the dual tree when subgraphs may flip inside it.
//!
//! The cycle is `u_0, ..., u_k` with root edge `u_k u_0`; position `i`
//! (1..=k) is the edge `u_{i-1} u_i` and the subgraph hanging from it, which
//! contributes `mu_i` at `u_{i-1}` and `nu_i` at `u_i`. Angles are quarter turns.

use crate::angle::PairSet;
use crate::fixed::SMALL_PAIRS;

use super::dio::{dio_feasible, DioInstance, DioSolution};

/// The subgraph hanging from one cycle edge, with the pairs it admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hanging {
    Trivial,
    NonTrivial(PairSet),
}

impl Hanging {
    pub fn is_trivial(self) -> bool {
        matches!(self, Hanging::Trivial)
    }

    /// Pairs usable at this position.
    pub fn options(self) -> impl Iterator<Item = (u8, u8)> {
        let (trivial, set) = match self {
            Hanging::Trivial => (true, PairSet::EMPTY),
            Hanging::NonTrivial(p) => (false, p.intersection(SMALL_PAIRS)),
        };
        trivial
            .then_some((0, 0))
            .into_iter()
            .chain(set.iter().map(|(m, n)| (m.quarters(), n.quarters())))
    }
}

/// Result of fixing the pair of a middle position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimalPair {
    Pair(u8, u8),
    /// No pair works, so the whole cycle has no representation.
    NoRepresentation,
}

/// Best pair for a position whose neighbours on both sides are also hanging subgraphs.
pub fn optimal_pair(prev_trivial: bool, this: Hanging, next_trivial: bool) -> OptimalPair {
    if this.is_trivial() {
        return OptimalPair::Pair(0, 0);
    }
    let opts = this.options();
    let pick = match (prev_trivial, next_trivial) {
        (true, true) => opts.min_by_key(|&(m, n)| (m + n, m)),
        (false, false) => opts.into_iter().find(|&p| p == (1, 1)),
        (false, true) => opts.filter(|&(m, _)| m == 1).min_by_key(|&(_, n)| n),
        (true, false) => opts.filter(|&(_, n)| n == 1).min_by_key(|&(m, _)| m),
    };
    pick.map_or(OptimalPair::NoRepresentation, |(m, n)| OptimalPair::Pair(m, n))
}

/// Size class of a non-trivial subgraph: the sum of its pair (2, 3 or 4).
pub fn size_class(nontrivial: bool, pair: (u8, u8)) -> Option<u8> {
    nontrivial.then_some(pair.0 + pair.1)
}

/// Free values at the two ends of the cycle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PromisingSequence {
    pub mu1: u8,
    pub nu1: u8,
    pub muk: u8,
    pub nuk: u8,
    pub rho0: u8,
    pub rhok: u8,
}

/// What a cycle looks like once the middle positions carry their optimal pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleSummary {
    pub k: usize,
    /// Positions 1 and k.
    pub ends: [Hanging; 2],
    /// Whether `u_0` and `u_k` are constrained.
    pub chi_ends: [bool; 2],
    /// Whether `u_1` and `u_{k-1}` are constrained.
    pub chi_next: [bool; 2],
    /// Size classes 4, 3, 2 over positions 2..k-1.
    pub a: u32,
    pub b: u32,
    pub c1: u32,
    /// Constrained vertices among `u_1..u_{k-1}`.
    pub c2: u32,
    /// Units at unconstrained `u_2..u_{k-2}`.
    pub d_mid: u32,
    /// `mu_2` and `nu_{k-1}` of the optimal sequence (unused when k = 2).
    pub mu2: u8,
    pub nu_km1: u8,
}

/// A promising sequence that extends, with the counts it uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub seq: PromisingSequence,
    pub sol: DioSolution,
}

/// Witness per target pair, indexed like [`PairSet`].
pub type PairWitnesses = [Option<PairWitness>; 9];

pub(crate) fn pair_slot(mu: u8, nu: u8) -> usize {
    usize::from(mu - 1) * 3 + usize::from(nu - 1)
}

pub fn witnesses_to_set(w: &PairWitnesses) -> PairSet {
    let mut bits = 0u16;
    for (i, x) in w.iter().enumerate() {
        if x.is_some() {
            bits |= 1 << i;
        }
    }
    PairSet::from_bits(bits)
}

impl CycleSummary {
    /// Conditions on the end values that do not involve the target pair.
    fn ends_fit(&self, nu1: u8, muk: u8) -> bool {
        if self.k == 2 {
            nu1 + muk <= 2
        } else {
            nu1 + self.mu2 <= 2 && self.nu_km1 + muk <= 2
        }
    }

    /// The equation to solve for one choice of end values.
    pub fn instance(&self, s: &PromisingSequence) -> Option<DioInstance> {
        let mut inst = DioInstance { a: self.a, b: self.b, c1: self.c1, c2: self.c2, d: self.d_mid, t: 0 };
        for (nt, pair) in [(!self.ends[0].is_trivial(), (s.mu1, s.nu1)), (!self.ends[1].is_trivial(), (s.muk, s.nuk))] {
            match size_class(nt, pair) {
                Some(4) => inst.a += 1,
                Some(3) => inst.b += 1,
                Some(2) => inst.c1 += 1,
                _ => {}
            }
        }
        let unit = |x: u8, y: u8| u32::from(2 - x - y);
        if self.k == 2 {
            if !self.chi_next[0] {
                inst.d += unit(s.nu1, s.muk);
            }
        } else {
            if !self.chi_next[0] {
                inst.d += unit(s.nu1, self.mu2);
            }
            if !self.chi_next[1] {
                inst.d += unit(self.nu_km1, s.muk);
            }
        }
        let t = self.k as i64 - 1 - i64::from(s.rho0) - i64::from(s.rhok);
        inst.t = u32::try_from(t).ok()?;
        Some(inst)
    }

    /// Finds, for every target pair, an extensible promising sequence.
    pub fn solve(&self) -> PairWitnesses {
        let mut out: PairWitnesses = [None; 9];
        let rho_ok = |chi: bool, r: u8| !chi || r != 2;
        for (mu1, nu1) in self.ends[0].options() {
            for (muk, nuk) in self.ends[1].options() {
                if !self.ends_fit(nu1, muk) {
                    continue;
                }
                for rho0 in (1..=3 - mu1).filter(|&r| rho_ok(self.chi_ends[0], r)) {
                    for rhok in (1..=3 - nuk).filter(|&r| rho_ok(self.chi_ends[1], r)) {
                        let slot = pair_slot(mu1 + rho0, nuk + rhok);
                        if out[slot].is_some() {
                            continue;
                        }
                        let seq = PromisingSequence { mu1, nu1, muk, nuk, rho0, rhok };
                        let Some(inst) = self.instance(&seq) else { continue };
                        if let Some(sol) = dio_feasible(&inst) {
                            out[slot] = Some(PairWitness { seq, sol });
                        }
                    }
                }
            }
        }
        out
    }
}

/// All tuples of end values in {0,1,2}^4 x {1,2,3}^2 that survive the
/// per-cycle conditions for the target pair.
pub fn promising_sequences(summary: &CycleSummary, mu: u8, nu: u8) -> Vec<PromisingSequence> {
    let mut out = Vec::new();
    let admits = |h: Hanging, m: u8, n: u8| match h {
        Hanging::Trivial => m == 0 && n == 0,
        Hanging::NonTrivial(p) => m.min(n) > 0 && p.has(m, n),
    };
    for mu1 in 0..3 {
        for nu1 in 0..3 {
            for muk in 0..3 {
                for nuk in 0..3 {
                    for rho0 in 1..4 {
                        for rhok in 1..4 {
                            let ok = admits(summary.ends[0], mu1, nu1)
                                && admits(summary.ends[1], muk, nuk)
                                && mu1 + rho0 == mu
                                && nuk + rhok == nu
                                && !(summary.chi_ends[0] && rho0 == 2)
                                && !(summary.chi_ends[1] && rhok == 2)
                                && summary.ends_fit(nu1, muk);
                            if ok {
                                out.push(PromisingSequence { mu1, nu1, muk, nuk, rho0, rhok });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Full description of a cycle, position by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLayout {
    /// `hanging[i - 1]` for position i.
    pub hanging: Vec<Hanging>,
    /// `chi[i]` for `u_i`, i = 0..=k.
    pub chi: Vec<bool>,
}

impl CycleLayout {
    pub fn k(&self) -> usize {
        self.hanging.len()
    }

    /// Optimal pairs of positions 2..k-1 (index i), or `None` if one is missing.
    pub fn optimal_sequence(&self) -> Option<Vec<(u8, u8)>> {
        let k = self.k();
        let mut out = vec![(0, 0); k + 1];
        for i in 2..k {
            let h = &self.hanging;
            match optimal_pair(h[i - 2].is_trivial(), h[i - 1], h[i].is_trivial()) {
                OptimalPair::Pair(m, n) => out[i] = (m, n),
                OptimalPair::NoRepresentation => return None,
            }
        }
        Some(out)
    }

    /// Summary for the end-value search, given the optimal sequence.
    pub fn summarize(&self, opt: &[(u8, u8)]) -> CycleSummary {
        let k = self.k();
        let mut s = CycleSummary {
            k,
            ends: [self.hanging[0], self.hanging[k - 1]],
            chi_ends: [self.chi[0], self.chi[k]],
            chi_next: [self.chi[1], self.chi[k - 1]],
            a: 0,
            b: 0,
            c1: 0,
            c2: (1..k).filter(|&i| self.chi[i]).count() as u32,
            d_mid: 0,
            mu2: 0,
            nu_km1: 0,
        };
        for i in 2..k {
            match size_class(!self.hanging[i - 1].is_trivial(), opt[i]) {
                Some(4) => s.a += 1,
                Some(3) => s.b += 1,
                Some(2) => s.c1 += 1,
                _ => {}
            }
        }
        for i in 2..k.saturating_sub(1) {
            if !self.chi[i] {
                s.d_mid += u32::from(2 - opt[i].1 - opt[i + 1].0);
            }
        }
        if k >= 3 {
            s.mu2 = opt[2].0;
            s.nu_km1 = opt[k - 1].1;
        }
        s
    }
}

/// Which hanging subgraphs go inside the cycle, by position (index 0 unused).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InOutAssignment(pub Vec<bool>);

impl InOutAssignment {
    pub fn inside(&self, i: usize) -> bool {
        self.0[i]
    }
}

/// Turns a solved end tuple into pairs per position, an in-out assignment
/// and the angle at every cycle vertex inside the cycle.
pub fn extend_promising(
    layout: &CycleLayout,
    opt: &[(u8, u8)],
    w: &PairWitness,
) -> (Vec<(u8, u8)>, InOutAssignment, Vec<u8>) {
    let k = layout.k();
    let mut pairs = opt.to_vec();
    pairs[1] = (w.seq.mu1, w.seq.nu1);
    pairs[k] = (w.seq.muk, w.seq.nuk);
    let c1_total = (1..=k).filter(|&i| size_class(!layout.hanging[i - 1].is_trivial(), pairs[i]) == Some(2)).count() as u32;
    let c1_in = w.sol.c.min(c1_total);
    let mut left = [w.sol.a, w.sol.b, c1_in];
    let mut inside = vec![false; k + 1];
    for i in 1..=k {
        let slot = match size_class(!layout.hanging[i - 1].is_trivial(), pairs[i]) {
            Some(4) => 0,
            Some(3) => 1,
            Some(2) => 2,
            _ => continue,
        };
        if left[slot] > 0 {
            left[slot] -= 1;
            inside[i] = true;
        }
    }
    let mut rho = vec![1u8; k + 1];
    rho[0] = w.seq.rho0;
    rho[k] = w.seq.rhok;
    let mut turned = w.sol.c - c1_in;
    let mut drain = w.sol.d;
    for i in 1..k {
        if layout.chi[i] {
            if turned > 0 {
                turned -= 1;
                rho[i] = 3;
            }
        } else {
            let room = u32::from(2 - pairs[i].1 - pairs[i + 1].0);
            let extra = drain.min(room);
            drain -= extra;
            rho[i] = 1 + extra as u8;
        }
    }
    debug_assert_eq!((turned, drain), (0, 0));
    (pairs, InOutAssignment(inside), rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> CycleLayout {
        CycleLayout { hanging: vec![Hanging::Trivial; 3], chi: vec![false; 4] }
    }

    #[test]
    fn optimal_pairs_follow_the_neighbours() {
        let sq = Hanging::NonTrivial(PairSet::from_bits(0b000_000_001));
        assert_eq!(optimal_pair(true, Hanging::Trivial, false), OptimalPair::Pair(0, 0));
        assert_eq!(optimal_pair(true, sq, true), OptimalPair::Pair(1, 1));
        let no_11 = Hanging::NonTrivial(PairSet::from_bits(0b000_011_010));
        assert_eq!(optimal_pair(false, no_11, false), OptimalPair::NoRepresentation);
        assert_eq!(optimal_pair(false, no_11, true), OptimalPair::Pair(1, 2));
    }

    #[test]
    fn rectangle_root_needs_right_angles() {
        let l = square();
        let opt = l.optimal_sequence().unwrap();
        let s = l.summarize(&opt);
        let seqs = promising_sequences(&s, 1, 1);
        assert_eq!(seqs, vec![PromisingSequence { mu1: 0, nu1: 0, muk: 0, nuk: 0, rho0: 1, rhok: 1 }]);
        let w = s.solve();
        assert_eq!(witnesses_to_set(&w), PairSet::from_bits(1));
        let (_, io, rho) = extend_promising(&l, &opt, &w[0].unwrap());
        assert_eq!(rho, vec![1, 1, 1, 1]);
        assert!(io.0.iter().all(|&x| !x));
    }

    #[test]
    fn constrained_end_skips_straight_angles() {
        let mut l = square();
        l.chi[0] = true;
        let s = l.summarize(&l.optimal_sequence().unwrap());
        let seqs = promising_sequences(&s, 2, 1);
        assert!(seqs.is_empty());
        assert!(promising_sequences(&s, 1, 1).iter().all(|q| q.rho0 == 1));
    }

    #[test]
    fn solver_matches_filtered_tuples() {
        let sets = [0b000_000_001u16, 0b000_011_011, 0b000_010_000, 0b000_001_010];
        for k in 2..6 {
            for mask in 0..(1usize << k) {
                for &bits in &sets {
                    let hanging: Vec<Hanging> = (0..k)
                        .map(|i| if mask >> i & 1 == 1 { Hanging::NonTrivial(PairSet::from_bits(bits)) } else { Hanging::Trivial })
                        .collect();
                    let l = CycleLayout { hanging, chi: vec![false; k + 1] };
                    let Some(opt) = l.optimal_sequence() else { continue };
                    let s = l.summarize(&opt);
                    let w = s.solve();
                    for mu in 1..4 {
                        for nu in 1..4 {
                            let any = promising_sequences(&s, mu, nu)
                                .iter()
                                .any(|q| s.instance(q).and_then(|i| dio_feasible(&i)).is_some());
                            assert_eq!(w[pair_slot(mu, nu)].is_some(), any);
                            if let Some(pw) = w[pair_slot(mu, nu)] {
                                let (pairs, io, rho) = extend_promising(&l, &opt, &pw);
                                let inside: u32 = (1..=k).filter(|&i| io.inside(i)).map(|i| u32::from(pairs[i].0 + pairs[i].1)).sum();
                                let total: u32 = rho.iter().map(|&r| u32::from(r)).sum::<u32>() + inside;
                                assert_eq!(total, 2 * (k as u32 - 1));
                            }
                        }
                    }
                }
            }
        }
    }
}
