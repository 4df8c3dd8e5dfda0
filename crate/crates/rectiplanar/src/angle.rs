use std::fmt;

/// An angle measured in quarter turns (0 = 0°, 1 = 90°, ..., 4 = 360°).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Angle(u8);

impl Angle {
    pub const ZERO: Angle = Angle(0);
    pub const RIGHT: Angle = Angle(1);
    pub const STRAIGHT: Angle = Angle(2);
    pub const REFLEX: Angle = Angle(3);
    pub const FULL: Angle = Angle(4);

    /// Builds an angle from quarter turns, rejecting values above 4.
    pub fn from_quarters(q: u8) -> Option<Angle> {
        (q <= 4).then_some(Angle(q))
    }

    /// Builds an angle from a multiple of 90 degrees.
    pub fn from_degrees(deg: u32) -> Option<Angle> {
        if deg % 90 != 0 || deg > 360 {
            return None;
        }
        Some(Angle((deg / 90) as u8))
    }

    pub fn quarters(self) -> u8 {
        self.0
    }

    pub fn degrees(self) -> u32 {
        self.0 as u32 * 90
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degrees())
    }
}

/// A set of angles in {0°, 90°, 180°, 270°}, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AngleSet(u8);

impl AngleSet {
    pub const EMPTY: AngleSet = AngleSet(0);

    pub fn single(a: Angle) -> AngleSet {
        let mut s = AngleSet::EMPTY;
        s.insert(a);
        s
    }

    pub fn from_bits(bits: u8) -> AngleSet {
        AngleSet(bits & 0b1111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn insert(&mut self, a: Angle) {
        debug_assert!(a.0 <= 3);
        self.0 |= 1 << a.0;
    }

    pub fn contains(self, a: Angle) -> bool {
        a.0 <= 3 && self.0 & (1 << a.0) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: AngleSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: AngleSet) -> AngleSet {
        AngleSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AngleSet) -> AngleSet {
        AngleSet(self.0 & other.0)
    }

    /// Angles in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Angle> {
        (0..4u8).filter(move |q| self.0 & (1 << q) != 0).map(Angle)
    }

    pub fn min(self) -> Option<Angle> {
        self.iter().next()
    }
}

impl fmt::Debug for AngleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Angle> for AngleSet {
    fn from_iter<I: IntoIterator<Item = Angle>>(iter: I) -> Self {
        let mut s = AngleSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

/// A set of (μ, ν) pairs with both components in {90°, 180°, 270°}.
///
/// Trivial sides are not represented here; callers track triviality apart.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PairSet(u16);

impl PairSet {
    pub const EMPTY: PairSet = PairSet(0);
    pub const ALL: PairSet = PairSet(0x1ff);

    fn index(mu: u8, nu: u8) -> u16 {
        debug_assert!((1..=3).contains(&mu) && (1..=3).contains(&nu));
        ((mu - 1) * 3 + (nu - 1)) as u16
    }

    pub const fn from_bits(bits: u16) -> PairSet {
        PairSet(bits & 0x1ff)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn insert(&mut self, mu: Angle, nu: Angle) {
        self.0 |= 1 << Self::index(mu.0, nu.0);
    }

    pub fn contains(self, mu: Angle, nu: Angle) -> bool {
        if !(1..=3).contains(&mu.0) || !(1..=3).contains(&nu.0) {
            return false;
        }
        self.0 & (1 << Self::index(mu.0, nu.0)) != 0
    }

    /// Quarter-turn form of `contains`, accepting any small integers.
    pub fn has(self, mu: u8, nu: u8) -> bool {
        (1..=3).contains(&mu) && (1..=3).contains(&nu) && self.0 & (1 << Self::index(mu, nu)) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: PairSet) -> PairSet {
        PairSet(self.0 & other.0)
    }

    pub fn union(self, other: PairSet) -> PairSet {
        PairSet(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Pairs in lexicographic order of (μ, ν).
    pub fn iter(self) -> impl Iterator<Item = (Angle, Angle)> {
        (0..9u16)
            .filter(move |i| self.0 & (1 << i) != 0)
            .map(|i| (Angle(i as u8 / 3 + 1), Angle(i as u8 % 3 + 1)))
    }

    /// The μ values that occur in some pair.
    pub fn first_components(self) -> AngleSet {
        self.iter().map(|(m, _)| m).collect()
    }

    /// The same pairs with μ and ν exchanged.
    pub fn swapped(self) -> PairSet {
        let mut out = PairSet::EMPTY;
        for (m, n) in self.iter() {
            out.insert(n, m);
        }
        out
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|(m, n)| (m.degrees(), n.degrees())))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_set_roundtrip() {
        let mut s = PairSet::EMPTY;
        s.insert(Angle::RIGHT, Angle::REFLEX);
        s.insert(Angle::STRAIGHT, Angle::RIGHT);
        assert!(s.contains(Angle::RIGHT, Angle::REFLEX));
        assert!(!s.contains(Angle::REFLEX, Angle::RIGHT));
        assert_eq!(s.len(), 2);
        let sw = s.swapped();
        assert!(sw.contains(Angle::REFLEX, Angle::RIGHT));
        assert_eq!(s.first_components().iter().count(), 2);
    }

    #[test]
    fn degrees() {
        assert_eq!(Angle::from_degrees(270), Some(Angle::REFLEX));
        assert_eq!(Angle::from_degrees(45), None);
        assert_eq!(Angle::from_degrees(450), None);
    }
}
