//! Angles at a cut vertex, chosen so every block sees its own angles.

use crate::graph::EdgeId;

/// Corners of a vertex that must add up to a given number of quarter turns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GapSum {
    pub corners: Vec<usize>,
    pub sum: u8,
}

/// Groups the corners of a vertex by the gaps of each incident block.
///
/// Corner `j` is the angle between `rot[j - 1]` and `rot[j]`. A block's gap
/// ending at its edge `rot[p]` holds every corner after its previous edge up
/// to and including `p`; `angle(p)` is the block's angle there.
pub(crate) fn block_gaps(
    rot: &[EdgeId],
    block_of: impl Fn(EdgeId) -> usize,
    mut angle: impl FnMut(usize) -> u8,
) -> Vec<GapSum> {
    let deg = rot.len();
    let mut blocks: Vec<usize> = rot.iter().map(|&x| block_of(x)).collect();
    blocks.sort_unstable();
    blocks.dedup();
    let mut out = Vec::new();
    for b in blocks {
        let pos: Vec<usize> = (0..deg).filter(|&j| block_of(rot[j]) == b).collect();
        for (i, &p) in pos.iter().enumerate() {
            let q = pos[(i + pos.len() - 1) % pos.len()];
            let len = match (p + deg - q) % deg {
                0 => deg,
                l => l,
            };
            let corners = (0..len).map(|s| (q + 1 + s) % deg).collect();
            out.push(GapSum { corners, sum: angle(p) });
        }
    }
    out
}

/// First corner assignment (lexicographically) over `domain` meeting every gap sum.
pub(crate) fn fill_corners(deg: usize, gaps: &[GapSum], domain: &[u8]) -> Option<Vec<u8>> {
    let mut vals = vec![0u8; deg];
    // gaps become checkable once their largest corner is set
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); deg];
    for (i, gap) in gaps.iter().enumerate() {
        let last = *gap.corners.iter().max()?;
        ready[last].push(i);
    }
    fn go(j: usize, vals: &mut Vec<u8>, gaps: &[GapSum], ready: &[Vec<usize>], domain: &[u8]) -> bool {
        if j == vals.len() {
            return true;
        }
        for &x in domain {
            vals[j] = x;
            let ok = ready[j]
                .iter()
                .all(|&g| gaps[g].corners.iter().map(|&c| vals[c]).sum::<u8>() == gaps[g].sum);
            if ok && go(j + 1, vals, gaps, ready, domain) {
                return true;
            }
        }
        false
    }
    go(0, &mut vals, gaps, &ready, domain).then_some(vals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_squares_get_four_right_angles() {
        // rotation: a0 a1 b0 b1, each square has a 90 degree inner angle
        let block = |x: EdgeId| x / 2;
        let gaps = block_gaps(&[0, 1, 2, 3], block, |p| if p % 2 == 1 { 1 } else { 3 });
        assert_eq!(fill_corners(4, &gaps, &[1, 2, 3]), Some(vec![1, 1, 1, 1]));
    }

    #[test]
    fn pendant_splits_a_reflex_angle() {
        // square edges 0 and 1, pendant edge 2 inside the square's outer corner
        let block = |x: EdgeId| usize::from(x == 2);
        let gaps = block_gaps(&[0, 1, 2], block, |p| match p {
            1 => 1,
            0 => 3,
            _ => 4,
        });
        let v = fill_corners(3, &gaps, &[1, 2, 3]).unwrap();
        assert_eq!(v[1], 1);
        assert_eq!(v[0] + v[2], 3);
        assert!(fill_corners(3, &gaps, &[1, 3]).is_none());
    }
}
