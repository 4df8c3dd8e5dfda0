//! Instance families: exhaustive small outerplanar graphs, seeded random ones,
//! and a few named shapes.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::outerplane_embedding;
use crate::graph::{Graph, Vertex};

/// `k` unit squares in a row: `2(k + 1)` vertices, `3k + 1` edges.
pub fn ladder(k: usize) -> Graph {
    let top = |i: usize| i;
    let bottom = |i: usize| k + 1 + i;
    let mut edges = Vec::with_capacity(3 * k + 1);
    for i in 0..k {
        edges.push((top(i), top(i + 1)));
        edges.push((bottom(i), bottom(i + 1)));
    }
    for i in 0..=k {
        edges.push((top(i), bottom(i)));
    }
    Graph::new(2 * (k + 1), &edges).expect("ladder is simple")
}

/// The hexagon 0..5 with the chord 0-3 (edge id 6).
pub fn chord6() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).expect("simple")
}

/// Every connected outerplanar graph on `n` vertices with maximum degree 4,
/// one per isomorphism class.
pub fn enumerate_outerplanar(n: usize) -> Vec<Graph> {
    assert!(n <= 12, "canonical forms are limited to 12 vertices");
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Graph> = vec![Graph::new(1, &[]).expect("single vertex")];
    for size in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << size) {
                if mask.count_ones() > 4 {
                    continue;
                }
                let nb: Vec<Vertex> = (0..size).filter(|&v| mask & (1 << v) != 0).collect();
                if nb.iter().any(|&v| g.degree(v) >= 4) {
                    continue;
                }
                let mut edges = g.edges().to_vec();
                edges.extend(nb.iter().map(|&v| (v, size)));
                let h = Graph::new(size + 1, &edges).expect("new vertex adds no parallel edges");
                if outerplane_embedding(&h).is_err() {
                    continue;
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Adjacency bit string under a canonical labelling (exact for up to 12 vertices).
pub fn canonical_form(g: &Graph) -> u128 {
    let n = g.vertex_count();
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).fold(0u16, |m, w| m | (1 << w)))
        .collect();
    let colors = refine(&adj, vec![0; n]);
    let mut best = u128::MAX;
    search_canonical(&adj, colors, &mut best);
    best
}

fn refine(adj: &[u16], mut colors: Vec<usize>) -> Vec<usize> {
    let n = adj.len();
    loop {
        let mut sig: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] & (1 << w) != 0).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                c += 1;
            }
            next[sig[i].2] = c;
        }
        let before = colors.iter().collect::<HashSet<_>>().len();
        let after = c + usize::from(n > 0);
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn search_canonical(adj: &[u16], colors: Vec<usize>, best: &mut u128) {
    let n = adj.len();
    let mut count = vec![0; n];
    for &c in &colors {
        count[c] += 1;
    }
    let Some(cell) = (0..n).find(|&c| count[c] > 1) else {
        let mut label = vec![0; n];
        for v in 0..n {
            label[colors[v]] = v;
        }
        let mut bits = 0u128;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[label[i]] & (1 << label[j]) != 0 {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        *best = (*best).min(bits);
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == cell) {
        let split: Vec<usize> = (0..n)
            .map(|w| 2 * colors[w] + usize::from(colors[w] == cell && w != v))
            .collect();
        search_canonical(adj, refine(adj, split), best);
    }
}

/// A seeded random connected outerplanar graph on `n` vertices.
///
/// Grows from one vertex by attaching pendant edges, polygons glued along an
/// edge of the outer face, and polygons hanging from a single vertex.
pub fn random_outerplanar(n: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    // number of sides of each edge still on the outer face
    let mut outer_sides: Vec<u8> = Vec::new();
    let mut deg = vec![0usize; n.max(1)];
    let mut size = 1;
    let mut stalls = 0;
    while size < n {
        let left = n - size;
        let op = rng.gen_range(0..3);
        let done = match op {
            0 => {
                let cands: Vec<Vertex> = (0..size).filter(|&v| deg[v] < max_degree).collect();
                cands.choose(&mut rng).map(|&v| {
                    edges.push((v, size));
                    outer_sides.push(2);
                    deg[v] += 1;
                    deg[size] += 1;
                    size += 1;
                })
            }
            1 => {
                let cands: Vec<usize> = (0..edges.len())
                    .filter(|&e| {
                        outer_sides[e] > 0 && deg[edges[e].0] < max_degree && deg[edges[e].1] < max_degree
                    })
                    .collect();
                cands.choose(&mut rng).map(|&e| {
                    let (a, b) = edges[e];
                    let k = rng.gen_range(1..=4usize.min(left));
                    outer_sides[e] -= 1;
                    let mut prev = a;
                    for _ in 0..k {
                        edges.push((prev, size));
                        outer_sides.push(1);
                        deg[prev] += 1;
                        deg[size] += 1;
                        prev = size;
                        size += 1;
                    }
                    edges.push((prev, b));
                    outer_sides.push(1);
                    deg[prev] += 1;
                    deg[b] += 1;
                })
            }
            _ => {
                if left < 2 {
                    None
                } else {
                    let cands: Vec<Vertex> = (0..size).filter(|&v| deg[v] + 2 <= max_degree).collect();
                    cands.choose(&mut rng).map(|&v| {
                        let k = rng.gen_range(2..=5usize.min(left));
                        let mut prev = v;
                        for _ in 0..k {
                            edges.push((prev, size));
                            outer_sides.push(1);
                            deg[prev] += 1;
                            deg[size] += 1;
                            prev = size;
                            size += 1;
                        }
                        edges.push((prev, v));
                        outer_sides.push(1);
                        deg[prev] += 1;
                        deg[v] += 1;
                    })
                }
            }
        };
        if done.is_none() {
            stalls += 1;
            assert!(stalls < 10_000, "no room to grow under the degree cap");
        }
    }
    Graph::new(n.max(1), &edges).expect("growth keeps the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_outerplanar(1).len(), 1);
        assert_eq!(enumerate_outerplanar(2).len(), 1);
        // P3 and C3
        assert_eq!(enumerate_outerplanar(3).len(), 2);
        // P4, star, C4, paw, diamond (K1,3 is the star)
        assert_eq!(enumerate_outerplanar(4).len(), 5);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&star));
    }

    #[test]
    fn random_graphs_are_outerplanar_and_capped() {
        for seed in 0..200 {
            let g = random_outerplanar(1 + (seed as usize % 15), 4, seed);
            assert!(g.is_connected());
            assert!(g.max_degree() <= 4);
            assert!(outerplane_embedding(&g).is_ok());
        }
        assert_eq!(random_outerplanar(1, 4, 0).vertex_count(), 1);
    }

    #[test]
    fn ladder_shape() {
        let g = ladder(3);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 10));
    }
}
