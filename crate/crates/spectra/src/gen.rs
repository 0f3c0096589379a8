//! Graph generators: complete split graphs, seeded uniform G(n,m), and
//! exhaustive enumeration of labeled graphs.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("complete split graph needs q <= n, got q = {q}, n = {n}")]
    UniversalCountExceedsN { q: usize, n: usize },
    #[error("G(n,m) needs m <= n(n-1)/2, got m = {m} with maximum {max}")]
    TooManyEdges { m: usize, max: usize },
    #[error("labeled enumeration is capped at n = {max} (2^(n(n-1)/2) graphs); got n = {n}")]
    EnumerationTooLarge { n: usize, max: usize },
}

/// Largest `n` for which [`enumerate_labeled`] will run: `n = 8` already
/// means 2^28 graphs.
pub const MAX_ENUMERATION_N: usize = 8;

/// Complete split graph `CS(q, n)`: vertices `0..q` are universal, the
/// remaining `n - q` form an independent set. `m = C(q,2) + q(n-q)`.
pub fn complete_split(q: usize, n: usize) -> Result<Graph, GenError> {
    if q > n {
        return Err(GenError::UniversalCountExceedsN { q, n });
    }
    let mut edges = Vec::with_capacity(q * (q - q.min(1)) / 2 + q * (n - q));
    for u in 0..q {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(n, edges).expect("complete split edges are valid"))
}

/// Uniform random labeled graph with exactly `m` edges, deterministic per
/// seed (ChaCha8 keyed by `seed`, Floyd sampling of an m-subset of the
/// C(n,2) vertex pairs).
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(GenError::TooManyEdges { m, max: total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = std::collections::HashSet::with_capacity(m);
    for j in (total - m)..total {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let edges: Vec<(usize, usize)> = chosen.into_iter().map(pair_from_index).collect();
    Ok(Graph::from_edge_list(n, edges).expect("sampled pairs are valid"))
}

/// All 2^C(n,2) labeled graphs on `n` vertices, one per upper-triangle
/// bitmask, in mask order. Guarded by [`MAX_ENUMERATION_N`].
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, GenError> {
    let count = labeled_graph_count(n)?;
    Ok((0..count).map(move |mask| graph_from_mask(n, mask)))
}

/// Number of labeled graphs on `n` vertices, with the same guard as
/// [`enumerate_labeled`].
pub fn labeled_graph_count(n: usize) -> Result<u64, GenError> {
    if n > MAX_ENUMERATION_N {
        return Err(GenError::EnumerationTooLarge { n, max: MAX_ENUMERATION_N });
    }
    Ok(1u64 << (n * n.saturating_sub(1) / 2))
}

/// Graph for one upper-triangle bitmask: bit `k` is the `k`-th pair in
/// column-major order `(0,1), (0,2), (1,2), (0,3), ...` (the graph6 bit
/// order).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = crate::graph6::upper_triangle_pairs(n)
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edge_list(n, edges).expect("mask pairs are valid")
}

/// Inverse of the column-major pair index `j(j-1)/2 + i`.
fn pair_from_index(k: usize) -> (usize, usize) {
    let mut j = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as usize;
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_split_small() {
        let g = complete_split(2, 4).unwrap();
        assert_eq!(g.m(), 5);
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3]);
    }

    #[test]
    fn complete_split_boundaries() {
        let kn = complete_split(5, 5).unwrap();
        assert_eq!(kn.m(), 10);
        let empty = complete_split(0, 5).unwrap();
        assert_eq!(empty.m(), 0);
        assert_eq!(
            complete_split(6, 5).unwrap_err(),
            GenError::UniversalCountExceedsN { q: 6, n: 5 }
        );
    }

    #[test]
    fn complete_split_degree_multiset() {
        for n in 1..=8 {
            for q in 0..=n {
                let g = complete_split(q, n).unwrap();
                let mut degs = g.degrees();
                degs.sort_unstable();
                let mut expect: Vec<usize> = std::iter::repeat(q)
                    .take(n - q)
                    .chain(std::iter::repeat(n - 1).take(q))
                    .collect();
                expect.sort_unstable();
                assert_eq!(degs, expect, "CS({q},{n})");
            }
        }
    }

    #[test]
    fn gnm_forced_cases() {
        let k5 = random_gnm(5, 10, 123).unwrap();
        assert_eq!(k5.m(), 10);
        assert_eq!(k5.degrees(), vec![4; 5]);
        let empty = random_gnm(4, 0, 9).unwrap();
        assert_eq!(empty.m(), 0);
    }

    #[test]
    fn gnm_deterministic() {
        let a = random_gnm(12, 30, 42).unwrap();
        let b = random_gnm(12, 30, 42).unwrap();
        assert_eq!(a, b);
        let c = random_gnm(12, 30, 43).unwrap();
        assert_ne!(a, c, "different seeds should almost surely differ");
    }

    #[test]
    fn gnm_rejects_overfull() {
        assert_eq!(random_gnm(4, 7, 0).unwrap_err(), GenError::TooManyEdges { m: 7, max: 6 });
    }

    #[test]
    fn gnm_exact_edge_count() {
        for m in [0, 1, 17, 45] {
            assert_eq!(random_gnm(10, m, 5).unwrap().m(), m);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert!(matches!(enumerate_labeled(9), Err(GenError::EnumerationTooLarge { .. })));
    }

    #[test]
    fn enumeration_contains_one_triangle() {
        let triangles = enumerate_labeled(3)
            .unwrap()
            .filter(|g| !g.is_triangle_free())
            .count();
        assert_eq!(triangles, 1);
    }

    #[test]
    fn pair_index_round_trip() {
        for (k, pair) in crate::graph6::upper_triangle_pairs(40).enumerate() {
            assert_eq!(pair_from_index(k), pair);
        }
    }
}
