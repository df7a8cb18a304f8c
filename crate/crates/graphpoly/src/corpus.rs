//! Deterministic graph corpora: exhaustive labeled-graph enumeration by
//! edge bitmask, labeled trees from Prüfer sequences, and seeded random
//! multigraphs and forests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Vertex pairs `(u, w)` with `u < w` over `1..=n` in lexicographic order;
/// bit `i` of an edge mask refers to `pair_list(n)[i]`.
pub fn pair_list(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity((n as usize) * (n as usize - 1) / 2);
    for u in 1..=n {
        for w in (u + 1)..=n {
            pairs.push((u, w));
        }
    }
    pairs
}

/// The labeled simple graph on vertices `1..=n` selected by `mask`.
pub fn labeled_simple_graph(n: u32, mask: u64) -> Graph {
    let pairs = pair_list(n);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_parts(1..=n, edges).expect("pairs lie in 1..=n")
}

/// All `2^{n(n-1)/2}` labeled simple graphs on `1..=n`, in mask order.
pub fn all_labeled_simple_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let bits = n as usize * (n as usize - 1) / 2;
    assert!(bits < 64, "edge mask does not fit in u64");
    (0u64..(1u64 << bits)).map(move |mask| labeled_simple_graph(n, mask))
}

/// Decodes a Prüfer sequence over labels `1..=n` (length `n-2`) into the
/// corresponding labeled tree.
pub fn tree_from_pruefer(n: u32, seq: &[u32]) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::edgeless(1);
    }
    assert_eq!(seq.len(), n as usize - 2);
    let mut degree = vec![1u32; n as usize + 1];
    for &s in seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n as usize - 1);
    let mut leaf_scan = 1u32;
    let mut leaf: Option<u32> = None;
    for &s in seq {
        let u = match leaf.take() {
            Some(u) => u,
            None => {
                while degree[leaf_scan as usize] != 1 {
                    leaf_scan += 1;
                }
                let u = leaf_scan;
                leaf_scan += 1;
                u
            }
        };
        edges.push((u, s));
        degree[u as usize] -= 1;
        degree[s as usize] -= 1;
        if degree[s as usize] == 1 && s < leaf_scan {
            leaf = Some(s);
        }
    }
    let remaining: Vec<u32> = (1..=n).filter(|&v| degree[v as usize] == 1).collect();
    debug_assert_eq!(remaining.len(), 2);
    edges.push((remaining[0], remaining[1]));
    Graph::from_parts(1..=n, edges).expect("tree edges lie in 1..=n")
}

/// All `n^{n-2}` labeled trees on `1..=n` by Prüfer enumeration.
pub fn all_labeled_trees(n: u32) -> Vec<Graph> {
    if n <= 2 {
        return vec![tree_from_pruefer(n, &[])];
    }
    let len = n as usize - 2;
    let mut seq = vec![1u32; len];
    let mut out = Vec::new();
    loop {
        out.push(tree_from_pruefer(n, &seq));
        let mut pos = 0;
        loop {
            if pos == len {
                return out;
            }
            if seq[pos] < n {
                seq[pos] += 1;
                break;
            }
            seq[pos] = 1;
            pos += 1;
        }
    }
}

/// A seeded random multigraph with `1..=max_vertices` vertices and up to
/// `max_edges` edges; loops and parallel edges arise naturally.
pub fn random_multigraph(seed: u64, max_vertices: u32, max_edges: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<(u32, u32)> = (0..m)
        .map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n)))
        .collect();
    Graph::from_parts(1..=n, edges).expect("endpoints lie in 1..=n")
}

/// A seeded random forest: a disjoint union of 1 to 3 random labeled trees
/// with up to `max_tree_vertices` vertices each.
pub fn random_forest(seed: u64, max_tree_vertices: u32) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = rng.gen_range(1..=3);
    let mut forest = Graph::new();
    for _ in 0..parts {
        let n = rng.gen_range(1..=max_tree_vertices);
        let seq: Vec<u32> = if n <= 2 {
            Vec::new()
        } else {
            (0..n - 2).map(|_| rng.gen_range(1..=n)).collect()
        };
        forest = forest.disjoint_union(&tree_from_pruefer(n, &seq));
    }
    forest
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_enumerate_all_graphs() {
        let graphs: Vec<Graph> = all_labeled_simple_graphs(3).collect();
        assert_eq!(graphs.len(), 8);
        assert_eq!(graphs[0].edge_count(), 0);
        assert_eq!(graphs[7].edge_count(), 3);
        assert_eq!(all_labeled_simple_graphs(5).count(), 1024);
    }

    #[test]
    fn pruefer_counts_match_cayley() {
        assert_eq!(all_labeled_trees(1).len(), 1);
        assert_eq!(all_labeled_trees(2).len(), 1);
        assert_eq!(all_labeled_trees(3).len(), 3);
        assert_eq!(all_labeled_trees(4).len(), 16);
        assert_eq!(all_labeled_trees(6).len(), 1296);
    }

    #[test]
    fn pruefer_trees_are_trees() {
        for t in all_labeled_trees(6) {
            assert_eq!(t.vertex_count(), 6);
            assert_eq!(t.edge_count(), 5);
            assert_eq!(t.component_count(), 1);
            assert!(t.is_forest());
        }
    }

    #[test]
    fn pruefer_decode_known_sequence() {
        // Sequence (4, 4) on 4 vertices: star with center 4.
        let t = tree_from_pruefer(4, &[4, 4]);
        let mut edges = t.edges().to_vec();
        edges.sort();
        assert_eq!(edges, vec![(1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn random_graphs_are_deterministic() {
        let a = random_multigraph(42, 5, 8);
        let b = random_multigraph(42, 5, 8);
        assert_eq!(a, b);
        assert!(random_forest(7, 6).is_forest());
    }
}
