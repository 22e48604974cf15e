//! Graph corpora: exhaustive labeled graphs, seeded random samples, and
//! isomorphism classes of small graphs.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{families, Graph};
use crate::pathtree::bethe_tree;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Deterministic generator for corpus sampling.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertex pairs `(i, j)`, `i < j`, in graph6 order (column by column).
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Graph whose edge set is the set bits of `mask` over [`pairs`] order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edge_list(n, &edges).expect("pairs are valid")
}

/// All `2^(n(n-1)/2)` labeled graphs on `n <= 11` vertices.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "too many labeled graphs");
    let bits = n * n.saturating_sub(1) / 2;
    (0..1u64 << bits).map(move |mask| graph_from_mask(n, mask))
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.random_bool(p)).collect();
    Graph::from_edge_list(n, &edges).expect("pairs are valid")
}

/// Uniform connected labeled graph, by rejection from `G(n, 1/2)`.
pub fn random_connected_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    loop {
        let g = random_graph(n, 0.5, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return families::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    tree_from_prufer(n, &code)
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn tree_from_prufer(n: usize, code: &[usize]) -> Graph {
    assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a leaf exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edge_list(n, &edges).expect("valid tree")
}

/// Canonical adjacency bitstring: the lexicographically largest [`pairs`]
/// bitmask over all relabelings that list vertices by non-increasing degree.
/// Equal for two graphs exactly when they are isomorphic. Practical for `n <= 10`.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical form limited to 11 vertices");
    let deg = g.degrees();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    for v in by_degree {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    search(g, &mut classes, 0, &mut order, &mut best);
    best
}

fn search(g: &Graph, classes: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == classes.len() {
        let mut mask = 0u64;
        for (k, (i, j)) in pairs(g.n()).into_iter().enumerate() {
            if g.has_edge(order[i], order[j]) {
                mask |= 1 << k;
            }
        }
        *best = (*best).max(mask);
        return;
    }
    permute(g, classes, ci, 0, order, best);
}

fn permute(g: &Graph, classes: &mut [Vec<usize>], ci: usize, k: usize, order: &mut Vec<usize>, best: &mut u64) {
    let len = classes[ci].len();
    if k == len {
        search(g, classes, ci + 1, order, best);
        return;
    }
    for i in k..len {
        classes[ci].swap(k, i);
        order.push(classes[ci][k]);
        permute(g, classes, ci, k + 1, order, best);
        order.pop();
        classes[ci].swap(k, i);
    }
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices (`1 <= n <= 8`), built by attaching a vertex to smaller classes.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 1u64..1 << (k - 1) {
                let edges: Vec<(usize, usize)> = g
                    .edges()
                    .map(|e| (e.u, e.v))
                    .chain((0..k - 1).filter(|v| nbrs >> v & 1 == 1).map(|v| (v, k - 1)))
                    .collect();
                let h = Graph::from_edge_list(k, &edges).expect("valid");
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Named families on `n` vertices that exist for that `n`.
pub fn named_families(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![
        (format!("path:{n}"), families::path(n)),
        (format!("complete:{n}"), families::complete(n)),
        (format!("star:{n}"), families::star(n)),
    ];
    if n >= 3 {
        out.push((format!("cycle:{n}"), families::cycle(n)));
    }
    out
}

/// Bethe trees `B_{d,k}` with at most `max_n` vertices, for `d <= 3`.
pub fn bethe_family(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for d in 1..=3 {
        for k in 2.. {
            let b = bethe_tree(d, k).expect("valid parameters");
            if b.n() > max_n {
                break;
            }
            out.push((format!("bethe:{d},{k}"), b));
        }
    }
    out
}
