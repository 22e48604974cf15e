//! Corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lmpoly_core::corpus::{self, all_labeled_graphs, random_connected_graph, random_graph};
use lmpoly_core::graph::{families, Graph};
use lmpoly_core::pathtree::bethe_tree;
use rand::Rng;

pub const SEED: u64 = corpus::DEFAULT_SEED;

/// Unlabeled trees on 1..=10 vertices.
pub const TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

/// Connected unlabeled graphs on 1..=7 vertices.
pub const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// Every labeled graph on `n` vertices that is connected, for `n <= 6`.
pub fn connected_labeled_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| all_labeled_graphs(n).filter(|g| g.is_connected()))
        .collect()
}

/// `count` seeded `G(n, 1/2)` samples with `n` uniform in `7..=10`.
pub fn random_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = corpus::rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(7..=10);
            random_graph(n, 0.5, &mut rng)
        })
        .collect()
}

/// `count` seeded connected samples with `n` uniform in `7..=10`.
pub fn random_connected(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = corpus::rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(7..=10);
            random_connected_graph(n, &mut rng)
        })
        .collect()
}

/// Named families and Bethe trees with at most 12 vertices.
pub fn named(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(families::path(n));
        out.push(families::complete(n));
        out.push(families::star(n));
        if n >= 3 {
            out.push(families::cycle(n));
        }
    }
    for d in 1..=3 {
        for k in 2.. {
            let b = bethe_tree(d, k).unwrap();
            if b.n() > max_n {
                break;
            }
            out.push(b);
        }
    }
    out
}

/// Connected part of the standard corpus: exhaustive labeled graphs up to 6
/// vertices, 500 random connected graphs on 7 to 10 vertices, named families.
pub fn connected_corpus() -> Vec<Graph> {
    let mut out = connected_labeled_upto(6);
    out.extend(random_connected(500, SEED));
    out.extend(named(12));
    out
}

/// AHU encoding of a rooted tree.
fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism invariant of a tree: AHU code rooted at the centre (or the
/// smaller code over both centres).
pub fn tree_code(g: &Graph) -> String {
    let n = g.n();
    if n <= 1 {
        return "()".repeat(n);
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in g.neighbors(v) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(g, c, usize::MAX)).min().unwrap()
}

/// Seeded spanning trees of `K_n` from Prüfer codes over a random label
/// subset, kept one per isomorphism class, until `want` classes are seen.
pub fn tree_classes(n: usize, want: usize, seed: u64, max_samples: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![families::path(n)];
    }
    let mut rng = corpus::rng(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..max_samples {
        let k = rng.random_range(1..=n - 2);
        let labels: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
        let code: Vec<usize> = (0..n - 2).map(|_| labels[rng.random_range(0..k)]).collect();
        let t = corpus::tree_from_prufer(n, &code);
        if seen.insert(tree_code(&t)) {
            out.push(t);
            if out.len() == want {
                break;
            }
        }
    }
    out
}
