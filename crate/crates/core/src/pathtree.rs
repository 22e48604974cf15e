//! Path-trees and Bethe trees.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::matchpoly::HostWeights;
use crate::spectral::SymIntMatrix;

/// Default vertex ceiling for [`PathTree::build`].
pub const DEFAULT_PATH_TREE_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathTreeError {
    #[error("path-tree exceeds {limit} vertices")]
    PathTreeTooLarge { limit: usize },
    #[error("host weights cover {got} vertices, graph has {expected}")]
    WeightsMissing { expected: usize, got: usize },
    #[error("Bethe tree needs d >= 1 and k >= 2, got d = {d}, k = {k}")]
    BadParameters { d: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The tree whose vertices are the simple paths of `H` starting at `u`,
/// a path being adjacent to its one-vertex extensions.
///
/// Tree vertex 0 is the trivial path `u`; ids follow depth-first discovery
/// with extensions taken in ascending host-id order.
#[derive(Debug, Clone)]
pub struct PathTree {
    pub tree: Graph,
    /// Last vertex of each path, as an id of `H`.
    pub terminal: Vec<usize>,
    /// Host weight of each terminal vertex.
    pub weight: Vec<u64>,
    /// Parent path (the path minus its last vertex); `None` for the root.
    pub parent: Vec<Option<usize>>,
}

impl PathTree {
    pub const ROOT: usize = 0;

    /// Path-tree of `h` at `u`, weighting each path by `w` at its terminal vertex.
    pub fn build(h: &Graph, u: usize, w: &HostWeights, limit: usize) -> Result<Self, PathTreeError> {
        if u >= h.n() {
            return Err(GraphError::OutOfRange { vertex: u, n: h.n() }.into());
        }
        if w.len() != h.n() {
            return Err(PathTreeError::WeightsMissing {
                expected: h.n(),
                got: w.len(),
            });
        }
        let mut nbrs: Vec<Vec<usize>> = (0..h.n()).map(|v| h.neighbors(v).to_vec()).collect();
        for list in &mut nbrs {
            list.sort_unstable();
        }
        let mut terminal = vec![u];
        let mut parent = vec![None];
        let mut on_path = vec![false; h.n()];
        on_path[u] = true;
        // (tree id, next neighbour index to try)
        let mut stack = vec![(0usize, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (id, next) = *top;
            let v = terminal[id];
            match nbrs[v][next..].iter().position(|&x| !on_path[x]) {
                Some(off) => {
                    top.1 = next + off + 1;
                    if terminal.len() == limit {
                        return Err(PathTreeError::PathTreeTooLarge { limit });
                    }
                    let x = nbrs[v][next + off];
                    on_path[x] = true;
                    terminal.push(x);
                    parent.push(Some(id));
                    stack.push((terminal.len() - 1, 0));
                }
                None => {
                    on_path[v] = false;
                    stack.pop();
                }
            }
        }
        let edges: Vec<(usize, usize)> = parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)))
            .collect();
        let tree = Graph::from_edge_list(terminal.len(), &edges)?;
        let weight = terminal.iter().map(|&v| w.get(v)).collect();
        Ok(PathTree {
            tree,
            terminal,
            weight,
            parent,
        })
    }

    /// `T(G, u)` weighted by the degrees of `G`.
    pub fn of_graph(g: &Graph, u: usize, limit: usize) -> Result<Self, PathTreeError> {
        Self::build(g, u, &HostWeights::degrees_of(g), limit)
    }

    pub fn order(&self) -> usize {
        self.terminal.len()
    }

    /// Host vertices of path `p`, from `u` to its terminal.
    pub fn path(&self, mut p: usize) -> Vec<usize> {
        let mut out = vec![self.terminal[p]];
        while let Some(q) = self.parent[p] {
            out.push(self.terminal[q]);
            p = q;
        }
        out.reverse();
        out
    }

    /// `D_G(T) + A(T)`: host weight of the terminal on the diagonal.
    pub fn weighted_matrix(&self) -> SymIntMatrix {
        SymIntMatrix::from_graph(&self.tree, self.weight.iter().map(|&x| x as i64).collect(), 1)
    }

    /// Graphviz rendering; each node shows its terminal vertex and host weight.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph pathtree {\n");
        for (p, (&t, &w)) in self.terminal.iter().zip(&self.weight).enumerate() {
            let _ = writeln!(s, "  {p} [label=\"{t} ({w})\"];");
        }
        for e in self.tree.edges() {
            let _ = writeln!(s, "  {} -- {};", e.u, e.v);
        }
        s.push_str("}\n");
        s
    }
}

/// `D_G(T) + A(T)` for a built path-tree.
pub fn weighted_path_tree_matrix(pt: &PathTree) -> SymIntMatrix {
    pt.weighted_matrix()
}

/// Bethe tree `B_{d,k}`: `k` levels, every non-leaf has `d` children, root 0,
/// vertices numbered level by level.
pub fn bethe_tree(d: usize, k: usize) -> Result<Graph, PathTreeError> {
    if d < 1 || k < 2 {
        return Err(PathTreeError::BadParameters { d, k });
    }
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut n = 1;
    for _ in 1..k {
        let mut next = Vec::with_capacity(level.len() * d);
        for &v in &level {
            for _ in 0..d {
                edges.push((v, n));
                next.push(n);
                n += 1;
            }
        }
        level = next;
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `2 sqrt(d) cos(pi / (k + 1))`, the adjacency spectral radius of `B_{d,k}`.
pub fn bethe_adjacency_lambda(d: usize, k: usize) -> f64 {
    2.0 * (d as f64).sqrt() * (std::f64::consts::PI / (k as f64 + 1.0)).cos()
}
