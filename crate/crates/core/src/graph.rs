//! Simple undirected graphs on contiguous vertex ids.
//!
//! A [`Graph`] is immutable once built. Every structural operation returns a
//! new graph; vertex deletion compacts ids while preserving their order.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default vertex-count ceiling for [`Graph::longest_path_length`].
pub const DEFAULT_LONGEST_PATH_LIMIT: usize = 16;

/// Largest order representable by the short and medium graph6 headers.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list (line {line}): {msg}")]
    MalformedEdgeList { line: usize, msg: String },
    #[error("exact search needs n <= {limit}, graph has {n} vertices")]
    TooLargeForExactSearch { n: usize, limit: usize },
}

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph: no loops, no multi-edges, symmetric sorted adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    /// Maximum degree; 0 for the graph with no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum degree; 0 for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `G - v`, with ids above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.delete_vertices(&[v]).map(|(g, _)| g)
    }

    /// `G - W`. Also returns the map from new ids to old ids.
    pub fn delete_vertices(&self, w: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        let mut removed = vec![false; n];
        for &v in w {
            self.check_vertex(v)?;
            removed[v] = true;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        Ok((self.induced(&kept), kept))
    }

    /// Subgraph induced by `kept` (ascending, distinct old ids); new id `i` is `kept[i]`.
    pub fn induced(&self, kept: &[usize]) -> Graph {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// `G - e`; the vertex set is unchanged.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e.u, e.v));
        }
        let mut adj = self.adj.clone();
        adj[e.u].retain(|&w| w != e.v);
        adj[e.v].retain(|&w| w != e.u);
        Ok(Graph { adj, m: self.m - 1 })
    }

    /// Adds an edge. Fails on loops or bad endpoints; an existing edge is a no-op.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let mut adj = self.adj.clone();
        adj[a].push(b);
        adj[b].push(a);
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + off).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Replaces every edge `{a, b}` by a path `a - v_e - b`.
    pub fn subdivide(&self) -> SubdivisionMap {
        let n = self.n();
        let edges: Vec<Edge> = self.edges().collect();
        let mut adj = vec![Vec::new(); n + edges.len()];
        for (i, e) in edges.iter().enumerate() {
            let mid = n + i;
            adj[e.u].push(mid);
            adj[e.v].push(mid);
            adj[mid] = vec![e.u, e.v];
        }
        SubdivisionMap {
            result: Self::from_raw_adjacency(adj),
            edge_vertex: edges.into_iter().enumerate().map(|(i, e)| (e, n + i)).collect(),
            host_order: n,
        }
    }

    /// Connected components as vertex-id lists, each ascending, ordered by smallest member.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Graph> {
        self.component_vertices()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    /// The graph with no vertices counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_vertices().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m + 1 == self.n()
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.component_vertices().len() == self.n()
    }

    /// Connected with every degree equal to 2.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.adj.iter().all(|l| l.len() == 2)
    }

    /// `K_{1,n-1}` for `n >= 2`: one vertex adjacent to all others, no other edges.
    pub fn is_star(&self) -> bool {
        let n = self.n();
        n >= 2
            && self.m + 1 == n
            && self.adj.iter().any(|l| l.len() == n - 1)
    }

    /// A tree with maximum degree at most 2.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// Number of edges on a longest simple path, by exhaustive search.
    pub fn longest_path_length(&self, limit: usize) -> Result<usize, GraphError> {
        let n = self.n();
        if n > limit {
            return Err(GraphError::TooLargeForExactSearch { n, limit });
        }
        let mut best = 0;
        let mut on_path = vec![false; n];
        for s in 0..n {
            on_path[s] = true;
            self.extend_path(s, 0, &mut on_path, &mut best);
            on_path[s] = false;
            if best + 1 == n {
                break;
            }
        }
        Ok(best)
    }

    fn extend_path(&self, v: usize, len: usize, on_path: &mut [bool], best: &mut usize) {
        if len > *best {
            *best = len;
        }
        // Hamiltonian path found: nothing longer exists.
        if *best + 1 == self.n() {
            return;
        }
        for &w in &self.adj[v] {
            if !on_path[w] {
                on_path[w] = true;
                self.extend_path(w, len + 1, on_path, best);
                on_path[w] = false;
                if *best + 1 == self.n() {
                    return;
                }
            }
        }
    }

    /// Every matching, empty matching first, each exactly once.
    pub fn matchings(&self) -> Matchings<'_> {
        Matchings::new(self)
    }

    /// Parses one graph6 line (an optional `>>graph6<<` header is accepted).
    pub fn from_graph6(line: &str) -> Result<Graph, GraphError> {
        let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
        let line = line.trim_end_matches(['\n', '\r']);
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let bytes = line.as_bytes();
        if bytes.is_empty() {
            return Err(bad("empty input"));
        }
        if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
            return Err(GraphError::MalformedGraph6(format!(
                "byte {c} outside the printable range 63..=126"
            )));
        }
        let vals: Vec<u8> = bytes.iter().map(|&c| c - 63).collect();
        let (n, body) = if vals[0] < 63 {
            (vals[0] as usize, &vals[1..])
        } else if vals.len() >= 4 && vals[1] < 63 {
            let n = ((vals[1] as usize) << 12) | ((vals[2] as usize) << 6) | vals[3] as usize;
            if n < 63 {
                return Err(bad("order below 63 uses the short header"));
            }
            (n, &vals[4..])
        } else {
            return Err(bad("orders above 258047 are not supported"));
        };
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(GraphError::MalformedGraph6(format!(
                "n = {n} needs {expected} body bytes, found {}",
                body.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                    adj[i].push(j);
                    adj[j].push(i);
                }
                k += 1;
            }
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        assert!(n <= GRAPH6_MAX_ORDER, "graph too large for graph6");
        let mut out = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else {
            out.extend([126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                k += 1;
                if k % 6 == 0 {
                    out.push(acc + 63);
                    acc = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push((acc << (6 - k % 6)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    /// Parses edge-list text: the first data line is `n`, each further line is `u v`.
    /// `#` starts a comment; `;` also separates lines so a graph fits on a command line.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let lines = text.split(['\n', ';']).enumerate();
        for (idx, raw) in lines {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| GraphError::MalformedEdgeList { line: idx + 1, msg };
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| err(format!("{t:?}: {e}"))))
                .collect::<Result<_, _>>()?;
            match (n, nums.as_slice()) {
                (None, [count]) => n = Some(*count),
                (None, _) => return Err(err("expected the vertex count".into())),
                (Some(_), [a, b]) => edges.push((*a, *b)),
                (Some(_), _) => return Err(err("expected two vertex ids".into())),
            }
        }
        let n = n.ok_or(GraphError::MalformedEdgeList {
            line: 0,
            msg: "missing vertex count".into(),
        })?;
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{}\n", self.n());
        for e in self.edges() {
            s.push_str(&format!("{} {}\n", e.u, e.v));
        }
        s
    }
}

/// `S(G)` together with the correspondence back to the host graph.
///
/// Host vertex `v` keeps id `v` in `result`; the vertex subdividing edge `e`
/// gets an id in `host_order..host_order + m`.
#[derive(Debug, Clone)]
pub struct SubdivisionMap {
    pub result: Graph,
    pub edge_vertex: Vec<(Edge, usize)>,
    pub host_order: usize,
}

impl SubdivisionMap {
    pub fn vertex_of_edge(&self, e: Edge) -> Option<usize> {
        self.edge_vertex
            .iter()
            .find_map(|&(f, v)| (f == e).then_some(v))
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `V(M)`, ascending.
    pub fn saturated(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|e| [e.u, e.v]).collect();
        vs.sort_unstable();
        vs
    }
}

/// Depth-first matching enumerator; see [`Graph::matchings`].
///
/// Vertices are decided in id order: each is either left unsaturated or paired
/// with a larger free neighbour.
pub struct Matchings<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    edges: Vec<Edge>,
    stack: Vec<Frame>,
}

struct Frame {
    v: usize,
    next: usize,
    partner: Option<usize>,
}

impl<'a> Matchings<'a> {
    fn new(g: &'a Graph) -> Self {
        Matchings {
            g,
            used: vec![false; g.n()],
            edges: Vec::new(),
            stack: vec![Frame {
                v: 0,
                next: 0,
                partner: None,
            }],
        }
    }
}

impl Iterator for Matchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        let n = self.g.n();
        while let Some(top) = self.stack.last_mut() {
            if let Some(u) = top.partner.take() {
                self.used[top.v] = false;
                self.used[u] = false;
                self.edges.pop();
            }
            let v = top.v;
            if v == n {
                if top.next == 0 {
                    top.next = 1;
                    return Some(Matching {
                        edges: self.edges.clone(),
                    });
                }
                self.stack.pop();
                continue;
            }
            if top.next == 0 {
                top.next = 1;
                self.stack.push(Frame {
                    v: v + 1,
                    next: 0,
                    partner: None,
                });
                continue;
            }
            if self.used[v] {
                self.stack.pop();
                continue;
            }
            let nbrs = self.g.neighbors(v);
            let mut i = top.next - 1;
            while i < nbrs.len() && (nbrs[i] < v || self.used[nbrs[i]]) {
                i += 1;
            }
            if i == nbrs.len() {
                self.stack.pop();
                continue;
            }
            let u = nbrs[i];
            top.next = i + 2;
            top.partner = Some(u);
            self.used[v] = true;
            self.used[u] = true;
            self.edges.push(Edge { u: v, v: u });
            self.stack.push(Frame {
                v: v + 1,
                next: 0,
                partner: None,
            });
        }
        None
    }
}

/// Named graph families.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    /// `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_edge_list(n, &edges).expect("valid complete graph")
    }

    /// `K_{1,n-1}` on `n` vertices, centre 0.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid star")
    }
}
