//! Matching, Laplacian matching and degree-anchored matching polynomials.
//!
//! All three are specializations of one recursion on vertex-weighted graphs:
//!
//! ```text
//! f(H) = (x - w_v) f(H - v) - sum_{u ~ v} f(H - v - u)
//! ```
//!
//! with `w = 0` for the matching polynomial and `w = host degree` otherwise.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::poly::IntPoly;

/// Default vertex ceiling for the matching enumerators.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchPolyError {
    #[error("host weights cover {got} vertices, graph has {expected}")]
    WeightsMissing { expected: usize, got: usize },
    #[error("matching enumeration needs n <= {limit}, graph has {n} vertices")]
    TooLargeForEnumeration { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-vertex integer weights of a subgraph `H`, indexed by `H`'s own ids,
/// normally the degrees those vertices have in a host graph `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostWeights {
    weights: Vec<u64>,
}

impl HostWeights {
    pub fn new(weights: Vec<u64>) -> Self {
        HostWeights { weights }
    }

    /// `d_G` on all of `G`.
    pub fn degrees_of(g: &Graph) -> Self {
        HostWeights::new(g.degrees().into_iter().map(|d| d as u64).collect())
    }

    /// `d_{G,H}` for `H` the subgraph of `G` whose vertex `i` is `G`-vertex `kept[i]`.
    pub fn restricted(g: &Graph, kept: &[usize]) -> Self {
        HostWeights::new(kept.iter().map(|&v| g.degree(v) as u64).collect())
    }

    /// All weights zero: the anchored polynomial becomes the matching polynomial.
    pub fn zeros(n: usize) -> Self {
        HostWeights::new(vec![0; n])
    }

    pub fn get(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }

    /// Weights surviving the deletion of `removed` (same compaction as [`Graph::delete_vertices`]).
    pub fn delete(&self, removed: &[usize]) -> Self {
        HostWeights::new(
            self.weights
                .iter()
                .enumerate()
                .filter(|(v, _)| !removed.contains(v))
                .map(|(_, &w)| w)
                .collect(),
        )
    }
}

/// Vertex subset used as a memo key.
trait Mask: Clone + Eq + Hash {
    fn full(n: usize) -> Self;
    fn contains(&self, v: usize) -> bool;
    fn remove(&mut self, v: usize);
    fn is_empty(&self) -> bool;
}

impl Mask for u128 {
    fn full(n: usize) -> Self {
        if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        }
    }
    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }
    fn remove(&mut self, v: usize) {
        *self &= !(1u128 << v);
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
}

impl Mask for Vec<u64> {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        words
    }
    fn contains(&self, v: usize) -> bool {
        self[v / 64] >> (v % 64) & 1 == 1
    }
    fn remove(&mut self, v: usize) {
        self[v / 64] &= !(1u64 << (v % 64));
    }
    fn is_empty(&self) -> bool {
        self.iter().all(|&w| w == 0)
    }
}

struct Recursion<'a, K> {
    g: &'a Graph,
    linear: Vec<IntPoly>,
    memo: HashMap<K, IntPoly>,
}

impl<K: Mask> Recursion<'_, K> {
    fn solve(&mut self, mask: &K) -> IntPoly {
        if mask.is_empty() {
            return IntPoly::one();
        }
        if let Some(p) = self.memo.get(mask) {
            return p.clone();
        }
        // lowest-id vertex of minimum remaining degree
        let n = self.g.n();
        let mut pivot = usize::MAX;
        let mut best = usize::MAX;
        for v in (0..n).filter(|&v| mask.contains(v)) {
            let d = self.g.neighbors(v).iter().filter(|&&u| mask.contains(u)).count();
            if d < best {
                best = d;
                pivot = v;
                if d == 0 {
                    break;
                }
            }
        }
        let mut rest = mask.clone();
        rest.remove(pivot);
        let tail = self.solve(&rest);
        let mut out = &self.linear[pivot] * &tail;
        let nbrs: Vec<usize> = self
            .g
            .neighbors(pivot)
            .iter()
            .copied()
            .filter(|&u| mask.contains(u))
            .collect();
        for u in nbrs {
            let mut sub = rest.clone();
            sub.remove(u);
            out = out - self.solve(&sub);
        }
        self.memo.insert(mask.clone(), out.clone());
        out
    }
}

/// Above this order the frontier sweep is tried before the subset recursion.
const FRONTIER_THRESHOLD: usize = 40;

fn anchored_unchecked(h: &Graph, w: &[u64]) -> IntPoly {
    let n = h.n();
    if n > FRONTIER_THRESHOLD {
        if let Some(p) = anchored_frontier(h, w) {
            return p;
        }
    }
    anchored_recursive(h, w)
}

/// Memoized vertex-deletion recursion, pivoting on the lowest-id vertex of
/// minimum remaining degree.
pub fn anchored_recursive(h: &Graph, w: &[u64]) -> IntPoly {
    let linear: Vec<IntPoly> = w.iter().map(|&x| IntPoly::linear_root(BigInt::from(x))).collect();
    let n = h.n();
    if n <= 128 {
        let mut r = Recursion::<u128> {
            g: h,
            linear,
            memo: HashMap::new(),
        };
        r.solve(&u128::full(n))
    } else {
        let mut r = Recursion::<Vec<u64>> {
            g: h,
            linear,
            memo: HashMap::new(),
        };
        r.solve(&Vec::<u64>::full(n))
    }
}

/// Vertex-by-vertex sweep keeping, for every saturation pattern of the
/// active vertices (introduced, with a neighbour still to come), the signed
/// sum over partial matchings. Cheap when the sweep frontier stays narrow,
/// as for subdivisions. `None` if the frontier would exceed 128 vertices.
pub fn anchored_frontier(h: &Graph, w: &[u64]) -> Option<IntPoly> {
    let n = h.n();
    let order = sweep_order(h);
    let mut introduced = vec![false; n];
    let mut pending: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut slot = vec![usize::MAX; n];
    let mut free: Vec<usize> = (0..128).rev().collect();
    let mut states: HashMap<u128, IntPoly> = HashMap::from([(0u128, IntPoly::one())]);
    for v in order {
        introduced[v] = true;
        slot[v] = free.pop()?;
        let active_nbrs: Vec<usize> = h.neighbors(v).iter().copied().filter(|&u| introduced[u] && u != v).collect();
        let mut next: HashMap<u128, IntPoly> = HashMap::with_capacity(states.len() * 2);
        for (mask, p) in states {
            for &u in &active_nbrs {
                if mask >> slot[u] & 1 == 0 {
                    let key = mask | 1 << slot[u] | 1 << slot[v];
                    let e = next.entry(key).or_default();
                    *e = &*e - &p;
                }
            }
            let e = next.entry(mask).or_default();
            *e = &*e + &p;
        }
        states = next;
        // retire vertices whose neighbourhood is fully introduced
        let mut done = Vec::new();
        for &u in &active_nbrs {
            pending[u] -= 1;
            if pending[u] == 0 {
                done.push(u);
            }
        }
        pending[v] -= active_nbrs.len();
        if pending[v] == 0 {
            done.push(v);
        }
        for u in done {
            let bit = 1u128 << slot[u];
            let factor = IntPoly::linear_root(BigInt::from(w[u]));
            let mut next: HashMap<u128, IntPoly> = HashMap::with_capacity(states.len());
            for (mask, p) in states {
                let (key, q) = if mask & bit != 0 { (mask & !bit, p) } else { (mask, &p * &factor) };
                let e = next.entry(key).or_default();
                *e = &*e + &q;
            }
            states = next;
            free.push(slot[u]);
        }
    }
    Some(states.remove(&0).unwrap_or_default())
}

/// Greedy order: next is the vertex with the most introduced neighbours,
/// then the fewest outstanding ones, then the lowest id.
fn sweep_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut seen = vec![false; n];
    let mut inside = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (inside[v], std::cmp::Reverse(h.degree(v) - inside[v]), std::cmp::Reverse(v)))
            .expect("vertices remain");
        seen[v] = true;
        order.push(v);
        for &u in h.neighbors(v) {
            inside[u] += 1;
        }
    }
    order
}

/// `M(G, x) = sum_M (-1)^|M| x^(n - 2|M|)`.
pub fn matching_polynomial(g: &Graph) -> IntPoly {
    anchored_unchecked(g, &vec![0; g.n()])
}

/// `sum_M (-1)^|M| prod_{v not in V(M)} (x - w_v)`.
pub fn anchored_matching_polynomial(h: &Graph, w: &HostWeights) -> Result<IntPoly, MatchPolyError> {
    if w.len() != h.n() {
        return Err(MatchPolyError::WeightsMissing {
            expected: h.n(),
            got: w.len(),
        });
    }
    Ok(anchored_unchecked(h, w.as_slice()))
}

/// `LM(G, x)`: the anchored polynomial with each vertex weighted by its own degree.
pub fn laplacian_matching_polynomial(g: &Graph) -> IntPoly {
    let w: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).collect();
    anchored_unchecked(g, &w)
}

fn check_enumerable(g: &Graph, limit: usize) -> Result<(), MatchPolyError> {
    if g.n() > limit {
        return Err(MatchPolyError::TooLargeForEnumeration { n: g.n(), limit });
    }
    Ok(())
}

/// Matching polynomial summed term by term over every matching.
pub fn matching_bruteforce(g: &Graph, limit: usize) -> Result<IntPoly, MatchPolyError> {
    check_enumerable(g, limit)?;
    let n = g.n();
    let mut c = vec![BigInt::from(0); n + 1];
    for m in g.matchings() {
        let sign = if m.len() % 2 == 0 { 1 } else { -1 };
        c[n - 2 * m.len()] += sign;
    }
    Ok(IntPoly::from_coeffs(c))
}

/// `LM(G, x)` summed term by term over every matching.
pub fn lm_bruteforce(g: &Graph, limit: usize) -> Result<IntPoly, MatchPolyError> {
    check_enumerable(g, limit)?;
    let deg = g.degrees();
    let mut total = IntPoly::zero();
    for m in g.matchings() {
        let mut covered = vec![false; g.n()];
        for v in m.saturated() {
            covered[v] = true;
        }
        let term = (0..g.n())
            .filter(|&v| !covered[v])
            .fold(IntPoly::one(), |acc, v| acc * IntPoly::linear_root(deg[v]));
        if m.len() % 2 == 0 {
            total = total + term;
        } else {
            total = total - term;
        }
    }
    Ok(total)
}

/// Both sides of a subdivision identity after moving any negative power of `x`
/// to the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionIdentity {
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    /// The exponent `|E| - |V| + |W|` before normalization.
    pub exponent: i64,
}

impl SubdivisionIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    fn balance(lhs: IntPoly, rhs: IntPoly, exponent: i64) -> Self {
        let k = exponent.unsigned_abs() as usize;
        let (lhs, rhs) = if exponent >= 0 {
            (lhs, rhs.shift(k))
        } else {
            (lhs.shift(k), rhs)
        };
        SubdivisionIdentity { lhs, rhs, exponent }
    }
}

/// `M(S(G), x) = x^(|E| - |V|) LM(G, x^2)`.
pub fn subdivision_identity_check(g: &Graph) -> SubdivisionIdentity {
    let lhs = matching_polynomial(&g.subdivide().result);
    let rhs = laplacian_matching_polynomial(g).substitute_square();
    SubdivisionIdentity::balance(lhs, rhs, g.m() as i64 - g.n() as i64)
}

/// `M(S(G) - W, x) = x^(|E| - |V| + |W|) A(G - W, x^2 - d_G)` for host vertices `W`,
/// where `A` is the anchored polynomial.
pub fn generalized_subdivision_check(
    g: &Graph,
    w_set: &[usize],
) -> Result<SubdivisionIdentity, MatchPolyError> {
    let mut w: Vec<usize> = w_set.to_vec();
    w.sort_unstable();
    w.dedup();
    let (reduced, kept) = g.delete_vertices(&w)?;
    let (s_minus_w, _) = g.subdivide().result.delete_vertices(&w)?;
    let lhs = matching_polynomial(&s_minus_w);
    let rhs = anchored_matching_polynomial(&reduced, &HostWeights::restricted(g, &kept))?
        .substitute_square();
    let exponent = g.m() as i64 - g.n() as i64 + w.len() as i64;
    Ok(SubdivisionIdentity::balance(lhs, rhs, exponent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Edge;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn shifted(f: &IntPoly, a: i64) -> IntPoly {
        f.translate(&BigInt::from(-a))
    }

    #[test]
    fn matching_polynomial_examples() {
        assert_eq!(matching_polynomial(&complete(2)), p(&[-1, 0, 1]));
        assert_eq!(matching_polynomial(&path(3)), p(&[0, -2, 0, 1]));
        assert_eq!(matching_polynomial(&cycle(4)), p(&[2, 0, -4, 0, 1]));
        assert_eq!(matching_polynomial(&Graph::empty(0)), IntPoly::one());
    }

    #[test]
    fn anchored_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(
            anchored_matching_polynomial(&k1, &HostWeights::new(vec![3])).unwrap(),
            p(&[-3, 1])
        );
        let c3 = cycle(3);
        assert_eq!(
            anchored_matching_polynomial(&c3, &HostWeights::new(vec![2; 3])).unwrap(),
            p(&[-2, 9, -6, 1])
        );
        let h = c3.delete_edge(Edge::new(0, 2)).unwrap();
        let got = anchored_matching_polynomial(&h, &HostWeights::degrees_of(&c3)).unwrap();
        assert_eq!(got, shifted(&p(&[0, -2, 0, 1]), 2));
        assert_ne!(got, laplacian_matching_polynomial(&h));
        assert_eq!(
            anchored_matching_polynomial(&c3, &HostWeights::new(vec![2; 2])),
            Err(MatchPolyError::WeightsMissing { expected: 3, got: 2 })
        );
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(laplacian_matching_polynomial(&complete(2)), p(&[0, -2, 1]));
        assert_eq!(laplacian_matching_polynomial(&path(3)), p(&[0, 3, -4, 1]));
        assert_eq!(laplacian_matching_polynomial(&star(4)), p(&[0, -4, 9, -6, 1]));
        assert_eq!(laplacian_matching_polynomial(&cycle(4)), p(&[2, -16, 20, -8, 1]));
    }

    #[test]
    fn bruteforce_examples() {
        let lim = DEFAULT_ENUMERATION_LIMIT;
        assert_eq!(lm_bruteforce(&cycle(3), lim).unwrap(), p(&[-2, 9, -6, 1]));
        assert_eq!(
            lm_bruteforce(&cycle(4), lim).unwrap(),
            shifted(&p(&[2, 0, -4, 0, 1]), 2)
        );
        assert_eq!(lm_bruteforce(&Graph::empty(1), lim).unwrap(), IntPoly::x());
        assert_eq!(matching_bruteforce(&cycle(4), lim).unwrap(), p(&[2, 0, -4, 0, 1]));
        assert_eq!(
            lm_bruteforce(&complete(15), lim),
            Err(MatchPolyError::TooLargeForEnumeration { n: 15, limit: lim })
        );
    }

    #[test]
    fn recursion_matches_bruteforce_on_small_graphs() {
        for g in [complete(5), cycle(6), star(5), path(7), complete(4).disjoint_union(&cycle(3))] {
            assert_eq!(laplacian_matching_polynomial(&g), lm_bruteforce(&g, 14).unwrap());
            assert_eq!(matching_polynomial(&g), matching_bruteforce(&g, 14).unwrap());
        }
    }

    #[test]
    fn wide_mask_agrees_with_narrow() {
        // 130-vertex path exercises the multi-word memo key
        let g = path(130);
        let m = matching_polynomial(&g);
        assert_eq!(m.degree(), Some(130));
        // M(P_n) = x M(P_{n-1}) - M(P_{n-2})
        let (a, b) = (matching_polynomial(&path(129)), matching_polynomial(&path(128)));
        assert_eq!(m, IntPoly::x() * a - b);
    }

    #[test]
    fn frontier_sweep_matches_recursion() {
        let graphs = [
            complete(6),
            cycle(7),
            star(6).disjoint_union(&path(4)),
            complete(5).subdivide().result,
            Graph::empty(3),
            Graph::empty(0),
        ];
        for g in graphs {
            let w: Vec<u64> = (0..g.n() as u64).map(|v| v % 4).collect();
            assert_eq!(anchored_frontier(&g, &w).unwrap(), anchored_recursive(&g, &w));
        }
    }

    #[test]
    fn large_subdivision_uses_sweep() {
        let s = complete(12).subdivide().result;
        let m = matching_polynomial(&s);
        let lm = laplacian_matching_polynomial(&complete(12)).substitute_square();
        assert_eq!(m, lm.shift(66 - 12));
    }

    #[test]
    fn subdivision_examples() {
        let k2 = subdivision_identity_check(&complete(2));
        assert!(k2.holds());
        assert_eq!(k2.lhs, p(&[0, 0, -2, 0, 1]));
        let c3 = subdivision_identity_check(&cycle(3));
        assert!(c3.holds());
        assert_eq!(c3.lhs, p(&[-2, 0, 9, 0, -6, 0, 1]));
        let k1 = subdivision_identity_check(&Graph::empty(1));
        assert!(k1.holds());
        assert_eq!(k1.exponent, -1);
        assert_eq!(k1.lhs, p(&[0, 0, 1]));
    }

    #[test]
    fn generalized_subdivision_examples() {
        let c3 = generalized_subdivision_check(&cycle(3), &[0]).unwrap();
        assert!(c3.holds());
        assert_eq!(c3.exponent, 1);
        assert_eq!(c3.lhs, p(&[0, 3, 0, -4, 0, 1]));
        let k2 = generalized_subdivision_check(&complete(2), &[0]).unwrap();
        assert!(k2.holds());
        assert_eq!(k2.lhs, p(&[-1, 0, 1]));
        for g in [cycle(4), star(4), complete(4)] {
            assert_eq!(
                generalized_subdivision_check(&g, &[]).unwrap(),
                subdivision_identity_check(&g)
            );
            assert!(generalized_subdivision_check(&g, &[1, 3]).unwrap().holds());
        }
        assert!(matches!(
            generalized_subdivision_check(&cycle(3), &[5]),
            Err(MatchPolyError::Graph(GraphError::OutOfRange { vertex: 5, n: 3 }))
        ));
    }

    #[test]
    fn host_weights_follow_deletion() {
        let g = star(4);
        let w = HostWeights::degrees_of(&g);
        assert_eq!(w.delete(&[1]).as_slice(), &[3, 1, 1]);
        let (h, kept) = g.delete_vertices(&[0]).unwrap();
        assert_eq!(HostWeights::restricted(&g, &kept), HostWeights::new(vec![1, 1, 1]));
        assert_eq!(
            anchored_matching_polynomial(&h, &HostWeights::restricted(&g, &kept)).unwrap(),
            p(&[-1, 1]).pow(3)
        );
    }
}
