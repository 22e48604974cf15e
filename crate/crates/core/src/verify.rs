//! Checkers for the spectral properties of Laplacian matching polynomials.
//!
//! Each checker takes a graph (plus a target edge, root or subgraph where
//! relevant) and returns a [`VerificationReport`]. Claims are decided with
//! exact arithmetic: algebraic bounds are encoded as polynomials whose largest
//! root is the bound, and compared through a [`JointRoots`] table.
//!
//! Precondition violations are errors. Resource guards (longest-path search,
//! path-tree size, power-iteration cap) produce a `skipped` verdict.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};
use crate::matchpoly::{
    generalized_subdivision_check, laplacian_matching_polynomial, matching_polynomial,
    subdivision_identity_check,
};
use crate::pathtree::{PathTree, PathTreeError, DEFAULT_PATH_TREE_LIMIT};
use crate::poly::{
    divides_exactly, interlace_certify, rational_from_f64, rational_to_decimal, IntPoly, Interval,
    JointRoots, PolyError, RootSet,
};
use crate::spectral::{
    char_poly, perron_value, spectrum_below, SpectralError, SymIntMatrix, DEFAULT_PERRON_ITERATIONS,
};

/// Default path-tree order up to which divisibility is checked exactly.
pub const DEFAULT_CHARPOLY_GATE: usize = 1500;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("the subgraph must delete at least one edge or vertex")]
    NotProperSubgraph,
    #[error("check needs at least {needed} vertices")]
    TooFewVertices { needed: usize },
    #[error("check needs maximum degree at least 2")]
    MaxDegreeTooSmall,
    #[error("graph is a path or a complete graph")]
    ExtremalGraph,
    #[error("graph is not a forest")]
    NotForest,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    NonnegRealRoots,
    ZeroIffTree,
    DistinctPositiveRoots,
    Interlacing,
    LargestZeroBounds,
    PathTree,
    SubgraphMonotonicity,
    PathCompleteExtremes,
    SubdivisionMatchingBound,
    SubdivisionIdentity,
    ForestDeterminant,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::NonnegRealRoots,
        CheckKind::ZeroIffTree,
        CheckKind::DistinctPositiveRoots,
        CheckKind::Interlacing,
        CheckKind::LargestZeroBounds,
        CheckKind::PathTree,
        CheckKind::SubgraphMonotonicity,
        CheckKind::PathCompleteExtremes,
        CheckKind::SubdivisionMatchingBound,
        CheckKind::SubdivisionIdentity,
        CheckKind::ForestDeterminant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::NonnegRealRoots => "nonneg-real-roots",
            CheckKind::ZeroIffTree => "zero-iff-tree",
            CheckKind::DistinctPositiveRoots => "distinct-positive-roots",
            CheckKind::Interlacing => "interlacing",
            CheckKind::LargestZeroBounds => "largest-zero-bounds",
            CheckKind::PathTree => "path-tree",
            CheckKind::SubgraphMonotonicity => "subgraph-monotonicity",
            CheckKind::PathCompleteExtremes => "path-complete-extremes",
            CheckKind::SubdivisionMatchingBound => "subdivision-matching-bound",
            CheckKind::SubdivisionIdentity => "subdivision-identity",
            CheckKind::ForestDeterminant => "forest-determinant",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// graph6 encoding of the input.
    pub graph: String,
    pub check: CheckKind,
    /// Edge, root or subgraph the check was run against.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub verdict: Verdict,
    /// Resource guard behind a skip.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Notable events such as attained equality cases.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    pub witnesses: BTreeMap<String, String>,
    /// Only recorded when [`CheckConfig::record_time`] is set, so that
    /// serialized output is reproducible by default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckConfig {
    /// Width of reported root intervals and Perron enclosures.
    pub tol: f64,
    pub longest_path_limit: usize,
    pub path_tree_limit: usize,
    /// Largest path-tree for which the characteristic polynomial is formed.
    pub charpoly_gate: usize,
    pub perron_iterations: usize,
    pub record_time: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            tol: 1e-9,
            longest_path_limit: crate::graph::DEFAULT_LONGEST_PATH_LIMIT,
            path_tree_limit: DEFAULT_PATH_TREE_LIMIT,
            charpoly_gate: DEFAULT_CHARPOLY_GATE,
            perron_iterations: DEFAULT_PERRON_ITERATIONS,
            record_time: false,
        }
    }
}

impl CheckConfig {
    fn tol_q(&self) -> BigRational {
        rational_from_f64(self.tol)
    }

    fn digits(&self) -> usize {
        ((-self.tol.log10()).ceil().max(1.0) as usize).min(30)
    }
}

pub const CYCLE_EQUALITY: &str = "cycle equality attained";
pub const STAR_EQUALITY: &str = "star equality attained";
pub const ALL_ROOTS_DISTINCT: &str = "all roots distinct";

enum Halt {
    Pre(VerifyError),
    Skip(String),
    Broken(String),
}

impl From<VerifyError> for Halt {
    fn from(e: VerifyError) -> Self {
        Halt::Pre(e)
    }
}

impl From<GraphError> for Halt {
    fn from(e: GraphError) -> Self {
        Halt::Pre(e.into())
    }
}

impl From<PolyError> for Halt {
    fn from(e: PolyError) -> Self {
        Halt::Broken(e.to_string())
    }
}

struct Rec<'c> {
    cfg: &'c CheckConfig,
    flags: Vec<String>,
    w: BTreeMap<String, String>,
}

impl Rec<'_> {
    fn put(&mut self, k: &str, v: impl ToString) {
        self.w.insert(k.to_string(), v.to_string());
    }

    fn flag(&mut self, f: &str) {
        self.flags.push(f.to_string());
    }

    fn roots(&mut self, k: &str, rs: &RootSet) {
        let d = self.cfg.digits();
        self.put(k, fmt_roots(rs, d));
    }

    fn interval(&mut self, k: &str, iv: &Interval) {
        let d = self.cfg.digits() + 3;
        self.put(k, fmt_interval(iv, d));
    }
}

fn fmt_roots(rs: &RootSet, digits: usize) -> String {
    let parts: Vec<String> = rs
        .roots
        .iter()
        .map(|r| {
            let v = if r.is_exact() {
                r.interval.lo.to_string()
            } else {
                r.decimal(digits)
            };
            format!("{v} (×{})", r.multiplicity)
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_interval(iv: &Interval, digits: usize) -> String {
    if iv.is_exact() {
        iv.lo.to_string()
    } else {
        format!(
            "[{}, {}]",
            rational_to_decimal(&iv.lo, digits),
            rational_to_decimal(&iv.hi, digits)
        )
    }
}

fn run(
    check: CheckKind,
    g: &Graph,
    target: Option<String>,
    cfg: &CheckConfig,
    body: impl FnOnce(&mut Rec) -> Result<bool, Halt>,
) -> Result<VerificationReport, VerifyError> {
    let start = cfg.record_time.then(Instant::now);
    let mut rec = Rec {
        cfg,
        flags: Vec::new(),
        w: BTreeMap::new(),
    };
    let (verdict, reason) = match body(&mut rec) {
        Ok(true) => (Verdict::Pass, None),
        Ok(false) => (Verdict::Fail, None),
        Err(Halt::Pre(e)) => return Err(e),
        Err(Halt::Skip(r)) => (Verdict::Skipped, Some(r)),
        Err(Halt::Broken(msg)) => {
            rec.put("error", msg);
            (Verdict::Fail, None)
        }
    };
    if verdict == Verdict::Fail && rec.w.is_empty() {
        rec.put("error", "check failed");
    }
    Ok(VerificationReport {
        graph: g.to_graph6(),
        check,
        target,
        verdict,
        reason,
        flags: rec.flags,
        witnesses: rec.w,
        elapsed_ms: start.map(|t| t.elapsed().as_secs_f64() * 1e3),
    })
}

fn require_connected(g: &Graph) -> Result<(), Halt> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(VerifyError::NotConnected.into())
    }
}

fn longest_path(g: &Graph, cfg: &CheckConfig) -> Result<usize, Halt> {
    g.longest_path_length(cfg.longest_path_limit)
        .map_err(|e| Halt::Skip(e.to_string()))
}

fn lm_roots(lm: &IntPoly, cfg: &CheckConfig) -> Result<RootSet, Halt> {
    Ok(RootSet::isolate(lm, &cfg.tol_q())?)
}

/// Largest root of `(x - a)^2 - b`, i.e. `a + sqrt(b)`.
fn plus_sqrt_poly(a: i64, b: i64) -> IntPoly {
    IntPoly::from_i64(&[a * a - b, -2 * a, 1])
}

/// Polynomial whose largest root is `D + sqrt(D - 1) 2 cos(pi / (2l + 2))`.
///
/// `2 cos(pi / (2l + 2))` is the largest root of the matching polynomial of
/// the path on `2l + 1` vertices, `y R(y^2)` with `R = sum r_j z^j`. Putting
/// `y = (x - D) / sqrt(D - 1)` and clearing denominators gives
/// `(x - D) sum_j r_j (x - D)^(2j) (D - 1)^(l - j)`.
pub fn upper_bound_poly(max_degree: usize, longest: usize) -> IntPoly {
    let m = matching_polynomial(&crate::graph::families::path(2 * longest + 1));
    let t = IntPoly::linear_root(max_degree);
    let t2 = &t * &t;
    let base = BigInt::from(max_degree as i64 - 1);
    let mut sum = IntPoly::zero();
    let mut power = IntPoly::one();
    for j in 0..=longest {
        let r = m.coeff(2 * j + 1);
        sum = sum + power.scale(&(r * base.pow((longest - j) as u32)));
        power = &power * &t2;
    }
    t * sum
}

/// Roots of `LM(G)` are real and nonnegative.
pub fn check_nonneg_real_roots(g: &Graph, cfg: &CheckConfig) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::NonnegRealRoots, g, None, cfg, |r| {
        let lm = laplacian_matching_polynomial(g);
        r.put("lm", &lm);
        let rs = lm_roots(&lm, cfg)?;
        r.roots("roots", &rs);
        let neg = rs.negative_distinct();
        r.put("negative roots", neg);
        Ok(neg == 0)
    })
}

/// For connected `G`: `LM(G, 0) = 0` exactly when `G` is a tree.
pub fn check_zero_iff_tree(g: &Graph, cfg: &CheckConfig) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::ZeroIffTree, g, None, cfg, |r| {
        require_connected(g)?;
        let c = laplacian_matching_polynomial(g).constant_term();
        let tree = g.is_tree();
        r.put("constant term", &c);
        r.put("tree", tree);
        Ok((c == BigInt::from(0)) == tree)
    })
}

/// `LM(G)` has at least `l(G)` distinct positive roots, and `l(G) + 1` when
/// the minimum degree is at least 2.
pub fn check_distinct_positive_roots(
    g: &Graph,
    cfg: &CheckConfig,
) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::DistinctPositiveRoots, g, None, cfg, |r| {
        require_connected(g)?;
        let l = longest_path(g, cfg)?;
        let delta = g.min_degree();
        let lm = laplacian_matching_polynomial(g);
        let rs = lm_roots(&lm, cfg)?;
        let count = rs.positive_distinct();
        let needed = if delta >= 2 { l + 1 } else { l };
        r.put("longest path", l);
        r.put("min degree", delta);
        r.put("distinct positive roots", count);
        r.put("required", needed);
        r.roots("roots", &rs);
        let mut ok = count >= needed;
        // a Hamilton path with minimum degree 2 forces n distinct roots
        if delta >= 2 && l + 1 == g.n() {
            let all = rs.distinct() == g.n();
            if all {
                r.flag(ALL_ROOTS_DISTINCT);
            }
            ok &= all;
        }
        Ok(ok)
    })
}

/// Roots of `LM(G - e)` interlace those of `LM(G)` from below, and no root
/// multiplicity changes by more than one.
pub fn check_interlacing_edge_deletion(
    g: &Graph,
    e: Edge,
    cfg: &CheckConfig,
) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::Interlacing, g, Some(format!("edge {e}")), cfg, |r| {
        let h = g
            .delete_edge(e)
            .map_err(|_| VerifyError::MissingEdge(e))?;
        let p = laplacian_matching_polynomial(g);
        let q = laplacian_matching_polynomial(&h);
        let il = interlace_certify(&p, &q)?;
        r.put("multiplicity gap", il.max_multiplicity_gap);
        r.put("interlaced", il.q_then_p);
        let ok = il.q_then_p && il.max_multiplicity_gap <= 1;
        if !ok {
            r.roots("roots", &lm_roots(&p, cfg)?);
            r.roots("roots after deletion", &lm_roots(&q, cfg)?);
        }
        Ok(ok)
    })
}

/// `max(D + 1, d + sqrt(D)) <= lambda <= D + 2 sqrt(D - 1) cos(pi / (2l + 2))`,
/// with the lower bound attained only by stars and the upper only by cycles.
pub fn check_largest_zero_bounds(g: &Graph, cfg: &CheckConfig) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::LargestZeroBounds, g, None, cfg, |r| {
        require_connected(g)?;
        if g.n() < 2 {
            return Err(VerifyError::TooFewVertices { needed: 2 }.into());
        }
        let (dmax, dmin) = (g.max_degree(), g.min_degree());
        let lm = laplacian_matching_polynomial(g);
        let lower_a = IntPoly::linear_root(dmax + 1);
        let lower_b = plus_sqrt_poly(dmin as i64, dmax as i64);
        let upper = if dmax >= 2 {
            let l = longest_path(g, cfg)?;
            r.put("longest path", l);
            Some(upper_bound_poly(dmax, l))
        } else {
            r.flag("upper bound needs max degree 2");
            None
        };
        let mut polys = vec![&lm, &lower_a, &lower_b];
        if let Some(u) = &upper {
            polys.push(u);
        }
        let mut table = JointRoots::new(&polys)?;
        let lam = table.largest_of(0).expect("LM has degree n >= 2");
        let ia = table.largest_of(1).expect("linear");
        let ib = table.largest_of(2).expect("real-rooted quadratic");
        let lower = ia.max(ib);
        let tol = cfg.tol_q();
        for k in [lam, ia, ib] {
            table.refine_root(k, &tol);
        }
        r.interval("lambda", &table.roots[lam].interval);
        r.interval("lower bound", &table.roots[lower].interval);
        let star = g.is_star();
        let lower_eq = lam == lower;
        let mut ok = lam >= lower && lower_eq == star;
        if lower_eq && star {
            r.flag(STAR_EQUALITY);
        }
        if upper.is_some() {
            let iu = table.largest_of(3).expect("upper bound polynomial has real roots");
            table.refine_root(iu, &tol);
            r.interval("upper bound", &table.roots[iu].interval);
            let cycle = g.is_cycle();
            let upper_eq = lam == iu;
            ok &= lam <= iu && upper_eq == cycle;
            if upper_eq && cycle {
                r.flag(CYCLE_EQUALITY);
            }
        }
        Ok(ok)
    })
}

/// For a connected graph and root `u`:
/// `LM(G)` divides the characteristic polynomial of `D_G(T) + A(T)`,
/// both share their largest root, that root is simple, and it is at least the
/// Laplacian spectral radius of the path-tree `T = T(G, u)`, with equality
/// only for trees.
pub fn check_path_tree_theorems(
    g: &Graph,
    u: usize,
    cfg: &CheckConfig,
) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::PathTree, g, Some(format!("root {u}")), cfg, |r| {
        require_connected(g)?;
        let pt = match PathTree::of_graph(g, u, cfg.path_tree_limit) {
            Ok(pt) => pt,
            Err(PathTreeError::Graph(e)) => return Err(e.into()),
            Err(e) => return Err(Halt::Skip(e.to_string())),
        };
        let order = pt.order();
        r.put("path-tree order", order);
        let degree_ok = (0..order).all(|p| pt.tree.degree(p) <= g.degree(pt.terminal[p]));
        r.put("degree bound", degree_ok);

        let lm = laplacian_matching_polynomial(g);
        let m = pt.weighted_matrix();
        let divides = if order <= cfg.charpoly_gate {
            let ok = divides_exactly(&lm, &char_poly(&m))?.is_some();
            r.put("divisible", ok);
            ok
        } else {
            r.flag("divisibility not checked: path-tree above gate");
            true
        };

        let enc = match perron_value(&m, cfg.tol, cfg.perron_iterations) {
            Ok(e) => e,
            Err(e @ SpectralError::NotConverged { .. }) => return Err(Halt::Skip(e.to_string())),
            Err(e) => return Err(Halt::Broken(e.to_string())),
        };
        r.put("perron enclosure", format!("[{:.*}, {:.*}]", cfg.digits() + 3, enc.lower, cfg.digits() + 3, enc.upper));
        let mut rs = lm_roots(&lm, cfg)?;
        let top = rs.distinct() - 1;
        let lam = rs.roots[top].interval.clone();
        r.interval("lambda", &lam);
        let meets = lam.meets(&rational_from_f64(enc.lower), &rational_from_f64(enc.upper));
        r.put("enclosure meets lambda", meets);
        let simple = rs.roots[top].multiplicity == 1;
        r.put("lambda multiplicity", rs.roots[top].multiplicity);

        let lap_ok = if g.is_tree() {
            // T(G, u) is G itself, so the forest determinant identity gives equality
            let same = char_poly(&SymIntMatrix::laplacian(&pt.tree)) == lm;
            r.put("laplacian identity", same);
            same
        } else {
            // L(T) and Q(T) are similar for a tree; certify lambda(Q(T)) < lambda
            let q = SymIntMatrix::signless_laplacian(&pt.tree);
            let mut tol = cfg.tol_q();
            let mut certified = false;
            for _ in 0..64 {
                rs.refine_root(top, &tol);
                let below = &rs.roots[top].interval.lo;
                if spectrum_below(&q, below).expect("path-tree is a tree") {
                    certified = true;
                    break;
                }
                if rs.roots[top].is_exact() {
                    break;
                }
                tol /= BigInt::from(16);
            }
            r.put("laplacian strictly below", certified);
            certified
        };
        Ok(degree_ok && divides && meets && simple && lap_ok)
    })
}

/// A proper subgraph: the listed edges are deleted first, then the vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubgraphSpec {
    pub edges: Vec<Edge>,
    pub vertices: Vec<usize>,
}

impl SubgraphSpec {
    pub fn minus_edge(e: Edge) -> Self {
        SubgraphSpec {
            edges: vec![e],
            vertices: Vec::new(),
        }
    }

    pub fn minus_vertex(v: usize) -> Self {
        SubgraphSpec {
            edges: Vec::new(),
            vertices: vec![v],
        }
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph, VerifyError> {
        if self.edges.is_empty() && self.vertices.is_empty() {
            return Err(VerifyError::NotProperSubgraph);
        }
        let mut h = g.clone();
        for &e in &self.edges {
            h = h.delete_edge(e).map_err(|_| VerifyError::MissingEdge(e))?;
        }
        Ok(h.delete_vertices(&self.vertices)?.0)
    }
}

impl fmt::Display for SubgraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.edges.is_empty() {
            let es: Vec<String> = self.edges.iter().map(Edge::to_string).collect();
            parts.push(format!("minus edges {}", es.join(",")));
        }
        if !self.vertices.is_empty() {
            let vs: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
            parts.push(format!("minus vertices {}", vs.join(",")));
        }
        f.write_str(&parts.join(" "))
    }
}

/// The largest root of `LM(G)` strictly exceeds that of `LM(H)` for a proper
/// subgraph `H` of a connected graph `G`.
pub fn check_subgraph_monotonicity(
    g: &Graph,
    sub: &SubgraphSpec,
    cfg: &CheckConfig,
) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::SubgraphMonotonicity, g, Some(sub.to_string()), cfg, |r| {
        require_connected(g)?;
        let h = sub.apply(g)?;
        let p = laplacian_matching_polynomial(g);
        let q = laplacian_matching_polynomial(&h);
        let mut table = JointRoots::new(&[&p, &q])?;
        let lg = table.largest_of(0).expect("G has a vertex");
        let tol = cfg.tol_q();
        table.refine_root(lg, &tol);
        r.interval("lambda", &table.roots[lg].interval);
        match table.largest_of(1) {
            Some(lh) => {
                table.refine_root(lh, &tol);
                r.interval("subgraph lambda", &table.roots[lh].interval);
                Ok(lg > lh)
            }
            None => {
                r.put("subgraph lambda", "none (empty graph)");
                Ok(true)
            }
        }
    })
}

/// `lambda(P_n) < lambda(G) < lambda(K_n)` for connected `G` that is neither.
pub fn check_path_complete_extremes(
    g: &Graph,
    cfg: &CheckConfig,
) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::PathCompleteExtremes, g, None, cfg, |r| {
        require_connected(g)?;
        if g.is_path() || g.is_complete() {
            return Err(VerifyError::ExtremalGraph.into());
        }
        let n = g.n();
        let lp = laplacian_matching_polynomial(&crate::graph::families::path(n));
        let lg = laplacian_matching_polynomial(g);
        let lk = laplacian_matching_polynomial(&crate::graph::families::complete(n));
        let mut table = JointRoots::new(&[&lp, &lg, &lk])?;
        let idx: Vec<usize> = (0..3).map(|i| table.largest_of(i).expect("n >= 4")).collect();
        let tol = cfg.tol_q();
        for (&k, name) in idx.iter().zip(["path lambda", "lambda", "complete lambda"]) {
            table.refine_root(k, &tol);
            r.interval(name, &table.roots[k].interval);
        }
        Ok(idx[0] < idx[1] && idx[1] < idx[2])
    })
}

/// `lambda(M(S(G))) < 1 + sqrt(D - 1)`, and its square is `lambda(LM(G))`.
pub fn check_subdivision_matching_bound(
    g: &Graph,
    cfg: &CheckConfig,
) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::SubdivisionMatchingBound, g, None, cfg, |r| {
        let dmax = g.max_degree();
        if dmax < 2 {
            return Err(VerifyError::MaxDegreeTooSmall.into());
        }
        let ms = matching_polynomial(&g.subdivide().result);
        let bound = plus_sqrt_poly(1, dmax as i64 - 1);
        let squared = laplacian_matching_polynomial(g).substitute_square();
        let mut table = JointRoots::new(&[&ms, &bound, &squared])?;
        let i = table.largest_of(0).expect("S(G) has an edge");
        let ib = table.largest_of(1).expect("quadratic");
        let is = table.largest_of(2).expect("LM has a root");
        let tol = cfg.tol_q();
        for k in [i, ib] {
            table.refine_root(k, &tol);
        }
        r.interval("subdivision lambda", &table.roots[i].interval);
        r.interval("bound", &table.roots[ib].interval);
        r.put("square matches lambda", i == is);
        Ok(i < ib && i == is)
    })
}

/// `M(S(G)) = x^(|E|-|V|) LM(G, x^2)` and its vertex-deleted forms for every
/// single host vertex.
pub fn check_subdivision_identity(g: &Graph, cfg: &CheckConfig) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::SubdivisionIdentity, g, None, cfg, |r| {
        let base = subdivision_identity_check(g);
        if !base.holds() {
            r.put("deleted", "none");
            r.put("lhs", &base.lhs);
            r.put("rhs", &base.rhs);
            return Ok(false);
        }
        for v in 0..g.n() {
            let id = generalized_subdivision_check(g, &[v]).map_err(|e| Halt::Broken(e.to_string()))?;
            if !id.holds() {
                r.put("deleted", v);
                r.put("lhs", &id.lhs);
                r.put("rhs", &id.rhs);
                return Ok(false);
            }
        }
        r.put("vertex deletions", g.n());
        Ok(true)
    })
}

/// For a forest: `LM(F) = det(xI - L(F))` and `M(F) = det(xI - A(F))`.
pub fn check_forest_determinant(g: &Graph, cfg: &CheckConfig) -> Result<VerificationReport, VerifyError> {
    run(CheckKind::ForestDeterminant, g, None, cfg, |r| {
        if !g.is_forest() {
            return Err(VerifyError::NotForest.into());
        }
        let lm = laplacian_matching_polynomial(g);
        let m = matching_polynomial(g);
        let phi_l = char_poly(&SymIntMatrix::laplacian(g));
        let phi_a = char_poly(&SymIntMatrix::adjacency(g));
        let ok = lm == phi_l && m == phi_a;
        if !ok {
            r.put("lm", &lm);
            r.put("laplacian char poly", &phi_l);
            r.put("m", &m);
            r.put("adjacency char poly", &phi_a);
        } else {
            r.put("lm", &lm);
        }
        Ok(ok)
    })
}

/// Which edges, roots and subgraphs the multi-target checks visit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Targets {
    /// Every edge instead of only the first.
    pub all_edges: bool,
    /// Every path-tree root instead of only vertex 0.
    pub all_roots: bool,
}

/// Runs each selected check on every target it applies to, skipping checks
/// whose preconditions `g` does not meet.
pub fn run_applicable(
    g: &Graph,
    checks: &[CheckKind],
    targets: Targets,
    cfg: &CheckConfig,
) -> Vec<VerificationReport> {
    let connected = g.is_connected();
    let edges: Vec<Edge> = if targets.all_edges {
        g.edges().collect()
    } else {
        g.edges().take(1).collect()
    };
    let roots: Vec<usize> = if targets.all_roots { (0..g.n()).collect() } else { (0..g.n().min(1)).collect() };
    let mut out = Vec::new();
    let mut push = |r: Result<VerificationReport, VerifyError>| {
        out.push(r.expect("preconditions were checked"));
    };
    for &k in checks {
        match k {
            CheckKind::NonnegRealRoots => push(check_nonneg_real_roots(g, cfg)),
            CheckKind::ZeroIffTree if connected => push(check_zero_iff_tree(g, cfg)),
            CheckKind::DistinctPositiveRoots if connected => push(check_distinct_positive_roots(g, cfg)),
            CheckKind::Interlacing => {
                for &e in &edges {
                    push(check_interlacing_edge_deletion(g, e, cfg));
                }
            }
            CheckKind::LargestZeroBounds if connected && g.n() >= 2 => {
                push(check_largest_zero_bounds(g, cfg))
            }
            CheckKind::PathTree if connected => {
                for &u in &roots {
                    push(check_path_tree_theorems(g, u, cfg));
                }
            }
            CheckKind::SubgraphMonotonicity if connected && g.n() >= 2 => {
                for &e in &edges {
                    push(check_subgraph_monotonicity(g, &SubgraphSpec::minus_edge(e), cfg));
                }
                push(check_subgraph_monotonicity(g, &SubgraphSpec::minus_vertex(g.n() - 1), cfg));
            }
            CheckKind::PathCompleteExtremes if connected && !g.is_path() && !g.is_complete() => {
                push(check_path_complete_extremes(g, cfg))
            }
            CheckKind::SubdivisionMatchingBound if g.max_degree() >= 2 => {
                push(check_subdivision_matching_bound(g, cfg))
            }
            CheckKind::SubdivisionIdentity => push(check_subdivision_identity(g, cfg)),
            CheckKind::ForestDeterminant if g.is_forest() => push(check_forest_determinant(g, cfg)),
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    fn pass(r: Result<VerificationReport, VerifyError>) -> VerificationReport {
        let r = r.unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:#?}");
        r
    }

    #[test]
    fn names_round_trip() {
        for k in CheckKind::ALL {
            assert_eq!(k.name().parse::<CheckKind>().unwrap(), k);
        }
        assert!("bogus".parse::<CheckKind>().is_err());
    }

    #[test]
    fn nonneg_real_roots_examples() {
        let r = pass(check_nonneg_real_roots(&cycle(3), &cfg()));
        assert_eq!(r.witnesses["roots"], "[0.267949192 (×1), 2 (×1), 3.732050808 (×1)]");
        let r = pass(check_nonneg_real_roots(&path(3), &cfg()));
        assert_eq!(r.witnesses["roots"], "[0 (×1), 1 (×1), 3 (×1)]");
    }

    #[test]
    fn zero_iff_tree_examples() {
        let r = pass(check_zero_iff_tree(&path(3), &cfg()));
        assert_eq!(r.witnesses["constant term"], "0");
        let r = pass(check_zero_iff_tree(&cycle(3), &cfg()));
        assert_eq!(r.witnesses["constant term"], "-2");
        let r = pass(check_zero_iff_tree(&cycle(4), &cfg()));
        assert_eq!(r.witnesses["constant term"], "2");
        assert_eq!(
            check_zero_iff_tree(&Graph::empty(2), &cfg()).unwrap_err(),
            VerifyError::NotConnected
        );
    }

    #[test]
    fn distinct_positive_roots_examples() {
        let r = pass(check_distinct_positive_roots(&cycle(3), &cfg()));
        assert_eq!(r.witnesses["distinct positive roots"], "3");
        assert!(r.has_flag(ALL_ROOTS_DISTINCT));
        let r = pass(check_distinct_positive_roots(&path(3), &cfg()));
        assert_eq!(r.witnesses["required"], "2");
        let r = pass(check_distinct_positive_roots(&cycle(4), &cfg()));
        assert_eq!(r.witnesses["distinct positive roots"], "4");
        let tight = CheckConfig {
            longest_path_limit: 3,
            ..cfg()
        };
        let r = check_distinct_positive_roots(&cycle(4), &tight).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.reason.unwrap().contains("n <= 3"));
    }

    #[test]
    fn interlacing_examples() {
        pass(check_interlacing_edge_deletion(&cycle(3), Edge::new(0, 1), &cfg()));
        pass(check_interlacing_edge_deletion(&complete(2), Edge::new(0, 1), &cfg()));
        pass(check_interlacing_edge_deletion(&cycle(4), Edge::new(1, 2), &cfg()));
        assert_eq!(
            check_interlacing_edge_deletion(&path(3), Edge::new(0, 2), &cfg()).unwrap_err(),
            VerifyError::MissingEdge(Edge::new(0, 2))
        );
    }

    #[test]
    fn bounds_examples() {
        let r = pass(check_largest_zero_bounds(&cycle(3), &cfg()));
        assert!(r.has_flag(CYCLE_EQUALITY));
        assert!(!r.has_flag(STAR_EQUALITY));
        let r = pass(check_largest_zero_bounds(&cycle(4), &cfg()));
        assert!(r.has_flag(CYCLE_EQUALITY));
        let lam = r.witnesses["lambda"].trim_matches(['[', ']']).to_string();
        let (lo, hi) = lam.split_once(", ").unwrap();
        let want = 2.0 + 2.0 * (std::f64::consts::PI / 8.0).cos();
        assert!(lo.parse::<f64>().unwrap() <= want && want <= hi.parse::<f64>().unwrap());
        assert_eq!(r.witnesses["lambda"], r.witnesses["upper bound"]);
        let r = pass(check_largest_zero_bounds(&star(4), &cfg()));
        assert!(r.has_flag(STAR_EQUALITY));
        assert_eq!(r.witnesses["lambda"], "4");
        let r = pass(check_largest_zero_bounds(&complete(2), &cfg()));
        assert!(r.has_flag(STAR_EQUALITY));
        assert!(!r.witnesses.contains_key("upper bound"));
    }

    #[test]
    fn upper_bound_poly_roots() {
        // D = 2, l = 2: 2 + 2 cos(pi / 6) = 2 + sqrt(3)
        let u = upper_bound_poly(2, 2);
        let rs = RootSet::isolate(&u, &rational_from_f64(1e-12)).unwrap();
        assert!((rs.largest().unwrap().approx_f64() - (2.0 + 3f64.sqrt())).abs() < 1e-10);
        // D = 5, l = 3: 5 + 2 sqrt(4) cos(pi / 8)
        let u = upper_bound_poly(5, 3);
        let rs = RootSet::isolate(&u, &rational_from_f64(1e-12)).unwrap();
        let want = 5.0 + 4.0 * (std::f64::consts::PI / 8.0).cos();
        assert!((rs.largest().unwrap().approx_f64() - want).abs() < 1e-10);
    }

    #[test]
    fn path_tree_examples() {
        let r = pass(check_path_tree_theorems(&cycle(3), 0, &cfg()));
        assert_eq!(r.witnesses["divisible"], "true");
        assert_eq!(r.witnesses["laplacian strictly below"], "true");
        let r = pass(check_path_tree_theorems(&path(3), 1, &cfg()));
        assert_eq!(r.witnesses["lambda"], "3");
        assert_eq!(r.witnesses["laplacian identity"], "true");
        pass(check_path_tree_theorems(&star(4), 0, &cfg()));
        let small = CheckConfig {
            path_tree_limit: 4,
            ..cfg()
        };
        assert_eq!(
            check_path_tree_theorems(&cycle(3), 0, &small).unwrap().verdict,
            Verdict::Skipped
        );
        let gated = CheckConfig {
            charpoly_gate: 2,
            ..cfg()
        };
        let r = pass(check_path_tree_theorems(&cycle(4), 2, &gated));
        assert!(!r.witnesses.contains_key("divisible"));
    }

    #[test]
    fn monotonicity_examples() {
        let c3 = cycle(3);
        pass(check_subgraph_monotonicity(&c3, &SubgraphSpec::minus_edge(Edge::new(0, 2)), &cfg()));
        pass(check_subgraph_monotonicity(&star(4), &SubgraphSpec::minus_vertex(3), &cfg()));
        pass(check_subgraph_monotonicity(&cycle(4), &SubgraphSpec::minus_edge(Edge::new(0, 3)), &cfg()));
        pass(check_subgraph_monotonicity(&Graph::empty(1), &SubgraphSpec::minus_vertex(0), &cfg()));
        assert_eq!(
            check_subgraph_monotonicity(&c3, &SubgraphSpec::default(), &cfg()).unwrap_err(),
            VerifyError::NotProperSubgraph
        );
    }

    #[test]
    fn extremes_examples() {
        pass(check_path_complete_extremes(&cycle(4), &cfg()));
        pass(check_path_complete_extremes(&star(4), &cfg()));
        pass(check_path_complete_extremes(&star(5), &cfg()));
        assert_eq!(
            check_path_complete_extremes(&complete(4), &cfg()).unwrap_err(),
            VerifyError::ExtremalGraph
        );
    }

    #[test]
    fn subdivision_bound_examples() {
        for g in [cycle(3), path(3), star(4)] {
            pass(check_subdivision_matching_bound(&g, &cfg()));
        }
        let r = pass(check_subdivision_matching_bound(&star(4), &cfg()));
        assert_eq!(r.witnesses["subdivision lambda"], "2");
        assert_eq!(
            check_subdivision_matching_bound(&complete(2), &cfg()).unwrap_err(),
            VerifyError::MaxDegreeTooSmall
        );
    }

    #[test]
    fn identity_and_forest_checks() {
        pass(check_subdivision_identity(&complete(4), &cfg()));
        pass(check_forest_determinant(&star(5).disjoint_union(&path(3)), &cfg()));
        assert_eq!(check_forest_determinant(&cycle(3), &cfg()).unwrap_err(), VerifyError::NotForest);
    }

    #[test]
    fn run_applicable_covers_cycle() {
        let reports = run_applicable(&cycle(3), &CheckKind::ALL, Targets::default(), &cfg());
        assert!(reports.iter().all(|r| r.verdict == Verdict::Pass), "{reports:#?}");
        let names: Vec<_> = reports.iter().map(|r| r.check).collect();
        assert!(!names.contains(&CheckKind::ForestDeterminant));
        assert!(!names.contains(&CheckKind::PathCompleteExtremes));
        let all = run_applicable(
            &cycle(4),
            &[CheckKind::Interlacing, CheckKind::PathTree],
            Targets {
                all_edges: true,
                all_roots: true,
            },
            &cfg(),
        );
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn reports_serialize_without_time_by_default() {
        let r = pass(check_zero_iff_tree(&path(3), &cfg()));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"graph":"Bg","check":"zero-iff-tree","verdict":"pass","witnesses":{"constant term":"0","tree":"true"}}"#
        );
        let timed = CheckConfig {
            record_time: true,
            ..cfg()
        };
        assert!(check_zero_iff_tree(&path(3), &timed).unwrap().elapsed_ms.is_some());
    }
}
