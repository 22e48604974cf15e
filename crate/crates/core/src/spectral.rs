//! Symmetric integer matrices: exact characteristic polynomials and Perron
//! value enclosures.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::IntPoly;

/// Default iteration cap for [`perron_value`].
pub const DEFAULT_PERRON_ITERATIONS: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix has a negative entry at ({0}, {1})")]
    NegativeEntries(usize, usize),
    #[error("power iteration did not reach width {tol} within {iterations} steps (last width {width})")]
    NotConverged { iterations: usize, tol: f64, width: f64 },
    #[error("matrix is empty")]
    Empty,
}

/// Symmetric integer matrix stored as a diagonal plus sparse off-diagonal rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymIntMatrix {
    diag: Vec<i64>,
    /// `off[i]` lists `(j, a_ij)` for `j != i` with `a_ij != 0`, ascending in `j`.
    off: Vec<Vec<(usize, i64)>>,
}

impl SymIntMatrix {
    pub fn zeros(n: usize) -> Self {
        SymIntMatrix {
            diag: vec![0; n],
            off: vec![Vec::new(); n],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        let mut m = SymIntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has the wrong length");
            for (j, &a) in row.iter().enumerate() {
                if rows[j][i] != a {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
                if i == j {
                    m.diag[i] = a;
                } else if a != 0 {
                    m.off[i].push((j, a));
                }
            }
        }
        Ok(m)
    }

    /// `diag(d) + s * A(g)`.
    pub fn from_graph(g: &Graph, diag: Vec<i64>, s: i64) -> Self {
        assert_eq!(diag.len(), g.n());
        let off = (0..g.n())
            .map(|v| {
                let mut row: Vec<(usize, i64)> = g.neighbors(v).iter().map(|&u| (u, s)).collect();
                row.sort_unstable();
                row
            })
            .collect();
        SymIntMatrix { diag, off }
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self::from_graph(g, vec![0; g.n()], 1)
    }

    /// `L = D - A`.
    pub fn laplacian(g: &Graph) -> Self {
        Self::from_graph(g, g.degrees().iter().map(|&d| d as i64).collect(), -1)
    }

    /// `Q = D + A`.
    pub fn signless_laplacian(g: &Graph) -> Self {
        Self::from_graph(g, g.degrees().iter().map(|&d| d as i64).collect(), 1)
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal(&self) -> &[i64] {
        &self.diag
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.off[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        if i == j {
            return self.diag[i];
        }
        self.off[i]
            .binary_search_by_key(&j, |&(k, _)| k)
            .map_or(0, |k| self.off[i][k].1)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let mut out = vec![vec![0; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            row[i] = self.diag[i];
            for &(j, a) in &self.off[i] {
                row[j] = a;
            }
        }
        out
    }

    pub fn nonzero_off_diagonal(&self) -> usize {
        self.off.iter().map(Vec::len).sum()
    }

    /// Whether the graph of nonzero off-diagonal entries has no cycle.
    pub fn support_is_forest(&self) -> bool {
        let edges = self.nonzero_off_diagonal() / 2;
        let mut seen = vec![false; self.order()];
        let mut components = 0;
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.off[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        edges + components == self.order()
    }

    fn mul_vec(&self, v: &[f64], out: &mut [f64]) {
        for i in 0..self.order() {
            let mut s = self.diag[i] as f64 * v[i];
            for &(j, a) in &self.off[i] {
                s += a as f64 * v[j];
            }
            out[i] = s;
        }
    }
}

/// `det(xI - M)`. Uses the leaf-to-root tree recursion when the off-diagonal
/// support is a forest and Berkowitz's division-free algorithm otherwise.
pub fn char_poly(m: &SymIntMatrix) -> IntPoly {
    if m.support_is_forest() {
        char_poly_forest(m)
    } else {
        char_poly_berkowitz(&m.to_dense())
    }
}

/// Berkowitz's algorithm on a dense square matrix; exact, no division.
pub fn char_poly_berkowitz(a: &[Vec<i64>]) -> IntPoly {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    // coefficients in descending order, leading 1
    let mut p = vec![BigInt::from(1)];
    for r in 0..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::from(1));
        t.push(-a[r][r].clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rv: BigInt = (0..r).map(|j| &a[r][j] * &v[j]).sum();
            t.push(-rv);
            v = (0..r)
                .map(|i| (0..r).map(|j| &a[i][j] * &v[j]).sum())
                .collect();
        }
        let q: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .map(|j| &t[i - j] * &p[j])
                    .sum()
            })
            .collect();
        p = q;
    }
    p.reverse();
    IntPoly::from_coeffs(p)
}

/// Characteristic polynomial of a matrix whose off-diagonal support is a forest.
///
/// For a subtree rooted at `v` with children `c`, joined by entries `a_vc`:
/// `f_v = (x - m_vv) prod f_c - sum_c a_vc^2 g_c prod_{c' != c} f_c'`
/// where `g_c = prod` of `f` over the children of `c`.
pub fn char_poly_forest(m: &SymIntMatrix) -> IntPoly {
    let n = m.order();
    let mut seen = vec![false; n];
    let mut pos = vec![0usize; n];
    let mut total = IntPoly::one();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        // preorder: every parent precedes its children
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut stack = vec![(root, usize::MAX)];
        seen[root] = true;
        while let Some((v, parent)) = stack.pop() {
            pos[v] = order.len();
            order.push((v, parent));
            for &(w, _) in &m.off[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, v));
                }
            }
        }
        // per vertex: (product of child f, accumulated correction sum)
        let mut acc = vec![(IntPoly::one(), IntPoly::zero()); order.len()];
        let mut root_poly = IntPoly::one();
        for k in (0..order.len()).rev() {
            let (v, parent) = order[k];
            let (prod, sub) = std::mem::take(&mut acc[k]);
            let fv = IntPoly::linear_root(m.diag[v]) * &prod - sub;
            if parent == usize::MAX {
                root_poly = fv;
                continue;
            }
            let a2 = BigInt::from(m.get(parent, v)) * BigInt::from(m.get(v, parent));
            let (pf, ps) = &mut acc[pos[parent]];
            *ps = &*ps * &fv + (&prod * &*pf).scale(&a2);
            *pf = &*pf * &fv;
        }
        total = total * root_poly;
    }
    total
}

/// Whether every eigenvalue of `m` is strictly below `r`, i.e. `rI - m` is
/// positive definite. Exact: eliminates leaves first, which causes no fill-in
/// on a forest, and checks that every pivot is positive. `None` if the
/// off-diagonal support is not a forest.
pub fn spectrum_below(m: &SymIntMatrix, r: &BigRational) -> Option<bool> {
    if !m.support_is_forest() {
        return None;
    }
    let n = m.order();
    let mut seen = vec![false; n];
    let mut pos = vec![0usize; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut stack = vec![(root, usize::MAX)];
        seen[root] = true;
        while let Some((v, parent)) = stack.pop() {
            pos[v] = order.len();
            order.push((v, parent));
            for &(w, _) in &m.off[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, v));
                }
            }
        }
        let mut pivot: Vec<BigRational> = order
            .iter()
            .map(|&(v, _)| r - BigRational::from(BigInt::from(m.diag[v])))
            .collect();
        for k in (0..order.len()).rev() {
            if !pivot[k].is_positive() {
                return Some(false);
            }
            let (v, parent) = order[k];
            if parent != usize::MAX {
                let a = BigInt::from(m.get(parent, v));
                let drop = BigRational::from(&a * &a) / &pivot[k];
                pivot[pos[parent]] -= drop;
            }
        }
    }
    Some(true)
}

/// Two-sided enclosure of the largest eigenvalue of a nonnegative matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerronEnclosure {
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
}

impl PerronEnclosure {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn meets(&self, lo: f64, hi: f64) -> bool {
        self.lower <= hi && lo <= self.upper
    }
}

/// Power iteration on `M + I` with Collatz-Wielandt bounds
/// `min (Mv)_i / v_i <= lambda <= max (Mv)_i / v_i`, stopped once the
/// bracket is narrower than `tol`. The shift makes periodic (bipartite)
/// matrices converge.
pub fn perron_value(
    m: &SymIntMatrix,
    tol: f64,
    max_iterations: usize,
) -> Result<PerronEnclosure, SpectralError> {
    let n = m.order();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    for i in 0..n {
        if m.diag[i] < 0 {
            return Err(SpectralError::NegativeEntries(i, i));
        }
        if let Some(&(j, _)) = m.off[i].iter().find(|&&(_, a)| a < 0) {
            return Err(SpectralError::NegativeEntries(i, j));
        }
    }
    let scale = (0..n)
        .map(|i| m.diag[i] as f64 + m.off[i].iter().map(|&(_, a)| a as f64).sum::<f64>())
        .fold(1.0, f64::max);
    // allowance for rounding in one matrix-vector product
    let slack = 8.0 * f64::EPSILON * scale * (n as f64).sqrt().max(1.0);
    let mut v = vec![1.0; n];
    let mut w = vec![0.0; n];
    let mut width = f64::INFINITY;
    for it in 1..=max_iterations {
        m.mul_vec(&v, &mut w);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..n {
            let q = w[i] / v[i];
            lo = lo.min(q);
            hi = hi.max(q);
        }
        let (lo, hi) = ((lo - slack).max(0.0), hi + slack);
        width = hi - lo;
        if width <= tol {
            return Ok(PerronEnclosure {
                lower: lo,
                upper: hi,
                iterations: it,
            });
        }
        // v <- (M + I) v, normalised; entries stay positive
        let mut norm = 0.0f64;
        for i in 0..n {
            w[i] += v[i];
            norm = norm.max(w[i]);
        }
        for i in 0..n {
            v[i] = (w[i] / norm).max(f64::MIN_POSITIVE);
        }
    }
    Err(SpectralError::NotConverged {
        iterations: max_iterations,
        tol,
        width,
    })
}
