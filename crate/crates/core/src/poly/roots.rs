//! Certified real-root isolation.
//!
//! Everything here is exact: Sturm sign variations decide root counts,
//! bisection happens on rational endpoints, and multiplicities come from the
//! squarefree decomposition. Floating point is used only as a filter: a sign
//! is taken from it when a rigorous error bound decides it, and when a root is
//! rendered for humans.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{
    gcd_primitive, rational_to_decimal, rational_to_f64, signed_rem_primitive,
    squarefree_decomposition, squarefree_part, IntPoly, PolyError,
};

/// A rational interval holding exactly one distinct real root.
///
/// Either a single point (`lo == hi`, the root is rational and known exactly)
/// or an open interval whose endpoints are not roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(r: BigRational) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn lo_f64(&self) -> f64 {
        rational_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        rational_to_f64(&self.hi)
    }

    /// Whether the closed interval `[lo, hi]` meets `[a, b]`.
    pub fn meets(&self, a: &BigRational, b: &BigRational) -> bool {
        &self.lo <= b && a <= &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

/// A polynomial with a floating-point copy of its coefficients.
#[derive(Clone, Debug)]
struct Shadowed {
    exact: IntPoly,
    approx: Vec<f64>,
}

impl Shadowed {
    fn new(exact: IntPoly) -> Self {
        let approx = exact
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        Shadowed { exact, approx }
    }

    fn sign_at(&self, x: &BigRational) -> Sign {
        float_sign(&self.approx, x).unwrap_or_else(|| self.exact.sign_at(x))
    }
}

/// `x` as an `f64` when that is exact: dyadic, numerator of at most 53 bits.
fn dyadic_f64(x: &BigRational) -> Option<f64> {
    let (n, d) = (x.numer(), x.denom());
    let k = d.trailing_zeros().unwrap_or(0);
    if d.bits() != k + 1 || n.bits() > 53 || k > 900 {
        return None;
    }
    Some(n.to_f64()? / 2f64.powi(k as i32))
}

/// Sign of the polynomial with (rounded) coefficients `c` at `x`, if the
/// Horner rounding error bound `(2n + 1) u sum |c_i| |x|^i` cannot flip it.
fn float_sign(c: &[f64], x: &BigRational) -> Option<Sign> {
    let x = dyadic_f64(x)?;
    let ax = x.abs();
    let (mut v, mut s) = (0f64, 0f64);
    for &a in c.iter().rev() {
        v = v * x + a;
        s = s * ax + a.abs();
    }
    let err = s * (2 * c.len() + 4) as f64 * f64::EPSILON;
    if !err.is_finite() || !v.is_finite() || s < 1e-250 {
        return None;
    }
    if v > err {
        Some(Sign::Plus)
    } else if v < -err {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// Canonical Sturm sequence of a squarefree polynomial, each member kept
/// primitive (positive rescaling does not change sign variations).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Shadowed>,
}

impl SturmChain {
    /// The caller guarantees `p` is squarefree and nonzero.
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let r = signed_rem_primitive(&chain[k - 2], &chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        SturmChain {
            chain: chain.into_iter().map(Shadowed::new).collect(),
        }
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.chain[0].exact
    }

    /// Sign of the first member at `x`.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        self.chain[0].sign_at(x)
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn count_variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut v = 0;
        for s in signs.filter(|&s| s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::count_variations(self.chain.iter().map(|p| {
            let lead = p.exact.leading().expect("chain members are nonzero").sign();
            let odd = p.exact.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lead
            } else {
                -lead
            }
        }))
    }

    /// Distinct roots in `(a, b]`. A root at `a` itself is not counted.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots overall.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// Distinct real roots of the squarefree `p` in `(a, b]`.
pub fn sturm_count(p: &IntPoly, a: &BigRational, b: &BigRational) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if a >= b {
        return Err(PolyError::EmptyInterval);
    }
    if squarefree_part(p)?.degree() != p.degree() {
        return Err(PolyError::NotSquarefree);
    }
    if p.sign_at(a) == Sign::NoSign {
        return Err(PolyError::EndpointIsRoot);
    }
    Ok(SturmChain::new(p).count(a, b))
}

/// `1 + ceil(max |c_i / c_n|)`: every complex root has modulus strictly below it.
pub fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| {
            let c = c.abs();
            (&c + &lc - BigInt::one()) / &lc
        })
        .max()
        .unwrap_or_default();
    max + BigInt::one()
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Isolates every real root of a squarefree polynomial, ascending.
/// Fails if some roots are not real.
fn isolate_squarefree(chain: &SturmChain) -> Result<Vec<Interval>, PolyError> {
    let s = chain.polynomial();
    let deg = s.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let real = chain.count_real();
    if real != deg {
        return Err(PolyError::ComplexRootsPresent {
            real,
            expected: deg,
        });
    }
    let b = BigRational::from(cauchy_bound(s));
    let mut out = Vec::with_capacity(deg);
    let mut stack = vec![(-b.clone(), b, deg)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push(Interval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) * half();
                if chain.sign_at(&mid) != Sign::NoSign {
                    let left = chain.count(&lo, &mid);
                    stack.push((mid.clone(), hi, count - left));
                    stack.push((lo, mid, left));
                    continue;
                }
                // Rational root at the midpoint: fence it off with non-root endpoints.
                let mut eps = (&hi - &lo) / BigRational::from(BigInt::from(4));
                let (l, r) = loop {
                    let l = &mid - &eps;
                    let r = &mid + &eps;
                    if chain.sign_at(&l) != Sign::NoSign
                        && chain.sign_at(&r) != Sign::NoSign
                        && chain.count(&l, &r) == 1
                    {
                        break (l, r);
                    }
                    eps *= half();
                };
                let left = chain.count(&lo, &l);
                let right = chain.count(&r, &hi);
                debug_assert_eq!(left + right + 1, count);
                stack.push((r, hi, right));
                out.push(Interval::point(mid));
                stack.push((lo, l, left));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Shrinks an isolating interval of the squarefree `s` until its width is at most `tol`.
///
/// Integers inside the interval are tried first, so integer roots (the only
/// rational roots of a monic polynomial) end up as exact points.
fn refine(s: &Shadowed, iv: &mut Interval, tol: &BigRational) {
    loop {
        if iv.is_exact() {
            return;
        }
        let c = BigRational::from(iv.lo.floor().to_integer() + BigInt::one());
        if c < iv.hi {
            split_at(s, iv, &c);
            continue;
        }
        if &iv.width() <= tol {
            return;
        }
        if let (Some(lo), Some(hi)) = (dyadic(&iv.lo), dyadic(&iv.hi)) {
            return refine_dyadic(s, iv, lo, hi, tol);
        }
        let mid = iv.midpoint();
        match s.sign_at(&mid) {
            Sign::NoSign => *iv = Interval::point(mid),
            sg if sg == s.sign_at(&iv.lo) => iv.lo = mid,
            _ => iv.hi = mid,
        }
    }
}

/// `x = a / 2^k` as `(a, k)`.
fn dyadic(x: &BigRational) -> Option<(BigInt, u64)> {
    let k = x.denom().trailing_zeros().unwrap_or(0);
    (x.denom().bits() == k + 1).then(|| (x.numer().clone(), k))
}

/// Bisection on integer numerators over a common power-of-two denominator.
fn refine_dyadic(s: &Shadowed, iv: &mut Interval, lo: (BigInt, u64), hi: (BigInt, u64), tol: &BigRational) {
    let k0 = lo.1.max(hi.1);
    let mut a = lo.0 << (k0 - lo.1);
    let mut b = hi.0 << (k0 - hi.1);
    let mut k = k0;
    let lo_sign = s.sign_at(&iv.lo);
    let (p, q) = (tol.numer(), tol.denom());
    while (&b - &a) * q > p << k {
        let m = &a + &b;
        k += 1;
        a <<= 1;
        b <<= 1;
        let x = BigRational::new_raw(m.clone(), BigInt::one() << k);
        match s.sign_at(&x) {
            Sign::NoSign => {
                *iv = Interval::point(BigRational::new(m, BigInt::one() << k));
                return;
            }
            sg if sg == lo_sign => a = m,
            _ => b = m,
        }
    }
    iv.lo = BigRational::new(a, BigInt::one() << k);
    iv.hi = BigRational::new(b, BigInt::one() << k);
}

/// Splits an open isolating interval at `c` if `c` lies strictly inside it.
fn split_at(s: &Shadowed, iv: &mut Interval, c: &BigRational) {
    if iv.is_exact() || !(&iv.lo < c && c < &iv.hi) {
        return;
    }
    match s.sign_at(c) {
        Sign::NoSign => *iv = Interval::point(c.clone()),
        sg if sg == s.sign_at(&iv.lo) => iv.lo = c.clone(),
        _ => iv.hi = c.clone(),
    }
}

/// One distinct real root of a [`JointRoots`] table.
#[derive(Clone, Debug)]
pub struct JointRoot {
    pub interval: Interval,
    /// Multiplicity in each input polynomial (0 when absent).
    pub multiplicities: Vec<usize>,
}

/// The union of the real roots of several polynomials, sorted, with exact
/// multiplicities per polynomial.
///
/// Since all intervals isolate roots of one squarefree polynomial, roots of
/// different inputs are compared by position in the table: equality and
/// strict order are both exact.
#[derive(Clone, Debug)]
pub struct JointRoots {
    pub roots: Vec<JointRoot>,
    chain: SturmChain,
    /// Squarefree decomposition of each input: layer `j` holds the roots of multiplicity `j + 1`.
    layers: Vec<Vec<Shadowed>>,
}

impl JointRoots {
    /// Fails if any input is zero or has non-real roots.
    pub fn new(polys: &[&IntPoly]) -> Result<Self, PolyError> {
        let mut layers = Vec::with_capacity(polys.len());
        let mut squarefree = IntPoly::one();
        for p in polys {
            let dec = squarefree_decomposition(p)?;
            let sf = dec.iter().fold(IntPoly::one(), |acc, h| &acc * h);
            let shared = gcd_primitive(&squarefree, &sf)?;
            let fresh = sf.div_exact(&shared).expect("gcd divides its argument");
            squarefree = (&squarefree * &fresh).primitive();
            layers.push(dec);
        }
        let chain = SturmChain::new(&squarefree);
        let intervals = isolate_squarefree(&chain)?;
        let roots = intervals
            .into_iter()
            .map(|interval| {
                let multiplicities = layers
                    .iter()
                    .map(|dec| {
                        dec.iter()
                            .position(|h| has_root_in(h, &interval))
                            .map_or(0, |k| k + 1)
                    })
                    .collect();
                JointRoot {
                    interval,
                    multiplicities,
                }
            })
            .collect();
        let layers = layers
            .into_iter()
            .map(|dec| dec.into_iter().map(Shadowed::new).collect())
            .collect();
        Ok(JointRoots {
            roots,
            chain,
            layers,
        })
    }

    /// Squarefree polynomial whose roots are exactly the table entries.
    pub fn squarefree(&self) -> &IntPoly {
        self.chain.polynomial()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Table index of the largest root of input `i`.
    pub fn largest_of(&self, i: usize) -> Option<usize> {
        self.roots.iter().rposition(|r| r.multiplicities[i] > 0)
    }

    /// Table index of the smallest root of input `i`.
    pub fn smallest_of(&self, i: usize) -> Option<usize> {
        self.roots.iter().position(|r| r.multiplicities[i] > 0)
    }

    /// Roots of input `i` as table indices, repeated by multiplicity, ascending.
    pub fn expanded(&self, i: usize) -> Vec<usize> {
        self.roots
            .iter()
            .enumerate()
            .flat_map(|(k, r)| std::iter::repeat_n(k, r.multiplicities[i]))
            .collect()
    }

    /// Shrinks every interval to width at most `tol`.
    pub fn refine(&mut self, tol: &BigRational) {
        for r in &mut self.roots {
            let s = witness(&self.layers, &self.chain, &r.multiplicities);
            refine(s, &mut r.interval, tol);
        }
    }

    /// Shrinks one interval to width at most `tol`.
    pub fn refine_root(&mut self, k: usize, tol: &BigRational) {
        let r = &mut self.roots[k];
        refine(witness(&self.layers, &self.chain, &r.multiplicities), &mut r.interval, tol);
    }
}

/// Lowest-degree squarefree layer vanishing at a table root. Inside an
/// isolating interval it has that root as its only, simple, root.
fn witness<'a>(layers: &'a [Vec<Shadowed>], chain: &'a SturmChain, mult: &[usize]) -> &'a Shadowed {
    mult.iter()
        .zip(layers)
        .filter(|(&m, _)| m > 0)
        .map(|(&m, dec)| &dec[m - 1])
        .min_by_key(|h| h.exact.degree())
        .unwrap_or(&chain.chain[0])
}

/// Whether the squarefree factor `h` (a divisor of the table's squarefree
/// polynomial) vanishes at the root isolated by `iv`.
fn has_root_in(h: &IntPoly, iv: &Interval) -> bool {
    if h.degree().unwrap_or(0) == 0 {
        return false;
    }
    if iv.is_exact() {
        return h.sign_at(&iv.lo) == Sign::NoSign;
    }
    // At most one simple root of h lies inside, so a sign change detects it.
    h.sign_at(&iv.lo) != h.sign_at(&iv.hi)
}

/// One distinct root of a [`RootSet`].
#[derive(Clone, Debug)]
pub struct Root {
    pub interval: Interval,
    pub multiplicity: usize,
}

impl Root {
    /// Exact value for rational roots, otherwise the interval midpoint.
    pub fn approx(&self) -> BigRational {
        self.interval.midpoint()
    }

    pub fn approx_f64(&self) -> f64 {
        rational_to_f64(&self.approx())
    }

    pub fn is_exact(&self) -> bool {
        self.interval.is_exact()
    }

    /// Decimal rendering of the approximation.
    pub fn decimal(&self, digits: usize) -> String {
        rational_to_decimal(&self.approx(), digits)
    }
}

/// All real roots of a real-rooted polynomial, certified.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Degree of the input polynomial.
    pub degree: usize,
    chain: SturmChain,
}

impl RootSet {
    /// Isolates and refines every root to width `<= tol`. No interval
    /// straddles zero, so sign questions can be read off the endpoints.
    pub fn isolate(p: &IntPoly, tol: &BigRational) -> Result<Self, PolyError> {
        let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
        let mut table = JointRoots::new(&[p])?;
        for r in &mut table.roots {
            split_at(&table.chain.chain[0], &mut r.interval, &BigRational::zero());
        }
        table.refine(tol);
        let roots: Vec<Root> = table
            .roots
            .into_iter()
            .map(|r| Root {
                interval: r.interval,
                multiplicity: r.multiplicities[0],
            })
            .collect();
        debug_assert_eq!(roots.iter().map(|r| r.multiplicity).sum::<usize>(), degree);
        Ok(RootSet {
            roots,
            degree,
            chain: table.chain,
        })
    }

    pub fn squarefree(&self) -> &IntPoly {
        self.chain.polynomial()
    }

    pub fn distinct(&self) -> usize {
        self.roots.len()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn largest(&self) -> Option<&Root> {
        self.roots.last()
    }

    pub fn smallest(&self) -> Option<&Root> {
        self.roots.first()
    }

    /// Multiplicity of zero as a root.
    pub fn zero_multiplicity(&self) -> usize {
        self.roots
            .iter()
            .find(|r| r.is_exact() && r.interval.lo.is_zero())
            .map_or(0, |r| r.multiplicity)
    }

    /// Distinct roots in `(a, b]`, counted with the Sturm chain.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.chain.count(a, b)
    }

    /// Distinct strictly positive roots.
    pub fn positive_distinct(&self) -> usize {
        self.roots
            .iter()
            .filter(|r| r.interval.lo.is_positive() || (!r.is_exact() && !r.interval.lo.is_negative()))
            .count()
    }

    /// Distinct strictly negative roots, from a Sturm count on `(-B, 0)`.
    pub fn negative_distinct(&self) -> usize {
        if self.degree == 0 {
            return 0;
        }
        let b = BigRational::from(cauchy_bound(self.chain.polynomial()));
        let zero = BigRational::zero();
        let at_zero = usize::from(self.chain.sign_at(&zero) == Sign::NoSign);
        self.chain.count(&-b, &zero) - at_zero
    }

    /// Shrinks root `k` to width `<= tol`.
    pub fn refine_root(&mut self, k: usize, tol: &BigRational) {
        refine(&self.chain.chain[0], &mut self.roots[k].interval, tol);
    }
}

/// Outcome of comparing the sorted root sequences of two equal-degree
/// polynomials `p` (roots `a_i`) and `q` (roots `b_i`).
#[derive(Clone, Debug)]
pub struct Interlacing {
    /// `b_1 <= a_1 <= b_2 <= a_2 <= ... <= b_n <= a_n`.
    pub q_then_p: bool,
    /// `a_1 <= b_1 <= a_2 <= b_2 <= ... <= a_n <= b_n`.
    pub p_then_q: bool,
    /// Largest `|m_p(r) - m_q(r)|` over all roots `r` of either polynomial.
    pub max_multiplicity_gap: usize,
    /// Joint root table of `[p, q]`.
    pub table: JointRoots,
}

impl Interlacing {
    pub fn holds(&self) -> bool {
        self.q_then_p || self.p_then_q
    }
}

/// Decides both interlacing orders exactly. Shared roots are found by the
/// joint table, so ties are resolved without tolerance.
pub fn interlace_certify(p: &IntPoly, q: &IntPoly) -> Result<Interlacing, PolyError> {
    let dp = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let dq = q.degree().ok_or(PolyError::ZeroPolynomial)?;
    if dp != dq {
        return Err(PolyError::DegreeMismatch(dp, dq));
    }
    let table = JointRoots::new(&[p, q])?;
    let a = table.expanded(0);
    let b = table.expanded(1);
    let ordered = |lower: &[usize], upper: &[usize]| {
        (0..lower.len()).all(|i| lower[i] <= upper[i] && upper.get(i).zip(lower.get(i + 1)).is_none_or(|(u, l)| u <= l))
    };
    let max_multiplicity_gap = table
        .roots
        .iter()
        .map(|r| r.multiplicities[0].abs_diff(r.multiplicities[1]))
        .max()
        .unwrap_or(0);
    Ok(Interlacing {
        q_then_p: ordered(&b, &a),
        p_then_q: ordered(&a, &b),
        max_multiplicity_gap,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn tol() -> BigRational {
        q(1, 1_000_000_000)
    }

    #[test]
    fn sturm_examples() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(sturm_count(&f, &q(-2, 1), &q(0, 1)), Ok(1));
        assert_eq!(sturm_count(&f, &q(0, 1), &q(2, 1)), Ok(1));
        assert_eq!(sturm_count(&f, &q(-3, 1), &q(3, 1)), Ok(2));
        // x^3 - 2x^2 is not squarefree; its squarefree part x^2 - 2x has roots 0 and 2
        let g = p(&[0, 0, -2, 1]);
        assert_eq!(sturm_count(&g, &q(-1, 1), &q(1, 1)), Err(PolyError::NotSquarefree));
        let sf = squarefree_part(&g).unwrap();
        assert_eq!(sturm_count(&sf, &q(-1, 1), &q(1, 1)), Ok(1));
        assert_eq!(sturm_count(&sf, &q(0, 1), &q(1, 1)), Err(PolyError::EndpointIsRoot));
        assert_eq!(sturm_count(&sf, &q(1, 1), &q(1, 1)), Err(PolyError::EmptyInterval));
        // upper endpoint roots are counted: (1, 2] contains 2
        assert_eq!(sturm_count(&sf, &q(1, 1), &q(2, 1)), Ok(1));
    }

    #[test]
    fn isolate_p3_lm() {
        let f = IntPoly::from_roots(&[0, 1, 3]);
        let rs = RootSet::isolate(&f, &tol()).unwrap();
        let vals: Vec<_> = rs.roots.iter().map(|r| (r.approx(), r.multiplicity, r.is_exact())).collect();
        assert_eq!(
            vals,
            vec![(q(0, 1), 1, true), (q(1, 1), 1, true), (q(3, 1), 1, true)]
        );
        assert_eq!(rs.zero_multiplicity(), 1);
        assert_eq!(rs.positive_distinct(), 2);
        assert_eq!(rs.negative_distinct(), 0);
    }

    #[test]
    fn isolate_c3_lm() {
        let f = p(&[-2, 9, -6, 1]);
        let rs = RootSet::isolate(&f, &tol()).unwrap();
        assert_eq!(rs.distinct(), 3);
        let expect = [2.0 - 3f64.sqrt(), 2.0, 2.0 + 3f64.sqrt()];
        for (r, e) in rs.roots.iter().zip(expect) {
            assert!((r.approx_f64() - e).abs() < 1e-9, "{} vs {e}", r.approx_f64());
            assert!(r.interval.width() <= tol());
            assert!(r.interval.lo_f64() <= e && e <= r.interval.hi_f64());
        }
        assert!(rs.roots[1].is_exact());
        assert_eq!(rs.largest().unwrap().decimal(9), "3.732050808");
    }

    #[test]
    fn isolate_double_root() {
        let rs = RootSet::isolate(&p(&[1, -2, 1]), &tol()).unwrap();
        assert_eq!(rs.distinct(), 1);
        assert_eq!(rs.roots[0].multiplicity, 2);
        assert_eq!(rs.roots[0].approx(), q(1, 1));
        assert_eq!(rs.total_multiplicity(), 2);
    }

    #[test]
    fn isolate_errors() {
        assert_eq!(
            RootSet::isolate(&p(&[1, 0, 1]), &tol()).unwrap_err(),
            PolyError::ComplexRootsPresent { real: 0, expected: 2 }
        );
        assert_eq!(RootSet::isolate(&IntPoly::zero(), &tol()).unwrap_err(), PolyError::ZeroPolynomial);
        assert_eq!(RootSet::isolate(&p(&[3]), &tol()).unwrap().distinct(), 0);
    }

    #[test]
    fn irrational_root_near_zero_is_split() {
        // roots +-1/1000 * sqrt(2): the initial interval straddles zero
        let f = p(&[-2, 0, 1_000_000]);
        let rs = RootSet::isolate(&f, &tol()).unwrap();
        assert_eq!(rs.positive_distinct(), 1);
        assert_eq!(rs.negative_distinct(), 1);
        assert!(rs.roots[0].interval.hi <= BigRational::zero());
    }

    #[test]
    fn clustered_roots() {
        // g(x) = f(1000x) has roots 1, 1.001, 1.002
        let f = IntPoly::from_roots(&[1000, 1001, 1002]);
        let g = IntPoly::from_coeffs(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(1000).pow(i as u32))
                .collect(),
        );
        let rs = RootSet::isolate(&g, &tol()).unwrap();
        assert_eq!(rs.distinct(), 3);
    }

    #[test]
    fn joint_table_orders_roots_exactly() {
        let a = IntPoly::from_roots(&[0, 2]);
        let b = IntPoly::from_roots(&[2, 2, 5]);
        let t = JointRoots::new(&[&a, &b]).unwrap();
        let m: Vec<_> = t.roots.iter().map(|r| r.multiplicities.clone()).collect();
        assert_eq!(m, vec![vec![1, 0], vec![1, 2], vec![0, 1]]);
        assert_eq!(t.largest_of(0), Some(1));
        assert_eq!(t.largest_of(1), Some(2));
        assert_eq!(t.expanded(1), vec![1, 1, 2]);
    }

    #[test]
    fn interlace_lm_c3_over_p3() {
        let c3 = p(&[-2, 9, -6, 1]);
        let p3 = IntPoly::from_roots(&[0, 1, 3]);
        let il = interlace_certify(&c3, &p3).unwrap();
        assert!(il.q_then_p);
        assert!(!il.p_then_q);
        assert_eq!(il.max_multiplicity_gap, 1);
    }

    #[test]
    fn interlace_is_reflexive() {
        let f = IntPoly::from_roots(&[0, 1, 1, 4]);
        let il = interlace_certify(&f, &f).unwrap();
        assert!(il.q_then_p && il.p_then_q);
        assert_eq!(il.max_multiplicity_gap, 0);
    }

    #[test]
    fn interlace_direction_is_reported() {
        // roots {0, 2} and {1, 3}: 0 <= 1 <= 2 <= 3
        let a = IntPoly::from_roots(&[0, 2]);
        let b = IntPoly::from_roots(&[1, 3]);
        let il = interlace_certify(&a, &b).unwrap();
        assert!(il.p_then_q && !il.q_then_p);
        let il = interlace_certify(&b, &a).unwrap();
        assert!(il.q_then_p && !il.p_then_q);
        // {0, 3} against {1, 2} interlaces in neither order
        let il = interlace_certify(&IntPoly::from_roots(&[0, 3]), &IntPoly::from_roots(&[1, 2])).unwrap();
        assert!(!il.holds());
    }

    #[test]
    fn interlace_errors() {
        let a = IntPoly::from_roots(&[0, 2]);
        assert_eq!(
            interlace_certify(&a, &IntPoly::from_roots(&[1])).unwrap_err(),
            PolyError::DegreeMismatch(2, 1)
        );
        assert!(matches!(
            interlace_certify(&a, &p(&[1, 0, 1])).unwrap_err(),
            PolyError::ComplexRootsPresent { .. }
        ));
    }

    #[test]
    fn float_filter_agrees_with_exact_signs() {
        // (x - 1/3)^2 (x - 3) has a double root near the dyadic grid points
        let f = p(&[-1, 7, -19, 9]);
        let sh = Shadowed::new(f.clone());
        let mut decided = 0;
        for num in -4096i64..=4096 {
            let x = BigRational::new(BigInt::from(num), BigInt::from(1024));
            if let Some(sg) = float_sign(&sh.approx, &x) {
                decided += 1;
                assert_eq!(sg, f.sign_at(&x), "at {x}");
            }
            assert_eq!(sh.sign_at(&x), f.sign_at(&x));
        }
        assert!(decided > 8000);
        assert_eq!(dyadic_f64(&BigRational::new(BigInt::from(1), BigInt::from(3))), None);
        assert_eq!(dyadic_f64(&BigRational::new(BigInt::from(-5), BigInt::from(8))), Some(-0.625));
    }
}
