//! Dense univariate polynomials over arbitrary-precision integers and rationals.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector, and the last
//! stored coefficient is never zero.

mod roots;

pub use roots::{
    interlace_certify, sturm_count, Interlacing, Interval, JointRoot, JointRoots, Root, RootSet,
    SturmChain,
};

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("lower endpoint is a root")]
    EndpointIsRoot,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("empty interval: lower endpoint must be below the upper one")]
    EmptyInterval,
    #[error("only {real} of {expected} distinct roots are real")]
    ComplexRootsPresent { real: usize, expected: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `x - r`.
    pub fn linear_root(r: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![-r.into(), BigInt::one()])
    }

    /// Ascending coefficients; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(x - r_1)(x - r_2)...`
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x^k p(x)`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// `p(x^2)`.
    pub fn substitute_square(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// `p(x + a)` by repeated synthetic division.
    pub fn translate(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn derivative(&self) -> IntPoly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of `p(x)` without forming rationals: evaluates the homogenised
    /// numerator `sum c_i a^i b^(n-i)` for `x = a/b`, `b > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let Some(n) = self.degree() else {
            return Sign::NoSign;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = self.coeffs[n].clone();
        let mut bpow = BigInt::one();
        for c in self.coeffs[..n].iter().rev() {
            bpow *= b;
            acc = acc * a + c * &bpow;
        }
        acc.sign()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let Some(start) = self.coeffs.iter().filter(|c| !c.is_zero()).min_by_key(|c| c.bits()) else {
            return BigInt::zero();
        };
        let mut g = start.abs();
        for c in &self.coeffs {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().cloned().map(BigRational::from).collect())
    }

    /// Decimal coefficient strings, ascending by power.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every intermediate leading term; `None` as soon as that fails.
    fn div_rem_integral(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = d.degree()?;
        let lc = d.leading()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (t, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &t * dc;
            }
            q[k] = t;
        }
        Some((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Exact quotient `self / d` when `d` divides `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        match self.div_rem_integral(d) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Remainder of `self` modulo a monic divisor, computed in `Z[x]`.
    pub fn rem_monic(&self, d: &IntPoly) -> IntPoly {
        assert!(d.is_monic(), "rem_monic needs a monic divisor");
        self.div_rem_integral(d).expect("monic division is integral").1
    }

    /// `self(x)^k`.
    pub fn pow(&self, k: usize) -> IntPoly {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

fn write_terms<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, C, bool, bool)>,
) -> fmt::Result {
    // (power, |c|, negative, |c| == 1)
    let mut first = true;
    for (k, abs, neg, unit) in terms {
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (k, unit) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => write!(f, "x")?,
            (1, false) => write!(f, "{abs}x")?,
            (_, true) => write!(f, "x^{k}")?,
            (_, false) => write!(f, "{abs}x^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    /// `x^3 - 4x^2 + 3x`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.abs(), c.is_negative(), c.abs().is_one())),
        )
    }
}

fn add_coeffs<T: Clone + Zero>(a: &[T], b: &[T], sub: bool) -> Vec<T>
where
    for<'x> &'x T: Add<Output = T> + Sub<Output = T> + Neg<Output = T>,
{
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) if sub => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if sub => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => T::zero(),
        })
        .collect()
}

fn mul_coeffs<T: Clone + Zero + AddAssign>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'x> &'x T: Mul<Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

macro_rules! ring_ops {
    ($t:ident, $c:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $t::from_coeffs(mul_coeffs(&self.coeffs, &rhs.coeffs))
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t {
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        ring_ops!(@mixed $t, Add, add);
        ring_ops!(@mixed $t, Sub, sub);
        ring_ops!(@mixed $t, Mul, mul);
    };
    (@mixed $t:ident, $tr:ident, $f:ident) => {
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $f(self, rhs: &$t) -> $t {
                (&self).$f(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                self.$f(&rhs)
            }
        }
    };
}

ring_ops!(IntPoly, BigInt);
ring_ops!(RatPoly, BigRational);

/// Polynomial with arbitrary-precision rational coefficients (always reduced).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => RatPoly {
                coeffs: self.coeffs.iter().map(|c| c / lc).collect(),
            },
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Clears denominators and content: the primitive integer multiple with positive leading coefficient.
    pub fn to_int_primitive(&self) -> IntPoly {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from(l.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    /// Returns the integer polynomial if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let dd = d.degree().ok_or(PolyError::ZeroDivisor)?;
        let lc = d.leading().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] / lc;
            if t.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &t * dc;
            }
            q[k] = t;
        }
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let abs = c.abs();
                    let s = if abs.is_integer() {
                        abs.to_integer().to_string()
                    } else {
                        format!("({abs})")
                    };
                    (k, s, c.is_negative(), abs.is_one())
                }),
        )
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rat()
    }
}

/// Pseudo-remainder `lc(b)^k a - q b` for the number of reduction steps `k`
/// actually taken. The second value is `k`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> (IntPoly, u32) {
    let db = b.degree().expect("nonzero divisor");
    let lc = b.leading().expect("nonzero divisor");
    let mut r = a.coeffs.clone();
    let mut steps = 0;
    while r.len() > db {
        let k = r.len() - 1 - db;
        let top = r.pop().expect("nonempty");
        if !top.is_zero() {
            for c in r.iter_mut() {
                *c *= lc;
            }
            for (j, bc) in b.coeffs[..db].iter().enumerate() {
                r[k + j] -= &top * bc;
            }
            steps += 1;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    (IntPoly::from_coeffs(r), steps)
}

/// Remainder of `a` by `b` up to a positive constant factor, as a primitive polynomial.
pub(crate) fn signed_rem_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (r, steps) = pseudo_rem(a, b);
    let flip = b.leading().is_some_and(Signed::is_negative) && steps % 2 == 1;
    if r.is_zero() {
        return r;
    }
    let g = r.content();
    let r = IntPoly {
        coeffs: r.coeffs.iter().map(|c| c / &g).collect(),
    };
    if flip {
        -r
    } else {
        r
    }
}

/// Primitive gcd in `Z[x]` with positive leading coefficient.
pub fn gcd_primitive(p: &IntPoly, q: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = (p.primitive(), q.primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).0.primitive();
        a = b;
        b = r;
    }
    Ok(a.primitive())
}

/// Monic greatest common divisor over the rationals.
pub fn gcd(p: &IntPoly, q: &IntPoly) -> Result<RatPoly, PolyError> {
    Ok(gcd_primitive(p, q)?.to_rat().monic())
}

/// Product of the distinct irreducible factors of `p`, primitive.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let g = gcd_primitive(p, &p.derivative())?;
    Ok(p
        .primitive()
        .div_exact(&g)
        .expect("gcd divides its argument")
        .primitive())
}

/// Yun-style decomposition: element `k` collects the irreducible factors of
/// multiplicity exactly `k + 1`. The elements are primitive, squarefree and
/// pairwise coprime; constants mark multiplicities that do not occur.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<IntPoly>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    // chain[k] = gcd(chain[k-1], chain[k-1]'), chain[0] = p.
    let mut chain = vec![p.primitive()];
    while chain.last().is_some_and(|c| c.degree() > Some(0)) {
        let c = chain.last().expect("nonempty");
        chain.push(gcd_primitive(c, &c.derivative())?);
    }
    // at_least[k]: product of factors with multiplicity >= k + 1.
    let at_least: Vec<IntPoly> = chain
        .windows(2)
        .map(|w| w[0].div_exact(&w[1]).expect("chain divides").primitive())
        .collect();
    let mut out = Vec::with_capacity(at_least.len());
    for k in 0..at_least.len() {
        let next = at_least.get(k + 1).cloned().unwrap_or_else(IntPoly::one);
        out.push(
            at_least[k]
                .div_exact(&next)
                .expect("multiplicity layers nest")
                .primitive(),
        );
    }
    Ok(out)
}

/// Whether `d` divides `p` over the rationals; returns the quotient if so.
///
/// The divisor is made primitive first, so by Gauss's lemma the test runs in
/// integer arithmetic.
pub fn divides_exactly(d: &IntPoly, p: &IntPoly) -> Result<Option<RatPoly>, PolyError> {
    if d.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    let c = d.content();
    let c = if d.leading().is_some_and(Signed::is_negative) { -c } else { c };
    let prim = d.primitive();
    Ok(p.div_exact(&prim).map(|q| {
        q.to_rat()
            .scale(&BigRational::new(BigInt::one(), c))
    }))
}

/// Fixed-point decimal rendering of an exact rational, rounded to `digits` places.
pub fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (a * BigRational::from(scale.clone())).round().to_integer();
    let (int, frac) = scaled.div_rem(&scale);
    let mut s = if neg && !(int.is_zero() && frac.is_zero()) {
        "-".to_string()
    } else {
        String::new()
    };
    s.push_str(&int.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    s
}

/// Exact rational from a finite `f64`.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
