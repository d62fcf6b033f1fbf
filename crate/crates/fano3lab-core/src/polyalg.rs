//! Polynomial algebra over cyclotomic fields: univariate polynomials, binary
//! forms with the 2x2 substitution action, sparse multivariate polynomials,
//! resultants, gcds and linear-factor extraction.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactfield::{CycNum, FieldError, Rational};
use crate::linalg::Matrix;

/// Errors from polynomial-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// An operation required a nonzero polynomial or form.
    ZeroInput,
    /// Binary-form addition or projective comparison with mismatched degrees.
    DegreeMismatch { left: usize, right: usize },
    /// Projective comparison of two zero forms.
    BothZero,
    /// Group element with vanishing determinant.
    SingularMatrix,
    /// Pointed action requires a determinant-one representative.
    NotUnimodular,
    /// Underlying field arithmetic failed.
    Field(FieldError),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroInput => write!(f, "operation requires a nonzero polynomial"),
            PolyError::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            PolyError::BothZero => write!(f, "projective comparison of two zero forms"),
            PolyError::SingularMatrix => write!(f, "matrix is singular"),
            PolyError::NotUnimodular => {
                write!(f, "operation requires a determinant-one representative")
            }
            PolyError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PolyError {}

impl From<FieldError> for PolyError {
    fn from(e: FieldError) -> Self {
        PolyError::Field(e)
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials.

/// Dense univariate polynomial over a cyclotomic field. Coefficient index is
/// the degree; the vector carries no trailing zeros (zero = empty vector).
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<CycNum>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(CycNum::one())
    }

    pub fn constant(c: CycNum) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: CycNum, k: usize) -> UniPoly {
        let mut coeffs = vec![CycNum::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<CycNum>) -> UniPoly {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> CycNum {
        self.coeffs.get(k).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let mut out = self.coeffs.clone();
        out.resize(out.len().max(other.coeffs.len()), CycNum::zero());
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![CycNum::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &CycNum) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divmod(&self, den: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = den.degree().expect("division by zero polynomial");
        let lead_inv = den.leading().unwrap().inv().expect("leading coeff nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNum::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let dn = rem.len() - 1;
            let top = rem.last().unwrap().clone();
            if !top.is_zero() {
                let c = &top * &lead_inv;
                quot[dn - dd] = c.clone();
                for (j, dj) in den.coeffs.iter().enumerate() {
                    if !dj.is_zero() {
                        rem[dn - dd + j] = &rem[dn - dd + j] - &(&c * dj);
                    }
                }
            }
            rem.pop();
            while rem.last().is_some_and(CycNum::is_zero) && rem.len() > dd {
                rem.pop();
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, den: &UniPoly) -> UniPoly {
        let (q, r) = self.divmod(den);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("leading coeff nonzero")),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            let (_, r) = r0.divmod(&r1);
            r0 = core::mem::replace(&mut r1, r);
        }
        r0.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i as u64 + 1))))
                .collect(),
        )
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Resultant as the determinant of the Sylvester matrix with the rows of
    /// `f` first. With this convention `resultant(t, t-1) = -1`. Degenerate
    /// cases: zero polynomials give 0; two nonzero constants give 1.
    pub fn resultant(f: &UniPoly, g: &UniPoly) -> CycNum {
        if f.is_zero() || g.is_zero() {
            return CycNum::zero();
        }
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        if m + n == 0 {
            return CycNum::one();
        }
        if m == 0 {
            return f.coeffs[0].pow(n as i64).expect("nonzero constant");
        }
        if n == 0 {
            return g.coeffs[0].pow(m as i64).expect("nonzero constant");
        }
        let size = m + n;
        let mat = Matrix::from_fn(size, size, |r, c| {
            if r < n {
                // Row r of the f block: coefficient of descending powers,
                // shifted r columns right.
                if c >= r && c - r <= m {
                    f.coeff(m - (c - r))
                } else {
                    CycNum::zero()
                }
            } else {
                let r = r - n;
                if c >= r && c - r <= n {
                    g.coeff(n - (c - r))
                } else {
                    CycNum::zero()
                }
            }
        });
        mat.det()
    }

    /// Squarefree decomposition: returns `(s_i, i)` with `self = lc * prod
    /// s_i^i`, each `s_i` monic and squarefree, distinct `s_i` coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let a = self.monic();
        let Some(deg) = a.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let mut result = Vec::new();
        let mut c = UniPoly::gcd(&a, &a.derivative());
        let mut b = a.div_exact(&c);
        let mut i = 1usize;
        while b.degree().is_some_and(|d| d > 0) {
            let d = UniPoly::gcd(&b, &c);
            let s = b.div_exact(&d);
            if s.degree().is_some_and(|k| k > 0) {
                result.push((s, i));
            }
            b = d.clone();
            c = c.div_exact(&d);
            i += 1;
        }
        result
    }
}

// ---------------------------------------------------------------------------
// Integer utilities for the rational root search.

/// All positive divisors if the integer can be fully factored by trial
/// division (bound 10^5, with the prime/prime-pair/prime-square analysis for
/// the cofactor); `None` when factorization is out of reach.
fn bigint_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    assert!(!n.is_zero());
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(100_000u64);
    while &(&p * &p) <= &m && p <= bound {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) {
            BigInt::one()
        } else {
            BigInt::from(2u32)
        };
    }
    if !m.is_one() {
        if &m <= &(&bound * &bound) {
            // No factor below the bound, so m is prime.
            primes.push((m, 1));
        } else {
            let r = m.sqrt();
            if &(&r * &r) == &m {
                // The square root has no factor below the bound either.
                primes.push((r, 2));
            } else if m < BigInt::from(10u32).pow(24) && is_certified_prime(&m) {
                primes.push((m, 1));
            } else {
                // Composite with only large factors (or too big to certify):
                // the divisor list cannot be enumerated honestly.
                return None;
            }
        }
    }
    Some(divisors_from_factorization(&primes))
}

/// Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24 with the fixed
/// base set below.
fn is_certified_prime(n: &BigInt) -> bool {
    let small: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    if n < &BigInt::from(2u32) {
        return false;
    }
    for &b in &small {
        let bb = BigInt::from(b);
        if n == &bb {
            return true;
        }
        if (n % &bb).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigInt::one();
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while (&d % BigInt::from(2u32)).is_zero() {
        d /= BigInt::from(2u32);
        s += 1;
    }
    'bases: for &b in &small {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn divisors_from_factorization(primes: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs
}

/// Rational roots of a nonzero polynomial with rational coefficients, via
/// the rational root theorem on the primitive integer model. `None` when the
/// required integer factorizations are out of reach.
fn rational_roots(p: &UniPoly) -> Option<Vec<Rational>> {
    let deg = p.degree()?;
    if deg == 0 {
        return Some(Vec::new());
    }
    // Clear denominators and content.
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        let r = c.as_rational().expect("rational-coefficient polynomial");
        denom_lcm = num_integer::Integer::lcm(&denom_lcm, r.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&denom_lcm / r.denom())
        })
        .collect();
    let mut roots = Vec::new();
    let mut work = ints;
    // Strip roots at zero.
    while work[0].is_zero() {
        roots.push(Rational::zero());
        work.remove(0);
        if work.len() == 1 {
            return Some(roots);
        }
    }
    let lead = work.last().unwrap().clone();
    let cons = work[0].clone();
    let eval = |r: &Rational| -> bool {
        let mut acc = Rational::zero();
        for c in work.iter().rev() {
            acc = acc * r + Rational::from_integer(c.clone());
        }
        acc.is_zero()
    };
    let ps = bigint_divisors(&cons)?;
    let qs = bigint_divisors(&lead)?;
    if ps.len() * qs.len() > 200_000 {
        return None;
    }
    for q in &qs {
        for p0 in &ps {
            for sgn in [1i32, -1] {
                let cand = Rational::new(if sgn == 1 { p0.clone() } else { -p0.clone() }, q.clone());
                if eval(&cand) && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

/// Roots of a squarefree polynomial that are expressible in its coefficient
/// field, together with the unfactored remainder.
///
/// Complete for: rational roots; roots of the form (root of unity) times a
/// rational; and degree-two factors whose discriminant admits a square root
/// decided by [`CycNum::sqrt_in_field`]. Degree >= 3 leftovers whose roots
/// avoid all those classes stay in the remainder.
fn roots_in_field(sf: &UniPoly, conductor: u32) -> (Vec<CycNum>, UniPoly) {
    let mut work = sf.monic();
    let mut roots: Vec<CycNum> = Vec::new();
    'outer: loop {
        let deg = work.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        if deg == 1 {
            roots.push(work.coeff(0).neg());
            work = UniPoly::one();
            break;
        }
        if deg == 2 {
            let (a, b, c) = (work.coeff(2), work.coeff(1), work.coeff(0));
            let disc = &(&b * &b) - &(&a * &c).scale(&Rational::from_integer(BigInt::from(4)));
            let disc = disc.embed_to_at_least(conductor);
            if let Some(g) = disc.sqrt_in_field() {
                let half_inv = (&CycNum::from_int(2) * &a).inv().expect("quadratic leading coeff");
                roots.push(&(&b.neg() + &g) * &half_inv);
                roots.push(&(&b.neg() - &g) * &half_inv);
                work = UniPoly::one();
            }
            break;
        }
        // Degree >= 3: pull out roots that are rational multiples of roots
        // of unity, one at a time.
        if work.coeff(0).is_zero() {
            roots.push(CycNum::zero());
            work = work.div_exact(&UniPoly::from_coeffs(vec![CycNum::zero(), CycNum::one()]));
            continue;
        }
        for k in 0..conductor.max(1) {
            let omega = CycNum::zeta_pow(conductor.max(1), k as i64);
            // Coefficients of work(omega * s) as a polynomial in s.
            let scaled = UniPoly::from_coeffs(
                work.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &omega.pow(i as i64).expect("root of unity power"))
                    .collect(),
            );
            if let Some(rats) = coordinate_rational_roots(&scaled) {
                if let Some(s0) = rats.first() {
                    let root = omega.scale(s0);
                    debug_assert!(work.eval(&root).is_zero());
                    roots.push(root.clone());
                    let lin = UniPoly::from_coeffs(vec![root.neg(), CycNum::one()]);
                    work = work.div_exact(&lin);
                    continue 'outer;
                }
            }
        }
        break;
    }
    (roots, work)
}

/// Rational roots common to all coordinate polynomials of `p` (equivalently,
/// the rational roots of `p` itself when its coefficients are cyclotomic).
fn coordinate_rational_roots(p: &UniPoly) -> Option<Vec<Rational>> {
    // gcd over Q[t] of the coordinate-wise rational polynomials.
    let max_cond = p
        .coeffs()
        .iter()
        .map(CycNum::conductor)
        .max()
        .unwrap_or(1);
    let phi = crate::exactfield::euler_phi(max_cond) as usize;
    let mut g = UniPoly::zero();
    for idx in 0..phi {
        let coord_poly = UniPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| {
                    let e = c.embed(max_cond).expect("conductor divides the maximum");
                    CycNum::from_rational(e.coords()[idx].clone())
                })
                .collect(),
        );
        if !coord_poly.is_zero() {
            g = UniPoly::gcd(&g, &coord_poly);
            if g.degree() == Some(0) {
                return Some(Vec::new());
            }
        }
    }
    if g.is_zero() {
        return Some(Vec::new());
    }
    let mut rs = rational_roots(&g)?;
    // Filter to actual roots of p (gcd roots are common roots by
    // construction, but keep the exact check as a guard).
    rs.retain(|r| p.eval(&CycNum::from_rational(r.clone())).is_zero());
    Some(rs)
}

impl CycNum {
    /// Promote to at least the given conductor when compatible; otherwise the
    /// element already contains the needed roots and stays put.
    fn embed_to_at_least(&self, n: u32) -> CycNum {
        if self.conductor() == n || n % self.conductor() != 0 {
            self.clone()
        } else {
            self.embed(n).expect("divisibility checked")
        }
    }
}

// ---------------------------------------------------------------------------
// Binary forms.

/// Homogeneous form in `x, y`. `coeffs[k]` multiplies `x^(d-k) y^k`, and the
/// vector always has length `degree + 1` (so the zero form of each degree is
/// representable).
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    coeffs: Vec<CycNum>,
}

impl BinaryForm {
    pub fn from_coeffs(coeffs: Vec<CycNum>) -> BinaryForm {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> BinaryForm {
        BinaryForm {
            coeffs: vec![CycNum::zero(); degree + 1],
        }
    }

    /// `x^(d-k) y^k`.
    pub fn monomial(degree: usize, k: usize) -> BinaryForm {
        assert!(k <= degree);
        let mut f = BinaryForm::zero(degree);
        f.coeffs[k] = CycNum::one();
        f
    }

    /// `a*x + b*y`.
    pub fn linear(a: CycNum, b: CycNum) -> BinaryForm {
        BinaryForm { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &CycNum {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm, PolyError> {
        if self.degree() != other.degree() {
            return Err(PolyError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let d = self.degree() + other.degree();
        let mut out = vec![CycNum::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut acc = BinaryForm::from_coeffs(vec![CycNum::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &CycNum, y: &CycNum) -> CycNum {
        let d = self.degree();
        let mut acc = CycNum::zero();
        // Horner in x with y-powers tracked directly.
        let mut ypow = CycNum::one();
        let mut terms: Vec<CycNum> = Vec::with_capacity(d + 1);
        for k in 0..=d {
            terms.push(&self.coeffs[k] * &ypow);
            ypow = &ypow * y;
        }
        for term in &terms {
            acc = &(&acc * x) + term;
        }
        acc
    }

    /// Multiplicity of the linear factor `y` (the point `(1:0)`).
    pub fn y_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f(t, 1)` as a univariate polynomial; together with the degree this
    /// loses no information.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenize `u` to degree `d >= deg u`, adding `y`-powers as needed:
    /// the result is `y^(d - deg u) * x-side expansion` of `u(x/y)`.
    pub fn homogenize(u: &UniPoly, d: usize) -> BinaryForm {
        let du = u.degree().expect("cannot homogenize the zero polynomial");
        assert!(du <= d, "degree too small to homogenize into");
        let mut coeffs = vec![CycNum::zero(); d + 1];
        for j in 0..=du {
            coeffs[d - j] = u.coeff(j);
        }
        BinaryForm { coeffs }
    }

    /// Scale so the first nonzero coefficient becomes 1 (zero forms are
    /// returned unchanged).
    pub fn normalize(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero coefficient")),
        }
    }

    /// Projective equality: `f = lambda * g` for a nonzero scalar.
    pub fn proj_eq(&self, other: &BinaryForm) -> Result<bool, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(PolyError::BothZero),
            (true, false) | (false, true) => Ok(false),
            (false, false) => {
                if self.degree() != other.degree() {
                    return Ok(false);
                }
                let i = other.coeffs.iter().position(|c| !c.is_zero()).unwrap();
                if self.coeffs[i].is_zero() {
                    return Ok(false);
                }
                let lambda = self.coeffs[i].div(&other.coeffs[i])?;
                Ok(self
                    .coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .all(|(a, b)| a.field_eq(&(b * &lambda))))
            }
        }
    }

    /// Greatest common divisor of two forms, normalized.
    pub fn gcd(f: &BinaryForm, g: &BinaryForm) -> BinaryForm {
        if f.is_zero() {
            return g.normalize();
        }
        if g.is_zero() {
            return f.normalize();
        }
        let ey = f.y_multiplicity().min(g.y_multiplicity());
        let u = UniPoly::gcd(&f.dehomogenize(), &g.dehomogenize());
        let base = BinaryForm::homogenize(&u, u.degree().unwrap());
        let mut out = base;
        for _ in 0..ey {
            out = out.mul(&BinaryForm::linear(CycNum::zero(), CycNum::one()));
        }
        out.normalize()
    }

    /// Exact division by a nonzero divisor of `self`. Panics when the
    /// division is not exact.
    pub fn div_exact(&self, den: &BinaryForm) -> BinaryForm {
        assert!(!den.is_zero(), "division by the zero form");
        let d = self
            .degree()
            .checked_sub(den.degree())
            .expect("divisor degree exceeds the dividend");
        if self.is_zero() {
            return BinaryForm::zero(d);
        }
        // The y-power bookkeeping is automatic: homogenizing the quotient of
        // the dehomogenizations to degree d restores exactly the quotient of
        // the y-multiplicities.
        let q = self.dehomogenize().div_exact(&den.dehomogenize());
        BinaryForm::homogenize(&q, d)
    }

    /// The largest conductor appearing among the coefficients.
    pub fn max_conductor(&self) -> u32 {
        self.coeffs
            .iter()
            .map(CycNum::conductor)
            .fold(1u32, |a, b| {
                num_integer::Integer::lcm(&(a as u64), &(b as u64)) as u32
            })
    }
}

/// Result of linear-factor extraction: `form = prod factors_i ^ mult_i *
/// remainder`, factors normalized, remainder without roots in the searched
/// classes (degree 0 exactly when the form split completely).
#[derive(Debug, Clone)]
pub struct Factorization {
    pub factors: Vec<(BinaryForm, usize)>,
    pub remainder: BinaryForm,
}

impl Factorization {
    pub fn is_fully_split(&self) -> bool {
        self.remainder.degree() == 0
    }

    /// Reassemble the product (used by tests and callers as an exactness
    /// guarantee).
    pub fn product(&self) -> BinaryForm {
        let mut acc = self.remainder.clone();
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u32));
        }
        acc
    }
}

/// Extract linear factors of a nonzero binary form over its coefficient
/// field at the given ambient conductor.
///
/// The search is complete for roots that are rational, rational multiples of
/// ambient roots of unity, or roots of quadratic factors whose discriminant
/// is settled by [`CycNum::sqrt_in_field`]; anything else remains in the
/// remainder (which is then of degree >= 2).
pub fn factor_linear(f: &BinaryForm, conductor: u32) -> Result<Factorization, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let mut factors: Vec<(BinaryForm, usize)> = Vec::new();
    let ym = f.y_multiplicity();
    if ym > 0 {
        factors.push((BinaryForm::linear(CycNum::zero(), CycNum::one()), ym));
    }
    let u = f.dehomogenize();
    let lead = u.leading().expect("nonzero form").clone();
    let mut remainder_u = UniPoly::constant(lead);
    if u.degree().is_some_and(|d| d > 0) {
        for (sf, mult) in u.squarefree_decomposition() {
            let (roots, left) = roots_in_field(&sf, conductor);
            for r in roots {
                factors.push((
                    BinaryForm::linear(CycNum::one(), r.neg()).normalize(),
                    mult,
                ));
            }
            if left.degree().is_some_and(|d| d > 0) {
                remainder_u = remainder_u.mul(&left.pow(mult as u32));
            }
        }
    }
    // Sort factors deterministically (by coefficient vectors).
    factors.sort_by(|a, b| {
        crate::exactfield::cmp_coord_vectors(a.0.coeffs(), b.0.coeffs()).then(a.1.cmp(&b.1))
    });
    let remainder = BinaryForm::homogenize(&remainder_u, remainder_u.degree().unwrap_or(0));
    let fact = Factorization { factors, remainder };
    debug_assert!(fact.product().proj_eq(f).unwrap_or(false));
    // The reassembled product must equal f exactly, not just projectively.
    debug_assert!(fact
        .product()
        .sub(f)
        .map(|d| d.is_zero())
        .unwrap_or(false));
    Ok(fact)
}

// ---------------------------------------------------------------------------
// 2x2 group elements and the substitution action.

/// Invertible 2x2 matrix `(a b; c d)` acting on binary forms by substitution
/// `x -> a*x + c*y`, `y -> b*x + d*y`. `det_normalized` records that the
/// representative was constructed (or verified) with determinant one, which
/// the pointed action requires.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElt2 {
    a: CycNum,
    b: CycNum,
    c: CycNum,
    d: CycNum,
    det_normalized: bool,
}

impl GroupElt2 {
    pub fn new(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Result<GroupElt2, PolyError> {
        let det = &(&a * &d) - &(&b * &c);
        if det.is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        let det_normalized = det.is_one();
        Ok(GroupElt2 {
            a,
            b,
            c,
            d,
            det_normalized,
        })
    }

    /// Constructor that insists on determinant exactly one.
    pub fn new_unimodular(
        a: CycNum,
        b: CycNum,
        c: CycNum,
        d: CycNum,
    ) -> Result<GroupElt2, PolyError> {
        let g = GroupElt2::new(a, b, c, d)?;
        if !g.det_normalized {
            return Err(PolyError::NotUnimodular);
        }
        Ok(g)
    }

    pub fn identity() -> GroupElt2 {
        GroupElt2::new(CycNum::one(), CycNum::zero(), CycNum::zero(), CycNum::one()).unwrap()
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<GroupElt2, PolyError> {
        GroupElt2::new(
            CycNum::from_int(a),
            CycNum::from_int(b),
            CycNum::from_int(c),
            CycNum::from_int(d),
        )
    }

    pub fn entries(&self) -> [&CycNum; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> CycNum {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn is_det_normalized(&self) -> bool {
        self.det_normalized
    }

    /// Matrix product (this, then other... composition as matrices:
    /// `(self * other)` is the ordinary matrix product self . other).
    pub fn mul(&self, o: &GroupElt2) -> GroupElt2 {
        let a = &(&self.a * &o.a) + &(&self.b * &o.c);
        let b = &(&self.a * &o.b) + &(&self.b * &o.d);
        let c = &(&self.c * &o.a) + &(&self.d * &o.c);
        let d = &(&self.c * &o.b) + &(&self.d * &o.d);
        GroupElt2 {
            a,
            b,
            c,
            d,
            det_normalized: self.det_normalized && o.det_normalized,
        }
    }

    pub fn inverse(&self) -> GroupElt2 {
        let det_inv = self.det().inv().expect("invertible by construction");
        GroupElt2 {
            a: &self.d * &det_inv,
            b: (&self.b * &det_inv).neg(),
            c: (&self.c * &det_inv).neg(),
            d: &self.a * &det_inv,
            det_normalized: self.det_normalized,
        }
    }

    pub fn neg(&self) -> GroupElt2 {
        GroupElt2 {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
            det_normalized: self.det_normalized,
        }
    }

    pub fn scale(&self, s: &CycNum) -> Result<GroupElt2, PolyError> {
        GroupElt2::new(
            &self.a * s,
            &self.b * s,
            &self.c * s,
            &self.d * s,
        )
    }
}

/// Substitution action on binary forms: `x -> a*x + c*y`, `y -> b*x + d*y`.
/// Degree is preserved; the action is multiplicative in `f` and satisfies
/// `act(g*h, f) = act(g, act(h, f))`.
pub fn act(g: &GroupElt2, f: &BinaryForm) -> BinaryForm {
    let d = f.degree();
    let fx = BinaryForm::linear(g.a.clone(), g.c.clone());
    let fy = BinaryForm::linear(g.b.clone(), g.d.clone());
    // Precompute power tables.
    let mut px: Vec<BinaryForm> = Vec::with_capacity(d + 1);
    let mut py: Vec<BinaryForm> = Vec::with_capacity(d + 1);
    px.push(BinaryForm::from_coeffs(vec![CycNum::one()]));
    py.push(BinaryForm::from_coeffs(vec![CycNum::one()]));
    for i in 1..=d {
        let nx = px[i - 1].mul(&fx);
        px.push(nx);
        let ny = py[i - 1].mul(&fy);
        py.push(ny);
    }
    let mut acc = BinaryForm::zero(d);
    for k in 0..=d {
        if f.coeffs[k].is_zero() {
            continue;
        }
        let term = px[d - k].mul(&py[k]).scale(&f.coeffs[k]);
        acc = acc.add(&term).expect("degrees agree");
    }
    acc
}

/// Action on a pointed vector `(f, c)` in (degree-12 forms) + (scalars) with
/// the scalar summand carrying the trivial representation. Requires a
/// determinant-one representative so that the pair is acted on linearly, not
/// just projectively.
pub fn act_pointed(
    g: &GroupElt2,
    f: &BinaryForm,
    c: &CycNum,
) -> Result<(BinaryForm, CycNum), PolyError> {
    if !g.det_normalized {
        return Err(PolyError::NotUnimodular);
    }
    Ok((act(g, f), c.clone()))
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials.

/// Sparse multivariate polynomial with named variables; keys are exponent
/// vectors, entries are never zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, CycNum>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> MultiPoly {
        MultiPoly {
            vars: vars.iter().map(|s| String::from(*s)).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: CycNum) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn var(vars: &[&str], i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        p.terms.insert(e, CycNum::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CycNum)> {
        self.terms.iter()
    }

    fn assert_same_vars(&self, o: &MultiPoly) {
        assert_eq!(self.vars, o.vars, "variable lists differ");
    }

    fn insert_term(&mut self, e: Vec<u32>, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(o);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(o);
        let mut out = MultiPoly::zero(&self.vars.iter().map(String::as_str).collect::<Vec<_>>());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let varrefs: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut acc = MultiPoly::constant(&varrefs, CycNum::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[CycNum]) -> CycNum {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut acc = CycNum::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = t.mul(&point[i].pow(exp as i64).expect("nonnegative power"));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute polynomial `sub` (same variable list) for variable `i`.
    pub fn substitute(&self, i: usize, sub: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(sub);
        let varrefs: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut out = MultiPoly::zero(&varrefs);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(&varrefs, c.clone());
            for (j, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let factor = if j == i {
                    sub.pow(exp)
                } else {
                    MultiPoly::var(&varrefs, j).pow(exp)
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// `Some(d)` iff nonzero and every monomial has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&x| c(x)).collect())
    }

    /// xy(x^4 - y^4), the sextic with octahedral symmetry.
    pub(crate) fn phi6() -> BinaryForm {
        let x = BinaryForm::linear(CycNum::one(), CycNum::zero());
        let y = BinaryForm::linear(CycNum::zero(), CycNum::one());
        let x4 = x.pow(4);
        let y4 = y.pow(4);
        x.mul(&y).mul(&x4.sub(&y4).unwrap())
    }

    #[test]
    fn divmod_and_gcd() {
        let f = up(&[-1, 0, 1]); // t^2 - 1
        let g = up(&[1, 1]); // t + 1
        let (q, r) = f.divmod(&g);
        assert_eq!(q, up(&[-1, 1]));
        assert!(r.is_zero());
        let h = UniPoly::gcd(&up(&[-2, 1]).mul(&up(&[5, 1])), &up(&[-2, 1]).mul(&up(&[7, 1])));
        assert_eq!(h, up(&[-2, 1]));
        assert_eq!(UniPoly::gcd(&UniPoly::zero(), &up(&[0, 3])), up(&[0, 1]));
    }

    #[test]
    fn resultant_convention_and_grid_identity() {
        // Fixed convention: Sylvester determinant with the f rows first.
        assert!(UniPoly::resultant(&up(&[0, 1]), &up(&[-1, 1])).field_eq(&c(-1)));
        // res(t^2 - A, t^2 - B) = (A - B)^2. Each entry of the Sylvester
        // matrix is at most linear in A and B and each variable appears in
        // two rows, so the resultant has degree <= 2 in each; checking a
        // 4x4 integer grid therefore proves the identity.
        for a in 0..4i64 {
            for b in 0..4i64 {
                let r = UniPoly::resultant(&up(&[-a, 0, 1]), &up(&[-b, 0, 1]));
                assert!(r.field_eq(&c((a - b) * (a - b))));
            }
        }
        // Degenerate sizes.
        assert!(UniPoly::resultant(&up(&[5]), &up(&[1, 2, 1])).field_eq(&c(25)));
        assert!(UniPoly::resultant(&UniPoly::zero(), &up(&[1, 1])).is_zero());
    }

    #[test]
    fn squarefree_decomposition_shape() {
        // (t-1)^2 (t-2)^3
        let p = up(&[-1, 1]).pow(2).mul(&up(&[-2, 1]).pow(3));
        let dec = p.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (up(&[-1, 1]), 2));
        assert_eq!(dec[1], (up(&[-2, 1]), 3));
        // Reassembly.
        let mut prod = UniPoly::one();
        for (s, m) in &dec {
            prod = prod.mul(&s.pow(*m as u32));
        }
        assert_eq!(prod, p.monic());
    }

    #[test]
    fn factor_sextic_with_octahedral_symmetry() {
        // Over Q only the four rational roots split off.
        let f = phi6();
        let fact = factor_linear(&f, 1).unwrap();
        assert_eq!(fact.factors.len(), 4);
        assert_eq!(fact.remainder.degree(), 2);
        assert!(fact.product().sub(&f).unwrap().is_zero());
        // Over Q(i) the form splits completely into six distinct factors.
        let fact = factor_linear(&f, 4).unwrap();
        assert!(fact.is_fully_split());
        assert_eq!(fact.factors.len(), 6);
        assert!(fact.factors.iter().all(|(_, m)| *m == 1));
        assert!(fact.product().sub(&f).unwrap().is_zero());
    }

    #[test]
    fn factor_respects_multiplicities() {
        // (x - 3y)^5 (x + y)
        let l1 = BinaryForm::linear(c(1), c(-3));
        let l2 = BinaryForm::linear(c(1), c(1));
        let f = l1.pow(5).mul(&l2);
        let fact = factor_linear(&f, 1).unwrap();
        assert!(fact.is_fully_split());
        let mults: Vec<usize> = fact.factors.iter().map(|(_, m)| *m).collect();
        assert!(mults.contains(&5) && mults.contains(&1));
        assert!(fact.product().sub(&f).unwrap().is_zero());
        // y-powers are picked up as factors too: x^2 y^4.
        let g = BinaryForm::monomial(6, 4);
        let fact = factor_linear(&g, 1).unwrap();
        assert!(fact.is_fully_split());
        assert_eq!(fact.factors.len(), 2);
    }

    #[test]
    fn factor_with_quadratic_square_roots() {
        // x^2 - 5 y^2 splits over Q(zeta_5) where sqrt 5 lives.
        let f = BinaryForm::from_coeffs(vec![c(1), c(0), c(-5)]);
        let fact = factor_linear(&f, 5).unwrap();
        assert!(fact.is_fully_split(), "sqrt(5) exists at conductor 5");
        assert_eq!(fact.factors.len(), 2);
        assert!(fact.product().sub(&f).unwrap().is_zero());
        // ... but not over Q(i).
        let fact = factor_linear(&f, 4).unwrap();
        assert_eq!(fact.remainder.degree(), 2);
    }

    #[test]
    fn factor_sextic_sum_of_sixth_powers() {
        // x^6 + y^6 at conductor 4: only the factors through +-i split off.
        let mut coeffs = vec![c(0); 7];
        coeffs[0] = c(1);
        coeffs[6] = c(1);
        let f = BinaryForm::from_coeffs(coeffs);
        let fact = factor_linear(&f, 4).unwrap();
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.remainder.degree(), 4);
        // At conductor 24 every root is a root of unity and the form splits.
        let fact = factor_linear(&f, 24).unwrap();
        assert!(fact.is_fully_split());
        assert_eq!(fact.factors.len(), 6);
    }

    #[test]
    fn action_is_substitution() {
        // diag(a, 1) sends x^i y^j to a^i x^i y^j; check with a = 3 on x^2 y.
        let g = GroupElt2::from_ints(3, 0, 0, 1).unwrap();
        let f = BinaryForm::monomial(3, 1); // x^2 y
        assert!(act(&g, &f).proj_eq(&f).unwrap());
        assert!(act(&g, &f).sub(&f.scale(&c(9))).unwrap().is_zero());
        // Shear: x -> x, y -> x + y on y^2 gives (x+y)^2.
        let s = GroupElt2::from_ints(1, 1, 0, 1).unwrap();
        let y2 = BinaryForm::monomial(2, 2);
        let expect = BinaryForm::from_coeffs(vec![c(1), c(2), c(1)]);
        assert!(act(&s, &y2).sub(&expect).unwrap().is_zero());
    }

    #[test]
    fn action_composes_and_multiplies() {
        let g = GroupElt2::from_ints(1, 2, 3, 1).unwrap();
        let h = GroupElt2::from_ints(2, -1, 1, 1).unwrap();
        let f = phi6();
        let lhs = act(&g.mul(&h), &f);
        let rhs = act(&g, &act(&h, &f));
        assert!(lhs.sub(&rhs).unwrap().is_zero());
        // Multiplicativity in the form argument.
        let p = BinaryForm::linear(c(1), c(4));
        let q = BinaryForm::from_coeffs(vec![c(2), c(0), c(-1)]);
        let lhs = act(&g, &p.mul(&q));
        let rhs = act(&g, &p).mul(&act(&g, &q));
        assert!(lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn pointed_action_demands_determinant_one() {
        let f = BinaryForm::monomial(12, 6);
        let bad = GroupElt2::from_ints(2, 0, 0, 1).unwrap();
        assert_eq!(
            act_pointed(&bad, &f, &CycNum::one()).unwrap_err(),
            PolyError::NotUnimodular
        );
        let good = GroupElt2::new_unimodular(c(1), c(1), c(0), c(1)).unwrap();
        let (img, scalar) = act_pointed(&good, &f, &CycNum::one()).unwrap();
        assert_eq!(img.degree(), 12);
        assert!(scalar.is_one());
    }

    #[test]
    fn group_inverse_and_unimodularity() {
        let g = GroupElt2::from_ints(1, 2, 3, 1).unwrap();
        let gi = g.inverse();
        let id = g.mul(&gi);
        assert!(id.entries()[0].is_one());
        assert!(id.entries()[1].is_zero());
        assert!(id.entries()[2].is_zero());
        assert!(id.entries()[3].is_one());
        assert!(GroupElt2::from_ints(1, 2, 2, 4).is_err());
        let u = GroupElt2::new_unimodular(c(1), c(5), c(0), c(1)).unwrap();
        assert!(u.inverse().is_det_normalized());
    }

    #[test]
    fn proj_eq_cases() {
        let f = phi6();
        assert!(f.proj_eq(&f.scale(&c(-7))).unwrap());
        assert!(!f.proj_eq(&BinaryForm::monomial(6, 0)).unwrap());
        let z = BinaryForm::zero(6);
        assert_eq!(z.proj_eq(&z).unwrap_err(), PolyError::BothZero);
        assert!(!z.proj_eq(&f).unwrap());
    }

    #[test]
    fn multipoly_basics() {
        let vars = ["s", "t", "u"];
        let s = MultiPoly::var(&vars, 0);
        let t = MultiPoly::var(&vars, 1);
        let p = s.mul(&t).add(&MultiPoly::constant(&vars, c(3)));
        assert_eq!(p.eval(&[c(2), c(5), c(0)]), c(13));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.homogeneous_degree(), None);
        let q = p.substitute(1, &s.mul(&s)); // t := s^2
        assert_eq!(q.eval(&[c(2), c(0), c(0)]), c(11));
        // (s + t)^2 - (s^2 + 2st + t^2) == 0
        let sq = s.add(&t).pow(2);
        let expanded = s.mul(&s).add(&s.mul(&t).scale(&c(2))).add(&t.mul(&t));
        assert!(sq.sub(&expanded).is_zero());
    }

    #[test]
    fn binary_form_eval_and_dehomogenize() {
        let f = phi6();
        assert!(f.eval(&c(1),&c(1)).is_zero());
        assert!(f.eval(&c(2), &c(1)).field_eq(&c(2 * (16 - 1))));
        assert_eq!(f.y_multiplicity(), 1);
        let u = f.dehomogenize();
        assert_eq!(u.degree(), Some(5)); // the root at (1:0) drops out
        let back = BinaryForm::homogenize(&u, 6);
        assert!(back.sub(&f).unwrap().is_zero());
    }
}
