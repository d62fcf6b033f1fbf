//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are stored on the power basis `1, z, ..., z^(phi(n)-1)` where
//! `z = zeta_n` is a fixed primitive n-th root of unity and reduction happens
//! modulo the n-th cyclotomic polynomial. Coordinates are arbitrary-precision
//! rationals, so every operation is exact.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;

/// Exact rational scalar used for all coordinates.
pub type Rational = BigRational;

/// Convenience constructor for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Promotions via least common multiple are refused beyond this conductor so
/// that a stray mixed-field operation cannot silently allocate enormous
/// coordinate vectors.
pub const MAX_PROMOTED_CONDUCTOR: u32 = 3000;

/// Square roots are searched in auxiliary cyclotomic fields no larger than
/// this conductor.
const MAX_SQRT_CONDUCTOR: u32 = 3000;

/// Trial-division bound for squarefree decomposition of integers. The
/// decomposition is provably complete for cofactors below the cube of this
/// bound.
const TRIAL_BOUND: u64 = 100_000;

/// Errors produced by field arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// Inversion or division by the zero element.
    DivisionByZero,
    /// Two elements could not be promoted to a common conductor within
    /// [`MAX_PROMOTED_CONDUCTOR`].
    ConductorMismatch { left: u32, right: u32 },
    /// `embed`/`project` called with conductors that are not in a
    /// divisibility relation.
    NotASubfield { sub: u32, sup: u32 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::ConductorMismatch { left, right } => write!(
                f,
                "cannot promote conductors {left} and {right} to a common field \
                 (lcm exceeds {MAX_PROMOTED_CONDUCTOR})"
            ),
            FieldError::NotASubfield { sub, sup } => {
                write!(f, "Q(zeta_{sub}) is not a subfield of Q(zeta_{sup})")
            }
        }
    }
}

impl core::error::Error for FieldError {}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1, "conductor must be positive");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// division must be exact (both hold for cyclotomic factors of `t^n - 1`).
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let t = dj * &c;
            rem[i + j] -= t;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// Dense coefficient vector (index = degree) of the n-th cyclotomic
/// polynomial. Monic, integer coefficients, degree `phi(n)`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, built bottom-up.
    let mut table: Vec<(u32, Vec<BigInt>)> = Vec::new();
    for d in divisors(n) {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        let mut phi = num;
        for (e, poly) in &table {
            if d % e == 0 {
                phi = poly_div_exact_int(&phi, poly);
            }
        }
        if d == n {
            return phi;
        }
        table.push((d, phi));
    }
    unreachable!()
}

/// An element of `Q(zeta_n)` on the power basis.
///
/// The derived `PartialEq`/`Ord`/`Hash` are structural (conductor first, then
/// coordinates); they give a deterministic total order suitable for sorting
/// and deduplication at a fixed conductor. Use [`CycNum::field_eq`] to compare
/// elements that may live at different conductors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycNum {
    conductor: u32,
    coords: Vec<Rational>,
}

fn lcm_u32(a: u32, b: u32) -> u64 {
    (a as u64).lcm(&(b as u64))
}

/// Reduce a dense coefficient vector modulo `Phi_n`, returning exactly
/// `phi(n)` coordinates.
fn reduce_mod_cyclotomic(n: u32, mut coeffs: Vec<Rational>) -> Vec<Rational> {
    let phi = euler_phi(n) as usize;
    if coeffs.len() > phi {
        let cyc = cyclotomic_polynomial(n);
        for i in (phi..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut coeffs[i], Rational::zero());
            for (j, pj) in cyc.iter().take(phi).enumerate() {
                if !pj.is_zero() {
                    let delta = &c * pj;
                    coeffs[i - phi + j] -= delta;
                }
            }
        }
    }
    coeffs.resize(phi, Rational::zero());
    coeffs
}

impl CycNum {
    /// The zero element of `Q`.
    pub fn zero() -> CycNum {
        CycNum {
            conductor: 1,
            coords: vec![Rational::zero()],
        }
    }

    /// The unit element of `Q`.
    pub fn one() -> CycNum {
        CycNum::from_int(1)
    }

    pub fn from_int(n: i64) -> CycNum {
        CycNum::from_rational(rat_int(n))
    }

    pub fn from_rational(r: Rational) -> CycNum {
        CycNum {
            conductor: 1,
            coords: vec![r],
        }
    }

    /// An element of `Q(zeta_n)` from a dense power-basis coefficient vector
    /// of any length (reduced modulo the cyclotomic polynomial).
    pub fn from_coords(n: u32, coeffs: Vec<Rational>) -> CycNum {
        assert!(n >= 1, "conductor must be positive");
        CycNum {
            conductor: n,
            coords: reduce_mod_cyclotomic(n, coeffs),
        }
    }

    /// The fixed primitive n-th root of unity generating `Q(zeta_n)`.
    pub fn zeta(n: u32) -> CycNum {
        CycNum::zeta_pow(n, 1)
    }

    /// `zeta_n^k` (k may be negative).
    pub fn zeta_pow(n: u32, k: i64) -> CycNum {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        CycNum::from_coords(n, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `Some(r)` iff the element lies in `Q` (all higher coordinates vanish).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Re-express the element in `Q(zeta_m)` where the current conductor
    /// divides `m` (via `zeta_n = zeta_m^(m/n)`).
    pub fn embed(&self, m: u32) -> Result<CycNum, FieldError> {
        if m == self.conductor {
            return Ok(self.clone());
        }
        if m == 0 || m % self.conductor != 0 {
            return Err(FieldError::NotASubfield {
                sub: self.conductor,
                sup: m,
            });
        }
        let stride = (m / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); (self.coords.len() - 1) * stride + 1];
        for (i, c) in self.coords.iter().enumerate() {
            dense[i * stride] = c.clone();
        }
        Ok(CycNum::from_coords(m, dense))
    }

    /// Attempt to rewrite the element in the subfield `Q(zeta_d)`, `d`
    /// dividing the current conductor. `Ok(None)` means the element does not
    /// lie in the subfield.
    pub fn project(&self, d: u32) -> Result<Option<CycNum>, FieldError> {
        if d == self.conductor {
            return Ok(Some(self.clone()));
        }
        if d == 0 || self.conductor % d != 0 {
            return Err(FieldError::NotASubfield {
                sub: d,
                sup: self.conductor,
            });
        }
        let phi_sub = euler_phi(d) as usize;
        let phi_sup = euler_phi(self.conductor) as usize;
        // Columns: images of the subfield basis vectors in the big field.
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi_sub);
        for i in 0..phi_sub {
            let mut coeffs = vec![Rational::zero(); i + 1];
            coeffs[i] = Rational::one();
            let e = CycNum::from_coords(d, coeffs).embed(self.conductor)?;
            cols.push(e.coords);
        }
        let mat = Matrix::from_fn(phi_sup, phi_sub, |r, c| cols[c][r].clone());
        Ok(mat.solve(&self.coords).map(|x| CycNum {
            conductor: d,
            coords: reduce_mod_cyclotomic(d, x),
        }))
    }

    /// Promote two elements to their least common conductor.
    pub fn promote_pair(a: &CycNum, b: &CycNum) -> Result<(CycNum, CycNum), FieldError> {
        if a.conductor == b.conductor {
            return Ok((a.clone(), b.clone()));
        }
        let l = lcm_u32(a.conductor, b.conductor);
        if l > MAX_PROMOTED_CONDUCTOR as u64 {
            return Err(FieldError::ConductorMismatch {
                left: a.conductor,
                right: b.conductor,
            });
        }
        let l = l as u32;
        Ok((a.embed(l).expect("lcm is a multiple"), b.embed(l).expect("lcm is a multiple")))
    }

    fn promoted(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        CycNum::promote_pair(a, b).expect("conductor promotion failed")
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let (mut a, b) = CycNum::promoted(self, other);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        let (a, b) = CycNum::promoted(self, other);
        let mut dense = vec![Rational::zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    let t = x * y;
                    dense[i + j] += t;
                }
            }
        }
        CycNum {
            conductor: a.conductor,
            coords: reduce_mod_cyclotomic(a.conductor, dense),
        }
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial in `Q[t]`.
    pub fn inv(&self) -> Result<CycNum, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNum {
                conductor: self.conductor,
                coords: {
                    let mut v = vec![Rational::zero(); self.coords.len()];
                    v[0] = Rational::one() / r;
                    v
                },
            });
        }
        let phi: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let u = rp_inverse_mod(&self.coords, &phi);
        Ok(CycNum {
            conductor: self.conductor,
            coords: reduce_mod_cyclotomic(self.conductor, u),
        })
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<CycNum, FieldError> {
        let (mut base, mut e) = if k < 0 {
            (self.inv()?, (-(k as i128)) as u64)
        } else {
            (self.clone(), k as u64)
        };
        let mut acc = CycNum::one().embed(self.conductor).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Field-level equality across conductors (promotes to the lcm).
    pub fn field_eq(&self, other: &CycNum) -> bool {
        if self.conductor == other.conductor {
            return self.coords == other.coords;
        }
        let l = lcm_u32(self.conductor, other.conductor);
        if l > u32::MAX as u64 {
            return false;
        }
        let l = l as u32;
        match (self.embed(l), other.embed(l)) {
            (Ok(a), Ok(b)) => a.coords == b.coords,
            _ => false,
        }
    }

    /// Square root within the same field, if one can be found.
    ///
    /// Complete for elements of the form `r * zeta_n^k` with `r` rational
    /// (which covers rationals, signs and root-of-unity multiples): the root
    /// is constructed from Gauss sums in an auxiliary cyclotomic field and
    /// projected back, so a `None` answer for such elements is a proof that
    /// no square root exists in `Q(zeta_n)`. For elements outside that class
    /// (or with numerators/denominators too large to factor) the method
    /// returns `None` without deciding.
    pub fn sqrt_in_field(&self) -> Option<CycNum> {
        let n = self.conductor;
        if self.is_zero() {
            return Some(self.clone());
        }
        for k in 0..n {
            let cand = self.mul(&CycNum::zeta_pow(n, -(k as i64)));
            let Some(rho) = cand.as_rational() else {
                continue;
            };
            // self = rho * zeta_n^k. A square root is sqrt(rho)*zeta_{2n}^k.
            let num = rho.numer().clone();
            let den = rho.denom().clone();
            let (e, d) = integer_squarefree_part(&(num * &den))?;
            // sqrt(rho) = (e/den) * sqrt(d) with d squarefree.
            let rational_factor = Rational::new(e, den);
            let (mut value, mut cond) = if d.is_one() {
                (CycNum::one(), 1u32)
            } else {
                sqrt_of_squarefree_int(&d)?
            };
            let unit_root = if k % 2 == 0 {
                CycNum::zeta_pow(n, (k / 2) as i64)
            } else {
                let m2 = 2u64 * n as u64;
                if m2 > MAX_SQRT_CONDUCTOR as u64 {
                    return None;
                }
                CycNum::zeta_pow(m2 as u32, k as i64)
            };
            let l = lcm_u32(cond, unit_root.conductor).lcm(&(n as u64));
            if l > MAX_SQRT_CONDUCTOR as u64 {
                return None;
            }
            cond = l as u32;
            value = value
                .embed(cond)
                .ok()?
                .mul(&unit_root.embed(cond).ok()?)
                .scale(&rational_factor);
            return match value.project(n) {
                Ok(Some(root)) => {
                    debug_assert!(root.mul(&root).field_eq(self));
                    Some(root)
                }
                _ => None,
            };
        }
        None
    }
}

impl crate::linalg::Field for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn one() -> Self {
        CycNum::one()
    }
    fn add(&self, o: &Self) -> Self {
        CycNum::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CycNum::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CycNum::mul(self, o)
    }
    fn neg(&self) -> Self {
        CycNum::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        CycNum::inv(self).ok()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl crate::linalg::Field for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if <Rational as Zero>::is_zero(self) {
            None
        } else {
            Some(<Rational as One>::one() / self)
        }
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
}

impl core::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}
impl core::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}
impl core::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}
impl core::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Deterministic total order helper for coordinate vectors (used by callers
/// that need canonical representatives).
pub fn cmp_coord_vectors(a: &[CycNum], b: &[CycNum]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

// ---------------------------------------------------------------------------
// Rational-coefficient polynomial helpers (dense, index = degree), used only
// for inversion modulo the cyclotomic polynomial.

fn rp_deg(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn rp_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = rp_deg(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    let mut quot = vec![Rational::zero(); num.len().saturating_sub(dd)];
    while let Some(dn) = rp_deg(&rem) {
        if dn < dd {
            break;
        }
        let c = &rem[dn] / &lead;
        quot[dn - dd] = c.clone();
        for (j, dj) in den.iter().take(dd + 1).enumerate() {
            if !dj.is_zero() {
                let t = &c * dj;
                rem[dn - dd + j] -= t;
            }
        }
    }
    (quot, rem)
}

fn rp_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let t = x * y;
                out[i + j] += t;
            }
        }
    }
    out
}

/// `u` with `u * a == 1 (mod phi)`; requires `gcd(a, phi) = 1`, which holds
/// because cyclotomic polynomials are irreducible over `Q`.
fn rp_inverse_mod(a: &[Rational], phi: &[Rational]) -> Vec<Rational> {
    let mut r0: Vec<Rational> = phi.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    let mut t0: Vec<Rational> = vec![Rational::zero()];
    let mut t1: Vec<Rational> = vec![Rational::one()];
    while rp_deg(&r1).is_some() {
        let (q, r) = rp_divmod(&r0, &r1);
        let qt = rp_mul(&q, &t1);
        let mut tnext = t0.clone();
        tnext.resize(tnext.len().max(qt.len()), Rational::zero());
        for (i, c) in qt.into_iter().enumerate() {
            tnext[i] -= c;
        }
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, tnext);
    }
    let d = rp_deg(&r0).expect("gcd of nonzero polynomials");
    assert!(d == 0, "element not invertible: gcd has positive degree");
    let c = r0[0].clone();
    t0.iter().map(|x| x / &c).collect()
}

// ---------------------------------------------------------------------------
// Integer square root machinery.

fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Write `n = e^2 * d` with `d` squarefree (carrying the sign of `n`).
/// Complete whenever the unfactored cofactor stays below `TRIAL_BOUND^3`;
/// returns `None` otherwise rather than guessing.
fn integer_squarefree_part(n: &BigInt) -> Option<(BigInt, BigInt)> {
    assert!(!n.is_zero());
    let mut m = n.abs();
    let mut e = BigInt::one();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &(&p * &p) <= &m && p <= BigInt::from(TRIAL_BOUND) {
        let mut exp = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            exp += 1;
        }
        if exp > 0 {
            if exp % 2 == 1 {
                d *= &p;
            }
            if exp >= 2 {
                e *= p.pow(exp / 2);
            }
        }
        p += if p == BigInt::from(2u32) {
            BigInt::one()
        } else {
            BigInt::from(2u32)
        };
    }
    if !m.is_one() {
        if let Some(r) = is_perfect_square(&m) {
            e *= r;
        } else if m < BigInt::from(TRIAL_BOUND).pow(3) {
            // No prime factor below the bound and below the cube of the
            // bound: m is p, p*q or p^2, and the square case was excluded.
            d *= &m;
        } else {
            return None;
        }
    }
    if n.is_negative() {
        d = -d;
    }
    Some((e, d))
}

fn legendre_symbol(k: u64, p: u64) -> i32 {
    // Euler criterion with u128 intermediate products.
    let mut base = (k % p) as u128;
    let mut exp = (p - 1) / 2;
    let m = p as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else if acc == m - 1 {
        -1
    } else {
        0
    }
}

/// Square root of a squarefree integer `d` (possibly negative) as an exact
/// cyclotomic number, via quadratic Gauss sums. Returns the value together
/// with its conductor, or `None` if the required conductor is too large.
fn sqrt_of_squarefree_int(d: &BigInt) -> Option<(CycNum, u32)> {
    let abs = d.abs();
    let mut primes: Vec<u64> = Vec::new();
    let mut m = abs.clone();
    let mut p = 2u64;
    while !m.is_one() {
        if (&m % BigInt::from(p)).is_zero() {
            primes.push(p);
            m /= BigInt::from(p);
        } else {
            p += if p == 2 { 1 } else { 2 };
            if p > TRIAL_BOUND {
                // A remaining prime factor above the bound would force a
                // conductor beyond MAX_SQRT_CONDUCTOR anyway.
                break;
            }
        }
    }
    if !m.is_one() {
        return None;
    }
    let mut value = CycNum::one();
    let mut cond: u64 = 1;
    for &q in &primes {
        let (piece, piece_cond): (CycNum, u64) = if q == 2 {
            // zeta_8 + zeta_8^-1 squares to 2.
            let z = CycNum::zeta(8);
            ((&z + &z.pow(-1).unwrap()), 8)
        } else {
            // Quadratic Gauss sum: squares to (-1)^((q-1)/2) * q.
            let mut g = CycNum::zero().embed(q as u32).unwrap();
            for k in 1..q {
                match legendre_symbol(k, q) {
                    1 => g = &g + &CycNum::zeta_pow(q as u32, k as i64),
                    -1 => g = &g - &CycNum::zeta_pow(q as u32, k as i64),
                    _ => {}
                }
            }
            (g, q)
        };
        cond = cond.lcm(&piece_cond);
        if cond > MAX_SQRT_CONDUCTOR as u64 {
            return None;
        }
        value = &value.embed(cond as u32).unwrap() * &piece.embed(cond as u32).unwrap();
    }
    // value^2 is a rational with absolute value |d|; fix the sign exactly.
    let square = (&value * &value).as_rational().expect("square of Gauss product is rational");
    let target = Rational::from_integer(d.clone());
    let needs_i = if square == target {
        false
    } else {
        assert!(square == -&target, "Gauss product squared to the wrong value");
        true
    };
    if needs_i {
        cond = cond.lcm(&4);
        if cond > MAX_SQRT_CONDUCTOR as u64 {
            return None;
        }
        let i = CycNum::zeta(4).embed(cond as u32).unwrap();
        value = &value.embed(cond as u32).unwrap() * &i;
    }
    let final_cond = cond as u32;
    let value = value.embed(final_cond).unwrap();
    debug_assert!((&value * &value).as_rational() == Some(Rational::from_integer(d.clone())));
    Some((value, final_cond))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> CycNum {
        CycNum::zeta(n)
    }

    fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
        out
    }

    #[test]
    fn cyclotomic_polynomials_small_cases() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        // Phi_40 = Phi_10(t^4) = t^16 - t^12 + t^8 - t^4 + 1.
        let phi40 = to_i64(cyclotomic_polynomial(40));
        let mut expected = vec![0i64; 17];
        expected[0] = 1;
        expected[4] = -1;
        expected[8] = 1;
        expected[12] = -1;
        expected[16] = 1;
        assert_eq!(phi40, expected);
    }

    #[test]
    fn cyclotomic_product_identity_for_40() {
        // prod_{d | 40} Phi_d(t) == t^40 - 1, an independent check of the
        // whole divide-down construction.
        let mut prod = vec![BigInt::one()];
        for d in divisors(40) {
            prod = poly_mul_int(&prod, &cyclotomic_polynomial(d));
        }
        let mut expected = vec![BigInt::zero(); 41];
        expected[0] = -BigInt::one();
        expected[40] = BigInt::one();
        assert_eq!(prod, expected);
    }

    #[test]
    fn euler_phi_values() {
        for (n, phi) in [(1, 1), (2, 1), (4, 2), (5, 4), (8, 4), (20, 8), (24, 8), (40, 16)] {
            assert_eq!(euler_phi(n), phi);
        }
    }

    #[test]
    fn zeta_primitivity() {
        for n in [1u32, 2, 4, 5, 8, 20, 24, 40] {
            let zn = z(n);
            assert!(zn.pow(n as i64).unwrap().is_one(), "zeta_{n}^{n} != 1");
            for k in 1..n {
                assert!(
                    !zn.pow(k as i64).unwrap().is_one(),
                    "zeta_{n}^{k} == 1 but k < n"
                );
            }
        }
    }

    #[test]
    fn arithmetic_and_inverse() {
        let a = &z(40) + &CycNum::from_int(1);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        let b = &z(40).pow(7).unwrap() - &CycNum::from_rational(rat(3, 2));
        assert!((&b * &b.inv().unwrap()).is_one());
        assert!(CycNum::zero().inv() == Err(FieldError::DivisionByZero));
    }

    #[test]
    fn embeddings_match_root_identities() {
        // i = zeta_40^10, zeta_8 = zeta_40^5, zeta_5 = zeta_40^8.
        assert!(z(4).embed(40).unwrap().field_eq(&z(40).pow(10).unwrap()));
        assert!(z(8).embed(40).unwrap().field_eq(&z(40).pow(5).unwrap()));
        assert!(z(5).embed(40).unwrap().field_eq(&z(40).pow(8).unwrap()));
        assert!(z(4).embed(3).is_err());
    }

    #[test]
    fn embed_project_round_trip() {
        let a = &(&z(5) + &z(5).pow(2).unwrap()).scale(&rat(2, 3)) - &CycNum::from_int(4);
        let big = a.embed(40).unwrap();
        let back = big.project(5).unwrap().unwrap();
        assert_eq!(back, a);
        // zeta_40 itself does not live in Q(zeta_5).
        assert!(z(40).project(5).unwrap().is_none());
    }

    #[test]
    fn promotion_uses_least_common_conductor() {
        let s = &z(4) + &z(5);
        assert_eq!(s.conductor(), 20);
        assert!(s.field_eq(&(&z(20).pow(5).unwrap() + &z(20).pow(4).unwrap())));
    }

    #[test]
    fn gauss_sum_square_root_of_five() {
        // zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4 squares to 5.
        let g = &(&z(5) - &z(5).pow(2).unwrap()) - &(&z(5).pow(3).unwrap() - &z(5).pow(4).unwrap());
        assert_eq!((&g * &g).as_rational(), Some(rat_int(5)));
        let root = CycNum::from_int(5).embed(5).unwrap().sqrt_in_field().unwrap();
        assert_eq!((&root * &root).as_rational(), Some(rat_int(5)));
    }

    #[test]
    fn sqrt_decisions() {
        // sqrt(2) exists at conductor 8 but not at conductor 5.
        let two_at_8 = CycNum::from_int(2).embed(8).unwrap();
        let r = two_at_8.sqrt_in_field().unwrap();
        assert!((&r * &r).field_eq(&two_at_8));
        assert!(CycNum::from_int(2).embed(5).unwrap().sqrt_in_field().is_none());
        // sqrt(-1) at conductor 4 is a power of zeta_4.
        let minus_one = CycNum::from_int(-1).embed(4).unwrap();
        let i = minus_one.sqrt_in_field().unwrap();
        assert!((&i * &i).field_eq(&minus_one));
        // sqrt(zeta_5) lies back inside Q(zeta_5): (-zeta_5^3)^2 = zeta_5.
        let root = z(5).sqrt_in_field().unwrap();
        assert!((&root * &root).field_eq(&z(5)));
        assert_eq!(root.conductor(), 5);
        // sqrt(1 + zeta_5) is not a rational multiple of a root of unity;
        // the search reports None (undecided) rather than inventing one.
        assert!((&CycNum::one().embed(5).unwrap() + &z(5)).sqrt_in_field().is_none());
    }

    #[test]
    fn squarefree_decomposition() {
        let (e, d) = integer_squarefree_part(&BigInt::from(720)).unwrap();
        assert_eq!((e, d), (BigInt::from(12), BigInt::from(5)));
        let (e, d) = integer_squarefree_part(&BigInt::from(-45)).unwrap();
        assert_eq!((e, d), (BigInt::from(3), BigInt::from(-5)));
        let (e, d) = integer_squarefree_part(&BigInt::from(1)).unwrap();
        assert_eq!((e, d), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn rational_detection() {
        assert_eq!(z(4).pow(2).unwrap().as_rational(), Some(rat_int(-1)));
        assert_eq!(z(5).as_rational(), None);
        let s = &(&(&z(5) + &z(5).pow(2).unwrap()) + &z(5).pow(3).unwrap()) + &z(5).pow(4).unwrap();
        assert_eq!(s.as_rational(), Some(rat_int(-1)));
    }
}
