//! Exact linear-algebra geometry on a six-dimensional space: Pfaffians of
//! skew forms, pencils of skew forms lying on the Pfaffian cubic, recovery
//! of the common isotropic four-space, the conic traced in the lines of
//! that four-space, and discriminants of quadric pencils.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactfield::{CycNum, FieldError};
use crate::linalg::Matrix;
use crate::planecurves::{PlaneCurve, PlaneError, PLANE_VARS};
use crate::polyalg::{factor_linear, BinaryForm, MultiPoly, PolyError};

#[derive(Debug, Clone, PartialEq)]
pub enum LinalgeomError {
    NotSkew,
    NotSymmetric,
    WrongSize { expected: usize, got: usize },
    NotTwoDimensional,
    WrongAmbientDimension { got: usize },
    NotInA,
    /// Fewer than two rank-4 members among the sampled pencil parameters.
    RankPattern,
    /// Kernel spans exist but none verifies as a 4-dimensional isotropic
    /// subspace: the pencil is not a line datum.
    NotIsotropic,
    /// Two distinct verified four-spaces arose from kernel pairs.
    AmbiguousW4,
    MissingW4,
    WrongImageDimension { got: usize },
    /// The annihilator plane lies inside the Grassmannian; no conic is cut.
    PlaneInsideGrassmannian,
    IdenticallyZero,
    Field(FieldError),
    Poly(PolyError),
    Plane(PlaneError),
}

impl fmt::Display for LinalgeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgeomError::NotSkew => write!(f, "matrix is not antisymmetric"),
            LinalgeomError::NotSymmetric => write!(f, "matrix is not symmetric"),
            LinalgeomError::WrongSize { expected, got } => {
                write!(f, "expected a {expected}x{expected} matrix, got {got} rows")
            }
            LinalgeomError::NotTwoDimensional => {
                write!(f, "the two given forms do not span a plane")
            }
            LinalgeomError::WrongAmbientDimension { got } => {
                write!(f, "ambient system must be five-dimensional, got rank {got}")
            }
            LinalgeomError::NotInA => {
                write!(f, "the pencil does not lie inside the ambient system")
            }
            LinalgeomError::RankPattern => {
                write!(f, "no two rank-4 members among the sampled pencil parameters")
            }
            LinalgeomError::NotIsotropic => {
                write!(f, "kernel spans do not form an isotropic four-space")
            }
            LinalgeomError::AmbiguousW4 => {
                write!(f, "two distinct isotropic four-spaces verified")
            }
            LinalgeomError::MissingW4 => {
                write!(f, "the datum carries no four-space")
            }
            LinalgeomError::WrongImageDimension { got } => {
                write!(f, "restricted system has image dimension {got}, need 3")
            }
            LinalgeomError::PlaneInsideGrassmannian => {
                write!(f, "annihilator plane lies inside the Grassmannian")
            }
            LinalgeomError::IdenticallyZero => {
                write!(f, "determinant form vanishes identically")
            }
            LinalgeomError::Field(e) => write!(f, "{e}"),
            LinalgeomError::Poly(e) => write!(f, "{e}"),
            LinalgeomError::Plane(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LinalgeomError {}

impl From<FieldError> for LinalgeomError {
    fn from(e: FieldError) -> Self {
        LinalgeomError::Field(e)
    }
}

impl From<PolyError> for LinalgeomError {
    fn from(e: PolyError) -> Self {
        LinalgeomError::Poly(e)
    }
}

impl From<PlaneError> for LinalgeomError {
    fn from(e: PlaneError) -> Self {
        LinalgeomError::Plane(e)
    }
}

/// Strictly-upper index pairs of a 4x4 skew matrix, in row-major order;
/// the coordinate order used for bivectors throughout.
const PAIRS4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// An exactly antisymmetric 6x6 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewForm6 {
    m: Matrix<CycNum>,
}

impl SkewForm6 {
    pub fn new(m: Matrix<CycNum>) -> Result<SkewForm6, LinalgeomError> {
        if m.rows() != 6 || m.cols() != 6 {
            return Err(LinalgeomError::WrongSize {
                expected: 6,
                got: m.rows(),
            });
        }
        for r in 0..6 {
            for c in 0..=r {
                if !m.at(r, c).add(m.at(c, r)).is_zero() {
                    return Err(LinalgeomError::NotSkew);
                }
            }
        }
        Ok(SkewForm6 { m })
    }

    /// Build from the strictly upper triangle; the rest is forced.
    pub fn from_upper(entries: &[(usize, usize, CycNum)]) -> SkewForm6 {
        let mut data = vec![CycNum::zero(); 36];
        for (i, j, v) in entries {
            assert!(i < j && *j < 6, "strictly upper entries only");
            let upper = data[i * 6 + j].add(v);
            data[i * 6 + j] = upper;
            let lower = data[j * 6 + i].sub(v);
            data[j * 6 + i] = lower;
        }
        SkewForm6 {
            m: Matrix::new(6, 6, data),
        }
    }

    pub fn zero() -> SkewForm6 {
        SkewForm6 {
            m: Matrix::from_fn(6, 6, |_, _| CycNum::zero()),
        }
    }

    pub fn matrix(&self) -> &Matrix<CycNum> {
        &self.m
    }

    pub fn add(&self, other: &SkewForm6) -> SkewForm6 {
        SkewForm6 {
            m: Matrix::from_fn(6, 6, |r, c| self.m.at(r, c).add(other.m.at(r, c))),
        }
    }

    pub fn scale(&self, s: &CycNum) -> SkewForm6 {
        SkewForm6 {
            m: Matrix::from_fn(6, 6, |r, c| self.m.at(r, c).mul(s)),
        }
    }

    /// The congruence transform g^T M g; antisymmetry is preserved.
    pub fn congruence(&self, g: &Matrix<CycNum>) -> SkewForm6 {
        SkewForm6 {
            m: g.transpose().mul(&self.m).mul(g),
        }
    }

    /// The fifteen strictly-upper entries, row-major.
    pub fn upper_vector(&self) -> Vec<CycNum> {
        let mut v = Vec::with_capacity(15);
        for r in 0..6 {
            for c in (r + 1)..6 {
                v.push(self.m.at(r, c).clone());
            }
        }
        v
    }

    /// The value v^T M w of the form on a pair of vectors.
    pub fn pair(&self, v: &[CycNum], w: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero();
        for r in 0..6 {
            for c in 0..6 {
                acc = acc.add(&v[r].mul(self.m.at(r, c)).mul(&w[c]));
            }
        }
        acc
    }

    /// Pull back along the rows of `basis` (k x 6): the k x k matrix
    /// B M B^T of the form restricted to the row span.
    pub fn restrict(&self, basis: &Matrix<CycNum>) -> Matrix<CycNum> {
        basis.mul(&self.m).mul(&basis.transpose())
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }
}

fn pf_rec(m: &Matrix<CycNum>, live: &[usize]) -> CycNum {
    if live.is_empty() {
        return CycNum::one();
    }
    let first = live[0];
    let mut acc = CycNum::zero();
    for (pos, &j) in live.iter().enumerate().skip(1) {
        let entry = m.at(first, j);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = live[1..]
            .iter()
            .copied()
            .filter(|&k| k != j)
            .collect();
        let term = entry.mul(&pf_rec(m, &rest));
        // Sign alternates with the position of the chosen partner.
        if pos % 2 == 1 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Combinatorial Pfaffian of an antisymmetric 6x6 matrix: the signed sum
/// over the fifteen perfect matchings, expanded recursively.
pub fn pfaffian(m: &SkewForm6) -> CycNum {
    pf_rec(&m.m, &[0, 1, 2, 3, 4, 5])
}

/// A subspace of the six-space in canonical form: the basis rows are in
/// reduced row echelon form, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: Matrix<CycNum>,
}

impl Subspace {
    /// Row span of the given vectors.
    pub fn span(rows: &[Vec<CycNum>]) -> Subspace {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::from_rows(rows);
        let pivots = m.rref();
        let dim = pivots.len();
        let basis = Matrix::from_fn(dim, cols, |r, c| m.at(r, c).clone());
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<CycNum> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.basis.rows())
            .map(|r| (0..self.basis.cols()).map(|c| self.basis.at(r, c).clone()).collect())
            .collect()
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        let mut rows = self.basis_rows();
        rows.push(v.to_vec());
        Matrix::from_rows(&rows).rank() == self.dim()
    }
}

/// A pencil of skew forms, optionally with the four-space on which both
/// generators vanish.
#[derive(Debug, Clone)]
pub struct PfaffianLineDatum {
    pub a2: [SkewForm6; 2],
    pub w4: Option<Subspace>,
}

impl PfaffianLineDatum {
    pub fn new(
        a2: [SkewForm6; 2],
        w4: Option<Subspace>,
    ) -> Result<PfaffianLineDatum, LinalgeomError> {
        let stacked = Matrix::from_rows(&[a2[0].upper_vector(), a2[1].upper_vector()]);
        if stacked.rank() != 2 {
            return Err(LinalgeomError::NotTwoDimensional);
        }
        if let Some(w) = &w4 {
            if w.dim() != 4 {
                return Err(LinalgeomError::WrongSize {
                    expected: 4,
                    got: w.dim(),
                });
            }
            for form in &a2 {
                if form.restrict(w.basis()).rank() != 0 {
                    return Err(LinalgeomError::NotIsotropic);
                }
            }
        }
        Ok(PfaffianLineDatum { a2, w4 })
    }
}

fn check_ambient(ambient: &[SkewForm6]) -> Result<Matrix<CycNum>, LinalgeomError> {
    let rows: Vec<Vec<CycNum>> = ambient.iter().map(SkewForm6::upper_vector).collect();
    let m = Matrix::from_rows(&rows);
    if ambient.len() != 5 || m.rank() != 5 {
        return Err(LinalgeomError::WrongAmbientDimension { got: m.rank() });
    }
    Ok(m)
}

/// Exact interpolation of p(t) of degree < `samples.len()` from values at
/// t = 0, 1, 2, ...; returns the coefficients, constant first.
fn interpolate(samples: &[CycNum]) -> Vec<CycNum> {
    let n = samples.len();
    let v = Matrix::from_fn(n, n, |r, c| {
        CycNum::from_int(r as i64)
            .pow(c as i64)
            .expect("nonnegative power")
    });
    v.solve(samples).expect("Vandermonde system is invertible")
}

/// Result of the line test: the pencil lies on the Pfaffian cubic iff the
/// binary cubic Pf(l a1 + m a2) vanishes identically.
#[derive(Debug, Clone)]
pub struct LineCheck {
    pub is_line: bool,
    /// Pf of the pencil as a binary cubic in (l, m).
    pub cubic: BinaryForm,
}

pub fn pencil_is_line_on_y(
    datum: &PfaffianLineDatum,
    ambient: &[SkewForm6],
) -> Result<LineCheck, LinalgeomError> {
    let amb = check_ambient(ambient)?;
    for form in &datum.a2 {
        let mut rows: Vec<Vec<CycNum>> = (0..5)
            .map(|r| (0..15).map(|c| amb.at(r, c).clone()).collect())
            .collect();
        rows.push(form.upper_vector());
        if Matrix::from_rows(&rows).rank() != 5 {
            return Err(LinalgeomError::NotInA);
        }
    }
    // Pf(t a1 + a2) has degree at most 3 in t; four samples pin it down.
    let samples: Vec<CycNum> = (0..4)
        .map(|t| {
            pfaffian(
                &datum.a2[0]
                    .scale(&CycNum::from_int(t))
                    .add(&datum.a2[1]),
            )
        })
        .collect();
    let coeffs = interpolate(&samples);
    // coeffs[k] multiplies t^k = (l/m)^k; the homogeneous coefficient of
    // l^(3-j) m^j is coeffs[3-j].
    let cubic = BinaryForm::from_coeffs((0..4).map(|j| coeffs[3 - j].clone()).collect());
    Ok(LineCheck {
        is_line: cubic.is_zero(),
        cubic,
    })
}

/// Recover the common isotropic four-space of a degenerate pencil from the
/// kernels of its rank-4 members, sampling the pencil at a1 + t a2 for
/// t = 0..9. Every candidate kernel pair is verified; exactly one verified
/// four-space must arise.
pub fn recover_w4(a2: &[SkewForm6; 2]) -> Result<Subspace, LinalgeomError> {
    let mut kernels: Vec<Vec<Vec<CycNum>>> = Vec::new();
    for t in 0..10i64 {
        let member = a2[0].add(&a2[1].scale(&CycNum::from_int(t)));
        if member.rank() == 4 {
            kernels.push(member.matrix().nullspace());
        }
    }
    if kernels.len() < 2 {
        return Err(LinalgeomError::RankPattern);
    }
    let mut candidates: Vec<Subspace> = Vec::new();
    for i in 0..kernels.len() {
        for j in (i + 1)..kernels.len() {
            let mut rows = kernels[i].clone();
            rows.extend(kernels[j].iter().cloned());
            let w = Subspace::span(&rows);
            if w.dim() != 4 {
                continue;
            }
            if a2.iter().any(|f| f.restrict(w.basis()).rank() != 0) {
                continue;
            }
            if !candidates.contains(&w) {
                candidates.push(w);
            }
        }
    }
    match candidates.len() {
        0 => Err(LinalgeomError::NotIsotropic),
        1 => Ok(candidates.pop().expect("one candidate")),
        _ => Err(LinalgeomError::AmbiguousW4),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicType {
    Smooth,
    Reducible,
    NonReduced,
}

impl fmt::Display for ConicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConicType::Smooth => "smooth",
            ConicType::Reducible => "reducible",
            ConicType::NonReduced => "non-reduced",
        };
        write!(f, "{s}")
    }
}

/// The conic associated to a line datum: coordinates are with respect to
/// the returned annihilator basis inside the bivectors of the four-space.
#[derive(Debug, Clone)]
pub struct ConicFromLine {
    pub conic: PlaneCurve,
    pub conic_type: ConicType,
    /// Basis of the annihilator of the restricted system, as coordinate
    /// vectors in the bivector order (01),(02),(03),(12),(13),(23).
    pub annihilator: Vec<Vec<CycNum>>,
}

/// Polarization B(p, q) of the decomposability quadric on bivectors:
/// B(p, p) recovers the quadric itself.
fn plucker_pair(p: &[CycNum], q: &[CycNum]) -> CycNum {
    let two_b = p[0]
        .mul(&q[5])
        .add(&p[5].mul(&q[0]))
        .sub(&p[1].mul(&q[4]))
        .sub(&p[4].mul(&q[1]))
        .add(&p[2].mul(&q[3]))
        .add(&p[3].mul(&q[2]));
    two_b.div(&CycNum::from_int(2)).expect("two is invertible")
}

/// Restrict the ambient system to the four-space and cut the space of its
/// lines by the result: the image must be three-dimensional (the kernel is
/// exactly the pencil), and the conic is the decomposability quadric on
/// the annihilator plane of the image.
pub fn conic_from_line(
    datum: &PfaffianLineDatum,
    ambient: &[SkewForm6],
) -> Result<ConicFromLine, LinalgeomError> {
    check_ambient(ambient)?;
    let w4 = datum.w4.as_ref().ok_or(LinalgeomError::MissingW4)?;
    let restricted: Vec<Vec<CycNum>> = ambient
        .iter()
        .map(|f| {
            let r = f.restrict(w4.basis());
            PAIRS4.iter().map(|&(i, j)| r.at(i, j).clone()).collect()
        })
        .collect();
    let system = Matrix::from_rows(&restricted);
    let rank = system.rank();
    if rank != 3 {
        return Err(LinalgeomError::WrongImageDimension { got: rank });
    }
    let annihilator = system.nullspace();
    debug_assert_eq!(annihilator.len(), 3);
    let vars: Vec<&str> = PLANE_VARS.to_vec();
    let mut poly = MultiPoly::zero(&vars);
    for i in 0..3 {
        for j in 0..3 {
            let g = plucker_pair(&annihilator[i], &annihilator[j]);
            let term = MultiPoly::var(&vars, i)
                .mul(&MultiPoly::var(&vars, j))
                .scale(&g);
            poly = poly.add(&term);
        }
    }
    let conic = PlaneCurve::new(poly)
        .map_err(|_| LinalgeomError::PlaneInsideGrassmannian)?;
    let conic_type = match conic.conic_rank() {
        Some(3) => ConicType::Smooth,
        Some(2) => ConicType::Reducible,
        Some(1) => ConicType::NonReduced,
        _ => return Err(LinalgeomError::PlaneInsideGrassmannian),
    };
    Ok(ConicFromLine {
        conic,
        conic_type,
        annihilator,
    })
}

/// A member of the pencil where the quadric degenerates, as a projective
/// parameter point (l : m) with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct DegenerateMember {
    pub point: (CycNum, CycNum),
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct PencilDiscriminant {
    /// det(l Q1 + m Q2) as a binary sextic in (l, m).
    pub form: BinaryForm,
    pub squarefree: bool,
    /// Field-rational degenerate members.
    pub members: Vec<DegenerateMember>,
    /// Whether the sextic splits completely over the working field.
    pub fully_split: bool,
}

fn check_symmetric(q: &Matrix<CycNum>) -> Result<(), LinalgeomError> {
    if q.rows() != 6 || q.cols() != 6 {
        return Err(LinalgeomError::WrongSize {
            expected: 6,
            got: q.rows(),
        });
    }
    for r in 0..6 {
        for c in 0..r {
            if q.at(r, c) != q.at(c, r) {
                return Err(LinalgeomError::NotSymmetric);
            }
        }
    }
    Ok(())
}

pub fn pencil_discriminant(
    q1: &Matrix<CycNum>,
    q2: &Matrix<CycNum>,
    conductor: u32,
) -> Result<PencilDiscriminant, LinalgeomError> {
    check_symmetric(q1)?;
    check_symmetric(q2)?;
    // det(t Q1 + Q2) has degree at most 6; seven samples determine it.
    let samples: Vec<CycNum> = (0..7)
        .map(|t| {
            let tt = CycNum::from_int(t);
            Matrix::from_fn(6, 6, |r, c| tt.mul(q1.at(r, c)).add(q2.at(r, c))).det()
        })
        .collect();
    let coeffs = interpolate(&samples);
    let form = BinaryForm::from_coeffs((0..7).map(|j| coeffs[6 - j].clone()).collect());
    if form.is_zero() {
        return Err(LinalgeomError::IdenticallyZero);
    }
    let dehom = form.dehomogenize();
    let deriv = dehom.derivative();
    let squarefree_affine = if deriv.is_zero() {
        dehom.degree() == Some(0)
    } else {
        crate::polyalg::UniPoly::gcd(&dehom, &deriv).degree() == Some(0)
    };
    let squarefree = squarefree_affine && form.y_multiplicity() <= 1;
    let factorization = factor_linear(&form, conductor)?;
    let members = factorization
        .factors
        .iter()
        .map(|(lin, mult)| DegenerateMember {
            point: (lin.coeff(1).neg(), lin.coeff(0).clone()),
            multiplicity: *mult,
        })
        .collect();
    Ok(PencilDiscriminant {
        form,
        squarefree,
        members,
        fully_split: factorization.is_fully_split(),
    })
}
