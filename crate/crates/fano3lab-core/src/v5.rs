//! Geometry of the closed `PGL_2`-orbit of the sextic `x y (x^4 - y^4)` in
//! the projective space of binary sextics, together with its lines.
//!
//! Points of the threefold come in three orbit types, each certified by an
//! explicit witness:
//! * open orbit: `f g (s1 f^4 - s2 g^4)` with `f, g` independent linear
//!   forms and `s1 s2 != 0`;
//! * tangential scroll: `f^5 g` with `f, g` independent;
//! * the rational normal sextic of perfect powers: `f^6`.
//!
//! Lines on the threefold are parameterized by the plane of binary
//! quadratics: the quadratic `f g` corresponds to the pencil spanned by
//! `f^5 g` and `f g^5`, and the square `f^2` to the pencil spanned by `f^6`
//! and `f^5 h` (`h` any complement). All predicates are exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactfield::{cmp_coord_vectors, CycNum};
use crate::linalg::Matrix;
use crate::polyalg::{factor_linear, BinaryForm, PolyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum V5Error {
    /// The operation needs a nonzero form of the stated degree.
    WrongDegree { expected: usize, got: usize },
    ZeroForm,
    /// The computation requires roots (or radicals) that do not exist in the
    /// working cyclotomic field; enlarging the conductor may help.
    RootsNotInField,
    Poly(PolyError),
}

impl fmt::Display for V5Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            V5Error::WrongDegree { expected, got } => {
                write!(f, "expected a nonzero form of degree {expected}, got degree {got}")
            }
            V5Error::ZeroForm => write!(f, "zero form has no projective class"),
            V5Error::RootsNotInField => write!(
                f,
                "required roots are not expressible in the working field; \
                 try a larger conductor"
            ),
            V5Error::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for V5Error {}

impl From<PolyError> for V5Error {
    fn from(e: PolyError) -> Self {
        V5Error::Poly(e)
    }
}

/// Orbit type of a point, by dimension of its `PGL_2`-orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitTag {
    /// Dense three-dimensional orbit.
    Open,
    /// Two-dimensional orbit of `[f^5 g]`: the tangential scroll of the
    /// sextic curve, without the curve itself.
    Scroll,
    /// One-dimensional orbit of perfect sixth powers `[f^6]`.
    SexticCurve,
}

/// Certificate that a sextic lies on the threefold, exact by construction.
#[derive(Debug, Clone)]
pub enum Witness {
    Open {
        f: BinaryForm,
        g: BinaryForm,
        s1: CycNum,
        s2: CycNum,
    },
    Scroll {
        f: BinaryForm,
        g: BinaryForm,
    },
    Sextic {
        f: BinaryForm,
    },
}

impl Witness {
    pub fn orbit_tag(&self) -> OrbitTag {
        match self {
            Witness::Open { .. } => OrbitTag::Open,
            Witness::Scroll { .. } => OrbitTag::Scroll,
            Witness::Sextic { .. } => OrbitTag::SexticCurve,
        }
    }

    /// Rebuild the sextic this witness describes (up to scale).
    pub fn build_form(&self) -> BinaryForm {
        match self {
            Witness::Open { f, g, s1, s2 } => {
                let q = f.pow(4).scale(s1).sub(&g.pow(4).scale(s2)).expect("same degree");
                f.mul(g).mul(&q)
            }
            Witness::Scroll { f, g } => f.pow(5).mul(g),
            Witness::Sextic { f } => f.pow(6),
        }
    }
}

/// A point of the threefold: the sextic together with its witness.
#[derive(Debug, Clone)]
pub struct PointOnY {
    form: BinaryForm,
    witness: Witness,
}

impl PointOnY {
    pub fn form(&self) -> &BinaryForm {
        &self.form
    }

    pub fn witness(&self) -> &Witness {
        &self.witness
    }

    pub fn orbit_tag(&self) -> OrbitTag {
        self.witness.orbit_tag()
    }

    /// Whether the point lies on the closure of the scroll orbit (the
    /// tangential surface of the sextic curve).
    pub fn on_tangential_scroll(&self) -> bool {
        matches!(self.orbit_tag(), OrbitTag::Scroll | OrbitTag::SexticCurve)
    }

    /// Exact consistency check: the witness rebuilds the form projectively.
    pub fn verify(&self) -> bool {
        self.witness
            .build_form()
            .proj_eq(&self.form)
            .unwrap_or(false)
    }

    /// Transport along a group element: acts on the form and on the witness
    /// data compatibly (the scalars are unchanged because the substitution
    /// action is multiplicative).
    pub fn transport(&self, g: &crate::polyalg::GroupElt2) -> PointOnY {
        let witness = match &self.witness {
            Witness::Open { f, g: g2, s1, s2 } => Witness::Open {
                f: crate::polyalg::act(g, f),
                g: crate::polyalg::act(g, g2),
                s1: s1.clone(),
                s2: s2.clone(),
            },
            Witness::Scroll { f, g: g2 } => Witness::Scroll {
                f: crate::polyalg::act(g, f),
                g: crate::polyalg::act(g, g2),
            },
            Witness::Sextic { f } => Witness::Sextic {
                f: crate::polyalg::act(g, f),
            },
        };
        PointOnY {
            form: crate::polyalg::act(g, &self.form),
            witness,
        }
    }
}

/// Verdict of point classification.
#[derive(Debug, Clone)]
pub enum Classification {
    OnY(PointOnY),
    NotOnY,
}

/// Decide whether a binary sextic lies on the orbit closure, producing a
/// witness when it does.
///
/// The multiplicity pattern of a form is intrinsic (it is visible in the
/// squarefree decomposition without splitting), so `NotOnY` verdicts from a
/// wrong pattern are conclusive even when roots are missing from the field.
/// An all-distinct pattern whose roots cannot all be split yields
/// `RootsNotInField` unless a witness pair is found among the split roots.
pub fn classify_point(phi: &BinaryForm, conductor: u32) -> Result<Classification, V5Error> {
    if phi.is_zero() {
        return Err(V5Error::ZeroForm);
    }
    if phi.degree() != 6 {
        return Err(V5Error::WrongDegree {
            expected: 6,
            got: phi.degree(),
        });
    }
    let fact = factor_linear(phi, conductor)?;
    // Intrinsic multiplicity pattern: linear factors contribute their
    // multiplicity once each; the remainder contributes deg(s)/1 copies of
    // each multiplicity appearing in its squarefree structure.
    let mut pattern: Vec<usize> = fact.factors.iter().map(|(_, m)| *m).collect();
    let mut unsplit_simple_roots = 0usize;
    if fact.remainder.degree() > 0 {
        for (s, m) in fact.remainder.dehomogenize().squarefree_decomposition() {
            let d = s.degree().expect("nonconstant squarefree part");
            for _ in 0..d {
                pattern.push(m);
            }
            if m == 1 {
                unsplit_simple_roots += d;
            }
        }
    }
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    match pattern.as_slice() {
        [6] => {
            let f = fact.factors[0].0.clone();
            let p = PointOnY {
                form: phi.clone(),
                witness: Witness::Sextic { f },
            };
            debug_assert!(p.verify());
            Ok(Classification::OnY(p))
        }
        [5, 1] => {
            // Both squarefree components have degree one, so both split.
            let f = fact
                .factors
                .iter()
                .find(|(_, m)| *m == 5)
                .expect("multiplicity-five factor")
                .0
                .clone();
            let g = fact
                .factors
                .iter()
                .find(|(_, m)| *m == 1)
                .expect("simple factor")
                .0
                .clone();
            let p = PointOnY {
                form: phi.clone(),
                witness: Witness::Scroll { f, g },
            };
            debug_assert!(p.verify());
            Ok(Classification::OnY(p))
        }
        [1, 1, 1, 1, 1, 1] => {
            // Open-orbit candidates: look for a pair of split roots f, g with
            // phi in the span of f^5 g and f g^5.
            let linear: Vec<&BinaryForm> = fact.factors.iter().map(|(l, _)| l).collect();
            for i in 0..linear.len() {
                for j in i + 1..linear.len() {
                    if let Some(p) = open_witness_from_pair(phi, linear[i], linear[j]) {
                        debug_assert!(p.verify());
                        return Ok(Classification::OnY(p));
                    }
                }
            }
            if unsplit_simple_roots > 0 {
                // Some roots stayed exotic; a witness pair may hide there.
                Err(V5Error::RootsNotInField)
            } else {
                Ok(Classification::NotOnY)
            }
        }
        _ => Ok(Classification::NotOnY),
    }
}

/// Try to express `phi` as `a f^5 g + b f g^5` with `a, b` nonzero.
fn open_witness_from_pair(
    phi: &BinaryForm,
    f: &BinaryForm,
    g: &BinaryForm,
) -> Option<PointOnY> {
    let b1 = f.pow(5).mul(g);
    let b2 = f.mul(&g.pow(5));
    let mat = Matrix::from_fn(7, 2, |r, c| {
        if c == 0 {
            b1.coeff(r).clone()
        } else {
            b2.coeff(r).clone()
        }
    });
    let sol = mat.solve(phi.coeffs())?;
    // Consistency of the full overdetermined system.
    for r in 0..7 {
        let lhs = &(&sol[0] * b1.coeff(r)) + &(&sol[1] * b2.coeff(r));
        if !lhs.field_eq(phi.coeff(r)) {
            return None;
        }
    }
    if sol[0].is_zero() || sol[1].is_zero() {
        return None;
    }
    Some(PointOnY {
        form: phi.clone(),
        witness: Witness::Open {
            f: f.clone(),
            g: g.clone(),
            s1: sol[0].clone(),
            s2: sol[1].neg(),
        },
    })
}

/// Kind of a line, according to its quadratic in the parameterizing plane.
#[derive(Debug, Clone)]
pub enum LineKind {
    /// `sigma = f g` with independent `f, g`; the pencil of `f g (s1 f^4 -
    /// s2 g^4)`.
    Ordinary { f: BinaryForm, g: BinaryForm },
    /// `sigma = f^2`; the pencil of `f^5 (s1 f + s2 h)`.
    Special { f: BinaryForm },
}

/// A line on the threefold: a pencil of sextics, stored with its span and
/// the quadratic that names it.
#[derive(Debug, Clone)]
pub struct LineOnY {
    kind: LineKind,
    span: [BinaryForm; 2],
    sigma: BinaryForm,
}

impl LineOnY {
    /// Build the line named by a nonzero binary quadratic; requires the
    /// quadratic to split over the working field.
    pub fn from_sigma(q: &BinaryForm, conductor: u32) -> Result<LineOnY, V5Error> {
        if q.is_zero() {
            return Err(V5Error::ZeroForm);
        }
        if q.degree() != 2 {
            return Err(V5Error::WrongDegree {
                expected: 2,
                got: q.degree(),
            });
        }
        let fact = factor_linear(q, conductor)?;
        if !fact.is_fully_split() {
            return Err(V5Error::RootsNotInField);
        }
        match fact.factors.as_slice() {
            [(f, 2)] => Ok(LineOnY::special(f.clone())),
            [(f, 1), (g, 1)] => Ok(LineOnY::ordinary(f.clone(), g.clone())),
            _ => unreachable!("degree-two factorization shape"),
        }
    }

    /// Ordinary line from its two independent (not projectively equal)
    /// linear factors.
    pub fn ordinary(f: BinaryForm, g: BinaryForm) -> LineOnY {
        let mut f = f.normalize();
        let mut g = g.normalize();
        assert!(
            !f.proj_eq(&g).unwrap_or(true),
            "ordinary line needs independent factors"
        );
        if cmp_coord_vectors(f.coeffs(), g.coeffs()) == core::cmp::Ordering::Greater {
            core::mem::swap(&mut f, &mut g);
        }
        let span = [f.pow(5).mul(&g), f.mul(&g.pow(5))];
        let sigma = f.mul(&g);
        LineOnY {
            kind: LineKind::Ordinary { f, g },
            span,
            sigma,
        }
    }

    /// Special line from the repeated linear factor of its quadratic.
    pub fn special(f: BinaryForm) -> LineOnY {
        let f = f.normalize();
        // Complementary linear form: y unless f is proportional to y.
        let h = if f.coeff(0).is_zero() {
            BinaryForm::linear(CycNum::one(), CycNum::zero())
        } else {
            BinaryForm::linear(CycNum::zero(), CycNum::one())
        };
        let span = [f.pow(6), f.pow(5).mul(&h)];
        let sigma = f.mul(&f);
        LineOnY {
            kind: LineKind::Special { f },
            span,
            sigma,
        }
    }

    pub fn kind(&self) -> &LineKind {
        &self.kind
    }

    pub fn is_special(&self) -> bool {
        matches!(self.kind, LineKind::Special { .. })
    }

    /// The two sextics spanning the pencil.
    pub fn span(&self) -> &[BinaryForm; 2] {
        &self.span
    }

    /// The binary quadratic naming the line in the parameterizing plane.
    pub fn sigma_point(&self) -> &BinaryForm {
        &self.sigma
    }

    /// Same line as a subvariety (equivalently, same point of the
    /// parameterizing plane).
    pub fn eq_line(&self, other: &LineOnY) -> bool {
        self.sigma.proj_eq(&other.sigma).unwrap_or(false)
    }

    /// Exact membership of a sextic in the pencil.
    pub fn contains(&self, phi: &BinaryForm) -> bool {
        if phi.is_zero() || phi.degree() != 6 {
            return false;
        }
        let rows = vec![
            self.span[0].coeffs().to_vec(),
            self.span[1].coeffs().to_vec(),
            phi.coeffs().to_vec(),
        ];
        Matrix::from_rows(&rows).rank() == 2
    }

    /// The point `a * span[0] + b * span[1]`, witnessed by the line data (no
    /// factorization needed).
    pub fn point_at(&self, a: &CycNum, b: &CycNum) -> Result<PointOnY, V5Error> {
        if a.is_zero() && b.is_zero() {
            return Err(V5Error::ZeroForm);
        }
        let form = self.span[0].scale(a).add(&self.span[1].scale(b)).expect("same degree");
        let witness = match &self.kind {
            LineKind::Ordinary { f, g } => {
                if b.is_zero() {
                    Witness::Scroll {
                        f: f.clone(),
                        g: g.clone(),
                    }
                } else if a.is_zero() {
                    Witness::Scroll {
                        f: g.clone(),
                        g: f.clone(),
                    }
                } else {
                    Witness::Open {
                        f: f.clone(),
                        g: g.clone(),
                        s1: a.clone(),
                        s2: b.neg(),
                    }
                }
            }
            LineKind::Special { f } => {
                if b.is_zero() {
                    Witness::Sextic { f: f.clone() }
                } else {
                    // a f^6 + b f^5 h = f^5 (a f + b h) with the complement
                    // h fixed at construction time.
                    let comp = if f.coeff(0).is_zero() {
                        BinaryForm::linear(CycNum::one(), CycNum::zero())
                    } else {
                        BinaryForm::linear(CycNum::zero(), CycNum::one())
                    };
                    Witness::Scroll {
                        f: f.clone(),
                        g: f.scale(a).add(&comp.scale(b)).expect("same degree"),
                    }
                }
            }
        };
        let p = PointOnY { form, witness };
        debug_assert!(p.verify());
        Ok(p)
    }
}

/// Result of intersecting two lines.
#[derive(Debug, Clone)]
pub enum LineIntersection {
    Equal,
    Point(PointOnY),
    Disjoint,
}

/// Exact intersection of two lines via the rank of their stacked spans.
pub fn line_intersect(l1: &LineOnY, l2: &LineOnY) -> LineIntersection {
    let rows = vec![
        l1.span[0].coeffs().to_vec(),
        l1.span[1].coeffs().to_vec(),
        l2.span[0].coeffs().to_vec(),
        l2.span[1].coeffs().to_vec(),
    ];
    let stacked = Matrix::from_rows(&rows);
    match stacked.rank() {
        2 => LineIntersection::Equal,
        3 => {
            // One relation a*b1 + b*b2 - c*b3 - d*b4 = 0: solve for the
            // kernel of the transpose system.
            let cols = Matrix::from_fn(7, 4, |r, c| match c {
                0 => l1.span[0].coeff(r).clone(),
                1 => l1.span[1].coeff(r).clone(),
                2 => l2.span[0].coeff(r).neg(),
                _ => l2.span[1].coeff(r).neg(),
            });
            let null = cols.nullspace();
            assert_eq!(null.len(), 1, "rank three leaves a line of relations");
            let v = &null[0];
            let p = l1
                .point_at(&v[0], &v[1])
                .expect("intersection point is nonzero");
            debug_assert!(l2.contains(p.form()));
            LineIntersection::Point(p)
        }
        4 => LineIntersection::Disjoint,
        r => unreachable!("stacked span rank {r}"),
    }
}

/// The distinguished representative of the dense orbit: x y (x^4 - y^4),
/// the sextic with six distinct roots arranged as the vertices of an
/// octahedron.
pub fn open_orbit_representative() -> BinaryForm {
    let x = BinaryForm::linear(CycNum::one(), CycNum::zero());
    let y = BinaryForm::linear(CycNum::zero(), CycNum::one());
    x.mul(&y)
        .mul(&x.pow(4).sub(&y.pow(4)).expect("equal degrees"))
}

/// All lines through a point, by orbit type: three through an open-orbit
/// point, two through a scroll point, one through a sextic-curve point.
///
/// For an open-orbit point the three lines exist over the working field only
/// when fourth roots of the witness scalars and a square root of -1 do; in
/// their absence the computation reports `RootsNotInField`.
pub fn lines_through_point(p: &PointOnY, conductor: u32) -> Result<Vec<LineOnY>, V5Error> {
    let mut lines = match p.witness() {
        Witness::Sextic { f } => vec![LineOnY::special(f.clone())],
        Witness::Scroll { f, g } => vec![
            LineOnY::special(f.clone()),
            LineOnY::ordinary(f.clone(), g.clone()),
        ],
        Witness::Open { f, g, s1, s2 } => {
            // Only the ratio s1/s2 must be a fourth power: with u^4 = s1/s2
            // the form is proportional to (u f) g ((u f)^4 - g^4).
            let ratio = s1.div(&s2.clone()).map_err(PolyError::from)?;
            let u = fourth_root(&ratio).ok_or(V5Error::RootsNotInField)?;
            let fp = f.scale(&u);
            let gp = g.clone();
            let i = CycNum::from_int(-1).sqrt_in_field_at(conductor).ok_or(V5Error::RootsNotInField)?;
            vec![
                LineOnY::ordinary(fp.clone(), gp.clone()),
                LineOnY::ordinary(
                    fp.sub(&gp).expect("same degree"),
                    fp.add(&gp).expect("same degree"),
                ),
                LineOnY::ordinary(
                    fp.sub(&gp.scale(&i)).expect("same degree"),
                    fp.add(&gp.scale(&i)).expect("same degree"),
                ),
            ]
        }
    };
    for l in &lines {
        debug_assert!(l.contains(p.form()), "constructed line misses the point");
    }
    lines.sort_by(|a, b| {
        cmp_coord_vectors(
            a.sigma_point().normalize().coeffs(),
            b.sigma_point().normalize().coeffs(),
        )
    });
    Ok(lines)
}

fn fourth_root(s: &CycNum) -> Option<CycNum> {
    let w = s.sqrt_in_field()?;
    w.sqrt_in_field().or_else(|| w.neg().sqrt_in_field())
}

impl CycNum {
    /// Square root searched after promoting to the ambient conductor.
    fn sqrt_in_field_at(&self, conductor: u32) -> Option<CycNum> {
        let target = if conductor % self.conductor() == 0 {
            self.embed(conductor).expect("divisibility checked")
        } else {
            self.clone()
        };
        target.sqrt_in_field()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{act, GroupElt2};

    fn c(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    fn x() -> BinaryForm {
        BinaryForm::linear(c(1), c(0))
    }

    fn y() -> BinaryForm {
        BinaryForm::linear(c(0), c(1))
    }

    fn phi6() -> BinaryForm {
        x().mul(&y()).mul(&x().pow(4).sub(&y().pow(4)).unwrap())
    }

    #[test]
    fn classify_open_orbit_base_point() {
        let Classification::OnY(p) = classify_point(&phi6(), 4).unwrap() else {
            panic!("phi6 lies on the threefold");
        };
        assert_eq!(p.orbit_tag(), OrbitTag::Open);
        assert!(p.verify());
        assert!(!p.on_tangential_scroll());
    }

    #[test]
    fn classify_scroll_and_sextic_points() {
        let x5y = x().pow(5).mul(&y());
        let Classification::OnY(p) = classify_point(&x5y, 1).unwrap() else {
            panic!("x^5 y is a scroll point");
        };
        assert_eq!(p.orbit_tag(), OrbitTag::Scroll);
        assert!(p.on_tangential_scroll());

        let x6 = x().pow(6);
        let Classification::OnY(p) = classify_point(&x6, 1).unwrap() else {
            panic!("x^6 is on the sextic curve");
        };
        assert_eq!(p.orbit_tag(), OrbitTag::SexticCurve);
        assert!(p.on_tangential_scroll());
    }

    #[test]
    fn classify_off_threefold_patterns() {
        // Multiplicity pattern [4, 2] cannot occur on the threefold, and the
        // verdict needs no field extension.
        let f = x().pow(4).mul(&y().pow(2));
        assert!(matches!(
            classify_point(&f, 1).unwrap(),
            Classification::NotOnY
        ));
        // (x^2 + y^2)^3 has pattern [3, 3] even though its roots are not
        // rational: the pattern argument still rules it out at conductor 1.
        let g = BinaryForm::from_coeffs(vec![c(1), c(0), c(1)]).pow(3);
        assert!(matches!(
            classify_point(&g, 1).unwrap(),
            Classification::NotOnY
        ));
    }

    #[test]
    fn sum_of_sixth_powers_needs_a_big_enough_field() {
        let mut coeffs = vec![c(0); 7];
        coeffs[0] = c(1);
        coeffs[6] = c(1);
        let f = BinaryForm::from_coeffs(coeffs);
        // At conductor 4 only two roots split: undecided.
        assert_eq!(classify_point(&f, 4).unwrap_err(), V5Error::RootsNotInField);
        // At conductor 24 all six roots split and no witness pair exists.
        assert!(matches!(
            classify_point(&f, 24).unwrap(),
            Classification::NotOnY
        ));
    }

    #[test]
    fn open_point_with_unequal_scalars() {
        // x y (2 x^4 - 3 y^4) is on the open orbit with s1 = 2, s2 = 3.
        let q = x().pow(4).scale(&c(2)).sub(&y().pow(4).scale(&c(3))).unwrap();
        let f = x().mul(&y()).mul(&q);
        let Classification::OnY(p) = classify_point(&f, 1).unwrap() else {
            panic!("product of distinct factors with span membership");
        };
        let Witness::Open { s1, s2, .. } = p.witness() else {
            panic!("open witness expected");
        };
        // Scalars are only determined up to the witness pair order and
        // scale; the certificate itself must rebuild the form.
        assert!(!s1.is_zero() && !s2.is_zero());
        assert!(p.verify());
    }

    #[test]
    fn lines_through_the_three_orbit_types() {
        // Open-orbit base point: three lines, named by xy, x^2 - y^2,
        // x^2 + y^2.
        let Classification::OnY(p) = classify_point(&phi6(), 4).unwrap() else {
            unreachable!()
        };
        let lines = lines_through_point(&p, 4).unwrap();
        assert_eq!(lines.len(), 3);
        let expected = [
            BinaryForm::from_coeffs(vec![c(0), c(1), c(0)]),  // xy
            BinaryForm::from_coeffs(vec![c(1), c(0), c(-1)]), // x^2 - y^2
            BinaryForm::from_coeffs(vec![c(1), c(0), c(1)]),  // x^2 + y^2
        ];
        for e in &expected {
            assert!(
                lines.iter().any(|l| l.sigma_point().proj_eq(e).unwrap()),
                "missing line for sigma {e:?}"
            );
        }
        for l in &lines {
            assert!(l.contains(p.form()));
        }

        // Scroll point x^5 y: two lines, xy and x^2.
        let Classification::OnY(p) = classify_point(&x().pow(5).mul(&y()), 1).unwrap() else {
            unreachable!()
        };
        let lines = lines_through_point(&p, 1).unwrap();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines.iter().filter(|l| l.is_special()).count(), 1);

        // Sextic-curve point x^6: only the special line of x^2.
        let Classification::OnY(p) = classify_point(&x().pow(6), 1).unwrap() else {
            unreachable!()
        };
        let lines = lines_through_point(&p, 1).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].is_special());
        assert!(lines[0].sigma_point().proj_eq(&x().mul(&x())).unwrap());
    }

    #[test]
    fn line_intersection_cases() {
        let l_x2 = LineOnY::from_sigma(&x().mul(&x()), 1).unwrap();
        let l_xy = LineOnY::from_sigma(&x().mul(&y()), 1).unwrap();
        // They meet in [x^5 y].
        let LineIntersection::Point(p) = line_intersect(&l_x2, &l_xy) else {
            panic!("the special and ordinary line through x^2 share a point");
        };
        assert!(p.form().proj_eq(&x().pow(5).mul(&y())).unwrap());
        assert_eq!(p.orbit_tag(), OrbitTag::Scroll);

        // Same line built from a scaled quadratic.
        let l_xy2 = LineOnY::from_sigma(&x().mul(&y()).scale(&c(7)), 1).unwrap();
        assert!(matches!(line_intersect(&l_xy, &l_xy2), LineIntersection::Equal));

        // Disjoint pair.
        let q = x().add(&y()).unwrap().mul(&x().add(&y().scale(&c(2))).unwrap());
        let l_other = LineOnY::from_sigma(&q, 1).unwrap();
        assert!(matches!(
            line_intersect(&l_xy, &l_other),
            LineIntersection::Disjoint
        ));
    }

    #[test]
    fn from_sigma_requires_split_quadratic() {
        let q = BinaryForm::from_coeffs(vec![c(1), c(0), c(1)]); // x^2 + y^2
        assert_eq!(
            LineOnY::from_sigma(&q, 1).unwrap_err(),
            V5Error::RootsNotInField
        );
        assert!(LineOnY::from_sigma(&q, 4).is_ok());
    }

    #[test]
    fn points_on_lines_classify_back() {
        let l = LineOnY::from_sigma(&x().mul(&y()), 4).unwrap();
        // Generic pencil member: open orbit.
        let p = l.point_at(&c(1), &c(-16)).unwrap();
        assert_eq!(p.orbit_tag(), OrbitTag::Open);
        let Classification::OnY(q) = classify_point(p.form(), 4).unwrap() else {
            panic!("pencil member lies on the threefold");
        };
        assert_eq!(q.orbit_tag(), OrbitTag::Open);
        // Pencil endpoints: scroll points.
        let p = l.point_at(&c(1), &c(0)).unwrap();
        assert_eq!(p.orbit_tag(), OrbitTag::Scroll);
        // Special-line members.
        let ls = LineOnY::from_sigma(&x().mul(&x()), 1).unwrap();
        assert_eq!(ls.point_at(&c(1), &c(0)).unwrap().orbit_tag(), OrbitTag::SexticCurve);
        assert_eq!(ls.point_at(&c(3), &c(2)).unwrap().orbit_tag(), OrbitTag::Scroll);
    }

    #[test]
    fn lines_are_equivariant_on_an_example() {
        let g = GroupElt2::from_ints(1, 1, -1, 1).unwrap();
        let Classification::OnY(p) = classify_point(&phi6(), 4).unwrap() else {
            unreachable!()
        };
        let moved = p.transport(&g);
        assert!(moved.verify());
        assert!(moved.form().proj_eq(&act(&g, &phi6())).unwrap());
        let lines_before = lines_through_point(&p, 4).unwrap();
        let lines_after = lines_through_point(&moved, 4).unwrap();
        assert_eq!(lines_before.len(), lines_after.len());
        // Each transported line occurs among the lines of the moved point.
        for l in &lines_before {
            let moved_sigma = act(&g, l.sigma_point());
            assert!(lines_after
                .iter()
                .any(|m| m.sigma_point().proj_eq(&moved_sigma).unwrap()));
        }
    }
}
