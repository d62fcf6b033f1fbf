//! Subgroups of the projective linear group of the line over cyclotomic
//! fields: canonical projective representatives, breadth-first closure of
//! finitely generated subgroups, stabilizer verification for forms and
//! pointed forms, and the automorphism descriptors of the three special
//! quintic-curve pairs.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactfield::{CycNum, FieldError};
use crate::polyalg::{act, act_pointed, BinaryForm, GroupElt2, PolyError};
use crate::quintics::{self, ParamCurve, QuinticsError, ZLabel};

#[derive(Debug, Clone, PartialEq)]
pub enum AutError {
    /// The closure grew past the requested cap.
    CapExceeded(usize),
    /// Pointed closures need determinant-one generators.
    NotDetNormalized,
    Poly(PolyError),
    Field(FieldError),
    Quintics(QuinticsError),
}

impl fmt::Display for AutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutError::CapExceeded(cap) => {
                write!(f, "closure exceeded the cap of {cap} elements")
            }
            AutError::NotDetNormalized => {
                write!(f, "pointed closure requires determinant-one generators")
            }
            AutError::Poly(e) => write!(f, "{e}"),
            AutError::Field(e) => write!(f, "{e}"),
            AutError::Quintics(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AutError {}

impl From<PolyError> for AutError {
    fn from(e: PolyError) -> Self {
        AutError::Poly(e)
    }
}

impl From<FieldError> for AutError {
    fn from(e: FieldError) -> Self {
        AutError::Field(e)
    }
}

impl From<QuinticsError> for AutError {
    fn from(e: QuinticsError) -> Self {
        AutError::Quintics(e)
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    a / x * b
}

/// Element of the projective group of the line: an invertible matrix up to
/// scalar, stored as the representative scaled so its first nonzero entry
/// (row-major) is one, with all entries in one common field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjMat2 {
    entries: [CycNum; 4],
}

impl ProjMat2 {
    pub fn new(g: &GroupElt2) -> ProjMat2 {
        let raw: Vec<CycNum> = g.entries().into_iter().cloned().collect();
        let m = raw.iter().map(CycNum::conductor).fold(1, lcm_u32);
        let mut entries: Vec<CycNum> = raw
            .iter()
            .map(|e| e.embed(m).expect("lcm admits every entry"))
            .collect();
        let pivot = entries
            .iter()
            .find(|e| !e.is_zero())
            .expect("invertible matrix is nonzero")
            .clone();
        let inv = pivot.inv().expect("nonzero entry");
        for e in &mut entries {
            *e = e.mul(&inv);
        }
        let mut it = entries.into_iter();
        ProjMat2 {
            entries: core::array::from_fn(|_| it.next().expect("four entries")),
        }
    }

    pub fn from_entries(
        a: CycNum,
        b: CycNum,
        c: CycNum,
        d: CycNum,
    ) -> Result<ProjMat2, PolyError> {
        Ok(ProjMat2::new(&GroupElt2::new(a, b, c, d)?))
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<ProjMat2, PolyError> {
        Ok(ProjMat2::new(&GroupElt2::from_ints(a, b, c, d)?))
    }

    pub fn identity() -> ProjMat2 {
        ProjMat2::new(&GroupElt2::identity())
    }

    pub fn entries(&self) -> &[CycNum; 4] {
        &self.entries
    }

    pub fn to_group_elt(&self) -> GroupElt2 {
        GroupElt2::new(
            self.entries[0].clone(),
            self.entries[1].clone(),
            self.entries[2].clone(),
            self.entries[3].clone(),
        )
        .expect("representative is invertible")
    }

    pub fn mul(&self, other: &ProjMat2) -> ProjMat2 {
        ProjMat2::new(&self.to_group_elt().mul(&other.to_group_elt()))
    }

    pub fn inverse(&self) -> ProjMat2 {
        ProjMat2::new(&self.to_group_elt().inverse())
    }

    /// The representative re-embedded into the field of conductor `m`.
    pub fn embed(&self, m: u32) -> Result<ProjMat2, FieldError> {
        let e: Result<Vec<CycNum>, FieldError> =
            self.entries.iter().map(|x| x.embed(m)).collect();
        let e = e?;
        let mut it = e.into_iter();
        Ok(ProjMat2 {
            entries: core::array::from_fn(|_| it.next().expect("four entries")),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.entries.iter().map(CycNum::conductor).fold(1, lcm_u32)
    }
}

impl fmt::Display for ProjMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}; {}, {}]",
            self.entries[0], self.entries[1], self.entries[2], self.entries[3]
        )
    }
}

/// Breadth-first closure of the subgroup generated by the given elements,
/// with canonical-representative deduplication. Errors with `CapExceeded`
/// as soon as the element count passes the cap. A finite closure under
/// multiplication that contains the identity is automatically closed under
/// inverses.
pub fn closure(gens: &[ProjMat2], cap: usize) -> Result<Vec<ProjMat2>, AutError> {
    assert!(cap >= 1);
    let m = gens.iter().map(ProjMat2::conductor).fold(1, lcm_u32);
    let gens: Result<Vec<ProjMat2>, FieldError> = gens.iter().map(|g| g.embed(m)).collect();
    let gens = gens?;
    let id = ProjMat2::identity().embed(m)?;
    let mut seen: BTreeSet<ProjMat2> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue: VecDeque<ProjMat2> = VecDeque::new();
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in &gens {
            let h = g.mul(gen);
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(AutError::CapExceeded(cap));
                }
                queue.push_back(h);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn entry_key(g: &GroupElt2, m: u32) -> Result<Vec<CycNum>, FieldError> {
    g.entries().into_iter().map(|e| e.embed(m)).collect()
}

/// Canonical representative of {g, -g}: the one with the smaller entry
/// vector. Negation acts trivially on even-degree forms, so either lift
/// verifies the same pointed stabilizations.
fn sign_canonical(g: GroupElt2, m: u32) -> Result<(GroupElt2, Vec<CycNum>), FieldError> {
    let pos = entry_key(&g, m)?;
    let n = g.neg();
    let neg = entry_key(&n, m)?;
    if pos <= neg {
        Ok((g, pos))
    } else {
        Ok((n, neg))
    }
}

/// Closure of determinant-one generators, working modulo the sign of the
/// lift: the element count is the order of the projective image. Every
/// returned element has determinant one.
pub fn closure_pointed(gens: &[GroupElt2], cap: usize) -> Result<Vec<GroupElt2>, AutError> {
    assert!(cap >= 1);
    if gens.iter().any(|g| !g.is_det_normalized()) {
        return Err(AutError::NotDetNormalized);
    }
    let m = gens
        .iter()
        .flat_map(|g| g.entries().into_iter().map(CycNum::conductor))
        .fold(1, lcm_u32);
    let mut seen: BTreeSet<Vec<CycNum>> = BTreeSet::new();
    let mut out: Vec<GroupElt2> = Vec::new();
    let mut queue: VecDeque<GroupElt2> = VecDeque::new();
    let (id, idk) = sign_canonical(GroupElt2::identity(), m)?;
    seen.insert(idk);
    out.push(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in gens {
            let (h, key) = sign_canonical(g.mul(gen), m)?;
            if seen.insert(key) {
                if seen.len() > cap {
                    return Err(AutError::CapExceeded(cap));
                }
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

/// Whether the transformation fixes the form up to scalar.
pub fn stabilizes_form(g: &ProjMat2, phi: &BinaryForm) -> Result<bool, PolyError> {
    act(&g.to_group_elt(), phi).proj_eq(phi)
}

/// Whether a determinant-one transformation fixes the pointed pair
/// (form, scalar) projectively. The scalar slot is acted on trivially, so
/// for a nonzero scalar this pins the form equality exactly.
pub fn stabilizes_pointed(
    g: &GroupElt2,
    upsilon: &(BinaryForm, CycNum),
) -> Result<bool, AutError> {
    let (form, scalar) = act_pointed(g, &upsilon.0, &upsilon.1).map_err(|e| match e {
        PolyError::NotUnimodular => AutError::NotDetNormalized,
        other => AutError::Poly(other),
    })?;
    if !upsilon.1.is_zero() {
        // lambda is forced to scalar'/scalar.
        let lambda = scalar.div(&upsilon.1).expect("nonzero scalar");
        return Ok(form.sub(&upsilon.0.scale(&lambda))?.is_zero());
    }
    if !scalar.is_zero() {
        return Ok(false);
    }
    Ok(form.proj_eq(&upsilon.0)?)
}

/// Whether the transformation maps the curve onto itself (conclusive
/// sampling; see the quintics module).
pub fn preserves_curve(g: &ProjMat2, z: &ParamCurve) -> Result<bool, QuinticsError> {
    quintics::preserves_curve(&g.to_group_elt(), z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupName {
    Oct,
    Icos,
    U2,
    T2,
    B2,
    Mu4,
    Custom,
}

/// A named subgroup given by generators.
#[derive(Debug, Clone)]
pub struct SubgroupSpec {
    pub name: SubgroupName,
    pub generators: Vec<ProjMat2>,
}

/// Generators of the octahedral stabilizer of the dense-orbit sextic:
/// a fourth-order torus element, the normalized Hadamard involution, and
/// the coordinate swap.
pub fn oct_spec() -> SubgroupSpec {
    let zeta4 = CycNum::zeta(4);
    let one = CycNum::one();
    let gens = vec![
        ProjMat2::from_entries(zeta4, CycNum::zero(), CycNum::zero(), one).unwrap(),
        ProjMat2::from_ints(1, 1, 1, -1).unwrap(),
        ProjMat2::from_ints(0, 1, 1, 0).unwrap(),
    ];
    SubgroupSpec {
        name: SubgroupName::Oct,
        generators: gens,
    }
}

/// The determinant-one icosahedral pair over the fifth cyclotomic field:
/// S = diag(z5^3, z5^2) and the classical symmetric element T with entries
/// (-(z5 - z5^4), z5^2 - z5^3; z5^2 - z5^3, z5 - z5^4) / sqrt 5, where
/// sqrt 5 = z5 - z5^2 - z5^3 + z5^4.
pub fn icos_pointed_generators() -> [GroupElt2; 2] {
    let z = CycNum::zeta(5);
    let zp = |k: u32| z.pow(k as i64).expect("nonnegative");
    let s = GroupElt2::new_unimodular(zp(3), CycNum::zero(), CycNum::zero(), zp(2))
        .expect("determinant one");
    let sqrt5 = zp(1).sub(&zp(2)).sub(&zp(3)).add(&zp(4));
    let inv = sqrt5.inv().expect("sqrt 5 is nonzero");
    let a = zp(1).sub(&zp(4)).mul(&inv);
    let b = zp(2).sub(&zp(3)).mul(&inv);
    let t = GroupElt2::new_unimodular(a.neg(), b.clone(), b, a)
        .expect("determinant one");
    [s, t]
}

pub fn icos_spec() -> SubgroupSpec {
    let [s, t] = icos_pointed_generators();
    SubgroupSpec {
        name: SubgroupName::Icos,
        generators: vec![ProjMat2::new(&s), ProjMat2::new(&t)],
    }
}

/// The pointed icosahedral invariant: (xy(x^10 + 11 x^5 y^5 - y^10), 1).
/// The plus-sign variant of the last coefficient has a dihedral stabilizer
/// of order ten, not the icosahedral group; the minus sign is forced.
pub fn icosahedral_invariant() -> (BinaryForm, CycNum) {
    let mut coeffs = vec![CycNum::zero(); 13];
    coeffs[1] = CycNum::one();
    coeffs[6] = CycNum::from_int(11);
    coeffs[11] = CycNum::from_int(-1);
    (BinaryForm::from_coeffs(coeffs), CycNum::one())
}

/// The fourth-order torus element diag(i, 1).
pub fn tau() -> GroupElt2 {
    GroupElt2::new(CycNum::zeta(4), CycNum::zero(), CycNum::zero(), CycNum::one())
        .expect("invertible")
}

/// Additive one-parameter element (1 u; 0 1).
pub fn u2_element(u: &CycNum) -> GroupElt2 {
    GroupElt2::new(CycNum::one(), u.clone(), CycNum::zero(), CycNum::one())
        .expect("unipotent is invertible")
}

/// Multiplicative one-parameter element diag(t, 1), t nonzero.
pub fn t2_element(t: &CycNum) -> Result<GroupElt2, PolyError> {
    GroupElt2::new(t.clone(), CycNum::zero(), CycNum::zero(), CycNum::one())
}

/// Sampled evidence for one group element.
#[derive(Debug, Clone)]
pub struct GeneratorEvidence {
    pub element: ProjMat2,
    pub preserves: bool,
}

/// Automorphism-group descriptor of a labelled pair (threefold, line):
/// the group named by the classification plus machine-verified evidence on
/// the quintic-curve model.
#[derive(Debug, Clone)]
pub struct AutDescriptor {
    pub label: ZLabel,
    /// Name of the automorphism group.
    pub group: &'static str,
    /// Order of the finite factor when it is verified by closure.
    pub finite_part_order: Option<usize>,
    /// Sampled preserves-curve checks for the listed generators.
    pub sampled: Vec<GeneratorEvidence>,
    /// Symbolic identity: the additive family (1 s; 0 1) preserves the
    /// curve for every s at once.
    pub additive_family: bool,
    /// Symbolic identity: the diagonal family diag(s, 1) preserves the
    /// curve for every s at once.
    pub multiplicative_family: bool,
    /// Statements recorded from the classification that this computation
    /// does not verify.
    pub unverified: Vec<&'static str>,
}

/// Build the descriptor for a labelled curve, verifying every piece of
/// evidence listed in it.
pub fn special_aut_group(label: &ZLabel) -> Result<AutDescriptor, AutError> {
    let z = quintics::build_z(label)?;
    let sample_elements: Vec<GroupElt2> = match label {
        ZLabel::MU => {
            // Borel generators: torus and additive samples.
            let mut v = vec![u2_element(&CycNum::one()), u2_element(&CycNum::from_int(2))];
            v.push(t2_element(&CycNum::from_int(2))?);
            v.push(t2_element(&CycNum::from_int(3))?);
            v
        }
        ZLabel::A => vec![
            tau(),
            u2_element(&CycNum::one()),
            u2_element(&CycNum::from_int(2)),
            u2_element(&CycNum::from_int(3)),
        ],
        ZLabel::M(_) => vec![
            t2_element(&CycNum::from_int(2))?,
            t2_element(&CycNum::from_int(3))?,
            t2_element(&CycNum::from_int(5))?,
        ],
    };
    let mut sampled = Vec::with_capacity(sample_elements.len());
    for g in &sample_elements {
        let preserves = quintics::preserves_curve(g, &z)?;
        sampled.push(GeneratorEvidence {
            element: ProjMat2::new(g),
            preserves,
        });
    }
    let additive_family = quintics::unipotent_family_preserves(&z);
    let multiplicative_family = quintics::diagonal_family_preserves(&z);
    let (group, finite_part_order, unverified): (&str, Option<usize>, Vec<&str>) = match label {
        ZLabel::MU => (
            "PGL2(k)",
            None,
            vec![
                "only the subgroup fixing the distinguished line is visible on \
                 the curve model (the upper-triangular subgroup verified here); \
                 the identification of the full automorphism group is recorded \
                 from the classification",
            ],
        ),
        ZLabel::A => {
            let order = closure(&[ProjMat2::new(&tau())], 16)?.len();
            ("Ga x| mu4", Some(order), Vec::new())
        }
        ZLabel::M(_) => (
            "Gm x| mu2",
            None,
            vec![
                "the extra involution completing the multiplicative family to \
                 the full group is recorded from the classification and is not \
                 verified by this computation",
            ],
        ),
    };
    Ok(AutDescriptor {
        label: label.clone(),
        group,
        finite_part_order,
        sampled,
        additive_family,
        multiplicative_family,
        unverified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::v5::open_orbit_representative;

    fn c(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn octahedral_closure_has_24_elements() {
        // The two-generator set already closes to the full group.
        let zeta4 = CycNum::zeta(4);
        let two_gens = vec![
            ProjMat2::from_entries(zeta4, c(0), c(0), c(1)).unwrap(),
            ProjMat2::from_ints(1, 1, 1, -1).unwrap(),
        ];
        let g = closure(&two_gens, 100).unwrap();
        assert_eq!(g.len(), 24);
        let full = closure(&oct_spec().generators, 100).unwrap();
        assert_eq!(full.len(), 24);
        // Every element stabilizes the dense-orbit sextic.
        let phi = open_orbit_representative();
        for el in &full {
            assert!(stabilizes_form(el, &phi).unwrap());
        }
        // And something outside the group does not.
        let z5 = ProjMat2::from_entries(CycNum::zeta(5), c(0), c(0), c(1)).unwrap();
        assert!(!stabilizes_form(&z5, &phi).unwrap());
    }

    #[test]
    fn closure_is_a_group() {
        let g = closure(&oct_spec().generators, 100).unwrap();
        let set: BTreeSet<ProjMat2> = g.iter().cloned().collect();
        for a in &g {
            assert!(set.contains(&a.inverse().embed(a.conductor()).unwrap()));
            for b in &g {
                assert!(set.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn cyclic_and_unbounded_closures() {
        let z5 = ProjMat2::from_entries(CycNum::zeta(5), c(0), c(0), c(1)).unwrap();
        assert_eq!(closure(&[z5], 100).unwrap().len(), 5);
        let unip = ProjMat2::from_ints(1, 1, 0, 1).unwrap();
        assert_eq!(
            closure(&[unip], 10).unwrap_err(),
            AutError::CapExceeded(10)
        );
    }

    #[test]
    fn icosahedral_closure_stabilizes_the_pointed_invariant() {
        let gens = icos_pointed_generators();
        let upsilon = icosahedral_invariant();
        for g in &gens {
            assert!(g.is_det_normalized());
            assert!(stabilizes_pointed(g, &upsilon).unwrap());
        }
        let elements = closure_pointed(&gens, 200).unwrap();
        assert_eq!(elements.len(), 60);
        for g in &elements {
            assert!(stabilizes_pointed(g, &upsilon).unwrap());
        }
    }

    #[test]
    fn det_one_torus_element_moves_the_pointed_invariant() {
        // diag(z8, z8^-1) has determinant one but scales the middle
        // monomial by a primitive root.
        let z8 = CycNum::zeta(8);
        let g = GroupElt2::new_unimodular(
            z8.clone(),
            c(0),
            c(0),
            z8.inv().unwrap(),
        )
        .unwrap();
        assert!(!stabilizes_pointed(&g, &icosahedral_invariant()).unwrap());
    }

    #[test]
    fn tau_has_order_four() {
        let t = ProjMat2::new(&tau());
        let t2 = t.mul(&t);
        let t4 = t2.mul(&t2);
        assert_eq!(t4, ProjMat2::identity().embed(t4.conductor()).unwrap());
        assert_ne!(t2, ProjMat2::identity().embed(t2.conductor()).unwrap());
        assert_eq!(closure(&[t], 16).unwrap().len(), 4);
    }

    #[test]
    fn descriptors_carry_verified_evidence() {
        let a = special_aut_group(&ZLabel::A).unwrap();
        assert_eq!(a.group, "Ga x| mu4");
        assert_eq!(a.finite_part_order, Some(4));
        assert!(a.sampled.iter().all(|e| e.preserves));
        assert!(a.additive_family);
        assert!(!a.multiplicative_family);
        assert!(a.unverified.is_empty());

        let m = special_aut_group(&ZLabel::M(c(2))).unwrap();
        assert_eq!(m.group, "Gm x| mu2");
        assert!(m.sampled.iter().all(|e| e.preserves));
        assert!(m.multiplicative_family);
        assert!(!m.additive_family);
        assert_eq!(m.unverified.len(), 1);

        let mu = special_aut_group(&ZLabel::MU).unwrap();
        assert_eq!(mu.group, "PGL2(k)");
        assert!(mu.sampled.iter().all(|e| e.preserves));
        assert!(mu.additive_family && mu.multiplicative_family);
        assert_eq!(mu.unverified.len(), 1);
    }

    #[test]
    fn pointed_checks_require_determinant_one() {
        let g = tau();
        assert!(!g.is_det_normalized());
        assert_eq!(
            stabilizes_pointed(&g, &icosahedral_invariant()).unwrap_err(),
            AutError::NotDetNormalized
        );
        assert_eq!(
            closure_pointed(&[g], 10).unwrap_err(),
            AutError::NotDetNormalized
        );
    }

    #[test]
    fn degenerate_labels_are_refused() {
        assert!(matches!(
            special_aut_group(&ZLabel::M(c(0))),
            Err(AutError::Quintics(QuinticsError::DegenerateParameter { .. }))
        ));
    }
}
