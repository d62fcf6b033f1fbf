//! Canonical JSON views of the core types.
//!
//! Scalars render as `{conductor, coords: [[num, den], ...]}` with the
//! numerator and denominator as decimal strings (arbitrary precision);
//! binary forms as coefficient arrays in the `x^(d-k) y^k` order; ternary
//! polynomials as maps from comma-joined exponent vectors to scalars;
//! matrices as row-major scalar lists. All maps serialize with sorted keys,
//! so identical data renders byte-identically.

use serde_json::{json, Map, Value};

use fano3lab_core::autgrp::{AutDescriptor, ProjMat2};
use fano3lab_core::exactfield::CycNum;
use fano3lab_core::linalgeom::Subspace;
use fano3lab_core::planecurves::{PlaneCurve, PlanePoint};
use fano3lab_core::polyalg::{BinaryForm, MultiPoly};
use fano3lab_core::quintics::ZLabel;
use fano3lab_core::v5::{LineOnY, OrbitTag, PointOnY, Witness};

pub fn scalar(x: &CycNum) -> Value {
    let coords: Vec<Value> = x
        .coords()
        .iter()
        .map(|r| json!([r.numer().to_string(), r.denom().to_string()]))
        .collect();
    json!({ "conductor": x.conductor(), "coords": coords })
}

pub fn scalar_list<'a>(xs: impl IntoIterator<Item = &'a CycNum>) -> Value {
    Value::Array(xs.into_iter().map(scalar).collect())
}

pub fn binary_form(f: &BinaryForm) -> Value {
    json!({ "degree": f.degree(), "coeffs": scalar_list(f.coeffs()) })
}

pub fn multipoly(p: &MultiPoly) -> Value {
    let mut terms = Map::new();
    for (e, c) in p.terms() {
        let key = e
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",");
        terms.insert(key, scalar(c));
    }
    json!({ "vars": p.vars(), "terms": Value::Object(terms) })
}

pub fn plane_curve(c: &PlaneCurve) -> Value {
    multipoly(c.poly())
}

pub fn plane_point(p: &PlanePoint) -> Value {
    scalar_list(p.coords())
}

pub fn subspace(s: &Subspace) -> Value {
    let basis: Vec<Value> = s
        .basis_rows()
        .iter()
        .map(|row| scalar_list(row))
        .collect();
    json!({ "dim": s.dim(), "basis": basis })
}

pub fn proj_mat(g: &ProjMat2) -> Value {
    scalar_list(g.entries())
}

pub fn orbit_tag(t: OrbitTag) -> Value {
    Value::String(
        match t {
            OrbitTag::Open => "open",
            OrbitTag::Scroll => "scroll",
            OrbitTag::SexticCurve => "sextic-curve",
        }
        .into(),
    )
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Open { f, g, s1, s2 } => json!({
            "kind": "open",
            "f": binary_form(f),
            "g": binary_form(g),
            "s1": scalar(s1),
            "s2": scalar(s2),
        }),
        Witness::Scroll { f, g } => json!({
            "kind": "scroll",
            "f": binary_form(f),
            "g": binary_form(g),
        }),
        Witness::Sextic { f } => json!({
            "kind": "sextic",
            "f": binary_form(f),
        }),
    }
}

pub fn point_on_y(p: &PointOnY) -> Value {
    json!({
        "form": binary_form(p.form()),
        "orbit": orbit_tag(p.orbit_tag()),
        "on_tangential_scroll": p.on_tangential_scroll(),
        "witness": witness(p.witness()),
    })
}

pub fn line_on_y(l: &LineOnY) -> Value {
    json!({
        "kind": if l.is_special() { "special" } else { "ordinary" },
        "sigma_point": binary_form(l.sigma_point()),
        "span": [binary_form(&l.span()[0]), binary_form(&l.span()[1])],
    })
}

pub fn zlabel(label: &ZLabel) -> Value {
    match label {
        ZLabel::MU => json!({ "case": "mu" }),
        ZLabel::A => json!({ "case": "a" }),
        ZLabel::M(u) => json!({ "case": "m", "u": scalar(u) }),
    }
}

pub fn aut_descriptor(d: &AutDescriptor) -> Value {
    let sampled: Vec<Value> = d
        .sampled
        .iter()
        .map(|e| json!({ "element": proj_mat(&e.element), "preserves": e.preserves }))
        .collect();
    json!({
        "label": zlabel(&d.label),
        "group": d.group,
        "finite_part_order": d.finite_part_order,
        "sampled": sampled,
        "additive_family": d.additive_family,
        "multiplicative_family": d.multiplicative_family,
        "unverified": d.unverified,
    })
}
