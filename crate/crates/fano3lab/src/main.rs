//! Command-line front end for the exact Fano threefold toolkit.
//!
//! Every verb prints a single JSON document `{verb, inputs, result}` on
//! success (exit 0) or `{verb, inputs, error}` on a domain error (exit 1);
//! malformed invocations and unparsable expressions exit 2. The `inputs`
//! field echoes the effective flags, so replaying them reproduces the
//! invocation byte for byte.

mod expr;
mod render;

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use fano3lab_core::autgrp::{
    closure, icos_spec, oct_spec, special_aut_group, stabilizes_form, ProjMat2,
};
use fano3lab_core::exactfield::CycNum;
use fano3lab_core::fanodb::{
    chi_normal_bundle, fermat_cones, index2_partner, lookup_family, mukai_numerology, CurveKind,
};
use fano3lab_core::linalgeom::{
    conic_from_line, pencil_discriminant, pencil_is_line_on_y, pfaffian, recover_w4,
    PfaffianLineDatum, SkewForm6, Subspace,
};
use fano3lab_core::planecurves::{
    intersection_multiplicity, sigma_x_report, Multiplicity, PlaneCurve, PlanePoint,
};
use fano3lab_core::quintics::{
    bisecant_report, build_z, incidence_length, sigma_z, IncidenceLength, ZLabel,
};
use fano3lab_core::v5::{classify_point, line_intersect, lines_through_point, Classification,
    LineIntersection, LineOnY};

#[derive(Parser)]
#[command(name = "fano3lab", version, about = "Exact line and conic calculus on low-degree Fano threefolds")]
struct Cli {
    /// Cyclotomic conductor for root-of-unity searches.
    #[arg(long, global = true, env = "FANO3LAB_CONDUCTOR", default_value_t = 40,
          value_parser = clap::value_parser!(u32).range(1..))]
    conductor: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    Mu,
    A,
    M,
}

impl CaseArg {
    fn as_str(self) -> &'static str {
        match self {
            CaseArg::Mu => "mu",
            CaseArg::A => "a",
            CaseArg::M => "m",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Oct,
    Icos,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Line,
    SmoothConic,
    ReducibleConic,
    NonReducedConic,
}

impl KindArg {
    fn as_str(self) -> &'static str {
        match self {
            KindArg::Line => "line",
            KindArg::SmoothConic => "smooth-conic",
            KindArg::ReducibleConic => "reducible-conic",
            KindArg::NonReducedConic => "non-reduced-conic",
        }
    }

    fn to_kind(self) -> CurveKind {
        match self {
            KindArg::Line => CurveKind::Line,
            KindArg::SmoothConic => CurveKind::SmoothConic,
            KindArg::ReducibleConic => CurveKind::ReducibleConic,
            KindArg::NonReducedConic => CurveKind::NonReducedConic,
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Decide whether a binary sextic lies on the quintic threefold.
    ClassifyPoint {
        #[arg(long)]
        point: String,
    },
    /// List the lines through a point of the threefold.
    LinesThrough {
        #[arg(long)]
        point: String,
    },
    /// Intersect two lines named by their quadratics.
    LineIntersect {
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
    },
    /// Plane quintic swept by the bisecant conics of a distinguished curve.
    SigmaZ {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        u: Option<String>,
    },
    /// Conic components and their meeting pattern for a distinguished curve.
    SigmaX {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        u: Option<String>,
    },
    /// Incidence length of a distinguished curve against a line.
    Incidence {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        line: String,
    },
    /// Distinguished bisecant line report with sampled comparisons.
    Bisecant {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        u: Option<String>,
    },
    /// Local intersection multiplicity of two plane curves at a point.
    Imult {
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
        #[arg(long)]
        at: String,
    },
    /// Enumerate the group generated by 2x2 projective matrices.
    Closure {
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Check that a closure stabilizes a binary form projectively.
    StabilizerCheck {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Automorphism descriptor of a distinguished (threefold, curve) pair.
    Aut {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        u: Option<String>,
    },
    /// Fano classification tables.
    Fano {
        #[command(subcommand)]
        sub: FanoSub,
    },
    /// Euler characteristic of normal bundles of lines and conics.
    ChiNormal {
        #[arg(long)]
        index: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Twist parameter of the splitting type, where applicable.
        #[arg(long, default_value_t = 0)]
        a: u32,
    },
    /// Numerology of the rank-2 bundle embedding for even genus.
    Mukai {
        #[arg(long)]
        genus: u32,
    },
    /// The forty cone vertices on the Fermat quartic double solid base.
    FermatCones,
    /// Pfaffian of an exact antisymmetric 6x6 matrix.
    Pfaffian {
        #[arg(long)]
        matrix: String,
    },
    /// Test whether a pencil of skew forms lies on the Pfaffian cubic.
    PfLineCheck {
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
        /// Five 6x6 matrices separated by semicolons.
        #[arg(long)]
        ambient: String,
    },
    /// Recover the common isotropic four-space of a degenerate pencil.
    PfRecoverW4 {
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
    },
    /// Conic traced in the lines of the four-space of a pencil.
    PfConic {
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
        #[arg(long)]
        ambient: String,
        /// Basis of the four-space as a 4x6 row-major list; recovered from
        /// the pencil when omitted.
        #[arg(long)]
        w4: Option<String>,
    },
    /// Degenerate members of a pencil of quadrics in six variables.
    PencilDisc {
        #[arg(long)]
        q1: String,
        #[arg(long)]
        q2: String,
    },
}

#[derive(Subcommand)]
enum FanoSub {
    /// Look up a deformation family by index and genus/degree.
    Lookup {
        #[arg(long)]
        index: u32,
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Index-2 partner of an even-genus index-1 family.
    Partner {
        #[arg(long)]
        genus: u32,
    },
}

#[derive(Debug)]
enum Failure {
    /// Well-formed request refused by the mathematics; exits 1.
    Domain(String, String),
    /// Malformed expression or flag combination; exits 2.
    Usage(String),
}

/// Domain error from any core error type: the kind is the variant name as
/// it appears in the debug form, the message its display form.
fn dom<E: Debug + Display>(e: E) -> Failure {
    let debug = format!("{e:?}");
    let kind = debug
        .split(|c| c == '(' || c == '{' || c == ' ')
        .next()
        .unwrap_or("Error")
        .to_string();
    Failure::Domain(kind, format!("{e}"))
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type Flags = BTreeMap<String, String>;

fn label_from(case: CaseArg, u: &Option<String>) -> Result<ZLabel, Failure> {
    match (case, u) {
        (CaseArg::M, Some(s)) => Ok(ZLabel::M(expr::parse_scalar(s).map_err(usage)?)),
        (CaseArg::M, None) => Err(usage("--case m requires --u")),
        (_, Some(_)) => Err(usage("--u is only meaningful with --case m")),
        (CaseArg::Mu, None) => Ok(ZLabel::MU),
        (CaseArg::A, None) => Ok(ZLabel::A),
    }
}

fn case_flags(flags: &mut Flags, case: CaseArg, u: &Option<String>) {
    flags.insert("case".into(), case.as_str().into());
    if let Some(s) = u {
        flags.insert("u".into(), s.clone());
    }
}

fn parse_skew(src: &str) -> Result<SkewForm6, Failure> {
    let m = expr::parse_matrix(src, 6, 6).map_err(usage)?;
    SkewForm6::new(m).map_err(dom)
}

fn parse_ambient(src: &str) -> Result<Vec<SkewForm6>, Failure> {
    expr::parse_matrix_list(src)
        .map_err(usage)?
        .into_iter()
        .map(|m| SkewForm6::new(m).map_err(dom))
        .collect()
}

fn generators(
    flags: &mut Flags,
    group: Option<GroupArg>,
    gens: &Option<String>,
) -> Result<Vec<ProjMat2>, Failure> {
    match (group, gens) {
        (Some(_), Some(_)) => Err(usage("--group and --gens are mutually exclusive")),
        (Some(GroupArg::Oct), None) => {
            flags.insert("group".into(), "oct".into());
            Ok(oct_spec().generators)
        }
        (Some(GroupArg::Icos), None) => {
            flags.insert("group".into(), "icos".into());
            Ok(icos_spec().generators)
        }
        (None, Some(src)) => {
            flags.insert("gens".into(), src.clone());
            src.split(';')
                .map(|quad| {
                    let parts: Vec<&str> = quad.split(',').collect();
                    if parts.len() != 4 {
                        return Err(usage("each generator needs four scalar entries"));
                    }
                    let mut s = Vec::with_capacity(4);
                    for p in parts {
                        s.push(expr::parse_scalar(p).map_err(usage)?);
                    }
                    ProjMat2::from_entries(s[0].clone(), s[1].clone(), s[2].clone(), s[3].clone())
                        .map_err(dom)
                })
                .collect()
        }
        (None, None) => Err(usage("one of --group or --gens is required")),
    }
}

fn curve_kind_name(kind: CurveKind) -> &'static str {
    match kind {
        CurveKind::Line => "line",
        CurveKind::SmoothConic => "smooth-conic",
        CurveKind::ReducibleConic => "reducible-conic",
        CurveKind::NonReducedConic => "non-reduced-conic",
    }
}

fn run(verb: &Verb, conductor: u32) -> (String, Flags, Result<Value, Failure>) {
    let mut flags = Flags::new();
    match verb {
        Verb::ClassifyPoint { point } => {
            flags.insert("point".into(), point.clone());
            let out = (|| {
                let phi = expr::parse_binary_form(point).map_err(usage)?;
                match classify_point(&phi, conductor).map_err(dom)? {
                    Classification::OnY(p) => Ok(json!({
                        "on_y": true,
                        "point": render::point_on_y(&p),
                    })),
                    Classification::NotOnY => Ok(json!({ "on_y": false })),
                }
            })();
            ("classify-point".into(), flags, out)
        }
        Verb::LinesThrough { point } => {
            flags.insert("point".into(), point.clone());
            let out = (|| {
                let phi = expr::parse_binary_form(point).map_err(usage)?;
                let p = match classify_point(&phi, conductor).map_err(dom)? {
                    Classification::OnY(p) => p,
                    Classification::NotOnY => {
                        return Err(Failure::Domain(
                            "NotOnY".into(),
                            "the sextic does not lie on the threefold".into(),
                        ))
                    }
                };
                let lines = lines_through_point(&p, conductor).map_err(dom)?;
                Ok(json!({
                    "count": lines.len(),
                    "lines": lines.iter().map(render::line_on_y).collect::<Vec<_>>(),
                }))
            })();
            ("lines-through".into(), flags, out)
        }
        Verb::LineIntersect { l1, l2 } => {
            flags.insert("l1".into(), l1.clone());
            flags.insert("l2".into(), l2.clone());
            let out = (|| {
                let q1 = expr::parse_binary_form(l1).map_err(usage)?;
                let q2 = expr::parse_binary_form(l2).map_err(usage)?;
                let a = LineOnY::from_sigma(&q1, conductor).map_err(dom)?;
                let b = LineOnY::from_sigma(&q2, conductor).map_err(dom)?;
                Ok(match line_intersect(&a, &b) {
                    LineIntersection::Equal => json!({ "relation": "equal" }),
                    LineIntersection::Point(p) => json!({
                        "relation": "point",
                        "point": render::point_on_y(&p),
                    }),
                    LineIntersection::Disjoint => json!({ "relation": "disjoint" }),
                })
            })();
            ("line-intersect".into(), flags, out)
        }
        Verb::SigmaZ { case, u } => {
            case_flags(&mut flags, *case, u);
            let out = (|| {
                let label = label_from(*case, u)?;
                let sz = sigma_z(&label).map_err(dom)?;
                let conics: Vec<Value> = sz
                    .conics
                    .iter()
                    .map(|c| {
                        json!({
                            "parameterization": c.parameterization.iter()
                                .map(render::binary_form).collect::<Vec<_>>(),
                            "curve": render::plane_curve(&c.curve),
                            "multiplicity": c.multiplicity,
                        })
                    })
                    .collect();
                Ok(json!({
                    "label": render::zlabel(&sz.label),
                    "line": render::plane_curve(&sz.line),
                    "line_multiplicity": sz.line_multiplicity,
                    "conics": conics,
                }))
            })();
            ("sigma-z".into(), flags, out)
        }
        Verb::SigmaX { case, u } => {
            case_flags(&mut flags, *case, u);
            let out = (|| {
                let label = label_from(*case, u)?;
                let report = sigma_x_report(&label, conductor).map_err(dom)?;
                let components: Vec<Value> = report
                    .components
                    .iter()
                    .map(|(curve, mult)| {
                        json!({
                            "curve": render::plane_curve(curve),
                            "multiplicity": mult,
                        })
                    })
                    .collect();
                let meetings: Vec<Value> = report
                    .meetings
                    .iter()
                    .map(|m| {
                        json!({
                            "first": m.first,
                            "second": m.second,
                            "points": m.points.iter().map(|(p, mult)| json!({
                                "point": render::plane_point(p),
                                "multiplicity": mult,
                            })).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                Ok(json!({
                    "label": render::zlabel(&report.label),
                    "verdict": report.verdict,
                    "components": components,
                    "meetings": meetings,
                }))
            })();
            ("sigma-x".into(), flags, out)
        }
        Verb::Incidence { case, u, line } => {
            case_flags(&mut flags, *case, u);
            flags.insert("line".into(), line.clone());
            let out = (|| {
                let label = label_from(*case, u)?;
                let z = build_z(&label).map_err(dom)?;
                let q = expr::parse_binary_form(line).map_err(usage)?;
                let l = LineOnY::from_sigma(&q, conductor).map_err(dom)?;
                Ok(match incidence_length(&z, &l) {
                    IncidenceLength::Finite(n) => json!({ "finite": true, "length": n }),
                    IncidenceLength::Infinite => json!({ "finite": false, "length": null }),
                })
            })();
            ("incidence".into(), flags, out)
        }
        Verb::Bisecant { case, u } => {
            case_flags(&mut flags, *case, u);
            let out = (|| {
                let label = label_from(*case, u)?;
                let report = bisecant_report(&label, conductor).map_err(dom)?;
                let samples: Vec<Value> = report
                    .samples
                    .iter()
                    .map(|s| {
                        json!({
                            "component": s.component,
                            "sigma": render::scalar_list(&s.sigma),
                            "line": render::line_on_y(&s.line),
                            "length": s.length,
                        })
                    })
                    .collect();
                Ok(json!({
                    "label": render::zlabel(&report.label),
                    "bisecant": render::line_on_y(&report.bisecant),
                    "length": report.length,
                    "samples": samples,
                }))
            })();
            ("bisecant".into(), flags, out)
        }
        Verb::Imult { c1, c2, at } => {
            flags.insert("c1".into(), c1.clone());
            flags.insert("c2".into(), c2.clone());
            flags.insert("at".into(), at.clone());
            let out = (|| {
                let f = PlaneCurve::new(expr::parse_ternary(c1).map_err(usage)?).map_err(dom)?;
                let g = PlaneCurve::new(expr::parse_ternary(c2).map_err(usage)?).map_err(dom)?;
                let [x, y, z] = expr::parse_point(at).map_err(usage)?;
                let p = PlanePoint::new(x, y, z).map_err(dom)?;
                let Multiplicity::Finite(n) =
                    intersection_multiplicity(&f, &g, &p).map_err(dom)?;
                Ok(json!({ "multiplicity": n }))
            })();
            ("imult".into(), flags, out)
        }
        Verb::Closure { group, gens, cap } => {
            flags.insert("cap".into(), cap.to_string());
            let out = (|| {
                let generators = generators(&mut flags, *group, gens)?;
                let elements = closure(&generators, *cap).map_err(dom)?;
                Ok(json!({
                    "count": elements.len(),
                    "elements": elements.iter().map(render::proj_mat).collect::<Vec<_>>(),
                }))
            })();
            ("closure".into(), flags, out)
        }
        Verb::StabilizerCheck {
            form,
            group,
            gens,
            cap,
        } => {
            flags.insert("form".into(), form.clone());
            flags.insert("cap".into(), cap.to_string());
            let out = (|| {
                let phi = expr::parse_binary_form(form).map_err(usage)?;
                let generators = generators(&mut flags, *group, gens)?;
                let elements = closure(&generators, *cap).map_err(dom)?;
                let mut stabilizing = 0usize;
                for g in &elements {
                    if stabilizes_form(g, &phi).map_err(dom)? {
                        stabilizing += 1;
                    }
                }
                Ok(json!({
                    "closure_count": elements.len(),
                    "stabilizing": stabilizing,
                    "all_stabilize": stabilizing == elements.len(),
                }))
            })();
            ("stabilizer-check".into(), flags, out)
        }
        Verb::Aut { case, u } => {
            case_flags(&mut flags, *case, u);
            let out = (|| {
                let label = label_from(*case, u)?;
                let d = special_aut_group(&label).map_err(dom)?;
                Ok(render::aut_descriptor(&d))
            })();
            ("aut".into(), flags, out)
        }
        Verb::Fano { sub } => match sub {
            FanoSub::Lookup {
                index,
                genus,
                degree,
            } => {
                flags.insert("index".into(), index.to_string());
                let out = (|| {
                    let key = match (index, genus, degree) {
                        (1, Some(g), None) => {
                            flags.insert("genus".into(), g.to_string());
                            *g
                        }
                        (1, _, _) => return Err(usage("index 1 families are keyed by --genus")),
                        (_, None, Some(d)) => {
                            flags.insert("degree".into(), d.to_string());
                            *d
                        }
                        (_, _, _) => {
                            return Err(usage("higher-index families are keyed by --degree"))
                        }
                    };
                    let fam = lookup_family(*index, key).map_err(dom)?;
                    let variants: Vec<Value> = fam
                        .variants
                        .iter()
                        .map(|v| json!({ "description": v.description, "m0": v.m0 }))
                        .collect();
                    Ok(json!({
                        "rho": fam.rho,
                        "index": fam.index,
                        "degree": fam.degree,
                        "genus": fam.genus,
                        "h12": fam.h12,
                        "variants": variants,
                    }))
                })();
                ("fano lookup".into(), flags, out)
            }
            FanoSub::Partner { genus } => {
                flags.insert("genus".into(), genus.to_string());
                let out = (|| {
                    let p = index2_partner(*genus).map_err(dom)?;
                    Ok(json!({
                        "genus": p.genus,
                        "partner_degree": p.partner_degree,
                        "surface": p.surface,
                    }))
                })();
                ("fano partner".into(), flags, out)
            }
        },
        Verb::ChiNormal { index, kind, a } => {
            flags.insert("index".into(), index.to_string());
            flags.insert("kind".into(), kind.as_str().into());
            flags.insert("a".into(), a.to_string());
            let out = (|| {
                let rec = chi_normal_bundle(*index, kind.to_kind(), *a).map_err(dom)?;
                Ok(json!({
                    "index": rec.index,
                    "kind": curve_kind_name(rec.kind),
                    "chi": rec.chi,
                    "splitting": rec.splitting.map(|(p, q)| json!([p, q])),
                    "h0_lower_bound": rec.h0_lower_bound,
                }))
            })();
            ("chi-normal".into(), flags, out)
        }
        Verb::Mukai { genus } => {
            flags.insert("genus".into(), genus.to_string());
            let out = (|| {
                let rec = mukai_numerology(*genus).map_err(dom)?;
                Ok(json!({
                    "genus": rec.genus,
                    "rank": rec.rank,
                    "c1_coeff": rec.c1_coeff,
                    "c2_coeff": rec.c2_coeff,
                    "h0": rec.h0,
                    "gr": [rec.gr.0, rec.gr.1],
                    "codim_in_gr": rec.codim_in_gr,
                    "delta_coeff": rec.delta_coeff,
                }))
            })();
            ("mukai".into(), flags, out)
        }
        Verb::FermatCones => {
            let out = (|| {
                let fc = fermat_cones(conductor).map_err(dom)?;
                let cones: Vec<Value> = fc
                    .cones
                    .iter()
                    .map(|c| {
                        json!({
                            "pair": [c.pair.0, c.pair.1],
                            "omega": render::scalar(&c.omega),
                            "vertex": render::scalar_list(&c.vertex),
                        })
                    })
                    .collect();
                Ok(json!({
                    "count": fc.cones.len(),
                    "aut_order": fc.aut_order,
                    "cones": cones,
                }))
            })();
            ("fermat-cones".into(), flags, out)
        }
        Verb::Pfaffian { matrix } => {
            flags.insert("matrix".into(), matrix.clone());
            let out = (|| {
                let m = parse_skew(matrix)?;
                Ok(json!({ "pfaffian": render::scalar(&pfaffian(&m)) }))
            })();
            ("pfaffian".into(), flags, out)
        }
        Verb::PfLineCheck { a1, a2, ambient } => {
            flags.insert("a1".into(), a1.clone());
            flags.insert("a2".into(), a2.clone());
            flags.insert("ambient".into(), ambient.clone());
            let out = (|| {
                let f1 = parse_skew(a1)?;
                let f2 = parse_skew(a2)?;
                let amb = parse_ambient(ambient)?;
                let datum = PfaffianLineDatum::new([f1, f2], None).map_err(dom)?;
                let check = pencil_is_line_on_y(&datum, &amb).map_err(dom)?;
                Ok(json!({
                    "is_line": check.is_line,
                    "cubic": render::binary_form(&check.cubic),
                }))
            })();
            ("pf-line-check".into(), flags, out)
        }
        Verb::PfRecoverW4 { a1, a2 } => {
            flags.insert("a1".into(), a1.clone());
            flags.insert("a2".into(), a2.clone());
            let out = (|| {
                let f1 = parse_skew(a1)?;
                let f2 = parse_skew(a2)?;
                let w = recover_w4(&[f1, f2]).map_err(dom)?;
                Ok(json!({ "w4": render::subspace(&w) }))
            })();
            ("pf-recover-w4".into(), flags, out)
        }
        Verb::PfConic { a1, a2, ambient, w4 } => {
            flags.insert("a1".into(), a1.clone());
            flags.insert("a2".into(), a2.clone());
            flags.insert("ambient".into(), ambient.clone());
            if let Some(w) = w4 {
                flags.insert("w4".into(), w.clone());
            }
            let out = (|| {
                let f1 = parse_skew(a1)?;
                let f2 = parse_skew(a2)?;
                let amb = parse_ambient(ambient)?;
                let w = match w4 {
                    Some(src) => {
                        let m = expr::parse_matrix(src, 4, 6).map_err(usage)?;
                        let rows: Vec<Vec<CycNum>> = (0..4)
                            .map(|r| (0..6).map(|c| m.at(r, c).clone()).collect())
                            .collect();
                        Subspace::span(&rows)
                    }
                    None => recover_w4(&[f1.clone(), f2.clone()]).map_err(dom)?,
                };
                let datum = PfaffianLineDatum::new([f1, f2], Some(w)).map_err(dom)?;
                let conic = conic_from_line(&datum, &amb).map_err(dom)?;
                Ok(json!({
                    "conic": render::plane_curve(&conic.conic),
                    "conic_type": conic.conic_type.to_string(),
                    "annihilator": conic.annihilator.iter()
                        .map(|v| render::scalar_list(v)).collect::<Vec<_>>(),
                    "w4": render::subspace(datum.w4.as_ref().expect("set above")),
                }))
            })();
            ("pf-conic".into(), flags, out)
        }
        Verb::PencilDisc { q1, q2 } => {
            flags.insert("q1".into(), q1.clone());
            flags.insert("q2".into(), q2.clone());
            let out = (|| {
                let m1 = expr::parse_matrix(q1, 6, 6).map_err(usage)?;
                let m2 = expr::parse_matrix(q2, 6, 6).map_err(usage)?;
                let d = pencil_discriminant(&m1, &m2, conductor).map_err(dom)?;
                let members: Vec<Value> = d
                    .members
                    .iter()
                    .map(|m| {
                        json!({
                            "point": [render::scalar(&m.point.0), render::scalar(&m.point.1)],
                            "multiplicity": m.multiplicity,
                        })
                    })
                    .collect();
                Ok(json!({
                    "form": render::binary_form(&d.form),
                    "squarefree": d.squarefree,
                    "fully_split": d.fully_split,
                    "members": members,
                }))
            })();
            ("pencil-disc".into(), flags, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (verb, flags, outcome) = run(&cli.verb, cli.conductor);
    let format_name = match cli.format {
        Format::Json => "json",
        Format::Text => "text",
    };
    let mut inputs = Map::new();
    inputs.insert("conductor".into(), json!(cli.conductor));
    inputs.insert(
        "flags".into(),
        Value::Object(flags.into_iter().map(|(k, v)| (k, json!(v))).collect()),
    );
    inputs.insert("format".into(), json!(format_name));
    let (envelope, code) = match outcome {
        Ok(result) => (
            json!({ "verb": verb, "inputs": inputs, "result": result }),
            ExitCode::SUCCESS,
        ),
        Err(Failure::Domain(kind, message)) => (
            json!({ "verb": verb, "inputs": inputs,
                    "error": { "kind": kind, "message": message } }),
            ExitCode::from(1),
        ),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => serde_json::to_string(&envelope),
        Format::Text => serde_json::to_string_pretty(&envelope),
    }
    .expect("serialization cannot fail");
    println!("{rendered}");
    code
}

// Unit tests for the pure helpers; end-to-end behavior is exercised by the
// integration tests against the built binary.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_strict_about_u() {
        assert!(label_from(CaseArg::Mu, &None).is_ok());
        assert!(label_from(CaseArg::A, &Some("1".into())).is_err());
        assert!(label_from(CaseArg::M, &None).is_err());
        assert!(matches!(
            label_from(CaseArg::M, &Some("2".into())),
            Ok(ZLabel::M(_))
        ));
    }

    #[test]
    fn domain_error_kinds_use_variant_names() {
        let e = fano3lab_core::fanodb::FanoError::NoSuchFamily { index: 1, key: 13 };
        match dom(e) {
            Failure::Domain(kind, _) => assert_eq!(kind, "NoSuchFamily"),
            Failure::Usage(_) => panic!("expected a domain error"),
        }
    }

    #[test]
    fn generator_parsing() {
        let mut flags = Flags::new();
        let gens = generators(&mut flags, None, &Some("0,1,1,0;i,0,0,1".into())).unwrap();
        assert_eq!(gens.len(), 2);
        assert!(generators(&mut flags, None, &Some("1,0,0".into())).is_err());
        let oct = generators(&mut Flags::new(), Some(GroupArg::Oct), &None).unwrap();
        assert_eq!(oct.len(), oct_spec().generators.len());
    }
}
