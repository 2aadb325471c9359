//! Command implementations. Each returns both renderings of its result so
//! the caller only picks one.

use egpkit::conform::{self, enumerate_faces, min_faces};
use egpkit::generators;
use egpkit::hopf::{self, FormalSum};
use egpkit::{invariants, GroundSet, Limits, Preorder, RationalPoly, SubmodFn};
use serde_json::{json, Value};

use crate::doc::{Document, FnDoc, LatticeDoc, PolyDoc, PreDoc, SumDoc};
use crate::error::{CliError, Result};
use crate::{family, inline, oracle};

pub struct Output {
    pub json: Value,
    pub text: String,
    /// False when the command ran but its verdict is negative, e.g. a failed check.
    pub ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            ok: true,
        }
    }

    fn document(doc: Document, text: String) -> Self {
        Output::new(
            serde_json::to_value(doc).expect("documents serialize"),
            text,
        )
    }
}

fn soft_cap(ground: &GroundSet, limits: &Limits) -> Result<()> {
    if ground.len() > limits.max_n {
        return Err(egpkit::Error::CapExceeded {
            op: "input",
            n: ground.len(),
            cap: limits.max_n,
        }
        .into());
    }
    Ok(())
}

fn wrong_kind(doc: &Document, wanted: &str) -> CliError {
    CliError::Document {
        location: "kind".into(),
        message: format!("expected a {wanted} document, got {}", doc.kind()),
    }
}

pub fn function(doc: &Document, limits: &Limits) -> Result<SubmodFn> {
    match doc {
        Document::Submodfn(f) => {
            let z = f.to_fn()?;
            soft_cap(z.ground(), limits)?;
            Ok(z)
        }
        other => Err(wrong_kind(other, "submodfn")),
    }
}

pub fn preorder(doc: &Document, limits: &Limits) -> Result<Preorder> {
    match doc {
        Document::Preorder(p) => {
            let p = p.to_preorder()?;
            soft_cap(p.ground(), limits)?;
            Ok(p)
        }
        other => Err(wrong_kind(other, "preorder")),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check(doc: &Document, limits: &Limits) -> Result<Output> {
    let z = match doc {
        Document::Submodfn(f) => f.to_table()?,
        other => return Err(wrong_kind(other, "submodfn")),
    };
    soft_cap(z.ground(), limits)?;
    let g = z.ground();
    let submodular = z.is_submodular();
    let mut text = format!(
        "ground: {}\nfinite: {}\nsubmodular: {}\n",
        g.labels().join(" "),
        yes(z.is_finite()),
        yes(submodular)
    );
    let mut report = json!({
        "ground": g.labels(),
        "finite": z.is_finite(),
        "submodular": submodular,
    });
    if submodular {
        let blocks = z.decompose();
        let pre = conform::pre_of(&z);
        text.push_str(&format!(
            "modular: {}\ncomponents: {}\npre: {}\n",
            yes(z.is_modular()),
            blocks.format(g),
            pre
        ));
        report["modular"] = json!(z.is_modular());
        report["components"] = blocks
            .blocks()
            .iter()
            .map(|&b| g.labels_of(b))
            .collect::<Vec<_>>()
            .into();
        report["pre"] = serde_json::to_value(Document::Preorder(PreDoc::of(&pre))).unwrap();
    }
    let mut out = Output::new(report, text);
    out.ok = submodular;
    Ok(out)
}

pub fn pre(doc: &Document, limits: &Limits) -> Result<Output> {
    let p = conform::pre_of(&function(doc, limits)?);
    Ok(Output::document(
        Document::Preorder(PreDoc::of(&p)),
        format!("{p}\n"),
    ))
}

pub fn faces(doc: &Document, limits: &Limits) -> Result<Output> {
    let lattice = enumerate_faces(&function(doc, limits)?, limits)?;
    let fv: Vec<String> = lattice.f_vector().iter().map(ToString::to_string).collect();
    let mut text = format!("f-vector: {}\nfaces:\n", fv.join(","));
    for (k, f) in lattice.faces.iter().enumerate() {
        text.push_str(&format!("  {k:>3}  dim {}  {}\n", f.dim, f.preorder));
    }
    text.push_str("covers:\n");
    for (i, j) in &lattice.covers {
        text.push_str(&format!("  {i} < {j}\n"));
    }
    Ok(Output::document(
        Document::Facelattice(LatticeDoc::of(&lattice)),
        text,
    ))
}

pub fn minimal_faces(doc: &Document, limits: &Limits) -> Result<Output> {
    let faces = min_faces(&function(doc, limits)?, limits)?;
    let text: String = faces
        .iter()
        .map(|f| format!("dim {}  {}\n", f.dim, f.preorder))
        .collect();
    let doc = LatticeDoc {
        faces: faces
            .iter()
            .map(|f| crate::doc::FaceDoc {
                preorder: PreDoc::of(&f.preorder),
                dim: f.dim,
            })
            .collect(),
        covers: Vec::new(),
    };
    Ok(Output::document(Document::Facelattice(doc), text))
}

/// The preorder given by a document path or inline relations on `ground`.
pub enum PreorderArg<'a> {
    Document(&'a Document),
    Inline(&'a str),
}

fn preorder_arg(arg: PreorderArg, ground: &GroundSet, limits: &Limits) -> Result<Preorder> {
    match arg {
        PreorderArg::Document(d) => {
            let p = preorder(d, limits)?;
            p.ground().ensure_same(ground)?;
            Ok(p)
        }
        PreorderArg::Inline(text) => inline::preorder_on(ground, text),
    }
}

pub fn closure(doc: &Document, p: PreorderArg, limits: &Limits) -> Result<Output> {
    let z = function(doc, limits)?;
    let p = preorder_arg(p, z.ground(), limits)?;
    let q = conform::closure(&z, &p)?;
    Ok(Output::document(
        Document::Preorder(PreDoc::of(&q)),
        format!("{q}\n"),
    ))
}

pub fn glue(
    doc: &Document,
    split: &str,
    left: PreorderArg,
    right: PreorderArg,
    limits: &Limits,
) -> Result<Output> {
    let z = function(doc, limits)?;
    let s = inline::subset(z.ground(), split)?;
    let p1 = preorder_arg(left, &z.ground().sub(s), limits)?;
    let p2 = preorder_arg(right, &z.ground().sub(z.full().minus(s)), limits)?;
    let g = conform::glue(&z, s, &p1, &p2)?;
    Ok(Output::document(
        Document::Preorder(PreDoc::of(&g)),
        format!("{g}\n"),
    ))
}

fn poly_text(p: &RationalPoly) -> String {
    format!("{p}\n{}\n", p.format_binomial())
}

pub fn chi(doc: &Document, limits: &Limits) -> Result<Output> {
    let p = invariants::chi(&function(doc, limits)?, limits)?;
    Ok(Output::document(
        Document::Polynomial(PolyDoc::of(&p)),
        poly_text(&p),
    ))
}

pub fn ehrhart(doc: &Document, limits: &Limits) -> Result<Output> {
    let p = preorder(doc, limits)?;
    let weak = invariants::ehr(&p);
    let strict = invariants::ehr_star(&p);
    let text = format!(
        "Ehr: {weak}\n     {}\nEhr*: {strict}\n      {}\n",
        weak.format_binomial(),
        strict.format_binomial()
    );
    let json = json!({
        "ehr": Document::Polynomial(PolyDoc::of(&weak)),
        "ehr_star": Document::Polynomial(PolyDoc::of(&strict)),
    });
    Ok(Output::new(json, text))
}

fn sum_output(sum: &FormalSum) -> Output {
    Output::document(Document::Formalsum(SumDoc::of(sum)), format!("{sum}\n"))
}

/// `Δ_S`, or the sum over every `S` when no split is given. Preorder
/// documents use the preorder coproduct.
pub fn coproduct(doc: &Document, split: Option<&str>, limits: &Limits) -> Result<Output> {
    let sum = match doc {
        Document::Preorder(_) => {
            let p = preorder(doc, limits)?;
            match split {
                Some(s) => hopf::preorder_coproduct(&p, inline::subset(p.ground(), s)?),
                None => {
                    let mut out = FormalSum::zero();
                    for s in p.full().subsets() {
                        out.add(&hopf::preorder_coproduct(&p, s));
                    }
                    out
                }
            }
        }
        _ => {
            let z = function(doc, limits)?;
            match split {
                Some(s) => hopf::coproduct_delta(&z, inline::subset(z.ground(), s)?),
                None => hopf::full_coproduct(&z),
            }
        }
    };
    Ok(sum_output(&sum))
}

pub fn delta(doc: &Document, limits: &Limits) -> Result<Output> {
    let sum = match doc {
        Document::Preorder(_) => hopf::preorder_delta(&preorder(doc, limits)?, limits)?,
        _ => hopf::internal_delta(&function(doc, limits)?, limits)?,
    };
    Ok(sum_output(&sum))
}

pub fn phi(doc: &Document, limits: &Limits) -> Result<Output> {
    Ok(sum_output(&hopf::phi(&function(doc, limits)?, limits)?))
}

pub fn bforests(building: &str, limits: &Limits) -> Result<Output> {
    let b = family::building_set(building)?;
    soft_cap(b.ground(), limits)?;
    let forests = generators::b_forests(&b, limits)?;
    let mut text = format!("{} forests\n", forests.len());
    for f in &forests {
        text.push_str(&format!("  {f}\n"));
    }
    let docs: Vec<Document> = forests
        .iter()
        .map(|f| Document::Preorder(PreDoc::of(f)))
        .collect();
    Ok(Output::new(
        json!({"count": forests.len(), "forests": docs}),
        text,
    ))
}

pub fn generate(family_name: &str, params: &str, limits: &Limits) -> Result<Output> {
    if family_name == "corpus" && params.trim() == "list" {
        let names = family::corpus_names();
        return Ok(Output::new(json!(names), names.join("\n") + "\n"));
    }
    let z = family::generate(family_name, params)?;
    soft_cap(z.ground(), limits)?;
    Ok(Output::document(
        Document::Submodfn(FnDoc::of(&z)),
        format!("{z}\n"),
    ))
}

/// Cross-checks one function, or the built-in corpus when none is given.
pub fn oracle(doc: Option<&Document>, limits: &Limits) -> Result<Output> {
    let samples: Vec<(String, SubmodFn)> = match doc {
        Some(d) => vec![("input".to_string(), function(d, limits)?)],
        None => egpkit::corpus::samples()
            .into_iter()
            .map(|s| (s.name, s.z))
            .collect(),
    };
    let mut rows = Vec::new();
    for (name, z) in &samples {
        rows.extend(oracle::run(name, z, limits)?);
    }
    let width = rows.iter().map(|r| r.sample.len()).max().unwrap_or(0);
    let mut text = String::new();
    for r in &rows {
        text.push_str(&format!(
            "{}  {:<width$}  {:<10}  {}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.sample,
            r.check,
            r.detail
        ));
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    text.push_str(&format!("{} checks, {failed} failed\n", rows.len()));
    let mut out = Output::new(serde_json::to_value(&rows).unwrap(), text);
    out.ok = failed == 0;
    Ok(out)
}
