//! JSON documents exchanged by the command-line tool.
//!
//! Rationals are written as `"p"` or `"p/q"` strings and infinity as `"inf"`.
//! Subsets are sorted lists of labels. A function document lists only the
//! sets with finite values; every other nonempty set is infinite.

use std::collections::BTreeSet;

use egpkit::conform::FaceLattice;
use egpkit::hopf::{Component, FormalSum};
use egpkit::value::{format_rational, parse_rational};
use egpkit::{ExtValue, GroundSet, Preorder, Rational, RationalPoly, SubmodFn, Subset};
use serde::{Deserialize, Serialize};

use crate::error::{at, CliError, Result};

/// A number as it appears in a document. Plain JSON integers are accepted
/// on input; output always uses strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

impl Scalar {
    pub fn of(r: &Rational) -> Self {
        Scalar::Text(format_rational(r))
    }

    fn ext_value(&self) -> egpkit::Result<ExtValue> {
        match self {
            Scalar::Int(v) => Ok(ExtValue::int(*v)),
            Scalar::Text(s) => s.parse(),
        }
    }

    fn rational(&self) -> egpkit::Result<Rational> {
        match self {
            Scalar::Int(v) => Ok(egpkit::value::int(*v)),
            Scalar::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub set: Vec<String>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FnDoc {
    pub ground: Vec<String>,
    pub finite: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreDoc {
    pub ground: Vec<String>,
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub coeffs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDoc {
    pub preorder: PreDoc,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub faces: Vec<FaceDoc>,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: Scalar,
    pub factors: Vec<Document>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumDoc {
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Submodfn(FnDoc),
    Preorder(PreDoc),
    Polynomial(PolyDoc),
    Facelattice(LatticeDoc),
    Formalsum(SumDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Submodfn(_) => "submodfn",
            Document::Preorder(_) => "preorder",
            Document::Polynomial(_) => "polynomial",
            Document::Facelattice(_) => "facelattice",
            Document::Formalsum(_) => "formalsum",
        }
    }

    /// Parses a document. Syntax errors carry a line and column, structural
    /// errors the JSON path of the offending field.
    pub fn parse(text: &str) -> Result<Document> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| CliError::Document {
                location: format!("line {} column {}", e.line(), e.column()),
                message: e.to_string(),
            })?;
        let kind = value
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| CliError::Document {
                location: "kind".into(),
                message: "missing document kind".into(),
            })?
            .to_string();
        fn payload<T: serde::de::DeserializeOwned>(v: serde_json::Value) -> Result<T> {
            serde_path_to_error::deserialize(v).map_err(|e| CliError::Document {
                location: e.path().to_string(),
                message: e.inner().to_string(),
            })
        }
        Ok(match kind.as_str() {
            "submodfn" => Document::Submodfn(payload(value)?),
            "preorder" => Document::Preorder(payload(value)?),
            "polynomial" => Document::Polynomial(payload(value)?),
            "facelattice" => Document::Facelattice(payload(value)?),
            "formalsum" => Document::Formalsum(payload(value)?),
            other => {
                return Err(CliError::Document {
                    location: "kind".into(),
                    message: format!("unknown document kind `{other}`"),
                })
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

fn ground_of(labels: &[String], location: &str) -> Result<GroundSet> {
    GroundSet::new(labels.iter().cloned()).map_err(at(location))
}

fn subset_of(ground: &GroundSet, labels: &[String], location: &str) -> Result<Subset> {
    let mut mask = Subset::EMPTY;
    for l in labels {
        let i = ground.index_of(l).map_err(at(location))?;
        if mask.contains(i) {
            return Err(CliError::Document {
                location: location.into(),
                message: format!("label `{l}` listed twice"),
            });
        }
        mask = mask.with(i);
    }
    Ok(mask)
}

fn labels(ground: &GroundSet, s: Subset) -> Vec<String> {
    ground.labels_of(s).into_iter().map(String::from).collect()
}

impl FnDoc {
    pub fn of(z: &SubmodFn) -> Self {
        let mut sets = z.finite_sets();
        sets.retain(|s| !s.is_empty());
        sets.sort_by_key(|s| (s.len(), *s));
        let finite = sets
            .into_iter()
            .map(|s| Entry {
                set: labels(z.ground(), s),
                value: Scalar::of(z.value(s).finite().expect("finite set")),
            })
            .collect();
        FnDoc {
            ground: z.ground().labels().to_vec(),
            finite,
        }
    }

    /// The table described by the document, without checking submodularity.
    pub fn to_table(&self) -> Result<SubmodFn> {
        let ground = ground_of(&self.ground, "ground")?;
        let mut table = vec![ExtValue::Infinity; ground.power_len()];
        table[0] = ExtValue::zero();
        let mut seen = BTreeSet::new();
        for (k, e) in self.finite.iter().enumerate() {
            let s = subset_of(&ground, &e.set, &format!("finite[{k}].set"))?;
            let v = e
                .value
                .ext_value()
                .map_err(at(format!("finite[{k}].value")))?;
            if !seen.insert(s) {
                return Err(CliError::Document {
                    location: format!("finite[{k}].set"),
                    message: format!("set {} listed twice", ground.format_subset(s)),
                });
            }
            if s.is_empty() && !v.is_zero() {
                return Err(CliError::Document {
                    location: format!("finite[{k}].value"),
                    message: format!("the empty set has value 0, not {v}"),
                });
            }
            table[s.index()] = v;
        }
        SubmodFn::from_table(ground, table).map_err(at("finite"))
    }

    pub fn to_fn(&self) -> Result<SubmodFn> {
        let z = self.to_table()?;
        if !z.is_submodular() {
            return Err(CliError::Document {
                location: "finite".into(),
                message: "function is not submodular".into(),
            });
        }
        Ok(z)
    }
}

impl PreDoc {
    /// Generating relations: a cycle through each bubble, then one pair per
    /// cover relation between bubbles.
    pub fn of(p: &Preorder) -> Self {
        let g = p.ground();
        let (bubbles, above) = p.bubble_order();
        let mut relations = Vec::new();
        for b in &bubbles {
            let members: Vec<usize> = b.iter().collect();
            if members.len() > 1 {
                for (k, &i) in members.iter().enumerate() {
                    let j = members[(k + 1) % members.len()];
                    relations.push((g.label(i).to_string(), g.label(j).to_string()));
                }
            }
        }
        for (k, b) in bubbles.iter().enumerate() {
            let up = Subset(above[k]);
            for j in up.iter() {
                let is_cover = !up.iter().any(|m| above[m] >> j & 1 == 1);
                if is_cover {
                    let lo = b.first().expect("nonempty bubble");
                    let hi = bubbles[j].first().expect("nonempty bubble");
                    relations.push((g.label(lo).to_string(), g.label(hi).to_string()));
                }
            }
        }
        PreDoc {
            ground: g.labels().to_vec(),
            relations,
        }
    }

    pub fn to_preorder(&self) -> Result<Preorder> {
        let ground = ground_of(&self.ground, "ground")?;
        Preorder::from_relations(ground, &self.relations).map_err(at("relations"))
    }
}

impl PolyDoc {
    pub fn of(p: &RationalPoly) -> Self {
        PolyDoc {
            coeffs: p.coeffs().iter().map(Scalar::of).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<RationalPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.rational().map_err(at(format!("coeffs[{k}]"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalPoly::new(coeffs))
    }
}

impl LatticeDoc {
    pub fn of(lattice: &FaceLattice) -> Self {
        LatticeDoc {
            faces: lattice
                .faces
                .iter()
                .map(|f| FaceDoc {
                    preorder: PreDoc::of(&f.preorder),
                    dim: f.dim,
                })
                .collect(),
            covers: lattice.covers.clone(),
        }
    }

    /// The face preorders, checking that every cover refers to a listed face.
    pub fn preorders(&self) -> Result<Vec<Preorder>> {
        let out = self
            .faces
            .iter()
            .map(|f| f.preorder.to_preorder())
            .collect::<Result<Vec<_>>>()?;
        if let Some(k) = self
            .covers
            .iter()
            .position(|&(i, j)| i >= out.len() || j >= out.len())
        {
            return Err(CliError::Document {
                location: format!("covers[{k}]"),
                message: format!("face index out of range (there are {} faces)", out.len()),
            });
        }
        Ok(out)
    }
}

impl SumDoc {
    pub fn of(sum: &FormalSum) -> Self {
        SumDoc {
            terms: sum
                .terms()
                .map(|(t, c)| TermDoc {
                    coeff: Scalar::of(c),
                    factors: t
                        .iter()
                        .map(|f| match f {
                            Component::Fn(z) => Document::Submodfn(FnDoc::of(z)),
                            Component::Pre(p) => Document::Preorder(PreDoc::of(p)),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_sum(&self) -> Result<FormalSum> {
        let mut out = FormalSum::zero();
        for (k, t) in self.terms.iter().enumerate() {
            let c = t
                .coeff
                .rational()
                .map_err(at(format!("terms[{k}].coeff")))?;
            let factors = t
                .factors
                .iter()
                .enumerate()
                .map(|(m, d)| match d {
                    Document::Submodfn(f) => Ok(Component::Fn(f.to_fn()?)),
                    Document::Preorder(p) => Ok(Component::Pre(p.to_preorder()?)),
                    other => Err(CliError::Document {
                        location: format!("terms[{k}].factors[{m}]"),
                        message: format!("a factor cannot be a {}", other.kind()),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            out.add_term(factors, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use egpkit::corpus;

    #[test]
    fn corpus_functions_round_trip() {
        for s in corpus::samples() {
            let doc = Document::Submodfn(FnDoc::of(&s.z));
            let back = Document::parse(&doc.to_json()).unwrap();
            assert_eq!(back, doc, "{}", s.name);
            let Document::Submodfn(f) = back else {
                unreachable!()
            };
            assert_eq!(f.to_fn().unwrap(), s.z, "{}", s.name);
        }
    }

    #[test]
    fn preorders_round_trip_through_generators() {
        let g = GroundSet::letters(3).unwrap();
        for p in egpkit::preorder::enumerate_preorders(&g, &Default::default()).unwrap() {
            let doc = PreDoc::of(&p);
            assert_eq!(doc.to_preorder().unwrap(), p);
        }
    }

    #[test]
    fn polynomial_accepts_bare_integers() {
        let doc = Document::parse(r#"{"kind":"polynomial","coeffs":[0,"2","-3","1"]}"#).unwrap();
        let Document::Polynomial(p) = doc else {
            panic!("kind")
        };
        let poly = p.to_poly().unwrap();
        assert_eq!(poly.to_string(), "k^3 - 3k^2 + 2k");
        assert_eq!(
            serde_json::to_value(PolyDoc::of(&poly)).unwrap(),
            serde_json::json!({"coeffs": ["0", "2", "-3", "1"]})
        );
    }

    #[test]
    fn empty_set_must_be_zero() {
        let text = r#"{"kind":"submodfn","ground":["a"],"finite":[{"set":[],"value":"1"},{"set":["a"],"value":"1"}]}"#;
        let Document::Submodfn(f) = Document::parse(text).unwrap() else {
            panic!("kind")
        };
        let err = f.to_fn().unwrap_err().to_string();
        assert!(err.starts_with("finite[0].value"), "{err}");
    }

    #[test]
    fn errors_carry_locations() {
        let err = Document::parse("{\"kind\":\"submodfn\",\n\"ground\":[}").unwrap_err();
        assert!(err.to_string().starts_with("line 2"), "{err}");
        let err = Document::parse(
            r#"{"kind":"submodfn","ground":["a"],"finite":[{"set":"a","value":"1"}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().starts_with("finite[0].set"), "{err}");
    }
}
