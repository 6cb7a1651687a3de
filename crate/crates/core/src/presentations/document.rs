//! Input documents, in TOML for hand-writing or JSON for interchange.
//!
//! ```toml
//! version = 1
//! kind = "sphere_quotient"      # or "wps_circle", "raw_atlas"
//! n_plus_1 = 2
//! cyclic_orders = [3]
//! weight_matrix = [[1, 0]]
//!
//! [[euler_oracle]]              # optional
//! labels = ["1", "1", "1"]
//! monomial = "1"
//! value = "1/3"
//! ```
//!
//! Every fraction is a `"p/q"` string.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::{fmt_rational, parse_rational};
use crate::groups::{GroupSpec, Triple};
use crate::model_spaces::{CustomModel, ModelSpace};

use super::{
    parse_label, sphere_quotient_atlas, wps_circle_atlas, EulerOracle, LabelStyle, MissingPolicy,
    MultiSectorSpec, OracleEntry, RotationData, SectorAtlas, SectorSpec,
    SphereQuotientPresentation, WpsCirclePresentation,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Toml,
    Json,
}

impl InputFormat {
    /// By extension, falling back to sniffing the first non-blank character.
    pub fn detect(path: Option<&Path>, text: &str) -> InputFormat {
        match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("json") => InputFormat::Json,
            Some("toml") => InputFormat::Toml,
            _ => {
                if text.trim_start().starts_with('{') {
                    InputFormat::Json
                } else {
                    InputFormat::Toml
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub body: Body,
    #[serde(flatten)]
    pub oracle: OracleSection,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    SphereQuotient {
        n_plus_1: usize,
        cyclic_orders: Vec<u64>,
        weight_matrix: Vec<Vec<i64>>,
    },
    WpsCircle {
        weights: Vec<u64>,
    },
    RawAtlas(RawAtlas),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OracleSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_normalization: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub missing_policy: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub euler_oracle: Vec<RawOracleEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawOracleEntry {
    pub labels: [String; 3],
    pub monomial: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawAtlas {
    pub cyclic_orders: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_style: Option<String>,
    pub ambient_dim: u32,
    pub sectors: Vec<RawSector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub multisectors: Vec<RawMultiSector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub models: Vec<RawCustomModel>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawSector {
    pub label: String,
    pub model: String,
    pub iota: String,
    pub weight: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<RawRotation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawRotation {
    pub exponents: Vec<u64>,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawMultiSector {
    pub labels: [String; 3],
    pub model: String,
    pub weight: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_e: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawCustomModel {
    pub name: String,
    pub generators: Vec<RawGenerator>,
    #[serde(default)]
    pub products: Vec<RawProduct>,
    pub top_integral: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawGenerator {
    pub label: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawProduct {
    pub left: String,
    pub right: String,
    pub result: Vec<[String; 2]>,
}

/// Oracle-only file accepted by `--oracle`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OracleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    #[serde(flatten)]
    pub oracle: OracleSection,
}

fn parse_text<T: for<'de> Deserialize<'de>>(text: &str, format: InputFormat) -> Result<T> {
    match format {
        InputFormat::Json => serde_json::from_str(text).map_err(|e| {
            Error::schema(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        }),
        InputFormat::Toml => toml::from_str(text).map_err(|e| {
            let location = e
                .span()
                .map(|s| {
                    let line = text[..s.start.min(text.len())].matches('\n').count() + 1;
                    format!("line {line}")
                })
                .unwrap_or_else(|| "document".into());
            Error::schema(location, e.message().to_string())
        }),
    }
}

pub fn load_document(text: &str, format: InputFormat) -> Result<Document> {
    let doc: Document = parse_text(text, format)?;
    if doc.version != SCHEMA_VERSION {
        return Err(Error::schema(
            "version",
            format!(
                "unsupported schema version {}, expected {SCHEMA_VERSION}",
                doc.version
            ),
        ));
    }
    Ok(doc)
}

/// Parses and validates a document into an atlas.
pub fn load_atlas(text: &str, format: InputFormat) -> Result<SectorAtlas> {
    load_document(text, format)?.to_atlas()
}

/// Parses an oracle-only file. Labels are resolved later against an atlas.
pub fn load_oracle(text: &str, format: InputFormat) -> Result<EulerOracle> {
    let file: OracleFile = parse_text(text, format)?;
    if let Some(v) = file.version {
        if v != SCHEMA_VERSION {
            return Err(Error::schema(
                "version",
                format!("unsupported schema version {v}"),
            ));
        }
    }
    file.oracle.to_oracle()
}

impl OracleSection {
    pub fn is_empty(&self) -> bool {
        self.euler_oracle.is_empty()
            && self.oracle_normalization.is_none()
            && self.missing_policy.is_none()
    }

    pub fn to_oracle(&self) -> Result<EulerOracle> {
        let missing = match self.missing_policy.as_deref() {
            None | Some("report") => MissingPolicy::Report,
            Some("zero") => MissingPolicy::Zero,
            Some(other) => {
                return Err(Error::schema(
                    "missing_policy",
                    format!("expected \"report\" or \"zero\", got {other:?}"),
                ))
            }
        };
        let entries = self
            .euler_oracle
            .iter()
            .enumerate()
            .map(|(i, e)| {
                Ok(OracleEntry {
                    labels: e.labels.clone(),
                    monomial: e.monomial.clone(),
                    value: parse_rational(&e.value).map_err(|err| {
                        Error::schema(format!("euler_oracle[{i}].value"), err.to_string())
                    })?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EulerOracle {
            entries,
            normalization: self.oracle_normalization.clone(),
            missing,
        })
    }

    pub fn from_oracle(oracle: &EulerOracle) -> OracleSection {
        OracleSection {
            oracle_normalization: oracle.normalization.clone(),
            missing_policy: match oracle.missing {
                MissingPolicy::Report => None,
                MissingPolicy::Zero => Some("zero".into()),
            },
            euler_oracle: oracle
                .entries
                .iter()
                .map(|e| RawOracleEntry {
                    labels: e.labels.clone(),
                    monomial: e.monomial.clone(),
                    value: fmt_rational(&e.value),
                })
                .collect(),
        }
    }
}

fn rational_at(text: &str, location: String) -> Result<crate::exact_math::Rational> {
    parse_rational(text).map_err(|e| Error::schema(location, e.to_string()))
}

impl Document {
    pub fn to_atlas(&self) -> Result<SectorAtlas> {
        match &self.body {
            Body::SphereQuotient {
                n_plus_1,
                cyclic_orders,
                weight_matrix,
            } => {
                let group = GroupSpec::new(cyclic_orders.clone())?;
                let mut p =
                    SphereQuotientPresentation::new(*n_plus_1, group, weight_matrix.clone())?;
                p.name = self.name.clone();
                sphere_quotient_atlas(&p)
            }
            Body::WpsCircle { weights } => {
                let mut p = WpsCirclePresentation::new(weights.clone())?;
                p.name = self.name.clone();
                wps_circle_atlas(&p)
            }
            Body::RawAtlas(raw) => {
                raw.to_atlas(self.name.clone().unwrap_or_else(|| "raw atlas".into()))
            }
        }
    }

    pub fn oracle(&self) -> Result<EulerOracle> {
        self.oracle.to_oracle()
    }

    /// Raw-atlas document reproducing `atlas`.
    pub fn raw_from_atlas(atlas: &SectorAtlas) -> Document {
        let name = |g| atlas.label_name(g);
        let sectors = atlas
            .sectors()
            .iter()
            .map(|s| RawSector {
                label: name(&s.label),
                model: s.model.to_string(),
                iota: fmt_rational(&s.iota),
                weight: fmt_rational(&s.weight),
                rotation: s.rotation.as_ref().map(|r| RawRotation {
                    exponents: r.exponents.clone(),
                    order: r.order,
                }),
            })
            .collect();
        let multisectors = atlas
            .multisectors()
            .iter()
            .map(|m| RawMultiSector {
                labels: m.labels.as_array().map(name),
                model: m.model.to_string(),
                weight: fmt_rational(&m.weight),
                rank_e: Some(m.rank_e as i64),
                genus: Some(fmt_rational(&m.genus)),
            })
            .collect();
        let mut models: Vec<RawCustomModel> = Vec::new();
        for model in atlas
            .sectors()
            .iter()
            .map(|s| &s.model)
            .chain(atlas.multisectors().iter().map(|m| &m.model))
        {
            if let ModelSpace::Custom(c) = model {
                if models.iter().all(|m| m.name != c.name) {
                    models.push(RawCustomModel::from_custom(c));
                }
            }
        }
        Document {
            version: SCHEMA_VERSION,
            name: Some(atlas.name().to_string()),
            body: Body::RawAtlas(RawAtlas {
                cyclic_orders: atlas.group().cyclic_orders().to_vec(),
                label_style: match atlas.label_style() {
                    LabelStyle::Residues => None,
                    LabelStyle::Fraction => Some("fraction".into()),
                },
                ambient_dim: atlas.ambient_dim(),
                sectors,
                multisectors,
                models,
            }),
            oracle: OracleSection::default(),
        }
    }

    pub fn to_text(&self, format: InputFormat) -> String {
        match format {
            InputFormat::Json => serde_json::to_string_pretty(self).expect("serializable"),
            InputFormat::Toml => toml::to_string(self).expect("serializable"),
        }
    }
}

impl RawCustomModel {
    fn from_custom(c: &CustomModel) -> Self {
        RawCustomModel {
            name: c.name.clone(),
            generators: c
                .generators
                .iter()
                .map(|(l, d)| RawGenerator {
                    label: l.clone(),
                    degree: *d,
                })
                .collect(),
            products: c
                .products
                .iter()
                .map(|((l, r), res)| RawProduct {
                    left: l.clone(),
                    right: r.clone(),
                    result: res
                        .iter()
                        .map(|(lab, q)| [lab.clone(), fmt_rational(q)])
                        .collect(),
                })
                .collect(),
            top_integral: fmt_rational(&c.top_integral),
        }
    }

    fn to_model(&self, pos: usize) -> Result<ModelSpace> {
        let location = format!("models[{pos}] {}", self.name);
        let mut generators: Vec<(String, u32)> = Vec::new();
        for g in &self.generators {
            if generators.iter().any(|(l, _)| *l == g.label) {
                return Err(Error::invariant(
                    &location,
                    format!("duplicate generator {}", g.label),
                ));
            }
            generators.push((g.label.clone(), g.degree));
        }
        let units: Vec<_> = generators.iter().filter(|(_, d)| *d == 0).collect();
        if units.len() != 1 || units[0].0 != "1" {
            return Err(Error::invariant(
                &location,
                "exactly one degree-0 generator, labelled \"1\", is required",
            ));
        }
        let top = generators.iter().map(|g| g.1).max().unwrap_or(0);
        if generators.iter().filter(|g| g.1 == top).count() != 1 {
            return Err(Error::invariant(
                &location,
                "top degree must be one-dimensional",
            ));
        }
        let mut products = BTreeMap::new();
        for (k, p) in self.products.iter().enumerate() {
            for lab in [&p.left, &p.right] {
                if generators.iter().all(|(l, _)| l != lab) {
                    return Err(Error::DanglingLabel {
                        location: format!("{location} products[{k}]"),
                        label: lab.clone(),
                    });
                }
            }
            let mut terms = Vec::new();
            for [lab, q] in &p.result {
                if generators.iter().all(|(l, _)| l != lab) {
                    return Err(Error::DanglingLabel {
                        location: format!("{location} products[{k}]"),
                        label: lab.clone(),
                    });
                }
                terms.push((
                    lab.clone(),
                    rational_at(q, format!("{location} products[{k}]"))?,
                ));
            }
            products.insert((p.left.clone(), p.right.clone()), terms);
        }
        let top_integral = rational_at(&self.top_integral, format!("{location} top_integral"))?;
        if num::Zero::is_zero(&top_integral) {
            return Err(Error::invariant(&location, "top integral must be nonzero"));
        }
        let model = ModelSpace::Custom(Box::new(CustomModel {
            name: self.name.clone(),
            generators,
            products,
            top_integral,
        }));
        model
            .ring_table()
            .check_ring_axioms()
            .map_err(|e| Error::invariant(&location, e))?;
        Ok(model)
    }
}

impl RawAtlas {
    pub fn to_atlas(&self, name: String) -> Result<SectorAtlas> {
        let group = GroupSpec::new(self.cyclic_orders.clone())
            .map_err(|e| Error::schema("cyclic_orders", e.to_string()))?;
        let style = match self.label_style.as_deref() {
            None | Some("residues") => LabelStyle::Residues,
            Some("fraction") => LabelStyle::Fraction,
            Some(other) => {
                return Err(Error::schema(
                    "label_style",
                    format!("expected \"residues\" or \"fraction\", got {other:?}"),
                ))
            }
        };
        if style == LabelStyle::Fraction && group.cyclic_orders().len() != 1 {
            return Err(Error::schema(
                "label_style",
                "fraction labels need a single cyclic order",
            ));
        }
        let mut custom = BTreeMap::new();
        for (i, m) in self.models.iter().enumerate() {
            custom.insert(m.name.clone(), m.to_model(i)?);
        }
        let model_at = |text: &str, location: String| {
            ModelSpace::parse(text, &custom).map_err(|e| Error::schema(location, e.to_string()))
        };
        let label_at = |text: &str, location: String| {
            parse_label(&group, &style, text).map_err(|e| Error::schema(location, e.to_string()))
        };

        let mut sectors = Vec::with_capacity(self.sectors.len());
        for (i, s) in self.sectors.iter().enumerate() {
            let at = |field: &str| format!("sectors[{i}].{field}");
            sectors.push(SectorSpec {
                label: label_at(&s.label, at("label"))?,
                model: model_at(&s.model, at("model"))?,
                iota: rational_at(&s.iota, at("iota"))?,
                weight: rational_at(&s.weight, at("weight"))?,
                rotation: s.rotation.as_ref().map(|r| RotationData {
                    exponents: r.exponents.clone(),
                    order: r.order,
                }),
            });
        }
        let mut multisectors = Vec::with_capacity(self.multisectors.len());
        let mut declared = Vec::new();
        for (i, m) in self.multisectors.iter().enumerate() {
            let at = |field: &str| format!("multisectors[{i}].{field}");
            let [a, b, c] = &m.labels;
            let labels = Triple {
                g1: label_at(a, at("labels"))?,
                g2: label_at(b, at("labels"))?,
                g3: label_at(c, at("labels"))?,
            };
            let genus = match &m.genus {
                Some(text) => Some(rational_at(text, at("genus"))?),
                None => None,
            };
            declared.push((i, labels.clone(), m.rank_e, genus));
            multisectors.push(MultiSectorSpec {
                labels,
                model: model_at(&m.model, at("model"))?,
                weight: rational_at(&m.weight, at("weight"))?,
            });
        }
        let atlas =
            SectorAtlas::build(name, group, style, self.ambient_dim, sectors, multisectors)?;
        for (i, labels, rank, genus) in declared {
            let m = atlas.multisector(atlas.multisector_index(&labels).expect("built"));
            if let Some(rank) = rank {
                if rank < 0 || rank % 2 != 0 {
                    return Err(Error::invariant(
                        format!("multisectors[{i}].rank_e"),
                        format!("rank {rank} is not even and non-negative"),
                    ));
                }
                if rank != m.rank_e as i64 {
                    return Err(Error::invariant(
                        format!("multisectors[{i}].rank_e"),
                        format!("declared rank {rank}, computed {}", m.rank_e),
                    ));
                }
            }
            if let Some(g) = genus {
                if !g.is_integer() || num::Signed::is_negative(&g) {
                    return Err(Error::invariant(
                        format!("multisectors[{i}].genus"),
                        format!("genus {g} is not a non-negative integer"),
                    ));
                }
                if g != m.genus {
                    return Err(Error::invariant(
                        format!("multisectors[{i}].genus"),
                        format!("declared genus {g}, computed {}", m.genus),
                    ));
                }
            }
        }
        Ok(atlas)
    }
}
