//! Normalized combinatorial descriptions of almost contact orbifolds.
//!
//! A [`SectorAtlas`] lists the twisted sectors (one per realized group label)
//! and the 3-multisectors of an orbifold, each with a catalog model space,
//! degree shifting number and orbifold integration weight. Atlases come from
//! two built-in families, quotients of odd spheres by diagonal unitary actions
//! of finite abelian groups and products of weighted projective spaces with a
//! circle, or from a raw document (see [`document`]).

pub mod document;

use std::collections::BTreeMap;

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{frac, parse_rational, Rational};
use crate::groups::{GroupElement, GroupSpec, Triple};
use crate::model_spaces::{ModelSpace, RestrictionMap, RingTable};
use crate::sectors::{annotate_multisectors, degree_shift};

pub use document::{load_atlas, load_document, load_oracle, Document, InputFormat};

/// How group labels are rendered.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LabelStyle {
    /// Residue tuples, `1` or `(1,0)`.
    Residues,
    /// Elements of `Z_L` shown as fractions `l/L` in `[0, 1)`.
    Fraction,
}

/// Rotation exponents `m_{i,g}` of an element of order `m_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationData {
    pub exponents: Vec<u64>,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub label: GroupElement,
    pub model: ModelSpace,
    pub iota: Rational,
    pub weight: Rational,
    pub dim: u32,
    pub rotation: Option<RotationData>,
    pub ring: RingTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSector {
    pub labels: Triple,
    pub sector_indices: [usize; 3],
    pub model: ModelSpace,
    pub weight: Rational,
    pub k_order: u64,
    pub branch_orders: [u64; 3],
    pub genus: Rational,
    pub rank_e: u32,
    /// Maps from the three single-sector models onto this model; set on annotation.
    pub restrictions: Option<[RestrictionMap; 3]>,
    pub ring: RingTable,
}

impl MultiSector {
    pub fn dim(&self) -> u32 {
        self.model.real_dim()
    }

    pub fn restriction(&self, j: usize) -> &RestrictionMap {
        &self.restrictions.as_ref().expect("annotated multisector")[j]
    }
}

/// A sector before validation.
#[derive(Clone, Debug)]
pub struct SectorSpec {
    pub label: GroupElement,
    pub model: ModelSpace,
    pub iota: Rational,
    pub weight: Rational,
    pub rotation: Option<RotationData>,
}

/// A multisector before annotation.
#[derive(Clone, Debug)]
pub struct MultiSectorSpec {
    pub labels: Triple,
    pub model: ModelSpace,
    pub weight: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorAtlas {
    name: String,
    group: GroupSpec,
    label_style: LabelStyle,
    ambient_dim: u32,
    sectors: Vec<Sector>,
    multisectors: Vec<MultiSector>,
    sector_index: BTreeMap<GroupElement, usize>,
    multi_index: BTreeMap<Triple, usize>,
}

impl SectorAtlas {
    /// Validates the sector list, completes the multisectors containing the
    /// identity label, and annotates every multisector.
    pub fn build(
        name: String,
        group: GroupSpec,
        label_style: LabelStyle,
        ambient_dim: u32,
        sectors: Vec<SectorSpec>,
        multisectors: Vec<MultiSectorSpec>,
    ) -> Result<SectorAtlas> {
        if ambient_dim % 2 == 0 {
            return Err(Error::invariant(
                "ambient_dim",
                format!("ambient dimension {ambient_dim} is not odd"),
            ));
        }
        if label_style == LabelStyle::Fraction && group.cyclic_orders().len() != 1 {
            return Err(Error::invariant(
                "label_style",
                "fraction labels need a single cyclic factor",
            ));
        }
        if sectors.is_empty() {
            return Err(Error::invariant(
                "sectors",
                "the untwisted sector is mandatory",
            ));
        }
        let mut sorted = sectors;
        sorted.sort_by(|a, b| a.label.cmp(&b.label));

        let mut atlas = SectorAtlas {
            name,
            group,
            label_style,
            ambient_dim,
            sectors: Vec::new(),
            multisectors: Vec::new(),
            sector_index: BTreeMap::new(),
            multi_index: BTreeMap::new(),
        };

        for spec in sorted {
            let location = format!("sectors[{}]", atlas.label_name(&spec.label));
            atlas
                .group
                .validate(&spec.label)
                .map_err(|e| Error::invariant(&location, e.to_string()))?;
            if atlas.sector_index.contains_key(&spec.label) {
                return Err(Error::invariant(&location, "duplicate sector label"));
            }
            let is_identity = atlas.group.is_identity(&spec.label);
            if spec.iota.is_negative() {
                return Err(Error::invariant(&location, "negative degree shift"));
            }
            if is_identity != spec.iota.is_zero() {
                return Err(Error::invariant(
                    &location,
                    "degree shift must vanish exactly on the identity label",
                ));
            }
            if !spec.weight.is_positive() {
                return Err(Error::invariant(
                    &location,
                    "integration weight must be positive",
                ));
            }
            let dim = spec.model.real_dim();
            if is_identity && dim != ambient_dim {
                return Err(Error::invariant(
                    &location,
                    format!("untwisted model has dimension {dim}, expected {ambient_dim}"),
                ));
            }
            if dim > ambient_dim {
                return Err(Error::invariant(
                    &location,
                    "sector exceeds ambient dimension",
                ));
            }
            if let Some(rot) = &spec.rotation {
                let from_exponents = degree_shift(&rot.exponents, rot.order)
                    .map_err(|e| Error::invariant(&location, e.to_string()))?;
                if from_exponents != spec.iota {
                    return Err(Error::invariant(
                        &location,
                        format!(
                            "rotation exponents give shift {from_exponents}, not {}",
                            spec.iota
                        ),
                    ));
                }
            }
            let ring = spec.model.ring_table();
            atlas
                .sector_index
                .insert(spec.label.clone(), atlas.sectors.len());
            atlas.sectors.push(Sector {
                label: spec.label,
                dim,
                ring,
                model: spec.model,
                iota: spec.iota,
                weight: spec.weight,
                rotation: spec.rotation,
            });
        }
        let identity = atlas.group.identity();
        if !atlas.sector_index.contains_key(&identity) {
            return Err(Error::invariant(
                "sectors",
                "the untwisted sector is mandatory",
            ));
        }

        let mut specs: BTreeMap<Triple, MultiSectorSpec> = BTreeMap::new();
        for (pos, m) in multisectors.into_iter().enumerate() {
            let location = format!("multisectors[{pos}]");
            let mut indices = [0usize; 3];
            for (j, g) in m.labels.as_array().into_iter().enumerate() {
                atlas
                    .group
                    .validate(g)
                    .map_err(|e| Error::invariant(&location, e.to_string()))?;
                indices[j] = *atlas
                    .sector_index
                    .get(g)
                    .ok_or_else(|| Error::DanglingLabel {
                        location: location.clone(),
                        label: atlas.label_name(g),
                    })?;
            }
            let prod = atlas.group.multiply(&m.labels.g1, &m.labels.g2)?;
            let prod = atlas.group.multiply(&prod, &m.labels.g3)?;
            if !atlas.group.is_identity(&prod) {
                return Err(Error::invariant(
                    &location,
                    format!(
                        "labels {} do not multiply to the identity",
                        atlas.triple_name(&m.labels)
                    ),
                ));
            }
            if !m.weight.is_positive() {
                return Err(Error::invariant(
                    &location,
                    "integration weight must be positive",
                ));
            }
            if specs.insert(m.labels.clone(), m).is_some() {
                return Err(Error::invariant(&location, "duplicate multisector"));
            }
        }
        // X_(1,g,g^-1) and its rotations coincide with X_(g)
        for s in &atlas.sectors {
            let g = s.label.clone();
            let inv = atlas.group.inverse(&g);
            if !atlas.sector_index.contains_key(&inv) {
                continue;
            }
            let e = identity.clone();
            for labels in [
                Triple {
                    g1: e.clone(),
                    g2: g.clone(),
                    g3: inv.clone(),
                },
                Triple {
                    g1: g.clone(),
                    g2: e.clone(),
                    g3: inv.clone(),
                },
                Triple {
                    g1: g.clone(),
                    g2: inv.clone(),
                    g3: e.clone(),
                },
            ] {
                specs.entry(labels.clone()).or_insert(MultiSectorSpec {
                    labels,
                    model: s.model.clone(),
                    weight: s.weight.clone(),
                });
            }
        }
        for (labels, spec) in specs {
            let sector_indices = labels.as_array().map(|g| atlas.sector_index[g]);
            atlas
                .multi_index
                .insert(labels.clone(), atlas.multisectors.len());
            atlas.multisectors.push(MultiSector {
                labels,
                sector_indices,
                ring: spec.model.ring_table(),
                model: spec.model,
                weight: spec.weight,
                k_order: 0,
                branch_orders: [0; 3],
                genus: Rational::zero(),
                rank_e: 0,
                restrictions: None,
            });
        }
        annotate_multisectors(atlas)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn label_style(&self) -> &LabelStyle {
        &self.label_style
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn sector(&self, i: usize) -> &Sector {
        &self.sectors[i]
    }

    pub fn multisectors(&self) -> &[MultiSector] {
        &self.multisectors
    }

    pub fn multisector(&self, i: usize) -> &MultiSector {
        &self.multisectors[i]
    }

    pub(crate) fn replace_multisectors(&mut self, multisectors: Vec<MultiSector>) {
        self.multisectors = multisectors;
    }

    pub fn sector_index(&self, label: &GroupElement) -> Option<usize> {
        self.sector_index.get(label).copied()
    }

    pub fn multisector_index(&self, labels: &Triple) -> Option<usize> {
        self.multi_index.get(labels).copied()
    }

    pub fn untwisted_index(&self) -> usize {
        self.sector_index[&self.group.identity()]
    }

    /// Index of the sector labelled by the inverse of sector `i`, if present.
    pub fn inverse_sector(&self, i: usize) -> Option<usize> {
        self.sector_index(&self.group.inverse(&self.sectors[i].label))
    }

    /// Multisector for `(g1, g2, (g1 g2)^{-1})` given two sector indices.
    pub fn multisector_for(&self, a: usize, b: usize) -> Option<usize> {
        let g1 = &self.sectors[a].label;
        let g2 = &self.sectors[b].label;
        let prod = self.group.multiply(g1, g2).ok()?;
        self.multisector_index(&Triple {
            g1: g1.clone(),
            g2: g2.clone(),
            g3: self.group.inverse(&prod),
        })
    }

    pub fn label_name(&self, g: &GroupElement) -> String {
        match self.label_style {
            LabelStyle::Residues => g.to_string(),
            LabelStyle::Fraction => {
                let l = self.group.cyclic_orders()[0];
                let r = g.residues().first().copied().unwrap_or(0);
                Rational::new(r.into(), l.into()).to_string()
            }
        }
    }

    pub fn triple_name(&self, t: &Triple) -> String {
        format!(
            "({}, {}, {})",
            self.label_name(&t.g1),
            self.label_name(&t.g2),
            self.label_name(&t.g3)
        )
    }

    /// Inverse of [`SectorAtlas::label_name`].
    pub fn parse_label(&self, text: &str) -> Result<GroupElement> {
        parse_label(&self.group, &self.label_style, text)
    }
}

pub(crate) fn parse_label(
    group: &GroupSpec,
    style: &LabelStyle,
    text: &str,
) -> Result<GroupElement> {
    let text = text.trim();
    match style {
        LabelStyle::Residues => {
            let inner = text.trim_start_matches('(').trim_end_matches(')');
            let residues = inner
                .split(',')
                .map(|r| r.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::schema(text, "bad residue label"))?;
            let g =
                GroupElement::from_residues(residues.iter().map(|&r| r.max(0) as u64).collect());
            if residues.iter().any(|&r| r < 0) {
                return Err(Error::schema(text, "negative residue"));
            }
            group
                .validate(&g)
                .map_err(|e| Error::schema(text, e.to_string()))?;
            Ok(g)
        }
        LabelStyle::Fraction => {
            let f = parse_rational(text)?;
            let l = group.cyclic_orders()[0];
            let scaled = &f * Rational::from_integer(l.into());
            if !scaled.is_integer() || f.is_negative() || f >= Rational::one() {
                return Err(Error::schema(
                    text,
                    format!("not a fraction l/{l} in [0, 1)"),
                ));
            }
            let r = crate::exact_math::to_i64(&scaled).expect("integral");
            group.element(&[r])
        }
    }
}

/// `S^{2n+1} ⊂ C^{n+1}` divided by a finite abelian group acting diagonally
/// through roots of unity; such actions are unitary and preserve the standard
/// almost contact structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereQuotientPresentation {
    pub name: Option<String>,
    pub ambient_complex_coords: usize,
    pub group: GroupSpec,
    /// One row per cyclic factor, one rotation weight per coordinate, reduced mod the factor order.
    pub weight_matrix: Vec<Vec<u64>>,
}

impl SphereQuotientPresentation {
    pub fn new(
        ambient_complex_coords: usize,
        group: GroupSpec,
        weight_matrix: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if ambient_complex_coords == 0 {
            return Err(Error::InvalidPresentation(
                "need at least one complex coordinate".into(),
            ));
        }
        if weight_matrix.len() != group.cyclic_orders().len() {
            return Err(Error::InvalidPresentation(format!(
                "weight matrix has {} rows for {} cyclic factors",
                weight_matrix.len(),
                group.cyclic_orders().len()
            )));
        }
        let mut reduced = Vec::with_capacity(weight_matrix.len());
        for (row, &n) in weight_matrix.iter().zip(group.cyclic_orders()) {
            if row.len() != ambient_complex_coords {
                return Err(Error::InvalidPresentation(format!(
                    "weight row has {} entries for {ambient_complex_coords} coordinates",
                    row.len()
                )));
            }
            reduced.push(row.iter().map(|&w| w.rem_euclid(n as i64) as u64).collect());
        }
        let p = SphereQuotientPresentation {
            name: None,
            ambient_complex_coords,
            group,
            weight_matrix: reduced,
        };
        for g in p.group.elements() {
            if !p.group.is_identity(&g) && p.fixed_coordinates(&g).len() == ambient_complex_coords {
                return Err(Error::InvalidPresentation(format!(
                    "element {g} acts trivially; the action must be effective"
                )));
            }
        }
        Ok(p)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Rotation angle of coordinate `j` under `g`, as a fraction of a full turn.
    pub fn rotation(&self, g: &GroupElement, j: usize) -> Rational {
        let mut total = Rational::zero();
        for (i, (&r, &n)) in g
            .residues()
            .iter()
            .zip(self.group.cyclic_orders())
            .enumerate()
        {
            total += Rational::new((self.weight_matrix[i][j] * r).into(), n.into());
        }
        frac(&total)
    }

    pub fn fixed_coordinates(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.ambient_complex_coords)
            .filter(|&j| self.rotation(g, j).is_zero())
            .collect()
    }

    pub fn rotation_data(&self, g: &GroupElement) -> RotationData {
        let order = self.group.element_order(g);
        let exponents = (0..self.ambient_complex_coords)
            .map(|j| {
                let m = self.rotation(g, j) * Rational::from_integer(order.into());
                crate::exact_math::to_i64(&m).expect("rotation of order m_g") as u64
            })
            .collect();
        RotationData { exponents, order }
    }

    pub fn default_name(&self) -> String {
        let factors: Vec<String> = self
            .group
            .cyclic_orders()
            .iter()
            .map(|n| format!("Z_{n}"))
            .collect();
        format!(
            "S^{}/{}",
            2 * self.ambient_complex_coords - 1,
            factors.join("x")
        )
    }
}

pub fn sphere_quotient_atlas(p: &SphereQuotientPresentation) -> Result<SectorAtlas> {
    let g_order = p.group.order();
    let weight = Rational::new(One::one(), g_order.into());
    let ambient_dim = 2 * p.ambient_complex_coords as u32 - 1;

    let mut sectors = Vec::new();
    for g in p.group.elements() {
        let fixed = p.fixed_coordinates(&g);
        if fixed.is_empty() {
            continue;
        }
        let rotation = p.rotation_data(&g);
        sectors.push(SectorSpec {
            model: ModelSpace::odd_sphere(2 * fixed.len() as u32 - 1)?,
            iota: degree_shift(&rotation.exponents, rotation.order)?,
            weight: weight.clone(),
            rotation: Some(rotation),
            label: g,
        });
    }

    let mut multisectors = Vec::new();
    for t in p.group.enumerate_triples() {
        let f1 = p.fixed_coordinates(&t.g1);
        let f2 = p.fixed_coordinates(&t.g2);
        let common = f1.iter().filter(|j| f2.contains(j)).count();
        if common == 0 {
            continue;
        }
        multisectors.push(MultiSectorSpec {
            labels: t,
            model: ModelSpace::odd_sphere(2 * common as u32 - 1)?,
            weight: weight.clone(),
        });
    }

    SectorAtlas::build(
        p.name.clone().unwrap_or_else(|| p.default_name()),
        p.group.clone(),
        LabelStyle::Residues,
        ambient_dim,
        sectors,
        multisectors,
    )
}

/// `P(w_0, ..., w_n) x S^1`. Sector labels are the isotropy fractions
/// `l / w_j`, realized as elements of `Z_L` with `L = lcm(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpsCirclePresentation {
    pub name: Option<String>,
    pub weights: Vec<u64>,
}

impl WpsCirclePresentation {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidPresentation(
                "weights must be positive".into(),
            ));
        }
        let g = weights.iter().fold(0u64, |acc, w| acc.gcd(w));
        if g != 1 {
            return Err(Error::InvalidPresentation(format!(
                "weights share the factor {g}; the generic point must have trivial isotropy"
            )));
        }
        Ok(WpsCirclePresentation {
            name: None,
            weights,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn lcm(&self) -> u64 {
        self.weights.iter().fold(1u64, |acc, w| acc.lcm(w))
    }

    /// Weights `w_j` with `l w_j ≡ 0 (mod L)` for every `l` given.
    fn fixed_weights(&self, labels: &[u64]) -> Vec<u64> {
        let l = self.lcm();
        self.weights
            .iter()
            .copied()
            .filter(|w| labels.iter().all(|x| (x * w) % l == 0))
            .collect()
    }

    pub fn default_name(&self) -> String {
        format!("{} x S^1", ModelSpace::WeightedProj(self.weights.clone()))
    }
}

fn generic_isotropy_weight(weights: &[u64]) -> Rational {
    let g = weights.iter().fold(0u64, |acc, w| acc.gcd(w));
    Rational::new(One::one(), g.into())
}

pub fn wps_circle_atlas(p: &WpsCirclePresentation) -> Result<SectorAtlas> {
    let l = p.lcm();
    let group = GroupSpec::cyclic(l)?;
    let n = p.weights.len() as u32 - 1;
    let model_for = |w: Vec<u64>| -> Result<ModelSpace> {
        ModelSpace::product(vec![ModelSpace::weighted_proj(w)?, ModelSpace::Circle])
    };

    let mut sectors = Vec::new();
    for g in group.elements() {
        let r = g.residues()[0];
        let fixed = p.fixed_weights(&[r]);
        if fixed.is_empty() {
            continue;
        }
        let order = group.element_order(&g);
        let exponents = p.weights.iter().map(|w| (r * w % l) * order / l).collect();
        let rotation = RotationData { exponents, order };
        sectors.push(SectorSpec {
            model: model_for(fixed.clone())?,
            iota: degree_shift(&rotation.exponents, rotation.order)?,
            weight: generic_isotropy_weight(&fixed),
            rotation: Some(rotation),
            label: g,
        });
    }

    let mut multisectors = Vec::new();
    for t in group.enumerate_triples() {
        let fixed = p.fixed_weights(&[t.g1.residues()[0], t.g2.residues()[0]]);
        if fixed.is_empty() {
            continue;
        }
        multisectors.push(MultiSectorSpec {
            labels: t,
            weight: generic_isotropy_weight(&fixed),
            model: model_for(fixed)?,
        });
    }

    SectorAtlas::build(
        p.name.clone().unwrap_or_else(|| p.default_name()),
        group,
        LabelStyle::Fraction,
        2 * n + 1,
        sectors,
        multisectors,
    )
}

/// Which user-supplied Euler integral is missing is reported, or treated as zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MissingPolicy {
    #[default]
    Report,
    Zero,
}

/// One Euler integral: the orbifold integral over a multisector of a model
/// basis monomial wedged with the Euler form of its obstruction bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleEntry {
    pub labels: [String; 3],
    pub monomial: String,
    pub value: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EulerOracle {
    pub entries: Vec<OracleEntry>,
    /// Free-text statement of the normalization the values were computed in.
    pub normalization: Option<String>,
    pub missing: MissingPolicy,
}

impl EulerOracle {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: EulerOracle) {
        self.entries.extend(other.entries);
        if other.normalization.is_some() {
            self.normalization = other.normalization;
        }
        if other.missing == MissingPolicy::Zero {
            self.missing = MissingPolicy::Zero;
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exact_math::{int, rat};

    pub(crate) fn s3_mod_z3() -> SectorAtlas {
        let p = SphereQuotientPresentation::new(2, GroupSpec::cyclic(3).unwrap(), vec![vec![1, 0]])
            .unwrap();
        sphere_quotient_atlas(&p).unwrap()
    }

    pub(crate) fn wps_example() -> SectorAtlas {
        wps_circle_atlas(&WpsCirclePresentation::new(vec![1, 2, 2, 3, 3, 3]).unwrap()).unwrap()
    }

    fn sector_by_name<'a>(atlas: &'a SectorAtlas, name: &str) -> &'a Sector {
        let g = atlas.parse_label(name).unwrap();
        atlas.sector(atlas.sector_index(&g).unwrap())
    }

    #[test]
    fn s3_mod_z3_sectors() {
        let atlas = s3_mod_z3();
        assert_eq!(atlas.ambient_dim(), 3);
        assert_eq!(atlas.sectors().len(), 3);
        let g = sector_by_name(&atlas, "1");
        let g2 = sector_by_name(&atlas, "2");
        assert_eq!(
            (g.model.clone(), g.iota.clone()),
            (ModelSpace::Circle, rat(1, 3))
        );
        assert_eq!(
            (g2.model.clone(), g2.iota.clone()),
            (ModelSpace::Circle, rat(2, 3))
        );
        let e = atlas.sector(atlas.untwisted_index());
        assert_eq!(
            e.model.betti(),
            crate::exact_math::GradedDims::from_int_pairs([(0, 1), (3, 1)])
        );
        assert_eq!(e.iota, int(0));
        assert_eq!(e.weight, rat(1, 3));
        assert_eq!(atlas.multisectors().len(), 9);
    }

    #[test]
    fn trivial_group_gives_single_sector() {
        let p = SphereQuotientPresentation::new(2, GroupSpec::trivial(), vec![vec![0, 0]]).unwrap();
        let atlas = sphere_quotient_atlas(&p).unwrap();
        assert_eq!(atlas.sectors().len(), 1);
        assert_eq!(atlas.multisectors().len(), 1);
        assert_eq!(atlas.name(), "S^3/Z_1");
    }

    #[test]
    fn ineffective_actions_are_rejected() {
        let err =
            SphereQuotientPresentation::new(2, GroupSpec::cyclic(3).unwrap(), vec![vec![3, 0]]);
        assert!(matches!(err, Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn wps_sectors() {
        let atlas = wps_example();
        assert_eq!(atlas.ambient_dim(), 11);
        assert_eq!(atlas.sectors().len(), 4);
        let third = sector_by_name(&atlas, "1/3");
        assert_eq!(third.model.to_string(), "P(3,3,3) x S^1");
        assert_eq!(third.iota, rat(5, 3));
        assert_eq!(third.weight, rat(1, 3));
        assert_eq!(sector_by_name(&atlas, "2/3").iota, rat(4, 3));
        let half = sector_by_name(&atlas, "1/2");
        assert_eq!(half.model.to_string(), "P(2,2) x S^1");
        assert_eq!(half.iota, int(2));
        assert_eq!(atlas.multisectors().len(), 12);
    }

    #[test]
    fn wps_manifold_case() {
        let atlas = wps_circle_atlas(&WpsCirclePresentation::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(atlas.sectors().len(), 1);
        assert_eq!(atlas.ambient_dim(), 5);
        assert!(WpsCirclePresentation::new(vec![2, 2]).is_err());
    }

    #[test]
    fn shift_sum_identity_on_examples() {
        for atlas in [s3_mod_z3(), wps_example()] {
            for (i, s) in atlas.sectors().iter().enumerate() {
                let j = atlas.inverse_sector(i).unwrap();
                let lhs = int(2) * (&s.iota + &atlas.sector(j).iota);
                assert_eq!(lhs, int(atlas.ambient_dim() as i64 - s.dim as i64));
                assert_eq!(s.model, atlas.sector(j).model);
            }
        }
    }

    #[test]
    fn label_round_trip() {
        let atlas = wps_example();
        for s in atlas.sectors() {
            assert_eq!(
                atlas.parse_label(&atlas.label_name(&s.label)).unwrap(),
                s.label
            );
        }
        assert!(atlas.parse_label("1/5").is_err());
        let atlas = s3_mod_z3();
        assert!(atlas.parse_label("3").is_err());
        assert!(atlas.parse_label("(1,1)").is_err());
    }
}
