//! Degree-zero 3-point functions, the orbifold Poincaré pairing and the cup
//! product they determine.
//!
//! The cup product is defined by `<a ∪ b, c> = <a, b, c>`: for each pair of
//! basis classes the product is solved for on the block of its target sector
//! and degree, against the complementary block of the inverse sector.
//! Obstruction bundles are never built. A rank-zero bundle contributes the
//! constant Euler form 1, a rank above the multisector dimension forces the
//! integral to vanish, and every other case reads an [`EulerOracle`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Zero};

use crate::cohomology::OrbCohomology;
use crate::error::{Error, Result};
use crate::exact_math::{int, Rational};
use crate::linalg;
use crate::model_spaces::{restriction_map, RestrictionMap};
use crate::presentations::{EulerOracle, MissingPolicy, SectorAtlas};

/// Finitely supported combination of basis elements of [`OrbCohomology`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CohClass {
    coeffs: BTreeMap<usize, Rational>,
}

impl CohClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: usize) -> Self {
        Self::from_terms([(b, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (b, q) in terms {
            c.add_term(b, &q);
        }
        c
    }

    pub fn add_term(&mut self, b: usize, q: &Rational) {
        let entry = self.coeffs.entry(b).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn coefficient(&self, b: usize) -> Rational {
        self.coeffs.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(b, q)| (*b, q))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        let mut out = self.clone();
        for (b, q) in other.terms() {
            out.add_term(b, q);
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> CohClass {
        CohClass::from_terms(self.terms().map(|(b, x)| (b, x * q)))
    }

    pub fn sectors(&self, coh: &OrbCohomology) -> BTreeSet<usize> {
        self.coeffs.keys().map(|&b| coh.basis[b].sector).collect()
    }

    /// The common shifted degree, `None` for the zero class.
    pub fn degree(&self, coh: &OrbCohomology) -> Result<Option<Rational>> {
        let mut degrees = self.coeffs.keys().map(|&b| &coh.basis[b].degree);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.any(|d| d != first) {
            return Err(Error::MalformedClass("class is not homogeneous".into()));
        }
        Ok(Some(first.clone()))
    }

    fn check_range(&self, coh: &OrbCohomology) -> Result<()> {
        match self.coeffs.keys().next_back() {
            Some(&b) if b >= coh.len() => Err(Error::MalformedClass(format!(
                "basis index {b} out of range for a basis of size {}",
                coh.len()
            ))),
            _ => Ok(()),
        }
    }

    pub fn display(&self, atlas: &SectorAtlas, coh: &OrbCohomology) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(b, q)| {
                let name = coh.basis_name(atlas, b);
                if q.is_one() {
                    name
                } else {
                    format!("{q}*{name}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZeroReason {
    NoMultisector,
    RankExceedsDim,
    DegreeMismatch,
}

impl ZeroReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroReason::NoMultisector => "no-multisector",
            ZeroReason::RankExceedsDim => "rank-exceeds-dim",
            ZeroReason::DegreeMismatch => "degree-mismatch",
        }
    }
}

/// A monomial of a multisector model whose Euler-paired integral is needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MissingEntry {
    pub multisector: usize,
    pub monomial: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreePointEvaluation {
    Value(Rational),
    NeedsOracle(BTreeSet<MissingEntry>),
    ForcedZero(ZeroReason),
}

impl ThreePointEvaluation {
    /// The number, if determined. Forced zeros are zero.
    pub fn value(&self) -> Option<Rational> {
        match self {
            ThreePointEvaluation::Value(q) => Some(q.clone()),
            ThreePointEvaluation::ForcedZero(_) => Some(Rational::zero()),
            ThreePointEvaluation::NeedsOracle(_) => None,
        }
    }
}

impl fmt::Display for ThreePointEvaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThreePointEvaluation::Value(q) => write!(f, "{q}"),
            ThreePointEvaluation::NeedsOracle(m) => write!(f, "needs-oracle ({} entries)", m.len()),
            ThreePointEvaluation::ForcedZero(r) => write!(f, "forced-zero({})", r.as_str()),
        }
    }
}

/// Oracle values keyed by multisector and monomial index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResolvedOracle {
    values: BTreeMap<MissingEntry, Rational>,
    pub missing: MissingPolicy,
    pub normalization: Option<String>,
}

impl ResolvedOracle {
    pub fn resolve(atlas: &SectorAtlas, oracle: &EulerOracle) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, e) in oracle.entries.iter().enumerate() {
            let location = format!("euler_oracle[{i}]");
            let fail = |message: String| Error::OracleValidation {
                location: location.clone(),
                message,
            };
            let mut labels = Vec::with_capacity(3);
            for l in &e.labels {
                labels.push(atlas.parse_label(l).map_err(|err| fail(err.to_string()))?);
            }
            let prod = atlas.group().multiply(&labels[0], &labels[1])?;
            let triple = crate::groups::Triple {
                g1: labels[0].clone(),
                g2: labels[1].clone(),
                g3: atlas.group().inverse(&prod),
            };
            if triple.g3 != labels[2] {
                return Err(fail("labels do not multiply to the identity".into()));
            }
            let m = atlas
                .multisector_index(&triple)
                .ok_or_else(|| fail(format!("no multisector {}", atlas.triple_name(&triple))))?;
            let ms = atlas.multisector(m);
            let k = ms
                .ring
                .index_of(&e.monomial)
                .ok_or_else(|| fail(format!("{} is not a monomial of {}", e.monomial, ms.model)))?;
            let dim = ms.dim();
            if ms.rank_e == 0 || ms.rank_e > dim {
                return Err(fail(format!(
                    "multisector {} has rank {} and dimension {dim}; its integrals are determined",
                    atlas.triple_name(&triple),
                    ms.rank_e
                )));
            }
            let degree = ms.ring.generator(k).degree;
            if degree + ms.rank_e != dim {
                return Err(fail(format!(
                    "monomial {} has degree {degree}, but rank {} needs degree {}",
                    e.monomial,
                    ms.rank_e,
                    dim - ms.rank_e
                )));
            }
            let key = MissingEntry {
                multisector: m,
                monomial: k,
            };
            if values.insert(key, e.value.clone()).is_some() {
                return Err(fail("duplicate entry".into()));
            }
        }
        Ok(ResolvedOracle {
            values,
            missing: oracle.missing,
            normalization: oracle.normalization.clone(),
        })
    }

    pub fn get(&self, key: &MissingEntry) -> Option<&Rational> {
        self.values.get(key)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Result of one cup product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CupResult {
    Class(CohClass),
    NeedsOracle(BTreeSet<MissingEntry>),
}

/// An atlas with its assembled cohomology and a validated oracle.
pub struct OrbRing<'a> {
    atlas: &'a SectorAtlas,
    coh: OrbCohomology,
    oracle: ResolvedOracle,
    /// Pullback along the inverse-label identification, from sector `g^{-1}` onto `g`.
    identifications: Vec<Result<RestrictionMap>>,
}

impl<'a> OrbRing<'a> {
    pub fn new(atlas: &'a SectorAtlas, oracle: &EulerOracle) -> Result<Self> {
        let oracle = ResolvedOracle::resolve(atlas, oracle)?;
        let identifications = (0..atlas.sectors().len())
            .map(|i| {
                let s = atlas.sector(i);
                let name = atlas.label_name(&s.label);
                let j = atlas.inverse_sector(i).ok_or_else(|| {
                    Error::AtlasIntegrity(format!("sector {name} has no inverse sector"))
                })?;
                let t = atlas.sector(j);
                if t.model != s.model {
                    return Err(Error::AtlasIntegrity(format!(
                        "sector {name} has model {} but its inverse has model {}",
                        s.model, t.model
                    )));
                }
                restriction_map(&t.model, &s.model)
            })
            .collect();
        Ok(OrbRing {
            coh: OrbCohomology::assemble(atlas),
            atlas,
            oracle,
            identifications,
        })
    }

    pub fn atlas(&self) -> &SectorAtlas {
        self.atlas
    }

    pub fn cohomology(&self) -> &OrbCohomology {
        &self.coh
    }

    pub fn oracle(&self) -> &ResolvedOracle {
        &self.oracle
    }

    /// The unit: the degree-0 generator of the untwisted sector.
    pub fn unit(&self) -> usize {
        self.coh.index_of(self.atlas.untwisted_index(), 0)
    }

    pub fn class(&self, name: &str) -> Result<CohClass> {
        Ok(CohClass::basis(
            self.coh.parse_basis_name(self.atlas, name)?,
        ))
    }

    /// Model-ring coefficient vector of the part of `c` on `sector`.
    fn sector_vector(&self, c: &CohClass, sector: usize) -> Vec<Rational> {
        let mut v = self.atlas.sector(sector).ring.zero_vector();
        for (b, q) in c.terms() {
            let e = &self.coh.basis[b];
            if e.sector == sector {
                v[e.generator] += q;
            }
        }
        v
    }

    /// Orbifold integral of `c` over the sectors: weight times the model
    /// integral of the top component on each sector.
    pub fn integrate(&self, c: &CohClass) -> Result<Rational> {
        c.check_range(&self.coh)?;
        let mut total = Rational::zero();
        for s in c.sectors(&self.coh) {
            let sector = self.atlas.sector(s);
            total += &sector.weight * sector.ring.integrate(&self.sector_vector(c, s));
        }
        Ok(total)
    }

    /// Integral over sector `sector` of a combination of model generators.
    pub fn integrate_on_sector(
        &self,
        sector: usize,
        terms: &[(&str, Rational)],
    ) -> Result<Rational> {
        let s = self.atlas.sector(sector);
        let mut v = s.ring.zero_vector();
        for (label, q) in terms {
            let k = s.ring.index_of(label).ok_or_else(|| {
                Error::MalformedClass(format!("{label} is not a generator of {}", s.model))
            })?;
            if s.ring.generator(k).degree > s.dim {
                return Err(Error::MalformedClass(format!(
                    "{label} exceeds the model dimension"
                )));
            }
            v[k] += q;
        }
        Ok(&s.weight * s.ring.integrate(&v))
    }

    fn single_sector(&self, c: &CohClass) -> Result<Option<(usize, u32)>> {
        c.check_range(&self.coh)?;
        let sectors = c.sectors(&self.coh);
        if sectors.len() > 1 {
            return Err(Error::MalformedClass("class spans several sectors".into()));
        }
        let Some(&s) = sectors.iter().next() else {
            return Ok(None);
        };
        c.degree(&self.coh)?;
        let (b, _) = c.terms().next().expect("nonzero");
        let k = self.coh.basis[b].generator;
        Ok(Some((s, self.atlas.sector(s).ring.generator(k).degree)))
    }

    /// `<η1, η2, η3>` for homogeneous classes each supported on one sector.
    pub fn three_point(&self, eta: [&CohClass; 3]) -> Result<ThreePointEvaluation> {
        let mut sectors = [0usize; 3];
        let mut degree_sum = 0u32;
        for (j, c) in eta.iter().enumerate() {
            match self.single_sector(c)? {
                Some((s, d)) => {
                    sectors[j] = s;
                    degree_sum += d;
                }
                None => return Ok(ThreePointEvaluation::Value(Rational::zero())),
            }
        }
        let labels = sectors.map(|s| &self.atlas.sector(s).label);
        let group = self.atlas.group();
        let prod = group.multiply(labels[0], labels[1])?;
        let triple = crate::groups::Triple {
            g1: labels[0].clone(),
            g2: labels[1].clone(),
            g3: labels[2].clone(),
        };
        if !group.is_identity(&group.multiply(&prod, labels[2])?) {
            return Ok(ThreePointEvaluation::ForcedZero(ZeroReason::NoMultisector));
        }
        let Some(m) = self.atlas.multisector_index(&triple) else {
            return Ok(ThreePointEvaluation::ForcedZero(ZeroReason::NoMultisector));
        };
        let ms = self.atlas.multisector(m);
        let dim = ms.dim();
        if ms.rank_e > dim {
            return Ok(ThreePointEvaluation::ForcedZero(ZeroReason::RankExceedsDim));
        }
        if degree_sum + ms.rank_e != dim {
            return Ok(ThreePointEvaluation::ForcedZero(ZeroReason::DegreeMismatch));
        }
        let restricted: Vec<Vec<Rational>> = (0..3)
            .map(|j| {
                ms.restriction(j)
                    .apply(&self.sector_vector(eta[j], sectors[j]))
            })
            .collect();
        let product = ms.ring.multiply(
            &ms.ring.multiply(&restricted[0], &restricted[1]),
            &restricted[2],
        );
        if ms.rank_e == 0 {
            return Ok(ThreePointEvaluation::Value(
                &ms.weight * ms.ring.integrate(&product),
            ));
        }
        let mut value = Rational::zero();
        let mut missing = BTreeSet::new();
        for (k, q) in product.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
            let key = MissingEntry {
                multisector: m,
                monomial: k,
            };
            match (self.oracle.get(&key), self.oracle.missing) {
                (Some(v), _) => value += q * v,
                (None, MissingPolicy::Zero) => {}
                (None, MissingPolicy::Report) => {
                    missing.insert(key);
                }
            }
        }
        if missing.is_empty() {
            Ok(ThreePointEvaluation::Value(value))
        } else {
            Ok(ThreePointEvaluation::NeedsOracle(missing))
        }
    }

    fn pair_basis(&self, i: usize, j: usize) -> Result<Rational> {
        let a = &self.coh.basis[i];
        let b = &self.coh.basis[j];
        if self.atlas.inverse_sector(a.sector) != Some(b.sector) {
            return Ok(Rational::zero());
        }
        let ident = self.identifications[a.sector]
            .as_ref()
            .map_err(Clone::clone)?;
        let s = self.atlas.sector(a.sector);
        let Some(k) = ident.image(b.generator) else {
            return Ok(Rational::zero());
        };
        let product = s
            .ring
            .multiply(&s.ring.basis_vector(a.generator), &s.ring.basis_vector(k));
        Ok(&s.weight * s.ring.integrate(&product))
    }

    /// `<α, β>`: block diagonal across inverse sector pairs.
    pub fn pairing(&self, alpha: &CohClass, beta: &CohClass) -> Result<Rational> {
        alpha.check_range(&self.coh)?;
        beta.check_range(&self.coh)?;
        let mut total = Rational::zero();
        for (i, p) in alpha.terms() {
            for (j, q) in beta.terms() {
                total += p * q * self.pair_basis(i, j)?;
            }
        }
        Ok(total)
    }

    /// Pairing matrix between a block and its complementary block.
    pub fn pairing_block(
        &self,
        target: &[usize],
        complement: &[usize],
    ) -> Result<Vec<Vec<Rational>>> {
        target
            .iter()
            .map(|&x| complement.iter().map(|&z| self.pair_basis(x, z)).collect())
            .collect()
    }

    /// Target block of sector `t` at degree `d` and its complement.
    fn blocks(&self, t: usize, d: &Rational) -> Result<(Vec<usize>, Vec<usize>)> {
        let u = self.atlas.inverse_sector(t).ok_or_else(|| {
            Error::AtlasIntegrity(format!(
                "sector {} has no inverse sector",
                self.atlas.label_name(&self.atlas.sector(t).label)
            ))
        })?;
        let total = int(self.atlas.ambient_dim() as i64);
        Ok((self.coh.block(t, d), self.coh.block(u, &(total - d))))
    }

    fn block_name(&self, t: usize, d: &Rational) -> String {
        format!(
            "sector {} degree {d}",
            self.atlas.label_name(&self.atlas.sector(t).label)
        )
    }

    /// Cup product of two basis elements.
    pub fn cup_basis(&self, i: usize, j: usize) -> Result<CupResult> {
        let (a, b) = (&self.coh.basis[i], &self.coh.basis[j]);
        let group = self.atlas.group();
        let g = group.multiply(
            &self.atlas.sector(a.sector).label,
            &self.atlas.sector(b.sector).label,
        )?;
        let Some(t) = self.atlas.sector_index(&g) else {
            return Ok(CupResult::Class(CohClass::zero()));
        };
        let d = &a.degree + &b.degree;
        let (target, complement) = self.blocks(t, &d)?;
        if target.len() != complement.len() {
            return Err(Error::DualityFailure(format!(
                "{}: {} classes against {} complementary classes",
                self.block_name(t, &d),
                target.len(),
                complement.len()
            )));
        }
        if target.is_empty() {
            return Ok(CupResult::Class(CohClass::zero()));
        }
        let (ei, ej) = (CohClass::basis(i), CohClass::basis(j));
        let mut rhs = Vec::with_capacity(complement.len());
        let mut missing = BTreeSet::new();
        for &z in &complement {
            match self.three_point([&ei, &ej, &CohClass::basis(z)])? {
                ThreePointEvaluation::NeedsOracle(m) => missing.extend(m),
                eval => rhs.push(eval.value().expect("determined")),
            }
        }
        if !missing.is_empty() {
            return Ok(CupResult::NeedsOracle(missing));
        }
        // Σ_x c_x <x, z> = <e_i, e_j, z> for every z in the complement
        let p = self.pairing_block(&target, &complement)?;
        let system: Vec<Vec<Rational>> = (0..complement.len())
            .map(|zi| (0..target.len()).map(|xi| p[xi][zi].clone()).collect())
            .collect();
        let c = linalg::solve(&system, &rhs).ok_or_else(|| {
            Error::DualityFailure(format!("{}: pairing is singular", self.block_name(t, &d)))
        })?;
        Ok(CupResult::Class(CohClass::from_terms(
            target.into_iter().zip(c),
        )))
    }

    /// Cup product extended bilinearly.
    pub fn cup(&self, alpha: &CohClass, beta: &CohClass) -> Result<CupResult> {
        alpha.check_range(&self.coh)?;
        beta.check_range(&self.coh)?;
        let mut out = CohClass::zero();
        let mut missing = BTreeSet::new();
        for (i, p) in alpha.terms() {
            for (j, q) in beta.terms() {
                match self.cup_basis(i, j)? {
                    CupResult::Class(c) => out = out.add(&c.scale(&(p * q))),
                    CupResult::NeedsOracle(m) => missing.extend(m),
                }
            }
        }
        if missing.is_empty() {
            Ok(CupResult::Class(out))
        } else {
            Ok(CupResult::NeedsOracle(missing))
        }
    }

    pub fn structure_constants(&self) -> Result<StructureConstants> {
        let n = self.coh.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(match self.cup_basis(i, j)? {
                    CupResult::Class(c) => Entry::Known(c),
                    CupResult::NeedsOracle(m) => Entry::Missing(m),
                });
            }
        }
        Ok(StructureConstants {
            degrees: self.coh.basis.iter().map(|b| b.degree.clone()).collect(),
            sectors: self.coh.basis.iter().map(|b| b.sector).collect(),
            entries,
        })
    }

    /// Every complementary block pairing is square and nonsingular.
    pub fn pairing_nondegeneracy(&self) -> Result<Vec<BlockCheck>> {
        let mut out = Vec::new();
        for t in 0..self.atlas.sectors().len() {
            let mut degrees: Vec<&Rational> = self
                .coh
                .basis
                .iter()
                .filter(|b| b.sector == t)
                .map(|b| &b.degree)
                .collect();
            degrees.dedup();
            for d in degrees {
                let (target, complement) = self.blocks(t, d)?;
                let ok = target.len() == complement.len()
                    && linalg::rank(&self.pairing_block(&target, &complement)?) == target.len();
                out.push(BlockCheck {
                    sector: t,
                    degree: d.clone(),
                    size: target.len(),
                    complement_size: complement.len(),
                    nondegenerate: ok,
                });
            }
        }
        Ok(out)
    }

    /// Every determined 3-point value on basis classes is nonzero only when
    /// the degree sum plus the rank equals the multisector dimension.
    /// Returns the number of triples examined and the violations.
    pub fn degree_filter_soundness(&self) -> Result<(usize, Vec<[usize; 3]>)> {
        let mut examined = 0;
        let mut bad = Vec::new();
        for ms in self.atlas.multisectors() {
            let ranges = ms.sector_indices.map(|s| self.coh.block_all(s));
            for i in ranges[0].clone() {
                for j in ranges[1].clone() {
                    for k in ranges[2].clone() {
                        examined += 1;
                        let eval = self.three_point([
                            &CohClass::basis(i),
                            &CohClass::basis(j),
                            &CohClass::basis(k),
                        ])?;
                        if let ThreePointEvaluation::Value(q) = eval {
                            let deg: u32 = [i, j, k]
                                .iter()
                                .map(|&b| {
                                    let e = &self.coh.basis[b];
                                    self.atlas
                                        .sector(e.sector)
                                        .ring
                                        .generator(e.generator)
                                        .degree
                                })
                                .sum();
                            if !q.is_zero() && deg + ms.rank_e != ms.dim() {
                                bad.push([i, j, k]);
                            }
                        }
                    }
                }
            }
        }
        Ok((examined, bad))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCheck {
    pub sector: usize,
    pub degree: Rational,
    pub size: usize,
    pub complement_size: usize,
    pub nondegenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Known(CohClass),
    Missing(BTreeSet<MissingEntry>),
}

/// Cup products of all basis pairs, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub degrees: Vec<Rational>,
    pub sectors: Vec<usize>,
    pub entries: Vec<Entry>,
}

impl StructureConstants {
    pub fn size(&self) -> usize {
        self.degrees.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Entry {
        &self.entries[i * self.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, entry: Entry) {
        let n = self.size();
        self.entries[i * n + j] = entry;
    }

    pub fn known(&self, i: usize, j: usize) -> Option<&CohClass> {
        match self.get(i, j) {
            Entry::Known(c) => Some(c),
            Entry::Missing(_) => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| matches!(e, Entry::Known(_)))
    }

    pub fn missing_inventory(&self) -> BTreeSet<MissingEntry> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                Entry::Missing(m) => Some(m.iter().copied()),
                Entry::Known(_) => None,
            })
            .flatten()
            .collect()
    }

    pub fn missing_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| matches!(e, Entry::Missing(_)))
            .count()
    }

    /// `c ∪ b` for a class `c` and basis index `b`, if every needed entry is known.
    fn right_multiply(&self, c: &CohClass, b: usize) -> Option<CohClass> {
        let mut out = CohClass::zero();
        for (x, q) in c.terms() {
            out = out.add(&self.known(x, b)?.scale(q));
        }
        Some(out)
    }

    fn left_multiply(&self, a: usize, c: &CohClass) -> Option<CohClass> {
        let mut out = CohClass::zero();
        for (x, q) in c.terms() {
            out = out.add(&self.known(a, x)?.scale(q));
        }
        Some(out)
    }

    /// `(a ∪ b) ∪ c = a ∪ (b ∪ c)` on every basis triple whose products are known.
    pub fn associativity_check(&self) -> AssociativityReport {
        let n = self.size();
        let mut report = AssociativityReport::default();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.known(a, b).and_then(|ab| self.right_multiply(ab, c));
                    let right = self.known(b, c).and_then(|bc| self.left_multiply(a, bc));
                    match (left, right) {
                        (Some(l), Some(r)) => {
                            report.checked += 1;
                            if l != r {
                                report.violations.push([a, b, c]);
                            }
                        }
                        _ => report.skipped += 1,
                    }
                }
            }
        }
        report
    }

    /// Basis pairs where `1 ∪ x` or `x ∪ 1` differs from `x`.
    pub fn unit_law_failures(&self, unit: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| {
                let expected = CohClass::basis(x);
                [self.get(unit, x), self.get(x, unit)]
                    .iter()
                    .any(|e| !matches!(e, Entry::Known(c) if *c == expected))
            })
            .collect()
    }

    /// Known nonzero entries not concentrated in degree `deg i + deg j`.
    pub fn degree_additivity_failures(&self) -> Vec<[usize; 2]> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if let Some(c) = self.known(i, j) {
                    let d = &self.degrees[i] + &self.degrees[j];
                    if c.terms().any(|(b, _)| self.degrees[b] != d) {
                        out.push([i, j]);
                    }
                }
            }
        }
        out
    }

    /// Known entries with support off the sector of the product label.
    pub fn sector_selection_failures(&self, atlas: &SectorAtlas) -> Vec<[usize; 2]> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if let Some(c) = self.known(i, j) {
                    let g = atlas
                        .group()
                        .multiply(
                            &atlas.sector(self.sectors[i]).label,
                            &atlas.sector(self.sectors[j]).label,
                        )
                        .expect("same group");
                    if c.terms()
                        .any(|(b, _)| atlas.sector(self.sectors[b]).label != g)
                    {
                        out.push([i, j]);
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssociativityReport {
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<[usize; 3]>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}
