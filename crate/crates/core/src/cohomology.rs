//! Orbifold cohomology as a rationally graded vector space, with the
//! `X x R` comparison and the Poincaré duality dimension table.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_math::{int, GradedDims, Rational};
use crate::presentations::SectorAtlas;
use crate::sectors::degree_shift;

/// One basis element: a model generator placed on a sector, at its shifted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub sector: usize,
    pub generator: usize,
    pub degree: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbCohomology {
    pub total: GradedDims,
    /// Indexed like the atlas sectors, already shifted.
    pub per_sector: Vec<GradedDims>,
    /// Sector-major, then in ring-table order.
    pub basis: Vec<BasisElement>,
    offsets: Vec<usize>,
}

impl OrbCohomology {
    pub fn assemble(atlas: &SectorAtlas) -> OrbCohomology {
        let mut total = GradedDims::new();
        let mut per_sector = Vec::with_capacity(atlas.sectors().len());
        let mut basis = Vec::new();
        let mut offsets = Vec::with_capacity(atlas.sectors().len());
        for (i, s) in atlas.sectors().iter().enumerate() {
            let shift = int(2) * &s.iota;
            let dims = s.model.betti().shift(&shift);
            total = total.sum(&dims);
            per_sector.push(dims);
            offsets.push(basis.len());
            for (k, g) in s.ring.generators().iter().enumerate() {
                basis.push(BasisElement {
                    sector: i,
                    generator: k,
                    degree: int(g.degree as i64) + &shift,
                });
            }
        }
        OrbCohomology {
            total,
            per_sector,
            basis,
            offsets,
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, sector: usize, generator: usize) -> usize {
        self.offsets[sector] + generator
    }

    /// Basis indices of one sector.
    pub fn block_all(&self, sector: usize) -> std::ops::Range<usize> {
        let end = self
            .offsets
            .get(sector + 1)
            .copied()
            .unwrap_or(self.basis.len());
        self.offsets[sector]..end
    }

    /// Basis indices of one sector at one shifted degree.
    pub fn block(&self, sector: usize, degree: &Rational) -> Vec<usize> {
        self.block_all(sector)
            .filter(|&b| self.basis[b].degree == *degree)
            .collect()
    }

    /// `generator@label`, e.g. `h⊗s@1/3`.
    pub fn basis_name(&self, atlas: &SectorAtlas, b: usize) -> String {
        let e = &self.basis[b];
        let s = atlas.sector(e.sector);
        format!(
            "{}@{}",
            s.ring.generator(e.generator).label,
            atlas.label_name(&s.label)
        )
    }

    /// Inverse of [`OrbCohomology::basis_name`].
    pub fn parse_basis_name(&self, atlas: &SectorAtlas, text: &str) -> Result<usize> {
        let (gen, label) = text
            .rsplit_once('@')
            .ok_or_else(|| Error::MalformedClass(format!("{text:?} is not generator@label")))?;
        let g = atlas
            .parse_label(label)
            .map_err(|e| Error::MalformedClass(e.to_string()))?;
        let sector = atlas
            .sector_index(&g)
            .ok_or_else(|| Error::MalformedClass(format!("no sector labelled {label}")))?;
        let k = atlas.sector(sector).ring.index_of(gen).ok_or_else(|| {
            Error::MalformedClass(format!("no generator {gen} on sector {label}"))
        })?;
        Ok(self.index_of(sector, k))
    }
}

/// A sector family as seen by the dimension count: Betti data and degree shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorDims {
    pub betti: GradedDims,
    pub iota: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub x_total: GradedDims,
    pub y_total: GradedDims,
    pub differing_degrees: Vec<Rational>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.differing_degrees.is_empty()
    }
}

pub fn compare_families(x: &[SectorDims], y: &[SectorDims]) -> ComparisonReport {
    let total = |family: &[SectorDims]| {
        family.iter().fold(GradedDims::new(), |acc, s| {
            acc.sum(&s.betti.shift(&(int(2) * &s.iota)))
        })
    };
    let x_total = total(x);
    let y_total = total(y);
    let differing_degrees = x_total.differing_degrees(&y_total);
    ComparisonReport {
        x_total,
        y_total,
        differing_degrees,
    }
}

/// Compares `X` against `X x R`. Each sector of the product is the sector of
/// `X` times a line; the line is fixed pointwise, so its rotation exponent is
/// zero and its Betti contribution trivial.
pub fn cross_r_compare(atlas: &SectorAtlas) -> Result<ComparisonReport> {
    let x: Vec<SectorDims> = atlas
        .sectors()
        .iter()
        .map(|s| SectorDims {
            betti: s.model.betti(),
            iota: s.iota.clone(),
        })
        .collect();
    let line = GradedDims::from_int_pairs([(0, 1)]);
    let mut y = Vec::with_capacity(x.len());
    for s in atlas.sectors() {
        let iota = match &s.rotation {
            Some(rot) => {
                let mut exponents = rot.exponents.clone();
                exponents.push(0);
                degree_shift(&exponents, rot.order)?
            }
            None => s.iota.clone(),
        };
        y.push(SectorDims {
            betti: s.model.betti().convolve(&line),
            iota,
        });
    }
    Ok(compare_families(&x, &y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub sector: usize,
    pub degree: Rational,
    pub dim: u64,
    pub partner: usize,
    pub partner_degree: Rational,
    pub partner_dim: u64,
}

impl DualityRow {
    pub fn matches(&self) -> bool {
        self.dim == self.partner_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub ambient_dim: u32,
    pub rows: Vec<DualityRow>,
    pub total_symmetric: bool,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.total_symmetric && self.rows.iter().all(DualityRow::matches)
    }
}

/// `H^d` on sector `g` against `H^{D-d}` on `g^{-1}`, for every degree on
/// either side.
pub fn duality_report(atlas: &SectorAtlas) -> Result<DualityReport> {
    let coh = OrbCohomology::assemble(atlas);
    let d_total = int(atlas.ambient_dim() as i64);
    let mut rows = Vec::new();
    for (i, dims) in coh.per_sector.iter().enumerate() {
        let j = atlas.inverse_sector(i).ok_or_else(|| {
            Error::AtlasIntegrity(format!(
                "sector {} has no inverse sector",
                atlas.label_name(&atlas.sector(i).label)
            ))
        })?;
        let partner = &coh.per_sector[j];
        let mut degrees: Vec<Rational> = dims.degrees().cloned().collect();
        degrees.extend(partner.degrees().map(|d| &d_total - d));
        degrees.sort();
        degrees.dedup();
        for degree in degrees {
            let partner_degree = &d_total - &degree;
            rows.push(DualityRow {
                sector: i,
                dim: dims.get(&degree),
                partner: j,
                partner_dim: partner.get(&partner_degree),
                degree,
                partner_degree,
            });
        }
    }
    Ok(DualityReport {
        ambient_dim: atlas.ambient_dim(),
        total_symmetric: coh.total.is_symmetric_about(&d_total),
        rows,
    })
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            let ds: Vec<String> = self
                .differing_degrees
                .iter()
                .map(ToString::to_string)
                .collect();
            write!(f, "fail at degrees {}", ds.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;
    use crate::groups::GroupSpec;
    use crate::presentations::tests::{s3_mod_z3, wps_example};
    use crate::presentations::{
        sphere_quotient_atlas, Document, InputFormat, SphereQuotientPresentation,
    };

    #[test]
    fn s3_mod_z3_total() {
        let coh = OrbCohomology::assemble(&s3_mod_z3());
        let expected = GradedDims::from_pairs([
            (rat(0, 1), 1),
            (rat(2, 3), 1),
            (rat(4, 3), 1),
            (rat(5, 3), 1),
            (rat(7, 3), 1),
            (rat(3, 1), 1),
        ]);
        assert_eq!(coh.total, expected);
        assert_eq!(coh.len(), 6);
        assert_eq!(
            coh.total.series_string(),
            "1 + t^{2/3} + t^{4/3} + t^{5/3} + t^{7/3} + t^3"
        );
    }

    #[test]
    fn manifold_total_is_model_betti() {
        let p =
            SphereQuotientPresentation::new(3, GroupSpec::trivial(), vec![vec![0, 0, 0]]).unwrap();
        let atlas = sphere_quotient_atlas(&p).unwrap();
        let coh = OrbCohomology::assemble(&atlas);
        assert_eq!(coh.total, atlas.sector(0).model.betti());
    }

    #[test]
    fn wps_total_contains_shifted_pieces() {
        let atlas = wps_example();
        let coh = OrbCohomology::assemble(&atlas);
        assert!(coh.total.get(&rat(10, 3)) >= 1);
        assert!(coh.total.get(&rat(8, 3)) >= 1);
        assert!(coh.total.get(&int(4)) >= 1);
        let sum: u64 = atlas
            .sectors()
            .iter()
            .map(|s| s.model.betti().total_dim())
            .sum();
        assert_eq!(coh.total.total_dim(), sum);
        assert_eq!(coh.total.total_dim() as usize, coh.len());
    }

    #[test]
    fn basis_names_round_trip() {
        let atlas = wps_example();
        let coh = OrbCohomology::assemble(&atlas);
        for b in 0..coh.len() {
            let name = coh.basis_name(&atlas, b);
            assert_eq!(coh.parse_basis_name(&atlas, &name).unwrap(), b);
        }
        assert!(coh.basis_name(&atlas, coh.len() - 1).contains('@'));
        assert!(coh.parse_basis_name(&atlas, "q@1/3").is_err());
    }

    #[test]
    fn cross_r_passes_on_examples() {
        assert!(cross_r_compare(&s3_mod_z3()).unwrap().passed());
        assert!(cross_r_compare(&wps_example()).unwrap().passed());
    }

    #[test]
    fn cross_r_detects_tampered_shift() {
        let atlas = s3_mod_z3();
        let x: Vec<SectorDims> = atlas
            .sectors()
            .iter()
            .map(|s| SectorDims {
                betti: s.model.betti(),
                iota: s.iota.clone(),
            })
            .collect();
        let mut y = x.clone();
        y[2].iota = rat(5, 3);
        let report = compare_families(&x, &y);
        assert!(!report.passed());
        assert!(report.differing_degrees.contains(&rat(4, 3)));
        assert!(report.to_string().contains("4/3"));
    }

    #[test]
    fn duality_rows() {
        let report = duality_report(&s3_mod_z3()).unwrap();
        assert!(report.passed());
        let row = report.rows.iter().find(|r| r.degree == rat(2, 3)).unwrap();
        assert_eq!(
            (row.partner_degree.clone(), row.dim, row.partner_dim),
            (rat(7, 3), 1, 1)
        );

        let atlas = wps_example();
        let report = duality_report(&atlas).unwrap();
        assert!(report.passed());
        let half = atlas
            .sector_index(&atlas.parse_label("1/2").unwrap())
            .unwrap();
        let row = report
            .rows
            .iter()
            .find(|r| r.sector == half && r.degree == int(4))
            .unwrap();
        assert_eq!((row.partner, row.partner_degree.clone()), (half, int(7)));
    }

    #[test]
    fn duality_requires_inverse_sector() {
        let atlas = s3_mod_z3();
        let mut doc = Document::raw_from_atlas(&atlas);
        if let crate::presentations::document::Body::RawAtlas(raw) = &mut doc.body {
            raw.sectors.retain(|s| s.label != "2");
            raw.multisectors
                .retain(|m| !m.labels.contains(&"2".to_string()));
        }
        let atlas =
            crate::presentations::load_atlas(&doc.to_text(InputFormat::Json), InputFormat::Json)
                .unwrap();
        assert!(matches!(
            duality_report(&atlas),
            Err(Error::AtlasIntegrity(_))
        ));
    }
}
