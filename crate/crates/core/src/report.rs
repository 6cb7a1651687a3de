//! Report documents shared by the table and JSON renderings, so both carry
//! the same numbers.

use serde::Serialize;

use crate::cohomology::{cross_r_compare, duality_report, OrbCohomology};
use crate::error::{Error, Result};
use crate::exact_math::{fmt_rational, int, GradedDims, Rational};
use crate::presentations::SectorAtlas;
use crate::ring::{Entry, MissingEntry, OrbRing, StructureConstants};
use crate::sectors::{
    obstruction_rank, obstruction_rank_line_model, shift_is_integral_by_exponents,
};

#[derive(Clone, Debug, Serialize)]
pub struct DegreeDim {
    pub degree: String,
    pub dim: u64,
}

fn dims(g: &GradedDims) -> Vec<DegreeDim> {
    g.iter()
        .map(|(d, n)| DegreeDim {
            degree: fmt_rational(d),
            dim: n,
        })
        .collect()
}

fn group_name(atlas: &SectorAtlas) -> String {
    let parts: Vec<String> = atlas
        .group()
        .cyclic_orders()
        .iter()
        .map(|n| format!("Z_{n}"))
        .collect();
    parts.join(" x ")
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(headers.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorRow {
    pub label: String,
    pub model: String,
    pub dim: u32,
    pub iota: String,
    pub weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiSectorRow {
    pub labels: [String; 3],
    pub model: String,
    pub dim: u32,
    pub weight: String,
    pub k_order: u64,
    pub branch_orders: [u64; 3],
    pub genus: String,
    pub rank_e: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorsReport {
    pub atlas: String,
    pub group: String,
    pub ambient_dim: u32,
    pub sectors: Vec<SectorRow>,
    pub multisectors: Vec<MultiSectorRow>,
}

impl SectorsReport {
    pub fn build(atlas: &SectorAtlas) -> Self {
        SectorsReport {
            atlas: atlas.name().to_string(),
            group: group_name(atlas),
            ambient_dim: atlas.ambient_dim(),
            sectors: atlas
                .sectors()
                .iter()
                .map(|s| SectorRow {
                    label: atlas.label_name(&s.label),
                    model: s.model.to_string(),
                    dim: s.dim,
                    iota: fmt_rational(&s.iota),
                    weight: fmt_rational(&s.weight),
                })
                .collect(),
            multisectors: atlas
                .multisectors()
                .iter()
                .map(|m| MultiSectorRow {
                    labels: m.labels.as_array().map(|g| atlas.label_name(g)),
                    model: m.model.to_string(),
                    dim: m.dim(),
                    weight: fmt_rational(&m.weight),
                    k_order: m.k_order,
                    branch_orders: m.branch_orders,
                    genus: fmt_rational(&m.genus),
                    rank_e: m.rank_e,
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "atlas: {}\ngroup: {}\nambient dimension: {}\n\nsectors ({})\n",
            self.atlas,
            self.group,
            self.ambient_dim,
            self.sectors.len()
        );
        let rows: Vec<Vec<String>> = self
            .sectors
            .iter()
            .map(|s| {
                vec![
                    s.label.clone(),
                    s.model.clone(),
                    s.dim.to_string(),
                    s.iota.clone(),
                    s.weight.clone(),
                ]
            })
            .collect();
        out.push_str(&table(&["label", "model", "dim", "iota", "weight"], &rows));
        out.push_str(&format!("\nmultisectors ({})\n", self.multisectors.len()));
        let rows: Vec<Vec<String>> = self
            .multisectors
            .iter()
            .map(|m| {
                vec![
                    format!("({})", m.labels.join(", ")),
                    m.model.clone(),
                    m.dim.to_string(),
                    m.weight.clone(),
                    m.k_order.to_string(),
                    format!("({})", m.branch_orders.map(|k| k.to_string()).join(", ")),
                    m.genus.clone(),
                    m.rank_e.to_string(),
                ]
            })
            .collect();
        out.push_str(&table(
            &[
                "labels", "model", "dim", "weight", "K", "branch", "genus", "rank_E",
            ],
            &rows,
        ));
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorCohomology {
    pub label: String,
    pub model: String,
    pub iota: String,
    pub poincare_polynomial: String,
    pub dims: Vec<DegreeDim>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisRow {
    pub index: usize,
    pub name: String,
    pub sector: String,
    pub generator: String,
    pub degree: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub atlas: String,
    pub poincare_polynomial: String,
    pub total_dim: u64,
    pub total: Vec<DegreeDim>,
    pub per_sector: Vec<SectorCohomology>,
    pub basis: Vec<BasisRow>,
}

impl CohomologyReport {
    pub fn build(atlas: &SectorAtlas) -> Self {
        let coh = OrbCohomology::assemble(atlas);
        CohomologyReport {
            atlas: atlas.name().to_string(),
            poincare_polynomial: coh.total.series_string(),
            total_dim: coh.total.total_dim(),
            total: dims(&coh.total),
            per_sector: atlas
                .sectors()
                .iter()
                .zip(&coh.per_sector)
                .map(|(s, d)| SectorCohomology {
                    label: atlas.label_name(&s.label),
                    model: s.model.to_string(),
                    iota: fmt_rational(&s.iota),
                    poincare_polynomial: d.series_string(),
                    dims: dims(d),
                })
                .collect(),
            basis: coh
                .basis
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let s = atlas.sector(b.sector);
                    BasisRow {
                        index: i,
                        name: coh.basis_name(atlas, i),
                        sector: atlas.label_name(&s.label),
                        generator: s.ring.generator(b.generator).label.clone(),
                        degree: fmt_rational(&b.degree),
                    }
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "atlas: {}\npoincare polynomial: {}\ntotal dimension: {}\n\ndimensions\n",
            self.atlas, self.poincare_polynomial, self.total_dim
        );
        let rows: Vec<Vec<String>> = self
            .total
            .iter()
            .map(|d| vec![d.degree.clone(), d.dim.to_string()])
            .collect();
        out.push_str(&table(&["degree", "dim"], &rows));
        out.push_str("\nper sector\n");
        let rows: Vec<Vec<String>> = self
            .per_sector
            .iter()
            .map(|s| {
                vec![
                    s.label.clone(),
                    s.model.clone(),
                    s.iota.clone(),
                    s.poincare_polynomial.clone(),
                ]
            })
            .collect();
        out.push_str(&table(&["label", "model", "iota", "shifted series"], &rows));
        out.push_str("\nbasis\n");
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|b| vec![b.index.to_string(), b.name.clone(), b.degree.clone()])
            .collect();
        out.push_str(&table(&["index", "class", "degree"], &rows));
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    pub degree: String,
    /// `(basis name, coefficient)` pairs; empty for the zero class.
    pub result: Vec<(String, String)>,
    /// `known` or `needs-oracle`.
    pub status: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MissingRow {
    pub multisector: [String; 3],
    pub model: String,
    pub monomial: String,
    pub monomial_degree: u32,
    pub rank_e: u32,
    pub dim: u32,
    pub genus: String,
    pub weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub atlas: String,
    /// `complete` or `incomplete`.
    pub status: String,
    pub oracle_entries: usize,
    pub oracle_normalization: Option<String>,
    pub products: Vec<ProductRow>,
    pub missing: Vec<MissingRow>,
}

fn missing_row(atlas: &SectorAtlas, m: &MissingEntry) -> MissingRow {
    let ms = atlas.multisector(m.multisector);
    let g = ms.ring.generator(m.monomial);
    MissingRow {
        multisector: ms.labels.as_array().map(|x| atlas.label_name(x)),
        model: ms.model.to_string(),
        monomial: g.label.clone(),
        monomial_degree: g.degree,
        rank_e: ms.rank_e,
        dim: ms.dim(),
        genus: fmt_rational(&ms.genus),
        weight: fmt_rational(&ms.weight),
    }
}

impl RingReport {
    pub fn build(ring: &OrbRing<'_>, table: &StructureConstants) -> Self {
        let atlas = ring.atlas();
        let coh = ring.cohomology();
        let n = table.size();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (result, status) = match table.get(i, j) {
                    Entry::Known(c) => (
                        c.terms()
                            .map(|(b, q)| (coh.basis_name(atlas, b), fmt_rational(q)))
                            .collect(),
                        "known",
                    ),
                    Entry::Missing(_) => (Vec::new(), "needs-oracle"),
                };
                products.push(ProductRow {
                    left: coh.basis_name(atlas, i),
                    right: coh.basis_name(atlas, j),
                    degree: fmt_rational(&(&table.degrees[i] + &table.degrees[j])),
                    result,
                    status: status.into(),
                });
            }
        }
        RingReport {
            atlas: atlas.name().to_string(),
            status: if table.is_complete() {
                "complete"
            } else {
                "incomplete"
            }
            .into(),
            oracle_entries: ring.oracle().len(),
            oracle_normalization: ring.oracle().normalization.clone(),
            products,
            missing: table
                .missing_inventory()
                .iter()
                .map(|m| missing_row(atlas, m))
                .collect(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.status == "complete"
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("atlas: {}\nstatus: {}\n", self.atlas, self.status);
        out.push_str(&format!("oracle entries: {}\n", self.oracle_entries));
        if let Some(n) = &self.oracle_normalization {
            out.push_str(&format!("oracle normalization: {n}\n"));
        }
        out.push_str("\nproducts\n");
        let rows: Vec<Vec<String>> = self
            .products
            .iter()
            .map(|p| {
                let result = if p.status != "known" {
                    p.status.clone()
                } else if p.result.is_empty() {
                    "0".into()
                } else {
                    let terms: Vec<String> = p
                        .result
                        .iter()
                        .map(|(b, q)| {
                            if q == "1" {
                                b.clone()
                            } else {
                                format!("{q}*{b}")
                            }
                        })
                        .collect();
                    terms.join(" + ")
                };
                vec![p.left.clone(), p.right.clone(), p.degree.clone(), result]
            })
            .collect();
        out.push_str(&table(&["left", "right", "degree", "product"], &rows));
        if !self.missing.is_empty() {
            out.push_str(&format!(
                "\nmissing euler integrals ({})\n",
                self.missing.len()
            ));
            let rows: Vec<Vec<String>> = self
                .missing
                .iter()
                .map(|m| {
                    vec![
                        format!("({})", m.multisector.join(", ")),
                        m.model.clone(),
                        m.monomial.clone(),
                        m.monomial_degree.to_string(),
                        m.rank_e.to_string(),
                        m.dim.to_string(),
                        m.genus.clone(),
                    ]
                })
                .collect();
            out.push_str(&table(
                &[
                    "multisector",
                    "model",
                    "monomial",
                    "degree",
                    "rank_E",
                    "dim",
                    "genus",
                ],
                &rows,
            ));
            out.push_str("\noracle template\n");
            for m in &self.missing {
                out.push_str(&format!(
                    "[[euler_oracle]]\nlabels = [\"{}\"]\nmonomial = \"{}\"\nvalue = \"?\"\n",
                    m.multisector.join("\", \""),
                    m.monomial
                ));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
}

impl Check {
    fn new(name: &str, passed: bool, summary: String, details: Vec<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            summary,
            details,
        }
    }

    fn errored(name: &str, e: &Error) -> Self {
        Check::new(name, false, format!("error: {e}"), Vec::new())
    }
}

pub const CONVENTION_NOTES: [&str; 2] = [
    "shift-sum identity: checked as 2(iota_g + iota_g^-1) = (2n+1) - dim X_(g). \
     The form 2n - dim X_(g) is off by one, since every fixed locus contains the \
     non-complex direction (on S^3/Z_3: 2(1/3 + 2/3) = 2 = 3 - 1).",
    "pairing degree convention: H^d pairs with H^(D-d) where D = 2n+1 is the real \
     dimension. With 2n - d the integrand of a twisted-sector pairing falls one \
     degree short of the sector's top degree.",
];

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub atlas: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

fn names(coh: &OrbCohomology, atlas: &SectorAtlas, idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|&b| coh.basis_name(atlas, b)).collect();
    format!("({})", parts.join(", "))
}

impl VerifyReport {
    pub fn build(atlas: &SectorAtlas, ring: Result<OrbRing<'_>>, verbose: bool) -> Self {
        let mut checks = Vec::new();
        let keep = |details: Vec<String>, passed: bool| {
            if passed && !verbose {
                Vec::new()
            } else {
                details
            }
        };

        match cross_r_compare(atlas) {
            Ok(r) => checks.push(Check::new(
                "cross-R comparison",
                r.passed(),
                format!("X and X x R agree: {r}"),
                r.differing_degrees
                    .iter()
                    .map(|d| format!("degree {d}: {} vs {}", r.x_total.get(d), r.y_total.get(d)))
                    .collect(),
            )),
            Err(e) => checks.push(Check::errored("cross-R comparison", &e)),
        }

        match duality_report(atlas) {
            Ok(r) => {
                let passed = r.passed();
                let details = r
                    .rows
                    .iter()
                    .filter(|row| verbose || !row.matches())
                    .map(|row| {
                        format!(
                            "sector {} degree {} (dim {}) <-> sector {} degree {} (dim {})",
                            atlas.label_name(&atlas.sector(row.sector).label),
                            row.degree,
                            row.dim,
                            atlas.label_name(&atlas.sector(row.partner).label),
                            row.partner_degree,
                            row.partner_dim
                        )
                    })
                    .collect();
                let summary = format!(
                    "{} degree pairs, total series {}symmetric about {}",
                    r.rows.len(),
                    if r.total_symmetric { "" } else { "not " },
                    r.ambient_dim
                );
                checks.push(Check::new(
                    "poincare duality dimensions",
                    passed,
                    summary,
                    details,
                ));
            }
            Err(e) => checks.push(Check::errored("poincare duality dimensions", &e)),
        }

        let d_total = int(atlas.ambient_dim() as i64);
        let mut bad = Vec::new();
        for m in atlas.multisectors() {
            if m.rank_e % 2 != 0 {
                bad.push(format!(
                    "{}: rank {}",
                    atlas.triple_name(&m.labels),
                    m.rank_e
                ));
            }
        }
        let passed = bad.is_empty();
        checks.push(Check::new(
            "obstruction rank even and non-negative",
            passed,
            format!("{} multisectors", atlas.multisectors().len()),
            bad,
        ));

        let mut bad = Vec::new();
        for m in atlas.multisectors() {
            let iotas = m.sector_indices.map(|s| &atlas.sector(s).iota);
            let a = obstruction_rank(m.dim(), atlas.ambient_dim(), iotas);
            let b = obstruction_rank_line_model(m.dim(), atlas.ambient_dim(), iotas);
            if a.is_err() || a != b {
                bad.push(format!("{}: {a:?} vs {b:?}", atlas.triple_name(&m.labels)));
            }
        }
        let passed = bad.is_empty();
        checks.push(Check::new(
            "obstruction rank on X x R",
            passed,
            "rank unchanged by the line factor".into(),
            bad,
        ));

        let bad: Vec<String> = atlas
            .multisectors()
            .iter()
            .filter(|m| !m.genus.is_integer() || m.genus < Rational::from_integer(0.into()))
            .map(|m| format!("{}: genus {}", atlas.triple_name(&m.labels), m.genus))
            .collect();
        let passed = bad.is_empty();
        checks.push(Check::new(
            "genus non-negative integer",
            passed,
            format!("{} multisectors", atlas.multisectors().len()),
            bad,
        ));

        let mut bad = Vec::new();
        let mut detail_ok = Vec::new();
        for (i, s) in atlas.sectors().iter().enumerate() {
            let name = atlas.label_name(&s.label);
            match atlas.inverse_sector(i) {
                None => bad.push(format!("sector {name}: no inverse sector")),
                Some(j) => {
                    let lhs = int(2) * (&s.iota + &atlas.sector(j).iota);
                    let rhs = &d_total - int(s.dim as i64);
                    let line =
                        format!("sector {name}: 2(iota_g + iota_g^-1) = {lhs}, D - dim = {rhs}");
                    if lhs == rhs {
                        detail_ok.push(line);
                    } else {
                        bad.push(line);
                    }
                }
            }
        }
        let passed = bad.is_empty();
        let details = if passed { keep(detail_ok, true) } else { bad };
        checks.push(Check::new(
            "shift-sum identity",
            passed,
            format!("{} sectors", atlas.sectors().len()),
            details,
        ));

        let mut bad = Vec::new();
        let mut with_rotation = 0;
        for s in atlas.sectors() {
            if let Some(rot) = &s.rotation {
                with_rotation += 1;
                if s.iota.is_integer() != shift_is_integral_by_exponents(&rot.exponents, rot.order)
                {
                    bad.push(format!("sector {}", atlas.label_name(&s.label)));
                }
            }
        }
        let passed = bad.is_empty();
        checks.push(Check::new(
            "shift integrality from exponents",
            passed,
            format!(
                "rotation data on {with_rotation} of {} sectors",
                atlas.sectors().len()
            ),
            bad,
        ));

        match ring {
            Err(e) => {
                for name in [
                    "degree filter",
                    "pairing nondegeneracy",
                    "associativity",
                    "unit law",
                    "degree additivity",
                ] {
                    checks.push(Check::errored(name, &e));
                }
            }
            Ok(ring) => ring_checks(atlas, &ring, verbose, &mut checks),
        }

        VerifyReport {
            atlas: atlas.name().to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
            notes: CONVENTION_NOTES.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("atlas: {}\n\n", self.atlas);
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.summary
            ));
            for d in &c.details {
                out.push_str(&format!("       {d}\n"));
            }
        }
        out.push_str("\nnotes\n");
        for (i, n) in self.notes.iter().enumerate() {
            out.push_str(&format!("{}. {n}\n", i + 1));
        }
        out.push_str(&format!(
            "\nresult: {}\n",
            if self.passed { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn ring_checks(atlas: &SectorAtlas, ring: &OrbRing<'_>, verbose: bool, checks: &mut Vec<Check>) {
    let coh = ring.cohomology();
    match ring.degree_filter_soundness() {
        Ok((examined, bad)) => checks.push(Check::new(
            "degree filter",
            bad.is_empty(),
            format!("{examined} basis triples on multisectors"),
            bad.iter().map(|t| names(coh, atlas, t)).collect(),
        )),
        Err(e) => checks.push(Check::errored("degree filter", &e)),
    }
    match ring.pairing_nondegeneracy() {
        Ok(blocks) => {
            let passed = blocks.iter().all(|b| b.nondegenerate);
            let details = blocks
                .iter()
                .filter(|b| verbose || !b.nondegenerate)
                .map(|b| {
                    format!(
                        "sector {} degree {}: {} x {}{}",
                        atlas.label_name(&atlas.sector(b.sector).label),
                        b.degree,
                        b.size,
                        b.complement_size,
                        if b.nondegenerate { "" } else { " degenerate" }
                    )
                })
                .collect();
            checks.push(Check::new(
                "pairing nondegeneracy",
                passed,
                format!("{} blocks", blocks.len()),
                details,
            ));
        }
        Err(e) => checks.push(Check::errored("pairing nondegeneracy", &e)),
    }
    let table = match ring.structure_constants() {
        Ok(t) => t,
        Err(e) => {
            for name in ["associativity", "unit law", "degree additivity"] {
                checks.push(Check::errored(name, &e));
            }
            return;
        }
    };
    let report = table.associativity_check();
    checks.push(Check::new(
        "associativity",
        report.passed(),
        format!(
            "{} triples checked, {} skipped pending oracle",
            report.checked, report.skipped
        ),
        report
            .violations
            .iter()
            .map(|t| names(coh, atlas, t))
            .collect(),
    ));
    let bad = table.unit_law_failures(ring.unit());
    let missing: Vec<usize> = bad
        .iter()
        .copied()
        .filter(|&x| {
            matches!(table.get(ring.unit(), x), Entry::Missing(_))
                || matches!(table.get(x, ring.unit()), Entry::Missing(_))
        })
        .collect();
    let failures: Vec<String> = bad
        .iter()
        .filter(|x| !missing.contains(x))
        .map(|&x| coh.basis_name(atlas, x))
        .collect();
    checks.push(Check::new(
        "unit law",
        failures.is_empty(),
        format!(
            "unit {} on {} classes",
            coh.basis_name(atlas, ring.unit()),
            table.size()
        ),
        failures,
    ));
    let mut bad: Vec<String> = table
        .degree_additivity_failures()
        .iter()
        .map(|p| names(coh, atlas, p))
        .collect();
    bad.extend(
        table
            .sector_selection_failures(atlas)
            .iter()
            .map(|p| format!("{} off the product sector", names(coh, atlas, p))),
    );
    checks.push(Check::new(
        "degree additivity",
        bad.is_empty(),
        format!(
            "{} known products",
            table.size() * table.size() - table.missing_count()
        ),
        bad,
    ));
}
