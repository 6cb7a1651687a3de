//! Degree shifting numbers, the branched-cover genus of a multisector and the
//! real rank of its obstruction bundle.

use num::Signed;

use crate::error::{Error, Result};
use crate::exact_math::{int, to_i64, Rational};
use crate::presentations::{MultiSector, SectorAtlas};

/// `Σ m_i / m_g`, the sum of fractional rotation angles of an element of order `m_g`.
pub fn degree_shift(exponents: &[u64], m_g: u64) -> Result<Rational> {
    if m_g == 0 {
        return Err(Error::ExponentOutOfRange {
            exponent: 0,
            order: 0,
        });
    }
    let mut total = 0u64;
    for &e in exponents {
        if e >= m_g {
            return Err(Error::ExponentOutOfRange {
                exponent: e,
                order: m_g,
            });
        }
        total += e;
    }
    Ok(Rational::new(total.into(), m_g.into()))
}

/// Integrality of the shift read off the exponents: `Σ m_i ≡ 0 (mod m_g)`.
pub fn shift_is_integral_by_exponents(exponents: &[u64], m_g: u64) -> bool {
    exponents.iter().sum::<u64>() % m_g == 0
}

/// Riemann–Hurwitz genus of the cover of the sphere with three branch points
/// of orders `k`, with deck group of order `k_order`.
pub fn genus(k_order: u64, k: [u64; 3]) -> Result<Rational> {
    if k_order == 0 {
        return Err(Error::InvalidBranchData(
            "group order must be positive".into(),
        ));
    }
    for ki in k {
        if ki == 0 || k_order % ki != 0 {
            return Err(Error::InvalidBranchData(format!(
                "branch order {ki} does not divide {k_order}"
            )));
        }
    }
    let sheets: i64 = k.iter().map(|&ki| (k_order / ki) as i64).sum();
    Ok(Rational::new(
        (2 + k_order as i64 - sheets).into(),
        2.into(),
    ))
}

/// Real rank `dim X_(g) - dim X + 2 Σ ι_j` of the obstruction bundle.
pub fn obstruction_rank(dim_sector: u32, dim_x: u32, iotas: [&Rational; 3]) -> Result<i64> {
    let sum: Rational = iotas.iter().copied().sum();
    let value = int(dim_sector as i64) - int(dim_x as i64) + int(2) * sum;
    to_i64(&value).ok_or_else(|| {
        Error::InconsistentAtlas(format!("obstruction rank {value} is not an integer"))
    })
}

/// The same rank computed on the sector times a line inside `X x R`:
/// both dimensions grow by one.
pub fn obstruction_rank_line_model(
    dim_sector: u32,
    dim_x: u32,
    iotas: [&Rational; 3],
) -> Result<i64> {
    obstruction_rank(dim_sector + 1, dim_x + 1, iotas)
}

/// Fills in subgroup order, branch orders, genus, obstruction rank and
/// restriction maps on every multisector.
pub fn annotate_multisectors(mut atlas: SectorAtlas) -> Result<SectorAtlas> {
    let group = atlas.group().clone();
    let dim_x = atlas.ambient_dim();
    let mut annotated = Vec::with_capacity(atlas.multisectors().len());
    for (pos, m) in atlas.multisectors().iter().enumerate() {
        let location = format!("multisectors[{pos}] {}", atlas.triple_name(&m.labels));
        let [a, b, c] = m.sector_indices;
        let sectors = [atlas.sector(a), atlas.sector(b), atlas.sector(c)];
        let k_order = group.subgroup_order(&[m.labels.g1.clone(), m.labels.g2.clone()]);
        let branch_orders = m.labels.as_array().map(|g| group.element_order(g));
        let genus = genus(k_order, branch_orders)?;
        if !genus.is_integer() || genus.is_negative() {
            return Err(Error::invariant(
                &location,
                format!("genus {genus} is not a non-negative integer"),
            ));
        }
        let iotas = sectors.map(|s| &s.iota);
        let rank = obstruction_rank(m.model.real_dim(), dim_x, iotas)
            .map_err(|e| Error::invariant(&location, e.to_string()))?;
        if rank < 0 || rank % 2 != 0 {
            return Err(Error::invariant(
                &location,
                format!("obstruction rank {rank} is not even and non-negative"),
            ));
        }
        let line_rank = obstruction_rank_line_model(m.model.real_dim(), dim_x, iotas)?;
        if line_rank != rank {
            return Err(Error::InconsistentAtlas(format!(
                "{location}: rank {rank} differs from line-model rank {line_rank}"
            )));
        }
        let restrictions = [
            crate::model_spaces::restriction_map(&sectors[0].model, &m.model),
            crate::model_spaces::restriction_map(&sectors[1].model, &m.model),
            crate::model_spaces::restriction_map(&sectors[2].model, &m.model),
        ];
        let [r0, r1, r2] = restrictions;
        let restrictions = [
            r0.map_err(|e| Error::invariant(&location, e.to_string()))?,
            r1.map_err(|e| Error::invariant(&location, e.to_string()))?,
            r2.map_err(|e| Error::invariant(&location, e.to_string()))?,
        ];
        annotated.push(MultiSector {
            k_order,
            branch_orders,
            genus,
            rank_e: rank as u32,
            restrictions: Some(restrictions),
            ..m.clone()
        });
    }
    atlas.replace_multisectors(annotated);
    Ok(atlas)
}
