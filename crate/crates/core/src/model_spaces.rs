//! Closed-form rational cohomology rings of the spaces that occur as sectors:
//! point, circle, odd spheres, weighted projective spaces and finite products
//! of these, plus user-supplied ring data for anything else.
//!
//! Canonical generators: `s` for the circle, `v` for the top class of an odd
//! sphere, `h` for the hyperplane class of a weighted projective space. A
//! basis element of a product is written as a tensor such as `h^2⊗s`; the
//! unit is always labelled `1`.
//!
//! The top class `h^k` of `P(w_0, ..., w_k)` integrates to `1/(w_0 ... w_k)`.
//! Circles and spheres integrate their top class to 1.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{int, GradedDims, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelSpace {
    Point,
    Circle,
    /// Real dimension, odd and at least 3 (dimension 1 is [`ModelSpace::Circle`]).
    OddSphere(u32),
    WeightedProj(Vec<u64>),
    /// Flattened; never nested, never containing points, at least two factors.
    Product(Vec<ModelSpace>),
    Custom(Box<CustomModel>),
}

/// Ring data supplied by hand for a space outside the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CustomModel {
    pub name: String,
    /// `(label, degree)`; exactly one degree-0 generator, labelled `1`.
    pub generators: Vec<(String, u32)>,
    /// Products not listed are zero unless a factor is the unit.
    pub products: BTreeMap<(String, String), Vec<(String, Rational)>>,
    pub top_integral: Rational,
}

impl ModelSpace {
    pub fn odd_sphere(dim: u32) -> Result<ModelSpace> {
        match dim {
            1 => Ok(ModelSpace::Circle),
            d if d % 2 == 1 => Ok(ModelSpace::OddSphere(d)),
            d => Err(Error::InvalidPresentation(format!(
                "odd sphere of even dimension {d}"
            ))),
        }
    }

    pub fn weighted_proj(weights: Vec<u64>) -> Result<ModelSpace> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidPresentation(
                "weighted projective space needs positive weights".into(),
            ));
        }
        Ok(ModelSpace::WeightedProj(weights))
    }

    /// Flattens nested products and drops point factors.
    pub fn product(factors: Vec<ModelSpace>) -> Result<ModelSpace> {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                ModelSpace::Point => {}
                ModelSpace::Product(inner) => flat.extend(inner),
                ModelSpace::Custom(c) => {
                    return Err(Error::InvalidPresentation(format!(
                        "custom model {} cannot be a product factor",
                        c.name
                    )))
                }
                other => flat.push(other),
            }
        }
        Ok(match flat.len() {
            0 => ModelSpace::Point,
            1 => flat.pop().unwrap(),
            _ => ModelSpace::Product(flat),
        })
    }

    pub fn factors(&self) -> Vec<&ModelSpace> {
        match self {
            ModelSpace::Point => vec![],
            ModelSpace::Product(fs) => fs.iter().collect(),
            other => vec![other],
        }
    }

    pub fn real_dim(&self) -> u32 {
        match self {
            ModelSpace::Point => 0,
            ModelSpace::Circle => 1,
            ModelSpace::OddSphere(d) => *d,
            ModelSpace::WeightedProj(w) => 2 * (w.len() as u32 - 1),
            ModelSpace::Product(fs) => fs.iter().map(ModelSpace::real_dim).sum(),
            ModelSpace::Custom(c) => c.generators.iter().map(|g| g.1).max().unwrap_or(0),
        }
    }

    /// Betti numbers in closed form; products by Künneth convolution.
    pub fn betti(&self) -> GradedDims {
        match self {
            ModelSpace::Point => GradedDims::from_int_pairs([(0, 1)]),
            ModelSpace::Circle => GradedDims::from_int_pairs([(0, 1), (1, 1)]),
            ModelSpace::OddSphere(d) => GradedDims::from_int_pairs([(0, 1), (*d as i64, 1)]),
            ModelSpace::WeightedProj(w) => {
                GradedDims::from_int_pairs((0..w.len() as i64).map(|i| (2 * i, 1)))
            }
            ModelSpace::Product(fs) => fs
                .iter()
                .fold(GradedDims::from_int_pairs([(0, 1)]), |acc, f| {
                    acc.convolve(&f.betti())
                }),
            ModelSpace::Custom(c) => {
                GradedDims::from_int_pairs(c.generators.iter().map(|g| (g.1 as i64, 1)))
            }
        }
    }

    /// Parses the rendering produced by `Display`, e.g. `P(3,3,3) x S^1`.
    /// Names in `custom` resolve to user-supplied models.
    pub fn parse(text: &str, custom: &BTreeMap<String, ModelSpace>) -> Result<ModelSpace> {
        let text = text.trim();
        if let Some(m) = custom.get(text) {
            return Ok(m.clone());
        }
        let normalized = text.replace('×', " x ");
        let parts: Vec<&str> = normalized.split(" x ").map(str::trim).collect();
        let mut factors = Vec::with_capacity(parts.len());
        for part in parts {
            factors.push(Self::parse_factor(part, custom).map_err(|e| match e {
                Error::Schema { message, .. } => Error::schema(text, message),
                other => other,
            })?);
        }
        Self::product(factors)
    }

    fn parse_factor(part: &str, custom: &BTreeMap<String, ModelSpace>) -> Result<ModelSpace> {
        if part == "pt" {
            return Ok(ModelSpace::Point);
        }
        if let Some(m) = custom.get(part) {
            return Ok(m.clone());
        }
        if let Some(d) = part.strip_prefix("S^") {
            let d: u32 = d
                .parse()
                .map_err(|_| Error::schema(part, "bad sphere dimension"))?;
            return Self::odd_sphere(d).map_err(|e| Error::schema(part, e.to_string()));
        }
        if let Some(inner) = part.strip_prefix("P(").and_then(|s| s.strip_suffix(')')) {
            let weights = inner
                .split(',')
                .map(|w| w.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::schema(part, "bad weight list"))?;
            return Self::weighted_proj(weights).map_err(|e| Error::schema(part, e.to_string()));
        }
        Err(Error::schema(part, "unrecognized model space"))
    }

    pub fn ring_table(&self) -> RingTable {
        match self {
            ModelSpace::Custom(c) => RingTable::from_custom(c),
            _ => RingTable::from_catalog(self),
        }
    }
}

impl fmt::Display for ModelSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpace::Point => f.write_str("pt"),
            ModelSpace::Circle => f.write_str("S^1"),
            ModelSpace::OddSphere(d) => write!(f, "S^{d}"),
            ModelSpace::WeightedProj(w) => {
                let ws: Vec<String> = w.iter().map(u64::to_string).collect();
                write!(f, "P({})", ws.join(","))
            }
            ModelSpace::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" x "))
            }
            ModelSpace::Custom(c) => f.write_str(&c.name),
        }
    }
}

/// One basis element of a model's cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    pub degree: u32,
}

/// Multiplication table on a basis of `H^*(model; Q)`. Index 0 is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingTable {
    generators: Vec<Generator>,
    /// Nonzero products only.
    products: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    top_degree: u32,
    top_index: usize,
    top_integral: Rational,
    /// Exponent vectors per basis element for catalog models.
    exponents: Option<Vec<Vec<u32>>>,
}

/// One factor of a catalog model, as seen by the ring table.
#[derive(Clone, Copy, Debug)]
struct FactorShape {
    gen_degree: u32,
    max_exp: u32,
}

fn factor_shape(f: &ModelSpace) -> FactorShape {
    match f {
        ModelSpace::Circle => FactorShape {
            gen_degree: 1,
            max_exp: 1,
        },
        ModelSpace::OddSphere(d) => FactorShape {
            gen_degree: *d,
            max_exp: 1,
        },
        ModelSpace::WeightedProj(w) => FactorShape {
            gen_degree: 2,
            max_exp: w.len() as u32 - 1,
        },
        _ => unreachable!("flattened catalog factor"),
    }
}

fn factor_label(f: &ModelSpace, exp: u32) -> String {
    match (f, exp) {
        (_, 0) => "1".into(),
        (ModelSpace::Circle, _) => "s".into(),
        (ModelSpace::OddSphere(_), _) => "v".into(),
        (ModelSpace::WeightedProj(_), 1) => "h".into(),
        (ModelSpace::WeightedProj(_), e) => format!("h^{e}"),
        _ => unreachable!("flattened catalog factor"),
    }
}

fn factor_top_integral(f: &ModelSpace) -> Rational {
    match f {
        ModelSpace::WeightedProj(w) => Rational::new(One::one(), w.iter().product::<u64>().into()),
        _ => Rational::one(),
    }
}

impl RingTable {
    fn from_catalog(model: &ModelSpace) -> RingTable {
        let factors = model.factors();
        let shapes: Vec<FactorShape> = factors.iter().map(|f| factor_shape(f)).collect();

        let mut exps: Vec<Vec<u32>> = vec![vec![]];
        for s in &shapes {
            exps = exps
                .into_iter()
                .flat_map(|prefix| {
                    (0..=s.max_exp).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        let degree_of =
            |e: &[u32]| -> u32 { e.iter().zip(&shapes).map(|(x, s)| x * s.gen_degree).sum() };
        exps.sort_by(|a, b| degree_of(a).cmp(&degree_of(b)).then_with(|| b.cmp(a)));

        let generators: Vec<Generator> = exps
            .iter()
            .map(|e| {
                let label = if e.iter().all(|&x| x == 0) {
                    "1".to_string()
                } else {
                    let parts: Vec<String> = e
                        .iter()
                        .zip(&factors)
                        .map(|(&x, f)| factor_label(f, x))
                        .collect();
                    parts.join("⊗")
                };
                Generator {
                    label,
                    degree: degree_of(e),
                }
            })
            .collect();

        let index: BTreeMap<&Vec<u32>, usize> =
            exps.iter().enumerate().map(|(i, e)| (e, i)).collect();

        let mut products = BTreeMap::new();
        for (i, a) in exps.iter().enumerate() {
            for (j, b) in exps.iter().enumerate() {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if sum.iter().zip(&shapes).any(|(x, s)| *x > s.max_exp) {
                    continue;
                }
                // Koszul sign from moving b_j past a_k for k > j
                let mut sign_exp = 0u32;
                for k in 0..shapes.len() {
                    for j2 in 0..k {
                        sign_exp += (a[k] * shapes[k].gen_degree) * (b[j2] * shapes[j2].gen_degree);
                    }
                }
                let coeff = if sign_exp % 2 == 0 { int(1) } else { int(-1) };
                products.insert((i, j), vec![(index[&sum], coeff)]);
            }
        }

        let top_index = exps.len() - 1;
        let top_integral = factors
            .iter()
            .map(|f| factor_top_integral(f))
            .fold(Rational::one(), |acc, x| acc * x);
        RingTable {
            top_degree: generators[top_index].degree,
            generators,
            products,
            top_index,
            top_integral,
            exponents: Some(exps),
        }
    }

    fn from_custom(c: &CustomModel) -> RingTable {
        let mut gens: Vec<Generator> = c
            .generators
            .iter()
            .map(|(l, d)| Generator {
                label: l.clone(),
                degree: *d,
            })
            .collect();
        gens.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| (a.label != "1").cmp(&(b.label != "1")))
                .then_with(|| a.label.cmp(&b.label))
        });
        let index: BTreeMap<&str, usize> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.label.as_str(), i))
            .collect();
        let mut products = BTreeMap::new();
        for i in 0..gens.len() {
            products.insert((0, i), vec![(i, int(1))]);
            products.insert((i, 0), vec![(i, int(1))]);
        }
        for ((l, r), res) in &c.products {
            let (Some(&i), Some(&j)) = (index.get(l.as_str()), index.get(r.as_str())) else {
                continue;
            };
            let terms: Vec<(usize, Rational)> = res
                .iter()
                .filter_map(|(lab, q)| index.get(lab.as_str()).map(|&k| (k, q.clone())))
                .filter(|(_, q)| !q.is_zero())
                .collect();
            if terms.is_empty() {
                products.remove(&(i, j));
            } else {
                products.insert((i, j), terms);
            }
        }
        let top_index = gens.len() - 1;
        RingTable {
            top_degree: gens[top_index].degree,
            generators: gens,
            products,
            top_index,
            top_integral: c.top_integral.clone(),
            exponents: None,
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        let label = label.replace('*', "⊗");
        self.generators.iter().position(|g| g.label == label)
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn top_index(&self) -> usize {
        self.top_index
    }

    pub fn top_integral(&self) -> &Rational {
        &self.top_integral
    }

    /// Product of two basis elements as a sparse combination.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.products.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn zero_vector(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.len()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = self.zero_vector();
        v[i] = Rational::one();
        v
    }

    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (k, c) in self.product(i, j) {
                    out[*k] += x * y * c;
                }
            }
        }
        out
    }

    /// Integral over the model: top coefficient times the top normalization.
    pub fn integrate(&self, v: &[Rational]) -> Rational {
        &v[self.top_index] * &self.top_integral
    }

    /// Graded commutativity and associativity on all basis elements.
    pub fn check_ring_axioms(&self) -> std::result::Result<(), String> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                let ab = self.multiply(&self.basis_vector(i), &self.basis_vector(j));
                let ba = self.multiply(&self.basis_vector(j), &self.basis_vector(i));
                let sign = if (self.generators[i].degree * self.generators[j].degree) % 2 == 0 {
                    int(1)
                } else {
                    int(-1)
                };
                let ba_signed: Vec<Rational> = ba.iter().map(|x| x * &sign).collect();
                if ab != ba_signed {
                    return Err(format!(
                        "{} and {} do not graded-commute",
                        self.generators[i].label, self.generators[j].label
                    ));
                }
                for k in 0..n {
                    let left = self.multiply(&ab, &self.basis_vector(k));
                    let bc = self.multiply(&self.basis_vector(j), &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), &bc);
                    if left != right {
                        return Err(format!(
                            "associativity fails on ({}, {}, {})",
                            self.generators[i].label,
                            self.generators[j].label,
                            self.generators[k].label
                        ));
                    }
                }
            }
        }
        for (i, g) in self.generators.iter().enumerate() {
            for (j, h) in self.generators.iter().enumerate() {
                for (k, _) in self.product(i, j) {
                    if self.generators[*k].degree != g.degree + h.degree {
                        return Err(format!("{} * {} is not homogeneous", g.label, h.label));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Degree-preserving map on canonical generators induced by the inclusion of
/// a face. Each ambient basis element maps to one sub basis element or to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictionMap {
    images: Vec<Option<usize>>,
    target_len: usize,
}

impl RestrictionMap {
    pub fn image(&self, i: usize) -> Option<usize> {
        self.images[i]
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.target_len];
        for (i, x) in v.iter().enumerate() {
            if let Some(k) = self.images[i] {
                out[k] += x;
            }
        }
        out
    }

    pub fn identity(len: usize) -> RestrictionMap {
        RestrictionMap {
            images: (0..len).map(Some).collect(),
            target_len: len,
        }
    }
}

fn is_sub_multiset(sub: &[u64], ambient: &[u64]) -> bool {
    let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
    for w in ambient {
        *counts.entry(*w).or_default() += 1;
    }
    for w in sub {
        let c = counts.entry(*w).or_default();
        *c -= 1;
        if *c < 0 {
            return false;
        }
    }
    true
}

/// Restriction along a catalog-recognized inclusion `sub ⊂ ambient`:
/// weighted projective subspaces on a weight subset, lower spheres in higher
/// ones, factorwise on products, anything onto a point, and the identity.
pub fn restriction_map(ambient: &ModelSpace, sub: &ModelSpace) -> Result<RestrictionMap> {
    let unsupported = || Error::UnsupportedRestriction {
        ambient: ambient.to_string(),
        sub: sub.to_string(),
    };
    let a_table = ambient.ring_table();
    if ambient == sub {
        return Ok(RestrictionMap::identity(a_table.len()));
    }
    if *sub == ModelSpace::Point {
        let mut images = vec![None; a_table.len()];
        images[0] = Some(0);
        return Ok(RestrictionMap {
            images,
            target_len: 1,
        });
    }
    let a_factors = ambient.factors();
    let s_factors = sub.factors();
    if a_factors.len() != s_factors.len()
        || matches!(ambient, ModelSpace::Custom(_))
        || matches!(sub, ModelSpace::Custom(_))
    {
        return Err(unsupported());
    }
    // per factor: largest exponent that survives
    let mut keep = Vec::with_capacity(a_factors.len());
    for (a, s) in a_factors.iter().zip(&s_factors) {
        let limit = match (a, s) {
            (ModelSpace::WeightedProj(wa), ModelSpace::WeightedProj(ws))
                if is_sub_multiset(ws, wa) =>
            {
                ws.len() as u32 - 1
            }
            (ModelSpace::Circle, ModelSpace::Circle) => 1,
            (ModelSpace::OddSphere(_), ModelSpace::Circle) => 0,
            (ModelSpace::OddSphere(da), ModelSpace::OddSphere(ds)) if ds <= da => {
                u32::from(ds == da)
            }
            _ => return Err(unsupported()),
        };
        keep.push(limit);
    }
    let s_table = sub.ring_table();
    let a_exps = a_table.exponents.as_ref().expect("catalog model");
    let s_exps = s_table.exponents.as_ref().expect("catalog model");
    let s_index: BTreeMap<&Vec<u32>, usize> =
        s_exps.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let images = a_exps
        .iter()
        .map(|e| {
            if e.iter().zip(&keep).all(|(x, k)| x <= k) {
                s_index.get(e).copied()
            } else {
                None
            }
        })
        .collect();
    Ok(RestrictionMap {
        images,
        target_len: s_table.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;

    fn wps(w: &[u64]) -> ModelSpace {
        ModelSpace::weighted_proj(w.to_vec()).unwrap()
    }

    fn catalog() -> Vec<ModelSpace> {
        let base = vec![
            ModelSpace::Point,
            ModelSpace::Circle,
            ModelSpace::OddSphere(3),
            ModelSpace::OddSphere(5),
            wps(&[2, 2]),
            wps(&[3, 3, 3]),
            wps(&[1, 2, 2, 3, 3, 3]),
        ];
        let mut out = base.clone();
        for a in &base {
            for b in &base {
                out.push(ModelSpace::product(vec![a.clone(), b.clone()]).unwrap());
            }
        }
        out.push(
            ModelSpace::product(vec![
                ModelSpace::Circle,
                ModelSpace::Circle,
                ModelSpace::OddSphere(3),
            ])
            .unwrap(),
        );
        out
    }

    #[test]
    fn betti_examples() {
        assert_eq!(
            wps(&[3, 3, 3]).betti(),
            GradedDims::from_int_pairs([(0, 1), (2, 1), (4, 1)])
        );
        let p = ModelSpace::product(vec![wps(&[3, 3, 3]), ModelSpace::Circle]).unwrap();
        assert_eq!(
            p.betti(),
            GradedDims::from_int_pairs((0..6).map(|d| (d, 1)))
        );
        assert_eq!(
            ModelSpace::OddSphere(3).betti(),
            GradedDims::from_int_pairs([(0, 1), (3, 1)])
        );
    }

    #[test]
    fn product_is_flattened() {
        let inner = ModelSpace::product(vec![ModelSpace::Circle, wps(&[2, 2])]).unwrap();
        let outer =
            ModelSpace::product(vec![inner, ModelSpace::Point, ModelSpace::OddSphere(3)]).unwrap();
        assert_eq!(
            outer,
            ModelSpace::Product(vec![
                ModelSpace::Circle,
                wps(&[2, 2]),
                ModelSpace::OddSphere(3)
            ])
        );
        assert_eq!(outer.real_dim(), 1 + 2 + 3);
        assert_eq!(ModelSpace::odd_sphere(1).unwrap(), ModelSpace::Circle);
        assert!(ModelSpace::odd_sphere(4).is_err());
    }

    #[test]
    fn ring_table_examples() {
        let c = ModelSpace::Circle.ring_table();
        let s = c.index_of("s").unwrap();
        assert!(c.product(s, s).is_empty());

        let p = wps(&[2, 2]).ring_table();
        let h = p.index_of("h").unwrap();
        assert!(p.product(h, h).is_empty());
        assert_eq!(p.top_integral(), &rat(1, 4));

        let m = ModelSpace::product(vec![wps(&[3, 3, 3]), ModelSpace::Circle])
            .unwrap()
            .ring_table();
        let h1 = m.index_of("h⊗1").unwrap();
        let one_s = m.index_of("1⊗s").unwrap();
        let hs = m.index_of("h⊗s").unwrap();
        assert_eq!(m.product(h1, one_s), &[(hs, int(1))]);
        assert_eq!(m.generator(hs).degree, 3);
        assert_eq!(m.generator(0).label, "1");
    }

    #[test]
    fn odd_classes_anticommute_in_products() {
        let m = ModelSpace::product(vec![ModelSpace::Circle, ModelSpace::Circle])
            .unwrap()
            .ring_table();
        let a = m.index_of("s⊗1").unwrap();
        let b = m.index_of("1⊗s").unwrap();
        let top = m.index_of("s⊗s").unwrap();
        assert_eq!(m.product(a, b), &[(top, int(1))]);
        assert_eq!(m.product(b, a), &[(top, int(-1))]);
    }

    #[test]
    fn catalog_rings_satisfy_axioms() {
        for m in catalog() {
            let t = m.ring_table();
            t.check_ring_axioms().unwrap_or_else(|e| panic!("{m}: {e}"));
            assert_eq!(t.generator(0).label, "1");
            assert_eq!(t.generators().iter().filter(|g| g.degree == 0).count(), 1);
            assert_eq!(t.top_degree(), m.real_dim());
        }
    }

    #[test]
    fn betti_matches_ring_table_and_kunneth() {
        for m in catalog() {
            let t = m.ring_table();
            let from_table =
                GradedDims::from_int_pairs(t.generators().iter().map(|g| (g.degree as i64, 1)));
            assert_eq!(from_table, m.betti(), "{m}");
            let top = m.betti().get(&int(m.real_dim() as i64));
            assert_eq!(top, 1, "{m}");
            assert!(
                m.betti().is_symmetric_about(&int(m.real_dim() as i64)),
                "{m}"
            );
            if let ModelSpace::Product(fs) = &m {
                let conv = fs
                    .iter()
                    .fold(GradedDims::from_int_pairs([(0, 1)]), |acc, f| {
                        acc.convolve(&f.betti())
                    });
                assert_eq!(conv, m.betti());
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let big = wps(&[1, 2, 2, 3, 3, 3]);
        let small = wps(&[3, 3, 3]);
        let r = restriction_map(&big, &small).unwrap();
        let bt = big.ring_table();
        let st = small.ring_table();
        assert_eq!(r.image(bt.index_of("h").unwrap()), st.index_of("h"));
        assert_eq!(r.image(bt.index_of("h^2").unwrap()), st.index_of("h^2"));
        assert_eq!(r.image(bt.index_of("h^3").unwrap()), None);

        let id = restriction_map(&ModelSpace::Circle, &ModelSpace::Circle).unwrap();
        assert_eq!(id, RestrictionMap::identity(2));

        let a = ModelSpace::product(vec![big, ModelSpace::Circle]).unwrap();
        let b = ModelSpace::product(vec![small, ModelSpace::Circle]).unwrap();
        let r = restriction_map(&a, &b).unwrap();
        let at = a.ring_table();
        let bt = b.ring_table();
        assert_eq!(r.image(at.index_of("h⊗s").unwrap()), bt.index_of("h⊗s"));
        assert_eq!(r.image(at.index_of("h^3⊗s").unwrap()), None);

        let r = restriction_map(&ModelSpace::OddSphere(3), &ModelSpace::Circle).unwrap();
        assert_eq!(r.image(1), None);
        assert_eq!(r.image(0), Some(0));
    }

    #[test]
    fn restriction_rejects_unrecognized_inclusions() {
        assert!(matches!(
            restriction_map(&wps(&[2, 2]), &wps(&[3, 3])),
            Err(Error::UnsupportedRestriction { .. })
        ));
        assert!(restriction_map(&ModelSpace::Circle, &ModelSpace::OddSphere(3)).is_err());
        assert!(restriction_map(&ModelSpace::Circle, &wps(&[2])).is_err());
    }

    #[test]
    fn restrictions_are_unital_ring_maps() {
        let pairs = vec![
            (wps(&[1, 2, 2, 3, 3, 3]), wps(&[3, 3, 3])),
            (wps(&[1, 2, 2, 3, 3, 3]), wps(&[2, 2])),
            (ModelSpace::OddSphere(5), ModelSpace::OddSphere(3)),
            (ModelSpace::OddSphere(5), ModelSpace::Circle),
            (ModelSpace::OddSphere(3), ModelSpace::Point),
            (
                ModelSpace::product(vec![wps(&[1, 2, 2, 3, 3, 3]), ModelSpace::Circle]).unwrap(),
                ModelSpace::product(vec![wps(&[2, 2]), ModelSpace::Circle]).unwrap(),
            ),
        ];
        for (a, s) in pairs {
            let r = restriction_map(&a, &s).unwrap();
            let at = a.ring_table();
            let st = s.ring_table();
            assert_eq!(r.apply(&at.basis_vector(0)), st.basis_vector(0));
            for i in 0..at.len() {
                for j in 0..at.len() {
                    let xy = at.multiply(&at.basis_vector(i), &at.basis_vector(j));
                    let lhs = r.apply(&xy);
                    let rhs =
                        st.multiply(&r.apply(&at.basis_vector(i)), &r.apply(&at.basis_vector(j)));
                    assert_eq!(lhs, rhs, "{a} -> {s} on ({i}, {j})");
                }
            }
        }
    }

    #[test]
    fn display_round_trips_through_parse() {
        let none = BTreeMap::new();
        for m in catalog() {
            assert_eq!(ModelSpace::parse(&m.to_string(), &none).unwrap(), m);
        }
        assert!(ModelSpace::parse("Q(1,2)", &none).is_err());
    }
}
