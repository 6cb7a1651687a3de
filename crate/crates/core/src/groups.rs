//! Finite abelian groups presented as products of cyclic groups.

use std::collections::BTreeSet;
use std::fmt;

use num::Integer;

use crate::error::{Error, Result};

/// `Z_{n_1} x ... x Z_{n_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    cyclic_orders: Vec<u64>,
}

/// Residues, one per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u64>,
}

/// `(g1, g2, g3)` with `g1 g2 g3 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub g1: GroupElement,
    pub g2: GroupElement,
    pub g3: GroupElement,
}

impl Triple {
    pub fn as_array(&self) -> [&GroupElement; 3] {
        [&self.g1, &self.g2, &self.g3]
    }
}

impl GroupElement {
    /// Unchecked; validate against a [`GroupSpec`] before use.
    pub fn from_residues(residues: Vec<u64>) -> Self {
        GroupElement { residues }
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            write!(f, "{}", self.residues[0])
        } else {
            let parts: Vec<String> = self.residues.iter().map(u64::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl GroupSpec {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        if cyclic_orders.is_empty() {
            return Err(Error::InvalidPresentation(
                "group needs at least one cyclic factor".into(),
            ));
        }
        if cyclic_orders.contains(&0) {
            return Err(Error::InvalidPresentation(
                "cyclic orders must be at least 1".into(),
            ));
        }
        Ok(GroupSpec { cyclic_orders })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn trivial() -> Self {
        GroupSpec {
            cyclic_orders: vec![1],
        }
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.cyclic_orders.len()],
        }
    }

    /// Reduces arbitrary integers into an element.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        self.check_len(residues.len())?;
        Ok(GroupElement {
            residues: residues
                .iter()
                .zip(&self.cyclic_orders)
                .map(|(&r, &n)| r.rem_euclid(n as i64) as u64)
                .collect(),
        })
    }

    pub fn validate(&self, g: &GroupElement) -> Result<()> {
        self.check_len(g.residues.len())?;
        for (i, (&r, &n)) in g.residues.iter().zip(&self.cyclic_orders).enumerate() {
            if r >= n {
                return Err(Error::MalformedElement(format!(
                    "residue {r} at position {i} is not below {n}"
                )));
            }
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.cyclic_orders.len() {
            return Err(Error::MalformedElement(format!(
                "expected {} residues, got {len}",
                self.cyclic_orders.len()
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_len(a.residues.len())?;
        self.check_len(b.residues.len())?;
        Ok(GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.cyclic_orders)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        })
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            residues: g
                .residues
                .iter()
                .zip(&self.cyclic_orders)
                .map(|(r, n)| (n - r % n) % n)
                .collect(),
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        g.residues.iter().all(|&r| r == 0)
    }

    /// Least `k >= 1` with `g^k = 1`: the lcm over components of `n_i / gcd(n_i, r_i)`.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.residues
            .iter()
            .zip(&self.cyclic_orders)
            .map(|(&r, &n)| n / n.gcd(&r))
            .fold(1, |acc, k| acc.lcm(&k))
    }

    /// All elements in lexicographic residue order, identity first.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut current = vec![0u64; self.cyclic_orders.len()];
        loop {
            out.push(GroupElement {
                residues: current.clone(),
            });
            // odometer, last position fastest
            let mut pos = current.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                current[pos] += 1;
                if current[pos] < self.cyclic_orders[pos] {
                    break;
                }
                current[pos] = 0;
            }
        }
    }

    /// Order of the subgroup generated by `gens`, by closure enumeration.
    pub fn subgroup_order(&self, gens: &[GroupElement]) -> u64 {
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        let mut frontier = vec![self.identity()];
        seen.insert(self.identity());
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self
                    .multiply(&x, g)
                    .expect("generators validated against group");
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len() as u64
    }

    /// One triple per pair `(g1, g2)`, with `g3 = (g1 g2)^{-1}`, in lexicographic order.
    pub fn enumerate_triples(&self) -> Vec<Triple> {
        let elements = self.elements();
        let mut out = Vec::with_capacity(elements.len() * elements.len());
        for g1 in &elements {
            for g2 in &elements {
                let prod = self.multiply(g1, g2).expect("same group");
                out.push(Triple {
                    g1: g1.clone(),
                    g2: g2.clone(),
                    g3: self.inverse(&prod),
                });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(orders: &[u64]) -> GroupSpec {
        GroupSpec::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let z3 = z(&[3]);
        let a = z3.element(&[1]).unwrap();
        let b = z3.element(&[2]).unwrap();
        assert_eq!(z3.multiply(&a, &b).unwrap(), z3.identity());

        let v4 = z(&[2, 2]);
        let x = v4.element(&[1, 0]).unwrap();
        let y = v4.element(&[0, 1]).unwrap();
        assert_eq!(v4.multiply(&x, &y).unwrap(), v4.element(&[1, 1]).unwrap());
        assert_eq!(v4.multiply(&x, &v4.identity()).unwrap(), x);
    }

    #[test]
    fn multiply_rejects_length_mismatch() {
        let v4 = z(&[2, 2]);
        let bad = z(&[3]).element(&[1]).unwrap();
        assert!(matches!(
            v4.multiply(&bad, &v4.identity()),
            Err(Error::MalformedElement(_))
        ));
    }

    fn brute_force_order(g: &GroupSpec, x: &GroupElement) -> u64 {
        let mut acc = x.clone();
        let mut k = 1;
        while !g.is_identity(&acc) {
            acc = g.multiply(&acc, x).unwrap();
            k += 1;
        }
        k
    }

    #[test]
    fn order_examples() {
        let z3 = z(&[3]);
        assert_eq!(z3.element_order(&z3.element(&[1]).unwrap()), 3);
        assert_eq!(z3.element_order(&z3.identity()), 1);
        let z6 = z(&[6]);
        let four = z6.element(&[4]).unwrap();
        assert_eq!(brute_force_order(&z6, &four), 3);
        assert_eq!(z6.element_order(&four), 3);
    }

    #[test]
    fn inverse_examples() {
        let z3 = z(&[3]);
        assert_eq!(
            z3.inverse(&z3.element(&[1]).unwrap()),
            z3.element(&[2]).unwrap()
        );
        assert_eq!(z3.inverse(&z3.identity()), z3.identity());
        let g = z(&[4, 2]);
        assert_eq!(
            g.inverse(&g.element(&[3, 1]).unwrap()),
            g.element(&[1, 1]).unwrap()
        );
    }

    #[test]
    fn subgroup_order_examples() {
        let z3 = z(&[3]);
        let g = z3.element(&[1]).unwrap();
        assert_eq!(z3.subgroup_order(&[g.clone(), g]), 3);
        assert_eq!(z3.subgroup_order(&[z3.identity()]), 1);
        let v4 = z(&[2, 2]);
        let gens = [v4.element(&[1, 0]).unwrap(), v4.element(&[0, 1]).unwrap()];
        assert_eq!(v4.subgroup_order(&gens), 4);
    }

    #[test]
    fn triples_examples() {
        let z3 = z(&[3]);
        let t = z3.enumerate_triples();
        assert_eq!(t.len(), 9);
        let g = z3.element(&[1]).unwrap();
        assert!(t.contains(&Triple {
            g1: g.clone(),
            g2: g.clone(),
            g3: g
        }));

        let trivial = GroupSpec::trivial();
        let e = trivial.identity();
        assert_eq!(
            trivial.enumerate_triples(),
            vec![Triple {
                g1: e.clone(),
                g2: e.clone(),
                g3: e
            }]
        );

        let z2 = z(&[2]);
        let names: Vec<(u64, u64, u64)> = z2
            .enumerate_triples()
            .iter()
            .map(|t| (t.g1.residues[0], t.g2.residues[0], t.g3.residues[0]))
            .collect();
        assert_eq!(names, vec![(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]);
    }

    #[test]
    fn elements_are_sorted_and_complete() {
        let g = z(&[2, 3]);
        let els = g.elements();
        assert_eq!(els.len(), 6);
        assert_eq!(els[0], g.identity());
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }

    fn arb_group() -> impl Strategy<Value = GroupSpec> {
        proptest::collection::vec(1u64..7, 1..3).prop_map(|v| GroupSpec::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn triple_invariants(g in arb_group()) {
            let triples = g.enumerate_triples();
            prop_assert_eq!(triples.len() as u64, g.order() * g.order());
            for t in &triples {
                let p = g.multiply(&g.multiply(&t.g1, &t.g2).unwrap(), &t.g3).unwrap();
                prop_assert!(g.is_identity(&p));
            }
        }

        #[test]
        fn order_invariants(g in arb_group(), seed in proptest::collection::vec(0i64..100, 2)) {
            let x = g.element(&seed[..g.cyclic_orders().len()]).unwrap();
            prop_assert_eq!(g.element_order(&g.inverse(&x)), g.element_order(&x));
            prop_assert_eq!(g.subgroup_order(std::slice::from_ref(&x)), g.element_order(&x));
            prop_assert_eq!(brute_force_order(&g, &x), g.element_order(&x));
        }
    }
}
