//! Independent reference computations for the integration tests. Everything
//! here uses plain integer arithmetic and shares no code with the library
//! beyond reading its results.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use orbcoh::exact_math::Rational;

pub fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Reduced fraction with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Frac(pub i64, pub i64);

impl Frac {
    pub fn new(n: i64, d: i64) -> Frac {
        let g = gcd(n, d).max(1) * d.signum();
        Frac(n / g, d / g)
    }

    pub fn matches(&self, q: &Rational) -> bool {
        let n: i64 = q.numer().try_into().unwrap();
        let d: i64 = q.denom().try_into().unwrap();
        Frac::new(n, d) == *self
    }
}

/// Sector data of `S^{2n+1}/G` for `G = Π Z_{orders[i]}` acting on coordinate
/// `j` through `exp(2πi Σ_i w[i][j] r_i / orders[i])`.
#[derive(Clone, Debug)]
pub struct SphereSector {
    pub residues: Vec<u64>,
    pub fixed: usize,
    pub iota: Frac,
    pub exponent_sum: i64,
    pub element_order: i64,
}

pub fn group_exponent(orders: &[u64]) -> i64 {
    orders.iter().fold(1i64, |acc, &n| lcm(acc, n as i64))
}

/// Rotation angle of each coordinate under `residues`, in units of
/// `1 / group_exponent(orders)`, reduced to `[0, L)`.
pub fn angles(orders: &[u64], weights: &[Vec<i64>], residues: &[u64]) -> Vec<i64> {
    let big_l = group_exponent(orders);
    (0..weights[0].len())
        .map(|j| {
            let mut a = 0i64;
            for (i, &n) in orders.iter().enumerate() {
                a += weights[i][j].rem_euclid(n as i64) * residues[i] as i64 * (big_l / n as i64);
            }
            a.rem_euclid(big_l)
        })
        .collect()
}

/// Order of the subgroup generated by `a` and `b`, by closure.
pub fn generated_order(orders: &[u64], a: &[u64], b: &[u64]) -> u64 {
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier = vec![vec![0u64; orders.len()]];
    while let Some(x) = frontier.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for g in [a, b] {
            let y: Vec<u64> = x
                .iter()
                .zip(g)
                .zip(orders)
                .map(|((x, g), n)| (x + g) % n)
                .collect();
            frontier.push(y);
        }
    }
    seen.len() as u64
}

pub fn element_order(orders: &[u64], g: &[u64]) -> u64 {
    g.iter().zip(orders).fold(1i64, |acc, (&r, &n)| {
        lcm(acc, n as i64 / gcd(r as i64, n as i64))
    }) as u64
}

pub fn sphere_quotient_sectors(orders: &[u64], weights: &[Vec<i64>]) -> Vec<SphereSector> {
    let big_l = group_exponent(orders);
    let total: u64 = orders.iter().product();
    let mut out = Vec::new();
    for flat in 0..total {
        // mixed radix, last factor fastest
        let mut rest = flat;
        let mut residues = vec![0u64; orders.len()];
        for i in (0..orders.len()).rev() {
            residues[i] = rest % orders[i];
            rest /= orders[i];
        }
        let angles = angles(orders, weights, &residues);
        let fixed = angles.iter().filter(|&&a| a == 0).count();
        if fixed == 0 {
            continue;
        }
        let element_order = angles
            .iter()
            .fold(1i64, |acc, &a| lcm(acc, big_l / gcd(a, big_l)));
        let exponent_sum: i64 = angles.iter().map(|a| a * element_order / big_l).sum();
        out.push(SphereSector {
            residues,
            fixed,
            iota: Frac::new(angles.iter().sum(), big_l),
            exponent_sum,
            element_order,
        });
    }
    out
}

/// Twisted sectors of `P(w) x S^1`: one per isotropy fraction `a/b` with some
/// `b | w_j`, with the fixed weights and the degree shift.
pub fn wps_sectors(weights: &[i64]) -> Vec<(Frac, Vec<i64>, Frac)> {
    let mut fracs: Vec<Frac> = Vec::new();
    for &w in weights {
        for k in 0..w {
            let f = Frac::new(k, w);
            if !fracs.contains(&f) {
                fracs.push(f);
            }
        }
    }
    fracs.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    fracs
        .into_iter()
        .map(|f| {
            let fixed: Vec<i64> = weights
                .iter()
                .copied()
                .filter(|w| (f.0 * w) % f.1 == 0)
                .collect();
            // Σ frac(f w_j) over all weights
            let num: i64 = weights.iter().map(|w| (f.0 * w).rem_euclid(f.1)).sum();
            (f, fixed, Frac::new(num, f.1))
        })
        .collect()
}

/// Betti numbers of an odd sphere of dimension `d`, as (degree, dim).
pub fn odd_sphere_betti(d: i64) -> Vec<(i64, u64)> {
    if d == 0 {
        vec![(0, 1)]
    } else {
        vec![(0, 1), (d, 1)]
    }
}

/// Genus of the cover with `k_order` sheets branched at three points, in floating point.
pub fn genus_float(k_order: u64, branch: [u64; 3]) -> f64 {
    let sheets: f64 = branch.iter().map(|&k| k_order as f64 / k as f64).sum();
    (2.0 + k_order as f64 - sheets) / 2.0
}
