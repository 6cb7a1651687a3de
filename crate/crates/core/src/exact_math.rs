//! Exact rational arithmetic and rationally graded dimension series.
//!
//! Every degree, degree-shifting number and integration weight in the crate
//! is a [`Rational`] backed by arbitrary-precision integers. Degrees are
//! compared exactly, never through floats.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fractional part `q - floor(q)`, always in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

pub fn is_integer(q: &Rational) -> bool {
    q.is_integer()
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    use num::ToPrimitive;
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Renders `q` as `p/q`, or as a bare integer when the denominator is 1.
pub fn fmt_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `"p/q"`, `"-p/q"` or `"n"`. Decimal points and floats are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::schema(text, "expected an exact fraction \"p/q\" or an integer");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::schema(text, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// A finitely supported map from rational degree to dimension, i.e. a
/// Poincaré polynomial with rational exponents. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    entries: BTreeMap<Rational, u64>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u64)>,
    {
        let mut out = Self::new();
        for (deg, dim) in pairs {
            out.add_at(deg, dim);
        }
        out
    }

    /// Convenience for integer-degree series, e.g. Betti numbers.
    pub fn from_int_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, u64)>,
    {
        Self::from_pairs(pairs.into_iter().map(|(d, v)| (int(d), v)))
    }

    pub fn add_at(&mut self, degree: Rational, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.entries.entry(degree).or_insert(0) += dim;
    }

    pub fn get(&self, degree: &Rational) -> u64 {
        self.entries.get(degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.entries.iter().map(|(k, v)| (k, *v))
    }

    pub fn degrees(&self) -> impl Iterator<Item = &Rational> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn max_degree(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    /// Every degree `k` moves to `k + s`.
    pub fn shift(&self, s: &Rational) -> GradedDims {
        GradedDims {
            entries: self.entries.iter().map(|(k, v)| (k + s, *v)).collect(),
        }
    }

    pub fn sum(&self, other: &GradedDims) -> GradedDims {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_at(k.clone(), v);
        }
        out
    }

    /// Künneth product over a field.
    pub fn convolve(&self, other: &GradedDims) -> GradedDims {
        let mut out = GradedDims::new();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add_at(a + b, x * y);
            }
        }
        out
    }

    /// Degrees where `self` and `other` disagree, in increasing order.
    pub fn differing_degrees(&self, other: &GradedDims) -> Vec<Rational> {
        let mut keys: Vec<&Rational> = self.degrees().chain(other.degrees()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter(|k| self.get(k) != other.get(k))
            .cloned()
            .collect()
    }

    /// `d ↦ total - d` leaves the series unchanged.
    pub fn is_symmetric_about(&self, total: &Rational) -> bool {
        self.iter().all(|(k, v)| self.get(&(total - k)) == v)
    }

    /// Deterministic rendering such as `1 + t^{2/3} + 2*t^3`.
    pub fn series_string(&self) -> String {
        if self.entries.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .entries
            .iter()
            .map(|(deg, dim)| {
                let power = if deg.is_zero() {
                    None
                } else if deg.is_one() {
                    Some("t".to_string())
                } else {
                    let e = fmt_rational(deg);
                    if e.len() == 1 {
                        Some(format!("t^{e}"))
                    } else {
                        Some(format!("t^{{{e}}}"))
                    }
                };
                match (power, dim) {
                    (None, d) => d.to_string(),
                    (Some(p), 1) => p,
                    (Some(p), d) => format!("{d}*{p}"),
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// True when no degree is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.degrees().all(|d| !d.is_negative())
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.series_string())
    }
}
