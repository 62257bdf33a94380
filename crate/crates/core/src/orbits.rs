//! Mapping-class-group orbits of essential simple closed curves on `Σ_g^n`
//! and the resulting bounds on `H^2` of finite quotients.
//!
//! An orbit is determined by the complement: a nonseparating curve (when
//! `g ≥ 1`), or a separating curve cutting the surface into sides of genus
//! `g_1 + g_2 = g` that split the punctures. A side may not be a disk or a
//! once-punctured disk. Punctures are either labeled (pure mapping class
//! group, sides carry puncture sets) or unlabeled (full group, sides carry
//! counts).

use std::fmt;

use num_integer::binomial;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SideData {
    pub genus: u32,
    pub punctures: u32,
    /// Puncture labels `1..=n` in increasing order; `None` when unlabeled.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u32>>,
}

impl SideData {
    fn is_essential(genus: u32, punctures: u32) -> bool {
        !(genus == 0 && punctures <= 1)
    }
}

impl fmt::Display for SideData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.labels {
            Some(l) => {
                let l: Vec<String> = l.iter().map(u32::to_string).collect();
                write!(f, "g{}{{{}}}", self.genus, l.join(","))
            }
            None => write!(f, "g{}n{}", self.genus, self.punctures),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveType {
    NonSeparating,
    Separating(SideData, SideData),
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveType::NonSeparating => f.write_str("nonseparating"),
            CurveType::Separating(a, b) => write!(f, "separating({a}|{b})"),
        }
    }
}

fn check_hyperbolic(g: u32, n: u32) -> Result<()> {
    if 2 * g as i64 + n as i64 <= 2 {
        return Err(Error::NonHyperbolic { g, n });
    }
    Ok(())
}

fn valid_split(g: u32, n: u32, g1: u32, n1: u32) -> bool {
    SideData::is_essential(g1, n1) && SideData::is_essential(g - g1, n - n1)
}

/// `N_{g,n}` from binomial counts: with `S` the number of ordered splits and
/// `F` the number fixed by swapping sides, unordered splits number
/// `(S + F) / 2`.
pub fn count_orbits(g: u32, n: u32, labeled: bool) -> Result<u64> {
    check_hyperbolic(g, n)?;
    let mut ordered = 0u64;
    let mut fixed = 0u64;
    for g1 in 0..=g {
        for n1 in 0..=n {
            if !valid_split(g, n, g1, n1) {
                continue;
            }
            let self_swap = 2 * g1 == g && 2 * n1 == n;
            if labeled {
                ordered += binomial(n as u64, n1 as u64);
                // a labeled split is its own swap only when no punctures move
                if self_swap && n == 0 {
                    fixed += 1;
                }
            } else {
                ordered += 1;
                if self_swap {
                    fixed += 1;
                }
            }
        }
    }
    Ok(u64::from(g >= 1) + (ordered + fixed) / 2)
}

fn side(genus: u32, set: &[u32], labeled: bool) -> SideData {
    SideData {
        genus,
        punctures: set.len() as u32,
        labels: labeled.then(|| set.to_vec()),
    }
}

/// Every orbit type, nonseparating first, then separating types sorted by
/// their smaller side. Brute force over all `(g_1, A)` with `A` a puncture
/// subset, keeping one of each swapped pair.
pub fn enumerate_orbits(g: u32, n: u32, labeled: bool) -> Result<Vec<CurveType>> {
    check_hyperbolic(g, n)?;
    if n > 24 {
        return Err(Error::TooLarge(format!("{n} labeled punctures")));
    }
    let mut seps = std::collections::BTreeSet::new();
    for g1 in 0..=g {
        for mask in 0u32..(1 << n) {
            let inside: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let outside: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 0)
                .map(|i| i + 1)
                .collect();
            if !valid_split(g, n, g1, inside.len() as u32) {
                continue;
            }
            let a = side(g1, &inside, labeled);
            let b = side(g - g1, &outside, labeled);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            seps.insert(CurveType::Separating(a, b));
        }
    }
    let mut out = Vec::with_capacity(seps.len() + 1);
    if g >= 1 {
        out.push(CurveType::NonSeparating);
    }
    out.extend(seps);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H2Bounds {
    pub g: u32,
    pub n: u32,
    /// `N_{g,n}`, unlabeled.
    pub lower_rank: u64,
    /// `n + 1 + N_{g,n}`.
    pub upper_bound: u64,
    /// The upper bound is established only for `g ≥ 4`.
    pub upper_bound_valid: bool,
    /// `lower_rank ≥ 1`, so `H^2` of the quotient by a sufficiently
    /// divisible power subgroup is nonzero.
    pub nonvanishing: bool,
}

pub fn h2_bounds(g: u32, n: u32) -> Result<H2Bounds> {
    let lower_rank = count_orbits(g, n, false)?;
    Ok(H2Bounds {
        g,
        n,
        lower_rank,
        upper_bound: n as u64 + 1 + lower_rank,
        upper_bound_valid: g >= 4,
        nonvanishing: lower_rank >= 1,
    })
}
