//! The Coxeter route for `p = 4k`: twist eigenvalues on the five-dimensional
//! block, scalar obstructions to small invariant subspaces, and the
//! indefinite-form resolution of whatever survives.

use serde::{Deserialize, Serialize};

use super::{Case, EvenDetails, InfinitenessCertificate, Resolution, Route};
use crate::hermitian::{find_indefinite_ell, gram_profile, GramProfile};
use crate::roots::{quantum_parameter, RootOfUnity};
use crate::{Error, Result};

/// The four distinct eigenvalues of the rescaled twist, `ζ = A^{2k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EigenLabel {
    #[serde(rename = "-zeta^4")]
    MinusZeta4,
    #[serde(rename = "zeta")]
    Zeta,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "-zeta")]
    MinusZeta,
}

impl EigenLabel {
    pub const ALL: [EigenLabel; 4] = [
        EigenLabel::MinusZeta4,
        EigenLabel::Zeta,
        EigenLabel::One,
        EigenLabel::MinusZeta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EigenLabel::MinusZeta4 => "-zeta^4",
            EigenLabel::Zeta => "zeta",
            EigenLabel::One => "1",
            EigenLabel::MinusZeta => "-zeta",
        }
    }

    /// Basis indices carrying this eigenvalue.
    pub fn indices(self) -> &'static [usize] {
        match self {
            EigenLabel::MinusZeta4 => &[0, 4],
            EigenLabel::Zeta => &[1],
            EigenLabel::One => &[2],
            EigenLabel::MinusZeta => &[3],
        }
    }

    pub fn of_index(i: usize) -> EigenLabel {
        match i {
            0 | 4 => EigenLabel::MinusZeta4,
            1 => EigenLabel::Zeta,
            2 => EigenLabel::One,
            3 => EigenLabel::MinusZeta,
            _ => panic!("basis index {i} out of range"),
        }
    }
}

fn quarter(p: u64) -> Result<u64> {
    if p == 0 || !p.is_multiple_of(4) {
        return Err(Error::InvalidLevel {
            p,
            reason: "the Coxeter route needs p divisible by 4",
        });
    }
    Ok(p / 4)
}

/// `ζ = A^{2k+1}`, a primitive `2p`-th root of unity.
pub fn zeta(p: u64, ell: i64) -> Result<RootOfUnity> {
    let k = quarter(p)? as i64;
    Ok(quantum_parameter(p, ell)?.pow(2 * k + 1))
}

/// `(-ζ^4, ζ, 1, -ζ, -ζ^4)`: the twist eigenvalues on `u_0, …, u_4` after
/// rescaling by `(-A)^{-k^2+1}`.
pub fn eigenvalue_tuple(p: u64, ell: i64) -> Result<[RootOfUnity; 5]> {
    let z = zeta(p, ell)?;
    let one = RootOfUnity::one(2 * p);
    Ok([-z.pow(4), z, one, -z, -z.pow(4)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarCheck {
    Obstructed,
    Survives,
}

/// Tests whether an invariant subspace spanned by the eigenvectors `indices`
/// (of size `r`) is compatible with the scalar identity
/// `(λ_0 ⋯ λ_4)^{6r} = (∏_{i ∈ S} λ_i)^{30}`.
///
/// Taking the complement replaces `r` by `5 - r` and yields the same
/// condition, so any `r` in `1..=4` is accepted.
pub fn scalar_obstruction(p: u64, ell: i64, indices: &[usize]) -> Result<ScalarCheck> {
    let lambda = eigenvalue_tuple(p, ell)?;
    let r = indices.len() as i64;
    assert!((1..=4).contains(&r), "subspace size must be in 1..=4");
    let one = RootOfUnity::one(2 * p);
    let total = lambda.iter().fold(one, |acc, &l| acc * l);
    let part = indices.iter().fold(one, |acc, &i| acc * lambda[i]);
    Ok(if total.pow(6 * r) == part.pow(30) {
        ScalarCheck::Survives
    } else {
        ScalarCheck::Obstructed
    })
}

/// All eigenvalue multisets of size 1 and 2 drawn from
/// `{-ζ^4, -ζ^4, ζ, 1, -ζ}`, sorted.
pub fn small_multisets() -> Vec<Vec<EigenLabel>> {
    let mut out: Vec<Vec<EigenLabel>> = EigenLabel::ALL.iter().map(|&l| vec![l]).collect();
    for (i, &a) in EigenLabel::ALL.iter().enumerate() {
        for &b in &EigenLabel::ALL[i..] {
            if a != b || a.indices().len() >= 2 {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

/// Every way to pick distinct basis indices realising the multiset.
pub fn realizations(multiset: &[EigenLabel]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &label in multiset {
        let mut next = Vec::new();
        for partial in &out {
            for &i in label.indices() {
                if !partial.contains(&i) {
                    let mut v = partial.clone();
                    v.push(i);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out.sort();
    out.dedup();
    out
}

fn complement(indices: &[usize]) -> Vec<usize> {
    (0..5).filter(|i| !indices.contains(i)).collect()
}

/// Resolves one multiset case against a Gram profile.
pub fn resolve_case(
    p: u64,
    ell: i64,
    multiset: &[EigenLabel],
    profile: &GramProfile,
) -> Result<Resolution> {
    let reals = realizations(multiset);
    let first = &reals[0];
    if scalar_obstruction(p, ell, first)? == ScalarCheck::Obstructed {
        return Ok(Resolution::ScalarObstructed);
    }
    let mut all_span = true;
    for r in &reals {
        if profile.indefinite_on(r) {
            continue;
        }
        if profile.indefinite_on(&complement(r)) {
            all_span = false;
            continue;
        }
        return Ok(Resolution::Unresolved);
    }
    Ok(if all_span {
        Resolution::FormIndefiniteOnSpan
    } else {
        Resolution::FormIndefiniteOnComplement
    })
}

pub fn even_certificate(p: u64) -> InfinitenessCertificate {
    let uncertified = |failed: Vec<String>| InfinitenessCertificate {
        p,
        route: Route::Uncertified { failed },
    };
    let Ok(k) = quarter(p) else {
        return uncertified(vec![format!("p = {p} is not divisible by 4")]);
    };
    if k < 4 {
        return uncertified(vec![format!(
            "k = {k} < 4: the five-dimensional block is unavailable"
        )]);
    }
    let Some(ell) = find_indefinite_ell(p) else {
        return uncertified(vec![format!(
            "the Hermitian form is definite for every admissible ell at p = {p}"
        )]);
    };
    let profile = gram_profile(p, ell).expect("ell returned by the scan is admissible");
    let mut cases = Vec::new();
    let mut failed = Vec::new();
    for multiset in small_multisets() {
        let resolution =
            resolve_case(p, ell, &multiset, &profile).expect("inputs already validated");
        if resolution == Resolution::Unresolved {
            let names: Vec<&str> = multiset.iter().map(|l| l.as_str()).collect();
            failed.push(format!(
                "invariant subspace {{{}}} is not excluded",
                names.join(", ")
            ));
        }
        cases.push(Case {
            multiset,
            resolution,
        });
    }
    if !failed.is_empty() {
        return uncertified(failed);
    }
    InfinitenessCertificate {
        p,
        route: Route::EvenCoxeter(EvenDetails {
            k,
            ell,
            profile,
            cases,
        }),
    }
}
