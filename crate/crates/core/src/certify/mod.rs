//! Per-level infiniteness certificates.
//!
//! A level is certified either through its odd part `q ≥ 7`, where the twist
//! on a two-dimensional tadpole block generates an infinite Burau image of
//! `B_3`, or for `p = 4k` through an indefinite invariant Hermitian form on
//! a five-dimensional block once every small invariant subspace has been
//! ruled out.

pub mod burau;
pub mod cyclotomic;
pub mod even;
pub mod odd;

pub use burau::{
    burau_closure_oracle, burau_is_finite, burau_matrices, parameter_with_minus_order, BurauImage,
    ClosureOutcome,
};
pub use even::{eigenvalue_tuple, even_certificate, scalar_obstruction, EigenLabel, ScalarCheck};
pub use odd::{odd_certificate, odd_part};

use serde::{Deserialize, Serialize};

use crate::hermitian::GramProfile;
use crate::roots::RootOfUnity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Resolution {
    ScalarObstructed,
    FormIndefiniteOnSpan,
    FormIndefiniteOnComplement,
    Unresolved,
}

impl Resolution {
    pub fn as_str(self) -> &'static str {
        match self {
            Resolution::ScalarObstructed => "scalar_obstructed",
            Resolution::FormIndefiniteOnSpan => "form_indefinite_on_span",
            Resolution::FormIndefiniteOnComplement => "form_indefinite_on_complement",
            Resolution::Unresolved => "unresolved",
        }
    }
}

/// One invariant-subspace case of the even route, indexed by its
/// eigenvalue multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub multiset: Vec<EigenLabel>,
    pub resolution: Resolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddDetails {
    pub odd_part: u64,
    pub boundary_color: u32,
    pub loop_colors: [u32; 2],
    pub burau_parameter: RootOfUnity,
    pub burau_finite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenDetails {
    pub k: u64,
    pub ell: i64,
    pub profile: GramProfile,
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Route {
    OddBurau(OddDetails),
    EvenCoxeter(EvenDetails),
    Uncertified { failed: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfinitenessCertificate {
    pub p: u64,
    pub route: Route,
}

impl InfinitenessCertificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self.route, Route::Uncertified { .. })
    }

    pub fn route_name(&self) -> &'static str {
        match self.route {
            Route::OddBurau(_) => "odd_burau",
            Route::EvenCoxeter(_) => "even_coxeter",
            Route::Uncertified { .. } => "uncertified",
        }
    }

    /// Steps that are assumed rather than computed, and known discrepancies
    /// with the sufficient hypotheses usually quoted for this argument.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if let Route::EvenCoxeter(d) = &self.route {
            if 120 % self.p == 0 {
                notes.push(
                    "excluded by the sufficient hypothesis 'p does not divide 120', \
                     but certified by the exact scalar obstruction"
                        .to_string(),
                );
            }
            for c in d
                .cases
                .iter()
                .filter(|c| c.resolution != Resolution::ScalarObstructed)
            {
                let names: Vec<&str> = c.multiset.iter().map(|l| l.as_str()).collect();
                notes.push(format!(
                    "irreducibility of the restriction for {{{}}} is assumed, not computed",
                    names.join(", ")
                ));
            }
        }
        notes
    }

    pub fn record(&self) -> CertificateRecord {
        let mut r = CertificateRecord {
            p: self.p,
            route: self.route_name().to_string(),
            odd_part: None,
            boundary_color: None,
            ell: None,
            signature: None,
            cases: None,
            failed: None,
        };
        match &self.route {
            Route::OddBurau(d) => {
                r.odd_part = Some(d.odd_part);
                r.boundary_color = Some(d.boundary_color);
            }
            Route::EvenCoxeter(d) => {
                r.boundary_color = Some(2 * d.k as u32 - 6);
                r.ell = Some(d.ell);
                r.signature = Some([d.profile.signature.0, d.profile.signature.1]);
                r.cases = Some(
                    d.cases
                        .iter()
                        .map(|c| CaseRecord {
                            multiset: c.multiset.iter().map(|l| l.as_str().to_string()).collect(),
                            resolution: c.resolution.as_str().to_string(),
                        })
                        .collect(),
                );
            }
            Route::Uncertified { failed } => r.failed = Some(failed.clone()),
        }
        r
    }
}

/// Stable JSON form of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub p: u64,
    pub route: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_part: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_color: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cases: Option<Vec<CaseRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub multiset: Vec<String>,
    pub resolution: String,
}

/// Odd route if it applies, else the even route for `p ≡ 0 mod 4`.
pub fn certify_level(p: u64) -> InfinitenessCertificate {
    let odd = odd_certificate(p);
    if odd.is_certified() {
        return odd;
    }
    let Route::Uncertified {
        failed: mut reasons,
    } = odd.route
    else {
        unreachable!()
    };
    if p.is_multiple_of(4) && p > 0 {
        let even = even_certificate(p);
        match even.route {
            Route::Uncertified { failed } => reasons.extend(failed),
            _ => return even,
        }
    } else {
        reasons.push(format!("p = {p} is not divisible by 4"));
    }
    InfinitenessCertificate {
        p,
        route: Route::Uncertified { failed: reasons },
    }
}
