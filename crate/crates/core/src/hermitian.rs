//! Sign profile of the invariant Hermitian form on the five-dimensional
//! tadpole block `W_{1, 4k, (2k-6)}`.
//!
//! The basis `u_0, …, u_4` has loop colors `k-3, …, k+1` and consecutive
//! norms satisfy
//!
//! ```text
//! <u_{s+1}, u_{s+1}> / <u_s, u_s> = [2k-4+s][s+1] / ([k-1+s][k-2+s]),   s = 0..3
//! ```
//!
//! so every sign is a product of four quantum-integer signs. `<u_0, u_0>` is
//! normalised to be positive.

use num_integer::Integer;
use serde::Serialize;

use crate::roots::{quantum_integer_sign, Sign};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramProfile {
    pub p: u64,
    pub ell: i64,
    pub ratios: [Sign; 4],
    pub diagonal_signs: [Sign; 5],
    /// `(n_plus, n_minus)`.
    pub signature: (u32, u32),
}

impl GramProfile {
    pub fn is_indefinite(&self) -> bool {
        self.signature.0 > 0 && self.signature.1 > 0
    }

    /// Whether the form restricted to the span of the given basis vectors is
    /// indefinite. The basis is orthogonal, so this reads off the diagonal.
    pub fn indefinite_on(&self, indices: &[usize]) -> bool {
        let has = |s| indices.iter().any(|&i| self.diagonal_signs[i] == s);
        has(Sign::Positive) && has(Sign::Negative)
    }
}

fn quarter(p: u64) -> Result<u64> {
    if !p.is_multiple_of(4) || p == 0 {
        return Err(Error::InvalidLevel {
            p,
            reason: "the five-dimensional block needs p divisible by 4",
        });
    }
    Ok(p / 4)
}

/// Sign of `<u_{s+1}, u_{s+1}> / <u_s, u_s>`.
pub fn gram_ratio_sign(s: usize, p: u64, ell: i64) -> Result<Sign> {
    assert!(s < 4, "ratio index must be in 0..4");
    let k = quarter(p)? as i64;
    let s = s as i64;
    let mut sign = Sign::Positive;
    for n in [2 * k - 4 + s, s + 1, k - 1 + s, k - 2 + s] {
        let f = quantum_integer_sign(n, p, ell)?;
        if f == Sign::Zero {
            return Err(Error::DegenerateDenominator { p, ell });
        }
        sign = sign * f;
    }
    Ok(sign)
}

pub fn gram_profile(p: u64, ell: i64) -> Result<GramProfile> {
    let mut ratios = [Sign::Positive; 4];
    for (s, r) in ratios.iter_mut().enumerate() {
        *r = gram_ratio_sign(s, p, ell)?;
    }
    let mut diagonal_signs = [Sign::Positive; 5];
    for s in 0..4 {
        diagonal_signs[s + 1] = diagonal_signs[s] * ratios[s];
    }
    let n_plus = diagonal_signs
        .iter()
        .filter(|&&d| d == Sign::Positive)
        .count() as u32;
    Ok(GramProfile {
        p,
        ell,
        ratios,
        diagonal_signs,
        signature: (n_plus, 5 - n_plus),
    })
}

/// Smallest root selector `ℓ` making the form indefinite.
///
/// Odd `ℓ` coprime to `2p` in the window `4k/3 < ℓ < 2k` are tried first,
/// then every odd `ℓ` coprime to `2p` in `(0, 2p)`. Returns `None` when the
/// form is definite for every choice, or when `p` is not a multiple of 4.
pub fn find_indefinite_ell(p: u64) -> Option<i64> {
    let k = quarter(p).ok()? as i64;
    let order = 2 * p as i64;
    let candidates = |lo: i64, hi: i64| (lo..hi).filter(move |l| l % 2 == 1 && l.gcd(&order) == 1);
    let indefinite = |l: &i64| {
        gram_profile(p, *l)
            .map(|g| g.is_indefinite())
            .unwrap_or(false)
    };
    // 4k/3 < ℓ < 2k
    let window = candidates(4 * k / 3 + 1, 2 * k).find(indefinite);
    window.or_else(|| candidates(1, order).find(indefinite))
}
