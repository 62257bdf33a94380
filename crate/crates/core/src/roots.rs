//! Roots of unity as exact `(order, exponent)` pairs, quantum-integer signs and
//! Dehn-twist eigenvalues.
//!
//! Throughout, the level-`p` quantum parameter is `A = exp(2πiℓ/2p)` with `ℓ`
//! odd and coprime to `2p`, i.e. `A = ζ_{2p}^ℓ`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Mul, Neg};

use num_integer::Integer;
use serde::{Deserialize, Serialize, Serializer};

use crate::blocks::Level;
use crate::{Error, Result};

/// The root of unity `ζ_N^e = exp(2πi e / N)`.
///
/// The pair is never reduced by `gcd(e, N)`: products and powers keep the
/// order they were built with, so exponent identities stay readable. Two
/// values compare equal when they agree after lifting both to the lcm of
/// their orders.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    /// # Panics
    ///
    /// Panics if `order == 0`.
    pub fn new(order: u64, exponent: i64) -> Self {
        assert!(order > 0, "root of unity must have positive order");
        let exponent = (exponent as i128).rem_euclid(order as i128) as u64;
        RootOfUnity { order, exponent }
    }

    pub fn one(order: u64) -> Self {
        Self::new(order, 0)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `ζ_N^{e·m}`, kept at order `N`.
    pub fn pow(self, m: i64) -> Self {
        let e = (self.exponent as i128 * m as i128).rem_euclid(self.order as i128);
        RootOfUnity {
            order: self.order,
            exponent: e as u64,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    /// Smallest `m ≥ 1` with `self^m = 1`.
    pub fn multiplicative_order(&self) -> u64 {
        self.order / self.exponent.gcd(&self.order)
    }

    /// Re-express at `order`, which must be a multiple of the current order.
    pub fn lift(self, order: u64) -> Option<Self> {
        if order == 0 || !order.is_multiple_of(self.order) {
            return None;
        }
        Some(RootOfUnity {
            order,
            exponent: self.exponent * (order / self.order),
        })
    }

    /// Fraction `e/N` in lowest terms; equal roots have equal fractions.
    pub fn reduced(&self) -> (u64, u64) {
        let g = self.exponent.gcd(&self.order);
        (self.exponent / g, self.order / g)
    }

    /// Angle as a fraction of a full turn, in `[0, 1)`.
    pub fn turns(&self) -> f64 {
        self.exponent as f64 / self.order as f64
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let theta = std::f64::consts::TAU * self.turns();
        (theta.cos(), theta.sin())
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        let l = self.order.lcm(&other.order);
        self.exponent * (l / self.order) == other.exponent * (l / other.order)
    }
}

impl Eq for RootOfUnity {}

impl Hash for RootOfUnity {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.reduced().hash(state);
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by angle in `[0, 2π)`.
impl Ord for RootOfUnity {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.exponent as u128 * other.order as u128;
        let rhs = other.exponent as u128 * self.order as u128;
        lhs.cmp(&rhs)
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let l = self.order.lcm(&rhs.order);
        let e = self.exponent as u128 * (l / self.order) as u128
            + rhs.exponent as u128 * (l / rhs.order) as u128;
        RootOfUnity {
            order: l,
            exponent: (e % l as u128) as u64,
        }
    }
}

/// `-z = z·ζ_2`; odd orders are lifted to `2N`.
impl Neg for RootOfUnity {
    type Output = RootOfUnity;

    fn neg(self) -> RootOfUnity {
        self * RootOfUnity::new(2, 1)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ_{}^{}", self.order, self.exponent)
    }
}

/// Sign of a real quantity decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn of_f64(x: f64) -> Self {
        if x > 0.0 {
            Sign::Positive
        } else if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Negative
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

/// `A = ζ_{2p}^ℓ`, checking primitivity.
pub fn quantum_parameter(p: u64, ell: i64) -> Result<RootOfUnity> {
    let order = 2 * p;
    if p == 0 || (ell.rem_euclid(order as i64) as u64).gcd(&order) != 1 {
        return Err(Error::NonPrimitiveRoot { ell, order });
    }
    Ok(RootOfUnity::new(order, ell))
}

/// Sign of `sin(2πm/p)` from the position of `m mod p`.
fn sin_sign(m: i64, p: u64) -> Sign {
    let r = m.rem_euclid(p as i64) as u64;
    if r == 0 || 2 * r == p {
        Sign::Zero
    } else if 2 * r < p {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Exact sign of `[n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2})` at
/// `A = exp(2πiℓ/2p)`, which equals `sin(nβ)/sin(β)` with `β = 2πℓ/p`.
pub fn quantum_integer_sign(n: i64, p: u64, ell: i64) -> Result<Sign> {
    quantum_parameter(p, ell)?;
    let den = sin_sign(ell, p);
    if den == Sign::Zero {
        return Err(Error::DegenerateDenominator { p, ell });
    }
    let num = sin_sign((n as i128 * ell as i128).rem_euclid(p as i128) as i64, p);
    Ok(num * den)
}

/// A quantum integer `[n]` at level `p`, root selector `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumInteger {
    pub n: i64,
    pub p: u64,
    pub ell: i64,
    pub sign: Sign,
    /// Float value of `sin(nβ)/sin(β)`; informational only.
    pub magnitude_hint: f64,
}

impl QuantumInteger {
    pub fn new(n: i64, p: u64, ell: i64) -> Result<Self> {
        let sign = quantum_integer_sign(n, p, ell)?;
        let beta = std::f64::consts::TAU * ell as f64 / p as f64;
        Ok(QuantumInteger {
            n,
            p,
            ell,
            sign,
            magnitude_hint: (n as f64 * beta).sin() / beta.sin(),
        })
    }
}

/// Eigenvalue `(-1)^a A^{a(a+2)}` of a Dehn twist on the basis vector whose
/// core curve carries color `a`, as a root of unity of order `2p`.
pub fn twist_eigenvalue(a: u32, p: u32, ell: i64) -> Result<RootOfUnity> {
    let level = Level::new(p)?;
    if !level.contains(a) {
        return Err(Error::InvalidColor { color: a, p });
    }
    let big_a = quantum_parameter(p as u64, ell)?;
    let a = a as i64;
    let sign_shift = if a % 2 == 1 { p as i64 } else { 0 };
    Ok(big_a.pow(a * (a + 2)) * RootOfUnity::new(2 * p as u64, sign_shift))
}

/// Multiplicative order of the twist eigenvalue at `ℓ = 1`; divides `2p`.
pub fn twist_order(a: u32, p: u32) -> Result<u64> {
    Ok(twist_eigenvalue(a, p, 1)?.multiplicative_order())
}
