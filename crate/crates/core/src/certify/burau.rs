//! Reduced Burau representation of `B_3` at a root of unity, and an exact
//! breadth-first closure oracle for the finiteness of its image.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::cyclotomic::{CyclotomicRing, Elem, Mat2};
use crate::roots::RootOfUnity;

/// Images of `σ_1, σ_2` under the reduced Burau representation at `q`:
///
/// ```text
/// σ_1 = [ -q  1 ]      σ_2 = [ 1   0 ]
///       [  0  1 ]            [ q  -q ]
/// ```
///
/// Both have characteristic polynomial `(x - 1)(x + q)`.
#[derive(Debug, Clone)]
pub struct BurauImage {
    pub parameter: RootOfUnity,
    pub ring: CyclotomicRing,
    pub sigma1: Mat2,
    pub sigma2: Mat2,
    /// `-q = 1`: the two eigenvalues collide.
    pub degenerate: bool,
}

pub fn burau_matrices(q: RootOfUnity) -> BurauImage {
    let (e, n) = q.reduced();
    let ring = CyclotomicRing::new(n);
    let q_elem = ring.root(e as i64);
    let mq = ring.neg(&q_elem);
    BurauImage {
        parameter: q,
        sigma1: [mq.clone(), ring.one(), ring.zero(), ring.one()],
        sigma2: [ring.one(), ring.zero(), q_elem, mq],
        degenerate: (-q).is_one(),
        ring,
    }
}

impl BurauImage {
    fn q_power(&self, k: i64) -> Elem {
        let (e, _) = self.parameter.reduced();
        self.ring.root(e as i64 * k)
    }

    pub fn sigma1_inv(&self) -> Mat2 {
        let r = &self.ring;
        let qi = self.q_power(-1);
        [r.neg(&qi), qi, r.zero(), r.one()]
    }

    pub fn sigma2_inv(&self) -> Mat2 {
        let r = &self.ring;
        [r.one(), r.zero(), r.one(), r.neg(&self.q_power(-1))]
    }

    pub fn braid_relation_holds(&self) -> bool {
        let r = &self.ring;
        let lhs = r.mat_mul(&r.mat_mul(&self.sigma1, &self.sigma2), &self.sigma1);
        let rhs = r.mat_mul(&r.mat_mul(&self.sigma2, &self.sigma1), &self.sigma2);
        lhs == rhs
    }

    /// Whether `m` has characteristic polynomial `(x - 1)(x + q)`, i.e.
    /// trace `1 - q` and determinant `-q`.
    pub fn has_burau_spectrum(&self, m: &Mat2) -> bool {
        let r = &self.ring;
        let q = self.q_power(1);
        r.trace(m) == r.sub(&r.one(), &q) && r.det(m) == r.neg(&q)
    }
}

/// Result of the breadth-first closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureOutcome {
    FiniteOfOrder(usize),
    ExceedsCap,
}

/// Enumerates the group generated by `σ_1^{±1}, σ_2^{±1}` until it closes up
/// or holds more than `cap` elements.
pub fn burau_closure_oracle(q: RootOfUnity, cap: usize) -> ClosureOutcome {
    let image = burau_matrices(q);
    let ring = &image.ring;
    let gens = [
        image.sigma1.clone(),
        image.sigma2.clone(),
        image.sigma1_inv(),
        image.sigma2_inv(),
    ];
    let start = ring.identity();
    let mut seen: HashSet<Mat2> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = ring.mat_mul(&m, g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return ClosureOutcome::ExceedsCap;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    ClosureOutcome::FiniteOfOrder(seen.len())
}

/// The Burau image at `q` is finite exactly when `-q` has order at most 5.
pub fn burau_is_finite(order_of_minus_q: u64) -> bool {
    (1..=5).contains(&order_of_minus_q)
}

/// `q = -ζ_m`, so that `-q` is a primitive `m`-th root of unity.
pub fn parameter_with_minus_order(m: u64) -> RootOfUnity {
    -RootOfUnity::new(m, 1)
}
