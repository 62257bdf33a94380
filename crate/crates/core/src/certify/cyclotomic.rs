//! The ring `Z[ζ_n] = Z[x] / Φ_n(x)` with elements stored as coefficient
//! vectors of length `φ(n)`. Reduction modulo the monic `Φ_n` is exact, so
//! equal elements have identical vectors and can be hashed.

/// Coefficients, lowest degree first, already reduced.
pub type Elem = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRing {
    order: u64,
    /// `Φ_n`, lowest degree first, monic.
    modulus: Vec<i64>,
}

/// `Φ_n(x)` by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n > 0);
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic_poly(d));
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact division");
    quot
}

impl CyclotomicRing {
    pub fn new(order: u64) -> Self {
        CyclotomicRing {
            order,
            modulus: cyclotomic_poly(order),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.dim()]
    }

    pub fn int(&self, c: i64) -> Elem {
        let mut e = self.zero();
        e[0] = c;
        e
    }

    pub fn one(&self) -> Elem {
        self.int(1)
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn root(&self, k: i64) -> Elem {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut poly = vec![0i64; k + 1];
        poly[k] = 1;
        self.reduce(poly)
    }

    fn reduce(&self, mut poly: Vec<i64>) -> Elem {
        let d = self.dim();
        for i in (d..poly.len()).rev() {
            let c = poly[i];
            if c != 0 {
                for (j, &m) in self.modulus.iter().enumerate() {
                    poly[i - d + j] -= c * m;
                }
            }
        }
        poly.resize(d, 0);
        poly
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut prod = vec![0i64; 2 * self.dim()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x.checked_mul(y).expect("cyclotomic coefficient overflow");
            }
        }
        self.reduce(prod)
    }

    /// Float value, for cross-checks.
    pub fn to_complex(&self, a: &Elem) -> (f64, f64) {
        let step = std::f64::consts::TAU / self.order as f64;
        a.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            let t = step * k as f64;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }
}

/// Row-major 2×2 matrix over a cyclotomic ring.
pub type Mat2 = [Elem; 4];

impl CyclotomicRing {
    pub fn identity(&self) -> Mat2 {
        [self.one(), self.zero(), self.zero(), self.one()]
    }

    pub fn mat_mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let dot =
            |a: &Elem, b: &Elem, c: &Elem, d: &Elem| self.add(&self.mul(a, b), &self.mul(c, d));
        [
            dot(&x[0], &y[0], &x[1], &y[2]),
            dot(&x[0], &y[1], &x[1], &y[3]),
            dot(&x[2], &y[0], &x[3], &y[2]),
            dot(&x[2], &y[1], &x[3], &y[3]),
        ]
    }

    pub fn trace(&self, x: &Mat2) -> Elem {
        self.add(&x[0], &x[3])
    }

    pub fn det(&self, x: &Mat2) -> Elem {
        self.sub(&self.mul(&x[0], &x[3]), &self.mul(&x[1], &x[2]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(7).len(), 7);
    }

    #[test]
    fn roots_close_up() {
        for n in 1..=30 {
            let r = CyclotomicRing::new(n);
            assert_eq!(r.root(n as i64), r.one(), "n = {n}");
            assert_eq!(r.mul(&r.root(3), &r.root(-3)), r.one());
            // 1 + ζ + … + ζ^{n-1} = 0 for n > 1
            if n > 1 {
                let sum = (0..n as i64).fold(r.zero(), |acc, k| r.add(&acc, &r.root(k)));
                assert_eq!(sum, r.zero());
            }
        }
    }

    #[test]
    fn float_values_agree() {
        let r = CyclotomicRing::new(10);
        let x = r.add(&r.root(3), &r.mul(&r.root(7), &r.int(2)));
        let (re, im) = r.to_complex(&x);
        let t = std::f64::consts::TAU / 10.0;
        assert!((re - ((3.0 * t).cos() + 2.0 * (7.0 * t).cos())).abs() < 1e-12);
        assert!((im - ((3.0 * t).sin() + 2.0 * (7.0 * t).sin())).abs() < 1e-12);
    }
}
