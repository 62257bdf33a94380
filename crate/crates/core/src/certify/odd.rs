//! The Burau route: levels whose odd part `q` is at least 7.

use super::burau::burau_is_finite;
use super::{InfinitenessCertificate, OddDetails, Route};
use crate::blocks::{tadpole_basis, Level};
use crate::roots::{quantum_parameter, twist_eigenvalue, RootOfUnity};

/// `p / 2^{v_2(p)}`.
pub fn odd_part(p: u64) -> u64 {
    assert!(p > 0);
    p >> p.trailing_zeros()
}

/// The Burau parameter at odd level `q` with `ℓ = 1`: `-A^{-2}` when
/// `q ≡ 1 mod 4` and `-A^2` when `q ≡ 3 mod 4`.
pub fn burau_parameter(q: u64) -> RootOfUnity {
    let a = quantum_parameter(q, 1).expect("ζ_{2q} is primitive");
    if q % 4 == 1 {
        -a.pow(-2)
    } else {
        -a.pow(2)
    }
}

pub fn odd_certificate(p: u64) -> InfinitenessCertificate {
    let uncertified = |failed: Vec<String>| InfinitenessCertificate {
        p,
        route: Route::Uncertified { failed },
    };
    if p == 0 {
        return uncertified(vec!["p must be positive".into()]);
    }
    let q = odd_part(p);
    if q < 7 {
        return uncertified(vec![format!("odd part {q} < 7")]);
    }
    let level = Level::new(q as u32).expect("q ≥ 7");
    let boundary_color = (q - 5) as u32;
    let loops = tadpole_basis(boundary_color, level).expect("q - 5 is an even color below q - 2");
    let [lo, hi] = loops[..] else {
        return uncertified(vec![format!(
            "tadpole block at level {q} has dimension {}, expected 2",
            loops.len()
        )]);
    };
    let parameter = burau_parameter(q);
    // The twist acts on the two-dimensional block with eigenvalue ratio -q.
    let ratio = twist_eigenvalue(hi, q as u32, 1).unwrap()
        * twist_eigenvalue(lo, q as u32, 1).unwrap().inv();
    if ratio != -parameter {
        return uncertified(vec![format!(
            "twist eigenvalue ratio {ratio} does not match the Burau parameter"
        )]);
    }
    let order = (-parameter).multiplicative_order();
    let burau_finite = burau_is_finite(order);
    if burau_finite {
        return uncertified(vec![format!(
            "Burau image is finite for -q of order {order}"
        )]);
    }
    InfinitenessCertificate {
        p,
        route: Route::OddBurau(OddDetails {
            odd_part: q,
            boundary_color,
            loop_colors: [lo, hi],
            burau_parameter: parameter,
            burau_finite,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_parts() {
        assert_eq!(odd_part(56), 7);
        assert_eq!(odd_part(7), 7);
        assert_eq!(odd_part(40), 5);
        assert_eq!(odd_part(1), 1);
    }

    #[test]
    fn level_seven() {
        let c = odd_certificate(7);
        let Route::OddBurau(d) = c.route else {
            panic!()
        };
        assert_eq!(d.boundary_color, 2);
        assert_eq!(d.loop_colors, [2, 4]);
        assert_eq!((-d.burau_parameter).multiplicative_order(), 7);
        assert!(!d.burau_finite);
    }

    #[test]
    fn loop_colors_follow_residue() {
        for q in (7..=199u64).step_by(2) {
            let c = odd_certificate(q);
            let Route::OddBurau(d) = c.route else {
                panic!("q = {q}")
            };
            let k = (q / 4) as u32;
            let expected = if q % 4 == 1 {
                [2 * k - 2, 2 * k]
            } else {
                [2 * k, 2 * k + 2]
            };
            assert_eq!(d.loop_colors, expected, "q = {q}");
            assert_eq!((-d.burau_parameter).multiplicative_order(), q);
        }
    }

    #[test]
    fn small_odd_parts_fail() {
        for p in [1, 2, 3, 5, 6, 10, 12, 20, 24, 40] {
            assert!(
                matches!(odd_certificate(p).route, Route::Uncertified { .. }),
                "p = {p}"
            );
        }
        let Route::OddBurau(d) = odd_certificate(56).route else {
            panic!()
        };
        assert_eq!(d.odd_part, 7);
    }
}
