use serde::Serialize;

use super::graph::ConfigurationGraph;
use super::perron::{intersection_matrix, perron, PerronData, DEFAULT_TOLERANCE};
use crate::{Error, Result};

/// Spectral radius of the configuration graph below, at, or above 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Recessive,
    Critical,
    Dominant,
}

/// Smith's classification of connected multigraphs by spectral radius,
/// decided combinatorially.
///
/// Radius below 2: the Dynkin trees `A_n, D_n, E_6, E_7, E_8`. Radius
/// exactly 2: the affine shapes (cycles, the double edge, `D̃_n`, `Ẽ_6`,
/// `Ẽ_7`, `Ẽ_8`). Every other connected graph properly contains one of the
/// affine shapes.
pub fn classify_graph(g: &ConfigurationGraph) -> Result<GraphClass> {
    g.require_connected()?;
    let inter = g.intersections();
    let n = g.vertex_count();
    let mut edges = 0u32;
    let mut max_mult = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            edges += inter[i][j];
            max_mult = max_mult.max(inter[i][j]);
        }
    }
    if max_mult >= 3 {
        return Ok(GraphClass::Dominant);
    }
    if max_mult == 2 {
        return Ok(if n == 2 {
            GraphClass::Critical
        } else {
            GraphClass::Dominant
        });
    }
    let degree: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| inter[i][j] > 0).count())
        .collect();
    let cycles = edges as i64 - n as i64 + 1;
    if cycles > 1 {
        return Ok(GraphClass::Dominant);
    }
    if cycles == 1 {
        return Ok(if degree.iter().all(|&d| d == 2) {
            GraphClass::Critical
        } else {
            GraphClass::Dominant
        });
    }
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    if max_degree >= 5 {
        return Ok(GraphClass::Dominant);
    }
    if max_degree == 4 {
        return Ok(if n == 5 {
            GraphClass::Critical
        } else {
            GraphClass::Dominant
        });
    }
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] == 3).collect();
    match branch.len() {
        0 => Ok(GraphClass::Recessive),
        1 => {
            let center = branch[0];
            let mut arms: Vec<u64> = (0..n)
                .filter(|&w| inter[center][w] > 0)
                .map(|w| arm_length(inter, center, w) as u64 + 1)
                .collect();
            arms.sort_unstable();
            let (p, q, r) = (arms[0], arms[1], arms[2]);
            // compare 1/p + 1/q + 1/r with 1
            let lhs = q * r + p * r + p * q;
            let rhs = p * q * r;
            Ok(match lhs.cmp(&rhs) {
                std::cmp::Ordering::Greater => GraphClass::Recessive,
                std::cmp::Ordering::Equal => GraphClass::Critical,
                std::cmp::Ordering::Less => GraphClass::Dominant,
            })
        }
        2 => {
            let leaves_ok = (0..n)
                .filter(|&v| degree[v] == 1)
                .all(|v| (0..n).any(|w| inter[v][w] > 0 && degree[w] == 3));
            Ok(if leaves_ok {
                GraphClass::Critical
            } else {
                GraphClass::Dominant
            })
        }
        _ => Ok(GraphClass::Dominant),
    }
}

/// Number of vertices on the arm that leaves `center` through `first`.
fn arm_length(inter: &[Vec<u32>], center: usize, first: usize) -> usize {
    let n = inter.len();
    let (mut prev, mut cur, mut len) = (center, first, 1);
    while let Some(next) = (0..n).find(|&w| w != prev && inter[cur][w] > 0) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

/// Real 2×2 matrix of determinant 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SL2Mat {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SL2Mat {
    pub const DET_TOLERANCE: f64 = 1e-12;

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if (det - 1.0).abs() > Self::DET_TOLERANCE {
            return Err(Error::NotUnimodular { det });
        }
        Ok(SL2Mat { a, b, c, d })
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn inverse(&self) -> SL2Mat {
        SL2Mat {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn mul(&self, o: &SL2Mat) -> SL2Mat {
        SL2Mat {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

/// `DT_c = [[1, μ], [0, 1]]` and `DT_d = [[1, 0], [-μ, 1]]`.
pub fn multitwist_matrices(mu: f64) -> (SL2Mat, SL2Mat) {
    (
        SL2Mat {
            a: 1.0,
            b: mu,
            c: 0.0,
            d: 1.0,
        },
        SL2Mat {
            a: 1.0,
            b: 0.0,
            c: -mu,
            d: 1.0,
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sl2Class {
    Elliptic,
    Parabolic,
    Anosov,
}

pub const TRACE_TOLERANCE: f64 = 1e-9;

pub fn classify_sl2(m: &SL2Mat) -> Sl2Class {
    let t = m.trace().abs();
    if (t - 2.0).abs() <= TRACE_TOLERANCE {
        Sl2Class::Parabolic
    } else if t < 2.0 {
        Sl2Class::Elliptic
    } else {
        Sl2Class::Anosov
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VeechIndex {
    FiniteIndexInVeech,
    NotFiniteIndex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeCertificate {
    pub class: GraphClass,
    /// From the graph class; only meaningful for unit multiplicities, so
    /// `None` otherwise.
    pub veech_index: Option<VeechIndex>,
    /// `μ ≤ 2` within tolerance.
    pub teichmuller_curve_by_mu: bool,
    pub perron: PerronData,
}

pub fn lattice_certificate(g: &ConfigurationGraph) -> Result<LatticeCertificate> {
    let class = classify_graph(g)?;
    let data = perron(&intersection_matrix(g)?, DEFAULT_TOLERANCE)?;
    let veech_index = g.has_unit_multiplicities().then_some(match class {
        GraphClass::Recessive | GraphClass::Critical => VeechIndex::FiniteIndexInVeech,
        GraphClass::Dominant => VeechIndex::NotFiniteIndex,
    });
    Ok(LatticeCertificate {
        class,
        veech_index,
        teichmuller_curve_by_mu: data.mu <= 2.0 + TRACE_TOLERANCE,
        perron: data,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    type G = ConfigurationGraph;

    fn spectral_class(g: &G) -> GraphClass {
        let inter = g.intersections();
        let n = inter.len();
        let m = DMatrix::from_fn(n, n, |i, j| inter[i][j] as f64);
        let rho = m
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::MIN, f64::max);
        if rho < 2.0 - 1e-9 {
            GraphClass::Recessive
        } else if rho <= 2.0 + 1e-9 {
            GraphClass::Critical
        } else {
            GraphClass::Dominant
        }
    }

    fn critical_corpus() -> Vec<G> {
        let mut out = vec![G::cycle(2).unwrap(), G::star(4).unwrap()];
        out.extend((4..=12).step_by(2).map(|n| G::cycle(n).unwrap()));
        out.extend((4..=10).map(|n| G::affine_d(n).unwrap()));
        out.extend((6..=8).map(|n| G::affine_e(n).unwrap()));
        out
    }

    fn random_connected_bipartite(rng: &mut StdRng) -> G {
        loop {
            let m = rng.gen_range(1..=6);
            let k = rng.gen_range(1..=6);
            let density = rng.gen_range(0.15..0.6);
            let mut pairs = Vec::new();
            for i in 0..m {
                for j in 0..k {
                    if rng.gen_bool(density) {
                        let count = if rng.gen_bool(0.05) { 2 } else { 1 };
                        pairs.push((i, j, count));
                    }
                }
            }
            let g = G::bipartite(m, k, &pairs, vec![1; m + k]).unwrap();
            if g.is_connected() {
                return g;
            }
        }
    }

    #[test]
    fn named_examples() {
        assert_eq!(classify_graph(&G::a(5).unwrap()), Ok(GraphClass::Recessive));
        assert_eq!(
            classify_graph(&G::cycle(6).unwrap()),
            Ok(GraphClass::Critical)
        );
        assert_eq!(
            classify_graph(&G::star(4).unwrap()),
            Ok(GraphClass::Critical)
        );
        assert_eq!(
            classify_graph(&G::star(5).unwrap()),
            Ok(GraphClass::Dominant)
        );
        for n in 4..=10 {
            assert_eq!(classify_graph(&G::d(n).unwrap()), Ok(GraphClass::Recessive));
        }
        for n in 6..=8 {
            assert_eq!(classify_graph(&G::e(n).unwrap()), Ok(GraphClass::Recessive));
        }
        // E_9 = T(2,3,6) is affine Ẽ_8 and T(2,3,7) is past it.
        assert_eq!(
            classify_graph(&G::spider(&[1, 2, 6]).unwrap()),
            Ok(GraphClass::Dominant)
        );
        let k23 = G::bipartite(
            2,
            3,
            &[
                (0, 0, 1),
                (0, 1, 1),
                (0, 2, 1),
                (1, 0, 1),
                (1, 1, 1),
                (1, 2, 1),
            ],
            vec![1; 5],
        )
        .unwrap();
        assert_eq!(classify_graph(&k23), Ok(GraphClass::Dominant));
    }

    #[test]
    fn critical_corpus_has_radius_two() {
        for g in critical_corpus() {
            assert_eq!(classify_graph(&g), Ok(GraphClass::Critical), "{g}");
            let d = perron(&intersection_matrix(&g).unwrap(), DEFAULT_TOLERANCE).unwrap();
            assert!((d.mu - 2.0).abs() <= 1e-9, "{g}: {}", d.mu);
        }
    }

    #[test]
    fn combinatorial_matches_spectral_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut seen = [0usize; 3];
        for _ in 0..400 {
            let g = random_connected_bipartite(&mut rng);
            let class = classify_graph(&g).unwrap();
            assert_eq!(class, spectral_class(&g), "{g}");
            seen[class as usize] += 1;
        }
        assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
    }

    #[test]
    fn lattice_examples() {
        let c = lattice_certificate(&G::a(3).unwrap()).unwrap();
        assert_eq!(c.veech_index, Some(VeechIndex::FiniteIndexInVeech));
        assert!(c.teichmuller_curve_by_mu);
        assert!((c.perron.mu - 2f64.sqrt()).abs() < 1e-9);

        let c = lattice_certificate(&G::cycle(6).unwrap()).unwrap();
        assert_eq!(c.class, GraphClass::Critical);
        assert!((c.perron.mu - 2.0).abs() < 1e-9);

        let k23 = G::bipartite(
            2,
            3,
            &[
                (0, 0, 1),
                (0, 1, 1),
                (0, 2, 1),
                (1, 0, 1),
                (1, 1, 1),
                (1, 2, 1),
            ],
            vec![1; 5],
        )
        .unwrap();
        let c = lattice_certificate(&k23).unwrap();
        assert_eq!(c.veech_index, Some(VeechIndex::NotFiniteIndex));
        assert!((c.perron.mu - 6f64.sqrt()).abs() < 1e-9);
        assert!(!c.teichmuller_curve_by_mu);

        let weighted = G::bipartite(1, 1, &[(0, 0, 1)], vec![2, 1]).unwrap();
        assert_eq!(lattice_certificate(&weighted).unwrap().veech_index, None);
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(
            classify_sl2(&SL2Mat::new(1.0, 3.0, 0.0, 1.0).unwrap()),
            Sl2Class::Parabolic
        );
        assert_eq!(
            classify_sl2(&SL2Mat::new(0.0, 1.0, -1.0, 0.0).unwrap()),
            Sl2Class::Elliptic
        );
        assert_eq!(
            classify_sl2(&SL2Mat::new(2.0, 1.0, 1.0, 1.0).unwrap()),
            Sl2Class::Anosov
        );
        assert!(matches!(
            SL2Mat::new(2.0, 0.0, 0.0, 2.0),
            Err(Error::NotUnimodular { .. })
        ));

        let (c, d) = multitwist_matrices(1.0);
        assert_eq!((c.a, c.b, c.c, c.d), (1.0, 1.0, 0.0, 1.0));
        assert_eq!((d.a, d.b, d.c, d.d), (1.0, 0.0, -1.0, 1.0));
        let (c, d) = multitwist_matrices(2.0);
        assert_eq!(c.mul(&d).trace(), -2.0);
        assert_eq!(classify_sl2(&c.mul(&d)), Sl2Class::Parabolic);
        let (c, d) = multitwist_matrices(3.0);
        assert_eq!(c.mul(&d).trace(), -7.0);
        assert_eq!(classify_sl2(&c.mul(&d)), Sl2Class::Anosov);
    }

    proptest! {
        #[test]
        fn multitwists(mu in 0.01f64..50.0) {
            let (c, d) = multitwist_matrices(mu);
            prop_assert_eq!(classify_sl2(&c), Sl2Class::Parabolic);
            prop_assert_eq!(classify_sl2(&d), Sl2Class::Parabolic);
            let prod = c.mul(&d.inverse());
            prop_assert!((prod.trace() - (2.0 + mu * mu)).abs() < 1e-9 * (1.0 + mu * mu));
            prop_assert_eq!(classify_sl2(&prod), Sl2Class::Anosov);
        }
    }
}
