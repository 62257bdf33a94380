use serde::Serialize;

use super::graph::{ConfigurationGraph, Side};
use crate::{Error, Result};

/// Residual tolerance used when no other is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

const MAX_ITERATIONS: usize = 2_000_000;

/// `N_{ij} = d_i · i(γ_i, γ_j)`; not symmetric when multiplicities differ.
pub fn intersection_matrix(g: &ConfigurationGraph) -> Result<Vec<Vec<f64>>> {
    g.require_connected()?;
    let d = g.multiplicities();
    Ok(g.intersections()
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|&x| (d[i] * x) as f64).collect())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronData {
    pub mu: f64,
    pub v: Vec<f64>,
    /// `‖Nv - μv‖`.
    pub residual: f64,
    pub tolerance: f64,
    pub iterations: usize,
}

fn apply(n: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    n.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|a| a * a).sum::<f64>().sqrt()
}

/// Dominant eigenpair of a nonnegative irreducible matrix.
///
/// Power iteration runs on `N + I` from the all-ones vector, which removes
/// the period-2 oscillation of bipartite matrices without changing the
/// eigenvectors. Stops once `‖Nv - μv‖ ≤ tol · μ`.
pub fn perron(n: &[Vec<f64>], tol: f64) -> Result<PerronData> {
    let dim = n.len();
    let mut x = vec![1.0 / (dim as f64).sqrt(); dim];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        let nx = apply(n, &x);
        let mut y: Vec<f64> = nx.iter().zip(&x).map(|(a, b)| a + b).collect();
        let len = norm(&y);
        y.iter_mut().for_each(|a| *a /= len);
        x = y;
        let nx = apply(n, &x);
        let mu: f64 = nx.iter().zip(&x).map(|(a, b)| a * b).sum();
        residual = norm(
            &nx.iter()
                .zip(&x)
                .map(|(a, b)| a - mu * b)
                .collect::<Vec<_>>(),
        );
        if residual <= tol * mu {
            return Ok(PerronData {
                mu,
                v: x,
                residual,
                tolerance: tol,
                iterations: it,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// One rectangle per unit of intersection between `c_i` and `d_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rectangle {
    pub id: usize,
    pub c_curve: usize,
    pub d_curve: usize,
    pub width: f64,
    pub height: f64,
}

/// Two rectangles glued along a side, consecutive around the cylinder of
/// `curve`. Rectangles around a `c` curve are glued along vertical sides,
/// around a `d` curve along horizontal sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub curve: usize,
    pub side: Side,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlatSurfaceData {
    pub rectangles: Vec<Rectangle>,
    pub gluings: Vec<Gluing>,
    pub total_area: f64,
    pub perron: PerronData,
}

/// Rectangles `[0, v_i] × [0, v_j]` for each intersection point of `c_i`
/// with `d_j`, and the cyclic gluing around each curve in rectangle order.
pub fn flat_surface(g: &ConfigurationGraph) -> Result<FlatSurfaceData> {
    let data = perron(&intersection_matrix(g)?, DEFAULT_TOLERANCE)?;
    let sides = g.sides();
    let inter = g.intersections();
    let n = g.vertex_count();
    let mut rectangles = Vec::new();
    for i in (0..n).filter(|&i| sides[i] == Side::C) {
        for j in (0..n).filter(|&j| sides[j] == Side::D) {
            for _ in 0..inter[i][j] {
                rectangles.push(Rectangle {
                    id: rectangles.len(),
                    c_curve: i,
                    d_curve: j,
                    width: data.v[i],
                    height: data.v[j],
                });
            }
        }
    }
    let mut gluings = Vec::new();
    for curve in 0..n {
        let around: Vec<usize> = rectangles
            .iter()
            .filter(|r| r.c_curve == curve || r.d_curve == curve)
            .map(|r| r.id)
            .collect();
        for (a, &from) in around.iter().enumerate() {
            gluings.push(Gluing {
                curve,
                side: sides[curve],
                from,
                to: around[(a + 1) % around.len()],
            });
        }
    }
    let total_area = rectangles.iter().map(|r| r.width * r.height).sum();
    Ok(FlatSurfaceData {
        rectangles,
        gluings,
        total_area,
        perron: data,
    })
}
