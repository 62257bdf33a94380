//! Thurston's construction from a pair of filling multicurves.
//!
//! The weighted intersection matrix `N` of the configuration graph has a
//! Perron eigenpair `(μ, v)`; the multitwists about the two multicurves act
//! on the resulting flat surface by `DT_c = [[1, μ], [0, 1]]` and
//! `DT_d = [[1, 0], [-μ, 1]]`. The group they generate has finite index in
//! the Veech group exactly when the configuration graph has spectral radius
//! at most 2.

mod classify;
mod graph;
mod perron;

pub use classify::{
    classify_graph, classify_sl2, lattice_certificate, multitwist_matrices, GraphClass,
    LatticeCertificate, SL2Mat, Sl2Class, VeechIndex, TRACE_TOLERANCE,
};
pub use graph::{ConfigurationGraph, Side};
pub use perron::{
    flat_surface, intersection_matrix, perron, FlatSurfaceData, Gluing, PerronData, Rectangle,
    DEFAULT_TOLERANCE,
};
