//! Exact computations behind infiniteness results for quantum representations
//! of mapping class groups.
//!
//! The crate is organised by subject:
//!
//! * [`roots`]: roots of unity as exact exponent data, quantum-integer signs,
//!   Dehn-twist eigenvalues.
//! * [`blocks`]: color sets, admissible triples and conformal-block dimension
//!   counts on trivalent graphs.
//! * [`hermitian`]: sign profile of the invariant Hermitian form on the
//!   five-dimensional even-level tadpole block.
//! * [`certify`]: per-level infiniteness certificates (Burau route for odd
//!   parts, Coxeter route for `p = 4k`), including an exact closure oracle
//!   for the Burau image of `B_3`.
//! * [`veech`]: Thurston's construction from a pair of multicurves, Perron data
//!   and the recessive / critical / dominant classification.
//! * [`orbits`]: orbit types of simple closed curves and the derived
//!   degree-two cohomology bounds.

pub mod blocks;
pub mod certify;
mod error;
pub mod hermitian;
pub mod orbits;
pub mod roots;
mod text;
pub mod veech;

pub use error::{Error, Result};
