use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ell = {ell} does not give a primitive {order}-th root of unity")]
    NonPrimitiveRoot { ell: i64, order: u64 },

    #[error("quantum integer denominator vanishes at p = {p}, ell = {ell}")]
    DegenerateDenominator { p: u64, ell: i64 },

    #[error("color {color} is not valid at level {p}")]
    InvalidColor { color: u32, p: u32 },

    #[error("invalid level {p}: {reason}")]
    InvalidLevel { p: u64, reason: &'static str },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at position {position} near `{token}`: {reason}")]
    Parse {
        token: String,
        position: usize,
        reason: String,
    },

    #[error("configuration graph is disconnected")]
    DisconnectedGraph,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("matrix is not in SL2: determinant {det}")]
    NotUnimodular { det: f64 },

    #[error("surface of genus {g} with {n} punctures is not hyperbolic")]
    NonHyperbolic { g: u32, n: u32 },

    #[error("input too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(
        token: impl Into<String>,
        position: usize,
        reason: impl Into<String>,
    ) -> Self {
        Error::Parse {
            token: token.into(),
            position,
            reason: reason.into(),
        }
    }
}
