//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("symmetric tridiagonal eigensolve failed to converge at index {index}")]
    Eigensolve { index: usize },

    #[error("orthogonalization broke down: nonpositive norm at degree {degree}")]
    NormBreakdown { degree: usize },

    #[error("non-finite value on {segment} at node {node} (t = {t})")]
    NonFinite {
        segment: &'static str,
        node: usize,
        t: f64,
    },

    #[error("invalid basis index: {0}")]
    InvalidIndex(String),

    #[error("corner values disagree between segments: |{top} - {right}| > tolerance")]
    CornerMismatch { top: f64, right: f64 },

    #[error("query point lies on the contour; request the limit mode to evaluate there")]
    OnContour,

    #[error("recurrence block B_{n} is numerically singular")]
    SingularBlock { n: usize },

    #[error("boundary-value solve did not converge by n = {n_cap}; tail magnitude {tail:.3e}")]
    NoConvergence { n_cap: usize, tail: f64 },

    #[error("matching system is ill-conditioned (cond ~ {cond:.3e}); increase the tail length n")]
    IllConditioned { cond: f64 },

    #[error("discretization grid too coarse: Gram deviation {dev:.3e} exceeds {tol:.3e}")]
    GridTooCoarse { dev: f64, tol: f64 },

    #[error("numerical rank loss while orthogonalizing at degree {degree}")]
    RankLoss { degree: usize },

    #[error("deflated sampling density went negative: {value:.3e}")]
    NegativeDensity { value: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
