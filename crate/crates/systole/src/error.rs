use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {delta}")]
    NotSymmetric { row: usize, col: usize, delta: f64 },

    #[error("matrix is not positive definite: eigenvalue {eigenvalue} <= {tol}")]
    NotPositiveDefinite { eigenvalue: f64, tol: f64 },

    #[error("eigenvalue iteration did not converge: off-diagonal residual {residual} after {sweeps} sweeps")]
    EigenDivergence { residual: f64, sweeps: usize },

    #[error("root finding did not converge: max residual {residual} after {iterations} iterations")]
    RootDivergence { residual: f64, iterations: usize },

    #[error("determinant must be 1, got {got}")]
    NotUnimodular { got: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("Mahler measure paths disagree: root path {root_path}, Graeffe path {graeffe_path}")]
    MahlerMismatch { root_path: f64, graeffe_path: f64 },

    #[error("characteristic polynomial of the adjoint is not integral: coefficient {coefficient}")]
    NonIntegralCharPoly { coefficient: String },

    #[error("quadrature failed to reach tolerance {requested}: achieved {achieved}")]
    QuadratureFailure { requested: f64, achieved: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
