use thiserror::Error;

use crate::spaces::Chart;

/// Errors raised by constructors, chart conversions and the structure maps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("{space} point is not admissible: {reason}")]
    NotAdmissible { space: &'static str, reason: String },

    #[error("matrix does not lie in {space} (residual {residual:.3e})")]
    ShapeViolation { space: &'static str, residual: f64 },

    #[error("structure {structure} has no coordinate form in chart {chart}")]
    UnsupportedChart { structure: String, chart: Chart },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("flow trajectory left the admissible cone at t = {t}")]
    LeftAdmissibleCone { t: f64 },

    #[error("non-finite Jacobian entry at ({row}, {col})")]
    SingularJacobian { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite(value: f64, what: &'static str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(what))
    }
}
