use thiserror::Error;

/// Errors raised by material construction, Lifshitz evaluation and the CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown material '{0}'")]
    UnknownMaterial(String),

    #[error(
        "Matsubara sum did not converge after {terms} terms \
         (last term / accumulated = {last_ratio:e}, partial value {partial:e})"
    )]
    NotConverged {
        terms: usize,
        last_ratio: f64,
        partial: f64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be finite and positive, got {value}"
        )))
    }
}

pub(crate) fn ensure_non_negative(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be finite and non-negative, got {value}"
        )))
    }
}
