use thiserror::Error;

/// Failures shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{operation}: {detail}")]
    Domain {
        operation: &'static str,
        detail: String,
    },

    /// The Bernoulli table handed in is too short for the requested index.
    #[error("Bernoulli table holds indices 0..={have}, but index {need} is required")]
    TableTooShort { have: usize, need: usize },

    /// The requested tolerance is below what the arithmetic can certify.
    #[error("{operation}: tolerance {requested:e} cannot be certified (best bound {achieved:e})")]
    Certification {
        operation: &'static str,
        requested: f64,
        achieved: f64,
    },

    /// Quadrature refinement ran out of levels before meeting its target.
    #[error(
        "refinement depth {depth} exhausted: error estimate {estimate:e} exceeds target {target:e}"
    )]
    DepthExhausted {
        depth: u32,
        estimate: f64,
        target: f64,
    },
}

impl Error {
    pub(crate) fn domain(operation: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            operation,
            detail: detail.into(),
        }
    }

    /// True for failures that mean "the tolerance could not be certified",
    /// as opposed to bad input.
    pub fn is_certification(&self) -> bool {
        matches!(
            self,
            Error::Certification { .. } | Error::DepthExhausted { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
