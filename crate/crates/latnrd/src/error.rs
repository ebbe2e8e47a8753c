use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] latnrd_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("integer {0} does not fit the JSON range of i64")]
    Overflow(String),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// 1 for failed checks, 2 for bad input, 3 for math-domain errors.
    pub fn exit_code(&self) -> u8 {
        use latnrd_core::Error as C;
        match self {
            Error::Mismatch(_) => 1,
            Error::Core(
                C::NotPositiveDefinite { .. }
                | C::NotPointed { .. }
                | C::GammaNotInterior
                | C::GammaInterior
                | C::GammaOutsideClosure
                | C::NonPositiveGamma { .. }
                | C::NegativeGamma { .. }
                | C::RayOutsideCone { .. },
            ) => 3,
            _ => 2,
        }
    }
}
