use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("infinite spectral density at frequency {0}")]
    InfiniteDensity(f64),
    #[error("singular AR filter at frequency {0}")]
    SingularFilter(f64),
    #[error("numerically degenerate: {0}")]
    Degenerate(String),
    #[error("overlapping boundary blocks: p = {p} exceeds n/2 with n = {n}")]
    UnsupportedOverlap { p: usize, n: usize },
    #[error("nonpositive smoothed density at frequency index {0}")]
    InvalidSmoother(usize),
    #[error("no valid starting point: {0}")]
    Initialization(String),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::InfiniteDensity(_)
                | Error::SingularFilter(_)
                | Error::Degenerate(_)
                | Error::InvalidSmoother(_)
                | Error::Initialization(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
