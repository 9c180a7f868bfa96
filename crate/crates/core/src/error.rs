use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    /// A series or iteration ran out of budget before meeting its tolerance.
    #[error("no convergence in {func} after {iterations} iterations")]
    Convergence { func: &'static str, iterations: usize },

    /// A root bracket could not be established.
    #[error("no sign change for {func} on [{lo}, {hi}]")]
    NoBracket { func: &'static str, lo: f64, hi: f64 },

    /// The balance equation has no root for the requested parameters.
    #[error("no equilibrium: {0}")]
    NoSolution(String),

    /// The root sits where dG/da vanishes to within resolution.
    #[error("degenerate equilibrium at x = {x}: dG/d(ln a) = {slope:e} below resolution")]
    Degenerate { x: f64, slope: f64 },

    /// A call was made on an object that does not satisfy its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            func,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
