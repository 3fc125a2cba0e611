use crate::bounds::Bracket;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The call price lies outside `[(1 - e^k)^+, 1)`.
    #[error("price must lie in [(1-e^k)^+, 1) = [{lower}, 1) for k = {k}, got c = {c}")]
    PriceOutOfRange { k: f64, c: f64, lower: f64 },

    /// An argument is outside the set on which the function is defined.
    #[error("{what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid probability: {0}")]
    InvalidProbability(f64),

    /// The root finder ran out of iterations. `bracket` still contains the root.
    #[error(
        "no convergence after {iterations} iterations; root lies in [{}, {}]",
        bracket.lower,
        bracket.upper
    )]
    NoConvergence { iterations: usize, bracket: Bracket },

    #[error("invalid model parameters: {0}")]
    InvalidParams(&'static str),

    /// A control sample produced a non-positive or undefined objective value.
    #[error("degenerate control at u = {u}: objective value {value}")]
    DegenerateControl { u: f64, value: f64 },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }

    /// True for every error caused by bad input rather than by the algorithm.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::NoConvergence { .. })
    }
}
