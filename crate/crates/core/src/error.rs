use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies within the pole-guard radius of a singularity.
    #[error("pole: {what} at distance {distance:e} from a singularity")]
    Pole { what: &'static str, distance: f64 },

    #[error("domain: {0}")]
    Domain(String),

    #[error("no convergence after {terms} terms (estimate {estimate:e}, target {target:e})")]
    NonConvergence {
        terms: usize,
        estimate: f64,
        target: f64,
    },

    #[error("quadrature failed on [{a}, {b}]: estimate {estimate:e} exceeds tolerance")]
    QuadratureFailure { a: f64, b: f64, estimate: f64 },

    #[error("order {0} has no closed form (only r = 1, 2, 3)")]
    UnsupportedOrder(u32),

    #[error("strip reduction of {0} lands on a lattice point")]
    Strip(String),

    #[error("finite-difference step {0:e} outside [1e-7, 1e-3]")]
    Step(f64),

    #[error("invalid control: {0}")]
    Control(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
