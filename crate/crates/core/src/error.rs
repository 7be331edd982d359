use thiserror::Error;

/// Numerical failures raised by the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A non-physical state (density or pressure not strictly positive).
    #[error("positivity failure at {location}: rho = {rho}, p = {p}")]
    Positivity { location: String, rho: f64, p: f64 },

    /// A NaN or infinity appeared in a rate, flux or characteristic value.
    #[error("non-finite value at {location}: {what}")]
    NonFinite { location: String, what: String },

    /// The approximate-dispersion-relation probe lost its Fourier mode.
    #[error("degenerate spectral probe: {0}")]
    DegenerateProbe(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Prefixes the location of a numerical failure.
    pub fn within(self, context: impl std::fmt::Display) -> Self {
        match self {
            Error::Positivity { location, rho, p } => Error::Positivity {
                location: format!("{context}, {location}"),
                rho,
                p,
            },
            Error::NonFinite { location, what } => Error::NonFinite {
                location: format!("{context}, {location}"),
                what,
            },
            e => e,
        }
    }
}
