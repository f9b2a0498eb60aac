//! Error type shared by every layer of the model.

use thiserror::Error;

/// Everything that can go wrong between a parameter set and a power figure.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric parameter is outside its documented domain. The message
    /// quotes the violated constraint so callers (and the CLI) can surface
    /// it verbatim.
    #[error("parameter `{name}` out of domain: requires {constraint}, got {value}")]
    Domain { name: &'static str, constraint: &'static str, value: f64 },

    /// The calibration target cannot be fit because the uncalibrated
    /// computation power at the fit point is zero.
    #[error("calibration impossible: uncalibrated computation power is zero at the fit point")]
    CalibrationImpossible,

    /// A profile/override file could not be read, parsed, or validated.
    #[error("config: {0}")]
    Config(String),

    /// A sweep aborted at one of its points; carries the axis value so the
    /// offending point is identifiable.
    #[error("sweep point at axis value {axis_value}: {source}")]
    SweepPoint {
        axis_value: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Shorthand used by the validation helpers throughout the crate.
    pub(crate) fn domain(name: &'static str, constraint: &'static str, value: f64) -> Self {
        Error::Domain { name, constraint, value }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
