use thiserror::Error;

use crate::section::{ConcreteClass, SpecimenKind};

pub type Result<T> = std::result::Result<T, CfstError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CfstError {
    #[error("invalid input: {name} = {value} ({reason})")]
    InvalidInput {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("no concrete core: D = {d} mm must exceed 2t = {two_t} mm")]
    NoCore { d: f64, two_t: f64 },

    #[error("no conversion factor for {kind} specimens in the {class} class")]
    UnsupportedConversion {
        kind: SpecimenKind,
        class: ConcreteClass,
    },

    #[error(
        "steel curve parameters out of order: eps_y = {eps_y}, eps_p = {eps_p}, eps_u = {eps_u}"
    )]
    SteelStrainOrder { eps_y: f64, eps_p: f64, eps_u: f64 },

    #[error("negative strain {0} passed to a compression-positive law")]
    NegativeStrain(f64),

    #[error("unknown capacity method '{0}'")]
    UnknownMethod(String),

    #[error("empty response curve")]
    EmptyResponse,

    #[error("dataset header mismatch: expected '{expected}', found '{found}'")]
    HeaderMismatch { expected: String, found: String },

    #[error("csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for CfstError {
    fn from(e: csv::Error) -> Self {
        CfstError::Csv(e.to_string())
    }
}

pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(CfstError::InvalidInput {
            name,
            value,
            reason: "must be finite and > 0",
        })
    }
}

pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(CfstError::InvalidInput {
            name,
            value,
            reason: "must be finite and >= 0",
        })
    }
}
