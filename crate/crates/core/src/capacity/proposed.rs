//! N_u = η_c·A_c·f_c' + η_s·A_s·f_y with regression-fitted intensification
//! (concrete) and diminution (steel) factors.

use serde::{Deserialize, Serialize};

use super::limits::ApplicabilityReport;
use super::{CapacityMethod, CapacityPrediction, DiagnosticCode, Estimate, MethodId, Settings};
use crate::error::Result;
use crate::section::ColumnSpec;

/// Parameter ranges of the specimen database the factors were fitted on.
pub const DATABASE_ENVELOPE: [(&str, f64, f64); 4] = [
    ("f_y", 185.7, 853.0),
    ("f_c'", 12.5, 185.6),
    ("D/t", 10.1, 220.9),
    ("L/D", 0.8, 5.0),
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProposedFactors {
    pub eta_c: f64,
    pub eta_s: f64,
}

impl ProposedFactors {
    pub fn for_column(column: &ColumnSpec) -> Self {
        Self {
            eta_c: eta_c(column.dt_ratio(), column.f_c(), column.xi_c()),
            eta_s: eta_s(column.alpha_s(), column.f_c(), column.f_y()),
        }
    }
}

/// Steel diminution factor, unclamped.
pub fn eta_s(alpha_s: f64, f_c: f64, f_y: f64) -> f64 {
    (1.923 - 1.229 * (0.003 * f_y).ln()) * (alpha_s * f_c / f_y).powf(0.47)
}

/// Concrete intensification factor, unclamped.
pub fn eta_c(dt_ratio: f64, f_c: f64, xi_c: f64) -> f64 {
    0.85 + 0.3 * dt_ratio.powf(0.328) * f_c.powf(0.1) * xi_c
}

pub struct Proposed;

impl CapacityMethod for Proposed {
    fn id(&self) -> MethodId {
        MethodId::Proposed
    }

    /// Applies everywhere; leaving the database envelope is a diagnostic.
    fn applicability(&self, _column: &ColumnSpec) -> ApplicabilityReport {
        ApplicabilityReport::default()
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let factors = ProposedFactors::for_column(column);
        let n_c = factors.eta_c * column.a_c() * column.f_c();
        let n_s = factors.eta_s * column.a_s() * column.f_y();
        let mut est = Estimate::new(n_c + n_s)
            .with("eta_c", factors.eta_c)
            .with("eta_s", factors.eta_s)
            .with("N_c", n_c)
            .with("N_s", n_s);
        let actual = [
            column.f_y(),
            column.f_c(),
            column.dt_ratio(),
            column.ld_ratio(),
        ];
        for ((name, lo, hi), value) in DATABASE_ENVELOPE.iter().zip(actual) {
            if !(*lo..=*hi).contains(&value) {
                est.flag(
                    DiagnosticCode::OutsideDatabaseEnvelope,
                    format!("{name} = {value} outside the fitted range [{lo}, {hi}]"),
                );
            }
        }
        if !(factors.eta_s > 0.0) {
            est.flag(
                DiagnosticCode::NonPhysicalFactor,
                format!("η_s = {:.4} is not positive", factors.eta_s),
            );
        }
        Ok(est)
    }
}

pub fn predict_proposed(column: &ColumnSpec) -> Result<CapacityPrediction> {
    Proposed.predict(column, &Settings::default())
}
