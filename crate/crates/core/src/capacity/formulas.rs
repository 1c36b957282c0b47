//! Published closed-form predictors for circular CFST stub columns.
//!
//! Each is transcribed as printed. Where the printed form is non-physical
//! (negative confined stress, negative slenderness factor) the value is kept
//! and a diagnostic is attached instead of clamping.

use super::limits::{ApplicabilityReport, LimitCheck};
use super::{
    CapacityMethod, CapacityPrediction, DiagnosticCode, Estimate, MethodId, OliveiraMode, Settings,
};
use crate::error::{CfstError, Result};
use crate::section::ColumnSpec;

/// O'Shea and Bridge.
pub struct OShea;

impl CapacityMethod for OShea {
    fn id(&self) -> MethodId {
        MethodId::Oshea
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        LimitCheck::new()
            .at_most("D/t ≤ 200", 200.0, column.dt_ratio())
            .finish()
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let (f_y, f_c) = (column.f_y(), column.f_c());
        let section = column.section();
        let p_yield = 2.0 * f_y * section.thickness / (section.diameter - 2.0 * section.thickness);
        let p = p_yield * (0.7 - (f_c / f_y).sqrt()) * (10.0 / 3.0);
        let mut est;
        let sigma_cp = if f_c <= 50.0 {
            let f_l = 0.558 * f_c.sqrt();
            est = Estimate::new(0.0).with("f_l", f_l);
            f_c * (-1.228 + 2.172 * (1.0 + 7.46 * f_l / f_c).sqrt() - 2.0 * p / f_c)
        } else {
            let k = 1.25 * (1.0 + 0.062 * p / f_c) * f_c.powf(-0.21);
            est = Estimate::new(0.0).with("k", k);
            f_c * (p / f_c + 1.0).powf(k)
        };
        est.n_u = sigma_cp * column.a_c() + column.a_s() * f_y;
        est = est
            .with("P_yield", p_yield)
            .with("p", p)
            .with("sigma_cp", sigma_cp);
        if !(sigma_cp > 0.0) {
            est.flag(
                DiagnosticCode::NonPhysicalConfinedStress,
                format!("confined stress σ_cp = {sigma_cp:.3} MPa is not positive"),
            );
        }
        if f_c > 100.0 {
            est.flag(
                DiagnosticCode::OutsideFittedRange,
                format!("f_c' = {f_c} MPa above the 100 MPa upper branch limit"),
            );
        }
        Ok(est)
    }
}

/// Yu et al.
pub struct Yu;

impl CapacityMethod for Yu {
    fn id(&self) -> MethodId {
        MethodId::Yu
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        LimitCheck::new()
            .within("235 ≤ f_y ≤ 345 MPa", 235.0, 345.0, column.f_y())
            .within("30 ≤ f_c' ≤ 60 MPa", 30.0, 60.0, column.f_c())
            .within("0.2 ≤ ξ ≤ 2", 0.2, 2.0, column.xi_c())
            .finish()
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let f_cc = (1.14 + 1.34 * column.xi_c()) * column.f_c();
        Ok(Estimate::new(f_cc * column.a_c()).with("f_cc", f_cc))
    }
}

/// Liu et al.
pub struct Liu;

impl CapacityMethod for Liu {
    fn id(&self) -> MethodId {
        MethodId::Liu
    }

    fn applicability(&self, _column: &ColumnSpec) -> ApplicabilityReport {
        ApplicabilityReport::default()
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let f_y = column.f_y();
        let section = column.section();
        let (d, t) = (section.diameter, section.thickness);
        let sigma_v = 0.61 * f_y;
        let sigma_h = 0.54 * f_y;
        let sigma_r = 2.0 * t * sigma_h / (d - 2.0 * t);
        let sigma_r_simplified = 1.08 * t * f_y / d;
        let sigma_cp = column.f_c() + 4.1 * sigma_r;
        let mut est = Estimate::new(sigma_v * column.a_s() + sigma_cp * column.a_c())
            .with("sigma_v", sigma_v)
            .with("sigma_h", sigma_h)
            .with("sigma_r", sigma_r)
            .with("sigma_r_simplified", sigma_r_simplified)
            .with("sigma_cp", sigma_cp);
        if sigma_r > 0.0 {
            let gap = (sigma_r - sigma_r_simplified) / sigma_r;
            if gap.abs() > 1e-3 {
                est.flag(
                    DiagnosticCode::LiuSimplificationGap,
                    format!(
                        "σ_r = 2tσ_h/(D−2t) = {sigma_r:.3} MPa but 1.08·t·f_y/D = {sigma_r_simplified:.3} MPa ({:.1}% apart)",
                        gap * 100.0
                    ),
                );
            }
        }
        Ok(est)
    }
}

/// Sun.
pub struct Sun;

impl CapacityMethod for Sun {
    fn id(&self) -> MethodId {
        MethodId::Sun
    }

    fn applicability(&self, _column: &ColumnSpec) -> ApplicabilityReport {
        ApplicabilityReport::default()
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let dt = column.dt_ratio();
        if dt <= 2.0 {
            return Err(CfstError::InvalidInput {
                name: "D/t",
                value: dt,
                reason: "Sun's formula is singular for D/t <= 2",
            });
        }
        let f_c = column.f_c();
        let f_cc = f_c * (1.0 + 8.2 * ((dt - 1.0) * column.f_y()) / ((dt - 2.0).powi(2) * f_c));
        Ok(Estimate::new(f_cc * column.a_c()).with("f_cc", f_cc))
    }
}

/// Zhong and Miao, with the lateral pressure p_0 taken from settings.
pub struct ZhongMiao;

impl CapacityMethod for ZhongMiao {
    fn id(&self) -> MethodId {
        MethodId::ZhongMiao
    }

    fn applicability(&self, _column: &ColumnSpec) -> ApplicabilityReport {
        ApplicabilityReport::default()
    }

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate> {
        let xi = column.xi_c();
        let mu = -0.5 - 1.0 / (2.0 * (xi + 1.0));
        let steel_factor = (mu + 2.0) / (3.0 * (mu * mu + mu + 1.0)).sqrt();
        let n_s = steel_factor * column.f_y() * column.a_s();
        let p_0 = settings.zhong_miao_p0;
        let n_c = (column.f_c() + 4.0 * p_0) * column.a_c();
        Ok(Estimate::new(n_s + n_c)
            .with("mu_prime", mu)
            .with("steel_factor", steel_factor)
            .with("p_0", p_0)
            .with("N_s", n_s)
            .with("N_c", n_c))
    }
}

/// Guo.
pub struct Guo;

impl CapacityMethod for Guo {
    fn id(&self) -> MethodId {
        MethodId::Guo
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        LimitCheck::new()
            .at_most("ξ ≤ 1.7", 1.7, column.xi_c())
            .finish()
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let xi = column.xi_c();
        let f_cc = column.f_c() * (1.0 + xi.sqrt() + 1.1 * xi);
        Ok(Estimate::new(f_cc * column.a_c()).with("f_cc", f_cc))
    }
}

/// De Oliveira et al.
pub struct DeOliveira;

impl CapacityMethod for DeOliveira {
    fn id(&self) -> MethodId {
        MethodId::DeOliveira
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        LimitCheck::new()
            .within("1 ≤ L/D ≤ 10", 1.0, 10.0, column.ld_ratio())
            .finish()
    }

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate> {
        let ld = column.ld_ratio();
        let lambda = if ld <= 3.0 {
            1.0
        } else {
            match settings.oliveira_mode {
                OliveiraMode::AsPrinted => -0.18 * ld.ln(),
                OliveiraMode::Corrected => 1.0 - 0.18 * (ld / 3.0).ln(),
            }
        };
        let base = column.a_c() * column.f_c() + column.a_s() * column.f_y();
        let mut est = Estimate::new(base * lambda).with("lambda", lambda);
        if !(lambda > 0.0) {
            est.flag(
                DiagnosticCode::NonPhysicalReductionFactor,
                format!("slenderness factor λ = {lambda:.4} is not positive"),
            );
        }
        Ok(est)
    }
}

pub fn predict_oshea(column: &ColumnSpec) -> Result<CapacityPrediction> {
    OShea.predict(column, &Settings::default())
}

pub fn predict_yu(column: &ColumnSpec) -> Result<CapacityPrediction> {
    Yu.predict(column, &Settings::default())
}

pub fn predict_liu(column: &ColumnSpec) -> Result<CapacityPrediction> {
    Liu.predict(column, &Settings::default())
}

pub fn predict_sun(column: &ColumnSpec) -> Result<CapacityPrediction> {
    Sun.predict(column, &Settings::default())
}

pub fn predict_zhong_miao(column: &ColumnSpec, p_0: f64) -> Result<CapacityPrediction> {
    let settings = Settings {
        zhong_miao_p0: p_0,
        ..Settings::default()
    };
    settings.validate()?;
    ZhongMiao.predict(column, &settings)
}

pub fn predict_guo(column: &ColumnSpec) -> Result<CapacityPrediction> {
    Guo.predict(column, &Settings::default())
}

pub fn predict_oliveira(column: &ColumnSpec, mode: OliveiraMode) -> Result<CapacityPrediction> {
    let settings = Settings {
        oliveira_mode: mode,
        ..Settings::default()
    };
    DeOliveira.predict(column, &settings)
}
