//! Design-code predictors: EC4, AISC 360, CISC, DBJ 13-51 and ACI 318,
//! evaluated at characteristic level (no partial factors).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::limits::{ApplicabilityReport, LimitCheck};
use super::{CapacityMethod, CapacityPrediction, DiagnosticCode, Estimate, MethodId, Settings};
use crate::error::Result;
use crate::section::{classify_concrete, ColumnSpec, ConcreteClass};

const FC_MIN_EC4_ACI: &str = "f_c' ≥ 17.2 MPa";
const DT_EC4_ACI: &str = "D/t ≤ √(8·E_s/f_y)";

fn effective_length(column: &ColumnSpec, settings: &Settings) -> f64 {
    settings.k_eff * column.section().length
}

fn ec4_aci_limits(column: &ColumnSpec) -> ApplicabilityReport {
    let steel = column.steel();
    LimitCheck::new()
        .at_most(
            DT_EC4_ACI,
            (8.0 * steel.e_s / steel.f_y).sqrt(),
            column.dt_ratio(),
        )
        .at_least(FC_MIN_EC4_ACI, 17.2, column.f_c())
        .finish()
}

pub struct Aci;

impl CapacityMethod for Aci {
    fn id(&self) -> MethodId {
        MethodId::Aci
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        ec4_aci_limits(column)
    }

    fn estimate(&self, column: &ColumnSpec, _settings: &Settings) -> Result<Estimate> {
        let n_s = column.a_s() * column.f_y();
        let n_c = 0.85 * column.a_c() * column.f_c();
        Ok(Estimate::new(n_s + n_c).with("N_s", n_s).with("N_c", n_c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ec4Coefficients {
    pub lambda_bar: f64,
    pub eta_a: f64,
    /// Confinement coefficient (named to keep it apart from the proposed η_c).
    pub eta_c_ec4: f64,
    pub n_pl_rk: f64,
    pub n_cr: f64,
}

/// (η_a, η_c) for a relative slenderness, with the code clamps applied.
pub fn ec4_factors(lambda_bar: f64) -> (f64, f64) {
    let eta_a = (0.25 * (3.0 + 2.0 * lambda_bar)).min(1.0);
    let eta_c = (4.9 - 18.5 * lambda_bar + 17.0 * lambda_bar * lambda_bar).max(0.0);
    (eta_a, eta_c)
}

pub fn ec4_coefficients(column: &ColumnSpec, settings: &Settings) -> Ec4Coefficients {
    let steel = column.steel();
    let concrete = column.concrete();
    let section = column.section();
    let ei_eff =
        steel.e_s * section.steel_inertia() + settings.ke * concrete.e_c * section.core_inertia();
    let n_cr = PI * PI * ei_eff / effective_length(column, settings).powi(2);
    let n_pl_rk = steel.f_y * column.a_s() + 0.85 * concrete.f_c * column.a_c();
    let lambda_bar = (n_pl_rk / n_cr).sqrt();
    let (eta_a, eta_c_ec4) = ec4_factors(lambda_bar);
    Ec4Coefficients {
        lambda_bar,
        eta_a,
        eta_c_ec4,
        n_pl_rk,
        n_cr,
    }
}

pub struct Ec4;

impl CapacityMethod for Ec4 {
    fn id(&self) -> MethodId {
        MethodId::Ec4
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        ec4_aci_limits(column)
    }

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate> {
        let c = ec4_coefficients(column, settings);
        let section = column.section();
        let (f_y, f_c) = (column.f_y(), column.f_c());
        let confinement = 1.0 + c.eta_c_ec4 * (section.thickness * f_y) / (section.diameter * f_c);
        let n_u = c.eta_a * column.a_s() * f_y + column.a_c() * f_c * confinement;
        Ok(Estimate::new(n_u)
            .with("lambda_bar", c.lambda_bar)
            .with("eta_a", c.eta_a)
            .with("eta_c_ec4", c.eta_c_ec4)
            .with("N_pl_Rk", c.n_pl_rk)
            .with("N_cr", c.n_cr))
    }
}

/// Column curve: P_0·0.658^(P_0/P_e) when P_e > 0.44·P_0, else 0.877·P_e.
pub fn aisc_nominal_strength(p_0: f64, p_e: f64) -> f64 {
    if p_e > 0.44 * p_0 {
        p_0 * 0.658f64.powf(p_0 / p_e)
    } else {
        0.877 * p_e
    }
}

pub struct Aisc;

impl CapacityMethod for Aisc {
    fn id(&self) -> MethodId {
        MethodId::Aisc
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        let steel = column.steel();
        LimitCheck::new()
            .at_most(
                "D/t ≤ 0.15·E_s/f_y",
                0.15 * steel.e_s / steel.f_y,
                column.dt_ratio(),
            )
            .at_most("f_y ≤ 525 MPa", 525.0, steel.f_y)
            .within("21 ≤ f_c' ≤ 70 MPa", 21.0, 70.0, column.f_c())
            .finish()
    }

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate> {
        let (a_s, a_c) = (column.a_s(), column.a_c());
        let section = column.section();
        let p_0 = 0.95 * column.f_c() * a_c + column.f_y() * a_s;
        let c_3 = 0.6 + 2.0 * a_s / (a_s + a_c);
        let ei_eff = column.steel().e_s * section.steel_inertia()
            + c_3 * column.concrete().e_c * section.core_inertia();
        let p_e = PI * PI * ei_eff / effective_length(column, settings).powi(2);
        let mut est = Estimate::new(aisc_nominal_strength(p_0, p_e))
            .with("P_0", p_0)
            .with("P_e", p_e)
            .with("C_3", c_3);
        if c_3 > 0.9 {
            est.flag(
                DiagnosticCode::C3AboveCap,
                format!("C_3 = {c_3:.4} exceeds 0.9; left uncapped"),
            );
        }
        Ok(est)
    }
}

pub struct Cisc;

impl CapacityMethod for Cisc {
    fn id(&self) -> MethodId {
        MethodId::Cisc
    }

    /// No limits are printed for CISC.
    fn applicability(&self, _column: &ColumnSpec) -> ApplicabilityReport {
        ApplicabilityReport::default()
    }

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate> {
        let ld = column.ld_ratio();
        let (f_y, f_c) = (column.f_y(), column.f_c());
        let (rho, tau, tau_prime) = if ld < 25.0 {
            let rho = 0.02 * (25.0 - ld);
            let tau = (1.0 + rho + rho * rho).powf(-0.5);
            let tau_prime =
                1.0 + (25.0 * rho * rho * tau / column.dt_ratio()) * (f_y / (0.8 * f_c));
            (rho, tau, tau_prime)
        } else {
            (0.0, 1.0, 1.0)
        };
        let base = tau * column.a_s() * f_y + tau_prime * 0.85 * column.a_c() * f_c;
        let section = column.section();
        let ei = column.steel().e_s * section.steel_inertia()
            + 0.6 * column.concrete().e_c * section.core_inertia() / settings.r_cc;
        let euler = PI * PI * ei / effective_length(column, settings).powi(2);
        let lambda = (base / euler).sqrt();
        let n_u = base * (1.0 + lambda.powf(3.6)).powf(-0.556);
        Ok(Estimate::new(n_u)
            .with("rho", rho)
            .with("tau", tau)
            .with("tau_prime", tau_prime)
            .with("lambda", lambda))
    }
}

pub struct Dbj;

impl CapacityMethod for Dbj {
    fn id(&self) -> MethodId {
        MethodId::Dbj
    }

    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport {
        let f_y = column.f_y();
        LimitCheck::new()
            .at_most("D/t ≤ 150·235/f_y", 150.0 * 235.0 / f_y, column.dt_ratio())
            .within("235 ≤ f_y ≤ 420 MPa", 235.0, 420.0, f_y)
            .within("24 ≤ f_c' ≤ 70 MPa", 24.0, 70.0, column.f_c())
            .finish()
    }

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate> {
        let f_c = column.f_c();
        let class = classify_concrete(f_c);
        // back to the 150 mm cube; UHSC has no cube factor so HSC's is reused
        let cube_factor = match class {
            ConcreteClass::Normal => 0.88,
            ConcreteClass::High | ConcreteClass::UltraHigh => 0.98,
        };
        let f_cu = f_c / cube_factor;
        let f_ck = settings.dbj_fck_factor * f_cu;
        let (a_s, a_c) = (column.a_s(), column.a_c());
        let xi = column.f_y() * a_s / (f_ck * a_c);
        let f_sc = f_ck * (1.14 + 1.02 * xi);
        let mut est = Estimate::new(f_sc * (a_s + a_c))
            .with("f_cu150", f_cu)
            .with("f_ck", f_ck)
            .with("xi_dbj", xi)
            .with("f_sc", f_sc);
        if class == ConcreteClass::UltraHigh {
            est.flag(
                DiagnosticCode::ConversionExtrapolated,
                "UHSC has no cube conversion factor; HSC factor 0.98 reused",
            );
        }
        Ok(est)
    }
}

pub fn predict_aci(column: &ColumnSpec) -> Result<CapacityPrediction> {
    Aci.predict(column, &Settings::default())
}

pub fn predict_ec4(column: &ColumnSpec, settings: &Settings) -> Result<CapacityPrediction> {
    Ec4.predict(column, settings)
}

pub fn predict_aisc(column: &ColumnSpec, settings: &Settings) -> Result<CapacityPrediction> {
    Aisc.predict(column, settings)
}

pub fn predict_cisc(column: &ColumnSpec, settings: &Settings) -> Result<CapacityPrediction> {
    Cisc.predict(column, settings)
}

pub fn predict_dbj(column: &ColumnSpec, settings: &Settings) -> Result<CapacityPrediction> {
    Dbj.predict(column, settings)
}
