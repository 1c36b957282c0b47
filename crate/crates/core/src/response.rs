//! Axial load-strain response by fiber superposition:
//! N(ε) = σ_s(ε)·A_s + σ_c(ε)·A_c under a uniform compressive strain.
//!
//! The tube is treated as uniaxial; the hoop stress that develops once the
//! core dilates is not modelled, nor is local buckling.

use serde::Serialize;

use crate::error::{CfstError, Result};
use crate::materials::{
    concrete_stress, sample_strains, steel_curve_params, steel_stress, ConfinedConcreteParams,
    SteelCurveParams,
};
use crate::section::ColumnSpec;

pub const MIN_SAMPLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxialResponse {
    /// (strain, load in N)
    pub points: Vec<(f64, f64)>,
    pub peak_load: f64,
    pub peak_strain: f64,
    pub residual_load: f64,
}

impl AxialResponse {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("strain,N_kN\n");
        for (eps, n) in &self.points {
            out.push_str(&format!("{eps},{}\n", n / 1000.0));
        }
        out
    }
}

/// Largest load and the first strain at which it is reached.
pub fn peak_load(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    let (&first, rest) = points.split_first().ok_or(CfstError::EmptyResponse)?;
    let (eps, n) = rest
        .iter()
        .fold(first, |best, &p| if p.1 > best.1 { p } else { best });
    Ok((n, eps))
}

pub fn response_curve(column: &ColumnSpec, eps_max: f64, n: usize) -> Result<AxialResponse> {
    let steel = steel_curve_params(column.steel())?;
    let concrete = ConfinedConcreteParams::for_column(column);
    response_curve_with(column, &steel, &concrete, eps_max, n)
}

/// Same as [`response_curve`] with explicit material parameters, e.g. a
/// concrete law with the confining pressure removed.
pub fn response_curve_with(
    column: &ColumnSpec,
    steel_params: &SteelCurveParams,
    concrete_params: &ConfinedConcreteParams,
    eps_max: f64,
    n: usize,
) -> Result<AxialResponse> {
    if n < MIN_SAMPLES {
        return Err(CfstError::InvalidInput {
            name: "n",
            value: n as f64,
            reason: "response needs at least 8 samples",
        });
    }
    if !(eps_max.is_finite() && eps_max > 0.0) {
        return Err(CfstError::InvalidInput {
            name: "eps_max",
            value: eps_max,
            reason: "must be finite and > 0",
        });
    }
    let breakpoints = [
        steel_params.eps_y,
        steel_params.eps_p,
        steel_params.eps_u,
        concrete_params.eps_c0,
        concrete_params.eps_cc,
    ];
    let steel = column.steel();
    let concrete = column.concrete();
    let points = sample_strains(&breakpoints, eps_max, n)
        .into_iter()
        .map(|eps| {
            let sigma_s = steel_stress(eps, steel, steel_params)?;
            let sigma_c = concrete_stress(eps, concrete.f_c, concrete.e_c, concrete_params)?;
            Ok((eps, sigma_s * column.a_s() + sigma_c * column.a_c()))
        })
        .collect::<Result<Vec<_>>>()?;
    let (peak_load, peak_strain) = peak_load(&points)?;
    let residual_load = points.last().map(|p| p.1).unwrap_or(0.0);
    Ok(AxialResponse {
        points,
        peak_load,
        peak_strain,
        residual_load,
    })
}
