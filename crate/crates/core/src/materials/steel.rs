use serde::Serialize;

use crate::error::{CfstError, Result};
use crate::section::SteelMaterial;

/// Breakpoints and hardening shape of the four-stage steel law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteelCurveParams {
    pub eps_y: f64,
    /// Onset of strain hardening.
    pub eps_p: f64,
    /// Strain at f_u.
    pub eps_u: f64,
    /// Hardening exponent; meaningless when `degenerate` is set.
    pub p: f64,
    /// Modulus at the onset of hardening, 0.02·E_s.
    pub e_p: f64,
    /// f_u == f_y: the yield plateau runs on to eps_u.
    pub degenerate: bool,
    /// f_y above 800 MPa: the upper branch was extrapolated.
    pub extrapolated: bool,
}

pub fn steel_curve_params(steel: &SteelMaterial) -> Result<SteelCurveParams> {
    let f_y = steel.f_y;
    if !(f_y > 0.0) {
        return Err(CfstError::InvalidInput {
            name: "f_y",
            value: f_y,
            reason: "steel curve needs f_y > 0",
        });
    }
    let eps_y = f_y / steel.e_s;
    let (eps_p, eps_u) = if f_y <= 300.0 {
        (15.0 * eps_y, 100.0 * eps_y)
    } else {
        (
            (15.0 - 0.018 * (f_y - 300.0)) * eps_y,
            (100.0 - 0.15 * (f_y - 300.0)) * eps_y,
        )
    };
    if !(eps_y < eps_p && eps_p < eps_u) {
        return Err(CfstError::SteelStrainOrder {
            eps_y,
            eps_p,
            eps_u,
        });
    }
    let e_p = 0.02 * steel.e_s;
    let rise = steel.f_u - f_y;
    let degenerate = rise <= 0.0;
    let p = if degenerate {
        0.0
    } else {
        e_p * (eps_u - eps_p) / rise
    };
    Ok(SteelCurveParams {
        eps_y,
        eps_p,
        eps_u,
        p,
        e_p,
        degenerate,
        extrapolated: f_y > 800.0,
    })
}

/// Stress (MPa) at a non-negative strain magnitude.
pub fn steel_stress(eps: f64, steel: &SteelMaterial, params: &SteelCurveParams) -> Result<f64> {
    if eps < 0.0 || eps.is_nan() {
        return Err(CfstError::NegativeStrain(eps));
    }
    let (f_y, f_u) = (steel.f_y, steel.f_u);
    let stress = if eps <= params.eps_y {
        steel.e_s * eps
    } else if eps <= params.eps_p || params.degenerate {
        f_y
    } else if eps < params.eps_u {
        let ratio = (params.eps_u - eps) / (params.eps_u - params.eps_p);
        f_u - (f_u - f_y) * ratio.powf(params.p)
    } else {
        f_u
    };
    Ok(stress)
}
