use serde::{Deserialize, Serialize};

use crate::section::ColumnSpec;

/// Upper bound of the dilation angle regression (degrees).
pub const MAX_DILATION_ANGLE: f64 = 56.3;

/// Concrete damaged plasticity inputs for one column.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdpmParameterSet {
    /// Dilation angle ψ in degrees.
    pub psi: f64,
    /// Flow potential eccentricity.
    pub ecc: f64,
    /// f_b0 / f_c'.
    pub fb0_ratio: f64,
    pub k_c: f64,
    pub viscosity: f64,
    /// Tensile fracture energy (N/mm).
    pub g_f: f64,
}

impl CdpmParameterSet {
    pub const ECCENTRICITY: f64 = 0.1;
    pub const VISCOSITY: f64 = 0.0;

    pub fn for_column(column: &ColumnSpec) -> Self {
        let f_c = column.f_c();
        Self {
            psi: dilation_angle(column.xi_c()),
            ecc: Self::ECCENTRICITY,
            fb0_ratio: biaxial_ratio(f_c),
            k_c: kc(f_c),
            viscosity: Self::VISCOSITY,
            g_f: fracture_energy(f_c, column.concrete().d_max),
        }
    }
}

/// f_b0 / f_c' = 1.5 / f_c'^0.075.
pub fn biaxial_ratio(f_c: f64) -> f64 {
    1.5 / f_c.powf(0.075)
}

pub fn kc(f_c: f64) -> f64 {
    5.5 / (5.0 + 2.0 * f_c.powf(0.075))
}

/// Dilation angle in degrees as a function of the confinement factor.
pub fn dilation_angle(xi_c: f64) -> f64 {
    let psi = if xi_c <= 0.5 {
        MAX_DILATION_ANGLE * (1.0 - xi_c)
    } else {
        6.672 * (7.4 / (4.64 + xi_c)).exp()
    };
    psi.clamp(0.0, MAX_DILATION_ANGLE)
}

/// G_f in N/mm from f_c' (MPa) and maximum aggregate size (mm).
pub fn fracture_energy(f_c: f64, d_max: f64) -> f64 {
    (0.00469 * d_max * d_max - 0.5 * d_max + 26.0) * (f_c / 10.0).powf(0.7) * 1e-3
}
