//! Constitutive laws for the steel tube and the confined concrete core, plus
//! the concrete damaged plasticity (CDPM) parameters derived from them.

mod cdpm;
mod concrete;
mod curve;
mod steel;

pub use cdpm::{
    biaxial_ratio, dilation_angle, fracture_energy, kc, CdpmParameterSet, MAX_DILATION_ANGLE,
};
pub use concrete::{
    concrete_stress, confined_peak_strain, confining_pressure, peak_strain_unconfined,
    residual_stress, softening_params, ConfinedConcreteParams, PEAK_STRAIN_FIT_RANGE,
};
pub(crate) use curve::sample_strains;
pub use curve::{sample_concrete_curve, sample_steel_curve, CurveKind, StressStrainCurve};
pub use steel::{steel_curve_params, steel_stress, SteelCurveParams};
