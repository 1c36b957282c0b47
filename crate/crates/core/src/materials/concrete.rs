//! Three-stage confined concrete law: a rational ascending branch up to the
//! unconfined peak strain, a plateau at f_c' out to the confined peak strain,
//! then exponential softening towards a residual stress.

use serde::Serialize;

use crate::error::{CfstError, Result};
use crate::section::ColumnSpec;

/// Strengths (MPa) the unconfined peak-strain regression was fitted on.
pub const PEAK_STRAIN_FIT_RANGE: (f64, f64) = (6.0, 105.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConfinedConcreteParams {
    pub eps_c0: f64,
    pub f_r: f64,
    pub eps_cc: f64,
    pub f_re: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl ConfinedConcreteParams {
    pub fn for_column(column: &ColumnSpec) -> Self {
        let f_r = confining_pressure(column.f_y(), column.f_c(), column.dt_ratio());
        Self::with_confining_pressure(column, f_r)
    }

    /// Same composition with a caller-chosen confining pressure (0 gives the
    /// unconfined plateau-free curve).
    pub fn with_confining_pressure(column: &ColumnSpec, f_r: f64) -> Self {
        let f_c = column.f_c();
        let xi_c = column.xi_c();
        let eps_c0 = peak_strain_unconfined(f_c);
        let (alpha, beta) = softening_params(xi_c);
        Self {
            eps_c0,
            f_r,
            eps_cc: confined_peak_strain(eps_c0, f_r, f_c),
            f_re: residual_stress(xi_c, f_c),
            alpha,
            beta,
        }
    }

    pub fn peak_strain_in_fit_range(f_c: f64) -> bool {
        (PEAK_STRAIN_FIT_RANGE.0..=PEAK_STRAIN_FIT_RANGE.1).contains(&f_c)
    }
}

/// Strain at peak stress of unconfined concrete.
pub fn peak_strain_unconfined(f_c: f64) -> f64 {
    (-0.067 * f_c * f_c + 29.9 * f_c + 1053.0) * 1e-6
}

/// Lateral confining pressure at ultimate (MPa).
pub fn confining_pressure(f_y: f64, f_c: f64, dt_ratio: f64) -> f64 {
    let numerator = 1.0 + 0.03224 * f_y;
    let denominator = 1.0 + 1.52e-6 * f_c.powf(-4.5);
    numerator / denominator * (-0.0212 * dt_ratio).exp()
}

pub fn confined_peak_strain(eps_c0: f64, f_r: f64, f_c: f64) -> f64 {
    eps_c0 * (1.0 + 17.4 * (f_r / f_c).powf(1.06))
}

/// Residual stress of the softening branch, capped at 0.25·f_c'.
pub fn residual_stress(xi_c: f64, f_c: f64) -> f64 {
    let raw = 0.7 * (1.0 - (-1.38 * xi_c).exp()) * f_c;
    raw.min(0.25 * f_c)
}

/// (α, β) of the softening branch.
pub fn softening_params(xi_c: f64) -> (f64, f64) {
    let alpha = 0.04 - 0.036 / (1.0 + (6.08 * xi_c - 3.49).exp());
    (alpha, 1.2)
}

pub fn concrete_stress(
    eps: f64,
    f_c: f64,
    e_c: f64,
    params: &ConfinedConcreteParams,
) -> Result<f64> {
    if eps < 0.0 || eps.is_nan() {
        return Err(CfstError::NegativeStrain(eps));
    }
    if eps < params.eps_c0 {
        let a = e_c * params.eps_c0 / f_c;
        let b = (a - 1.0).powi(2) / 0.55 - 1.0;
        let x = eps / params.eps_c0;
        let ratio = (a * x + b * x * x) / (1.0 + (a - 2.0) * x + (b + 1.0) * x * x);
        return Ok(f_c * ratio);
    }
    if eps <= params.eps_cc {
        return Ok(f_c);
    }
    let decay = (-((eps - params.eps_cc) / params.alpha).powf(params.beta)).exp();
    Ok(params.f_re + (f_c - params.f_re) * decay)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::section::{CircularSection, ConcreteMaterial, SteelMaterial};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn r1() -> ColumnSpec {
        ColumnSpec::new(
            CircularSection::new(100.0, 5.0, 300.0).unwrap(),
            SteelMaterial::new(300.0, Some(450.0), Some(200_000.0)).unwrap(),
            ConcreteMaterial::new(30.0, None, None).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn unconfined_peak_strain() {
        assert!(rel(peak_strain_unconfined(30.0), 1.890e-3) < 5e-3);
        assert!(rel(peak_strain_unconfined(100.0), 3.373e-3) < 5e-3);
        // positive root of the quadratic sits near 480 MPa
        for fc in [1.0, 50.0, 200.0, 300.0, 445.0] {
            assert!(peak_strain_unconfined(fc) > 0.0);
        }
    }

    #[test]
    fn confining_pressure_reference() {
        assert!(rel(confining_pressure(300.0, 30.0, 20.0), 6.99) < 5e-3);
        assert!(confining_pressure(300.0, 30.0, 5000.0) < 1e-40);
        let lo = confining_pressure(300.0, 20.0, 20.0);
        let hi = confining_pressure(300.0, 120.0, 20.0);
        assert!(rel(lo, hi) < 1e-9);
    }

    #[test]
    fn confined_peak_strain_reference() {
        assert_eq!(confined_peak_strain(1.89e-3, 0.0, 30.0), 1.89e-3);
        assert!(rel(confined_peak_strain(1.890e-3, 6.99, 30.0), 8.91e-3) < 1e-2);
        assert!(
            confined_peak_strain(1.89e-3, 7.0, 30.0) > confined_peak_strain(1.89e-3, 6.0, 30.0)
        );
    }

    #[test]
    fn residual_stress_cap() {
        assert_eq!(residual_stress(0.0, 30.0), 0.0);
        assert_eq!(residual_stress(2.346, 30.0), 7.5);
        // cap onset: 0.7(1 − e^(−1.38ξ)) = 0.25
        assert!(residual_stress(0.315, 30.0) < 7.5);
        assert_eq!(residual_stress(0.325, 30.0), 7.5);
    }

    #[test]
    fn softening_shape() {
        let (a0, b) = softening_params(0.0);
        assert!(rel(a0, 0.00507) < 1e-2);
        assert_eq!(b, 1.2);
        assert!((softening_params(50.0).0 - 0.04).abs() < 1e-12);
    }

    #[test]
    fn stress_stages() {
        let col = r1();
        let p = ConfinedConcreteParams::for_column(&col);
        let e_c = col.concrete().e_c;
        assert_eq!(concrete_stress(0.0, 30.0, e_c, &p).unwrap(), 0.0);
        assert_eq!(concrete_stress(p.eps_c0, 30.0, e_c, &p).unwrap(), 30.0);
        assert_eq!(concrete_stress(p.eps_cc, 30.0, e_c, &p).unwrap(), 30.0);
        // A = 1.622, B = −0.297 at ε = 0.001
        assert!(rel(concrete_stress(0.001, 30.0, e_c, &p).unwrap(), 23.3) < 1e-2);
        assert!(rel(concrete_stress(10.0, 30.0, e_c, &p).unwrap(), p.f_re) < 1e-12);
        assert!(concrete_stress(-0.001, 30.0, e_c, &p).is_err());
    }

    #[test]
    fn eq10_never_overshoots_peak() {
        // 1 − y = (1 − x)²/den, so the ascending branch stays below f_c.
        let col = r1();
        let p = ConfinedConcreteParams::for_column(&col);
        for i in 0..1000 {
            let eps = p.eps_c0 * i as f64 / 1000.0;
            assert!(concrete_stress(eps, 30.0, col.concrete().e_c, &p).unwrap() <= 30.0);
        }
    }
}
