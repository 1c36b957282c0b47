use serde::Serialize;

use super::concrete::{concrete_stress, ConfinedConcreteParams};
use super::steel::{steel_curve_params, steel_stress};
use crate::error::{CfstError, Result};
use crate::section::{ColumnSpec, SteelMaterial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CurveKind {
    Steel,
    ConcreteConfined,
}

/// Tabulated stress-strain law: strictly increasing strains from zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StressStrainCurve {
    pub kind: CurveKind,
    /// (strain, stress in MPa)
    pub points: Vec<(f64, f64)>,
}

impl StressStrainCurve {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("strain,stress_MPa\n");
        for (eps, sigma) in &self.points {
            out.push_str(&format!("{eps},{sigma}\n"));
        }
        out
    }
}

/// Sample strains on [0, eps_max]: every breakpoint below eps_max is kept
/// exactly, the remaining `n - knots` samples are spread over the segments in
/// proportion to their length, uniformly within each segment.
pub(crate) fn sample_strains(breakpoints: &[f64], eps_max: f64, n: usize) -> Vec<f64> {
    let mut knots: Vec<f64> = std::iter::once(0.0)
        .chain(
            breakpoints
                .iter()
                .copied()
                .filter(|&b| b > 0.0 && b < eps_max),
        )
        .chain(std::iter::once(eps_max))
        .collect();
    knots.sort_by(f64::total_cmp);
    knots.dedup();

    let segments = knots.len() - 1;
    let extra = n.saturating_sub(knots.len());
    let mut counts: Vec<usize> = Vec::with_capacity(segments);
    let mut remainders: Vec<(f64, usize)> = Vec::with_capacity(segments);
    for (i, w) in knots.windows(2).enumerate() {
        let share = extra as f64 * (w[1] - w[0]) / eps_max;
        counts.push(share.floor() as usize);
        remainders.push((share - share.floor(), i));
    }
    let assigned: usize = counts.iter().sum();
    remainders.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, i) in remainders.iter().take(extra.saturating_sub(assigned)) {
        counts[i] += 1;
    }

    let mut strains = Vec::with_capacity(knots.len() + extra);
    for (w, &k) in knots.windows(2).zip(&counts) {
        strains.push(w[0]);
        let step = (w[1] - w[0]) / (k + 1) as f64;
        strains.extend((1..=k).map(|j| w[0] + step * j as f64));
    }
    strains.push(eps_max);
    strains
}

fn check_sampling(n: usize, eps_max: f64) -> Result<()> {
    if n < 2 {
        return Err(CfstError::InvalidInput {
            name: "n",
            value: n as f64,
            reason: "need at least 2 samples",
        });
    }
    if !(eps_max.is_finite() && eps_max > 0.0) {
        return Err(CfstError::InvalidInput {
            name: "eps_max",
            value: eps_max,
            reason: "must be finite and > 0",
        });
    }
    Ok(())
}

pub fn sample_steel_curve(
    steel: &SteelMaterial,
    n: usize,
    eps_max: f64,
) -> Result<StressStrainCurve> {
    check_sampling(n, eps_max)?;
    let params = steel_curve_params(steel)?;
    let points = sample_strains(&[params.eps_y, params.eps_p, params.eps_u], eps_max, n)
        .into_iter()
        .map(|eps| Ok((eps, steel_stress(eps, steel, &params)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(StressStrainCurve {
        kind: CurveKind::Steel,
        points,
    })
}

pub fn sample_concrete_curve(
    column: &ColumnSpec,
    n: usize,
    eps_max: f64,
) -> Result<StressStrainCurve> {
    check_sampling(n, eps_max)?;
    let params = ConfinedConcreteParams::for_column(column);
    let concrete = column.concrete();
    let points = sample_strains(&[params.eps_c0, params.eps_cc], eps_max, n)
        .into_iter()
        .map(|eps| {
            Ok((
                eps,
                concrete_stress(eps, concrete.f_c, concrete.e_c, &params)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StressStrainCurve {
        kind: CurveKind::ConcreteConfined,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::section::{CircularSection, ConcreteMaterial};
    use proptest::prelude::*;

    fn r1() -> ColumnSpec {
        ColumnSpec::new(
            CircularSection::new(100.0, 5.0, 300.0).unwrap(),
            SteelMaterial::new(300.0, Some(450.0), Some(200_000.0)).unwrap(),
            ConcreteMaterial::new(30.0, None, None).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn two_point_steel_curve() {
        let s = SteelMaterial::new(300.0, Some(450.0), Some(200_000.0)).unwrap();
        let c = sample_steel_curve(&s, 2, 0.0015).unwrap();
        assert_eq!(c.points, vec![(0.0, 0.0), (0.0015, 300.0)]);
    }

    #[test]
    fn breakpoints_survive_small_n() {
        let s = SteelMaterial::new(300.0, Some(450.0), Some(200_000.0)).unwrap();
        let c = sample_steel_curve(&s, 2, 0.2).unwrap();
        let strains: Vec<f64> = c.points.iter().map(|p| p.0).collect();
        assert_eq!(strains, vec![0.0, 0.0015, 0.0225, 0.15, 0.2]);
    }

    #[test]
    fn concrete_reference_plateau() {
        let c = sample_concrete_curve(&r1(), 200, 0.03).unwrap();
        assert_eq!(c.points.len(), 200);
        let plateau: Vec<_> = c.points.iter().filter(|p| p.1 == 30.0).collect();
        let first = plateau.first().unwrap().0;
        let last = plateau.last().unwrap().0;
        assert!(((first - 1.890e-3) / 1.890e-3).abs() < 5e-3);
        assert!(((last - 8.91e-3) / 8.91e-3).abs() < 1e-2);
    }

    #[test]
    fn rejects_bad_sampling() {
        assert!(sample_concrete_curve(&r1(), 1, 0.03).is_err());
        assert!(sample_concrete_curve(&r1(), 10, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn sampling_contract(n in 2usize..400, eps_max in 1e-4f64..0.5) {
            let bps = [0.0015, 0.0225, 0.15];
            let s = sample_strains(&bps, eps_max, n);
            prop_assert_eq!(s[0], 0.0);
            prop_assert_eq!(*s.last().unwrap(), eps_max);
            prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
            let inside = bps.iter().filter(|&&b| b < eps_max).count();
            prop_assert_eq!(s.len(), n.max(inside + 2));
            for b in bps.iter().filter(|&&b| b < eps_max) {
                prop_assert!(s.contains(b));
            }
        }
    }
}
