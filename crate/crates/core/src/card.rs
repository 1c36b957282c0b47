//! Solver-neutral text material card for the concrete core.
//!
//! ```text
//! [ELASTIC]            E_c  poisson
//! [CDPM]               psi  ecc  fb0/fc  K_c  viscosity
//! [COMPRESSION TABLE]  strain  stress   (one pair per line)
//! [TENSION]            G_f
//! ```
//!
//! Lines starting with `**` are comments.

use std::fmt::Write;

use crate::error::Result;
use crate::materials::{sample_concrete_curve, CdpmParameterSet, StressStrainCurve};
use crate::section::ColumnSpec;

/// Poisson's ratio written for the concrete; not derived from anything.
pub const CONCRETE_POISSON: f64 = 0.2;

/// FE modelling constants echoed in the header for traceability only.
pub const FRICTION_COEFFICIENT: f64 = 0.6;
pub const IMPERFECTION_DIVISOR: f64 = 1000.0;
pub const MESH_DIVISOR: f64 = 10.0;

pub fn material_card(column: &ColumnSpec, n: usize, eps_max: f64) -> Result<String> {
    let cdpm = CdpmParameterSet::for_column(column);
    let curve = sample_concrete_curve(column, n, eps_max)?;
    let mut out = String::new();
    render(&mut out, column, &cdpm, &curve).expect("writing to a String cannot fail");
    Ok(out)
}

fn render(
    out: &mut String,
    column: &ColumnSpec,
    cdpm: &CdpmParameterSet,
    curve: &StressStrainCurve,
) -> std::fmt::Result {
    let section = column.section();
    let steel = column.steel();
    let concrete = column.concrete();
    let marker = |defaulted: bool| if defaulted { " (defaulted)" } else { "" };

    writeln!(out, "** CFST confined concrete material card")?;
    writeln!(
        out,
        "** column: D = {} mm, t = {} mm, L = {} mm, D/t = {:.3}, L/D = {:.3}, xi_c = {:.4}",
        section.diameter,
        section.thickness,
        section.length,
        column.dt_ratio(),
        column.ld_ratio(),
        column.xi_c()
    )?;
    writeln!(
        out,
        "** steel: f_y = {} MPa, f_u = {} MPa{}, E_s = {} MPa{}",
        steel.f_y,
        steel.f_u,
        marker(steel.f_u_defaulted),
        steel.e_s,
        marker(steel.e_s_defaulted)
    )?;
    writeln!(
        out,
        "** concrete: f_c' = {} MPa, d_max = {} mm{}, E_c = {:.1} MPa{}",
        concrete.f_c,
        concrete.d_max,
        marker(concrete.d_max_defaulted),
        concrete.e_c,
        marker(concrete.e_c_defaulted)
    )?;
    writeln!(
        out,
        "** FE context: friction {}, imperfection L/{} = {} mm, mesh D/{} = {} mm",
        FRICTION_COEFFICIENT,
        IMPERFECTION_DIVISOR,
        section.length / IMPERFECTION_DIVISOR,
        MESH_DIVISOR,
        section.diameter / MESH_DIVISOR
    )?;
    out.push_str(
        "** field order: ELASTIC -> *Elastic (E, nu); CDPM -> *Concrete Damaged Plasticity\n",
    );
    out.push_str("**   (dilation, eccentricity, fb0/fc0, K, viscosity)\n");
    out.push_str("** COMPRESSION TABLE -> total strain, stress; TENSION -> fracture energy GFI\n");
    writeln!(out, "[ELASTIC]")?;
    writeln!(out, "{:.1} {}", concrete.e_c, CONCRETE_POISSON)?;
    writeln!(
        out,
        "** poisson {CONCRETE_POISSON} is a default, not a derived value"
    )?;
    writeln!(out, "[CDPM]")?;
    writeln!(
        out,
        "{:.4} {} {:.4} {:.4} {}",
        cdpm.psi, cdpm.ecc, cdpm.fb0_ratio, cdpm.k_c, cdpm.viscosity
    )?;
    writeln!(out, "[COMPRESSION TABLE]")?;
    for (eps, sigma) in &curve.points {
        writeln!(out, "{eps:.6e} {sigma:.4}")?;
    }
    writeln!(out, "[TENSION]")?;
    writeln!(out, "{:.6}", cdpm.g_f)?;
    Ok(())
}

/// Returns the whitespace-separated values on the line after `[section]`.
pub fn section_values(card: &str, section: &str) -> Option<Vec<f64>> {
    let tag = format!("[{section}]");
    let mut lines = card.lines().filter(|l| !l.starts_with("**"));
    lines.find(|l| l.trim() == tag)?;
    let line = lines.next()?;
    line.split_whitespace().map(|v| v.parse().ok()).collect()
}
