//! Section geometry, material inputs and the derived quantities every other
//! module builds on.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_non_negative, ensure_positive, CfstError, Result};

/// Elastic modulus used for steel when a record does not give one.
pub const DEFAULT_STEEL_MODULUS: f64 = 200_000.0;
/// Maximum aggregate size used when a record does not give one.
pub const DEFAULT_MAX_AGGREGATE: f64 = 20.0;

/// Yield strengths the steel law was calibrated on.
pub const STEEL_VALIDITY_RANGE: (f64, f64) = (200.0, 800.0);
/// Cylinder strengths covered by the specimen database.
pub const CONCRETE_DATABASE_RANGE: (f64, f64) = (12.5, 185.6);

/// Circular hollow section: outer diameter, wall thickness and column length (mm).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircularSection {
    pub diameter: f64,
    pub thickness: f64,
    pub length: f64,
}

impl CircularSection {
    pub fn new(diameter: f64, thickness: f64, length: f64) -> Result<Self> {
        ensure_positive("D", diameter)?;
        ensure_positive("t", thickness)?;
        ensure_positive("L", length)?;
        if diameter <= 2.0 * thickness {
            return Err(CfstError::NoCore {
                d: diameter,
                two_t: 2.0 * thickness,
            });
        }
        Ok(Self {
            diameter,
            thickness,
            length,
        })
    }

    pub fn core_diameter(&self) -> f64 {
        self.diameter - 2.0 * self.thickness
    }

    /// Second moment of area of the steel annulus (mm⁴).
    pub fn steel_inertia(&self) -> f64 {
        PI / 64.0 * (self.diameter.powi(4) - self.core_diameter().powi(4))
    }

    /// Second moment of area of the concrete core (mm⁴).
    pub fn core_inertia(&self) -> f64 {
        PI / 64.0 * self.core_diameter().powi(4)
    }
}

/// Steel (annulus) and core (disk) areas in mm².
pub fn section_areas(section: &CircularSection) -> Result<(f64, f64)> {
    let d = section.diameter;
    let t = section.thickness;
    if d <= 2.0 * t {
        return Err(CfstError::NoCore { d, two_t: 2.0 * t });
    }
    let core = d - 2.0 * t;
    let a_c = PI / 4.0 * core * core;
    // Expanded form of D² − (D−2t)² avoids cancellation for thin walls.
    let a_s = PI * t * (d - t);
    Ok((a_s, a_c))
}

/// ξ_c = A_s·f_y / (A_c·f_c').
pub fn confinement_factor(a_s: f64, f_y: f64, a_c: f64, f_c: f64) -> f64 {
    (a_s * f_y) / (a_c * f_c)
}

/// E_c = 4700·√f_c' unless an override is supplied.
pub fn concrete_elastic_modulus(f_c: f64, override_modulus: Option<f64>) -> f64 {
    override_modulus.unwrap_or_else(|| 4700.0 * f_c.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SteelMaterial {
    pub f_y: f64,
    pub f_u: f64,
    pub e_s: f64,
    pub f_u_defaulted: bool,
    pub e_s_defaulted: bool,
}

impl SteelMaterial {
    /// Missing f_u defaults to max(1.25·f_y, f_y + 50); missing E_s to 200 GPa.
    pub fn new(f_y: f64, f_u: Option<f64>, e_s: Option<f64>) -> Result<Self> {
        ensure_non_negative("f_y", f_y)?;
        let (f_u, f_u_defaulted) = match f_u {
            Some(v) => (v, false),
            None => ((1.25 * f_y).max(f_y + 50.0), true),
        };
        ensure_non_negative("f_u", f_u)?;
        if f_u < f_y {
            return Err(CfstError::InvalidInput {
                name: "f_u",
                value: f_u,
                reason: "must be >= f_y",
            });
        }
        let (e_s, e_s_defaulted) = match e_s {
            Some(v) => (v, false),
            None => (DEFAULT_STEEL_MODULUS, true),
        };
        ensure_positive("E_s", e_s)?;
        Ok(Self {
            f_y,
            f_u,
            e_s,
            f_u_defaulted,
            e_s_defaulted,
        })
    }

    /// Whether f_y sits inside the range the steel law was calibrated on.
    pub fn in_validity_range(&self) -> bool {
        (STEEL_VALIDITY_RANGE.0..=STEEL_VALIDITY_RANGE.1).contains(&self.f_y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcreteMaterial {
    /// Cylinder (150×300) compressive strength f_c' in MPa.
    pub f_c: f64,
    pub d_max: f64,
    pub e_c: f64,
    pub d_max_defaulted: bool,
    pub e_c_defaulted: bool,
}

impl ConcreteMaterial {
    pub fn new(f_c: f64, d_max: Option<f64>, e_c: Option<f64>) -> Result<Self> {
        ensure_positive("f_c", f_c)?;
        let (d_max, d_max_defaulted) = match d_max {
            Some(v) => (ensure_non_negative("d_max", v)?, false),
            None => (DEFAULT_MAX_AGGREGATE, true),
        };
        let e_c_defaulted = e_c.is_none();
        let e_c = ensure_positive("E_c", concrete_elastic_modulus(f_c, e_c))?;
        Ok(Self {
            f_c,
            d_max,
            e_c,
            d_max_defaulted,
            e_c_defaulted,
        })
    }

    pub fn in_database_range(&self) -> bool {
        (CONCRETE_DATABASE_RANGE.0..=CONCRETE_DATABASE_RANGE.1).contains(&self.f_c)
    }

    pub fn class(&self) -> ConcreteClass {
        classify_concrete(self.f_c)
    }
}

/// One circular CFST column with its derived section quantities.
///
/// Fields are private so the derived areas and ratios cannot drift from the
/// inputs; build a new spec to change anything.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ColumnSpec {
    section: CircularSection,
    steel: SteelMaterial,
    concrete: ConcreteMaterial,
    a_s: f64,
    a_c: f64,
    xi_c: f64,
}

impl ColumnSpec {
    pub fn new(
        section: CircularSection,
        steel: SteelMaterial,
        concrete: ConcreteMaterial,
    ) -> Result<Self> {
        let (a_s, a_c) = section_areas(&section)?;
        let xi_c = confinement_factor(a_s, steel.f_y, a_c, concrete.f_c);
        Ok(Self {
            section,
            steel,
            concrete,
            a_s,
            a_c,
            xi_c,
        })
    }

    pub fn section(&self) -> &CircularSection {
        &self.section
    }
    pub fn steel(&self) -> &SteelMaterial {
        &self.steel
    }
    pub fn concrete(&self) -> &ConcreteMaterial {
        &self.concrete
    }
    pub fn a_s(&self) -> f64 {
        self.a_s
    }
    pub fn a_c(&self) -> f64 {
        self.a_c
    }
    pub fn xi_c(&self) -> f64 {
        self.xi_c
    }
    pub fn dt_ratio(&self) -> f64 {
        self.section.diameter / self.section.thickness
    }
    pub fn ld_ratio(&self) -> f64 {
        self.section.length / self.section.diameter
    }
    /// α_s = A_s / A_c.
    pub fn alpha_s(&self) -> f64 {
        self.a_s / self.a_c
    }
    pub fn f_y(&self) -> f64 {
        self.steel.f_y
    }
    pub fn f_c(&self) -> f64 {
        self.concrete.f_c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConcreteClass {
    #[serde(rename = "NSC")]
    Normal,
    #[serde(rename = "HSC")]
    High,
    #[serde(rename = "UHSC")]
    UltraHigh,
}

impl fmt::Display for ConcreteClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConcreteClass::Normal => "NSC",
            ConcreteClass::High => "HSC",
            ConcreteClass::UltraHigh => "UHSC",
        })
    }
}

/// NSC up to and including 60 MPa, UHSC from 120 MPa inclusive, HSC between.
pub fn classify_concrete(f_c: f64) -> ConcreteClass {
    if f_c <= 60.0 {
        ConcreteClass::Normal
    } else if f_c < 120.0 {
        ConcreteClass::High
    } else {
        ConcreteClass::UltraHigh
    }
}

/// Test specimen a measured compressive strength was obtained on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SpecimenKind {
    /// 150×300 mm cylinder (the reference specimen).
    Cyl150,
    /// 100×200 mm cylinder.
    Cyl100,
    /// 150 mm cube.
    Cube150,
    /// 100 mm cube.
    Cube100,
}

impl fmt::Display for SpecimenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecimenKind::Cyl150 => "CYL150",
            SpecimenKind::Cyl100 => "CYL100",
            SpecimenKind::Cube150 => "CUBE150",
            SpecimenKind::Cube100 => "CUBE100",
        })
    }
}

impl FromStr for SpecimenKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "CYL150" => Ok(SpecimenKind::Cyl150),
            "CYL100" => Ok(SpecimenKind::Cyl100),
            "CUBE150" => Ok(SpecimenKind::Cube150),
            "CUBE100" => Ok(SpecimenKind::Cube100),
            other => Err(format!(
                "unknown specimen kind '{other}' (expected CYL150, CYL100, CUBE150 or CUBE100)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasuredStrength {
    pub value: f64,
    pub kind: SpecimenKind,
}

impl MeasuredStrength {
    pub fn new(value: f64, kind: SpecimenKind) -> Result<Self> {
        ensure_positive("fc_measured", value)?;
        Ok(Self { value, kind })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvertedStrength {
    /// Equivalent 150×300 cylinder strength (MPa).
    pub f_c: f64,
    /// Class whose factors produced `f_c`.
    pub class: ConcreteClass,
}

/// Multiplier taking a measured value to the 150×300 cylinder basis.
fn conversion_factor(kind: SpecimenKind, class: ConcreteClass) -> Result<f64> {
    use ConcreteClass::*;
    use SpecimenKind::*;
    Ok(match (kind, class) {
        (Cyl150, _) => 1.0,
        (Cyl100, Normal) => 1.0 / 1.03,
        (Cyl100, High) => 1.0 / 1.04,
        (Cyl100, UltraHigh) => 0.95,
        (Cube150, Normal) => 0.88,
        (Cube150, High) => 0.98,
        (Cube100, Normal) => 0.82,
        (Cube100, High) => 0.92,
        (Cube150 | Cube100, UltraHigh) => {
            return Err(CfstError::UnsupportedConversion { kind, class })
        }
    })
}

/// Converts a measured strength to the cylinder-150 basis.
///
/// The class is needed to pick the factor but is itself a property of the
/// converted value, so the raw value is classified first, converted, and
/// re-converted once if the converted value lands in a different class.
pub fn convert_strength(measured: &MeasuredStrength) -> Result<ConvertedStrength> {
    let first_class = classify_concrete(measured.value);
    let first = measured.value * conversion_factor(measured.kind, first_class)?;
    let class = classify_concrete(first);
    if class == first_class {
        return Ok(ConvertedStrength { f_c: first, class });
    }
    let f_c = measured.value * conversion_factor(measured.kind, class)?;
    Ok(ConvertedStrength { f_c, class })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn areas_of_reference_section() {
        let s = CircularSection::new(100.0, 5.0, 300.0).unwrap();
        let (a_s, a_c) = section_areas(&s).unwrap();
        assert!(rel(a_s, 1492.3) < 1e-3);
        assert!(rel(a_c, 6361.7) < 1e-3);
        assert!(rel(a_s + a_c, PI / 4.0 * 100.0 * 100.0) < 1e-12);
    }

    #[test]
    fn vanishing_core() {
        let s = CircularSection {
            diameter: 100.0,
            thickness: 49.999_999,
            length: 300.0,
        };
        let (_, a_c) = section_areas(&s).unwrap();
        assert!(a_c < 1e-9);
    }

    #[test]
    fn no_core_is_rejected() {
        assert!(matches!(
            CircularSection::new(100.0, 50.0, 300.0),
            Err(CfstError::NoCore { .. })
        ));
        let s = CircularSection {
            diameter: 100.0,
            thickness: 50.0,
            length: 300.0,
        };
        assert!(section_areas(&s).is_err());
    }

    #[test]
    fn confinement_factor_reference_and_edges() {
        let xi = confinement_factor(1492.3, 300.0, 6361.7, 30.0);
        assert!(rel(xi, 2.346) < 5e-3);
        assert_eq!(confinement_factor(1492.3, 0.0, 6361.7, 30.0), 0.0);
        let doubled = confinement_factor(2.0 * 1492.3, 300.0, 2.0 * 6361.7, 30.0);
        assert!(rel(doubled, xi) < 1e-15);
    }

    #[test]
    fn elastic_modulus_default_and_override() {
        assert!(rel(concrete_elastic_modulus(30.0, None), 25_743.0) < 1e-3);
        assert_eq!(concrete_elastic_modulus(30.0, Some(30_000.0)), 30_000.0);
        let c = ConcreteMaterial::new(30.0, None, Some(30_000.0)).unwrap();
        assert!(!c.e_c_defaulted);
        assert!(c.d_max_defaulted);
        assert_eq!(c.d_max, 20.0);
    }

    #[test]
    fn steel_defaults_are_flagged() {
        let s = SteelMaterial::new(300.0, None, None).unwrap();
        assert_eq!(s.f_u, 375.0);
        assert_eq!(s.e_s, DEFAULT_STEEL_MODULUS);
        assert!(s.f_u_defaulted && s.e_s_defaulted);
        // low f_y: the +50 MPa floor governs
        assert_eq!(SteelMaterial::new(150.0, None, None).unwrap().f_u, 200.0);
        assert!(SteelMaterial::new(300.0, Some(250.0), None).is_err());
        assert!(!SteelMaterial::new(900.0, None, None)
            .unwrap()
            .in_validity_range());
    }

    #[test]
    fn classification_boundaries() {
        assert_eq!(classify_concrete(60.0), ConcreteClass::Normal);
        assert_eq!(classify_concrete(90.0), ConcreteClass::High);
        assert_eq!(classify_concrete(120.0), ConcreteClass::UltraHigh);
        assert_eq!(classify_concrete(119.999), ConcreteClass::High);
    }

    #[test]
    fn strength_conversion() {
        let m = MeasuredStrength::new(50.0, SpecimenKind::Cyl150).unwrap();
        assert_eq!(convert_strength(&m).unwrap().f_c, 50.0);

        let m = MeasuredStrength::new(41.2, SpecimenKind::Cyl100).unwrap();
        let c = convert_strength(&m).unwrap();
        assert!(rel(c.f_c, 40.0) < 5e-3);
        assert_eq!(c.class, ConcreteClass::Normal);

        let m = MeasuredStrength::new(150.0, SpecimenKind::Cube150).unwrap();
        assert!(matches!(
            convert_strength(&m),
            Err(CfstError::UnsupportedConversion { .. })
        ));
    }

    #[test]
    fn conversion_reclassifies_once() {
        // 66 MPa cube classifies HSC raw; 0.98·66 = 64.7 stays HSC.
        let m = MeasuredStrength::new(66.0, SpecimenKind::Cube150).unwrap();
        let c = convert_strength(&m).unwrap();
        assert_eq!(c.class, ConcreteClass::High);
        assert!(rel(c.f_c, 0.98 * 66.0) < 1e-12);

        // 61 MPa on a 100 mm cube: HSC raw gives 56.1 (NSC), so re-convert with NSC.
        let m = MeasuredStrength::new(61.0, SpecimenKind::Cube100).unwrap();
        let c = convert_strength(&m).unwrap();
        assert_eq!(c.class, ConcreteClass::Normal);
        assert!(rel(c.f_c, 0.82 * 61.0) < 1e-12);

        // 125 MPa on a 100 mm cylinder: UHSC raw gives 118.75 (HSC), re-converted with HSC.
        let m = MeasuredStrength::new(125.0, SpecimenKind::Cyl100).unwrap();
        let c = convert_strength(&m).unwrap();
        assert_eq!(c.class, ConcreteClass::High);
        assert!(rel(c.f_c, 125.0 / 1.04) < 1e-12);
    }

    #[test]
    fn specimen_kind_parses() {
        assert_eq!(
            "cube100".parse::<SpecimenKind>().unwrap(),
            SpecimenKind::Cube100
        );
        assert!("prism".parse::<SpecimenKind>().is_err());
    }
}
