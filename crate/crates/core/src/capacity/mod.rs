//! Ultimate axial load predictors.
//!
//! Every method implements [`CapacityMethod`] and is looked up by name through
//! a [`MethodRegistry`]. Applicability limits never block a prediction: an
//! inapplicable method still reports its load, flagged, so subset statistics
//! can be taken downstream.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CfstError, Result};
use crate::section::ColumnSpec;

mod codes;
mod formulas;
mod limits;
mod proposed;

pub use codes::{
    aisc_nominal_strength, ec4_coefficients, ec4_factors, predict_aci, predict_aisc, predict_cisc,
    predict_dbj, predict_ec4, Aci, Aisc, Cisc, Dbj, Ec4, Ec4Coefficients,
};
pub use formulas::{
    predict_guo, predict_liu, predict_oliveira, predict_oshea, predict_sun, predict_yu,
    predict_zhong_miao, DeOliveira, Guo, Liu, OShea, Sun, Yu, ZhongMiao,
};
pub use limits::{ApplicabilityReport, LimitViolation};
pub use proposed::{eta_c, eta_s, predict_proposed, Proposed, ProposedFactors, DATABASE_ENVELOPE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MethodId {
    Ec4,
    Aisc,
    Cisc,
    Dbj,
    Aci,
    Oshea,
    Yu,
    Liu,
    Sun,
    ZhongMiao,
    Guo,
    DeOliveira,
    Proposed,
}

impl MethodId {
    pub const ALL: [MethodId; 13] = [
        MethodId::Ec4,
        MethodId::Aisc,
        MethodId::Cisc,
        MethodId::Dbj,
        MethodId::Aci,
        MethodId::Oshea,
        MethodId::Yu,
        MethodId::Liu,
        MethodId::Sun,
        MethodId::ZhongMiao,
        MethodId::Guo,
        MethodId::DeOliveira,
        MethodId::Proposed,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MethodId::Ec4 => "EC4",
            MethodId::Aisc => "AISC",
            MethodId::Cisc => "CISC",
            MethodId::Dbj => "DBJ",
            MethodId::Aci => "ACI",
            MethodId::Oshea => "OSHEA",
            MethodId::Yu => "YU",
            MethodId::Liu => "LIU",
            MethodId::Sun => "SUN",
            MethodId::ZhongMiao => "ZHONG_MIAO",
            MethodId::Guo => "GUO",
            MethodId::DeOliveira => "DE_OLIVEIRA",
            MethodId::Proposed => "PROPOSED",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodId {
    type Err = CfstError;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        let key = match key.as_str() {
            "OLIVEIRA" => "DE_OLIVEIRA",
            "ZHONGMIAO" => "ZHONG_MIAO",
            "O_SHEA" | "OSHEA_BRIDGE" => "OSHEA",
            other => other,
        };
        MethodId::ALL
            .into_iter()
            .find(|m| m.as_str() == key)
            .ok_or_else(|| CfstError::UnknownMethod(s.to_string()))
    }
}

/// Reading of the De Oliveira slenderness factor for L/D > 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OliveiraMode {
    /// λ = −0.18·ln(L/D).
    #[default]
    AsPrinted,
    /// λ = 1 − 0.18·ln((L/D)/3), continuous at L/D = 3.
    Corrected,
}

impl FromStr for OliveiraMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "AS_PRINTED" => Ok(OliveiraMode::AsPrinted),
            "CORRECTED" => Ok(OliveiraMode::Corrected),
            other => Err(format!(
                "unknown De Oliveira mode '{other}' (as-printed | corrected)"
            )),
        }
    }
}

/// Values the published formulas leave open. Passed explicitly to every
/// predictor; there is no global configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Settings {
    /// EC4 concrete stiffness factor K_e in (EI)_eff.
    pub ke: f64,
    /// Effective length factor K.
    pub k_eff: f64,
    /// CISC creep ratio C_fs/C_f.
    pub r_cc: f64,
    pub oliveira_mode: OliveiraMode,
    /// Zhong–Miao lateral pressure p_0 (MPa).
    pub zhong_miao_p0: f64,
    /// DBJ characteristic-to-cube factor: f_ck = factor·f_cu,150.
    pub dbj_fck_factor: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            ke: 0.6,
            k_eff: 1.0,
            r_cc: 1.0,
            oliveira_mode: OliveiraMode::AsPrinted,
            zhong_miao_p0: 0.0,
            dbj_fck_factor: 0.67,
        }
    }
}

impl Settings {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("ke", self.ke),
            ("k_eff", self.k_eff),
            ("r_cc", self.r_cc),
            ("dbj_fck_factor", self.dbj_fck_factor),
        ];
        for (name, value) in positive {
            crate::error::ensure_positive(name, value)?;
        }
        crate::error::ensure_non_negative("zhong_miao_p0", self.zhong_miao_p0)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DiagnosticCode {
    NonPhysicalConfinedStress,
    NonPhysicalReductionFactor,
    NonPhysicalFactor,
    OutsideFittedRange,
    OutsideDatabaseEnvelope,
    C3AboveCap,
    LiuSimplificationGap,
    ConversionExtrapolated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: DiagnosticCode, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

/// Load and working values produced by one method, before gating.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Estimate {
    /// Ultimate load (N).
    pub n_u: f64,
    pub intermediates: BTreeMap<String, f64>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Estimate {
    pub(crate) fn new(n_u: f64) -> Self {
        Self {
            n_u,
            ..Self::default()
        }
    }

    pub(crate) fn with(mut self, name: &str, value: f64) -> Self {
        self.intermediates.insert(name.to_string(), value);
        self
    }

    pub(crate) fn flag(&mut self, code: DiagnosticCode, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic::new(code, message));
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CapacityPrediction {
    pub method: MethodId,
    /// Ultimate load (N), recorded whether or not the method applies.
    pub n_u: f64,
    pub applicability: ApplicabilityReport,
    pub intermediates: BTreeMap<String, f64>,
    pub diagnostics: Vec<Diagnostic>,
}

impl CapacityPrediction {
    pub fn n_u_kn(&self) -> f64 {
        self.n_u / 1000.0
    }

    pub fn has_diagnostic(&self, code: DiagnosticCode) -> bool {
        self.diagnostics.iter().any(|d| d.code == code)
    }
}

/// One ultimate-load predictor.
pub trait CapacityMethod: Send + Sync {
    fn id(&self) -> MethodId;

    /// Printed applicability limits for this method.
    fn applicability(&self, column: &ColumnSpec) -> ApplicabilityReport;

    fn estimate(&self, column: &ColumnSpec, settings: &Settings) -> Result<Estimate>;

    fn predict(&self, column: &ColumnSpec, settings: &Settings) -> Result<CapacityPrediction> {
        let Estimate {
            n_u,
            intermediates,
            diagnostics,
        } = self.estimate(column, settings)?;
        Ok(CapacityPrediction {
            method: self.id(),
            n_u,
            applicability: self.applicability(column),
            intermediates,
            diagnostics,
        })
    }
}

/// Name-indexed collection of predictors, iterated in registration order.
#[derive(Default)]
pub struct MethodRegistry {
    methods: Vec<Box<dyn CapacityMethod>>,
}

impl MethodRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// All thirteen built-in methods.
    pub fn builtin() -> Self {
        let mut registry = Self::new();
        registry.register(Box::new(Ec4));
        registry.register(Box::new(Aisc));
        registry.register(Box::new(Cisc));
        registry.register(Box::new(Dbj));
        registry.register(Box::new(Aci));
        registry.register(Box::new(OShea));
        registry.register(Box::new(Yu));
        registry.register(Box::new(Liu));
        registry.register(Box::new(Sun));
        registry.register(Box::new(ZhongMiao));
        registry.register(Box::new(Guo));
        registry.register(Box::new(DeOliveira));
        registry.register(Box::new(Proposed));
        registry
    }

    /// Adds a method, replacing any previous registration under the same id.
    pub fn register(&mut self, method: Box<dyn CapacityMethod>) {
        match self.methods.iter_mut().find(|m| m.id() == method.id()) {
            Some(slot) => *slot = method,
            None => self.methods.push(method),
        }
    }

    pub fn get(&self, id: MethodId) -> Option<&dyn CapacityMethod> {
        self.methods
            .iter()
            .find(|m| m.id() == id)
            .map(|m| m.as_ref())
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn CapacityMethod> {
        let id: MethodId = name.parse()?;
        self.get(id)
            .ok_or_else(|| CfstError::UnknownMethod(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn CapacityMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }

    pub fn ids(&self) -> Vec<MethodId> {
        self.methods.iter().map(|m| m.id()).collect()
    }

    /// Resolves `"all"` or a comma-separated list of method names.
    pub fn select(&self, spec: &str) -> Result<Vec<&dyn CapacityMethod>> {
        if spec.trim().eq_ignore_ascii_case("all") {
            return Ok(self.iter().collect());
        }
        let mut picked: Vec<&dyn CapacityMethod> = Vec::new();
        for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let method = self.by_name(name)?;
            if !picked.iter().any(|m| m.id() == method.id()) {
                picked.push(method);
            }
        }
        if picked.is_empty() {
            return Err(CfstError::UnknownMethod(spec.to_string()));
        }
        Ok(picked)
    }
}

/// Printed limits for `method`.
pub fn check_applicability(method: MethodId, column: &ColumnSpec) -> ApplicabilityReport {
    MethodRegistry::builtin()
        .get(method)
        .map(|m| m.applicability(column))
        .unwrap_or_default()
}

/// Looks `name` up in the built-in registry and runs it.
pub fn check_applicability_by_name(name: &str, column: &ColumnSpec) -> Result<ApplicabilityReport> {
    Ok(MethodRegistry::builtin()
        .by_name(name)?
        .applicability(column))
}
