//! Specimen datasets: CSV ingestion, per-row prediction with every requested
//! method, and Mean/STD/CoV of the test-to-prediction ratio N_test/N_u over
//! the rows each method applies to.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::capacity::{CapacityMethod, CapacityPrediction, MethodId, Settings};
use crate::error::{ensure_positive, CfstError, Result};
use crate::section::{
    convert_strength, CircularSection, ColumnSpec, ConcreteClass, ConcreteMaterial,
    MeasuredStrength, SpecimenKind, SteelMaterial,
};

pub const DATASET_HEADER: [&str; 11] = [
    "source_id",
    "D_mm",
    "t_mm",
    "L_mm",
    "fy_MPa",
    "fu_MPa",
    "Es_MPa",
    "fc_measured_MPa",
    "fc_kind",
    "dmax_mm",
    "Ntest_kN",
];

/// Orientation of every ratio this module reports.
pub const RATIO_ORIENTATION: &str = "N_test/N_u";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecimenRecord {
    /// 1-based line in the source file.
    pub line: u64,
    pub source_id: String,
    pub d: f64,
    pub t: f64,
    pub l: f64,
    pub f_y: f64,
    pub f_u: Option<f64>,
    pub e_s: Option<f64>,
    pub fc_measured: f64,
    pub fc_kind: SpecimenKind,
    pub d_max: Option<f64>,
    pub n_test_kn: f64,
}

/// A record resolved into a column, with the strength conversion it used.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedSpecimen {
    pub column: ColumnSpec,
    pub f_c: f64,
    pub class: ConcreteClass,
}

impl SpecimenRecord {
    pub fn resolve(&self, ec_override: Option<f64>) -> Result<ResolvedSpecimen> {
        let section = CircularSection::new(self.d, self.t, self.l)?;
        let steel = SteelMaterial::new(self.f_y, self.f_u, self.e_s)?;
        let converted = convert_strength(&MeasuredStrength::new(self.fc_measured, self.fc_kind)?)?;
        let concrete = ConcreteMaterial::new(converted.f_c, self.d_max, ec_override)?;
        ensure_positive("Ntest", self.n_test_kn)?;
        Ok(ResolvedSpecimen {
            column: ColumnSpec::new(section, steel, concrete)?,
            f_c: converted.f_c,
            class: converted.class,
        })
    }

    /// Inputs that were filled from defaults: any of `fu`, `Es`, `dmax`, `Ec`.
    pub fn defaulted_fields(&self, ec_override: Option<f64>) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.f_u.is_none() {
            out.push("fu");
        }
        if self.e_s.is_none() {
            out.push("Es");
        }
        if self.d_max.is_none() {
            out.push("dmax");
        }
        if ec_override.is_none() {
            out.push("Ec");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowError {
    pub line: u64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParsedDataset {
    pub records: Vec<SpecimenRecord>,
    pub errors: Vec<RowError>,
}

fn required(field: &str, name: &str) -> std::result::Result<f64, String> {
    let field = field.trim();
    if field.is_empty() {
        return Err(format!("{name} is required"));
    }
    field
        .parse::<f64>()
        .map_err(|_| format!("{name}: '{field}' is not a number"))
}

fn optional(field: &str, name: &str) -> std::result::Result<Option<f64>, String> {
    if field.trim().is_empty() {
        Ok(None)
    } else {
        required(field, name).map(Some)
    }
}

fn parse_row(line: u64, row: &csv::StringRecord) -> std::result::Result<SpecimenRecord, String> {
    if row.len() != DATASET_HEADER.len() {
        return Err(format!(
            "expected {} fields, found {}",
            DATASET_HEADER.len(),
            row.len()
        ));
    }
    let kind = row[8].trim();
    let fc_kind = if kind.is_empty() {
        SpecimenKind::Cyl150
    } else {
        kind.parse()?
    };
    let record = SpecimenRecord {
        line,
        source_id: row[0].trim().to_string(),
        d: required(&row[1], "D_mm")?,
        t: required(&row[2], "t_mm")?,
        l: required(&row[3], "L_mm")?,
        f_y: required(&row[4], "fy_MPa")?,
        f_u: optional(&row[5], "fu_MPa")?,
        e_s: optional(&row[6], "Es_MPa")?,
        fc_measured: required(&row[7], "fc_measured_MPa")?,
        fc_kind,
        d_max: optional(&row[9], "dmax_mm")?,
        n_test_kn: required(&row[10], "Ntest_kN")?,
    };
    record.resolve(None).map_err(|e| e.to_string())?;
    Ok(record)
}

/// Parses a dataset. A wrong header fails the whole file; anything wrong
/// within a row is collected as a [`RowError`] and the row is skipped.
pub fn parse_dataset(csv_text: &str) -> Result<ParsedDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(csv_text.as_bytes());
    let header = reader.headers()?.clone();
    let found: Vec<&str> = header.iter().map(str::trim).collect();
    if found != DATASET_HEADER {
        return Err(CfstError::HeaderMismatch {
            expected: DATASET_HEADER.join(","),
            found: found.join(","),
        });
    }
    let mut parsed = ParsedDataset::default();
    for row in reader.records() {
        let row = match row {
            Ok(row) => row,
            Err(e) => {
                let line = e.position().map(|p| p.line()).unwrap_or(0);
                parsed.errors.push(RowError {
                    line,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        if row.iter().all(|f| f.trim().is_empty()) {
            continue;
        }
        match parse_row(line, &row) {
            Ok(record) => parsed.records.push(record),
            Err(message) => parsed.errors.push(RowError { line, message }),
        }
    }
    Ok(parsed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Sequential,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowEvaluation {
    pub record: SpecimenRecord,
    /// Converted cylinder strength actually used.
    pub f_c: Option<f64>,
    pub class: Option<ConcreteClass>,
    pub defaulted: Vec<&'static str>,
    /// One entry per requested method, in request order.
    pub predictions: Vec<CapacityPrediction>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub method: MethodId,
    /// Rows passing the method's applicability limits.
    pub n_applicable: usize,
    pub n_total: usize,
    /// Applicable rows left out because the prediction was zero or not finite.
    pub n_undefined: usize,
    pub mean: Option<f64>,
    pub std: Option<f64>,
    pub cov: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub rows: Vec<RowEvaluation>,
    pub summaries: Vec<StatsSummary>,
}

/// Arithmetic mean, sample standard deviation (n − 1) and CoV = std/mean.
/// `std` and `cov` are `None` below two samples; `cov` also when mean ≤ 0.
pub fn ratio_statistics(ratios: &[f64]) -> (Option<f64>, Option<f64>, Option<f64>) {
    if ratios.is_empty() {
        return (None, None, None);
    }
    let n = ratios.len() as f64;
    let mean = ratios.iter().sum::<f64>() / n;
    if ratios.len() < 2 {
        return (Some(mean), None, None);
    }
    let ss: f64 = ratios.iter().map(|r| (r - mean).powi(2)).sum();
    let std = (ss / (n - 1.0)).sqrt();
    let cov = (mean > 0.0).then(|| std / mean);
    (Some(mean), Some(std), cov)
}

fn evaluate_row(
    record: &SpecimenRecord,
    methods: &[&dyn CapacityMethod],
    settings: &Settings,
    ec_override: Option<f64>,
) -> RowEvaluation {
    let mut row = RowEvaluation {
        record: record.clone(),
        f_c: None,
        class: None,
        defaulted: record.defaulted_fields(ec_override),
        predictions: Vec::new(),
        error: None,
    };
    let resolved = match record.resolve(ec_override) {
        Ok(r) => r,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.f_c = Some(resolved.f_c);
    row.class = Some(resolved.class);
    let predictions: Result<Vec<_>> = methods
        .iter()
        .map(|m| m.predict(&resolved.column, settings))
        .collect();
    match predictions {
        Ok(p) => row.predictions = p,
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Runs every method on every record and summarises each method.
///
/// Row order in the output always follows `records`, whatever the execution
/// mode, so sequential and parallel runs are identical.
pub fn evaluate_dataset(
    records: &[SpecimenRecord],
    methods: &[&dyn CapacityMethod],
    settings: &Settings,
    ec_override: Option<f64>,
    execution: Execution,
) -> Result<Evaluation> {
    settings.validate()?;
    let rows: Vec<RowEvaluation> = match execution {
        Execution::Sequential => records
            .iter()
            .map(|r| evaluate_row(r, methods, settings, ec_override))
            .collect(),
        Execution::Parallel => records
            .par_iter()
            .map(|r| evaluate_row(r, methods, settings, ec_override))
            .collect(),
    };

    let summaries = methods
        .iter()
        .enumerate()
        .map(|(k, method)| {
            let mut n_applicable = 0;
            let mut n_undefined = 0;
            let mut ratios = Vec::new();
            for row in &rows {
                let Some(p) = row.predictions.get(k) else {
                    continue;
                };
                if !p.applicability.applicable {
                    continue;
                }
                n_applicable += 1;
                if p.n_u.is_finite() && p.n_u != 0.0 {
                    ratios.push(row.record.n_test_kn * 1000.0 / p.n_u);
                } else {
                    n_undefined += 1;
                }
            }
            let (mean, std, cov) = ratio_statistics(&ratios);
            StatsSummary {
                method: method.id(),
                n_applicable,
                n_total: rows.len(),
                n_undefined,
                mean,
                std,
                cov,
            }
        })
        .collect();

    Ok(Evaluation { rows, summaries })
}

/// Settings echoed next to the statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub ratio_orientation: String,
    pub settings: Settings,
    pub ec_override: Option<f64>,
    pub summaries: Vec<StatsSummary>,
}

impl BatchReport {
    pub fn new(evaluation: &Evaluation, settings: &Settings, ec_override: Option<f64>) -> Self {
        Self {
            ratio_orientation: RATIO_ORIENTATION.to_string(),
            settings: *settings,
            ec_override,
            summaries: evaluation.summaries.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CfstError::Csv(format!("summary json: {e}")))
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Per-row CSV: the inputs, the converted strength, defaulted fields, and a
/// load (kN, 0.1 kN resolution) plus applicability flag per method.
pub fn rows_to_csv(evaluation: &Evaluation, methods: &[MethodId]) -> String {
    let mut out = String::new();
    out.push_str(&DATASET_HEADER.join(","));
    out.push_str(",fc_MPa,class,defaulted,error");
    for m in methods {
        out.push_str(&format!(",{m}_Nu_kN,{m}_applicable"));
    }
    out.push('\n');
    for row in &evaluation.rows {
        let r = &row.record;
        let source = if r.source_id.contains([',', '"']) {
            format!("\"{}\"", r.source_id.replace('"', "\"\""))
        } else {
            r.source_id.clone()
        };
        let mut fields = vec![
            source,
            r.d.to_string(),
            r.t.to_string(),
            r.l.to_string(),
            r.f_y.to_string(),
            opt(r.f_u),
            opt(r.e_s),
            r.fc_measured.to_string(),
            r.fc_kind.to_string(),
            opt(r.d_max),
            r.n_test_kn.to_string(),
            row.f_c.map(|v| format!("{v:.3}")).unwrap_or_default(),
            row.class.map(|c| c.to_string()).unwrap_or_default(),
            row.defaulted.join(";"),
            row.error.clone().unwrap_or_default().replace(',', ";"),
        ];
        for k in 0..methods.len() {
            match row.predictions.get(k) {
                Some(p) => {
                    fields.push(format!("{:.1}", p.n_u_kn()));
                    fields.push(p.applicability.applicable.to_string());
                }
                None => {
                    fields.push(String::new());
                    fields.push(String::new());
                }
            }
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}
