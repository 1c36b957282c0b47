use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cfst_core::capacity::{CapacityPrediction, MethodRegistry, OliveiraMode, Settings};
use cfst_core::card::material_card;
use cfst_core::dataset::{evaluate_dataset, parse_dataset, rows_to_csv, BatchReport, Execution};
use cfst_core::materials::{sample_concrete_curve, sample_steel_curve, steel_curve_params};
use cfst_core::response::response_curve;
use cfst_core::section::{
    convert_strength, CircularSection, ColumnSpec, ConcreteMaterial, MeasuredStrength,
    SpecimenKind, SteelMaterial,
};

#[derive(Parser)]
#[command(
    name = "cfst",
    version,
    about = "Axial capacity of circular concrete-filled steel tube columns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ultimate load by each selected method.
    Predict {
        #[command(flatten)]
        column: ColumnArgs,
        #[command(flatten)]
        config: ConfigArgs,
        /// `all` or a comma-separated list of method ids.
        #[arg(long, default_value = "all")]
        method: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sampled stress-strain curve as CSV.
    Curve {
        #[command(flatten)]
        column: ColumnArgs,
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, value_enum)]
        material: Material,
        #[arg(long, default_value_t = 200)]
        n: usize,
        /// Defaults to 0.03 for concrete and eps_u for steel.
        #[arg(long)]
        eps_max: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Material card for the confined concrete core.
    Cdpm {
        #[command(flatten)]
        column: ColumnArgs,
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 0.03)]
        eps_max: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Axial load-strain response of the section.
    Respond {
        #[command(flatten)]
        column: ColumnArgs,
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 0.03)]
        eps_max: f64,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a specimen dataset.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value = "all")]
        method: String,
        /// Per-row CSV; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Summary JSON; stderr when omitted.
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Evaluate rows on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args)]
struct ColumnArgs {
    /// Outer diameter (mm).
    #[arg(long = "D")]
    d: f64,
    /// Wall thickness (mm).
    #[arg(long = "t")]
    t: f64,
    /// Length (mm).
    #[arg(long = "L")]
    l: f64,
    /// Steel yield strength (MPa).
    #[arg(long)]
    fy: f64,
    #[arg(long)]
    fu: Option<f64>,
    #[arg(long = "Es")]
    es: Option<f64>,
    /// Measured concrete strength (MPa).
    #[arg(long)]
    fc: f64,
    #[arg(long, default_value = "CYL150")]
    fc_kind: SpecimenKind,
    /// Maximum aggregate size (mm).
    #[arg(long)]
    dmax: Option<f64>,
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, default_value_t = 0.6)]
    ke: f64,
    #[arg(long, default_value_t = 1.0)]
    keff: f64,
    #[arg(long, default_value_t = 1.0)]
    rcc: f64,
    #[arg(long, default_value = "as-printed")]
    oliveira_mode: OliveiraMode,
    /// Concrete modulus override (MPa).
    #[arg(long)]
    ec: Option<f64>,
    /// Zhong-Miao lateral pressure (MPa).
    #[arg(long, default_value_t = 0.0)]
    p0: f64,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Material {
    Steel,
    Concrete,
}

impl ConfigArgs {
    fn settings(&self) -> Result<Settings> {
        let settings = Settings {
            ke: self.ke,
            k_eff: self.keff,
            r_cc: self.rcc,
            oliveira_mode: self.oliveira_mode,
            zhong_miao_p0: self.p0,
            ..Settings::default()
        };
        settings.validate()?;
        Ok(settings)
    }
}

impl ColumnArgs {
    fn build(&self, ec: Option<f64>) -> Result<ColumnSpec> {
        let section = CircularSection::new(self.d, self.t, self.l)?;
        let steel = SteelMaterial::new(self.fy, self.fu, self.es)?;
        let converted = convert_strength(&MeasuredStrength::new(self.fc, self.fc_kind)?)?;
        let concrete = ConcreteMaterial::new(converted.f_c, self.dmax, ec)?;
        Ok(ColumnSpec::new(section, steel, concrete)?)
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn predictions_table(predictions: &[CapacityPrediction]) -> String {
    let mut out = format!(
        "{:<12} {:>10} {:<10} {}\n",
        "method", "N_u_kN", "applicable", "notes"
    );
    for p in predictions {
        let mut notes: Vec<String> = p
            .applicability
            .violations
            .iter()
            .map(|v| format!("violates {} ({:.4})", v.limit, v.actual))
            .collect();
        notes.extend(p.diagnostics.iter().map(|d| d.message.clone()));
        let _ = writeln!(
            out,
            "{:<12} {:>10.1} {:<10} {}",
            p.method.as_str(),
            p.n_u_kn(),
            if p.applicability.applicable {
                "yes"
            } else {
                "no"
            },
            notes.join("; ")
        );
    }
    out
}

fn predictions_csv(predictions: &[CapacityPrediction]) -> String {
    let mut out = String::from("method,N_u_kN,applicable,violations,intermediates\n");
    for p in predictions {
        let violations: Vec<&str> = p
            .applicability
            .violations
            .iter()
            .map(|v| v.limit.as_str())
            .collect();
        let intermediates: Vec<String> = p
            .intermediates
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            out,
            "{},{:.1},{},\"{}\",\"{}\"",
            p.method.as_str(),
            p.n_u_kn(),
            p.applicability.applicable,
            violations.join("; "),
            intermediates.join("; ")
        );
    }
    out
}

fn predict(
    column: &ColumnArgs,
    config: &ConfigArgs,
    method: &str,
    output: &OutputArgs,
) -> Result<()> {
    let settings = config.settings()?;
    let spec = column.build(config.ec)?;
    let registry = MethodRegistry::builtin();
    let predictions = registry
        .select(method)?
        .into_iter()
        .map(|m| m.predict(&spec, &settings))
        .collect::<cfst_core::Result<Vec<_>>>()?;
    let text = match output.format.unwrap_or(Format::Table) {
        Format::Table => predictions_table(&predictions),
        Format::Csv => predictions_csv(&predictions),
        Format::Json => serde_json::to_string_pretty(&predictions)? + "\n",
    };
    emit(output, &text)
}

fn points_json(points: &[(f64, f64)]) -> Result<String> {
    Ok(serde_json::to_string_pretty(points)? + "\n")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Predict {
            column,
            config,
            method,
            output,
        } => predict(&column, &config, &method, &output),
        Command::Curve {
            column,
            config,
            material,
            n,
            eps_max,
            output,
        } => {
            config.settings()?;
            let spec = column.build(config.ec)?;
            let curve = match material {
                Material::Steel => {
                    let eps_max = match eps_max {
                        Some(e) => e,
                        None => steel_curve_params(spec.steel())?.eps_u,
                    };
                    sample_steel_curve(spec.steel(), n, eps_max)?
                }
                Material::Concrete => sample_concrete_curve(&spec, n, eps_max.unwrap_or(0.03))?,
            };
            let text = match output.format {
                Some(Format::Json) => points_json(&curve.points)?,
                _ => curve.to_csv(),
            };
            emit(&output, &text)
        }
        Command::Cdpm {
            column,
            config,
            n,
            eps_max,
            output,
        } => {
            config.settings()?;
            let spec = column.build(config.ec)?;
            emit(&output, &material_card(&spec, n, eps_max)?)
        }
        Command::Respond {
            column,
            config,
            eps_max,
            n,
            output,
        } => {
            config.settings()?;
            let spec = column.build(config.ec)?;
            let response = response_curve(&spec, eps_max, n)?;
            eprintln!(
                "peak load {:.1} kN at strain {:.6e}",
                response.peak_load / 1000.0,
                response.peak_strain
            );
            let text = match output.format {
                Some(Format::Json) => serde_json::to_string_pretty(&response)? + "\n",
                _ => response.to_csv(),
            };
            emit(&output, &text)
        }
        Command::Batch {
            input,
            config,
            method,
            out,
            summary,
            sequential,
        } => {
            let settings = config.settings()?;
            let text = fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let parsed = parse_dataset(&text)?;
            for e in &parsed.errors {
                eprintln!("line {}: {}", e.line, e.message);
            }
            let registry = MethodRegistry::builtin();
            let methods = registry.select(&method)?;
            let ids: Vec<_> = methods.iter().map(|m| m.id()).collect();
            let execution = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let evaluation =
                evaluate_dataset(&parsed.records, &methods, &settings, config.ec, execution)?;
            for row in &evaluation.rows {
                if let Some(err) = &row.error {
                    eprintln!("line {}: {}", row.record.line, err);
                }
            }
            let rows = rows_to_csv(&evaluation, &ids);
            let report = BatchReport::new(&evaluation, &settings, config.ec).to_json() + "\n";
            match out {
                Some(path) => {
                    fs::write(&path, rows).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{rows}"),
            }
            match summary {
                Some(path) => fs::write(&path, report)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => eprint!("{report}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
