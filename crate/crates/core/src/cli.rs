//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `validate` exceeds its tolerance,
//! 2 on usage, parameter-domain or configuration errors. Reports go to
//! stdout (or `--output`); diagnostics go to stderr. Identical invocations
//! produce byte-identical reports.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::bbu::{calibrate_with, BsClass, CalibrationScalar, SystemParams};
use crate::bs_power::breakdown;
use crate::config::{load_model_config, ModelConfig};
use crate::error::{Error, Result};
use crate::render;
use crate::sweep::{figure_series, sweep, validate_earth, Figure, SweepAxis, SweepSpec};

#[derive(Debug, Parser)]
#[command(
    name = "cellwatt",
    version,
    about = "Base-station power model: transmission, Landauer-based computation, overhead losses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Power breakdown of one station at one configuration
    Breakdown(BreakdownArgs),
    /// Evaluate a grid over antennas or bandwidth
    Sweep(SweepArgs),
    /// Emit the series behind one figure panel
    Figures(FiguresArgs),
    /// Compare the model against the EARTH reference figures
    Validate(ValidateArgs),
    /// Fit a baseband calibration scalar to a measured power
    Calibrate(CalibrateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Macro,
    Small,
}

impl From<ClassArg> for BsClass {
    fn from(c: ClassArg) -> BsClass {
        match c {
            ClassArg::Macro => BsClass::Macro,
            ClassArg::Small => BsClass::Small,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassFilter {
    Macro,
    Small,
    Both,
}

impl ClassFilter {
    fn classes(self) -> Vec<BsClass> {
        match self {
            ClassFilter::Macro => vec![BsClass::Macro],
            ClassFilter::Small => vec![BsClass::Small],
            ClassFilter::Both => vec![BsClass::Macro, BsClass::Small],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CalibrationMode {
    /// Built-in (or overridden) per-class calibration
    Default,
    /// Uncalibrated switching-energy floor (c = 1)
    Raw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Profile overrides file (TOML); defaults to $CELLWATT_PROFILES if set
    #[arg(long, value_name = "FILE")]
    profiles: Option<PathBuf>,
    /// Override the transistor energy ratio ε
    #[arg(long, value_name = "RATIO")]
    epsilon: Option<f64>,
    /// Override the chip temperature [K]
    #[arg(long, value_name = "KELVIN")]
    temperature: Option<f64>,
    /// Baseband calibration mode
    #[arg(long, value_enum, default_value_t = CalibrationMode::Default)]
    calibration: CalibrationMode,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Bandwidth [Hz]; accepts kHz/MHz/GHz suffixes (e.g. 20e6 or 20MHz)
    #[arg(long, value_parser = parse_bandwidth, default_value = "20MHz")]
    bandwidth: f64,
    /// Antenna count
    #[arg(long, default_value_t = 1)]
    antennas: u32,
    /// Modulation order [bits per symbol]
    #[arg(long, default_value_t = 6)]
    modulation_bits: u32,
    /// Coding rate, in (0, 1]
    #[arg(long, default_value_t = 5.0 / 6.0)]
    coding_rate: f64,
    /// Transmission time duty cycle, in (0, 1]
    #[arg(long, default_value_t = 1.0)]
    time_duty: f64,
    /// Subcarrier duty cycle, in (0, 1]
    #[arg(long, default_value_t = 1.0)]
    freq_duty: f64,
}

impl ParamArgs {
    fn to_params(&self) -> Result<SystemParams> {
        let params = SystemParams {
            bandwidth_hz: self.bandwidth,
            antennas: self.antennas,
            modulation_bits: self.modulation_bits,
            coding_rate: self.coding_rate,
            time_duty: self.time_duty,
            freq_duty: self.freq_duty,
        };
        params.validate()?;
        Ok(params)
    }
}

#[derive(Debug, Args)]
struct BreakdownArgs {
    /// Station class
    #[arg(long, value_enum)]
    class: ClassArg,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    Antennas,
    Bandwidth,
}

impl From<AxisArg> for SweepAxis {
    fn from(a: AxisArg) -> SweepAxis {
        match a {
            AxisArg::Antennas => SweepAxis::Antennas,
            AxisArg::Bandwidth => SweepAxis::BandwidthHz,
        }
    }
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Dimension to sweep
    #[arg(long, value_enum)]
    axis: AxisArg,
    /// Comma-separated grid, strictly increasing (e.g. 1,2,4,8 or 5MHz,10MHz,20MHz)
    #[arg(long, value_name = "LIST")]
    values: String,
    /// Station classes to evaluate
    #[arg(long, value_enum, default_value_t = ClassFilter::Both)]
    class: ClassFilter,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct FiguresArgs {
    /// Figure panel: fig4a|fig4b|fig5a|fig5b
    #[arg(long, value_parser = parse_figure)]
    which: Figure,
    /// Station classes to include
    #[arg(long, value_enum, default_value_t = ClassFilter::Both)]
    class: ClassFilter,
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    /// Largest allowed relative error against the published model values
    #[arg(long, default_value_t = 0.01)]
    tolerance: f64,
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CalibrateArgs {
    /// Station class to fit
    #[arg(long, value_enum)]
    class: ClassArg,
    /// Measured baseband power to reproduce [W]
    #[arg(long, value_name = "WATTS")]
    measured_pbb: f64,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_bandwidth(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim();
    let (num, scale) = if let Some(p) = t.strip_suffix("GHz") {
        (p, 1e9)
    } else if let Some(p) = t.strip_suffix("MHz") {
        (p, 1e6)
    } else if let Some(p) = t.strip_suffix("kHz") {
        (p, 1e3)
    } else if let Some(p) = t.strip_suffix("Hz") {
        (p, 1.0)
    } else {
        (t, 1.0)
    };
    let v: f64 = num.trim().parse().map_err(|_| {
        format!("`{s}` is not a bandwidth (plain Hz like 20e6, or a kHz/MHz/GHz suffix)")
    })?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(format!("bandwidth must be positive and finite, got `{s}`"));
    }
    Ok(v * scale)
}

fn parse_figure(s: &str) -> std::result::Result<Figure, String> {
    s.parse()
}

fn parse_axis_values(axis: AxisArg, text: &str) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let v = match axis {
            AxisArg::Antennas => item
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("values: `{item}` is not an antenna count")))?,
            AxisArg::Bandwidth => {
                parse_bandwidth(item).map_err(|e| Error::Config(format!("values: {e}")))?
            }
        };
        values.push(v);
    }
    Ok(values)
}

/// Chip/profile state resolved from flags, environment and overrides file.
fn resolve_config(model: &ModelArgs, default_profiles: Option<&Path>) -> Result<ModelConfig> {
    let mut config = match model.profiles.as_deref().or(default_profiles) {
        Some(path) => load_model_config(path)?,
        None => ModelConfig::default(),
    };
    if let Some(eps) = model.epsilon {
        config.chip.power_coefficient = eps;
    }
    if let Some(t) = model.temperature {
        config.chip.temperature_k = t;
    }
    if model.calibration == CalibrationMode::Raw {
        for p in &mut config.profiles {
            p.calibration = CalibrationScalar::raw();
        }
    }
    config.validate()?;
    Ok(config)
}

struct Outcome {
    report: String,
    exit: i32,
    output: Option<PathBuf>,
}

fn run_breakdown(args: BreakdownArgs, default_profiles: Option<&Path>) -> Result<Outcome> {
    let config = resolve_config(&args.model, default_profiles)?;
    let params = args.params.to_params()?;
    let class: BsClass = args.class.into();
    let profile = config.profile(class)?;
    let b = breakdown(profile, &params, &config.chip, &config.throughput)?;
    let report = match args.output.format {
        OutputFormat::Table => render::breakdown_table(class, &params, &b),
        OutputFormat::Csv => render::breakdown_csv(class, &b),
        OutputFormat::Json => {
            let mut meta = render::model_meta_json(&config.chip, &config.throughput);
            let m = meta.as_object_mut().expect("meta is an object");
            m.insert("command".to_owned(), json!("breakdown"));
            m.insert("class".to_owned(), json!(class.label()));
            m.insert("params".to_owned(), serde_json::to_value(&params).expect("params"));
            m.insert(
                "calibration".to_owned(),
                serde_json::to_value(&profile.calibration).expect("calibration"),
            );
            render::breakdown_json(meta, class, &b)
        }
    };
    Ok(Outcome { report, exit: 0, output: args.output.output })
}

fn run_sweep(args: SweepArgs, default_profiles: Option<&Path>) -> Result<Outcome> {
    let config = resolve_config(&args.model, default_profiles)?;
    let axis: SweepAxis = args.axis.into();
    let spec = SweepSpec {
        axis,
        values: parse_axis_values(args.axis, &args.values)?,
        base_params: args.params.to_params()?,
        classes: args.class.classes(),
    };
    let points = sweep(&spec, &config.profiles, &config.chip, &config.throughput)?;
    let report = match args.output.format {
        OutputFormat::Table => render::series_table(&format!("sweep over {axis}"), axis, &points),
        OutputFormat::Csv => render::series_csv(axis, &points),
        OutputFormat::Json => {
            let mut meta = render::model_meta_json(&config.chip, &config.throughput);
            let m = meta.as_object_mut().expect("meta is an object");
            m.insert("command".to_owned(), json!("sweep"));
            m.insert("axis".to_owned(), json!(axis.label()));
            m.insert(
                "base_params".to_owned(),
                serde_json::to_value(&spec.base_params).expect("params"),
            );
            render::series_json(meta, axis, &points)
        }
    };
    Ok(Outcome { report, exit: 0, output: args.output.output })
}

fn run_figures(args: FiguresArgs, default_profiles: Option<&Path>) -> Result<Outcome> {
    let config = resolve_config(&args.model, default_profiles)?;
    let mut fig = figure_series(args.which, &config.profiles, &config.chip, &config.throughput)?;
    let keep = args.class.classes();
    fig.points.retain(|p| keep.contains(&p.class));
    let report = match args.output.format {
        OutputFormat::Table => {
            render::series_table(&render::figure_title(&fig), fig.axis, &fig.points)
        }
        OutputFormat::Csv => render::series_csv(fig.axis, &fig.points),
        OutputFormat::Json => {
            let mut meta = render::model_meta_json(&config.chip, &config.throughput);
            let m = meta.as_object_mut().expect("meta is an object");
            m.insert("command".to_owned(), json!("figures"));
            m.insert("figure".to_owned(), json!(fig.figure.label()));
            m.insert("quantity".to_owned(), json!(fig.quantity.label()));
            m.insert("axis".to_owned(), json!(fig.axis.label()));
            render::series_json(meta, fig.axis, &fig.points)
        }
    };
    Ok(Outcome { report, exit: 0, output: args.output.output })
}

fn run_validate(args: ValidateArgs, default_profiles: Option<&Path>) -> Result<Outcome> {
    if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
        return Err(Error::domain("tolerance", "0 < tolerance, finite", args.tolerance));
    }
    let config = resolve_config(&args.model, default_profiles)?;
    let report = validate_earth(&config.profiles, &config.chip, &config.throughput)?;
    let passed = report.within(args.tolerance);
    let rendered = match args.output.format {
        OutputFormat::Table => render::validation_table(&report, args.tolerance),
        OutputFormat::Csv => render::validation_csv(&report),
        OutputFormat::Json => {
            let mut meta = render::model_meta_json(&config.chip, &config.throughput);
            let m = meta.as_object_mut().expect("meta is an object");
            m.insert("command".to_owned(), json!("validate"));
            m.insert("tolerance".to_owned(), json!(args.tolerance));
            m.insert("max_rel_err_vs_model".to_owned(), json!(report.max_rel_err_vs_model()));
            m.insert("result".to_owned(), json!(if passed { "pass" } else { "fail" }));
            m.insert("params".to_owned(), serde_json::to_value(&report.params).expect("params"));
            render::validation_json(meta, &report)
        }
    };
    Ok(Outcome { report: rendered, exit: if passed { 0 } else { 1 }, output: args.output.output })
}

fn run_calibrate(args: CalibrateArgs, default_profiles: Option<&Path>) -> Result<Outcome> {
    let config = resolve_config(&args.model, default_profiles)?;
    let params = args.params.to_params()?;
    let class: BsClass = args.class.into();
    let profile = config.profile(class)?;
    let fitted = calibrate_with(
        &profile.parts,
        class,
        args.measured_pbb,
        &params,
        &profile.reference,
        &config.chip,
        &config.throughput,
    )?;
    let report = match args.output.format {
        OutputFormat::Table => {
            let mut out = format!("calibration fit: {class} cell\n\n");
            out.push_str(&format!("measured P_BB [W]   {}\n", render::sig6(args.measured_pbb)));
            out.push_str(&format!("calibration scalar  {}\n", render::sig6(fitted.value)));
            out.push_str(&format!("provenance          {}\n", fitted.provenance));
            out
        }
        OutputFormat::Csv => format!(
            "class,calibration,measured_pbb_w,bandwidth_hz,antennas,modulation_bits,coding_rate,time_duty,freq_duty\n{},{},{},{},{},{},{},{},{}\n",
            class,
            fitted.value,
            args.measured_pbb,
            params.bandwidth_hz,
            params.antennas,
            params.modulation_bits,
            params.coding_rate,
            params.time_duty,
            params.freq_duty,
        ),
        OutputFormat::Json => {
            let mut meta = render::model_meta_json(&config.chip, &config.throughput);
            let m = meta.as_object_mut().expect("meta is an object");
            m.insert("command".to_owned(), json!("calibrate"));
            m.insert("class".to_owned(), json!(class.label()));
            m.insert("measured_pbb_w".to_owned(), json!(args.measured_pbb));
            m.insert("params".to_owned(), serde_json::to_value(&params).expect("params"));
            let doc = json!({
                "meta": meta,
                "rows": [{
                    "class": class.label(),
                    "calibration": fitted.value,
                    "provenance": fitted.provenance,
                }],
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("doc serializes");
            s.push('\n');
            s
        }
    };
    Ok(Outcome { report, exit: 0, output: args.output.output })
}

fn execute(cli: Cli, default_profiles: Option<&Path>) -> Result<Outcome> {
    match cli.command {
        Command::Breakdown(a) => run_breakdown(a, default_profiles),
        Command::Sweep(a) => run_sweep(a, default_profiles),
        Command::Figures(a) => run_figures(a, default_profiles),
        Command::Validate(a) => run_validate(a, default_profiles),
        Command::Calibrate(a) => run_calibrate(a, default_profiles),
    }
}

/// Parses and runs a full invocation; returns the process exit code.
///
/// `default_profiles` is the optional overrides file taken from the
/// environment when `--profiles` is absent.
pub fn run<I, T>(
    args: I,
    default_profiles: Option<PathBuf>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                // --help / --version land on stdout and exit cleanly
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match execute(cli, default_profiles.as_deref()) {
        Ok(outcome) => {
            if let Some(path) = &outcome.output {
                if let Err(e) = std::fs::write(path, outcome.report.as_bytes()) {
                    let _ = writeln!(stderr, "error: cannot write `{}`: {e}", path.display());
                    return 2;
                }
            } else {
                let _ = write!(stdout, "{}", outcome.report);
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
