//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 Matsubara sum did not
//! converge (output is still written, with the diagnostic columns).

pub mod config;
pub mod output;
pub mod report;
pub mod units;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use config::{CustomMaterial, Format, LowFreqModel, RawConfig, Spacing, SweepConfig};
pub use output::{write_curve, write_permittivity, write_report, PermittivityRow};
pub use report::{compare_models, ComparisonReport, ReportRow};

use crate::constants::rad_s_to_ev;
use crate::error::{Error, Result};
use crate::experiment::{
    difference_force_gradient, min_detectable_force, pressure_from_force_gradient,
    resonance_shift, CantileverParams,
};
use crate::lifshitz::{difference_pressure, log_grid, sweep, Curve};
use crate::materials::{catalog_names, eval_permittivity, static_permittivity, Permittivity};
use units::{parse_frequency, parse_length, parse_stiffness, parse_temperature, sci};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotConverged { .. } => EXIT_NOT_CONVERGED,
        _ => EXIT_USAGE,
    }
}

/// Evaluates the configured curve over the separation grid.
pub fn run_sweep(config: &SweepConfig) -> Result<Curve> {
    sweep(&config.setup()?, &config.separations()?, &config.grid()?)
}

/// ε(iξ) on `xi_grid`, preceded by the static value when it is finite.
pub fn permittivity_table(
    config: &SweepConfig,
    material: &str,
    xi_grid: &[f64],
) -> Result<Vec<PermittivityRow>> {
    let model = config.material(material)?;
    let mut rows = Vec::with_capacity(xi_grid.len() + 1);
    if let Permittivity::Finite(eps) = static_permittivity(&model) {
        rows.push(PermittivityRow {
            xi: 0.0,
            xi_ev: 0.0,
            eps,
        });
    }
    for &xi in xi_grid {
        if !(xi > 0.0 && xi.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "frequency grid must be positive, got {xi}"
            )));
        }
        rows.push(PermittivityRow {
            xi,
            xi_ev: rad_s_to_ev(xi),
            eps: eval_permittivity(&model, xi)?,
        });
    }
    Ok(rows)
}

#[derive(Debug, Parser)]
#[command(
    name = "casimir",
    version,
    about = "Finite-temperature Lifshitz forces and pressures between gold and semiconductor surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Force or pressure versus separation.
    Sweep(SweepArgs),
    /// Difference quantity under models (a) and (b) with the analytic gap.
    Compare(SweepArgs),
    /// ε(iξ) of one material on a log-spaced frequency grid.
    Permittivity(PermittivityArgs),
    /// Thermal-noise limited force sensitivity of the cantilever.
    Sensitivity(CantileverArgs),
    /// Resonance-frequency shift and PFA pressure from the force gradient.
    Shift(ShiftArgs),
    /// List catalog materials.
    Materials,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// TOML config file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_parser = ["csv", "json"])]
    pub format: Option<String>,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// force (sphere-plate) or pressure (plate-plate).
    #[arg(long, value_parser = ["force", "pressure"])]
    pub quantity: Option<String>,
    /// e.g. "300 K".
    #[arg(long)]
    pub temperature: Option<String>,
    #[arg(long, value_parser = ["a", "b"])]
    pub model: Option<String>,
    /// Plate material (high-density section).
    #[arg(long, conflicts_with = "high")]
    pub material: Option<String>,
    /// Sphere (or probe plate) material.
    #[arg(long)]
    pub sphere: Option<String>,
    #[arg(long)]
    pub high: Option<String>,
    /// Low-density section; "none" for a single plate.
    #[arg(long)]
    pub low: Option<String>,
    /// e.g. "100 um".
    #[arg(long)]
    pub radius: Option<String>,
    /// e.g. "100 nm".
    #[arg(long)]
    pub zmin: Option<String>,
    #[arg(long)]
    pub zmax: Option<String>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_parser = ["log", "linear"])]
    pub spacing: Option<String>,
    /// Two-column (eV, Im ε) table, available as material "tabulated".
    #[arg(long)]
    pub optical_table: Option<PathBuf>,
    /// Zero-frequency TE rule for a Drude sphere.
    #[arg(long, value_parser = ["vanishing", "plasma"])]
    pub te_zero: Option<String>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub l_max_cap: Option<usize>,
}

impl SweepArgs {
    pub fn resolve(&self) -> Result<SweepConfig> {
        let base = match &self.config {
            Some(path) => RawConfig::load(path)?,
            None => RawConfig::default(),
        };
        let flags = RawConfig {
            quantity: self.quantity.clone(),
            z_min: self.zmin.clone(),
            z_max: self.zmax.clone(),
            points: self.points,
            spacing: self.spacing.clone(),
            temperature: self.temperature.clone(),
            radius: self.radius.clone(),
            sphere: self.sphere.clone(),
            high: self.high.clone().or_else(|| self.material.clone()),
            low: self.low.clone(),
            model: self.model.clone(),
            te_zero: self.te_zero.clone(),
            rel_tol: self.rel_tol,
            l_max_cap: self.l_max_cap,
            nodes: self.nodes,
            format: self.format.clone(),
            out: self.out.clone(),
            optical_table: self.optical_table.clone(),
            materials: Default::default(),
        };
        SweepConfig::resolve(base.overlay(flags))
    }
}

#[derive(Debug, Clone, Args)]
pub struct PermittivityArgs {
    #[arg(long)]
    pub material: String,
    #[arg(long, default_value = "1e13 rad/s")]
    pub xi_min: String,
    #[arg(long, default_value = "1e18 rad/s")]
    pub xi_max: String,
    #[arg(long, default_value_t = 51)]
    pub points: usize,
    /// Config file with [materials.*] definitions.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub optical_table: Option<PathBuf>,
    #[arg(long, value_parser = ["csv", "json"])]
    pub format: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CantileverArgs {
    #[arg(long, default_value = "0.03 N/m")]
    pub k: String,
    #[arg(long, default_value = "1130.9 Hz")]
    pub f_r: String,
    #[arg(long, default_value_t = 5889.2)]
    pub q: f64,
    #[arg(long, default_value = "0.3 Hz")]
    pub bandwidth: String,
    /// Cantilever temperature.
    #[arg(long, default_value = "77 K")]
    pub temperature: String,
    #[arg(long, value_parser = ["csv", "json"], default_value = "csv")]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CantileverArgs {
    fn params(&self) -> Result<CantileverParams> {
        CantileverParams::new(
            parse_stiffness(&self.k)?,
            parse_frequency(&self.f_r)?,
            self.q,
            parse_frequency(&self.bandwidth)?,
            parse_temperature(&self.temperature)?,
        )
    }
}

#[derive(Debug, Clone, Args)]
pub struct ShiftArgs {
    /// Separation, e.g. "150 nm".
    #[arg(long)]
    pub z: String,
    #[arg(long, default_value = "0.03 N/m")]
    pub k: String,
    #[arg(long, default_value = "1130.9 Hz")]
    pub f_r: String,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

fn open_output<'a>(out: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                Error::Io(io::Error::new(
                    e.kind(),
                    format!("cannot write {}: {e}", path.display()),
                ))
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(stdout)),
    }
}

fn report_error(stderr: &mut dyn Write, err: &Error) -> i32 {
    let _ = writeln!(stderr, "error: {err}");
    exit_code(err)
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32> {
    let config = args.resolve()?;
    let curve = run_sweep(&config)?;
    let mut w = open_output(config.out.as_deref(), stdout)?;
    write_curve(&mut w, &curve, &config)?;
    w.flush()?;
    Ok(if curve.metadata.all_converged {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    })
}

fn cmd_compare(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32> {
    let config = args.resolve()?;
    let report = compare_models(&config)?;
    let mut w = open_output(config.out.as_deref(), stdout)?;
    write_report(&mut w, &report, &config)?;
    w.flush()?;
    Ok(if report.all_converged {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    })
}

fn cmd_permittivity(args: &PermittivityArgs, stdout: &mut dyn Write) -> Result<i32> {
    let raw = match &args.config {
        Some(path) => RawConfig::load(path)?,
        None => RawConfig::default(),
    };
    let config = SweepConfig::resolve(raw.overlay(RawConfig {
        optical_table: args.optical_table.clone(),
        format: args.format.clone(),
        out: args.out.clone(),
        ..Default::default()
    }))?;
    let lo = units::parse_angular_frequency(&args.xi_min)?;
    let hi = units::parse_angular_frequency(&args.xi_max)?;
    let grid = log_grid(lo, hi, args.points)?;
    let rows = permittivity_table(&config, &args.material, &grid)?;
    let mut w = open_output(config.out.as_deref(), stdout)?;
    write_permittivity(&mut w, &args.material, &rows, config.format)?;
    w.flush()?;
    Ok(EXIT_OK)
}

fn write_pairs(w: &mut dyn Write, format: &str, pairs: &[(&str, f64)]) -> Result<()> {
    if format == "json" {
        let map: serde_json::Map<String, serde_json::Value> = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), json!(units::round12(*v))))
            .collect();
        let text = serde_json::to_string_pretty(&map).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(w, "{text}")?;
    } else {
        writeln!(w, "{}", pairs.iter().map(|p| p.0).collect::<Vec<_>>().join(","))?;
        writeln!(
            w,
            "{}",
            pairs.iter().map(|p| sci(p.1)).collect::<Vec<_>>().join(",")
        )?;
    }
    Ok(())
}

fn cmd_sensitivity(args: &CantileverArgs, stdout: &mut dyn Write) -> Result<i32> {
    let p = args.params()?;
    let f = min_detectable_force(&p)?;
    let mut w = open_output(args.out.as_deref(), stdout)?;
    write_pairs(
        &mut w,
        &args.format,
        &[
            ("k_n_per_m", p.k),
            ("f_r_hz", p.f_r),
            ("q", p.q),
            ("bandwidth_hz", p.bandwidth),
            ("temperature_k", p.temperature),
            ("min_detectable_force_n", f),
        ],
    )?;
    w.flush()?;
    Ok(EXIT_OK)
}

fn cmd_shift(args: &ShiftArgs, stdout: &mut dyn Write) -> Result<i32> {
    let config = args.sweep.resolve()?;
    let z = parse_length(&args.z)?;
    let cantilever = CantileverParams::new(
        parse_stiffness(&args.k)?,
        parse_frequency(&args.f_r)?,
        CantileverParams::reference().q,
        CantileverParams::reference().bandwidth,
        config.temperature,
    )?;
    let setup = config.setup()?;
    let low = setup.low.as_ref().ok_or_else(|| {
        Error::InvalidParameter("shift needs two plate sections (--high and --low)".into())
    })?;
    let grid = config.grid()?;
    let gradient = difference_force_gradient(
        &setup.probe,
        &setup.high,
        low,
        config.sphere_radius,
        z,
        &grid,
    )?;
    let shift = resonance_shift(&cantilever, gradient)?;
    let p_gradient = pressure_from_force_gradient(config.sphere_radius, gradient)?;
    let p_direct = difference_pressure(&setup.probe, &setup.high, low, z, &grid)?.value;
    let format = match config.format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    let mut w = open_output(config.out.as_deref(), stdout)?;
    write_pairs(
        &mut w,
        format,
        &[
            ("z_m", z),
            ("force_gradient_n_per_m", gradient),
            ("frequency_shift_hz", shift),
            ("pressure_from_gradient_pa", p_gradient),
            ("pressure_direct_pa", p_direct),
            (
                "relative_deviation",
                ((p_gradient - p_direct) / p_direct).abs(),
            ),
        ],
    )?;
    w.flush()?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Sweep(a) => cmd_sweep(a, stdout),
        Command::Compare(a) => cmd_compare(a, stdout),
        Command::Permittivity(a) => cmd_permittivity(a, stdout),
        Command::Sensitivity(a) => cmd_sensitivity(a, stdout),
        Command::Shift(a) => cmd_shift(a, stdout),
        Command::Materials => {
            for name in catalog_names() {
                let _ = writeln!(stdout, "{name}");
            }
            Ok(EXIT_OK)
        }
    };
    match result {
        Ok(code) => {
            if code == EXIT_NOT_CONVERGED {
                let _ = writeln!(
                    stderr,
                    "error: Matsubara sum did not converge at one or more separations \
                     (see the converged column)"
                );
            }
            code
        }
        Err(e) => report_error(stderr, &e),
    }
}
