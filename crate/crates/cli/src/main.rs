//! `casimir`: evaluate, sweep, solve and reproduce from the command line.
//!
//! Exit codes: 0 success, 1 convergence failure, 2 invalid input,
//! 3 no equilibrium.

mod commands;
mod output;
mod published;
mod quantity;

use casimir_core::equilibrium::Mode;
use casimir_core::specfun::SeriesControl;
use casimir_core::thermo::{FormSelector, Regime};
use casimir_core::UnitContext;
use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{CliError, CliResult, EquilibriumRequest, EvalInput, Evaluation, Grid, SweepVar, Target};
use output::{Format, Record};
use quantity::{parse_length, parse_temperature, TempInput};
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Thermodynamics and equilibria of the parallel-plate Casimir system"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "CASIMIR_FORMAT", default_value_t = Format::Csv)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// TOML file overriding `hbar_c` (J·m) and/or `k_b` (J/K).
    #[arg(long, global = true, env = "CASIMIR_CONFIG")]
    config: Option<PathBuf>,

    /// ħc in J·m (overrides the config file).
    #[arg(long = "hbar-c", global = true)]
    hbar_c: Option<f64>,

    /// Boltzmann constant in J/K (overrides the config file).
    #[arg(long = "k-b", global = true)]
    k_b: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scaled thermodynamic functions at one point.
    Eval(EvalArgs),
    /// Tabulate functions on a grid (figure data).
    Sweep(SweepArgs),
    /// Solve for mechanical equilibria.
    Equilibrium(EquilibriumArgs),
    /// Recompute published tables next to the published values.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    A,
    B,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApproxArg {
    /// Low temperature: form A without thermal sums.
    Lowt,
    /// High temperature: form B without thermal sums.
    Hight,
}

#[derive(Args)]
struct EvalArgs {
    /// Reduced temperature v = a k_B T / (πħc).
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "a",
        required_unless_present = "a"
    )]
    v: Option<f64>,

    /// Plate distance, e.g. 1um, 250nm, 1e-6m (bare numbers are μm).
    #[arg(long, allow_hyphen_values = true, requires = "temperature", value_parser = parse_length)]
    a: Option<f64>,

    /// Temperature, e.g. 291.15K or 18C (bare numbers are K unless --celsius).
    #[arg(long = "T", id = "temperature", allow_hyphen_values = true, requires = "a", value_parser = parse_temperature)]
    temperature: Option<TempInput>,

    /// Read bare temperatures as °C.
    #[arg(long)]
    celsius: bool,

    #[arg(long, value_enum, default_value_t = FormArg::Auto)]
    form: FormArg,

    /// Use an asymptotic approximation instead of the exact functions.
    #[arg(long, value_enum, conflicts_with = "form")]
    approx: Option<ApproxArg>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(value_enum)]
    variable: SweepVar,

    #[arg(long, allow_hyphen_values = true)]
    from: f64,

    #[arg(long, allow_hyphen_values = true)]
    to: f64,

    /// Number of grid points, at least 2.
    #[arg(long, default_value_t = 100)]
    steps: usize,

    /// Space the grid logarithmically.
    #[arg(long)]
    log: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["isothermal", "adiabatic"]))]
struct EquilibriumArgs {
    /// Interior at fixed temperature T, exterior at κT.
    #[arg(long)]
    isothermal: bool,

    /// Interior on the isentrope through T(a=0) = T0, exterior at κ0·T0.
    #[arg(long)]
    adiabatic: bool,

    /// Temperature ratio κ (isothermal) or κ0 (adiabatic).
    #[arg(long, visible_alias = "kappa0", allow_hyphen_values = true)]
    kappa: f64,

    /// Reference temperature T or T0 (default 18 °C).
    #[arg(long = "T", visible_alias = "T0", allow_hyphen_values = true, value_parser = parse_temperature)]
    temperature: Option<TempInput>,

    /// Read bare temperatures as °C.
    #[arg(long)]
    celsius: bool,

    /// Plate mass per area in g/cm²; adds oscillation columns.
    #[arg(long, allow_hyphen_values = true)]
    mass: Option<f64>,
}

const DEFAULT_TEMPERATURE: f64 = 291.15;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    hbar_c: Option<f64>,
    k_b: Option<f64>,
}

fn load_context(cli: &Cli) -> CliResult<UnitContext> {
    let mut ctx = UnitContext::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read config {}: {e}", path.display())))?;
        let file: ConfigFile =
            toml::from_str(&text).map_err(|e| CliError::Input(format!("bad config {}: {e}", path.display())))?;
        ctx.hbar_c = file.hbar_c.unwrap_or(ctx.hbar_c);
        ctx.k_b = file.k_b.unwrap_or(ctx.k_b);
    }
    ctx.hbar_c = cli.hbar_c.unwrap_or(ctx.hbar_c);
    ctx.k_b = cli.k_b.unwrap_or(ctx.k_b);
    ctx.validate()?;
    Ok(ctx)
}

fn run_command(cli: &Cli, ctx: &UnitContext) -> CliResult<Record> {
    match &cli.command {
        Command::Eval(args) => {
            let input = match (args.v, args.a, args.temperature) {
                (Some(v), _, _) => EvalInput::Reduced(v),
                (None, Some(a), Some(t)) => EvalInput::Physical {
                    a,
                    temperature: t.kelvin(args.celsius),
                },
                _ => return Err(CliError::Input("give --v, or --a together with --T".into())),
            };
            let how = match args.approx {
                Some(ApproxArg::Lowt) => Evaluation::Approx(Regime::LowT),
                Some(ApproxArg::Hight) => Evaluation::Approx(Regime::HighT),
                None => Evaluation::Exact(match args.form {
                    FormArg::A => FormSelector::A,
                    FormArg::B => FormSelector::B,
                    FormArg::Auto => FormSelector::Auto,
                }),
            };
            commands::eval(input, how, ctx)
        }
        Command::Sweep(args) => commands::sweep(
            args.variable,
            &Grid {
                from: args.from,
                to: args.to,
                steps: args.steps,
                log: args.log,
            },
        ),
        Command::Equilibrium(args) => {
            let req = EquilibriumRequest {
                mode: if args.isothermal {
                    Mode::Isothermal
                } else {
                    Mode::Adiabatic
                },
                kappa: args.kappa,
                temperature: args.temperature.map_or(DEFAULT_TEMPERATURE, |t| t.kelvin(args.celsius)),
                mass: args.mass,
            };
            commands::equilibrium(&req, ctx)
        }
        Command::Reproduce { target } => commands::reproduce(*target, ctx),
    }
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult<()> {
    let ctx = load_context(cli)?;
    let mut rec = run_command(cli, &ctx)?;
    let series = SeriesControl::default();
    let mut header = vec![
        ("hbar_c_J_m".to_string(), format!("{:e}", ctx.hbar_c)),
        ("k_b_J_per_K".to_string(), format!("{:e}", ctx.k_b)),
        ("series_rel_tol".to_string(), format!("{:e}", series.rel_tol())),
        ("series_max_terms".to_string(), series.max_terms().to_string()),
        ("root_xtol".to_string(), "machine precision".to_string()),
    ];
    header.append(&mut rec.meta);
    rec.meta = header;
    emit(&rec.render(cli.format), cli.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("casimir: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
