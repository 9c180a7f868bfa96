//! The four subcommands, each producing a [`Record`].

use crate::output::{Record, Value};
use crate::published;
use casimir_core::equilibrium::{
    isentrope_v, isentrope_v_asymptotic, oscillation_estimate, r_adiabatic, r_adiabatic_asymptotic, r_adiabatic_peak,
    r_adiabatic_zero, solve_adiabatic, solve_adiabatic_asymptotic, solve_isothermal, solve_isothermal_asymptotic,
    EquilibriumSolution, Mode, Stability,
};
use casimir_core::specfun::polylog;
use casimir_core::thermo::{
    casimir_pressure_t0, reduced_temperature, thermo_point, thermo_point_approx, DimensionalPoint, FormSelector,
    ReducedState, Regime, ThermoPoint,
};
use casimir_core::units::MICRON;
use casimir_core::{Error, UnitContext};
use rayon::prelude::*;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    NoSolution(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Domain { .. } | Error::Precondition(_)) | CliError::Input(_) => 2,
            CliError::Core(Error::NoSolution(_)) | CliError::NoSolution(_) => 3,
            CliError::Core(Error::Convergence { .. } | Error::NoBracket { .. } | Error::Degenerate { .. })
            | CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Where a thermodynamic point comes from.
pub enum EvalInput {
    Reduced(f64),
    Physical { a: f64, temperature: f64 },
}

pub enum Evaluation {
    Exact(FormSelector),
    Approx(Regime),
}

fn evaluate(v: f64, how: &Evaluation) -> casimir_core::Result<ThermoPoint> {
    match *how {
        Evaluation::Exact(sel) => thermo_point(v, sel),
        Evaluation::Approx(regime) => thermo_point_approx(v, regime),
    }
}

fn thermo_cells(tp: &ThermoPoint) -> Vec<Value> {
    vec![
        tp.v.into(),
        tp.f.into(),
        tp.s.into(),
        tp.p.into(),
        tp.e.into(),
        tp.form.as_str().into(),
    ]
}

pub fn eval(input: EvalInput, how: Evaluation, ctx: &UnitContext) -> CliResult<Record> {
    match input {
        EvalInput::Reduced(v) => {
            let tp = evaluate(v, &how)?;
            let mut rec = Record::new("casimir eval", &["v", "f", "s", "p", "e", "form"]);
            rec.push(thermo_cells(&tp));
            Ok(rec)
        }
        EvalInput::Physical { a, temperature } => {
            let state: ReducedState = reduced_temperature(a, temperature, ctx)?;
            let tp = evaluate(state.v, &how)?;
            let dim = DimensionalPoint::from_reduced(state, &tp, ctx)?;
            let mut rec = Record::new(
                "casimir eval",
                &[
                    "a_um", "T_K", "v", "f", "s", "p", "e", "form", "P_N_cm2", "P_Pa", "F_J_m2", "S_kB_m2", "E_J_m2",
                ],
            );
            let mut row: Vec<Value> = vec![(a / MICRON).into(), temperature.into()];
            row.extend(thermo_cells(&tp));
            row.extend([
                dim.pressure.newton_per_cm2().into(),
                dim.pressure.pascal().into(),
                dim.free_energy.into(),
                dim.entropy.into(),
                dim.energy.into(),
            ]);
            rec.push(row);
            Ok(rec)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepVar {
    /// Reduced temperature: exact f, s, p, e plus both asymptotic forms.
    V,
    /// Isentrope parameter: v(at), v_as(at), R(at) and its asymptotic form.
    At,
}

pub struct Grid {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub log: bool,
}

impl Grid {
    pub fn points(&self) -> CliResult<Vec<f64>> {
        if !(self.from.is_finite() && self.to.is_finite() && self.from < self.to) {
            return Err(CliError::Input(format!(
                "range [{}, {}] must be finite and increasing",
                self.from, self.to
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Input(format!("steps = {} must be at least 2", self.steps)));
        }
        if self.log && self.from <= 0.0 {
            return Err(CliError::Input("a log grid needs a positive lower end".into()));
        }
        let last = (self.steps - 1) as f64;
        Ok((0..self.steps)
            .map(|i| {
                let u = i as f64 / last;
                match (i, self.log) {
                    (0, _) => self.from,
                    (i, _) if i + 1 == self.steps => self.to,
                    (_, true) => (self.from.ln() + u * (self.to.ln() - self.from.ln())).exp(),
                    (_, false) => self.from + u * (self.to - self.from),
                }
            })
            .collect())
    }
}

// Asymptotic columns are blank (NaN) outside their domain.
fn or_nan(r: casimir_core::Result<f64>) -> casimir_core::Result<f64> {
    match r {
        Err(Error::Domain { .. }) => Ok(f64::NAN),
        other => other,
    }
}

fn sweep_v_row(v: f64) -> casimir_core::Result<Vec<Value>> {
    let exact = thermo_point(v, FormSelector::Auto)?;
    let low = thermo_point_approx(v, Regime::LowT)?;
    let high = thermo_point_approx(v, Regime::HighT)?;
    let mut row = thermo_cells(&exact);
    for tp in [low, high] {
        row.extend([tp.f.into(), tp.s.into(), tp.p.into(), tp.e.into()]);
    }
    Ok(row)
}

fn sweep_at_row(at: f64) -> casimir_core::Result<Vec<Value>> {
    Ok(vec![
        at.into(),
        isentrope_v(at)?.into(),
        or_nan(isentrope_v_asymptotic(at))?.into(),
        r_adiabatic(at)?.into(),
        or_nan(r_adiabatic_asymptotic(at))?.into(),
    ])
}

type RowFn = fn(f64) -> casimir_core::Result<Vec<Value>>;

pub fn sweep(var: SweepVar, grid: &Grid) -> CliResult<Record> {
    let points = grid.points()?;
    let (columns, row_fn): (&[&str], RowFn) = match var {
        SweepVar::V => (
            &[
                "v", "f", "s", "p", "e", "form", "f_lowt", "s_lowt", "p_lowt", "e_lowt", "f_hight", "s_hight",
                "p_hight", "e_hight",
            ],
            sweep_v_row,
        ),
        SweepVar::At => (&["at", "v", "v_as", "R", "R_as"], sweep_at_row),
    };
    // rayon keeps grid order when collecting
    let rows: Vec<Vec<Value>> = points.par_iter().map(|&x| row_fn(x)).collect::<Result<_, _>>()?;
    let mut rec = Record::new("casimir sweep", columns);
    rec.meta("grid", if grid.log { "log" } else { "linear" });
    rec.meta("steps", grid.steps);
    for row in rows {
        rec.push(row);
    }
    Ok(rec)
}

pub struct EquilibriumRequest {
    pub mode: Mode,
    pub kappa: f64,
    /// Interior temperature (isothermal) or `T(a=0)` (adiabatic), K.
    pub temperature: f64,
    /// Plate mass per area, g/cm².
    pub mass: Option<f64>,
}

pub fn equilibrium(req: &EquilibriumRequest, ctx: &UnitContext) -> CliResult<Record> {
    let roots: Vec<EquilibriumSolution> = match req.mode {
        Mode::Isothermal => vec![solve_isothermal(req.kappa)?],
        Mode::Adiabatic => solve_adiabatic(req.kappa)?,
    };
    if roots.is_empty() {
        let peak = r_adiabatic_peak()?;
        return Err(CliError::NoSolution(format!(
            "no adiabatic equilibrium for kappa0 = {}: it exceeds kappa_M = {:.5}",
            req.kappa, peak.kappa_m
        )));
    }
    let mut columns = vec![
        "mode",
        "kappa",
        "root",
        "v",
        "v_prime",
        "stability",
        "kappa_a",
        "a_um",
        "T_in_K",
        "T_out_K",
        "residual",
    ];
    if req.mass.is_some() {
        columns.extend(["force_coeff_pN_cm2", "freq_coeff_Hz_sqrt_g_cm2", "frequency_Hz"]);
    }
    let mut rec = Record::new("casimir equilibrium", &columns);
    rec.meta("root", "v for isothermal, at for adiabatic");
    rec.meta("T_ref_K", format!("{:e}", req.temperature));
    if let Some(m) = req.mass {
        rec.meta("mass_g_cm2", format!("{:e}", m));
    }
    let t_ref = req.temperature;
    let mode_name = match req.mode {
        Mode::Isothermal => "isothermal",
        Mode::Adiabatic => "adiabatic",
    };
    for sol in roots {
        let located = sol.with_reference(t_ref, ctx)?;
        let a = located.a_physical.unwrap_or(f64::NAN);
        let t_in = match req.mode {
            Mode::Isothermal => t_ref,
            Mode::Adiabatic => t_ref * sol.v / sol.x_root,
        };
        let mut row: Vec<Value> = vec![
            mode_name.into(),
            req.kappa.into(),
            sol.x_root.into(),
            sol.v.into(),
            sol.v_prime().into(),
            sol.stability.as_str().into(),
            sol.kappa_at_a.into(),
            (a / MICRON).into(),
            t_in.into(),
            (req.kappa * t_ref).into(),
            sol.residual()?.into(),
        ];
        if let Some(mass) = req.mass {
            if sol.stability == Stability::Stable {
                let osc = oscillation_estimate(&sol, t_ref, mass, ctx)?;
                row.extend([osc.force_coeff.into(), osc.frequency_coeff.into(), osc.frequency.into()]);
            } else {
                row.extend([f64::NAN.into(), f64::NAN.into(), f64::NAN.into()]);
            }
        }
        rec.push(row);
    }
    Ok(rec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    /// Isothermal equilibria.
    Table3,
    /// Adiabatic equilibria.
    Table4,
    /// ζ(3), the T = 0 pressure at 1 μm and the adiabatic landmarks.
    Constants,
}

fn comparison(computed: f64, published: f64) -> [Value; 4] {
    [
        computed.into(),
        published.into(),
        (computed - published).into(),
        ((computed - published) / published).into(),
    ]
}

const T18: f64 = 291.15;

pub fn reproduce(target: Target, ctx: &UnitContext) -> CliResult<Record> {
    let rec = match target {
        Target::Table3 => {
            let mut rec = Record::new(
                "casimir reproduce table3",
                &["kappa", "quantity", "computed", "published", "abs_dev", "rel_dev"],
            );
            rec.meta("T_K", format!("{:e}", T18));
            for (kappa, v, a_um, v_as) in published::ISOTHERMAL {
                let sol = solve_isothermal(kappa)?.with_reference(T18, ctx)?;
                let a = sol.a_physical.unwrap_or(f64::NAN) / MICRON;
                for (name, got, want) in [
                    ("v", sol.v, v),
                    ("a_um", a, a_um),
                    ("v_as", solve_isothermal_asymptotic(kappa)?, v_as),
                ] {
                    let mut row: Vec<Value> = vec![kappa.into(), name.into()];
                    row.extend(comparison(got, want));
                    rec.push(row);
                }
            }
            rec
        }
        Target::Table4 => {
            let mut rec = Record::new(
                "casimir reproduce table4",
                &[
                    "kappa0",
                    "root",
                    "quantity",
                    "computed",
                    "published",
                    "abs_dev",
                    "rel_dev",
                ],
            );
            rec.meta("T0_K", format!("{:e}", T18));
            for (kappa0, unstable, stable) in published::ADIABATIC {
                let roots = solve_adiabatic(kappa0)?;
                let asym = solve_adiabatic_asymptotic(kappa0)?;
                for (i, (sol, want)) in roots.iter().zip([unstable, stable]).enumerate() {
                    let sol = sol.with_reference(T18, ctx)?;
                    let a = sol.a_physical.unwrap_or(f64::NAN) / MICRON;
                    let label = sol.stability.as_str();
                    for (name, got, published) in [
                        ("at", sol.x_root, want.at),
                        ("a_um", a, want.a_um),
                        ("kappa_a", sol.kappa_at_a, want.kappa_a),
                        ("at_as", asym.get(i).copied().unwrap_or(f64::NAN), want.at),
                    ] {
                        let mut row: Vec<Value> = vec![kappa0.into(), label.into(), name.into()];
                        row.extend(comparison(got, published));
                        rec.push(row);
                    }
                }
            }
            rec
        }
        Target::Constants => {
            let mut rec = Record::new(
                "casimir reproduce constants",
                &["quantity", "computed", "published", "abs_dev", "rel_dev"],
            );
            let peak = r_adiabatic_peak()?;
            for (name, got, want) in [
                ("zeta3", polylog(3, 1.0)?, published::ZETA3),
                (
                    "casimir_pressure_1um_N_cm2",
                    casimir_pressure_t0(MICRON, ctx)?.newton_per_cm2(),
                    published::CASIMIR_1UM_N_CM2,
                ),
                ("R_zero_at", r_adiabatic_zero()?, published::R_ZERO_AT),
                ("at_M", peak.at_m, published::PEAK_AT),
                ("kappa_M", peak.kappa_m, published::KAPPA_M),
            ] {
                let mut row: Vec<Value> = vec![name.into()];
                row.extend(comparison(got, want));
                rec.push(row);
            }
            rec
        }
    };
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints_exact() {
        let g = Grid {
            from: 0.01,
            to: 1.0,
            steps: 7,
            log: true,
        };
        let pts = g.points().unwrap();
        assert_eq!((pts[0], pts[6]), (0.01, 1.0));
        assert!(pts.windows(2).all(|w| w[1] > w[0]));
        let g = Grid {
            from: 0.0,
            to: 1.0,
            steps: 5,
            log: false,
        };
        assert_eq!(g.points().unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn bad_grids() {
        for g in [
            Grid {
                from: 1.0,
                to: 0.5,
                steps: 3,
                log: false,
            },
            Grid {
                from: 0.0,
                to: 1.0,
                steps: 1,
                log: false,
            },
            Grid {
                from: 0.0,
                to: 1.0,
                steps: 3,
                log: true,
            },
        ] {
            assert_eq!(g.points().unwrap_err().exit_code(), 2);
        }
    }

    #[test]
    fn exit_codes() {
        let code = |e: Error| CliError::from(e).exit_code();
        assert_eq!(code(Error::Precondition("x".into())), 2);
        assert_eq!(
            code(Error::Convergence {
                func: "f",
                iterations: 3
            }),
            1
        );
        assert_eq!(
            code(Error::NoBracket {
                func: "f",
                lo: 0.0,
                hi: 1.0
            }),
            1
        );
        assert_eq!(code(Error::NoSolution("x".into())), 3);
        assert_eq!(CliError::NoSolution("x".into()).exit_code(), 3);
    }

    #[test]
    fn no_adiabatic_solution_above_peak() {
        let req = EquilibriumRequest {
            mode: Mode::Adiabatic,
            kappa: 0.9,
            temperature: T18,
            mass: None,
        };
        let err = equilibrium(&req, &UnitContext::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
