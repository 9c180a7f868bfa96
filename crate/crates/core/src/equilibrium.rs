//! Mechanical equilibrium of a plate pair whose interior sits at temperature
//! `T` and whose exterior sits at `T′`.
//!
//! The total pressure is `P = π⁶ħc/(45a⁴) G(v, v′)` with
//! `G(v, v′) = v⁴ + (45/π⁴) p(v) − v′⁴`. Roots are sought in the scaled form
//! `κ⁴ = R(x)`:
//!
//! * isothermal: `x = v`, `R(v) = G(v, 0)/v⁴`, `κ = T′/T`;
//! * adiabatic: the interior follows an isentrope `v = v(at)`, `x = at`,
//!   `R(at) = G(v(at), 0)/(at)⁴`, `κ(0) = T′/T(a=0)`.
//!
//! A root is stable iff `dG/da < 0` there.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::roots::{brent, golden_max, RootControl};
use crate::specfun::ZETA3;
use crate::thermo::{entropy_fn, pressure_fn, reduced_temperature};
use crate::units::{Pressure, UnitContext, KG_PER_M2_PER_G_PER_CM2, PA_PER_PN_PER_CM2};

const PI4: f64 = PI * PI * PI * PI;
const PI6: f64 = PI4 * PI * PI;

/// `45 ζ(3) / (32 π⁶)`, the coefficient of the asymptotic isentrope.
pub const ISENTROPE_B: f64 = 45.0 * ZETA3 / (32.0 * PI6);

/// Relative step in `ln a` for the stability derivative.
const LN_A_STEP: f64 = 1e-5;
/// `|dG/d ln a|` below this fraction of `x⁴` counts as degenerate.
const SLOPE_RESOLUTION: f64 = 1e-7;
/// Largest `at` searched for the stable adiabatic root.
const AT_SEARCH_CAP: f64 = 1e4;
/// Lower end of the bracket for the zero of the adiabatic `R`.
const AT_SEARCH_FLOOR: f64 = 0.05;
/// Bracket for the peak of the adiabatic `R`.
const PEAK_BRACKET: (f64, f64) = (0.3, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    Isothermal,
    Adiabatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stability {
    Stable,
    Unstable,
    /// Root at the maximum of the adiabatic `R`; `dG/da` vanishes.
    Marginal,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Marginal => "marginal",
        }
    }
}

/// Parameters of one balance problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BalanceProblem {
    pub mode: Mode,
    /// `T′/T` (isothermal) or `T′/T(a=0)` (adiabatic).
    pub kappa: f64,
}

impl BalanceProblem {
    pub fn new(mode: Mode, kappa: f64) -> Result<Self> {
        check_kappa(kappa)?;
        Ok(BalanceProblem { mode, kappa })
    }

    pub fn isothermal(kappa: f64) -> Result<Self> {
        Self::new(Mode::Isothermal, kappa)
    }

    pub fn adiabatic(kappa0: f64) -> Result<Self> {
        Self::new(Mode::Adiabatic, kappa0)
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if (0.0..1.0).contains(&kappa) {
        Ok(())
    } else {
        Err(Error::domain(
            "BalanceProblem",
            format!("kappa = {kappa} outside [0, 1)"),
        ))
    }
}

/// An isentrope of the interior, labelled by `t = k_B T(a=0)/(πħc)` in 1/m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isentrope {
    pub t: f64,
}

impl Isentrope {
    /// The isentrope whose zero-distance limit has temperature `t0` (K).
    pub fn from_temperature(t0: f64, ctx: &UnitContext) -> Result<Self> {
        if !(t0 > 0.0 && t0.is_finite()) {
            return Err(Error::domain("Isentrope", format!("T(a=0) = {t0} must be > 0")));
        }
        Ok(Isentrope {
            t: ctx.inverse_length(t0),
        })
    }

    /// From the interior entropy per area `σ_int` (over k_B, 1/m²):
    /// `t² = 2σ_int / (3π ζ(3))`.
    pub fn from_entropy(sigma_int: f64) -> Result<Self> {
        if !(sigma_int > 0.0 && sigma_int.is_finite()) {
            return Err(Error::domain(
                "Isentrope",
                format!("sigma_int = {sigma_int} must be > 0"),
            ));
        }
        Ok(Isentrope {
            t: (2.0 * sigma_int / (3.0 * PI * ZETA3)).sqrt(),
        })
    }

    /// Conserved interior entropy per area, 1/m².
    pub fn entropy(&self) -> f64 {
        1.5 * PI * ZETA3 * self.t * self.t
    }

    /// Reduced interior temperature at plate distance `a` (m).
    pub fn v_at(&self, a: f64) -> Result<f64> {
        isentrope_v(a * self.t)
    }

    pub fn temperature_at(&self, a: f64, ctx: &UnitContext) -> Result<f64> {
        Ok(self.v_at(a)? / (a * ctx.inverse_length(1.0)))
    }
}

/// A root of the balance equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumSolution {
    pub problem: BalanceProblem,
    /// `v` for isothermal problems, `at` for adiabatic ones.
    pub x_root: f64,
    /// Interior reduced temperature at the root.
    pub v: f64,
    pub stability: Stability,
    /// `v′/v` at the root.
    pub kappa_at_a: f64,
    /// Plate distance in m, once a reference temperature is attached.
    pub a_physical: Option<f64>,
}

impl EquilibriumSolution {
    /// Attach the plate distance for a reference temperature: `T` for
    /// isothermal roots, `T(a=0)` for adiabatic ones.
    pub fn with_reference(mut self, temperature: f64, ctx: &UnitContext) -> Result<Self> {
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::domain(
                "with_reference",
                format!("reference temperature {temperature} must be > 0"),
            ));
        }
        self.a_physical = Some(self.x_root * ctx.length_scale(temperature));
        Ok(self)
    }

    /// Exterior reduced temperature `v′` at the root.
    pub fn v_prime(&self) -> f64 {
        self.kappa_at_a * self.v
    }

    /// `κ⁴ − R(x_root)`.
    pub fn residual(&self) -> Result<f64> {
        let r = match self.problem.mode {
            Mode::Isothermal => r_isothermal(self.x_root)?,
            Mode::Adiabatic => r_adiabatic(self.x_root)?,
        };
        Ok(self.problem.kappa.powi(4) - r)
    }
}

/// Scaled total pressure `G(v, v′) = v⁴ + (45/π⁴) p(v) − v′⁴`.
pub fn g_balance(v: f64, v_prime: f64) -> Result<f64> {
    if !(v_prime >= 0.0 && v_prime.is_finite()) {
        return Err(Error::domain("g_balance", format!("v' = {v_prime} must be >= 0")));
    }
    Ok(v.powi(4) + 45.0 / PI4 * pressure_fn(v)? - v_prime.powi(4))
}

/// Total pressure on a plate with interior temperature `T` and exterior `T′`.
pub fn total_pressure(a: f64, t_in: f64, t_out: f64, ctx: &UnitContext) -> Result<Pressure> {
    let v = reduced_temperature(a, t_in, ctx)?.v;
    let vp = reduced_temperature(a, t_out, ctx)?.v;
    Ok(Pressure(PI6 * ctx.hbar_c / (45.0 * a.powi(4)) * g_balance(v, vp)?))
}

/// Isothermal `R(v) = (v⁴ + (45/π⁴) p(v)) / v⁴`.
pub fn r_isothermal(v: f64) -> Result<f64> {
    if v.is_nan() || v <= 0.0 {
        return Err(Error::domain("r_isothermal", format!("v = {v} must be > 0")));
    }
    Ok(g_balance(v, 0.0)? / v.powi(4))
}

/// The unique unstable root of the isothermal balance for `κ = T′/T`.
pub fn solve_isothermal(kappa: f64) -> Result<EquilibriumSolution> {
    let problem = BalanceProblem::isothermal(kappa)?;
    let target = kappa.powi(4);
    let lo = 0.2;
    let mut hi = 1.0;
    while r_isothermal(hi)? <= target {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::NoBracket {
                func: "solve_isothermal",
                lo,
                hi,
            });
        }
    }
    let v = brent(
        "solve_isothermal",
        |v| Ok(r_isothermal(v)? - target),
        lo,
        hi,
        RootControl::machine(),
    )?;
    let mut sol = EquilibriumSolution {
        problem,
        x_root: v,
        v,
        stability: Stability::Unstable,
        kappa_at_a: kappa,
        a_physical: None,
    };
    sol.stability = classify_stability(&sol, &problem)?;
    Ok(sol)
}

/// `(2/(3ζ(3))) (s(v) + (4π⁴/45) v³)`, equal to `(at)²` on the isentrope.
pub fn isentrope_rhs(v: f64) -> Result<f64> {
    Ok(2.0 / (3.0 * ZETA3) * (entropy_fn(v)? + 4.0 * PI4 / 45.0 * v.powi(3)))
}

/// Reduced temperature `v(at)` along an isentrope.
///
/// The right-hand side dominates `v²`, so the root lies in `[0, at]`; the
/// upper end is padded because at small `at` the two agree to rounding.
pub fn isentrope_v(at: f64) -> Result<f64> {
    if !(at >= 0.0 && at.is_finite()) {
        return Err(Error::domain("isentrope_v", format!("at = {at} must be >= 0")));
    }
    if at == 0.0 {
        return Ok(0.0);
    }
    let target = at * at;
    brent(
        "isentrope_v",
        |v| Ok(isentrope_rhs(v)? - target),
        0.0,
        1.001 * at,
        RootControl::machine(),
    )
}

/// `v_as(at) = (B (12π²(at)² − 1))^{1/3}`: the isentrope with `k + h` dropped.
pub fn isentrope_v_asymptotic(at: f64) -> Result<f64> {
    let arg = 12.0 * PI * PI * at * at - 1.0;
    if !(arg > 0.0 && arg.is_finite()) {
        return Err(Error::domain(
            "isentrope_v_asymptotic",
            format!("12π²(at)² − 1 = {arg} must be > 0"),
        ));
    }
    Ok((ISENTROPE_B * arg).cbrt())
}

/// Adiabatic `R(at) = (v⁴ + (45/π⁴) p(v)) / (at)⁴` with `v = v(at)`.
pub fn r_adiabatic(at: f64) -> Result<f64> {
    if !(at > 0.0 && at.is_finite()) {
        return Err(Error::domain("r_adiabatic", format!("at = {at} must be > 0")));
    }
    Ok(g_balance(isentrope_v(at)?, 0.0)? / at.powi(4))
}

/// Location and height of the maximum of the adiabatic `R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdiabaticPeak {
    pub at_m: f64,
    pub r_m: f64,
    /// `R(at_M)^{1/4}`: the largest `κ(0)` with an equilibrium.
    pub kappa_m: f64,
}

pub fn r_adiabatic_peak() -> Result<AdiabaticPeak> {
    let (at_m, r_m) = golden_max(r_adiabatic, PEAK_BRACKET.0, PEAK_BRACKET.1, 1e-9)?;
    Ok(AdiabaticPeak {
        at_m,
        r_m,
        kappa_m: r_m.powf(0.25),
    })
}

/// The `at` where the adiabatic `R` changes sign.
pub fn r_adiabatic_zero() -> Result<f64> {
    let peak = r_adiabatic_peak()?;
    brent(
        "r_adiabatic_zero",
        r_adiabatic,
        AT_SEARCH_FLOOR,
        peak.at_m,
        RootControl::machine(),
    )
}

/// Adiabatic equilibria for `κ(0) = T′/T(a=0)`.
///
/// Returns nothing above `κ_M`, a single marginal root at `κ_M`, and otherwise
/// the unstable (smaller `at`) and stable roots in that order.
pub fn solve_adiabatic(kappa0: f64) -> Result<Vec<EquilibriumSolution>> {
    let problem = BalanceProblem::adiabatic(kappa0)?;
    let peak = r_adiabatic_peak()?;
    let target = kappa0.powi(4);
    let gap = target - peak.r_m;
    if gap > 1e-12 {
        return Ok(Vec::new());
    }
    let make = |at: f64, stability| -> Result<EquilibriumSolution> {
        let v = isentrope_v(at)?;
        Ok(EquilibriumSolution {
            problem,
            x_root: at,
            v,
            stability,
            kappa_at_a: kappa0 * at / v,
            a_physical: None,
        })
    };
    if gap.abs() <= 1e-12 {
        return Ok(vec![make(peak.at_m, Stability::Marginal)?]);
    }
    let f = |at: f64| Ok(r_adiabatic(at)? - target);
    let lower = brent("solve_adiabatic", f, AT_SEARCH_FLOOR, peak.at_m, RootControl::machine())?;
    let mut hi = 2.0 * peak.at_m;
    while f(hi)? > 0.0 {
        hi *= 2.0;
        if hi > AT_SEARCH_CAP {
            return Err(Error::NoBracket {
                func: "solve_adiabatic",
                lo: peak.at_m,
                hi: AT_SEARCH_CAP,
            });
        }
    }
    let upper = brent("solve_adiabatic", f, peak.at_m, hi, RootControl::machine())?;

    let mut roots = Vec::with_capacity(2);
    for at in [lower, upper] {
        let mut sol = make(at, Stability::Unstable)?;
        sol.stability = classify_stability(&sol, &problem)?;
        roots.push(sol);
    }
    Ok(roots)
}

/// `G` along the path the problem prescribes, as a function of `λ = a/a₀`.
fn g_along_path(sol: &EquilibriumSolution, problem: &BalanceProblem, lambda: f64) -> Result<f64> {
    match problem.mode {
        // v and v′ both proportional to a.
        Mode::Isothermal => {
            let v = lambda * sol.x_root;
            g_balance(v, problem.kappa * v)
        }
        // v follows the isentrope, v′ = κ(0)·at grows with a.
        Mode::Adiabatic => {
            let at = lambda * sol.x_root;
            g_balance(isentrope_v(at)?, problem.kappa * at)
        }
    }
}

/// `45 ζ(3) / (4π⁶)`: with `p_as = −vζ(3)/(4π²)`, `(45/π⁴) p_as = −C_AS v`.
const C_AS: f64 = 45.0 * ZETA3 / (4.0 * PI6);

/// Isothermal `R` with the high-temperature pressure `p_as`:
/// `1 − 45ζ(3)/(4π⁶v³)`.
pub fn r_isothermal_asymptotic(v: f64) -> Result<f64> {
    if v.is_nan() || v <= 0.0 {
        return Err(Error::domain("r_isothermal_asymptotic", format!("v = {v} must be > 0")));
    }
    Ok(1.0 - C_AS / v.powi(3))
}

/// Closed-form isothermal root of `r_isothermal_asymptotic(v) = κ⁴`.
pub fn solve_isothermal_asymptotic(kappa: f64) -> Result<f64> {
    check_kappa(kappa)?;
    Ok((C_AS / (1.0 - kappa.powi(4))).cbrt())
}

/// Adiabatic `R` with both `v(at)` and `p` replaced by their asymptotic forms.
pub fn r_adiabatic_asymptotic(at: f64) -> Result<f64> {
    let v = isentrope_v_asymptotic(at)?;
    Ok((v.powi(4) - C_AS * v) / at.powi(4))
}

/// Roots `at` of `r_adiabatic_asymptotic(at) = κ(0)⁴`, smaller first.
pub fn solve_adiabatic_asymptotic(kappa0: f64) -> Result<Vec<f64>> {
    check_kappa(kappa0)?;
    let (at_m, r_m) = golden_max(r_adiabatic_asymptotic, PEAK_BRACKET.0, PEAK_BRACKET.1, 1e-9)?;
    let target = kappa0.powi(4);
    if target > r_m {
        return Ok(Vec::new());
    }
    // R vanishes where v_as³ = C_AS.
    let at_zero = ((C_AS / ISENTROPE_B + 1.0) / (12.0 * PI * PI)).sqrt();
    let f = |at: f64| Ok(r_adiabatic_asymptotic(at)? - target);
    let lower = brent("solve_adiabatic_asymptotic", f, at_zero, at_m, RootControl::machine())?;
    let mut hi = 2.0 * at_m;
    while f(hi)? > 0.0 {
        hi *= 2.0;
        if hi > AT_SEARCH_CAP {
            return Err(Error::NoBracket {
                func: "solve_adiabatic_asymptotic",
                lo: at_m,
                hi: AT_SEARCH_CAP,
            });
        }
    }
    let upper = brent("solve_adiabatic_asymptotic", f, at_m, hi, RootControl::machine())?;
    Ok(vec![lower, upper])
}

/// `dG/d(ln a)` at the root by central differences.
pub fn balance_slope(sol: &EquilibriumSolution, problem: &BalanceProblem) -> Result<f64> {
    let up = g_along_path(sol, problem, 1.0 + LN_A_STEP)?;
    let down = g_along_path(sol, problem, 1.0 - LN_A_STEP)?;
    Ok((up - down) / ((1.0 + LN_A_STEP).ln() - (1.0 - LN_A_STEP).ln()))
}

/// Stable iff `dG/da < 0` at the root.
pub fn classify_stability(sol: &EquilibriumSolution, problem: &BalanceProblem) -> Result<Stability> {
    let slope = balance_slope(sol, problem)?;
    if slope.abs() < SLOPE_RESOLUTION * sol.x_root.powi(4) {
        return Err(Error::Degenerate { x: sol.x_root, slope });
    }
    Ok(if slope < 0.0 {
        Stability::Stable
    } else {
        Stability::Unstable
    })
}

/// Small-oscillation data about a stable root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillationEstimate {
    /// Plate distance at the root, m.
    pub a: f64,
    /// `−dP/da` in Pa/m.
    pub stiffness: f64,
    /// Restoring force per area per relative displacement `a₁/a`, pN/cm².
    pub force_coeff: f64,
    /// `ν √m` in Hz·√(g/cm²).
    pub frequency_coeff: f64,
    /// Oscillation frequency for the given areal mass, Hz.
    pub frequency: f64,
}

/// Restoring force and frequency about a stable root, with the interior
/// following its isentrope and the exterior held at `T′`.
///
/// `t0` is the reference temperature (`T(a=0)` for adiabatic roots) and
/// `mass` the plate's mass per area in g/cm².
pub fn oscillation_estimate(
    sol: &EquilibriumSolution,
    t0: f64,
    mass: f64,
    ctx: &UnitContext,
) -> Result<OscillationEstimate> {
    if sol.stability != Stability::Stable {
        return Err(Error::Precondition(format!(
            "oscillations need a stable root, got {}",
            sol.stability.as_str()
        )));
    }
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::domain(
            "oscillation_estimate",
            format!("areal mass {mass} must be > 0"),
        ));
    }
    let located = sol.with_reference(t0, ctx)?;
    let a = located.a_physical.unwrap_or_default();
    let slope = balance_slope(sol, &sol.problem)?;
    // P = C G / a⁴ and G = 0 at the root, so dP/da = C (dG/d ln a) / a⁵.
    let stiffness = -PI6 * ctx.hbar_c / (45.0 * a.powi(5)) * slope;
    let frequency_coeff = (stiffness / KG_PER_M2_PER_G_PER_CM2).sqrt() / (2.0 * PI);
    Ok(OscillationEstimate {
        a,
        stiffness,
        force_coeff: a * stiffness / PA_PER_PN_PER_CM2,
        frequency_coeff,
        frequency: frequency_coeff / mass.sqrt(),
    })
}
