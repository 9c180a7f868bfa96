//! Scaled thermodynamic functions of the region between the plates.
//!
//! With `v = a k_B T / (πħc)` the finite, non-extensive parts of free energy,
//! entropy, pressure and internal energy per plate area are
//!
//! ```text
//! φ = (π²ħc/a³) f(v)   σ = (π/a²) s(v)   P = (π²ħc/a⁴) p(v)   ε = (π²ħc/a³) e(v)
//! ```
//!
//! Each function has two exactly equivalent closed forms built from the thermal
//! sums `k` and `h` of [`crate::specfun`]: form A sums over `k(1/v)` and is
//! fast at low temperature, form B sums over `k(4π²v)` and is fast at high
//! temperature. Only two of the four functions are independent:
//! `3f + v s − p = 0` and `e = f + v s`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{hfun, kfun, ZETA3};
use crate::units::{Pressure, UnitContext};

const PI2: f64 = PI * PI;
const PI4: f64 = PI2 * PI2;
const FOUR_PI2: f64 = 4.0 * PI2;

/// `v` below which [`FormSelector::Auto`] picks form A; here `1/v = 4π²v`.
pub const FORM_CROSSOVER: f64 = 1.0 / (2.0 * PI);

/// High-temperature entropy limit `ζ(3) / (8π²)`.
pub const ENTROPY_LIMIT: f64 = ZETA3 / (8.0 * PI2);

/// Which closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum FormSelector {
    A,
    B,
    #[default]
    Auto,
}

impl FormSelector {
    fn resolve(self, v: f64) -> Form {
        match self {
            FormSelector::A => Form::A,
            FormSelector::B => Form::B,
            FormSelector::Auto if v < FORM_CROSSOVER => Form::A,
            FormSelector::Auto => Form::B,
        }
    }
}

/// Asymptotic regimes: the forms with the thermal sums dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    LowT,
    HighT,
}

/// The representation actually used to produce a [`ThermoPoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Form {
    A,
    B,
    LowT,
    HighT,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Form::A => "A",
            Form::B => "B",
            Form::LowT => "LowT",
            Form::HighT => "HighT",
        }
    }
}

/// Where a reduced temperature came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalOrigin {
    /// Plate distance in m.
    pub a: f64,
    /// Temperature in K.
    pub temperature: f64,
}

/// Dimensionless temperature `v = a k_B T / (πħc)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedState {
    pub v: f64,
    pub origin: Option<PhysicalOrigin>,
}

impl ReducedState {
    pub fn from_v(v: f64) -> Result<Self> {
        check_v("ReducedState", v)?;
        Ok(ReducedState { v, origin: None })
    }
}

/// `(f, s, p, e)` at one reduced temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermoPoint {
    pub v: f64,
    pub f: f64,
    pub s: f64,
    pub p: f64,
    pub e: f64,
    pub form: Form,
}

impl ThermoPoint {
    /// `3f + v s − p`, zero up to rounding.
    pub fn scaling_residual(&self) -> f64 {
        3.0 * self.f + self.v * self.s - self.p
    }

    /// `e − f − v s`, zero up to rounding.
    pub fn energy_residual(&self) -> f64 {
        self.e - self.f - self.v * self.s
    }

    fn zero_temperature(form: Form) -> Self {
        ThermoPoint {
            v: 0.0,
            f: -1.0 / 720.0,
            s: 0.0,
            p: -1.0 / 240.0,
            e: -1.0 / 720.0,
            form,
        }
    }
}

pub fn reduced_temperature(a: f64, temperature: f64, ctx: &UnitContext) -> Result<ReducedState> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain(
            "reduced_temperature",
            format!("distance a = {a} must be > 0"),
        ));
    }
    if !(temperature >= 0.0 && temperature.is_finite()) {
        return Err(Error::domain(
            "reduced_temperature",
            format!("temperature T = {temperature} must be >= 0"),
        ));
    }
    Ok(ReducedState {
        v: a * ctx.inverse_length(temperature),
        origin: Some(PhysicalOrigin { a, temperature }),
    })
}

fn check_v(func: &'static str, v: f64) -> Result<()> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            func,
            format!("reduced temperature v = {v} must be finite and >= 0"),
        ))
    }
}

/// Thermal sums `(k, h)` at the argument of the given form.
fn thermal_sums(v: f64, form: Form) -> Result<(f64, f64)> {
    let x = match form {
        Form::A => 1.0 / v,
        Form::B => FOUR_PI2 * v,
        Form::LowT | Form::HighT => return Ok((0.0, 0.0)),
    };
    Ok((kfun(x)?, hfun(x)?))
}

fn form_a(v: f64, k: f64, h: f64, form: Form) -> ThermoPoint {
    let v2 = v * v;
    let v3 = v2 * v;
    let c = PI4 / 45.0 * v;
    ThermoPoint {
        v,
        f: -1.0 / 720.0 - v3 * (0.5 * ZETA3 - c + k),
        s: v2 * (1.5 * ZETA3 - 4.0 * c + 3.0 * k - h),
        p: -1.0 / 240.0 - v3 * (c + h),
        e: -1.0 / 720.0 + v3 * (ZETA3 - 3.0 * c + 2.0 * k - h),
        form,
    }
}

fn form_b(v: f64, k: f64, h: f64, form: Form) -> ThermoPoint {
    ThermoPoint {
        v,
        f: -v * (0.5 * ZETA3 + k) / FOUR_PI2,
        s: (0.5 * ZETA3 + k + h) / FOUR_PI2,
        p: -v * (ZETA3 + 2.0 * k - h) / FOUR_PI2,
        e: v * h / FOUR_PI2,
        form,
    }
}

/// `g(v)` from either representation; `g(0) = 0`.
pub fn g_of_v(v: f64, form: FormSelector) -> Result<f64> {
    check_v("g_of_v", v)?;
    if v == 0.0 {
        return Ok(0.0);
    }
    let resolved = form.resolve(v);
    let (k, _) = thermal_sums(v, resolved)?;
    Ok(match resolved {
        Form::A => -v * v * v * (0.5 * ZETA3 + k),
        _ => 1.0 / 720.0 - PI4 / 45.0 * v.powi(4) - v / FOUR_PI2 * (0.5 * ZETA3 + k),
    })
}

/// `(f, s, p, e)` at `v`. At `v = 0` the exact limits are returned.
pub fn thermo_point(v: f64, form: FormSelector) -> Result<ThermoPoint> {
    check_v("thermo_point", v)?;
    let resolved = form.resolve(v);
    if v == 0.0 {
        return Ok(ThermoPoint::zero_temperature(resolved));
    }
    let (k, h) = thermal_sums(v, resolved)?;
    Ok(match resolved {
        Form::A => form_a(v, k, h, Form::A),
        _ => form_b(v, k, h, Form::B),
    })
}

/// Low- or high-temperature approximation: form A resp. B with `k = h = 0`.
pub fn thermo_point_approx(v: f64, regime: Regime) -> Result<ThermoPoint> {
    check_v("thermo_point_approx", v)?;
    Ok(match regime {
        Regime::LowT => form_a(v, 0.0, 0.0, Form::LowT),
        Regime::HighT => form_b(v, 0.0, 0.0, Form::HighT),
    })
}

/// `p(v)` with the automatically chosen form.
pub fn pressure_fn(v: f64) -> Result<f64> {
    Ok(thermo_point(v, FormSelector::Auto)?.p)
}

/// `s(v)` with the automatically chosen form.
pub fn entropy_fn(v: f64) -> Result<f64> {
    Ok(thermo_point(v, FormSelector::Auto)?.s)
}

/// Zero-temperature Casimir pressure magnitude `π²ħc / (240 a⁴)`.
pub fn casimir_pressure_t0(a: f64, ctx: &UnitContext) -> Result<Pressure> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain(
            "casimir_pressure_t0",
            format!("distance a = {a} must be > 0"),
        ));
    }
    Ok(Pressure(PI2 * ctx.hbar_c / (240.0 * a.powi(4))))
}

/// Dimensional finite parts at plate distance `a` (m) and temperature `T` (K).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionalPoint {
    pub state: ReducedState,
    /// Interior pressure including the matching exterior term, Pa.
    pub pressure: Pressure,
    /// Free energy per area, J/m².
    pub free_energy: f64,
    /// Entropy per area over k_B, 1/m².
    pub entropy: f64,
    /// Internal energy per area, J/m².
    pub energy: f64,
}

impl DimensionalPoint {
    /// Attaches units to `tp` using the distance carried by `state`.
    pub fn from_reduced(state: ReducedState, tp: &ThermoPoint, ctx: &UnitContext) -> Result<Self> {
        let a = state
            .origin
            .ok_or_else(|| Error::Precondition("reduced state has no physical origin".into()))?
            .a;
        let energy_scale = PI2 * ctx.hbar_c / a.powi(3);
        Ok(DimensionalPoint {
            state,
            pressure: Pressure(energy_scale / a * tp.p),
            free_energy: energy_scale * tp.f,
            entropy: PI / (a * a) * tp.s,
            energy: energy_scale * tp.e,
        })
    }
}

pub fn dimensional_point(a: f64, temperature: f64, ctx: &UnitContext) -> Result<DimensionalPoint> {
    let state = reduced_temperature(a, temperature, ctx)?;
    let tp = thermo_point(state.v, FormSelector::Auto)?;
    DimensionalPoint::from_reduced(state, &tp, ctx)
}
