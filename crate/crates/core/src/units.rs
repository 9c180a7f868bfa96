//! Physical constants and I/O unit conversions. Everything internal is SI.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Metres per micron.
pub const MICRON: f64 = 1e-6;
/// Pascal per N/cm².
pub const PA_PER_N_PER_CM2: f64 = 1e4;
/// Pascal per pN/cm².
pub const PA_PER_PN_PER_CM2: f64 = 1e-8;
/// kg/m² per g/cm².
pub const KG_PER_M2_PER_G_PER_CM2: f64 = 10.0;
/// Kelvin offset of the Celsius scale.
pub const CELSIUS_ZERO: f64 = 273.15;

pub fn celsius_to_kelvin(c: f64) -> f64 {
    c + CELSIUS_ZERO
}

pub fn kelvin_to_celsius(k: f64) -> f64 {
    k - CELSIUS_ZERO
}

/// Physical constants used to move between reduced and dimensional variables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitContext {
    /// ħc in J·m.
    pub hbar_c: f64,
    /// Boltzmann constant in J/K.
    pub k_b: f64,
}

impl Default for UnitContext {
    /// CODATA 2018 (exact `c`, `k_B`; ħ = 1.054571817e-34 J·s).
    fn default() -> Self {
        UnitContext {
            hbar_c: 3.161_526_771_559_562e-26,
            k_b: 1.380_649e-23,
        }
    }
}

impl UnitContext {
    pub fn new(hbar_c: f64, k_b: f64) -> Result<Self> {
        let ctx = UnitContext { hbar_c, k_b };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |x: f64| x > 0.0 && x.is_finite();
        if ok(self.hbar_c) && ok(self.k_b) {
            Ok(())
        } else {
            Err(Error::domain(
                "UnitContext",
                format!("hbar_c = {}, k_B = {} must be positive", self.hbar_c, self.k_b),
            ))
        }
    }

    /// `πħc / (k_B T)` in metres: the plate distance at which `v = 1`.
    pub fn length_scale(&self, temperature: f64) -> f64 {
        PI * self.hbar_c / (self.k_b * temperature)
    }

    /// `k_B T / (πħc)` in 1/m.
    pub fn inverse_length(&self, temperature: f64) -> f64 {
        self.k_b * temperature / (PI * self.hbar_c)
    }
}

/// A pressure, stored in pascal.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Pressure(pub f64);

impl Pressure {
    pub fn pascal(self) -> f64 {
        self.0
    }

    pub fn newton_per_cm2(self) -> f64 {
        self.0 / PA_PER_N_PER_CM2
    }

    pub fn piconewton_per_cm2(self) -> f64 {
        self.0 / PA_PER_PN_PER_CM2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_constants() {
        let ctx = UnitContext::default();
        assert!((ctx.hbar_c - 1.054_571_817e-34 * 299_792_458.0).abs() < 1e-38);
        assert_eq!(ctx.k_b, 1.380649e-23);
        assert!(UnitContext::new(-1.0, 1.0).is_err());
        assert!(UnitContext::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn pressure_conversions() {
        let p = Pressure(1.0);
        assert_eq!(p.newton_per_cm2(), 1e-4);
        assert_eq!(p.piconewton_per_cm2(), 1e8);
        assert_eq!(celsius_to_kelvin(18.0), 291.15);
    }
}
