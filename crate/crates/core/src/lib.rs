//! Finite-temperature thermodynamics of two parallel, perfectly conducting
//! plates, and the mechanical equilibria that appear when the region between
//! the plates is hotter than the outside.
//!
//! * [`specfun`]: polylogarithms and the Bose sums `j`, `k`, `h`.
//! * [`thermo`]: scaled free energy, entropy, pressure and energy `(f, s, p, e)`.
//! * [`equilibrium`]: isothermal and adiabatic balance, stability, oscillations.
//! * [`units`]: physical constants and unit conversions.

pub mod equilibrium;
pub mod error;
pub mod roots;
pub mod specfun;
pub mod thermo;
pub mod units;

pub use error::{Error, Result};
pub use units::{Pressure, UnitContext};
