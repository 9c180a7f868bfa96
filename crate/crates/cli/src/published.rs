//! Published reference values used by `casimir reproduce`.

/// Isothermal equilibria at 18 °C: `(κ, v(a), a in μm, v_as)`.
pub const ISOTHERMAL: [(f64, f64, f64, f64); 6] = [
    (0.0, 0.2419, 5.981, 0.2414),
    (0.2, 0.2421, 5.984, 0.2415),
    (0.4, 0.24340, 6.032, 0.2435),
    (0.6, 0.2532, 6.260, 0.2528),
    (0.8, 0.2879, 7.117, 0.2877),
    (0.95, 0.4233, 10.46, 0.4233),
];

/// One adiabatic root: `at`, `a` in μm at 18 °C, `κ(a)`.
#[derive(Debug, Clone, Copy)]
pub struct AdiabaticRoot {
    pub at: f64,
    pub a_um: f64,
    pub kappa_a: f64,
}

const fn root(at: f64, a_um: f64, kappa_a: f64) -> AdiabaticRoot {
    AdiabaticRoot { at, a_um, kappa_a }
}

/// Adiabatic equilibria: `(κ(0), unstable root, stable root)`.
pub const ADIABATIC: [(f64, AdiabaticRoot, AdiabaticRoot); 4] = [
    (0.2, root(0.2767, 6.839, 0.2285), root(26.03, 643.4, 0.99998)),
    (0.4, root(0.2819, 6.969, 0.4592), root(3.235, 79.98, 0.9984)),
    (0.6, root(0.3148, 7.783, 0.7093), root(0.8917, 22.05, 0.9778)),
    (0.65, root(0.3441, 8.506, 0.7876), root(0.6503, 16.08, 0.9565)),
];

pub const ZETA3: f64 = 1.2020569;
/// T = 0 Casimir pressure at 1 μm, N/cm².
pub const CASIMIR_1UM_N_CM2: f64 = 1.3001e-7;
pub const R_ZERO_AT: f64 = 0.2763;
pub const PEAK_AT: f64 = 0.4391;
pub const KAPPA_M: f64 = 0.68542;
