//! Polylogarithms of integer order on [0, 1] and the Bose sums built on them.
//!
//! Everything here is a plain series with an explicit truncation rule (see
//! [`SeriesControl`]). The thermal functions of the plate system are
//!
//! ```text
//! j(x) = Σ 1 / (n³ (e^{nx} - 1))
//! k(x) = (1 - x d/dx) j(x)
//! h(x) = x k'(x)
//! ```
//!
//! all of which decay like `e^{-x}` for large `x`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// Truncation policy for every series in this module.
///
/// Summation stops once the magnitude of the current term has been below
/// `rel_tol * |partial sum|` for two consecutive terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    rel_tol: f64,
    max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            max_terms: 10_000,
        }
    }
}

impl SeriesControl {
    pub const MIN_TERMS: usize = 50;

    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::domain(
                "SeriesControl",
                format!("rel_tol = {rel_tol} not in (0, 1)"),
            ));
        }
        if max_terms < Self::MIN_TERMS {
            return Err(Error::domain(
                "SeriesControl",
                format!("max_terms = {max_terms} below {}", Self::MIN_TERMS),
            ));
        }
        Ok(SeriesControl { rel_tol, max_terms })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Sums `term(1) + term(2) + ...` under this control.
    fn sum<F>(&self, func: &'static str, mut term: F) -> Result<f64>
    where
        F: FnMut(u64) -> f64,
    {
        let mut sum = 0.0;
        let mut quiet = 0;
        for n in 1..=self.max_terms as u64 {
            let t = term(n);
            sum += t;
            if t.abs() <= self.rel_tol * sum.abs() {
                quiet += 1;
                if quiet == 2 {
                    return Ok(sum);
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::Convergence {
            func,
            iterations: self.max_terms,
        })
    }
}

/// `1 / (e^{z} - 1)` for `z > 0`, without overflow for large `z`.
#[inline]
fn bose_factor(z: f64) -> f64 {
    let q = (-z).exp();
    q / -(-z).exp_m1()
}

/// Riemann ζ(r) for integer r ≥ 2.
///
/// Direct sum of the first terms plus an Euler–Maclaurin tail.
pub fn zeta(r: i32) -> Result<f64> {
    if r < 2 {
        return Err(Error::domain("zeta", format!("order {r} < 2")));
    }
    if r == 3 {
        return Ok(ZETA3);
    }
    Ok(zeta_euler_maclaurin(r))
}

// B_2, B_4, ..., B_14
const BERNOULLI_EVEN: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

fn zeta_euler_maclaurin(r: i32) -> f64 {
    const N: i32 = 20;
    let s = f64::from(r);
    let nf = f64::from(N);
    // Sum from the small end so the leading 1 is added last.
    let head: f64 = (1..N).rev().map(|n| f64::from(n).powi(-r)).sum();
    let mut tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powi(-r);
    // rising = s (s+1) ... (s+2j-2), fact = (2j)!
    let mut rising = s;
    let mut fact = 2.0;
    let mut npow = nf.powf(-s - 1.0);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        if j > 0 {
            let m = 2.0 * j as f64;
            rising *= (s + m - 1.0) * (s + m);
            fact *= (m + 1.0) * (m + 2.0);
            npow /= nf * nf;
        }
        tail += b / fact * rising * npow;
    }
    head + tail
}

/// ζ(m) for any integer m ≠ 1, including zero and negative integers.
fn zeta_any(m: i32) -> f64 {
    match m {
        0 => -0.5,
        m if m >= 2 => {
            if m == 3 {
                ZETA3
            } else {
                zeta_euler_maclaurin(m)
            }
        }
        m => {
            let k = -m;
            if k % 2 == 0 {
                0.0
            } else {
                // ζ(-k) = (-1)^{(k+1)/2} 2 k! ζ(k+1) / (2π)^{k+1}
                let sign = if ((k + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                let mut factor = 2.0 * zeta_euler_maclaurin(k + 1) / (2.0 * PI);
                for j in 1..=k {
                    factor *= f64::from(j) / (2.0 * PI);
                }
                sign * factor
            }
        }
    }
}

/// Polylogarithm `Σ_{n≥1} yⁿ / nʳ` for integer order `r` and `0 ≤ y ≤ 1`.
pub fn polylog(r: i32, y: f64) -> Result<f64> {
    polylog_with(r, y, &SeriesControl::default())
}

/// Above this argument the expansion in `ln y` replaces the power series.
const POLYLOG_LOG_SWITCH: f64 = 0.75;

pub fn polylog_with(r: i32, y: f64, ctl: &SeriesControl) -> Result<f64> {
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::domain("polylog", format!("argument y = {y} outside [0, 1]")));
    }
    if y == 1.0 {
        return if r >= 2 {
            zeta(r)
        } else {
            Err(Error::domain("polylog", format!("order {r} diverges at y = 1")))
        };
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    match r {
        1 => Ok(-(-y).ln_1p()),
        0 => Ok(y / (1.0 - y)),
        r if r >= 2 && y > POLYLOG_LOG_SWITCH => Ok(polylog_near_one(r, y.ln())),
        r => {
            let mut power = 1.0;
            ctl.sum("polylog", |n| {
                power *= y;
                power / (n as f64).powi(r)
            })
        }
    }
}

/// Expansion of ℒ_r(e^μ) about μ = 0, valid for |μ| < 2π and r ≥ 2:
///
/// ```text
/// ℒ_r(e^μ) = μ^{r-1}/(r-1)! (H_{r-1} - ln(-μ)) + Σ_{k≠r-1} ζ(r-k) μ^k / k!
/// ```
fn polylog_near_one(r: i32, mu: f64) -> f64 {
    let harmonic: f64 = (1..r).map(|j| 1.0 / f64::from(j)).sum();
    let mut sum = 0.0;
    let mut power = 1.0; // μ^k / k!
    let mut k = 0;
    loop {
        let term = if k == r - 1 {
            power * (harmonic - (-mu).ln())
        } else {
            power * zeta_any(r - k)
        };
        sum += term;
        // Odd negative zeta values vanish, so only stop on a nonzero small term
        // well past the singular index.
        if k > r && term != 0.0 && term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        if k > r + 80 {
            break;
        }
        k += 1;
        power *= mu / f64::from(k);
    }
    sum
}

/// Bose sum `Σ_{n≥1} n^{-r} / (e^{nx} - 1)`, the exponentially convergent side
/// of the identity `Σ_n ℒ_r(e^{-nx}) = Σ_n n^{-r} / (e^{nx} - 1)`.
pub fn bose_sum(r: i32, x: f64) -> Result<f64> {
    bose_sum_with(r, x, &SeriesControl::default())
}

pub fn bose_sum_with(r: i32, x: f64, ctl: &SeriesControl) -> Result<f64> {
    check_positive("bose_sum", x)?;
    ctl.sum("bose_sum", |n| {
        let nf = n as f64;
        nf.powi(-r) * bose_factor(nf * x)
    })
}

/// The same Bose sum evaluated as `Σ_n ℒ_r(e^{-nx})`.
///
/// Slower than [`bose_sum`]; kept as an independent route for cross-checks.
pub fn bose_sum_via_polylog(r: i32, x: f64) -> Result<f64> {
    check_positive("bose_sum_via_polylog", x)?;
    if r <= 0 && x < 1e-3 {
        return Err(Error::domain(
            "bose_sum_via_polylog",
            format!("x = {x} too small for order {r}"),
        ));
    }
    let ctl = SeriesControl::default();
    let mut err = None;
    let sum = ctl.sum("bose_sum_via_polylog", |n| {
        match polylog_with(r, (-(n as f64) * x).exp(), &ctl) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(sum),
    }
}

/// `j(x) = Σ 1 / (n³ (e^{nx} - 1))`.
pub fn jfun(x: f64) -> Result<f64> {
    bose_sum(3, x)
}

/// `k(x) = (1 - x d/dx) j(x) = Σ n⁻³ [(1 + nx)/N + nx/N²]` with `N = e^{nx} - 1`.
///
/// Positive for all `x > 0`, exponentially small for large `x`.
pub fn kfun(x: f64) -> Result<f64> {
    kfun_with(x, &SeriesControl::default())
}

pub fn kfun_with(x: f64, ctl: &SeriesControl) -> Result<f64> {
    check_positive("kfun", x)?;
    ctl.sum("kfun", |n| {
        let nf = n as f64;
        let nx = nf * x;
        let b = bose_factor(nx);
        ((1.0 + nx) * b + nx * b * b) / (nf * nf * nf)
    })
}

/// `h(x) = x k'(x) = -x² Σ n⁻¹ [1/N + 3/N² + 2/N³]`.
///
/// Negative for all `x > 0`, exponentially small for large `x`.
pub fn hfun(x: f64) -> Result<f64> {
    hfun_with(x, &SeriesControl::default())
}

pub fn hfun_with(x: f64, ctl: &SeriesControl) -> Result<f64> {
    check_positive("hfun", x)?;
    let sum = ctl.sum("hfun", |n| {
        let nf = n as f64;
        let b = bose_factor(nf * x);
        b * (1.0 + b * (3.0 + 2.0 * b)) / nf
    })?;
    Ok(-x * x * sum)
}

/// Antiderivative of `z^s ℒ_r(e^{-z})`:
///
/// ```text
/// -s! Σ_{n=0}^{s} z^{s-n}/(s-n)! ℒ_{r+n+1}(e^{-z})
/// ```
pub fn polylog_moment_antiderivative(s: u32, r: i32, z: f64) -> Result<f64> {
    check_positive("polylog_moment_antiderivative", z)?;
    let y = (-z).exp();
    let mut sum = 0.0;
    // z^{s-n}/(s-n)! built downward from n = s.
    let mut coeff = 1.0;
    for n in (0..=s).rev() {
        let order = r + n as i32 + 1;
        sum += coeff * polylog(order, y)?;
        let m = f64::from(s - n + 1);
        coeff *= z / m;
    }
    Ok(-factorial(s) * sum)
}

/// `∫_lo^hi z^s ℒ_r(e^{-z}) dz` from the closed-form antiderivative.
///
/// `lo = 0` and `hi = ∞` are taken as limits; the lower limit needs
/// `r + s + 1 ≥ 2` for the integral to converge.
pub fn polylog_moment_integral(s: u32, r: i32, lo: f64, hi: f64) -> Result<f64> {
    if !(lo >= 0.0 && hi >= lo) || lo.is_nan() || hi.is_nan() {
        return Err(Error::domain(
            "polylog_moment_integral",
            format!("invalid limits [{lo}, {hi}]"),
        ));
    }
    let upper = if hi.is_infinite() {
        0.0
    } else {
        polylog_moment_antiderivative(s, r, hi)?
    };
    let lower = if lo == 0.0 {
        let order = r + s as i32 + 1;
        if order < 2 {
            return Err(Error::domain(
                "polylog_moment_integral",
                format!("integral diverges at z = 0 for s = {s}, r = {r}"),
            ));
        }
        -factorial(s) * zeta(order)?
    } else {
        polylog_moment_antiderivative(s, r, lo)?
    };
    Ok(upper - lower)
}

fn factorial(s: u32) -> f64 {
    (1..=s).map(f64::from).product()
}

fn check_positive(func: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, format!("argument {x} must be finite and > 0")))
    }
}
