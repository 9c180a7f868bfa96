//! Independent reference computations used by the integration tests.
//!
//! Nothing here calls into the library's series machinery.

#![allow(dead_code)]

/// Central difference with relative step `rel`.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, rel: f64) -> f64 {
    let h = rel * x.abs().max(1e-3);
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Fixed-length partial sum of `yⁿ/nʳ`.
pub fn polylog_direct(r: i32, y: f64, terms: u32) -> f64 {
    (1..=terms).map(|n| y.powi(n as i32) / f64::from(n).powi(r)).sum()
}

/// Bound on the tail of `Σ yⁿ/nʳ` after `terms` terms for `r ≥ 0`.
pub fn polylog_tail_bound(y: f64, terms: u32) -> f64 {
    y.powi(terms as i32 + 1) / (1.0 - y)
}

/// Fixed-length partial sum of `n^{-r}/(e^{nx} − 1)`.
pub fn bose_direct(r: i32, x: f64, terms: u32) -> f64 {
    (1..=terms)
        .map(|n| {
            let n = f64::from(n);
            n.powi(-r) / ((n * x).exp() - 1.0)
        })
        .sum()
}

/// Fixed-length partial sum of `Σ n⁻³ [(1 + nx)/N + nx/N²]`.
pub fn k_direct(x: f64, terms: u32) -> f64 {
    (1..=terms)
        .map(|n| {
            let n = f64::from(n);
            let big_n = (n * x).exp() - 1.0;
            ((1.0 + n * x) / big_n + n * x / (big_n * big_n)) / n.powi(3)
        })
        .sum()
}

/// Fixed-length partial sum of `−x² Σ n⁻¹ [1/N + 3/N² + 2/N³]`.
pub fn h_direct(x: f64, terms: u32) -> f64 {
    -x * x
        * (1..=terms)
            .map(|n| {
                let n = f64::from(n);
                let big_n = (n * x).exp() - 1.0;
                (1.0 / big_n + 3.0 / big_n.powi(2) + 2.0 / big_n.powi(3)) / n
            })
            .sum::<f64>()
}

/// Adaptive Simpson quadrature on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// `n` points spaced logarithmically on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (l0, l1) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}
