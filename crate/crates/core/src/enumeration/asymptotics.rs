//! Leading-order asymptotics of the V-poset counts.
//!
//! With `W = x (2 - x) V` one has `W e^{-W} = R` where
//! `R(x) = x (1 - x) (2 - x) exp(sum_{m >= 2} W(x^m) / m)`, so `W` is the
//! tree function of `R` and becomes singular where `R(rho) = 1/e`. This gives
//! `v_n ~ C n^{-3/2} rho^{-n}` with
//! `C = sqrt(e R'(rho)) / (sqrt(2 pi rho) (2 - rho))`.

use std::f64::consts::{E, PI};

use thiserror::Error;

use super::series::w_series;

/// Smallest truncation order accepted by the solver.
pub const MIN_ORDER: usize = 60;
const BRACKET: (f64, f64) = (0.2, 0.35);
const MIN_TOLERANCE: f64 = 1e-12;
/// Powers `x^m` below this no longer contribute to the inner sums.
const POWER_CUTOFF: f64 = 1e-18;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticError {
    #[error("truncation order {order} is below the minimum {MIN_ORDER}")]
    OrderTooLow { order: usize },
    #[error("tolerance {0} is below the minimum {MIN_TOLERANCE}")]
    ToleranceTooSmall(f64),
    #[error("R(x) - 1/e does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticResult {
    pub rho: f64,
    pub rho_inv: f64,
    /// The prefactor `C`; NaN when only `rho` has been solved for.
    pub constant: f64,
    pub truncation_order: usize,
    /// Width of the final bisection bracket.
    pub bracket_width: f64,
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Truncated `W(x)` from its coefficients.
pub fn w_function(w: &[f64], x: f64) -> f64 {
    horner(w, x)
}

/// Termwise derivative `W'(x)`.
pub fn w_derivative(w: &[f64], x: f64) -> f64 {
    let d: Vec<f64> = w
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, &c)| n as f64 * c)
        .collect();
    horner(&d, x)
}

/// Applies `f(x^m, m)` for `m = 2, 3, ...` until `x^m` is negligible.
fn power_sum(x: f64, f: impl Fn(f64, u32) -> f64) -> f64 {
    let mut total = 0.0;
    let mut m = 2;
    let mut xm = x * x;
    while xm > POWER_CUTOFF {
        total += f(xm, m);
        m += 1;
        xm *= x;
    }
    total
}

/// `R(x) = x (1 - x) (2 - x) exp(sum_{m >= 2} W(x^m) / m)`.
pub fn r_function(w: &[f64], x: f64) -> f64 {
    let tail = power_sum(x, |xm, m| w_function(w, xm) / m as f64);
    x * (1.0 - x) * (2.0 - x) * tail.exp()
}

fn r_derivative(w: &[f64], rho: f64) -> f64 {
    let log_derivative = 1.0 / rho - 1.0 / (1.0 - rho) - 1.0 / (2.0 - rho)
        + power_sum(rho, |xm, _| xm / rho * w_derivative(w, xm));
    r_function(w, rho) * log_derivative
}

fn coefficients(order: usize) -> Vec<f64> {
    w_series(order)
        .expect("the recurrence is integral")
        .to_f64()
}

fn bisect(w: &[f64], order: usize, tol: f64) -> Result<AsymptoticResult, AsymptoticError> {
    let target = 1.0 / E;
    let g = |x: f64| r_function(w, x) - target;
    let (mut lo, mut hi) = BRACKET;
    if g(lo) >= 0.0 || g(hi) <= 0.0 {
        return Err(AsymptoticError::NoSignChange { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let rho = 0.5 * (lo + hi);
    Ok(AsymptoticResult {
        rho,
        rho_inv: 1.0 / rho,
        constant: f64::NAN,
        truncation_order: order,
        bracket_width: hi - lo,
    })
}

/// Solves `R(rho) = 1/e` by bisection on `[0.2, 0.35]` using `W`
/// truncated at `order`.
pub fn solve_rho(order: usize, tol: f64) -> Result<AsymptoticResult, AsymptoticError> {
    if order < MIN_ORDER {
        return Err(AsymptoticError::OrderTooLow { order });
    }
    if tol.is_nan() || tol < MIN_TOLERANCE {
        return Err(AsymptoticError::ToleranceTooSmall(tol));
    }
    bisect(&coefficients(order), order, tol)
}

/// `rho` together with the prefactor `C`.
pub fn asymptotic_constant(order: usize) -> Result<AsymptoticResult, AsymptoticError> {
    let mut result = solve_rho(order, MIN_TOLERANCE)?;
    let w = coefficients(order);
    let rho = result.rho;
    let r_prime = r_derivative(&w, rho);
    result.constant = (E * r_prime).sqrt() / ((2.0 * PI * rho).sqrt() * (2.0 - rho));
    Ok(result)
}

/// `C n^{-3/2} rho^{-n}`. Returns `+inf` when the value overflows.
pub fn asymptotic_estimate(n: u32, a: &AsymptoticResult) -> f64 {
    let n = f64::from(n);
    (a.constant.ln() - 1.5 * n.ln() - n * a.rho.ln()).exp()
}
