//! Floating-point verification of Stirling's approximation with Binet's
//! error bounds, and the derangement ratio p_n/n!.
//!
//! lambda_n = ln n! - (ln sqrt(2 pi n) + n ln n - n) must lie strictly
//! between 1/(12n+1) and 1/(12n). The bound gap shrinks like 1/(360 n^3)
//! (about 2.2e-14 at n = 5000), far below what plain f64 evaluation of the
//! two ~1e4-sized logarithms can resolve, so the summation carries an error
//! term throughout: per-term logs and the running sum are kept in
//! double-double form and only the final lambda is rounded.

use crate::dd::{self, Dd};
use crate::exactnum::{factorial, Rat};
use crate::mapscount::count_derangements;

/// One verification record for Binet's bounds at a given n.
///
/// `strict_with_margin` reports whether both strict inequalities
/// `lower < lambda_n < upper` hold with margin exceeding the rounding
/// budget [`binet_margin_budget`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetReport {
    pub n: u64,
    pub lambda_n: f64,
    /// 1/(12n+1).
    pub lower: f64,
    /// 1/(12n).
    pub upper: f64,
    pub log_factorial: f64,
    pub strict_with_margin: bool,
}

/// Rounding budget for the Binet margin check: 1000 * n * eps, taken
/// relative to lambda_n itself (the accumulated per-term rounding scales
/// with the summands, so the budget is expressed in units of the result).
pub fn binet_margin_budget(n: u64, lambda_n: f64) -> f64 {
    1e3 * n as f64 * f64::EPSILON * lambda_n
}

fn log_factorial_dd(n: u64) -> Dd {
    let mut sum = Dd::ZERO;
    for k in 2..=n.max(1) {
        sum = sum.add(dd::ln(Dd::from_f64(k as f64)));
    }
    sum
}

fn stirling_dd(n: u64) -> Dd {
    let nf = n as f64;
    // ln sqrt(2 pi n) + n ln n - n
    let half_log_term = dd::ln(Dd::TWO_PI.mul_f64(nf)).mul_f64(0.5);
    half_log_term
        .add(dd::ln(Dd::from_f64(nf)).mul_f64(nf))
        .sub(Dd::from_f64(nf))
}

/// ln n! = sum of ln k for k = 2..=n, accumulated in increasing k with the
/// compensation term carried in double-double form.
pub fn log_factorial(n: u64) -> f64 {
    log_factorial_dd(n).to_f64()
}

/// ln of Stirling's approximation: (1/2) ln(2 pi n) + n ln n - n.
pub fn stirling_approx_log(n: u64) -> f64 {
    stirling_dd(n).to_f64()
}

fn report_from(n: u64, logfact: Dd) -> BinetReport {
    let lambda_dd = logfact.sub(stirling_dd(n));
    let lambda_n = lambda_dd.to_f64();
    let lower = 1.0 / (12.0 * n as f64 + 1.0);
    let upper = 1.0 / (12.0 * n as f64);
    let budget = binet_margin_budget(n, lambda_n);
    let strict_with_margin = lambda_n - lower > budget && upper - lambda_n > budget;
    BinetReport {
        n,
        lambda_n,
        lower,
        upper,
        log_factorial: logfact.to_f64(),
        strict_with_margin,
    }
}

/// Binet verification at a single n (intended range 1..=10^6).
pub fn binet_report(n: u64) -> BinetReport {
    report_from(n, log_factorial_dd(n))
}

/// Binet verification for every n in 1..=n_max, sharing one incremental
/// log-factorial accumulation.
pub fn binet_sweep(n_max: u64) -> Vec<BinetReport> {
    let mut reports = Vec::with_capacity(n_max as usize);
    let mut logfact = Dd::ZERO;
    for n in 1..=n_max {
        if n >= 2 {
            logfact = logfact.add(dd::ln(Dd::from_f64(n as f64)));
        }
        reports.push(report_from(n, logfact));
    }
    reports
}

/// p_n / n! as an exact rational.
pub fn derangement_ratio_exact(n: u64) -> Rat {
    Rat::new(
        count_derangements(n).to_bigint(),
        factorial(n).to_bigint(),
    )
    .unwrap()
}

/// p_n / n! rounded to f64; within 1/(n+1)! of 1/e.
pub fn derangement_ratio(n: u64) -> f64 {
    derangement_ratio_exact(n).to_f64()
}
