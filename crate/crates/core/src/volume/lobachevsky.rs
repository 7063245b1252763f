//! The Lobachevsky function `L(x) = -int_0^x log|2 sin t| dt`.
//!
//! The argument is reduced into `[-pi/2, pi/2]` using oddness and
//! pi-periodicity, then evaluated from the series
//!
//! ```text
//! L(x) = x (1 - log|2x|) + x * sum_{k >= 1} zeta(2k) / (k (2k + 1)) * (x / pi)^(2k)
//! ```
//!
//! whose terms shrink at least like `4^-k` on the reduced range.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 60;

/// `zeta(2k) / (k (2k + 1) pi^(2k))` for `k = 1..=MAX_TERMS`.
fn coefficients() -> &'static [f64; MAX_TERMS] {
    static COEFFS: OnceLock<[f64; MAX_TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut c = [0.0; MAX_TERMS];
        for (i, slot) in c.iter_mut().enumerate() {
            let k = i + 1;
            let zeta_over_pi = match k {
                1 => 1.0 / 6.0,
                2 => 1.0 / 90.0,
                _ => {
                    // zeta(2k) by direct summation; the tail past 1000 is below 1e-16
                    let s: f64 = (1..=1000u32)
                        .rev()
                        .map(|n| (n as f64).powi(-2 * k as i32))
                        .sum();
                    s / PI.powi(2 * k as i32)
                }
            };
            *slot = zeta_over_pi / (k as f64 * (2 * k + 1) as f64);
        }
        c
    })
}

/// Evaluator with a configurable absolute accuracy target.
#[derive(Clone, Copy, Debug)]
pub struct LobachevskyEvaluator {
    tolerance: f64,
}

impl Default for LobachevskyEvaluator {
    fn default() -> Self {
        LobachevskyEvaluator { tolerance: 1e-13 }
    }
}

impl LobachevskyEvaluator {
    pub fn with_tolerance(tolerance: f64) -> Self {
        LobachevskyEvaluator {
            tolerance: tolerance.max(f64::EPSILON),
        }
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        if !theta.is_finite() {
            return Err(Error::Domain(format!("Lobachevsky function of {theta}")));
        }
        Ok(series(theta, self.tolerance * 1e-2))
    }
}

/// `L(theta)` at the default accuracy.
pub fn lobachevsky(theta: f64) -> Result<f64> {
    LobachevskyEvaluator::default().eval(theta)
}

/// Unchecked evaluation for finite arguments, used in the optimizer.
pub(crate) fn lob(theta: f64) -> f64 {
    series(theta, 1e-17)
}

/// Reduces `theta` into `[-pi/2, pi/2]`.
pub(crate) fn reduce(theta: f64) -> f64 {
    theta - PI * (theta / PI).round()
}

fn series(theta: f64, term_tol: f64) -> f64 {
    let x = reduce(theta);
    if x == 0.0 {
        return 0.0;
    }
    let r2 = x * x;
    let mut power = 1.0;
    let mut sum = 0.0;
    for &c in coefficients() {
        power *= r2;
        let term = c * power;
        sum += term;
        if term.abs() * x.abs() < term_tol {
            break;
        }
    }
    x * (1.0 - (2.0 * x.abs()).ln()) + x * sum
}
