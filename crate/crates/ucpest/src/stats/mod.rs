//! Statistical primitives: descriptive statistics, Pearson correlation,
//! simple least-squares regression, a Monte Carlo normality test, the
//! Mann-Whitney U test, and the Grubbs / Dixon outlier tests.
//!
//! Everything here is pure and deterministic; the normality test's Monte
//! Carlo step runs from a fixed internal seed.

mod describe;
mod mann_whitney;
mod normality;
mod outliers;
mod regression;

pub use describe::{describe, DescriptiveStats};
pub use mann_whitney::mann_whitney;
pub use normality::ks_normality;
pub use outliers::{dixon_q, grubbs};
pub use regression::{ols_simple, pearson, RegressionFit};

use serde::{Deserialize, Serialize};

/// Outcome of a hypothesis test at a given significance level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub statistic: f64,
    pub p_value: f64,
    pub alpha: f64,
    /// True exactly when `p_value < alpha`.
    pub reject: bool,
}

impl TestResult {
    pub(crate) fn new(statistic: f64, p_value: f64, alpha: f64) -> Self {
        Self {
            statistic,
            p_value,
            alpha,
            reject: p_value < alpha,
        }
    }
}
