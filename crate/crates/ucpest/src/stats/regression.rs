//! Pearson correlation and simple (one-predictor) least squares.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use super::describe::mean;
use super::TestResult;
use crate::error::{Error, Result};

/// A fitted `y = a + b*x` line with its goodness of fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegressionFit {
    pub intercept: f64,
    pub slope: f64,
    pub r_squared: f64,
    pub adj_r_squared: f64,
    pub n: usize,
}

fn check_paired(what: &'static str, xs: &[f64], ys: &[f64], needed: usize) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::Misaligned(format!(
            "{what}: series lengths {} and {} differ",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < needed {
        return Err(Error::InsufficientData {
            what,
            needed,
            got: xs.len(),
        });
    }
    Ok(())
}

fn is_constant(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[0] == w[1])
}

/// Two-sided p-value for a correlation coefficient via the t distribution
/// with n-2 degrees of freedom.
fn pearson_p_value(r: f64, n: usize) -> f64 {
    let df = (n - 2) as f64;
    let denom = 1.0 - r * r;
    if denom <= 0.0 {
        return 0.0; // |r| = 1: the t statistic diverges
    }
    let t = r.abs() * (df / denom).sqrt();
    let dist = StudentsT::new(0.0, 1.0, df).expect("df >= 1");
    2.0 * (1.0 - dist.cdf(t))
}

/// Pearson product-moment correlation with a two-sided significance test.
///
/// Both series must be non-constant; the statistic field of the result is `r`.
pub fn pearson(xs: &[f64], ys: &[f64], alpha: f64) -> Result<TestResult> {
    check_paired("pearson", xs, ys, 3)?;
    if is_constant(xs) {
        return Err(Error::UndefinedCorrelation("x series"));
    }
    if is_constant(ys) {
        return Err(Error::UndefinedCorrelation("y series"));
    }

    let mx = mean(xs);
    let my = mean(ys);
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx).powi(2);
        syy += (y - my).powi(2);
    }
    let r = (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0);
    Ok(TestResult::new(r, pearson_p_value(r, xs.len()), alpha))
}

/// Ordinary least squares for `y = a + b*x`.
///
/// `r_squared` is 0 when the response is constant (the fit is then exact but
/// explains no variance), and `adj_r_squared = 1 - (1-R^2)(n-1)/(n-2)`.
pub fn ols_simple(xs: &[f64], ys: &[f64]) -> Result<RegressionFit> {
    check_paired("ols_simple", xs, ys, 3)?;
    if is_constant(xs) {
        return Err(Error::SingularFit);
    }

    let n = xs.len();
    let mx = mean(xs);
    let my = mean(ys);
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx).powi(2);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;

    let sst: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sse: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    let r_squared = if sst > 0.0 { 1.0 - sse / sst } else { 0.0 };
    let nf = n as f64;
    let adj_r_squared = 1.0 - (1.0 - r_squared) * (nf - 1.0) / (nf - 2.0);

    Ok(RegressionFit {
        intercept,
        slope,
        r_squared,
        adj_r_squared,
        n,
    })
}
