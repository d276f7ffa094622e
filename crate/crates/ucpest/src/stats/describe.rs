//! Sample moments in the convention of the usual stats-package summary:
//! sample standard deviation, adjusted Fisher-Pearson skewness, and excess
//! kurtosis (zero for a normal distribution).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (n-1 denominator).
    pub stdev: f64,
    pub min: f64,
    pub median: f64,
    pub max: f64,
    /// Adjusted Fisher-Pearson coefficient; defined for n >= 3 and
    /// non-degenerate spread.
    pub skewness: Option<f64>,
    /// Excess kurtosis with small-sample adjustment; defined for n >= 4 and
    /// non-degenerate spread.
    pub kurtosis: Option<f64>,
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation with the n-1 denominator.
pub(crate) fn sample_stdev(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m).powi(2)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

pub(crate) fn median_of_sorted(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Computes all summary statistics for a sample of at least two observations.
pub fn describe(xs: &[f64]) -> Result<DescriptiveStats> {
    let n = xs.len();
    if n < 2 {
        return Err(Error::InsufficientData {
            what: "describe",
            needed: 2,
            got: n,
        });
    }

    let mut sorted = xs.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let mean = mean(xs);
    let stdev = sample_stdev(xs);

    let nf = n as f64;
    let (skewness, kurtosis) = if stdev > 0.0 {
        let z3: f64 = xs.iter().map(|x| ((x - mean) / stdev).powi(3)).sum();
        let z4: f64 = xs.iter().map(|x| ((x - mean) / stdev).powi(4)).sum();
        let skew = (n >= 3).then(|| nf / ((nf - 1.0) * (nf - 2.0)) * z3);
        let kurt = (n >= 4).then(|| {
            nf * (nf + 1.0) / ((nf - 1.0) * (nf - 2.0) * (nf - 3.0)) * z4
                - 3.0 * (nf - 1.0).powi(2) / ((nf - 2.0) * (nf - 3.0))
        });
        (skew, kurt)
    } else {
        (None, None)
    };

    Ok(DescriptiveStats {
        n,
        mean,
        stdev,
        min: sorted[0],
        median: median_of_sorted(&sorted),
        max: sorted[n - 1],
        skewness,
        kurtosis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_sample() {
        let s = describe(&[1.0, 2.0, 3.0]).unwrap();
        assert_relative_eq!(s.mean, 2.0);
        assert_relative_eq!(s.median, 2.0);
        assert_relative_eq!(s.stdev, 1.0);
        assert_eq!(s.min, 1.0);
        assert_eq!(s.max, 3.0);
        assert_relative_eq!(s.skewness.unwrap(), 0.0);
        assert!(s.kurtosis.is_none()); // needs n >= 4
    }

    #[test]
    fn symmetric_data_has_zero_skewness() {
        let s = describe(&[1.0, 2.0, 3.0, 4.0, 5.0, 4.0, 3.0, 2.0, 1.0]).unwrap();
        assert!(s.skewness.unwrap().abs() < 1e-12);
    }

    #[test]
    fn even_length_median_averages_middle_pair() {
        let s = describe(&[4.0, 1.0, 3.0, 2.0]).unwrap();
        assert_relative_eq!(s.median, 2.5);
    }

    #[test]
    fn normal_like_sample_has_near_zero_excess_kurtosis() {
        // symmetric triangular-ish sample: excess kurtosis should be negative
        // and well away from +3 (the non-excess convention would be ~3 here)
        let xs: Vec<f64> = (-10..=10).map(|i| i as f64).collect();
        let s = describe(&xs).unwrap();
        assert!(s.kurtosis.unwrap() < 0.0);
        assert!(s.kurtosis.unwrap() > -2.0);
    }

    #[test]
    fn constant_sample_has_no_shape_stats() {
        let s = describe(&[5.0, 5.0, 5.0, 5.0]).unwrap();
        assert_eq!(s.stdev, 0.0);
        assert!(s.skewness.is_none());
        assert!(s.kurtosis.is_none());
    }

    #[test]
    fn rejects_single_observation() {
        assert!(matches!(
            describe(&[1.0]),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn permutation_invariant() {
        let a = describe(&[3.0, 1.0, 4.0, 1.5, 9.0, 2.6]).unwrap();
        let b = describe(&[9.0, 1.5, 2.6, 3.0, 4.0, 1.0]).unwrap();
        assert_eq!(a, b);
    }
}
