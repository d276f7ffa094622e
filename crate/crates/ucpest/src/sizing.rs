//! UCP sizing: weighted actor/use-case counts, adjustment factors, and the
//! environmental-factor aggregate used by the productivity models.

use serde::{Deserialize, Serialize};

use crate::domain::{CountTriple, WeightProfile, ENV_FACTOR_COUNT, TECH_FACTOR_COUNT};
use crate::error::{Error, Result};

/// Use-case complexity class by transaction count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UseCaseClass {
    Simple,
    Average,
    Complex,
}

/// The four intermediate size metrics together with the final UCP value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SizeBreakdown {
    pub uaw: f64,
    pub uuc: f64,
    pub tcf: f64,
    pub ef: f64,
    pub ucp: f64,
}

/// Unadjusted actor weight: weighted count of simple/average/complex actors.
pub fn uaw(actor_counts: CountTriple, profile: &WeightProfile) -> f64 {
    let [ws, wa, wc] = profile.actor_weights;
    ws * f64::from(actor_counts.simple)
        + wa * f64::from(actor_counts.average)
        + wc * f64::from(actor_counts.complex)
}

/// Unadjusted use-case weight: weighted count of simple/average/complex use cases.
pub fn uuc(usecase_counts: CountTriple, profile: &WeightProfile) -> f64 {
    let [ws, wa, wc] = profile.usecase_weights;
    ws * f64::from(usecase_counts.simple)
        + wa * f64::from(usecase_counts.average)
        + wc * f64::from(usecase_counts.complex)
}

/// Classifies a use case by its transaction count: three or fewer transactions
/// are simple, four to seven average, more than seven complex.
pub fn classify_use_case(transactions: u32) -> UseCaseClass {
    match transactions {
        0..=3 => UseCaseClass::Simple,
        4..=7 => UseCaseClass::Average,
        _ => UseCaseClass::Complex,
    }
}

/// Technical complexity factor: `0.6 + 0.01 * sum(f_i * fw_i)`.
pub fn tcf(tech_factors: &[f64; TECH_FACTOR_COUNT], profile: &WeightProfile) -> f64 {
    let sum: f64 = tech_factors
        .iter()
        .zip(&profile.tech_weights)
        .map(|(f, w)| f * w)
        .sum();
    0.6 + 0.01 * sum
}

/// Environmental factor: `1.4 - 0.03 * sum(env_i * ew_i)`.
pub fn ef(env_factors: &[f64; ENV_FACTOR_COUNT], profile: &WeightProfile) -> f64 {
    1.4 - 0.03 * efactor(env_factors, profile)
}

/// The raw weighted sum `sum(env_i * ew_i)`.
///
/// The same aggregate serves as the fuzzy-rule input of the log-linear model
/// and as the predictor of the productivity regression.
pub fn efactor(env_factors: &[f64; ENV_FACTOR_COUNT], profile: &WeightProfile) -> f64 {
    env_factors
        .iter()
        .zip(&profile.env_weights)
        .map(|(e, w)| e * w)
        .sum()
}

/// Combines the four size metrics into the final UCP value.
///
/// Fails when the unadjusted size or either adjustment factor is non-positive,
/// since every effort model downstream requires `ucp > 0`.
pub fn ucp_size(uaw: f64, uuc: f64, tcf: f64, ef: f64) -> Result<SizeBreakdown> {
    if !(uaw >= 0.0 && uuc >= 0.0 && uaw + uuc > 0.0) {
        return Err(Error::Domain(format!(
            "unadjusted size must be positive, got UAW {uaw} + UUC {uuc}"
        )));
    }
    if !(tcf > 0.0 && ef > 0.0) {
        return Err(Error::Domain(format!(
            "adjustment factors must be positive, got TCF {tcf}, EF {ef}"
        )));
    }
    Ok(SizeBreakdown {
        uaw,
        uuc,
        tcf,
        ef,
        ucp: (uaw + uuc) * tcf * ef,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn profile() -> WeightProfile {
        WeightProfile::default()
    }

    #[test]
    fn uaw_default_weights() {
        assert_eq!(uaw(CountTriple::new(1, 1, 1), &profile()), 6.0);
        assert_eq!(uaw(CountTriple::new(0, 0, 0), &profile()), 0.0);
        assert_eq!(uaw(CountTriple::new(3, 2, 1), &profile()), 10.0);
    }

    #[test]
    fn uuc_default_weights() {
        assert_eq!(uuc(CountTriple::new(2, 1, 0), &profile()), 20.0);
        assert_eq!(uuc(CountTriple::new(0, 0, 0), &profile()), 0.0);
        assert_eq!(uuc(CountTriple::new(1, 1, 1), &profile()), 30.0);
    }

    #[test]
    fn transaction_thresholds() {
        assert_eq!(classify_use_case(0), UseCaseClass::Simple);
        assert_eq!(classify_use_case(3), UseCaseClass::Simple);
        assert_eq!(classify_use_case(4), UseCaseClass::Average);
        assert_eq!(classify_use_case(7), UseCaseClass::Average);
        assert_eq!(classify_use_case(8), UseCaseClass::Complex);
    }

    #[test]
    fn tcf_bounds_with_default_weights() {
        assert_relative_eq!(tcf(&[0.0; 13], &profile()), 0.6);
        // default tech weights sum to 14, so all-fives gives 0.6 + 0.01*70
        assert_relative_eq!(tcf(&[5.0; 13], &profile()), 1.3);
    }

    #[test]
    fn tcf_neutral_point() {
        // a weighted sum of 40 lands exactly on 1.0
        let mut ratings = [0.0; 13];
        ratings[0] = 5.0; // weight 2 -> 10
        ratings[7] = 5.0; // weight 2 -> 10
        ratings[1] = 5.0; // weight 1 -> 5
        ratings[2] = 5.0;
        ratings[3] = 5.0;
        ratings[4] = 5.0;
        assert_relative_eq!(tcf(&ratings, &profile()), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn ef_bounds_with_default_weights() {
        assert_relative_eq!(ef(&[0.0; 8], &profile()), 1.4);
        // default env weights sum to 4.5, so all-fives gives 1.4 - 0.03*22.5
        assert_relative_eq!(ef(&[5.0; 8], &profile()), 0.725);
    }

    #[test]
    fn ef_neutral_point() {
        // weighted sum 40/3 gives exactly 1.0
        let target = 40.0 / 3.0;
        let ratings = [target / 4.5; 8];
        assert_relative_eq!(ef(&ratings, &profile()), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn efactor_default_weights() {
        assert_eq!(efactor(&[0.0; 8], &profile()), 0.0);
        assert_relative_eq!(efactor(&[5.0; 8], &profile()), 22.5);
        assert_relative_eq!(efactor(&[1.0; 8], &profile()), 4.5);
    }

    #[test]
    fn ucp_size_combines_factors() {
        let s = ucp_size(6.0, 20.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(s.ucp, 26.0);
        let s = ucp_size(6.0, 20.0, 0.6, 1.4).unwrap();
        assert_relative_eq!(s.ucp, 21.84);
    }

    #[test]
    fn ucp_size_rejects_empty_system() {
        assert!(matches!(
            ucp_size(0.0, 0.0, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ucp_size_rejects_non_positive_factors() {
        assert!(ucp_size(6.0, 20.0, 0.0, 1.4).is_err());
        assert!(ucp_size(6.0, 20.0, 0.6, -1.0).is_err());
    }
}
