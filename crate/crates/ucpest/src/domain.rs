//! Core data model: project records, datasets, and weight profiles.
//!
//! All values here are immutable after construction and safe to share across
//! threads. Productivity is always derived as `effort / ucp`; it is never
//! stored, so a record cannot carry an inconsistent (ucp, effort, productivity)
//! triple.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const TECH_FACTOR_COUNT: usize = 13;
pub const ENV_FACTOR_COUNT: usize = 8;

/// Inclusive rating bounds for technical and environmental factors.
pub const RATING_RANGE: (f64, f64) = (0.0, 5.0);

/// Counts of simple / average / complex items (actors or use cases).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTriple {
    pub simple: u32,
    pub average: u32,
    pub complex: u32,
}

impl CountTriple {
    pub fn new(simple: u32, average: u32, complex: u32) -> Self {
        Self {
            simple,
            average,
            complex,
        }
    }
}

/// One software project: size, effort, factor ratings, and free-form tags.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectRecord {
    pub id: String,
    pub actor_counts: Option<CountTriple>,
    pub usecase_counts: Option<CountTriple>,
    pub tech_factors: Option<[f64; TECH_FACTOR_COUNT]>,
    pub env_factors: [f64; ENV_FACTOR_COUNT],
    /// Size in UCP units; must be positive.
    pub ucp: f64,
    /// Actual effort in person-hours; must be positive.
    pub effort: f64,
    /// Categorical metadata (origin, language, app_type, ...).
    pub tags: BTreeMap<String, String>,
}

impl ProjectRecord {
    /// Person-hours per UCP, derived on demand.
    pub fn productivity(&self) -> f64 {
        self.effort / self.ucp
    }
}

/// A single invariant violation found by [`validate_record`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Field name, with 1-based index for factor vectors (e.g. `env_factors[4]`).
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn check_rating(violations: &mut Vec<Violation>, field: &str, index: usize, value: f64) {
    let (lo, hi) = RATING_RANGE;
    if !value.is_finite() || value < lo || value > hi {
        violations.push(Violation {
            field: format!("{field}[{index}]"),
            message: format!("rating {value} out of [{lo},{hi}]"),
        });
    }
}

/// Checks every record invariant and returns the violations in a fixed order.
///
/// Violations are data, not failures: an empty list means the record is valid.
pub fn validate_record(record: &ProjectRecord) -> Vec<Violation> {
    let mut violations = Vec::new();

    if !(record.effort.is_finite() && record.effort > 0.0) {
        violations.push(Violation {
            field: "effort".into(),
            message: format!("must be finite and > 0, got {}", record.effort),
        });
    }
    if !(record.ucp.is_finite() && record.ucp > 0.0) {
        violations.push(Violation {
            field: "ucp".into(),
            message: format!("must be finite and > 0, got {}", record.ucp),
        });
    }
    if violations.is_empty() {
        let productivity = record.productivity();
        if !(productivity.is_finite() && productivity > 0.0) {
            violations.push(Violation {
                field: "productivity".into(),
                message: format!("effort/ucp = {productivity} is not finite and positive"),
            });
        }
    }
    if let Some(tech) = &record.tech_factors {
        for (i, &value) in tech.iter().enumerate() {
            check_rating(&mut violations, "tech_factors", i + 1, value);
        }
    }
    for (i, &value) in record.env_factors.iter().enumerate() {
        check_rating(&mut violations, "env_factors", i + 1, value);
    }

    violations
}

/// Actor, use-case, technical, and environmental weights for Eqs. of the
/// UCP method and for the environmental-factor aggregate.
///
/// Defaults are the standard Karner weights (technical weights sum to 14,
/// environmental weights to 4.5). All of them can be overridden, so
/// alternative calibrations remain expressible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub actor_weights: [f64; 3],
    pub usecase_weights: [f64; 3],
    pub tech_weights: [f64; TECH_FACTOR_COUNT],
    pub env_weights: [f64; ENV_FACTOR_COUNT],
}

impl Default for WeightProfile {
    fn default() -> Self {
        Self {
            actor_weights: [1.0, 2.0, 3.0],
            usecase_weights: [5.0, 10.0, 15.0],
            tech_weights: [
                2.0, 1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 2.0, 1.0, 1.0, 1.0, 1.0, 1.0,
            ],
            env_weights: [1.5, 0.5, 1.0, 0.5, 1.0, 2.0, -1.0, -1.0],
        }
    }
}

/// Converts a runtime-length slice into a fixed factor array, reporting the
/// arity mismatch that the typed representation otherwise rules out.
pub fn factors_from_slice<const N: usize>(what: &'static str, values: &[f64]) -> Result<[f64; N]> {
    <[f64; N]>::try_from(values).map_err(|_| Error::Arity {
        what,
        expected: N,
        got: values.len(),
    })
}

/// An ordered collection of validated project records.
///
/// Order is significant: nearest-neighbor ties and leave-one-out folds are
/// resolved by dataset position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    name: String,
    records: Vec<ProjectRecord>,
}

impl Dataset {
    /// Builds a dataset, enforcing unique ids, at least one record, and
    /// per-record invariants.
    pub fn new(name: impl Into<String>, records: Vec<ProjectRecord>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::InvalidDataset("no records".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for record in &records {
            if !seen.insert(record.id.clone()) {
                return Err(Error::InvalidDataset(format!(
                    "duplicate record id '{}'",
                    record.id
                )));
            }
            let violations = validate_record(record);
            if !violations.is_empty() {
                let reasons = violations
                    .iter()
                    .map(Violation::to_string)
                    .collect::<Vec<_>>()
                    .join("; ");
                return Err(Error::InvalidRecord {
                    id: record.id.clone(),
                    reasons,
                });
            }
        }
        Ok(Self {
            name: name.into(),
            records,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn records(&self) -> &[ProjectRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Efforts in record order.
    pub fn efforts(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.effort).collect()
    }

    /// UCP sizes in record order.
    pub fn ucps(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.ucp).collect()
    }

    /// Derived productivities in record order.
    pub fn productivities(&self) -> Vec<f64> {
        self.records.iter().map(ProjectRecord::productivity).collect()
    }

    /// A copy of the dataset without the record at `index` (leave-one-out fold).
    pub fn without(&self, index: usize) -> Result<Self> {
        if self.records.len() < 2 {
            return Err(Error::InvalidDataset(
                "cannot remove a record from a single-record dataset".into(),
            ));
        }
        let mut records = self.records.clone();
        records.remove(index);
        Ok(Self {
            name: self.name.clone(),
            records,
        })
    }
}
