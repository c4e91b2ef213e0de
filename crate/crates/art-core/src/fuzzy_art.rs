//! The base unsupervised fuzzy ART module: complement coding, activation
//! scoring, vigilance testing, resonance search, and weight learning.
//!
//! A category is a hyperbox prototype stored in complement-coded form. A
//! presented pattern either resonates with the best-matching category whose
//! match value passes the vigilance threshold (the category then grows to
//! absorb it) or, when no category passes, commits a brand new category.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{ArtError, Result};

/// Slack applied to the vigilance comparison so exact-threshold
/// presentations are not rejected by rounding noise.
pub const VIGILANCE_SLACK: f64 = 1e-12;

/// A complement-coded pattern: the raw features followed by their
/// 1-complements, so the L1 norm is pinned to the raw dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    values: Vec<f64>,
}

impl Pattern {
    /// Complement codes a raw sample. Every component must lie in `[0, 1]`;
    /// the first offender is named in the error.
    pub fn complement_code(raw: &[f64]) -> Result<Self> {
        for (index, &value) in raw.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(ArtError::ComponentOutOfRange { index, value });
            }
        }
        let mut values = Vec::with_capacity(raw.len() * 2);
        values.extend_from_slice(raw);
        values.extend(raw.iter().map(|v| 1.0 - v));
        Ok(Pattern { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The raw feature count `d`; the stored vector has length `2d`.
    pub fn raw_dim(&self) -> usize {
        self.values.len() / 2
    }
}

/// Prototype weights for one committed category.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryWeight {
    w: Vec<f64>,
    sample_count: u64,
}

impl CategoryWeight {
    fn from_pattern(x: &Pattern) -> Self {
        CategoryWeight {
            w: x.values().to_vec(),
            sample_count: 1,
        }
    }

    pub fn components(&self) -> &[f64] {
        &self.w
    }

    /// How many presentations this category has absorbed. Diagnostics only.
    pub fn sample_count(&self) -> u64 {
        self.sample_count
    }
}

/// Fuzzy ART hyper-parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuzzyArtParams {
    /// Vigilance threshold in `[0, 1]`; higher values carve finer categories.
    pub rho: f64,
    /// Choice parameter, strictly positive; breaks the activation tie
    /// between small and large prototypes.
    pub alpha: f64,
    /// Learning rate in `(0, 1]`; 1 is fast learning.
    pub beta: f64,
}

impl FuzzyArtParams {
    pub const DEFAULT_ALPHA: f64 = 1e-3;
    pub const DEFAULT_BETA: f64 = 1.0;

    /// Parameters with the given vigilance and the fast-learning defaults.
    pub fn with_vigilance(rho: f64) -> Self {
        FuzzyArtParams {
            rho,
            alpha: Self::DEFAULT_ALPHA,
            beta: Self::DEFAULT_BETA,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.rho) || self.rho.is_nan() {
            return Err(ArtError::InvalidParameter(format!(
                "vigilance must be in [0, 1], got {}",
                self.rho
            )));
        }
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(ArtError::InvalidParameter(format!(
                "choice parameter must be > 0, got {}",
                self.alpha
            )));
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            return Err(ArtError::InvalidParameter(format!(
                "learning rate must be in (0, 1], got {}",
                self.beta
            )));
        }
        Ok(())
    }
}

/// Outcome of a resonance search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchOutcome {
    /// A committed category passed the vigilance test.
    Resonant { category: usize, match_value: f64 },
    /// Every admissible category failed; the caller commits a new one.
    Exhausted,
}

fn check_lengths(x: &[f64], w: &[f64]) -> Result<()> {
    if x.len() != w.len() {
        return Err(ArtError::DimensionMismatch {
            expected: x.len(),
            actual: w.len(),
        });
    }
    Ok(())
}

fn fuzzy_min_norm(x: &[f64], w: &[f64]) -> f64 {
    x.iter().zip(w.iter()).map(|(a, b)| a.min(*b)).sum()
}

/// Choice activation `T = |x ∧ w|₁ / (α + |w|₁)`.
pub fn activation(x: &Pattern, w: &CategoryWeight, alpha: f64) -> Result<f64> {
    check_lengths(x.values(), w.components())?;
    let numerator = fuzzy_min_norm(x.values(), w.components());
    let w_norm: f64 = w.components().iter().sum();
    Ok(numerator / (alpha + w_norm))
}

/// Match criterion `m = |x ∧ w|₁ / d`, using the complement-coding identity
/// `|x|₁ = d`. Equals 1 exactly when `w` dominates `x` component-wise.
pub fn match_criterion(x: &Pattern, w: &CategoryWeight) -> Result<f64> {
    check_lengths(x.values(), w.components())?;
    Ok(fuzzy_min_norm(x.values(), w.components()) / x.raw_dim() as f64)
}

/// Learning rule `w' = β(x ∧ w) + (1 − β)w`. With β = 1 this is exactly the
/// component-wise minimum, so weights never increase.
pub fn update_weight(x: &Pattern, w: &CategoryWeight, beta: f64) -> Result<CategoryWeight> {
    check_lengths(x.values(), w.components())?;
    let updated = x
        .values()
        .iter()
        .zip(w.components().iter())
        .map(|(xi, wi)| beta * xi.min(*wi) + (1.0 - beta) * *wi)
        .collect();
    Ok(CategoryWeight {
        w: updated,
        sample_count: w.sample_count,
    })
}

/// A growable list of category prototypes plus hyper-parameters.
///
/// Single writer during training; all read-only operations are safe for
/// concurrent readers when no writer is active.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyArtModule {
    params: FuzzyArtParams,
    raw_dim: usize,
    weights: Vec<CategoryWeight>,
}

impl FuzzyArtModule {
    pub fn new(raw_dim: usize, params: FuzzyArtParams) -> Result<Self> {
        params.validate()?;
        if raw_dim == 0 {
            return Err(ArtError::InvalidParameter(
                "raw dimension must be at least 1".into(),
            ));
        }
        Ok(FuzzyArtModule {
            params,
            raw_dim,
            weights: Vec::new(),
        })
    }

    pub fn params(&self) -> &FuzzyArtParams {
        &self.params
    }

    pub fn raw_dim(&self) -> usize {
        self.raw_dim
    }

    pub fn category_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[CategoryWeight] {
        &self.weights
    }

    fn check_pattern(&self, x: &Pattern) -> Result<()> {
        if x.values().len() != self.raw_dim * 2 {
            return Err(ArtError::DimensionMismatch {
                expected: self.raw_dim * 2,
                actual: x.values().len(),
            });
        }
        Ok(())
    }

    /// Visits categories outside `excluded` in strictly decreasing
    /// activation order (ties to the lowest index) and returns the first
    /// whose match value passes the effective vigilance, or `Exhausted`.
    /// Does not mutate the module.
    ///
    /// `vigilance_override` replaces the baseline vigilance for this search
    /// only; match tracking uses it to push past a conflicting category.
    pub fn resonance_search(
        &self,
        x: &Pattern,
        vigilance_override: Option<f64>,
        excluded: &BTreeSet<usize>,
    ) -> Result<SearchOutcome> {
        self.check_pattern(x)?;
        let vigilance = vigilance_override.unwrap_or(self.params.rho);
        let mut ranked: Vec<(usize, f64)> = Vec::with_capacity(self.weights.len());
        for (index, weight) in self.weights.iter().enumerate() {
            if excluded.contains(&index) {
                continue;
            }
            ranked.push((index, activation(x, weight, self.params.alpha)?));
        }
        ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));

        for (category, _) in ranked {
            let match_value = match_criterion(x, &self.weights[category])?;
            if match_value >= vigilance - VIGILANCE_SLACK {
                return Ok(SearchOutcome::Resonant {
                    category,
                    match_value,
                });
            }
        }
        Ok(SearchOutcome::Exhausted)
    }

    /// Appends a category whose prototype is the pattern itself and returns
    /// its index. Indices are stable: categories are never reordered,
    /// reused, or compacted.
    pub fn commit_new_category(&mut self, x: &Pattern) -> Result<usize> {
        self.check_pattern(x)?;
        self.weights.push(CategoryWeight::from_pattern(x));
        Ok(self.weights.len() - 1)
    }

    /// Applies the learning rule to one committed category in place.
    pub fn learn(&mut self, category: usize, x: &Pattern) -> Result<()> {
        self.check_pattern(x)?;
        let updated = update_weight(x, &self.weights[category], self.params.beta)?;
        self.weights[category] = CategoryWeight {
            sample_count: updated.sample_count + 1,
            ..updated
        };
        Ok(())
    }

    /// One unsupervised presentation: resonate-and-learn, or commit.
    pub fn train_step(&mut self, x: &Pattern) -> Result<usize> {
        match self.resonance_search(x, None, &BTreeSet::new())? {
            SearchOutcome::Resonant { category, .. } => {
                self.learn(category, x)?;
                Ok(category)
            }
            SearchOutcome::Exhausted => self.commit_new_category(x),
        }
    }

    /// The committed category with the highest activation, ignoring
    /// vigilance. Deterministic and read-only.
    pub fn classify(&self, x: &Pattern) -> Result<usize> {
        self.check_pattern(x)?;
        if self.weights.is_empty() {
            return Err(ArtError::NotFitted);
        }
        let mut best = 0usize;
        let mut best_score = f64::NEG_INFINITY;
        for (index, weight) in self.weights.iter().enumerate() {
            let score = activation(x, weight, self.params.alpha)?;
            if score > best_score {
                best = index;
                best_score = score;
            }
        }
        Ok(best)
    }

    /// Like [`classify`](Self::classify) but honors the vigilance test:
    /// returns `None` when no category resonates.
    pub fn classify_strict(&self, x: &Pattern) -> Result<Option<usize>> {
        if self.weights.is_empty() {
            return Err(ArtError::NotFitted);
        }
        Ok(
            match self.resonance_search(x, None, &BTreeSet::new())? {
                SearchOutcome::Resonant { category, .. } => Some(category),
                SearchOutcome::Exhausted => None,
            },
        )
    }
}
