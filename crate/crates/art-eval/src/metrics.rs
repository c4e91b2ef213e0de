//! Partition agreement and hierarchy consistency checks.

use std::collections::HashMap;

/// Errors raised while computing evaluation metrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// The two label vectors had different lengths.
    LengthMismatch { left: usize, right: usize },
    /// Fewer than two samples; pair-counting scores are undefined.
    TooFewSamples { len: usize },
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalError::LengthMismatch { left, right } => {
                write!(f, "label length mismatch: left={left}, right={right}")
            }
            EvalError::TooFewSamples { len } => {
                write!(f, "need at least 2 samples, got {len}")
            }
        }
    }
}

impl std::error::Error for EvalError {}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Adjusted Rand index between two labelings of the same samples.
///
/// Computed from the contingency table:
/// `ARI = (Σ C(n_ij,2) − E) / (M − E)` with
/// `E = Σ C(a_i,2) · Σ C(b_j,2) / C(n,2)` and
/// `M = (Σ C(a_i,2) + Σ C(b_j,2)) / 2`.
///
/// Returns 1.0 for identical partitions (label names are irrelevant) and is
/// close to 0 in expectation for independent random partitions. Degenerate
/// pairs where both partitions are all-singletons or single-cluster have a
/// zero denominator and score 1.0, matching the usual convention.
pub fn adjusted_rand(a: &[usize], b: &[usize]) -> Result<f64, EvalError> {
    if a.len() != b.len() {
        return Err(EvalError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(EvalError::TooFewSamples { len: a.len() });
    }

    let n = a.len() as u64;
    let mut table: HashMap<(usize, usize), u64> = HashMap::new();
    let mut row_sums: HashMap<usize, u64> = HashMap::new();
    let mut col_sums: HashMap<usize, u64> = HashMap::new();
    for (&la, &lb) in a.iter().zip(b.iter()) {
        *table.entry((la, lb)).or_insert(0) += 1;
        *row_sums.entry(la).or_insert(0) += 1;
        *col_sums.entry(lb).or_insert(0) += 1;
    }

    let sum_cells: u64 = table.values().map(|&c| pairs(c)).sum();
    let sum_rows: u64 = row_sums.values().map(|&c| pairs(c)).sum();
    let sum_cols: u64 = col_sums.values().map(|&c| pairs(c)).sum();

    let expected = (sum_rows as f64) * (sum_cols as f64) / (pairs(n) as f64);
    let max_index = 0.5 * (sum_rows as f64 + sum_cols as f64);
    let denom = max_index - expected;
    if denom == 0.0 {
        // Both partitions are trivial in the same way (all singletons or one
        // cluster each); they agree perfectly.
        return Ok(1.0);
    }
    Ok((sum_cells as f64 - expected) / denom)
}

/// A self-consistency violation: two rows that share a category at `level`
/// but disagree one level up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub row_a: usize,
    pub row_b: usize,
    /// 1-based level index; the violation is between columns `level` and
    /// `level + 1`.
    pub level: usize,
}

/// Result of [`check_self_consistency`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub pass: bool,
    pub violation: Option<Violation>,
}

/// Checks that a label matrix describes a divisive hierarchy: for every
/// level `k`, rows sharing a category in column `k` must share a category in
/// column `k + 1`. Columns are ordered finest (leaf) first.
///
/// `rows` must be rectangular. Returns the first violating row pair found,
/// scanning levels left to right and rows top to bottom.
pub fn check_self_consistency(rows: &[Vec<usize>]) -> ConsistencyReport {
    let width = rows.first().map_or(0, |r| r.len());
    assert!(
        rows.iter().all(|r| r.len() == width),
        "label matrix must be rectangular"
    );

    for level in 0..width.saturating_sub(1) {
        // child category -> (parent category, first row that set it)
        let mut seen: HashMap<usize, (usize, usize)> = HashMap::new();
        for (i, row) in rows.iter().enumerate() {
            let child = row[level];
            let parent = row[level + 1];
            match seen.get(&child) {
                None => {
                    seen.insert(child, (parent, i));
                }
                Some(&(stored, first_row)) if stored != parent => {
                    return ConsistencyReport {
                        pass: false,
                        violation: Some(Violation {
                            row_a: first_row,
                            row_b: i,
                            level: level + 1,
                        }),
                    };
                }
                Some(_) => {}
            }
        }
    }
    ConsistencyReport {
        pass: true,
        violation: None,
    }
}
