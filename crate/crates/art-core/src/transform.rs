//! Per-module input transforms.
//!
//! Every module in a deep model sees its own view of the original sample:
//! the sample itself, a column projection, a precomputed per-sample row
//! (the lookup case, for transforms that exist only as data), or an opaque
//! deterministic function.

use std::fmt;
use std::sync::Arc;

use crate::error::{ArtError, Result};

/// A deterministic sample-to-sample function usable as a module transform.
pub type TransformFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// One module's input transform. Transforms always act on the original
/// sample; they are never composed across modules.
#[derive(Clone)]
pub enum Transform {
    /// The sample unchanged.
    Identity,
    /// Projection onto the listed feature indices, in the listed order.
    ColumnSubset(Vec<usize>),
    /// Row `i` of a per-sample matrix; requires one row per dataset row at
    /// fit and predict time.
    Precomputed(Vec<Vec<f64>>),
    /// An opaque function with a declared output dimension. Outputs are
    /// validated into `[0, 1]`.
    Callable { dim: usize, func: TransformFn },
}

impl fmt::Debug for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Identity => write!(f, "Identity"),
            Transform::ColumnSubset(cols) => write!(f, "ColumnSubset({cols:?})"),
            Transform::Precomputed(rows) => {
                write!(f, "Precomputed({} rows)", rows.len())
            }
            Transform::Callable { dim, .. } => write!(f, "Callable(dim={dim})"),
        }
    }
}

impl PartialEq for Transform {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Transform::Identity, Transform::Identity) => true,
            (Transform::ColumnSubset(a), Transform::ColumnSubset(b)) => a == b,
            (Transform::Precomputed(a), Transform::Precomputed(b)) => a == b,
            (Transform::Callable { dim: a, func: fa }, Transform::Callable { dim: b, func: fb }) => {
                a == b && Arc::ptr_eq(fa, fb)
            }
            _ => false,
        }
    }
}

impl Transform {
    /// The output dimension given the raw input dimension, when it is
    /// statically known to be valid.
    pub(crate) fn output_dim(&self, input_dim: usize) -> Result<usize> {
        match self {
            Transform::Identity => Ok(input_dim),
            Transform::ColumnSubset(cols) => {
                if cols.is_empty() {
                    return Err(ArtError::InvalidParameter(
                        "column subset must select at least one column".into(),
                    ));
                }
                if let Some(&bad) = cols.iter().find(|&&c| c >= input_dim) {
                    return Err(ArtError::InvalidParameter(format!(
                        "column index {bad} out of range for {input_dim} features"
                    )));
                }
                Ok(cols.len())
            }
            Transform::Precomputed(rows) => {
                let width = rows.first().map(|r| r.len()).unwrap_or(0);
                if width == 0 {
                    return Err(ArtError::InvalidParameter(
                        "precomputed transform matrix is empty".into(),
                    ));
                }
                if rows.iter().any(|r| r.len() != width) {
                    return Err(ArtError::InvalidParameter(
                        "precomputed transform matrix is ragged".into(),
                    ));
                }
                Ok(width)
            }
            Transform::Callable { dim, .. } => {
                if *dim == 0 {
                    return Err(ArtError::InvalidParameter(
                        "callable transform must declare a nonzero output dimension".into(),
                    ));
                }
                Ok(*dim)
            }
        }
    }

    /// Applies the transform to the original sample at dataset row `row`.
    /// `module` is the 1-based module number, used in contract errors.
    pub(crate) fn apply(&self, module: usize, sample: &[f64], row: usize) -> Result<Vec<f64>> {
        match self {
            Transform::Identity => Ok(sample.to_vec()),
            Transform::ColumnSubset(cols) => cols
                .iter()
                .map(|&c| {
                    sample.get(c).copied().ok_or(ArtError::TransformContract {
                        module,
                        reason: format!("column {c} out of range for sample of length {}", sample.len()),
                    })
                })
                .collect(),
            Transform::Precomputed(rows) => {
                rows.get(row)
                    .cloned()
                    .ok_or_else(|| ArtError::TransformContract {
                        module,
                        reason: format!(
                            "precomputed matrix has {} rows, row {row} requested",
                            rows.len()
                        ),
                    })
            }
            Transform::Callable { dim, func } => {
                let out = func(sample);
                if out.len() != *dim {
                    return Err(ArtError::TransformContract {
                        module,
                        reason: format!("declared dim {dim}, produced {}", out.len()),
                    });
                }
                if let Some((i, &v)) = out
                    .iter()
                    .enumerate()
                    .find(|(_, v)| !(0.0..=1.0).contains(*v) || v.is_nan())
                {
                    return Err(ArtError::TransformContract {
                        module,
                        reason: format!("output component {i} = {v} outside [0, 1]"),
                    });
                }
                Ok(out)
            }
        }
    }

    /// Row-count check for the lookup case; other variants have no
    /// per-dataset state.
    pub(crate) fn check_rows(&self, module: usize, n: usize) -> Result<()> {
        if let Transform::Precomputed(rows) = self {
            if rows.len() != n {
                return Err(ArtError::TransformContract {
                    module,
                    reason: format!("precomputed matrix has {} rows, dataset has {n}", rows.len()),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_passes_through() {
        let t = Transform::Identity;
        assert_eq!(t.apply(1, &[0.2, 0.7], 0).unwrap(), vec![0.2, 0.7]);
    }

    #[test]
    fn column_subset_projects() {
        let t = Transform::ColumnSubset(vec![0]);
        assert_eq!(t.apply(1, &[0.2, 0.7], 0).unwrap(), vec![0.2]);
        let swap = Transform::ColumnSubset(vec![1, 0]);
        assert_eq!(swap.apply(1, &[0.2, 0.7], 0).unwrap(), vec![0.7, 0.2]);
    }

    #[test]
    fn precomputed_is_row_lookup() {
        let t = Transform::Precomputed(vec![vec![0.1], vec![0.2], vec![0.3]]);
        assert_eq!(t.apply(2, &[0.9, 0.9], 2).unwrap(), vec![0.3]);
        assert!(matches!(
            t.apply(2, &[0.9, 0.9], 3),
            Err(ArtError::TransformContract { module: 2, .. })
        ));
    }

    #[test]
    fn callable_output_is_validated() {
        let bad_range = Transform::Callable {
            dim: 1,
            func: Arc::new(|_s: &[f64]| vec![1.5]),
        };
        assert!(matches!(
            bad_range.apply(3, &[0.5], 0),
            Err(ArtError::TransformContract { module: 3, .. })
        ));

        let bad_dim = Transform::Callable {
            dim: 2,
            func: Arc::new(|_s: &[f64]| vec![0.5]),
        };
        assert!(bad_dim.apply(3, &[0.5], 0).is_err());

        let ok = Transform::Callable {
            dim: 1,
            func: Arc::new(|s: &[f64]| vec![s[0] * 0.5]),
        };
        assert_eq!(ok.apply(3, &[0.8], 0).unwrap(), vec![0.4]);
    }

    #[test]
    fn output_dims_are_checked() {
        assert_eq!(Transform::Identity.output_dim(3).unwrap(), 3);
        assert_eq!(
            Transform::ColumnSubset(vec![0, 2]).output_dim(3).unwrap(),
            2
        );
        assert!(Transform::ColumnSubset(vec![3]).output_dim(3).is_err());
        assert!(Transform::ColumnSubset(vec![]).output_dim(3).is_err());
        assert!(Transform::Precomputed(vec![]).output_dim(3).is_err());
        assert!(
            Transform::Precomputed(vec![vec![0.1], vec![0.1, 0.2]])
                .output_dim(3)
                .is_err()
        );
    }
}
