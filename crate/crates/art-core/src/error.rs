//! Shared error type for the ART model crates.

use thiserror::Error;

/// Errors produced by module construction, training, and inference.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArtError {
    /// A raw feature value fell outside the unit interval.
    #[error("component {index} = {value} is outside [0, 1]")]
    ComponentOutOfRange { index: usize, value: f64 },

    /// A vector had the wrong length for the module it was presented to.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Classification or persistence was requested before any training.
    #[error("model has no committed categories; fit it first")]
    NotFitted,

    /// A hyper-parameter violated its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A map-field child was re-bound to a different parent. Unreachable
    /// through the public training path; surfacing it means state corruption.
    #[error("map field conflict: child {child} is bound to parent {stored}, refusing {requested}")]
    AssociationConflict {
        child: usize,
        stored: usize,
        requested: usize,
    },

    /// Model configuration failed validation; the message lists every error.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A per-module transform broke its contract. `module` is the 1-based
    /// module number.
    #[error("transform for module {module} broke its contract: {reason}")]
    TransformContract { module: usize, reason: String },

    /// A label was supplied in unsupervised mode, or missing / of the wrong
    /// kind in a supervised mode.
    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    /// fit was called with no samples.
    #[error("dataset is empty")]
    EmptyDataset,
}

pub type Result<T> = std::result::Result<T, ArtError>;
