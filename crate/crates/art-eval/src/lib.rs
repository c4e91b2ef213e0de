//! Verification tooling for hierarchical ART models.
//!
//! This crate intentionally depends on nothing from the main implementation:
//! the oracles in [`oracles`] are naive re-implementations written straight
//! from the textbook procedure (full activation sort per step, no shortcuts),
//! so that differential tests against the optimized path are meaningful.
//! [`metrics`] holds partition-agreement scores and the hierarchy
//! self-consistency check used by the acceptance suite and the `inspect`
//! command.

pub mod metrics;
pub mod oracles;

pub use metrics::{adjusted_rand, check_self_consistency, ConsistencyReport, EvalError, Violation};
pub use oracles::{oracle_artmap, oracle_fuzzy_art, oracle_smart, ArtmapTrace, NaiveArtParams};
