//! Model configuration and validation.

use crate::error::{ArtError, Result};
use crate::fuzzy_art::FuzzyArtParams;
use crate::map_field::MapFieldParams;
use crate::transform::Transform;

/// How the deep model is supervised, fixed at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupervisionMode {
    /// No labels; the top module clusters freely and drives the rest.
    Unsupervised,
    /// Real-valued label vectors of dimension `dim` feed the top module in
    /// place of the sample.
    VectorLabels { dim: usize },
    /// Integer labels stand in for the top module's category outright; no
    /// label-side ART module exists.
    IntegerLabels,
}

impl SupervisionMode {
    pub fn is_supervised(&self) -> bool {
        !matches!(self, SupervisionMode::Unsupervised)
    }
}

/// Configuration for one ART module in the chain.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerConfig {
    pub params: FuzzyArtParams,
    pub transform: Transform,
}

impl LayerConfig {
    pub fn new(params: FuzzyArtParams) -> Self {
        LayerConfig {
            params,
            transform: Transform::Identity,
        }
    }

    pub fn with_transform(mut self, transform: Transform) -> Self {
        self.transform = transform;
        self
    }
}

/// Full model configuration. `layers[0]` is module 1, the finest (leaf)
/// level; the last entry is the coarsest. In integer-label mode the layers
/// describe only the ART modules; the label level sits above them.
#[derive(Debug, Clone, PartialEq)]
pub struct DeepArtmapConfig {
    pub layers: Vec<LayerConfig>,
    pub mode: SupervisionMode,
    pub map_params: MapFieldParams,
    /// When set, presentation order is reshuffled each epoch with this seed.
    pub shuffle_seed: Option<u64>,
}

impl DeepArtmapConfig {
    pub fn new(layers: Vec<LayerConfig>, mode: SupervisionMode) -> Self {
        DeepArtmapConfig {
            layers,
            mode,
            map_params: MapFieldParams::default(),
            shuffle_seed: None,
        }
    }

    /// Validates the configuration. Hard problems land in `errors`,
    /// advisory ones in `warnings`; nothing is thrown. Dimension checks
    /// that need the raw feature count run only when `input_dim` is given.
    pub fn validate(&self, input_dim: Option<usize>) -> ConfigReport {
        let mut report = ConfigReport::default();

        if self.layers.is_empty() {
            report
                .errors
                .push("configuration needs at least one module".into());
            return report;
        }
        if matches!(self.mode, SupervisionMode::VectorLabels { .. }) && self.layers.len() < 2 {
            report.errors.push(
                "vector-label mode needs at least one data module below the label module".into(),
            );
        }
        if let SupervisionMode::VectorLabels { dim } = self.mode {
            if dim == 0 {
                report
                    .errors
                    .push("vector labels must have at least one component".into());
            }
            if let Some(last) = self.layers.last() {
                if last.transform != Transform::Identity {
                    report.errors.push(
                        "the label-side module's transform must be the identity; labels replace \
                         its input"
                            .into(),
                    );
                }
            }
        }

        for (k, layer) in self.layers.iter().enumerate() {
            let module = k + 1;
            if let Err(e) = layer.params.validate() {
                report.errors.push(format!("module {module}: {e}"));
            }
            // The label-side module never sees the sample, so skip its
            // transform dimension checks.
            let label_side = matches!(self.mode, SupervisionMode::VectorLabels { .. })
                && k == self.layers.len() - 1;
            if label_side {
                continue;
            }
            match input_dim {
                Some(d) => {
                    if let Err(e) = layer.transform.output_dim(d) {
                        report.errors.push(format!("module {module}: {e}"));
                    }
                }
                None => {
                    // Structure-only checks that do not need the input dim.
                    if let Err(e) = layer.transform.output_dim(usize::MAX) {
                        report.errors.push(format!("module {module}: {e}"));
                    }
                }
            }
            if let Transform::Precomputed(rows) = &layer.transform {
                if let Some((i, j, v)) = rows.iter().enumerate().find_map(|(i, r)| {
                    r.iter()
                        .enumerate()
                        .find(|(_, v)| !(0.0..=1.0).contains(*v) || v.is_nan())
                        .map(|(j, &v)| (i, j, v))
                }) {
                    report.errors.push(format!(
                        "module {module}: precomputed value at row {i}, column {j} is {v}, \
                         outside [0, 1]"
                    ));
                }
            }
        }

        if let Err(e) = self.map_params.validate() {
            report.errors.push(e.to_string());
        }

        self.push_vigilance_warnings(&mut report);
        report
    }

    /// Vigilance-ordering advisories. Cross-module vigilance comparisons
    /// only mean anything when every data-side module sees the same
    /// (identity-transformed) input.
    fn push_vigilance_warnings(&self, report: &mut ConfigReport) {
        let data_side: &[LayerConfig] = match self.mode {
            SupervisionMode::VectorLabels { .. } => {
                &self.layers[..self.layers.len().saturating_sub(1)]
            }
            _ => &self.layers[..],
        };
        if data_side.len() < 2
            || data_side
                .iter()
                .any(|l| l.transform != Transform::Identity)
        {
            return;
        }

        let rhos: Vec<f64> = data_side.iter().map(|l| l.params.rho).collect();
        if rhos.windows(2).any(|w| w[0] <= w[1]) {
            report.warnings.push(
                "vigilance does not strictly increase toward the leaf module; with identity \
                 transforms the layers will not form a divisive hierarchy"
                    .into(),
            );
        }
        if self.mode == SupervisionMode::Unsupervised {
            for (k, w) in rhos.windows(2).enumerate() {
                if w[0] == w[1] {
                    report.warnings.push(format!(
                        "modules {} and {} have equal vigilance under identity transforms; the \
                         layers will learn duplicate categories",
                        k + 1,
                        k + 2
                    ));
                }
            }
        }
    }
}

/// Validation outcome: hard errors plus advisory warnings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigReport {
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
}

impl ConfigReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }

    /// Collapses the errors into a single `ArtError`, or passes.
    pub fn into_result(self) -> Result<Vec<String>> {
        if self.errors.is_empty() {
            Ok(self.warnings)
        } else {
            Err(ArtError::InvalidConfig(self.errors.join("; ")))
        }
    }
}
