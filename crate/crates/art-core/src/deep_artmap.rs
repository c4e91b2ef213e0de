//! The deep model: a chain of ART modules linked by inter-ART map fields.
//!
//! Module 1 is the finest (leaf) level and module `L` the coarsest. Training
//! runs backwards through the chain, one sample at a time: the top module
//! prescribes a category (from its own transform of the sample, from the
//! label vector, or from the integer label directly) and every module below
//! it trains as a simplified ARTMAP against the category prescribed one
//! level up. Inference is a single independent forward pass per module.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{DeepArtmapConfig, SupervisionMode};
use crate::error::{ArtError, Result};
use crate::fuzzy_art::{FuzzyArtModule, Pattern};
use crate::map_field::{MapField, MapFieldParams};
use crate::simplified_artmap::{supervised_train_step, StepTrace};
use crate::transform::Transform;

/// Per-sample, per-level category assignments. Rows are samples; column 0
/// is module 1 (the leaf level) and the last column the coarsest level — the
/// label column in integer-label mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMatrix {
    n_cols: usize,
    data: Vec<usize>,
}

impl LabelMatrix {
    fn from_rows(rows: Vec<Vec<usize>>, n_cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == n_cols));
        LabelMatrix {
            n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        if self.n_cols == 0 {
            0
        } else {
            self.data.len() / self.n_cols
        }
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.data[row * self.n_cols + col]
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.data[row * self.n_cols..(row + 1) * self.n_cols]
    }

    /// One level's assignments for every sample. Column 0 is the leaf.
    pub fn column(&self, col: usize) -> Vec<usize> {
        (0..self.n_rows()).map(|i| self.get(i, col)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.n_rows()).map(|i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(|r| r.to_vec()).collect()
    }
}

/// Training targets for [`DeepArtmap::fit`].
#[derive(Debug, Clone, Copy)]
pub enum Targets<'a> {
    Unlabeled,
    Vectors(&'a [Vec<f64>]),
    Integers(&'a [usize]),
}

/// The label for a single presentation in [`DeepArtmap::partial_fit`].
#[derive(Debug, Clone, Copy)]
pub enum SampleLabel<'a> {
    Unlabeled,
    Vector(&'a [f64]),
    Integer(usize),
}

/// Training diagnostics, reset when a model is rebuilt from parts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FitStats {
    pub samples_presented: u64,
    pub supervised_steps: u64,
    /// Largest number of resonance searches any supervised step needed.
    pub max_search_attempts: usize,
    /// Steps whose search attempts exceeded `categories + 1`. Always 0; a
    /// nonzero count means the match-tracking termination bound broke.
    pub attempt_bound_violations: u64,
}

impl FitStats {
    fn record(&mut self, trace: &StepTrace) {
        self.supervised_steps += 1;
        self.max_search_attempts = self.max_search_attempts.max(trace.attempts);
        if trace.attempts > trace.categories_before + 1 {
            self.attempt_bound_violations += 1;
        }
    }
}

/// One node of the learned divisive hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyNode {
    /// 1-based module number (1 = leaf level).
    pub module: usize,
    pub category: usize,
    /// Presentations absorbed; `None` for integer-label roots, which have
    /// no ART module behind them.
    pub sample_count: Option<u64>,
    pub children: Vec<HierarchyNode>,
}

impl HierarchyNode {
    fn count_leaves(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(|c| c.count_leaves()).sum()
        }
    }
}

/// The learned category tree, roots at the coarsest level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hierarchy {
    pub roots: Vec<HierarchyNode>,
}

impl Hierarchy {
    /// Total root-to-leaf paths; equals the leaf module's category count.
    pub fn leaf_count(&self) -> usize {
        self.roots.iter().map(|r| r.count_leaves()).sum()
    }

    /// Nodes per level, leaf level first.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = Vec::new();
        fn walk(node: &HierarchyNode, sizes: &mut Vec<usize>) {
            let idx = node.module - 1;
            if sizes.len() <= idx {
                sizes.resize(idx + 1, 0);
            }
            sizes[idx] += 1;
            for child in &node.children {
                walk(child, sizes);
            }
        }
        for root in &self.roots {
            walk(root, &mut sizes);
        }
        sizes
    }
}

/// A trained or trainable chain of ART modules and map fields.
///
/// `fit` and `partial_fit` need exclusive access; `predict` and the other
/// read-only operations never mutate and may run concurrently.
#[derive(Debug, Clone)]
pub struct DeepArtmap {
    modules: Vec<FuzzyArtModule>,
    map_fields: Vec<MapField>,
    transforms: Vec<Transform>,
    mode: SupervisionMode,
    map_params: MapFieldParams,
    shuffle_seed: Option<u64>,
    input_dim: usize,
    fitted: bool,
    stats: FitStats,
}

impl DeepArtmap {
    /// Builds an untrained model, failing on any configuration error.
    /// Validation warnings are available through
    /// [`DeepArtmapConfig::validate`].
    pub fn new(config: DeepArtmapConfig, input_dim: usize) -> Result<Self> {
        if input_dim == 0 {
            return Err(ArtError::InvalidConfig(
                "input dimension must be at least 1".into(),
            ));
        }
        config.validate(Some(input_dim)).into_result()?;

        let n_art = config.layers.len();
        let mut modules = Vec::with_capacity(n_art);
        let mut transforms = Vec::with_capacity(n_art);
        for (k, layer) in config.layers.iter().enumerate() {
            let label_side = matches!(config.mode, SupervisionMode::VectorLabels { .. })
                && k == n_art - 1;
            let dim = match config.mode {
                SupervisionMode::VectorLabels { dim } if label_side => dim,
                _ => layer.transform.output_dim(input_dim)?,
            };
            modules.push(FuzzyArtModule::new(dim, layer.params)?);
            transforms.push(layer.transform.clone());
        }

        let n_maps = match config.mode {
            SupervisionMode::IntegerLabels => n_art,
            _ => n_art - 1,
        };
        Ok(DeepArtmap {
            modules,
            map_fields: vec![MapField::new(); n_maps],
            transforms,
            mode: config.mode,
            map_params: config.map_params,
            shuffle_seed: config.shuffle_seed,
            input_dim,
            fitted: false,
            stats: FitStats::default(),
        })
    }

    /// Reassembles a model from previously extracted state, for persistence.
    /// Cross-checks the structural invariants so a corrupt source cannot
    /// produce a model that panics later.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        modules: Vec<FuzzyArtModule>,
        map_fields: Vec<MapField>,
        transforms: Vec<Transform>,
        mode: SupervisionMode,
        map_params: MapFieldParams,
        shuffle_seed: Option<u64>,
        input_dim: usize,
        fitted: bool,
    ) -> Result<Self> {
        if modules.is_empty() {
            return Err(ArtError::InvalidConfig("no modules".into()));
        }
        let expected_maps = match mode {
            SupervisionMode::IntegerLabels => modules.len(),
            _ => modules.len() - 1,
        };
        if map_fields.len() != expected_maps {
            return Err(ArtError::InvalidConfig(format!(
                "expected {expected_maps} map fields, got {}",
                map_fields.len()
            )));
        }
        if transforms.len() != modules.len() {
            return Err(ArtError::InvalidConfig(format!(
                "expected {} transforms, got {}",
                modules.len(),
                transforms.len()
            )));
        }
        map_params.validate()?;
        for (k, map) in map_fields.iter().enumerate() {
            let child_count = modules[k].category_count();
            for child in 0..child_count {
                if map.parent_of(child).is_none() {
                    return Err(ArtError::InvalidConfig(format!(
                        "map field {} lacks a parent for category {child}",
                        k + 1
                    )));
                }
            }
            if let Some((child, _)) = map.pairs().find(|&(c, _)| c >= child_count) {
                return Err(ArtError::InvalidConfig(format!(
                    "map field {} binds unknown child category {child}",
                    k + 1
                )));
            }
            if k + 1 < modules.len() {
                let parent_count = modules[k + 1].category_count();
                if let Some((_, parent)) = map.pairs().find(|&(_, p)| p >= parent_count) {
                    return Err(ArtError::InvalidConfig(format!(
                        "map field {} binds unknown parent category {parent}",
                        k + 1
                    )));
                }
            }
        }
        Ok(DeepArtmap {
            modules,
            map_fields,
            transforms,
            mode,
            map_params,
            shuffle_seed,
            input_dim,
            fitted,
            stats: FitStats::default(),
        })
    }

    pub fn mode(&self) -> SupervisionMode {
        self.mode
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    /// Number of levels in the label matrix; one more than the ART module
    /// count in integer-label mode.
    pub fn n_levels(&self) -> usize {
        match self.mode {
            SupervisionMode::IntegerLabels => self.modules.len() + 1,
            _ => self.modules.len(),
        }
    }

    pub fn n_art_modules(&self) -> usize {
        self.modules.len()
    }

    pub fn modules(&self) -> &[FuzzyArtModule] {
        &self.modules
    }

    pub fn module(&self, index: usize) -> &FuzzyArtModule {
        &self.modules[index]
    }

    pub fn map_fields(&self) -> &[MapField] {
        &self.map_fields
    }

    pub fn map_field(&self, index: usize) -> &MapField {
        &self.map_fields[index]
    }

    pub fn transforms(&self) -> &[Transform] {
        &self.transforms
    }

    pub fn map_params(&self) -> &MapFieldParams {
        &self.map_params
    }

    pub fn shuffle_seed(&self) -> Option<u64> {
        self.shuffle_seed
    }

    pub fn is_fitted(&self) -> bool {
        self.fitted
    }

    pub fn stats(&self) -> &FitStats {
        &self.stats
    }

    /// Replaces the per-sample matrix of a precomputed transform, so a
    /// persisted model can be pointed at the lookup rows for a new dataset.
    pub fn swap_precomputed(&mut self, index: usize, rows: Vec<Vec<f64>>) -> Result<()> {
        match self.transforms.get_mut(index) {
            Some(slot @ Transform::Precomputed(_)) => {
                let replacement = Transform::Precomputed(rows);
                let dim = replacement.output_dim(self.input_dim)?;
                if dim != self.modules[index].raw_dim() {
                    return Err(ArtError::TransformContract {
                        module: index + 1,
                        reason: format!(
                            "replacement rows have width {dim}, module expects {}",
                            self.modules[index].raw_dim()
                        ),
                    });
                }
                *slot = replacement;
                Ok(())
            }
            Some(_) => Err(ArtError::TransformContract {
                module: index + 1,
                reason: "transform is not precomputed".into(),
            }),
            None => Err(ArtError::InvalidParameter(format!(
                "no module at index {index}"
            ))),
        }
    }

    fn check_sample(&self, sample: &[f64]) -> Result<()> {
        if sample.len() != self.input_dim {
            return Err(ArtError::DimensionMismatch {
                expected: self.input_dim,
                actual: sample.len(),
            });
        }
        Ok(())
    }

    /// The complement-coded input for ART module `index` (0-based), given
    /// the original sample at dataset row `row`.
    fn module_input(&self, index: usize, sample: &[f64], row: usize) -> Result<Pattern> {
        let transformed = self.transforms[index].apply(index + 1, sample, row)?;
        let pattern = Pattern::complement_code(&transformed).map_err(|e| match e {
            ArtError::ComponentOutOfRange { index: i, value } => ArtError::TransformContract {
                module: index + 1,
                reason: format!("transformed component {i} = {value} outside [0, 1]"),
            },
            other => other,
        })?;
        if pattern.raw_dim() != self.modules[index].raw_dim() {
            return Err(ArtError::TransformContract {
                module: index + 1,
                reason: format!(
                    "transform produced {} features, module expects {}",
                    pattern.raw_dim(),
                    self.modules[index].raw_dim()
                ),
            });
        }
        Ok(pattern)
    }

    /// Presents one sample: the top level prescribes a category the way the
    /// supervision mode dictates, then each module below trains as a
    /// simplified ARTMAP. Returns the per-level assignments, leaf first.
    pub fn partial_fit(
        &mut self,
        sample: &[f64],
        row: usize,
        label: SampleLabel<'_>,
    ) -> Result<Vec<usize>> {
        self.check_sample(sample)?;
        let levels = self.n_levels();
        let mut assignments = vec![0usize; levels];

        // Top-level category: trained, substituted, or given outright.
        let (top_art, mut parent) = match (self.mode, label) {
            (SupervisionMode::Unsupervised, SampleLabel::Unlabeled) => {
                let top = self.modules.len() - 1;
                let x = self.module_input(top, sample, row)?;
                (top, self.modules[top].train_step(&x)?)
            }
            (SupervisionMode::VectorLabels { dim }, SampleLabel::Vector(values)) => {
                if values.len() != dim {
                    return Err(ArtError::DimensionMismatch {
                        expected: dim,
                        actual: values.len(),
                    });
                }
                let top = self.modules.len() - 1;
                let x = Pattern::complement_code(values)?;
                (top, self.modules[top].train_step(&x)?)
            }
            (SupervisionMode::IntegerLabels, SampleLabel::Integer(value)) => {
                (self.modules.len(), value)
            }
            (SupervisionMode::Unsupervised, _) => {
                return Err(ArtError::LabelMismatch(
                    "unsupervised mode takes no labels".into(),
                ))
            }
            (SupervisionMode::VectorLabels { .. }, _) => {
                return Err(ArtError::LabelMismatch(
                    "vector-label mode needs a vector label".into(),
                ))
            }
            (SupervisionMode::IntegerLabels, _) => {
                return Err(ArtError::LabelMismatch(
                    "integer-label mode needs an integer label".into(),
                ))
            }
        };
        assignments[levels - 1] = parent;

        // Backwards through the remaining modules, each supervised by the
        // category one level up.
        for k in (0..top_art).rev() {
            let x = self.module_input(k, sample, row)?;
            let trace = supervised_train_step(
                &mut self.modules[k],
                &mut self.map_fields[k],
                &x,
                parent,
                &self.map_params,
            )?;
            self.stats.record(&trace);
            assignments[k] = trace.category;
            parent = trace.category;
        }

        self.stats.samples_presented += 1;
        self.fitted = true;
        Ok(assignments)
    }

    fn check_targets(&self, n: usize, targets: &Targets<'_>) -> Result<()> {
        match (self.mode, targets) {
            (SupervisionMode::Unsupervised, Targets::Unlabeled) => Ok(()),
            (SupervisionMode::VectorLabels { .. }, Targets::Vectors(rows)) => {
                if rows.len() != n {
                    return Err(ArtError::LabelMismatch(format!(
                        "{} label rows for {n} samples",
                        rows.len()
                    )));
                }
                Ok(())
            }
            (SupervisionMode::IntegerLabels, Targets::Integers(values)) => {
                if values.len() != n {
                    return Err(ArtError::LabelMismatch(format!(
                        "{} labels for {n} samples",
                        values.len()
                    )));
                }
                Ok(())
            }
            (SupervisionMode::Unsupervised, _) => Err(ArtError::LabelMismatch(
                "unsupervised mode takes no targets".into(),
            )),
            (SupervisionMode::VectorLabels { .. }, _) => Err(ArtError::LabelMismatch(
                "vector-label mode needs vector targets".into(),
            )),
            (SupervisionMode::IntegerLabels, _) => Err(ArtError::LabelMismatch(
                "integer-label mode needs integer targets".into(),
            )),
        }
    }

    /// Trains for `epochs` full passes in presentation order (reshuffled
    /// per epoch when a shuffle seed is configured), then returns the label
    /// matrix of a final pure inference pass over the training data.
    pub fn fit(
        &mut self,
        data: &[Vec<f64>],
        targets: Targets<'_>,
        epochs: usize,
    ) -> Result<LabelMatrix> {
        if data.is_empty() {
            return Err(ArtError::EmptyDataset);
        }
        if epochs == 0 {
            return Err(ArtError::InvalidParameter(
                "epochs must be at least 1".into(),
            ));
        }
        self.check_targets(data.len(), &targets)?;
        for (k, transform) in self.transforms.iter().enumerate() {
            transform.check_rows(k + 1, data.len())?;
        }

        let mut rng = self.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
        let mut order: Vec<usize> = (0..data.len()).collect();
        for _ in 0..epochs {
            if let Some(rng) = rng.as_mut() {
                order.shuffle(rng);
            }
            for &i in &order {
                let label = match targets {
                    Targets::Unlabeled => SampleLabel::Unlabeled,
                    Targets::Vectors(rows) => SampleLabel::Vector(&rows[i]),
                    Targets::Integers(values) => SampleLabel::Integer(values[i]),
                };
                self.partial_fit(&data[i], i, label)?;
            }
        }
        self.predict(data)
    }

    /// Classifies every sample with every module independently; supervised
    /// modes fill the final column through the top map field. Read-only.
    pub fn predict(&self, data: &[Vec<f64>]) -> Result<LabelMatrix> {
        if !self.fitted {
            return Err(ArtError::NotFitted);
        }
        for (k, transform) in self.transforms.iter().enumerate() {
            transform.check_rows(k + 1, data.len())?;
        }
        let levels = self.n_levels();
        let mut rows = Vec::with_capacity(data.len());
        for (i, sample) in data.iter().enumerate() {
            self.check_sample(sample)?;
            let mut row = vec![0usize; levels];
            for k in 0..self.modules.len() {
                let x = self.module_input(k, sample, i)?;
                row[k] = self.modules[k].classify(&x)?;
            }
            if self.mode.is_supervised() {
                // No label input exists at inference; the top level is
                // looked up through the final map field.
                let child_level = self.map_fields.len() - 1;
                let child = row[child_level];
                row[levels - 1] = self.map_fields[child_level]
                    .parent_of(child)
                    .ok_or_else(|| {
                        ArtError::InvalidConfig(format!(
                            "map field {} lacks a parent for category {child}",
                            child_level + 1
                        ))
                    })?;
            }
            rows.push(row);
        }
        Ok(LabelMatrix::from_rows(rows, levels))
    }

    /// The learned category tree: module-L categories (or integer labels)
    /// at the roots, chained down to module-1 leaves through the map
    /// fields.
    pub fn hierarchy(&self) -> Result<Hierarchy> {
        if !self.fitted {
            return Err(ArtError::NotFitted);
        }
        let top_level = self.n_levels() - 1;
        let root_ids: Vec<usize> = match self.mode {
            SupervisionMode::IntegerLabels => {
                self.map_fields[self.map_fields.len() - 1].parents()
            }
            _ => (0..self.modules[self.modules.len() - 1].category_count()).collect(),
        };
        let roots = root_ids
            .into_iter()
            .map(|category| self.build_node(top_level, category))
            .collect();
        Ok(Hierarchy { roots })
    }

    fn build_node(&self, level: usize, category: usize) -> HierarchyNode {
        let sample_count = self
            .modules
            .get(level)
            .map(|m| m.weights()[category].sample_count());
        let children = if level == 0 {
            Vec::new()
        } else {
            self.map_fields[level - 1]
                .children_of(category)
                .into_iter()
                .map(|child| self.build_node(level - 1, child))
                .collect()
        };
        HierarchyNode {
            module: level + 1,
            category,
            sample_count,
            children,
        }
    }

    /// Strict per-module classification that honors vigilance; `None`
    /// entries mark modules where nothing resonated.
    pub fn classify_strict(&self, sample: &[f64], row: usize) -> Result<Vec<Option<usize>>> {
        if !self.fitted {
            return Err(ArtError::NotFitted);
        }
        self.check_sample(sample)?;
        let mut out = Vec::with_capacity(self.modules.len());
        for k in 0..self.modules.len() {
            let x = self.module_input(k, sample, row)?;
            out.push(self.modules[k].classify_strict(&x)?);
        }
        Ok(out)
    }
}

// Keep the unused import warning away in builds without debug assertions.
#[allow(unused_imports)]
use std::collections::BTreeSet as _BTreeSetAlias;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::LayerConfig;
    use crate::fuzzy_art::FuzzyArtParams;

    fn blob_data() -> Vec<Vec<f64>> {
        vec![
            vec![0.1, 0.1],
            vec![0.15, 0.1],
            vec![0.9, 0.9],
            vec![0.85, 0.9],
        ]
    }

    fn two_layer(rho_leaf: f64, rho_root: f64, mode: SupervisionMode) -> DeepArtmapConfig {
        DeepArtmapConfig::new(
            vec![
                LayerConfig::new(FuzzyArtParams::with_vigilance(rho_leaf)),
                LayerConfig::new(FuzzyArtParams::with_vigilance(rho_root)),
            ],
            mode,
        )
    }

    #[test]
    fn first_sample_bootstraps_every_level() {
        let mut model =
            DeepArtmap::new(two_layer(0.9, 0.3, SupervisionMode::Unsupervised), 2).unwrap();
        let row = model
            .partial_fit(&[0.2, 0.3], 0, SampleLabel::Unlabeled)
            .unwrap();
        assert_eq!(row, vec![0, 0]);
        assert_eq!(model.map_field(0).parent_of(0), Some(0));
    }

    #[test]
    fn integer_label_bootstraps_with_given_parent() {
        let config = DeepArtmapConfig::new(
            vec![LayerConfig::new(FuzzyArtParams::with_vigilance(0.9))],
            SupervisionMode::IntegerLabels,
        );
        let mut model = DeepArtmap::new(config, 2).unwrap();
        let row = model
            .partial_fit(&[0.2, 0.3], 0, SampleLabel::Integer(7))
            .unwrap();
        assert_eq!(row, vec![0, 7]);
        assert_eq!(model.map_field(0).parent_of(0), Some(7));
        assert_eq!(model.n_levels(), 2);
    }

    #[test]
    fn blob_sequence_builds_the_expected_hierarchy() {
        let mut model =
            DeepArtmap::new(two_layer(0.95, 0.0, SupervisionMode::Unsupervised), 2).unwrap();
        let data = blob_data();
        let mut train_rows = Vec::new();
        for (i, sample) in data.iter().enumerate() {
            train_rows.push(model.partial_fit(sample, i, SampleLabel::Unlabeled).unwrap());
        }
        assert_eq!(
            train_rows,
            vec![vec![0, 0], vec![0, 0], vec![1, 0], vec![1, 0]]
        );
        assert_eq!(model.map_field(0).parent_of(0), Some(0));
        assert_eq!(model.map_field(0).parent_of(1), Some(0));
    }

    #[test]
    fn fit_returns_the_predict_pass() {
        let mut model =
            DeepArtmap::new(two_layer(0.95, 0.0, SupervisionMode::Unsupervised), 2).unwrap();
        let data = blob_data();
        let fitted = model.fit(&data, Targets::Unlabeled, 1).unwrap();
        assert_eq!(
            fitted.to_rows(),
            vec![vec![0, 0], vec![0, 0], vec![1, 0], vec![1, 0]]
        );
        let again = model.predict(&data).unwrap();
        assert_eq!(fitted, again);
    }

    #[test]
    fn second_epoch_is_a_fixed_point_on_blobs() {
        let data = blob_data();
        let mut one =
            DeepArtmap::new(two_layer(0.95, 0.0, SupervisionMode::Unsupervised), 2).unwrap();
        let y1 = one.fit(&data, Targets::Unlabeled, 1).unwrap();
        let mut two =
            DeepArtmap::new(two_layer(0.95, 0.0, SupervisionMode::Unsupervised), 2).unwrap();
        let y2 = two.fit(&data, Targets::Unlabeled, 2).unwrap();
        assert_eq!(y1, y2);
        assert_eq!(one.modules(), two.modules());
    }

    #[test]
    fn single_sample_fit_yields_zero_matrix() {
        let mut model =
            DeepArtmap::new(two_layer(0.9, 0.3, SupervisionMode::Unsupervised), 2).unwrap();
        let y = model.fit(&[vec![0.4, 0.6]], Targets::Unlabeled, 1).unwrap();
        assert_eq!(y.to_rows(), vec![vec![0, 0]]);
    }

    #[test]
    fn predict_requires_fit() {
        let model =
            DeepArtmap::new(two_layer(0.9, 0.3, SupervisionMode::Unsupervised), 2).unwrap();
        assert_eq!(
            model.predict(&[vec![0.4, 0.6]]),
            Err(ArtError::NotFitted)
        );
    }

    #[test]
    fn predict_is_pure() {
        let mut model =
            DeepArtmap::new(two_layer(0.95, 0.0, SupervisionMode::Unsupervised), 2).unwrap();
        let data = blob_data();
        model.fit(&data, Targets::Unlabeled, 1).unwrap();
        let before = model.clone();
        let a = model.predict(&data).unwrap();
        let b = model.predict(&data).unwrap();
        assert_eq!(a, b);
        assert_eq!(model.modules(), before.modules());
        assert_eq!(model.map_fields(), before.map_fields());
    }

    #[test]
    fn empty_fit_is_an_error() {
        let mut model =
            DeepArtmap::new(two_layer(0.9, 0.3, SupervisionMode::Unsupervised), 2).unwrap();
        assert_eq!(
            model.fit(&[], Targets::Unlabeled, 1),
            Err(ArtError::EmptyDataset)
        );
    }

    #[test]
    fn label_shape_is_enforced() {
        let mut model =
            DeepArtmap::new(two_layer(0.9, 0.3, SupervisionMode::Unsupervised), 2).unwrap();
        assert!(matches!(
            model.fit(&[vec![0.1, 0.2]], Targets::Integers(&[1]), 1),
            Err(ArtError::LabelMismatch(_))
        ));
        assert!(matches!(
            model.partial_fit(&[0.1, 0.2], 0, SampleLabel::Integer(1)),
            Err(ArtError::LabelMismatch(_))
        ));
    }

    #[test]
    fn vector_label_mode_reduces_to_artmap_shape() {
        let config = two_layer(0.5, 0.9, SupervisionMode::VectorLabels { dim: 1 });
        let mut model = DeepArtmap::new(config, 2).unwrap();
        let data = vec![vec![0.1, 0.1], vec![0.9, 0.9]];
        let labels = vec![vec![0.0], vec![1.0]];
        let y = model.fit(&data, Targets::Vectors(&labels), 1).unwrap();
        assert_eq!(y.n_cols(), 2);
        // Distinct labels force distinct leaf categories.
        assert_ne!(y.get(0, 0), y.get(1, 0));
    }

    #[test]
    fn integer_mode_predict_emits_mapped_labels() {
        let config = DeepArtmapConfig::new(
            vec![LayerConfig::new(FuzzyArtParams::with_vigilance(0.8))],
            SupervisionMode::IntegerLabels,
        );
        let mut model = DeepArtmap::new(config, 2).unwrap();
        let data = vec![vec![0.1, 0.1], vec![0.9, 0.9]];
        model.fit(&data, Targets::Integers(&[5, 9]), 1).unwrap();
        let y = model.predict(&data).unwrap();
        assert_eq!(y.column(1), vec![5, 9]);
    }

    #[test]
    fn hierarchy_matches_the_blob_fit() {
        let mut model =
            DeepArtmap::new(two_layer(0.95, 0.0, SupervisionMode::Unsupervised), 2).unwrap();
        model.fit(&blob_data(), Targets::Unlabeled, 1).unwrap();
        let tree = model.hierarchy().unwrap();
        assert_eq!(tree.roots.len(), 1);
        assert_eq!(tree.roots[0].children.len(), 2);
        assert_eq!(tree.leaf_count(), 2);
        assert_eq!(tree.level_sizes(), vec![2, 1]);
    }

    #[test]
    fn hierarchy_of_single_sample_is_a_chain() {
        let config = DeepArtmapConfig::new(
            vec![
                LayerConfig::new(FuzzyArtParams::with_vigilance(0.9)),
                LayerConfig::new(FuzzyArtParams::with_vigilance(0.6)),
                LayerConfig::new(FuzzyArtParams::with_vigilance(0.3)),
            ],
            SupervisionMode::Unsupervised,
        );
        let mut model = DeepArtmap::new(config, 2).unwrap();
        model.fit(&[vec![0.5, 0.5]], Targets::Unlabeled, 1).unwrap();
        let tree = model.hierarchy().unwrap();
        assert_eq!(tree.roots.len(), 1);
        assert_eq!(tree.level_sizes(), vec![1, 1, 1]);
        assert_eq!(tree.leaf_count(), 1);
    }

    #[test]
    fn column_subset_transform_feeds_narrow_module() {
        let mut config = two_layer(0.9, 0.3, SupervisionMode::Unsupervised);
        config.layers[1].transform = Transform::ColumnSubset(vec![0]);
        let mut model = DeepArtmap::new(config, 2).unwrap();
        assert_eq!(model.module(1).raw_dim(), 1);
        model
            .fit(&[vec![0.2, 0.9], vec![0.3, 0.1]], Targets::Unlabeled, 1)
            .unwrap();
    }

    #[test]
    fn precomputed_transform_needs_matching_rows() {
        let mut config = two_layer(0.9, 0.3, SupervisionMode::Unsupervised);
        config.layers[1].transform = Transform::Precomputed(vec![vec![0.5]]);
        let mut model = DeepArtmap::new(config, 2).unwrap();
        let err = model
            .fit(
                &[vec![0.2, 0.9], vec![0.3, 0.1]],
                Targets::Unlabeled,
                1,
            )
            .unwrap_err();
        assert!(matches!(err, ArtError::TransformContract { module: 2, .. }));
    }

    #[test]
    fn swap_precomputed_replaces_lookup_rows() {
        let mut config = two_layer(0.9, 0.3, SupervisionMode::Unsupervised);
        config.layers[1].transform = Transform::Precomputed(vec![vec![0.5]]);
        let mut model = DeepArtmap::new(config, 2).unwrap();
        model.fit(&[vec![0.2, 0.9]], Targets::Unlabeled, 1).unwrap();
        model
            .swap_precomputed(1, vec![vec![0.1], vec![0.6]])
            .unwrap();
        let y = model
            .predict(&[vec![0.2, 0.9], vec![0.3, 0.1]])
            .unwrap();
        assert_eq!(y.n_rows(), 2);
        assert!(model.swap_precomputed(0, vec![vec![0.1]]).is_err());
    }

    #[test]
    fn seeded_shuffle_is_reproducible() {
        let data = blob_data();
        let mut config = two_layer(0.95, 0.0, SupervisionMode::Unsupervised);
        config.shuffle_seed = Some(42);
        let mut a = DeepArtmap::new(config.clone(), 2).unwrap();
        let mut b = DeepArtmap::new(config, 2).unwrap();
        let ya = a.fit(&data, Targets::Unlabeled, 3).unwrap();
        let yb = b.fit(&data, Targets::Unlabeled, 3).unwrap();
        assert_eq!(ya, yb);
        assert_eq!(a.modules(), b.modules());
    }
}
