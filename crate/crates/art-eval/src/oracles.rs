//! Naive reference implementations of fuzzy ART, ARTMAP, and the layered
//! SMART procedure.
//!
//! Everything here recomputes the full activation ranking on every step and
//! keeps its state in plain nested `Vec`s. That is the point: these oracles
//! are slow, obvious, and written without looking at the main crate, so a
//! differential test that compares category traces element-wise actually
//! tests something.
//!
//! Conventions shared with any conforming implementation (they are part of
//! the contract, not an implementation detail): inputs are complement coded,
//! the match criterion divides by the raw dimension, the vigilance test
//! allows a `1e-12` slack for exact-threshold presentations, and activation
//! ties go to the lowest category index.

const VIGILANCE_SLACK: f64 = 1e-12;

/// Hyper-parameters for the naive ART module.
#[derive(Debug, Clone, Copy)]
pub struct NaiveArtParams {
    /// Vigilance threshold in `[0, 1]`.
    pub vigilance: f64,
    /// Choice parameter, strictly positive.
    pub choice: f64,
    /// Learning rate in `(0, 1]`.
    pub learning_rate: f64,
}

fn complement(sample: &[f64]) -> Vec<f64> {
    let mut coded = Vec::with_capacity(sample.len() * 2);
    coded.extend_from_slice(sample);
    coded.extend(sample.iter().map(|v| 1.0 - v));
    coded
}

fn min_norm(x: &[f64], w: &[f64]) -> f64 {
    x.iter().zip(w.iter()).map(|(a, b)| a.min(*b)).sum()
}

fn w_norm(w: &[f64]) -> f64 {
    w.iter().sum()
}

/// A deliberately unoptimized fuzzy ART module.
#[derive(Debug, Clone)]
struct NaiveFuzzyArt {
    params: NaiveArtParams,
    raw_dim: usize,
    weights: Vec<Vec<f64>>,
}

impl NaiveFuzzyArt {
    fn new(raw_dim: usize, params: NaiveArtParams) -> Self {
        NaiveFuzzyArt {
            params,
            raw_dim,
            weights: Vec::new(),
        }
    }

    /// All categories ranked by activation, highest first, ties by index.
    fn ranking(&self, coded: &[f64]) -> Vec<(usize, f64)> {
        let mut scored: Vec<(usize, f64)> = self
            .weights
            .iter()
            .enumerate()
            .map(|(j, w)| (j, min_norm(coded, w) / (self.params.choice + w_norm(w))))
            .collect();
        scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        scored
    }

    fn match_value(&self, coded: &[f64], category: usize) -> f64 {
        min_norm(coded, &self.weights[category]) / self.raw_dim as f64
    }

    fn learn(&mut self, coded: &[f64], category: usize) {
        let beta = self.params.learning_rate;
        let w = &mut self.weights[category];
        for (wi, xi) in w.iter_mut().zip(coded.iter()) {
            *wi = beta * xi.min(*wi) + (1.0 - beta) * *wi;
        }
    }

    fn commit(&mut self, coded: &[f64]) -> usize {
        self.weights.push(coded.to_vec());
        self.weights.len() - 1
    }

    /// One unsupervised presentation: scan the ranking for the first
    /// category that passes vigilance, learn it, or commit a new one.
    fn train_step(&mut self, coded: &[f64]) -> usize {
        for (category, _) in self.ranking(coded) {
            if self.match_value(coded, category) >= self.params.vigilance - VIGILANCE_SLACK {
                self.learn(coded, category);
                return category;
            }
        }
        self.commit(coded)
    }

    /// Highest-activation committed category, vigilance ignored.
    fn classify(&self, coded: &[f64]) -> usize {
        self.ranking(coded)[0].0
    }
}

/// One supervised presentation against a crisp child->parent map with match
/// tracking: a category whose stored parent disagrees is suppressed and the
/// working vigilance is raised just past its match value.
fn naive_supervised_step(
    art: &mut NaiveFuzzyArt,
    map: &mut Vec<(usize, usize)>,
    coded: &[f64],
    parent: usize,
    epsilon: f64,
) -> usize {
    let mut vigilance = art.params.vigilance;
    let mut suppressed: Vec<usize> = Vec::new();
    loop {
        let mut resonant = None;
        for (category, _) in art.ranking(coded) {
            if suppressed.contains(&category) {
                continue;
            }
            let m = art.match_value(coded, category);
            if m >= vigilance - VIGILANCE_SLACK {
                resonant = Some((category, m));
                break;
            }
        }
        match resonant {
            Some((category, m)) => {
                let stored = map.iter().find(|(c, _)| *c == category).map(|(_, p)| *p);
                match stored {
                    Some(p) if p != parent => {
                        vigilance = m + epsilon;
                        suppressed.push(category);
                    }
                    _ => {
                        art.learn(coded, category);
                        if stored.is_none() {
                            map.push((category, parent));
                        }
                        return category;
                    }
                }
            }
            None => {
                let category = art.commit(coded);
                map.push((category, parent));
                return category;
            }
        }
    }
}

/// Runs the plain fuzzy ART procedure over `data` (rows in `[0, 1]`) and
/// returns the per-presentation resonant category, single pass.
pub fn oracle_fuzzy_art(data: &[Vec<f64>], params: &NaiveArtParams) -> Vec<usize> {
    let raw_dim = data.first().map_or(0, |r| r.len());
    let mut art = NaiveFuzzyArt::new(raw_dim, params.clone());
    data.iter()
        .map(|row| art.train_step(&complement(row)))
        .collect()
}

/// Runs a vigilance-ordered chain of ART modules over a single data stream:
/// the last module clusters freely, every module below it is trained with
/// the category prescribed one level up. Returns the per-sample category at
/// every level from a final classification pass, leaf level first.
///
/// `vigilances[k]` belongs to module `k + 1`; the last entry is the coarse
/// driver module.
pub fn oracle_smart(
    data: &[Vec<f64>],
    vigilances: &[f64],
    choice: f64,
    learning_rate: f64,
    epsilon: f64,
) -> Vec<Vec<usize>> {
    let raw_dim = data.first().map_or(0, |r| r.len());
    let levels = vigilances.len();
    let mut modules: Vec<NaiveFuzzyArt> = vigilances
        .iter()
        .map(|&vigilance| {
            NaiveFuzzyArt::new(
                raw_dim,
                NaiveArtParams {
                    vigilance,
                    choice,
                    learning_rate,
                },
            )
        })
        .collect();
    let mut maps: Vec<Vec<(usize, usize)>> = vec![Vec::new(); levels.saturating_sub(1)];

    for row in data {
        let coded = complement(row);
        let mut parent = modules[levels - 1].train_step(&coded);
        for k in (0..levels - 1).rev() {
            parent = naive_supervised_step(&mut modules[k], &mut maps[k], &coded, parent, epsilon);
        }
    }

    data.iter()
        .map(|row| {
            let coded = complement(row);
            modules.iter().map(|m| m.classify(&coded)).collect()
        })
        .collect()
}

/// Training trace of a classic two-module ARTMAP with a fast-learning map
/// field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtmapTrace {
    /// Per-sample resonant category on the data (A) side.
    pub a_side: Vec<usize>,
    /// Per-sample resonant category on the label (B) side.
    pub b_side: Vec<usize>,
    /// Final map field contents as sorted `(a_category, b_category)` pairs.
    pub map: Vec<(usize, usize)>,
}

/// Classic ARTMAP, single pass: the B module clusters the label vectors, the
/// A module clusters the data under match tracking against the inter-ART
/// map.
pub fn oracle_artmap(
    data: &[Vec<f64>],
    labels: &[Vec<f64>],
    a_params: &NaiveArtParams,
    b_params: &NaiveArtParams,
    epsilon: f64,
) -> ArtmapTrace {
    assert_eq!(data.len(), labels.len(), "one label row per data row");
    let a_dim = data.first().map_or(0, |r| r.len());
    let b_dim = labels.first().map_or(0, |r| r.len());
    let mut a_side = NaiveFuzzyArt::new(a_dim, a_params.clone());
    let mut b_side = NaiveFuzzyArt::new(b_dim, b_params.clone());
    let mut map: Vec<(usize, usize)> = Vec::new();

    let mut a_trace = Vec::with_capacity(data.len());
    let mut b_trace = Vec::with_capacity(data.len());
    for (row, label) in data.iter().zip(labels.iter()) {
        let b_cat = b_side.train_step(&complement(label));
        let a_cat =
            naive_supervised_step(&mut a_side, &mut map, &complement(row), b_cat, epsilon);
        a_trace.push(a_cat);
        b_trace.push(b_cat);
    }

    map.sort_unstable();
    ArtmapTrace {
        a_side: a_trace,
        b_side: b_trace,
        map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(vigilance: f64) -> NaiveArtParams {
        NaiveArtParams {
            vigilance,
            choice: 1e-3,
            learning_rate: 1.0,
        }
    }

    #[test]
    fn first_sample_commits_category_zero() {
        let labels = oracle_fuzzy_art(&[vec![0.4, 0.6]], &params(0.9));
        assert_eq!(labels, vec![0]);
    }

    #[test]
    fn two_blob_sequence_splits_at_high_vigilance() {
        let data = vec![
            vec![0.1, 0.1],
            vec![0.15, 0.1],
            vec![0.9, 0.9],
            vec![0.85, 0.9],
        ];
        assert_eq!(oracle_fuzzy_art(&data, &params(0.95)), vec![0, 0, 1, 1]);
    }

    #[test]
    fn lenient_vigilance_keeps_one_category() {
        let data = vec![
            vec![0.1, 0.1],
            vec![0.15, 0.1],
            vec![0.9, 0.9],
            vec![0.85, 0.9],
        ];
        assert_eq!(oracle_fuzzy_art(&data, &params(0.0)), vec![0, 0, 0, 0]);
    }

    #[test]
    fn smart_blob_matrix_is_hierarchical() {
        let data = vec![
            vec![0.1, 0.1],
            vec![0.15, 0.1],
            vec![0.9, 0.9],
            vec![0.85, 0.9],
        ];
        // leaf module at 0.95, root module at 0.0
        let matrix = oracle_smart(&data, &[0.95, 0.0], 1e-3, 1.0, 1e-10);
        assert_eq!(
            matrix,
            vec![vec![0, 0], vec![0, 0], vec![1, 0], vec![1, 0]]
        );
    }

    #[test]
    fn single_sample_smart_matrix_is_zero() {
        let matrix = oracle_smart(&[vec![0.3, 0.7]], &[0.9, 0.5], 1e-3, 1.0, 1e-10);
        assert_eq!(matrix, vec![vec![0, 0]]);
    }

    #[test]
    fn artmap_conflict_forces_new_category() {
        // Identical inputs with different labels cannot share an A-side
        // category; match tracking must split them.
        let data = vec![vec![0.5, 0.5], vec![0.5, 0.5]];
        let labels = vec![vec![0.0], vec![1.0]];
        let trace = oracle_artmap(&data, &labels, &params(0.5), &params(0.9), 1e-10);
        assert_eq!(trace.b_side, vec![0, 1]);
        assert_eq!(trace.a_side, vec![0, 1]);
        assert_eq!(trace.map, vec![(0, 0), (1, 1)]);
    }
}
