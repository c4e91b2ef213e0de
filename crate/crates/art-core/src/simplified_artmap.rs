//! One supervised training step for an (ART module, map field) pair with an
//! externally prescribed parent category, using match tracking to steer the
//! search away from categories bound to a different parent.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::fuzzy_art::{FuzzyArtModule, Pattern, SearchOutcome};
use crate::map_field::{MapField, MapFieldParams, Verdict};

/// Raises the working vigilance just past a conflicting category's match
/// value so it can no longer resonate: `min(m + ε, 1 + ε)`. A raise past 1
/// shuts every category out and forces a commit.
pub fn match_tracking_raise(match_value: f64, epsilon: f64) -> f64 {
    (match_value + epsilon).min(1.0 + epsilon)
}

/// Result of one supervised step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepTrace {
    /// The resonant or newly committed child category.
    pub category: usize,
    /// Resonance searches performed; never exceeds `categories_before + 1`.
    pub attempts: usize,
    /// Committed categories before the step ran.
    pub categories_before: usize,
}

/// Trains `art` on `x` under the constraint that the resulting child
/// category is bound to `parent` in `map`.
///
/// Search starts from the module's baseline vigilance with an empty
/// exclusion set. A resonant category whose binding agrees (or is unbound)
/// learns the pattern and is bound; a conflicting one raises the working
/// vigilance via [`match_tracking_raise`] and is excluded from further
/// attempts. When the search exhausts, or the raised vigilance exceeds 1, a
/// fresh category is committed and bound. The module's stored baseline
/// vigilance is never touched.
pub fn supervised_train_step(
    art: &mut FuzzyArtModule,
    map: &mut MapField,
    x: &Pattern,
    parent: usize,
    params: &MapFieldParams,
) -> Result<StepTrace> {
    let categories_before = art.category_count();
    let mut vigilance: Option<f64> = None;
    let mut excluded: BTreeSet<usize> = BTreeSet::new();
    let mut attempts = 0usize;

    let category = loop {
        // A raise past 1 means no category can pass; skip straight to commit.
        if vigilance.is_some_and(|v| v > 1.0) {
            break None;
        }
        attempts += 1;
        debug_assert!(attempts <= categories_before + 1, "runaway search");
        match art.resonance_search(x, vigilance, &excluded)? {
            SearchOutcome::Resonant {
                category,
                match_value,
            } => match map.verify(category, parent) {
                Verdict::Accept => break Some(category),
                Verdict::Conflict => {
                    vigilance = Some(match_tracking_raise(match_value, params.epsilon));
                    excluded.insert(category);
                }
            },
            SearchOutcome::Exhausted => break None,
        }
    };

    let category = match category {
        Some(category) => {
            art.learn(category, x)?;
            category
        }
        None => art.commit_new_category(x)?,
    };
    map.associate(category, parent)?;
    Ok(StepTrace {
        category,
        attempts,
        categories_before,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy_art::FuzzyArtParams;

    fn pattern(raw: &[f64]) -> Pattern {
        Pattern::complement_code(raw).unwrap()
    }

    fn module(rho: f64) -> FuzzyArtModule {
        FuzzyArtModule::new(
            2,
            FuzzyArtParams {
                rho,
                alpha: 0.001,
                beta: 1.0,
            },
        )
        .unwrap()
    }

    #[test]
    fn raise_is_just_past_the_match() {
        assert_eq!(match_tracking_raise(0.975, 1e-10), 0.975 + 1e-10);
        assert_eq!(match_tracking_raise(1.0, 1e-10), 1.0 + 1e-10);
        assert_eq!(match_tracking_raise(0.0, 0.5), 0.5);
    }

    #[test]
    fn empty_module_commits_and_binds() {
        let mut art = module(0.5);
        let mut map = MapField::new();
        let trace = supervised_train_step(
            &mut art,
            &mut map,
            &pattern(&[0.3, 0.4]),
            3,
            &MapFieldParams::default(),
        )
        .unwrap();
        assert_eq!(trace.category, 0);
        assert_eq!(trace.attempts, 1);
        assert_eq!(map.parent_of(0), Some(3));
    }

    #[test]
    fn agreeing_parent_resonates_without_change() {
        let mut art = module(0.5);
        let mut map = MapField::new();
        let x = pattern(&[0.3, 0.4]);
        supervised_train_step(&mut art, &mut map, &x, 3, &MapFieldParams::default()).unwrap();
        let before = art.weights()[0].components().to_vec();
        let trace =
            supervised_train_step(&mut art, &mut map, &x, 3, &MapFieldParams::default()).unwrap();
        assert_eq!(trace.category, 0);
        assert_eq!(art.weights()[0].components(), &before[..]);
        assert_eq!(map.len(), 1);
    }

    #[test]
    fn conflicting_parent_tracks_past_perfect_match() {
        let mut art = module(0.5);
        let mut map = MapField::new();
        let x = pattern(&[0.3, 0.4]);
        supervised_train_step(&mut art, &mut map, &x, 3, &MapFieldParams::default()).unwrap();

        // Same pattern, different parent: the stored category matches at
        // m = 1, so tracking raises vigilance above 1 and a new category is
        // committed.
        let trace =
            supervised_train_step(&mut art, &mut map, &x, 4, &MapFieldParams::default()).unwrap();
        assert_eq!(trace.category, 1);
        assert!(trace.attempts <= trace.categories_before + 1);
        assert_eq!(map.parent_of(0), Some(3));
        assert_eq!(map.parent_of(1), Some(4));
        assert_eq!(art.category_count(), 2);
    }

    #[test]
    fn baseline_vigilance_is_restored() {
        let mut art = module(0.5);
        let mut map = MapField::new();
        let x = pattern(&[0.3, 0.4]);
        supervised_train_step(&mut art, &mut map, &x, 3, &MapFieldParams::default()).unwrap();
        supervised_train_step(&mut art, &mut map, &x, 4, &MapFieldParams::default()).unwrap();
        assert_eq!(art.params().rho, 0.5);
    }
}
