//! The inter-ART association table for one layer.
//!
//! With fast learning the classic ARTMAP map field converges to a crisp
//! function from child categories to parent categories, so that is what is
//! stored: a write-once table enforcing the one-to-many mapping from each
//! parent to its children.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{ArtError, Result};

/// Map-field hyper-parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapFieldParams {
    /// Match-tracking increment added to a conflicting category's match
    /// value when raising vigilance. Strictly positive.
    pub epsilon: f64,
}

impl MapFieldParams {
    pub const DEFAULT_EPSILON: f64 = 1e-10;

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return Err(ArtError::InvalidParameter(format!(
                "match-tracking epsilon must be > 0, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }
}

impl Default for MapFieldParams {
    fn default() -> Self {
        MapFieldParams {
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

/// Verdict of checking a proposed child/parent pair against the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The child is unbound, or already bound to this parent.
    Accept,
    /// The child is bound to a different parent; match tracking must fire.
    Conflict,
}

/// Write-once child-category to parent-category association table.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MapField {
    assoc: BTreeMap<usize, usize>,
}

impl MapField {
    pub fn new() -> Self {
        Self::default()
    }

    /// The stored parent of `child`, if any. Read-only.
    pub fn parent_of(&self, child: usize) -> Option<usize> {
        self.assoc.get(&child).copied()
    }

    /// Checks a proposed binding without mutating anything.
    pub fn verify(&self, child: usize, parent: usize) -> Verdict {
        match self.assoc.get(&child) {
            Some(&stored) if stored != parent => Verdict::Conflict,
            _ => Verdict::Accept,
        }
    }

    /// Binds `child` to `parent`. Re-binding to the same parent is a no-op;
    /// re-binding to a different parent is an invariant violation that the
    /// training path makes unreachable.
    pub fn associate(&mut self, child: usize, parent: usize) -> Result<()> {
        match self.assoc.get(&child) {
            Some(&stored) if stored != parent => Err(ArtError::AssociationConflict {
                child,
                stored,
                requested: parent,
            }),
            Some(_) => Ok(()),
            None => {
                self.assoc.insert(child, parent);
                Ok(())
            }
        }
    }

    /// Number of bound children.
    pub fn len(&self) -> usize {
        self.assoc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assoc.is_empty()
    }

    /// All `(child, parent)` pairs in ascending child order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assoc.iter().map(|(&c, &p)| (c, p))
    }

    /// Children bound to `parent`, ascending.
    pub fn children_of(&self, parent: usize) -> Vec<usize> {
        self.assoc
            .iter()
            .filter(|(_, &p)| p == parent)
            .map(|(&c, _)| c)
            .collect()
    }

    /// Distinct parents, ascending.
    pub fn parents(&self) -> Vec<usize> {
        let mut parents: Vec<usize> = self.assoc.values().copied().collect();
        parents.sort_unstable();
        parents.dedup();
        parents
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_map_has_no_parents() {
        let map = MapField::new();
        assert_eq!(map.parent_of(0), None);
        assert_eq!(map.parent_of(17), None);
    }

    #[test]
    fn associate_then_lookup() {
        let mut map = MapField::new();
        map.associate(2, 5).unwrap();
        assert_eq!(map.parent_of(2), Some(5));
        assert_eq!(map.parent_of(3), None);
    }

    #[test]
    fn verify_accepts_unbound_and_matching() {
        let mut map = MapField::new();
        assert_eq!(map.verify(2, 5), Verdict::Accept);
        map.associate(2, 5).unwrap();
        assert_eq!(map.verify(2, 5), Verdict::Accept);
        assert_eq!(map.verify(2, 7), Verdict::Conflict);
    }

    #[test]
    fn reassociation_same_pair_is_noop() {
        let mut map = MapField::new();
        map.associate(0, 0).unwrap();
        map.associate(0, 0).unwrap();
        assert_eq!(map.len(), 1);
    }

    #[test]
    fn rebinding_is_an_error() {
        let mut map = MapField::new();
        map.associate(0, 0).unwrap();
        assert_eq!(
            map.associate(0, 1),
            Err(ArtError::AssociationConflict {
                child: 0,
                stored: 0,
                requested: 1
            })
        );
        assert_eq!(map.parent_of(0), Some(0));
    }

    #[test]
    fn children_partition_by_parent() {
        let mut map = MapField::new();
        map.associate(0, 10).unwrap();
        map.associate(1, 10).unwrap();
        map.associate(2, 20).unwrap();
        assert_eq!(map.children_of(10), vec![0, 1]);
        assert_eq!(map.children_of(20), vec![2]);
        assert_eq!(map.parents(), vec![10, 20]);
    }

    #[test]
    fn epsilon_must_be_positive() {
        assert!(MapFieldParams { epsilon: 0.0 }.validate().is_err());
        assert!(MapFieldParams { epsilon: -1.0 }.validate().is_err());
        assert!(MapFieldParams::default().validate().is_ok());
    }
}
