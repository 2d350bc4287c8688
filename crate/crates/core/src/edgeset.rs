//! Finite edge sets viewed as vectors of the edge space over GF(2).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::EdgeId;

/// A finite set of edge identities.
///
/// Addition is symmetric difference; iteration is in ascending identity order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(edge: EdgeId) -> Self {
        Self(BTreeSet::from([edge]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: EdgeId) -> bool {
        self.0.contains(&edge)
    }

    pub fn insert(&mut self, edge: EdgeId) -> bool {
        self.0.insert(edge)
    }

    pub fn remove(&mut self, edge: EdgeId) -> bool {
        self.0.remove(&edge)
    }

    /// Flips membership of one edge.
    pub fn toggle(&mut self, edge: EdgeId) {
        if !self.0.remove(&edge) {
            self.0.insert(edge);
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<EdgeId> {
        self.0.first().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<EdgeId> {
        &self.0
    }

    /// In-place GF(2) addition.
    pub fn add_assign(&mut self, other: &EdgeSet) {
        for e in other.iter() {
            self.toggle(e);
        }
    }

    /// GF(2) sum of two sets.
    pub fn sum(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn intersection_len(&self, other: &EdgeSet) -> usize {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().filter(|e| large.contains(*e)).count()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    /// Collects identities as a set; repeated identities are kept once.
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[EdgeId; N]> for EdgeSet {
    fn from(edges: [EdgeId; N]) -> Self {
        edges.into_iter().collect()
    }
}

impl From<BTreeSet<EdgeId>> for EdgeSet {
    fn from(edges: BTreeSet<EdgeId>) -> Self {
        EdgeSet(edges)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = EdgeId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, EdgeId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// GF(2) sum of a finite family of edge sets.
pub fn symmetric_sum<'a, I>(sets: I) -> EdgeSet
where
    I: IntoIterator<Item = &'a EdgeSet>,
{
    let mut acc = EdgeSet::new();
    for s in sets {
        acc.add_assign(s);
    }
    acc
}

/// Two finite edge sets are orthogonal when they share an even number of edges.
pub fn is_orthogonal(d: &EdgeSet, f: &EdgeSet) -> bool {
    d.intersection_len(f).is_multiple_of(2)
}
