//! Bases of subspaces of a finite edge space, by Gaussian elimination over GF(2).

use std::collections::{BTreeMap, BTreeSet};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::EdgeId;

#[derive(Debug, Clone)]
struct Row {
    set: EdgeSet,
    combo: BTreeSet<usize>,
}

/// Linearly independent edge sets spanning a subspace of the edge space on `ambient`.
///
/// Alongside the vectors the basis keeps an echelon form keyed by pivot. A row's
/// pivot is its least edge identity, so reduction only ever introduces larger ones.
#[derive(Debug, Clone)]
pub struct Basis {
    vectors: Vec<EdgeSet>,
    ambient: EdgeSet,
    rows: BTreeMap<EdgeId, Row>,
}

impl Basis {
    pub fn empty(ambient: EdgeSet) -> Self {
        Basis {
            vectors: Vec::new(),
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn vectors(&self) -> &[EdgeSet] {
        &self.vectors
    }

    pub fn ambient(&self) -> &EdgeSet {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Reduces `v` against the echelon rows; returns the residue and the basis
    /// indices used.
    fn reduce(&self, v: &EdgeSet) -> (EdgeSet, BTreeSet<usize>) {
        let mut rest = v.clone();
        let mut combo = BTreeSet::new();
        while let Some(p) = rest.first() {
            let Some(row) = self.rows.get(&p) else { break };
            rest.add_assign(&row.set);
            for &i in &row.combo {
                if !combo.remove(&i) {
                    combo.insert(i);
                }
            }
        }
        (rest, combo)
    }

    /// Adds `v` if it is independent of the current vectors. Returns whether it was added.
    fn push(&mut self, v: EdgeSet) -> bool {
        let (rest, mut combo) = self.reduce(&v);
        let Some(pivot) = rest.first() else {
            return false;
        };
        let index = self.vectors.len();
        combo.insert(index);
        self.rows.insert(pivot, Row { set: rest, combo });
        self.vectors.push(v);
        true
    }

    /// Coordinates of `v`: the basis indices whose vectors sum to `v`, or `None`
    /// if `v` lies outside the span.
    pub fn in_span(&self, v: &EdgeSet) -> Option<Vec<usize>> {
        let (rest, combo) = self.reduce(v);
        rest.is_empty().then(|| combo.into_iter().collect())
    }

    pub fn contains(&self, v: &EdgeSet) -> bool {
        self.in_span(v).is_some()
    }

    /// True when both bases span the same subspace.
    pub fn same_span(&self, other: &Basis) -> bool {
        self.dim() == other.dim() && self.vectors.iter().all(|v| other.contains(v))
    }

    /// Sum of the basis vectors selected by `coords`.
    pub fn combine(&self, coords: &[usize]) -> EdgeSet {
        let mut acc = EdgeSet::new();
        for &i in coords {
            acc.add_assign(&self.vectors[i]);
        }
        acc
    }

    /// Span element selected by the bits of `mask` (bit i selects vector i).
    pub fn element(&self, mask: u64) -> EdgeSet {
        let mut acc = EdgeSet::new();
        for (i, v) in self.vectors.iter().enumerate().take(64) {
            if mask >> i & 1 == 1 {
                acc.add_assign(v);
            }
        }
        acc
    }

    /// Basis of the vectors of `ambient` orthogonal to every vector of this basis.
    pub fn orthogonal_complement(&self) -> Basis {
        // Reduced row echelon form: clear each pivot from every other row, largest first.
        let mut rows: BTreeMap<EdgeId, EdgeSet> =
            self.rows.iter().map(|(&p, r)| (p, r.set.clone())).collect();
        let pivots: Vec<EdgeId> = rows.keys().rev().copied().collect();
        for &p in &pivots {
            let pivot_row = rows[&p].clone();
            for (&q, row) in rows.iter_mut() {
                if q != p && row.contains(p) {
                    row.add_assign(&pivot_row);
                }
            }
        }
        let mut complement = Basis::empty(self.ambient.clone());
        for free in self.ambient.iter().filter(|e| !rows.contains_key(e)) {
            let mut v = EdgeSet::singleton(free);
            for (&p, row) in &rows {
                if row.contains(free) {
                    v.insert(p);
                }
            }
            let added = complement.push(v);
            debug_assert!(added);
        }
        complement
    }
}

/// Independent subset of `vectors` spanning the same subspace, keeping the first
/// occurrence of each new direction.
pub fn gaussian_basis<'a, I>(vectors: I, ambient: &EdgeSet) -> Result<Basis>
where
    I: IntoIterator<Item = &'a EdgeSet>,
{
    let mut basis = Basis::empty(ambient.clone());
    for v in vectors {
        if let Some(e) = v.iter().find(|e| !ambient.contains(*e)) {
            return Err(Error::UnknownEdge(e));
        }
        basis.push(v.clone());
    }
    Ok(basis)
}
