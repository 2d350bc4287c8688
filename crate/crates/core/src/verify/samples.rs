//! Window-scale samples of minimal elements.

use std::collections::BTreeSet;

use crate::edgeset::EdgeSet;
use crate::graph::{MultiGraph, VertexSet};
use crate::infinite::Window;
use crate::VertexId;

/// All connected vertex sets of size `1..=max_size` inside `allowed`, sorted.
pub fn connected_subsets(g: &MultiGraph, allowed: &VertexSet, max_size: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = Vec::new();
    let mut level: BTreeSet<Vec<VertexId>> = allowed.iter().map(|&v| vec![v]).collect();
    for _ in 0..max_size {
        let mut next = BTreeSet::new();
        for s in &level {
            for &v in s {
                for &(_, u) in g.neighbors(v) {
                    if allowed.contains(&u) && s.binary_search(&u).is_err() {
                        let mut t = s.clone();
                        let at = t.binary_search(&u).unwrap_err();
                        t.insert(at, u);
                        next.insert(t);
                    }
                }
            }
        }
        all.extend(
            level
                .iter()
                .map(|s| s.iter().copied().collect::<VertexSet>()),
        );
        level = next;
    }
    all.sort();
    all
}

/// Cuts `E(A, V∖A)` with `A` connected, strictly interior and `|A| <= max_size`,
/// such that the cut is a bond of the infinite graph.
///
/// The other side is connected in the infinite graph when every component of the
/// window minus `A` reaches the boundary. That step assumes the graph minus the
/// inner ball is connected, which holds for every catalogued generator.
pub fn interior_bonds(w: &Window, max_size: usize) -> Vec<(VertexSet, EdgeSet)> {
    let g = &w.graph;
    connected_subsets(g, &g.interior(), max_size)
        .into_iter()
        .filter(|a| {
            g.components_avoiding(a, &EdgeSet::new())
                .iter()
                .all(|c| c.iter().any(|v| g.is_boundary(*v)))
        })
        .map(|a| {
            let f = g.cut_from_bipartition(&a);
            (a, f)
        })
        .collect()
}

/// Edges of the walk through `vertices`, taking the least edge between each
/// consecutive pair.
pub fn walk_edges(g: &MultiGraph, vertices: &[VertexId]) -> EdgeSet {
    vertices
        .windows(2)
        .map(|p| {
            g.neighbors(p[0])
                .iter()
                .find(|(_, w)| *w == p[1])
                .map(|(e, _)| *e)
                .expect("consecutive walk vertices are adjacent")
        })
        .collect()
}
