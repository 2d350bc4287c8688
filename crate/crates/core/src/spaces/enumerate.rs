use std::collections::BTreeSet;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexSet};
use crate::{Bounds, EdgeId, VertexId};

fn check_bound(g: &MultiGraph, bounds: &Bounds) -> Result<()> {
    if g.vertex_count() > bounds.vertices {
        return Err(Error::BoundExceeded {
            what: "vertex count",
            actual: g.vertex_count(),
            bound: bounds.vertices,
        });
    }
    Ok(())
}

/// All bonds, sorted. Within each component, every side containing the
/// component's least vertex is tried and kept when both sides induce connected
/// subgraphs.
pub fn enumerate_bonds(g: &MultiGraph, bounds: &Bounds) -> Result<Vec<EdgeSet>> {
    check_bound(g, bounds)?;
    let mut bonds = BTreeSet::new();
    for comp in g.components() {
        let vs: Vec<VertexId> = comp.iter().copied().collect();
        let rest = &vs[1..];
        for mask in 0u64..(1u64 << rest.len()) {
            let side: VertexSet = std::iter::once(vs[0])
                .chain(
                    rest.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v),
                )
                .collect();
            if side.len() == comp.len() {
                continue;
            }
            let other: VertexSet = comp.difference(&side).copied().collect();
            if g.induces_connected(&side) && g.induces_connected(&other) {
                bonds.insert(g.cut_from_bipartition(&side));
            }
        }
    }
    Ok(bonds.into_iter().collect())
}

/// All circuits (edge sets of cycles, parallel pairs included), sorted.
pub fn enumerate_circuits(g: &MultiGraph, bounds: &Bounds) -> Result<Vec<EdgeSet>> {
    check_bound(g, bounds)?;
    Ok(circuits_up_to_length(g, usize::MAX))
}

/// Circuits with at most `max_len` edges, sorted. Unbounded in vertex count; the
/// length bound is what keeps window-scale enumeration finite.
pub fn circuits_up_to_length(g: &MultiGraph, max_len: usize) -> Vec<EdgeSet> {
    let mut found = BTreeSet::new();
    for &s in g.vertices() {
        let mut on_path = VertexSet::from([s]);
        let mut edges: Vec<EdgeId> = Vec::new();
        extend(g, s, s, max_len, &mut on_path, &mut edges, &mut found);
    }
    found.into_iter().collect()
}

// Cycles are rooted at their least vertex; every other vertex must be larger.
fn extend(
    g: &MultiGraph,
    start: VertexId,
    at: VertexId,
    max_len: usize,
    on_path: &mut VertexSet,
    edges: &mut Vec<EdgeId>,
    found: &mut BTreeSet<EdgeSet>,
) {
    if edges.len() >= max_len {
        return;
    }
    for &(e, w) in g.neighbors(at) {
        if edges.contains(&e) {
            continue;
        }
        if w == start {
            if !edges.is_empty() {
                found.insert(edges.iter().copied().chain(std::iter::once(e)).collect());
            }
            continue;
        }
        if w < start || on_path.contains(&w) {
            continue;
        }
        on_path.insert(w);
        edges.push(e);
        extend(g, start, w, max_len, on_path, edges, found);
        edges.pop();
        on_path.remove(&w);
    }
}
