//! Decompositions into minimal elements: circuits, bonds and boundary paths.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{forest_bases, SpaceTag};
use crate::edgeset::{symmetric_sum, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexSet};
use crate::{EdgeId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    Circuit,
    Bond,
    /// A path between two boundary vertices of a window.
    DoubleRayTruncation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part {
    pub kind: PartKind,
    pub edges: EdgeSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> EdgeSet {
        symmetric_sum(self.parts.iter().map(|p| &p.edges))
    }

    pub fn union(&self) -> EdgeSet {
        self.parts
            .iter()
            .fold(EdgeSet::new(), |acc, p| acc.union(&p.edges))
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        let total: usize = self.parts.iter().map(|p| p.edges.len()).sum();
        total == self.union().len()
    }
}

/// Shortest path from `from` to the first vertex accepted by `stop`, using only
/// edges of `allowed` except `skip`. Ties go to the least edge identity.
fn bfs_path<F>(
    g: &MultiGraph,
    from: VertexId,
    allowed: &EdgeSet,
    skip: Option<EdgeId>,
    stop: F,
) -> Option<EdgeSet>
where
    F: Fn(VertexId) -> bool,
{
    let mut back: BTreeMap<VertexId, (EdgeId, VertexId)> = BTreeMap::new();
    let mut seen = VertexSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x != from && stop(x) {
            let mut path = EdgeSet::new();
            let mut cur = x;
            while cur != from {
                let (e, prev) = back[&cur];
                path.insert(e);
                cur = prev;
            }
            return Some(path);
        }
        for &(e, w) in g.neighbors(x) {
            if Some(e) == skip || !allowed.contains(e) {
                continue;
            }
            if seen.insert(w) {
                back.insert(w, (e, x));
                queue.push_back(w);
            }
        }
    }
    None
}

/// A circuit inside the even set `rest` through its least edge.
fn circuit_through_least(g: &MultiGraph, rest: &EdgeSet) -> EdgeSet {
    let e = rest.first().expect("nonempty remainder");
    let (u, v) = g.endpoints(e).expect("edge of the graph");
    // In an even set no edge is a bridge, so u is reachable from v without e.
    let mut circuit = bfs_path(g, v, rest, Some(e), |x| x == u).expect("even set has no bridge");
    circuit.insert(e);
    circuit
}

/// A bond inside the cut `rest` through its least edge.
///
/// With `e = ab` least, `C` the component of `G - rest` at `a` and `K` the
/// component of `G - C` at `b`, the edges between `K` and `C` form a bond.
fn bond_through_least(g: &MultiGraph, rest: &EdgeSet) -> EdgeSet {
    let e = rest.first().expect("nonempty remainder");
    let (a, b) = g.endpoints(e).expect("edge of the graph");
    let c = g.reach(a, &VertexSet::new(), rest);
    let k = g.reach(b, &c, &EdgeSet::new());
    g.cut_from_bipartition(&k)
}

fn require_even(g: &MultiGraph, d: &EdgeSet, boundary_ok: bool) -> Result<()> {
    g.check_edges(d)?;
    match g
        .odd_vertices(d)
        .into_iter()
        .find(|v| !(boundary_ok && g.is_boundary(*v)))
    {
        Some(v) => Err(Error::OddInteriorVertex(v)),
        None => Ok(()),
    }
}

/// Writes `f` as a sum of minimal nonzero elements of `C_fin` (circuits) or `B`
/// (bonds), peeling one minimal element out of the remainder per step.
///
/// Each peeled element lies inside the remainder, so the parts come out pairwise
/// disjoint and the loop runs at most `|f|` times.
pub fn peel_minimal_decomposition(
    space: SpaceTag,
    g: &MultiGraph,
    f: &EdgeSet,
) -> Result<Decomposition> {
    g.check_edges(f)?;
    let (cycles, cuts) = forest_bases(g);
    let (basis, kind) = match space {
        SpaceTag::CFin => (cycles, PartKind::Circuit),
        SpaceTag::B => (cuts, PartKind::Bond),
        other => {
            return Err(Error::InvalidParameter(format!(
                "peeling is defined for C_fin and B, not {other}"
            )))
        }
    };
    if basis.in_span(f).is_none() {
        return Err(Error::NotInSpace {
            space: space.to_string(),
            reason: "edge set is outside the span of the space basis".into(),
        });
    }
    let mut rest = f.clone();
    let mut parts = Vec::new();
    while !rest.is_empty() {
        let minimal = match kind {
            PartKind::Circuit => circuit_through_least(g, &rest),
            _ => bond_through_least(g, &rest),
        };
        debug_assert!(minimal.is_subset(&rest));
        rest.add_assign(&minimal);
        parts.push(Part {
            kind,
            edges: minimal,
        });
    }
    Ok(Decomposition { parts })
}

/// Splits a cut into pairwise disjoint bonds.
pub fn decompose_cut_into_bonds(g: &MultiGraph, f: &EdgeSet) -> Result<Decomposition> {
    g.check_edges(f)?;
    if !g.is_cut(f) {
        return Err(Error::NotACut);
    }
    let mut rest = f.clone();
    let mut parts = Vec::new();
    while !rest.is_empty() {
        let bond = bond_through_least(g, &rest);
        rest = rest.difference(&bond);
        parts.push(Part {
            kind: PartKind::Bond,
            edges: bond,
        });
    }
    Ok(Decomposition { parts })
}

/// Splits a set with all degrees even into pairwise disjoint circuits, each
/// through the least edge not yet used.
pub fn decompose_even_set_into_circuits(g: &MultiGraph, d: &EdgeSet) -> Result<Decomposition> {
    require_even(g, d, false)?;
    Ok(Decomposition {
        parts: circuits_of_even(g, d.clone()),
    })
}

fn circuits_of_even(g: &MultiGraph, mut rest: EdgeSet) -> Vec<Part> {
    let mut parts = Vec::new();
    while !rest.is_empty() {
        let c = circuit_through_least(g, &rest);
        rest = rest.difference(&c);
        parts.push(Part {
            kind: PartKind::Circuit,
            edges: c,
        });
    }
    parts
}

/// Splits `d` into disjoint circuits and boundary-to-boundary paths. Interior
/// vertices must have even degree in `d`; boundary vertices may be odd.
///
/// Paths are peeled first: from the least odd vertex to the nearest other odd
/// vertex. What remains is even everywhere.
pub fn decompose_into_circuits_and_double_rays(
    w: &MultiGraph,
    d: &EdgeSet,
) -> Result<Decomposition> {
    require_even(w, d, true)?;
    let mut rest = d.clone();
    let mut parts = Vec::new();
    loop {
        let odd = w.odd_vertices(&rest);
        let Some(&start) = odd.first() else { break };
        let is_odd = |x: VertexId| odd.binary_search(&x).is_ok();
        let path = bfs_path(w, start, &rest, None, is_odd)
            .expect("odd vertices pair up within each component");
        rest = rest.difference(&path);
        parts.push(Part {
            kind: PartKind::DoubleRayTruncation,
            edges: path,
        });
    }
    parts.extend(circuits_of_even(w, rest));
    Ok(Decomposition { parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::spaces::enumerate_circuits;
    use crate::Bounds;

    #[test]
    fn empty_decompositions() {
        let k4 = complete(4);
        assert!(
            peel_minimal_decomposition(SpaceTag::CFin, &k4, &EdgeSet::new())
                .unwrap()
                .is_empty()
        );
        assert!(decompose_cut_into_bonds(&k4, &EdgeSet::new())
            .unwrap()
            .is_empty());
        assert!(decompose_even_set_into_circuits(&k4, &EdgeSet::new())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn peel_four_circuit_in_k4() {
        let k4 = complete(4);
        let f = EdgeSet::from([12, 23, 34, 14]);
        let dec = peel_minimal_decomposition(SpaceTag::CFin, &k4, &f).unwrap();
        assert_eq!(dec.sum(), f);
        let circuits = enumerate_circuits(&k4, &Bounds::default()).unwrap();
        assert!(dec.parts.iter().all(|p| circuits.contains(&p.edges)));
    }

    #[test]
    fn peel_c4_cut_into_two_stars() {
        let c4 = cycle(4);
        let f = c4.edge_set();
        let dec = peel_minimal_decomposition(SpaceTag::B, &c4, &f).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec.sum(), f);
        assert!(dec.parts.iter().all(|p| c4.is_bond(&p.edges)));
    }

    #[test]
    fn peel_rejects_outside_elements() {
        let k4 = complete(4);
        let err =
            peel_minimal_decomposition(SpaceTag::CFin, &k4, &EdgeSet::from([12])).unwrap_err();
        assert!(matches!(err, Error::NotInSpace { .. }));
        assert!(peel_minimal_decomposition(SpaceTag::CAlg, &k4, &EdgeSet::new()).is_err());
    }

    #[test]
    fn bond_is_its_own_decomposition() {
        let k4 = complete(4);
        let star = k4.cut_from_bipartition(&VertexSet::from([1]));
        let dec = decompose_cut_into_bonds(&k4, &star).unwrap();
        assert_eq!(dec.parts.len(), 1);
        assert_eq!(dec.parts[0].edges, star);
    }

    #[test]
    fn c4_alternating_cut_splits_into_two_bonds() {
        let c4 = cycle(4);
        let f = c4.cut_from_bipartition(&VertexSet::from([1, 3]));
        let dec = decompose_cut_into_bonds(&c4, &f).unwrap();
        let parts: Vec<_> = dec.parts.iter().map(|p| p.edges.clone()).collect();
        assert_eq!(
            parts,
            vec![EdgeSet::from([12, 41]), EdgeSet::from([23, 34])]
        );
        assert!(dec.is_pairwise_disjoint());
        assert!(decompose_cut_into_bonds(&c4, &EdgeSet::from([12])).is_err());
    }

    #[test]
    fn two_triangles_at_a_vertex() {
        let g = triangle_pair();
        let dec = decompose_even_set_into_circuits(&g, &g.edge_set()).unwrap();
        let parts: Vec<_> = dec.parts.iter().map(|p| p.edges.clone()).collect();
        assert_eq!(
            parts,
            vec![EdgeSet::from([1, 2, 3]), EdgeSet::from([4, 5, 6])]
        );
    }

    #[test]
    fn circuit_is_its_own_decomposition() {
        let k4 = complete(4);
        let c = EdgeSet::from([12, 23, 34, 14]);
        let dec = decompose_even_set_into_circuits(&k4, &c).unwrap();
        assert_eq!(dec.parts.len(), 1);
        assert_eq!(dec.parts[0].edges, c);
        assert_eq!(
            decompose_even_set_into_circuits(&k4, &EdgeSet::from([12])).unwrap_err(),
            Error::OddInteriorVertex(1)
        );
    }

    #[test]
    fn finite_graph_reduces_to_circuits() {
        let g = triangle_pair();
        let a = decompose_into_circuits_and_double_rays(&g, &g.edge_set()).unwrap();
        let b = decompose_even_set_into_circuits(&g, &g.edge_set()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn circuit_plus_boundary_path() {
        // triangle 1-2-3 and a path 4-5-6 whose ends are boundary vertices
        let g = MultiGraph::new(
            1..=6,
            [
                (1, 1, 2),
                (2, 2, 3),
                (3, 1, 3),
                (4, 3, 4),
                (5, 4, 5),
                (6, 5, 6),
            ],
        )
        .unwrap()
        .with_boundary([4, 6])
        .unwrap();
        let d = EdgeSet::from([1, 2, 3, 5, 6]);
        let dec = decompose_into_circuits_and_double_rays(&g, &d).unwrap();
        assert_eq!(dec.parts.len(), 2);
        assert_eq!(
            dec.parts[0],
            Part {
                kind: PartKind::DoubleRayTruncation,
                edges: EdgeSet::from([5, 6])
            }
        );
        assert_eq!(
            dec.parts[1],
            Part {
                kind: PartKind::Circuit,
                edges: EdgeSet::from([1, 2, 3])
            }
        );
        // odd interior vertex 3
        assert!(decompose_into_circuits_and_double_rays(&g, &EdgeSet::from([4])).is_err());
    }
}
