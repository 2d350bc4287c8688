use serde::Serialize;

use super::{forest_bases, star, SpaceTag};
use crate::edgeset::{is_orthogonal, EdgeSet};
use crate::error::Result;
use crate::graph::{MultiGraph, VertexSet};
use crate::VertexId;

/// Why an edge set is, or is not, in a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum Certificate {
    /// Basis indices summing to the set.
    Coordinates { indices: Vec<usize> },
    /// Every checked vertex has even degree in the set.
    EvenDegrees { checked: usize },
    /// A side whose cut is the set.
    CutSide { side: VertexSet },
    /// A vertex of odd degree; its star meets the set oddly.
    OddVertex { vertex: VertexId, star: EdgeSet },
    /// A circuit meeting the set oddly, so the set is not a cut.
    OddCircuit { circuit: EdgeSet },
    /// The set is a cut, but every side of it reaches the window boundary.
    SideTouchesBoundary { side: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub space: SpaceTag,
    pub member: bool,
    pub certificate: Certificate,
    /// Set when the tag was evaluated through a collapse or a window approximation.
    pub note: Option<String>,
}

/// Decides membership of `d` in `space` on a finite graph or a window.
///
/// A graph without boundary marks is treated as finite and every tag collapses
/// to `C_fin` or `B`. On a window, `C_alg` and `C_top` only constrain interior
/// vertices: the cuts with a finite side strictly inside the interior are spanned
/// by interior stars, so both reduce to interior parity.
pub fn membership(space: SpaceTag, g: &MultiGraph, d: &EdgeSet) -> Result<Membership> {
    g.check_edges(d)?;
    let window = !g.boundary().is_empty();
    let (cycles, cuts) = forest_bases(g);
    let odd_witness = |only_interior: bool| {
        g.odd_vertices(d)
            .into_iter()
            .find(|v| !(only_interior && g.is_boundary(*v)))
            .map(|v| Certificate::OddVertex {
                vertex: v,
                star: star(g, v),
            })
    };
    let odd_circuit = || {
        cycles
            .vectors()
            .iter()
            .find(|c| !is_orthogonal(c, d))
            .map(|c| Certificate::OddCircuit { circuit: c.clone() })
            .expect("a non-cut meets some fundamental circuit oddly")
    };
    let (member, certificate) = match (space, window) {
        (SpaceTag::CAlg | SpaceTag::CTop, true) => match odd_witness(true) {
            Some(c) => (false, c),
            None => (
                true,
                Certificate::EvenDegrees {
                    checked: g.interior().len(),
                },
            ),
        },
        (SpaceTag::CAlg, false) => match odd_witness(false) {
            Some(c) => (false, c),
            None => (
                true,
                Certificate::EvenDegrees {
                    checked: g.vertex_count(),
                },
            ),
        },
        (SpaceTag::CFin | SpaceTag::CTop, _) => match cycles.in_span(d) {
            Some(indices) => (true, Certificate::Coordinates { indices }),
            None => (
                false,
                odd_witness(false).expect("outside the cycle space means an odd vertex"),
            ),
        },
        (SpaceTag::BSk, true) => match g.cut_side(d) {
            None => (false, odd_circuit()),
            Some(side) => match interior_side(g, &side) {
                Some(side) => (true, Certificate::CutSide { side }),
                None => (false, Certificate::SideTouchesBoundary { side }),
            },
        },
        (SpaceTag::B | SpaceTag::BFin | SpaceTag::BSk, _) => match cuts.in_span(d) {
            Some(indices) => (true, Certificate::Coordinates { indices }),
            None => (false, odd_circuit()),
        },
    };
    let note = {
        let collapsed = space.finite_collapse();
        if !window && collapsed != space {
            Some(format!("finite graph: {space} coincides with {collapsed}"))
        } else if window && matches!(space, SpaceTag::CTop) {
            Some("window approximation: orthogonality to cuts with a finite side inside the interior".into())
        } else if window && matches!(space, SpaceTag::BFin | SpaceTag::B) {
            Some("window approximation: cut of the window".into())
        } else {
            None
        }
    };
    Ok(Membership {
        space,
        member,
        certificate,
        note,
    })
}

/// Flips the side component by component so that it avoids the boundary, if possible.
fn interior_side(g: &MultiGraph, side: &VertexSet) -> Option<VertexSet> {
    let mut out = VertexSet::new();
    for comp in g.components() {
        let here: VertexSet = comp.intersection(side).copied().collect();
        let there: VertexSet = comp.difference(side).copied().collect();
        let pick = [here, there]
            .into_iter()
            .find(|s| s.iter().all(|v| !g.is_boundary(*v)))?;
        out.extend(pick);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn empty_set_is_in_every_space() {
        let k4 = complete(4);
        for t in SpaceTag::ALL {
            assert!(membership(t, &k4, &EdgeSet::new()).unwrap().member);
        }
    }

    #[test]
    fn single_edge_is_not_in_c_alg() {
        let k4 = complete(4);
        let m = membership(SpaceTag::CAlg, &k4, &EdgeSet::from([12])).unwrap();
        assert!(!m.member);
        assert!(matches!(
            m.certificate,
            Certificate::OddVertex { vertex: 1, .. }
        ));
    }

    #[test]
    fn four_circuit_has_coordinates() {
        let k4 = complete(4);
        let (cycles, _) = forest_bases(&k4);
        let c = EdgeSet::from([12, 23, 34, 14]);
        let m = membership(SpaceTag::CFin, &k4, &c).unwrap();
        assert!(m.member);
        match m.certificate {
            Certificate::Coordinates { indices } => assert_eq!(cycles.combine(&indices), c),
            other => panic!("unexpected {other:?}"),
        }
        let m = membership(SpaceTag::CTop, &k4, &c).unwrap();
        assert_eq!(
            m.note.as_deref(),
            Some("finite graph: C_top coincides with C_fin")
        );
    }

    #[test]
    fn non_cut_gets_odd_circuit() {
        let c4 = cycle(4);
        let m = membership(SpaceTag::B, &c4, &EdgeSet::from([12])).unwrap();
        assert!(!m.member);
        match m.certificate {
            Certificate::OddCircuit { circuit } => {
                assert!(!is_orthogonal(&circuit, &EdgeSet::from([12])))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn window_semantics_skip_boundary() {
        // path 1-2-3 with both ends on the boundary
        let w = path(3).with_boundary([1, 3]).unwrap();
        let d = w.edge_set();
        assert!(membership(SpaceTag::CAlg, &w, &d).unwrap().member);
        assert!(membership(SpaceTag::CTop, &w, &d).unwrap().member);
        assert!(!membership(SpaceTag::CFin, &w, &d).unwrap().member);
        // star of the interior vertex 2 is a skew cut; star of 1 is not
        assert!(membership(SpaceTag::BSk, &w, &d).unwrap().member);
        let m = membership(SpaceTag::BSk, &w, &EdgeSet::from([1])).unwrap();
        assert!(!m.member);
    }
}
