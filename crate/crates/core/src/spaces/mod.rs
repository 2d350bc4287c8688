//! The six cycle and cut spaces on finite multigraphs and windows.
//!
//! On a finite graph `C_fin = C_top = C_alg` and `B = B_fin = B_sk`. The tags
//! stay distinct so that callers can name the space they mean; certificates
//! report when a tag was evaluated through its finite collapse.

mod decompose;
mod enumerate;
mod membership;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::{gaussian_basis, Basis};
use crate::edgeset::EdgeSet;
use crate::error::Result;
use crate::graph::{MultiGraph, VertexSet};

pub use decompose::{
    decompose_cut_into_bonds, decompose_even_set_into_circuits,
    decompose_into_circuits_and_double_rays, peel_minimal_decomposition, Decomposition, Part,
    PartKind,
};
pub use enumerate::{circuits_up_to_length, enumerate_bonds, enumerate_circuits};
pub use membership::{membership, Certificate, Membership};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpaceTag {
    #[serde(rename = "C_fin")]
    CFin,
    #[serde(rename = "C_top")]
    CTop,
    #[serde(rename = "C_alg")]
    CAlg,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "B_fin")]
    BFin,
    #[serde(rename = "B_sk")]
    BSk,
}

impl SpaceTag {
    pub const ALL: [SpaceTag; 6] = [
        SpaceTag::CFin,
        SpaceTag::CTop,
        SpaceTag::CAlg,
        SpaceTag::B,
        SpaceTag::BFin,
        SpaceTag::BSk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceTag::CFin => "C_fin",
            SpaceTag::CTop => "C_top",
            SpaceTag::CAlg => "C_alg",
            SpaceTag::B => "B",
            SpaceTag::BFin => "B_fin",
            SpaceTag::BSk => "B_sk",
        }
    }

    pub fn is_cycle_space(self) -> bool {
        matches!(self, SpaceTag::CFin | SpaceTag::CTop | SpaceTag::CAlg)
    }

    /// The tag this space coincides with on a finite graph.
    pub fn finite_collapse(self) -> SpaceTag {
        if self.is_cycle_space() {
            SpaceTag::CFin
        } else {
            SpaceTag::B
        }
    }

    /// The orthogonal partner: `C_top ↔ B_fin`, `C_alg ↔ B_sk`, `C_fin ↔ B`.
    pub fn dual(self) -> SpaceTag {
        match self {
            SpaceTag::CTop => SpaceTag::BFin,
            SpaceTag::BFin => SpaceTag::CTop,
            SpaceTag::CAlg => SpaceTag::BSk,
            SpaceTag::BSk => SpaceTag::CAlg,
            SpaceTag::CFin => SpaceTag::B,
            SpaceTag::B => SpaceTag::CFin,
        }
    }
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SpaceTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = SpaceTag::ALL.iter().map(|t| t.name()).collect();
                format!("unknown space '{s}', expected one of {}", names.join(", "))
            })
    }
}

/// Fundamental circuits of the breadth-first spanning tree; dimension `|E| - |V| + 1`.
pub fn cycle_space_basis(g: &MultiGraph) -> Result<Basis> {
    g.require_connected()?;
    Ok(forest_bases(g).0)
}

/// Fundamental cuts of the same spanning tree; dimension `|V| - 1`.
pub fn cut_space_basis(g: &MultiGraph) -> Result<Basis> {
    g.require_connected()?;
    Ok(forest_bases(g).1)
}

/// Cycle and cut space bases of a possibly disconnected graph, from a spanning
/// forest built component by component.
pub(crate) fn forest_bases(g: &MultiGraph) -> (Basis, Basis) {
    let ambient = g.edge_set();
    let mut circuits = Vec::new();
    let mut cuts = Vec::new();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let tree = sub.spanning_tree().expect("component is connected");
        for chord in tree.chords(&sub) {
            circuits.push(sub.fundamental_circuit(&tree, chord).expect("chord"));
        }
        for t in tree.edges.iter() {
            cuts.push(sub.fundamental_cut(&tree, t).expect("tree edge"));
        }
    }
    let cycle = gaussian_basis(&circuits, &ambient).expect("edges inside ambient");
    let cut = gaussian_basis(&cuts, &ambient).expect("edges inside ambient");
    (cycle, cut)
}

/// The star of `v`: all edges at `v`.
pub fn star(g: &MultiGraph, v: crate::VertexId) -> EdgeSet {
    g.cut_from_bipartition(&VertexSet::from([v]))
}
