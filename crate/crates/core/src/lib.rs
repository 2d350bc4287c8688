//! GF(2) edge-space machinery for finite multigraphs and for windows of locally
//! finite infinite graphs.
//!
//! * [`edgeset`] and [`basis`]: edge sets as vectors, bases, spans, complements.
//! * [`graph`] and [`menger`]: multigraphs, cuts, bonds, disjoint paths, fans, linkages.
//! * [`spaces`]: the six cycle and cut spaces, enumeration and decompositions.
//! * [`infinite`]: generator graphs given by neighbour oracles, and their windows.
//! * [`verify`]: experiments producing [`verify::Report`]s.

pub mod basis;
pub mod edgeset;
pub mod error;
pub mod graph;
pub mod infinite;
pub mod menger;
pub mod spaces;
pub mod verify;

pub type VertexId = u64;
pub type EdgeId = u64;

pub use basis::{gaussian_basis, Basis};
pub use edgeset::{is_orthogonal, symmetric_sum, EdgeSet};
pub use error::{Error, Result};
pub use graph::{MultiGraph, SpanningTree, VertexSet};
pub use menger::{DisjointPaths, Fan, Linkage, Search};
pub use spaces::{Decomposition, PartKind, SpaceTag};

/// Environment variable overriding [`Bounds::vertices`].
pub const BOUND_ENV: &str = "EDGESPACE_BOUND";

/// Limits for brute-force enumeration. Exceeding one is an error, never a silent
/// switch to sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Bounds {
    /// Maximum vertex count for exhaustive bond and circuit enumeration.
    pub vertices: usize,
    /// Maximum circuit length when enumerating circuits of windows.
    pub circuit_length: usize,
    /// Maximum size of the finite side when enumerating interior cuts of windows.
    pub side_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            vertices: 12,
            circuit_length: 16,
            side_size: 4,
        }
    }
}

impl Bounds {
    /// Defaults, with the vertex bound read from `EDGESPACE_BOUND` when set.
    pub fn from_env() -> std::result::Result<Self, String> {
        let mut b = Bounds::default();
        if let Ok(raw) = std::env::var(BOUND_ENV) {
            b.vertices = raw
                .trim()
                .parse()
                .map_err(|_| format!("{BOUND_ENV} must be a non-negative integer, got '{raw}'"))?;
        }
        Ok(b)
    }
}
