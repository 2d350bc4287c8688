use thiserror::Error;

use crate::{EdgeId, VertexId};

/// Errors raised by graph construction, space builders and experiments.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} uses undeclared vertex {vertex}")]
    UnknownEndpoint { edge: EdgeId, vertex: VertexId },
    #[error("duplicate edge identity {0}")]
    DuplicateEdge(EdgeId),
    #[error("unknown edge identity {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("graph is disconnected: vertex {0} is not reachable from the least vertex")]
    Disconnected(VertexId),
    #[error("brute-force bound exceeded: {what} is {actual}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        bound: usize,
    },
    #[error("empty {0} endpoint set")]
    EmptyEndpoints(&'static str),
    #[error("forbidden vertex {0} is also an endpoint")]
    ForbiddenEndpoint(VertexId),
    #[error("edge set is not in {space}: {reason}")]
    NotInSpace { space: String, reason: String },
    #[error("edge set is not a cut of the graph")]
    NotACut,
    #[error("interior vertex {0} has odd degree in the edge set")]
    OddInteriorVertex(VertexId),
    #[error("{0}")]
    Generator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
