use alloc::string::String;
use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("sides do not partition the vertex set")]
    NotAPartition,
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(EdgeId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("endpoints must differ")]
    SameEndpoints,
    #[error("infeasible: {0}")]
    Infeasible(&'static str),
    #[error("{what} exceeds ceiling {limit} (got {got})")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph has loops")]
    HasLoops,
    #[error("tangles have different orders")]
    MixedOrders,
    #[error("tree edge {tree_edge} cannot be aligned with the cut")]
    AlignmentFailure { tree_edge: usize },
    #[error("signature did not decrease at iteration {iteration}")]
    SignatureNotDecreasing { iteration: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn capacity(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::Capacity { what, limit, got })
    } else {
        Ok(())
    }
}
