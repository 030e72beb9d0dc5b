use thiserror::Error;

use crate::graph::VertexId;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is not negative definite")]
    NotNegativeDefinite,
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex {0} is not contractible")]
    NotContractible(VertexId),
    #[error("linear system has no positive integral solution")]
    NonIntegralSolution,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("invalid Newton pairs: {0}")]
    InvalidNewtonPairs(String),
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("invalid continued-fraction expansion")]
    InvalidExpansion,
    #[error("operation requires at least two Newton pairs")]
    RequiresSGe2,
    #[error("fewer than two rupture vertices")]
    FewerThanTwoRupture,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
