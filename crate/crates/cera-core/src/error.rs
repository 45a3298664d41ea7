//! Error type shared across the crate.

use crate::graph::VertexId;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CeraError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),

    #[error("edge endpoint {0} has no event")]
    MissingEndpoint(VertexId),

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate directed edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),

    #[error("both orientations of {{{0}, {1}}} present; the undirected structure would be ambiguous")]
    OrientationClash(VertexId, VertexId),

    #[error("coordinate dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("non-finite numeric value in {0}")]
    NonFinite(&'static str),

    #[error("admissibility parameter {0} must be positive")]
    NonPositiveParam(&'static str),

    #[error("time grid must be nonempty")]
    EmptyGrid,

    #[error("time grid must be strictly increasing")]
    NonIncreasingGrid,

    #[error("graph has no events")]
    EmptyGraph,

    #[error("graph violates the causal condition on {0} edge(s)")]
    NotCausal(usize),

    #[error("filtration must have at least one level")]
    EmptyFiltration,

    #[error("level {level} out of range (filtration has {max} levels)")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("{instants} instants supplied for {levels} levels")]
    InstantCountMismatch { instants: usize, levels: usize },

    #[error("edge endpoint {0} is not in the declared vertex universe")]
    EndpointOutsideUniverse(VertexId),

    #[error("face vertex {0} is not in the declared vertex set")]
    FaceVertexOutsideUniverse(VertexId),

    #[error("complex at position {0} is not contained in its successor; levels must be increasing")]
    NonMonotoneComplexes(usize),

    #[error("vertex {0} is not mapped by the morphism")]
    UnmappedVertex(VertexId),

    #[error("vertex {0} maps to {1}, which is not a vertex of the target")]
    ImageOutsideTarget(VertexId, VertexId),
}

pub type Result<T> = std::result::Result<T, CeraError>;
