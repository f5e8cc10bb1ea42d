use thiserror::Error;

use crate::bitstring::BitString;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertices {0} and {1} lie in different components")]
    DifferentComponents(usize, usize),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a partial cube")]
    NotPartialCube,

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("embedding is not injective: vertices {0} and {1} share an image")]
    EmbeddingNotInjective(usize, usize),

    #[error("embedding does not preserve edge ({0}, {1})")]
    EmbeddingNotHomomorphism(usize, usize),

    #[error("embedding has {got} entries, expected {expected}")]
    EmbeddingLength { expected: usize, got: usize },

    #[error("bit string length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("bit string length {0} exceeds the supported maximum of 64")]
    LengthTooLarge(usize),

    #[error("invalid bit string {0:?}")]
    InvalidBitString(String),

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("labels are not injective: {0} appears twice")]
    DuplicateLabel(BitString),

    #[error("{labels} labels for {vertices} vertices")]
    LabelCount { labels: usize, vertices: usize },

    #[error("labelling is not proper")]
    NotProper,

    #[error("vertex set is not a downward-closed (<=) subgraph")]
    NotLeqSubgraph,

    #[error("label {0} is not present in the graph")]
    UnknownLabel(BitString),

    #[error("coordinate {coordinate} out of range for labels of length {width}")]
    CoordinateOutOfRange { coordinate: usize, width: usize },

    #[error("coordinate {coordinate} is not tied: {zeros} zeros vs {ones} ones")]
    CoordinateNotTied { coordinate: usize, zeros: usize, ones: usize },

    #[error("theta class index {index} out of range ({count} classes)")]
    ClassOutOfRange { index: usize, count: usize },

    #[error("invalid expansion cover: {0}")]
    InvalidExpansion(crate::expansion::SpecViolation),

    #[error("root vertex {0} is not in the subset")]
    RootNotInSubset(usize),

    #[error("size {size} exceeds the limit of {limit} for {what}")]
    ScaleGuard { what: &'static str, size: usize, limit: usize },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
