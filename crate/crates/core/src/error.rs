use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

/// Which quadrant of two cuts turned out empty when an uncrossing was requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    /// `X ∩ Y`
    InIn,
    /// `X ∩ Ȳ`
    InOut,
    /// `X̄ ∩ Y`
    OutIn,
    /// `X̄ ∩ Ȳ`
    OutOut,
}

impl std::fmt::Display for Quadrant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Quadrant::InIn => "X∩Y",
            Quadrant::InOut => "X∩Ȳ",
            Quadrant::OutIn => "X̄∩Y",
            Quadrant::OutOut => "X̄∩Ȳ",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid graph JSON: {0}")]
    Json(String),

    #[error("edge {0:?} would be a loop")]
    Loop(Vertex),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("shore must be a nonempty proper subset of the live vertices")]
    ImproperShore,

    #[error("shore has even cardinality {0}; tight cuts need odd shores")]
    EvenShore(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has odd order {0}")]
    OddOrder(usize),

    #[error("graph is not matching covered")]
    NotMatchingCovered,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not cubic")]
    NotCubic,

    #[error("graph is not a brick")]
    NotBrick,

    #[error("graph is not a cubic brick")]
    NotCubicBrick,

    #[error("graph is not an essentially 4-edge-connected cubic brick")]
    NotEfecCubicBrick,

    #[error("edge {0} is inadmissible, dependence is undefined")]
    InadmissibleEdge(EdgeId),

    #[error("edges must be distinct")]
    SameEdge,

    #[error("vertices must be distinct")]
    SameVertex,

    #[error("barrier must be nonempty")]
    EmptyBarrier,

    #[error("vertex set is not a barrier")]
    NotBarrier,

    #[error("{{{0}, {1}}} is not a 2-vertex-cut")]
    NotTwoVertexCut(Vertex, Vertex),

    #[error("{{{0}, {1}}} leaves an odd component")]
    HasOddComponent(Vertex, Vertex),

    #[error("cuts are laminar: {0} is empty")]
    Laminar(Quadrant),

    #[error("cut is not tight")]
    NotTight,

    #[error("edge {0} is not removable")]
    NotRemovable(EdgeId),

    #[error("edge {0} is not quasi-b-invariant")]
    NotQuasiBInvariant(EdgeId),

    #[error("vertex {vertex} has only {count} quasi-b-invariant edges")]
    TooFewQuasiEdges { vertex: Vertex, count: usize },

    #[error("{0} is not an endpoint of the edge")]
    NotAnEndpoint(Vertex),

    #[error("graph has {order} vertices, bound is {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("unknown catalog graph {0:?}")]
    UnknownCatalogName(String),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("cubic generation needs even n in 4..=14, got {0}")]
    GeneratorOrder(usize),

    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("structure check failed: {0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
