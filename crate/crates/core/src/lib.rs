//! Matching covered graphs: perfect matchings, barriers, tight cut
//! decomposition into bricks and braces, and the edge classes of
//! essentially 4-edge-connected cubic bricks.

pub mod brick;
pub mod error;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod tightcut;

pub use error::{Error, Result};
pub use graph::{Cut, EdgeId, Multigraph, Vertex};
