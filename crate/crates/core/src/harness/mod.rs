//! Corpus generation, catalog fact checks and theorem verification sweeps.

mod analyze;
mod facts;
mod generate;
mod verify;

pub use analyze::{analyze, Analysis, Verdict};
pub use facts::{check_facts, FactCheck};
pub use generate::{
    all_connected_graphs, cubic_by_pairings, generate_cubic, random_graph,
    random_matching_covered, MAX_CUBIC_ORDER,
};
pub use verify::{
    verify_theorem, Corpus, Dedup, GraphRecord, GraphStatus, TheoremId, TheoremReport,
    VerifyOptions, Witness,
};
