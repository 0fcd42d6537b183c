//! Exact counting of maximal independent sets and maximal induced bipartite
//! subgraphs on small graphs, evaluators for the classical and η-refined
//! bounds, and executable checks of the K4-free decomposition argument.

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod mibs;
pub mod mis;
pub mod pipeline;
pub mod report;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;

/// Sets the number of worker threads used by parallel sections. Call once,
/// before any parallel work; `0` keeps the default of one per core.
#[cfg(feature = "parallel")]
pub fn configure_workers(workers: usize) -> Result<()> {
    if workers == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| Error::OutOfRange(format!("worker pool: {e}")))
}

/// Without the `parallel` feature everything runs on the calling thread.
#[cfg(not(feature = "parallel"))]
pub fn configure_workers(_workers: usize) -> Result<()> {
    Ok(())
}
