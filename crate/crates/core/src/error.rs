use thiserror::Error;

use crate::graph::MAX_ORDER;

/// Errors raised by parsing, guards and precondition checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("{what} is limited to order {limit}, got {n}")]
    Guard {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("graph is not K4-free: clique {0:?}")]
    NotK4Free([usize; 4]),
    #[error("vertex {vertex} has degree {degree} > 3")]
    DegreeTooLarge { vertex: usize, degree: u32 },
    #[error("{0} is not a maximal independent set")]
    NotMaximalIndependent(String),
    #[error("graph has no K4 component")]
    NoK4Component,
    #[error("cell index {0} is not in I5")]
    CellNotInI5(usize),
    #[error("transversal census over 4^{cells} exceeds the exhaustive limit 2^{limit_log2}")]
    CensusTooLarge { cells: usize, limit_log2: u32 },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("store: {0}")]
    Store(String),
}

pub type Result<T> = std::result::Result<T, Error>;
