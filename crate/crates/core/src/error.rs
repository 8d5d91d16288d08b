//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("no incidence matrix: hypergraph has {0}")]
    NoIncidenceMatrix(&'static str),

    #[error("operation requires a graph, but some hyperedge does not have exactly 2 vertices")]
    NotAGraph,

    #[error("{operation} on {size} vertices exceeds the limit {limit}")]
    LimitExceeded {
        operation: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no simple {degree}-regular graph on {vertex_count} vertices exists")]
    InfeasibleDegree { vertex_count: usize, degree: usize },

    #[error("random generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("partition is not equitable: {0}")]
    NotEquitable(String),

    #[error("witness does not verify: {0}")]
    InvalidWitness(String),

    #[error("hypergraphs are not fractionally isomorphic")]
    NotIsomorphic,

    #[error("isomorphism deciders disagree (partition: {partition}, lp: {lp}); this is a bug")]
    MethodDisagreement { partition: bool, lp: bool },

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
