use crate::pattern::PatternWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graph is not (P5, gem)-free: {0}")]
    NotP5GemFree(PatternWitness),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("maximum degree {delta} is below the required {required}")]
    DeltaTooSmall { delta: usize, required: usize },

    #[error("maximum degree {delta} exceeds the allowed {allowed}")]
    DeltaTooLarge { delta: usize, allowed: usize },

    #[error("clique of size {omega} violates omega <= {bound}: {clique:?}")]
    CliqueTooLarge { omega: usize, bound: usize, clique: Vec<usize> },

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("not a cograph: induced P4 on {0:?}")]
    NotCograph([usize; 4]),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("generator search exhausted: {0}")]
    GenerationExhausted(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
