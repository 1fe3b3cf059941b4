use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongEdgeSize {
        edge: Vec<usize>,
        got: usize,
        expected: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },
    #[error("uniformity {k} is invalid (must be >= 2)")]
    BadUniformity { k: usize },
    #[error("canonical form refused: n = {n} exceeds cap {cap}")]
    CanonicalCapExceeded { n: usize, cap: usize },
    #[error("exact solver refused: n = {n} exceeds cap {cap}")]
    SolverCapExceeded { n: usize, cap: usize },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("pattern has an isolated vertex ({0})")]
    IsolatedPatternVertex(usize),
    #[error("search budget exhausted after {0} nodes (result indeterminate)")]
    Indeterminate(u64),
    #[error("invalid construction parameters: {0}")]
    BadConstruction(String),
    #[error("case selection: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no saturated host within edge budget {0}")]
    NotFound(usize),
    #[error("tight-path extraction failed: {0} (implementation bug)")]
    ExtractionFailure(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error means "ran out of budget", not "wrong input".
    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Error::Indeterminate(_))
    }
}
