use alloc::string::String;

/// Errors produced by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("exponent must be at least 1 in `{0}`")]
    BadExponent(String),
    #[error("generator s{index} does not fit on {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("position {pos} out of range for word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("no braid relation pattern at position {0}")]
    R3Mismatch(usize),
    #[error("letters at position {0} are adjacent generators and do not commute")]
    NotCommuting(usize),
    #[error("invalid level range [{i}, {j}] on {n} strands")]
    BadRange { i: usize, j: usize, n: usize },
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("genus is only defined for knots, this closure has {0} components")]
    NotAKnot(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("matrix rows have inconsistent length")]
    BadShape,
    #[error("vertex {vertex} out of range for quiver of size {size}")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("integer overflow during mutation")]
    Overflow,
    #[error("quiver has a directed cycle")]
    Cyclic,
    #[error("c-vector {0} lost sign coherence")]
    SignCoherence(usize),
    #[error("seed quiver does not match the DT source quiver")]
    QuiverMismatch,
    #[error("not a finite Dynkin type: {0}")]
    NotFinite(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = core::result::Result<T, Error>;
