use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad table length, duplicate labels, z(∅) ≠ 0, and so on.
    #[error("validation error: {0}")]
    Validation(String),

    /// An operation's precondition does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{op}: ground set of size {n} exceeds the cap {cap}")]
    CapExceeded {
        op: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("ground set mismatch: {0}")]
    GroundMismatch(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("undefined arithmetic: infinity minus infinity")]
    InfinityMinusInfinity,

    /// The direction has no maximum on the polyhedron.
    #[error("unbounded direction: {0}")]
    Unbounded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
