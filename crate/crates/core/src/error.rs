use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),

    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("orbit too large: more than {cap} points")]
    OrbitTooLarge { cap: usize },

    #[error("not a root of {system}: {root}")]
    NotARoot { system: String, root: String },

    #[error("root set is not closed and symmetric")]
    NotClosedSymmetric,

    #[error("unknown real form: {0}")]
    UnknownForm(String),

    #[error("parameters out of range for {name}: {hint}")]
    BadParameters { name: String, hint: String },

    #[error("unsupported type {0}: only classical types are supported here")]
    UnsupportedType(String),

    #[error("partition {partition} is not valid for type {family}: {reason}")]
    ConstraintViolation {
        partition: String,
        family: String,
        reason: String,
    },

    #[error("diagram has {got} nodes, Satake diagram has {expected}")]
    NodeCountMismatch { expected: usize, got: usize },

    #[error("node subset is not invariant under the arrow involution")]
    NotArrowInvariant,

    #[error("node {0} is not a white node")]
    NotWhite(usize),

    #[error("{0} is not covered by an implemented spanning-family case")]
    NotCovered(String),

    #[error("{0} is not a split real form")]
    NotSplit(String),

    #[error("verdict must be 'yes' to pass to a subgroup")]
    VerdictNotYes,

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("H is not antipodal: its Weyl orbit does not contain its negative")]
    NotAntipodal,

    #[error("catalog parse error at line {line}: {msg}")]
    CatalogParse { line: usize, msg: String },

    #[error("parse error: {0}")]
    Parse(String),
}
