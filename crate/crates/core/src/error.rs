use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} exponents, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("{op}: the zero ideal is not allowed here")]
    ZeroIdeal { op: &'static str },

    #[error("{op}: the unit ideal is not allowed here")]
    UnitIdeal { op: &'static str },

    #[error("{prime} is not an associated prime of {ideal}")]
    NotAssociated { prime: String, ideal: String },

    #[error("{op}: expected a squarefree ideal")]
    NotSquarefree { op: &'static str },

    #[error("no monomial m of degree <= {cap} with (I : m) = {prime}")]
    NoWitness { cap: u64, prime: String },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("{op}: graph has no edges")]
    Edgeless { op: &'static str },

    #[error("no closed-form regularity is registered for {0}")]
    UnsupportedFamily(String),

    #[error("explicit filtration has {len} entries, no value for n = {n}")]
    ExplicitOutOfRange { n: u64, len: usize },

    #[error("{prime} is not associated to I_{n}")]
    PrimeLeftAss { prime: String, n: u64 },

    #[error("need at least {need} samples in every residue class mod {period}, class {class} has {found}")]
    InsufficientSamples {
        period: u64,
        class: u64,
        need: usize,
        found: usize,
    },

    #[error("no exact quasi-linear fit with a common slope for {0}")]
    NoLimit(String),

    #[error("empty range {start}..{end}")]
    EmptyRange { start: u64, end: u64 },

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
