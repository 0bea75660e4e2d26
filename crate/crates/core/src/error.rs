use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a facet must be a non-empty vertex set")]
    EmptyFacet,

    #[error("a minimal generator must be a non-empty vertex set")]
    EmptyGenerator,

    #[error("at least one facet is required")]
    EmptyInput,

    #[error("the ideal has no generators")]
    EmptyIdeal,

    #[error("the non-face complex has no non-empty face")]
    EmptyComplex,

    #[error("dimension {k} out of range 0..={dim}")]
    DimensionOutOfRange { k: usize, dim: usize },

    #[error("{what} exceeds the supported cap of {cap}")]
    TooLarge { what: &'static str, cap: usize },

    #[error("vertex label {label} outside 1..={max}")]
    VertexOutOfRange { label: usize, max: usize },

    #[error("vertex {label} is declared but lies in no facet")]
    IsolatedVertexDeclared { label: usize },

    #[error("ambient variable count {n} is smaller than the largest label {max_label}")]
    AmbientTooSmall { n: usize, max_label: usize },

    #[error("the monomial set mixes degrees {a} and {b}")]
    MixedDegrees { a: usize, b: usize },

    #[error("{what} is only validated for {range}")]
    OutOfValidatedRange {
        what: &'static str,
        range: &'static str,
    },

    #[error("vertex {label} is isolated")]
    IsolatedVertex { label: usize },

    #[error("edge ({u}, {v}) is not a valid simple edge on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("parameter out of range: {what}")]
    ParameterOutOfRange { what: String },

    #[error("precondition violated: {what}")]
    PreconditionViolated { what: String },

    #[error("b = {b} has the wrong parity for n = {n}")]
    ParityMismatch { n: usize, b: i64 },

    #[error("|b| = {b_abs} violates the bound floor(n/2) = {bound} for n = {n}{}",
            if *.extended_would_accept { " (extended mode would accept)" } else { "" })]
    BoundViolation {
        n: usize,
        b_abs: u64,
        bound: u64,
        extended_would_accept: bool,
    },

    #[error("{join} join edges exceed the smaller part size {part}")]
    JoinExceedsParts { join: usize, part: usize },

    #[error("unknown verification suite `{name}`")]
    UnknownSuite { name: String },

    #[error("cap exceeded: {what}")]
    CapExceeded { what: String },

    #[error("parse error on line {line}: {message}")]
    ParseError { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
