use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group axiom violated: {0}")]
    AxiomViolation(String),

    #[error("group of order {0} is too large (at most 64 elements are supported)")]
    GroupTooLarge(usize),

    #[error("invalid subgroup chain: {0}")]
    InvalidChain(String),

    #[error("unknown subgroup name `{0}`")]
    UnknownSubgroup(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("complex is not rigid; call make_rigid first")]
    NotRigid,

    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),

    #[error("map does not carry simplex {simplex:?} to a simplex")]
    NotSimplicial { simplex: Vec<usize> },

    #[error("map is not equivariant: element {element} and vertex {vertex} do not commute")]
    NotEquivariant { element: usize, vertex: usize },

    #[error("map is not isovariant: isotropy changes on simplex {simplex:?}")]
    NotIsovariant { simplex: Vec<usize> },

    #[error("square does not commute on vertex {vertex}")]
    NonCommuting { vertex: usize },

    #[error("connectivity functions have different modes or key sets")]
    ModeMismatch,

    #[error("expected {expected} edge connectivities, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("{0} is not strictly contained in {1}")]
    NotAStrictPair(String, String),

    #[error("evaluator breaks its isotropy contract: {0}")]
    ContractViolation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid entity `{entity}`: {message}")]
    Validation { entity: String, message: String },

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(entity: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation { entity: entity.into(), message: message.into() }
    }
}
