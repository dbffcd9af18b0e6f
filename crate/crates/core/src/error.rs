use thiserror::Error;

/// Every failure the kernel can report. Failed axioms are never errors; they
/// are returned as a failing [`crate::Report`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("not a rational scalar: {0:?}")]
    InvalidScalar(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A construction invariant of a Hom-algebra or Hom-bimodule does not hold.
    #[error("invariant violated: {axiom} fails at basis pair ({first}, {second})")]
    Invariant {
        axiom: &'static str,
        first: usize,
        second: usize,
    },

    /// A hypothesis of a construction does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A constructor produced an object that fails the property it is
    /// supposed to have. This indicates a bug or a false claim, never bad input.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("sort error in `{node}`: {message}")]
    Sort { node: String, message: String },

    #[error("identity uses module variables but no module was supplied")]
    MissingModule,

    #[error("format error: {0}")]
    Format(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("search space too large: {0}")]
    SearchTooLarge(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
