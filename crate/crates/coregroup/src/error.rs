//! Error types shared across the crate.

use thiserror::Error;

/// Every fallible operation in the crate returns this error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Gauss-code token did not match `(O|U)<id>(+|-)`.
    #[error("malformed token `{token}` in component {component}")]
    MalformedToken { component: usize, token: String },

    /// A crossing id must appear exactly twice in the code.
    #[error("crossing {id} appears {count} times (expected 2)")]
    CrossingCount { id: u32, count: usize },

    /// The two passages of one crossing carry different signs.
    #[error("crossing {id} has mismatched signs")]
    SignMismatch { id: u32 },

    /// A crossing needs one over passage and one under passage.
    #[error("crossing {id} does not have one over and one under passage")]
    RoleMismatch { id: u32 },

    /// A component or arc index outside the diagram.
    #[error("{what} index {index} out of range")]
    OutOfRange { what: &'static str, index: usize },

    /// A named fixture was requested with unusable parameters.
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    /// A Reidemeister move was requested at a site where it does not apply.
    #[error("illegal move site: {0}")]
    IllegalSite(String),

    /// A word mentions a generator that a map or presentation does not know.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// A word failed to parse.
    #[error("cannot parse word `{0}`")]
    BadWord(String),

    /// A permutation, assignment or certificate text failed to parse.
    #[error("cannot parse `{0}`")]
    BadText(String),

    /// Coset enumeration or a search ran past its ceiling.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A precondition of an operation was violated.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal consistency check failed. This signals a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
