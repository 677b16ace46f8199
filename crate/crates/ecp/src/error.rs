//! Crate-wide error type and the process exit-code contract.
//!
//! Every fallible operation in the crate returns [`Error`]. The CLI maps
//! errors to stable exit codes:
//!
//! * `0` — success (no error).
//! * `1` — a *domain or precondition error*: malformed or invalid input data,
//!   a claimed property that does not hold (a partition that does not cover,
//!   a family that is not an antichain, a theorem check that found a
//!   mismatch), or a request for an object that provably does not exist.
//! * `2` — a *budget or capability limit*: the computation was abandoned
//!   before an answer was established (node budget exhausted, isomorphism
//!   size bound, plane order whose existence is an open problem).
//! * `3` — a *usage error*: the command line itself does not match the
//!   grammar. Only the CLI layer produces these.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    // ---- domain / precondition errors (exit 1) ----
    /// A claimed edge clique partition fails to cover some pair correctly.
    #[error("not an edge clique partition: {0}")]
    NotAPartition(String),

    /// A set family fails the membership test for a claimed kind.
    #[error("family is not {kind}: {detail}")]
    NotOfKind { kind: String, detail: String },

    /// A structure claimed to be a linear space violates L1-L3 (or P1/P2
    /// where demanded).
    #[error("not a linear space: {0}")]
    NotALinearSpace(String),

    /// A theorem verification ran to completion and found a counterexample
    /// or mismatch.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// Removing monopolized elements would leave a vertex with an empty set.
    #[error("degenerate vertices after removing monopolized elements: {0:?}")]
    DegenerateVertices(Vec<usize>),

    /// No projective plane of this order exists.
    #[error("no projective plane of order {0} exists")]
    PlaneNonexistent(u64),

    /// Parse error in graph6, edgelist, or JSON input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A vertex index is outside the graph's range.
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },

    /// The graph exceeds the crate's hard vertex limit.
    #[error("graph has {n} vertices, exceeding the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    /// Structurally invalid input or an unmet precondition: empty clique,
    /// duplicate vertex, empty set in a family, no partition under the
    /// requested constraints, and so on.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A closed-form theorem was asked about a graph its hypotheses
    /// exclude. The reasons list the matched exclusion flags; the full
    /// report is available from exclusion detection.
    #[error("theorem hypotheses exclude this graph: {}", reasons.join(", "))]
    ExcludedInput { reasons: Vec<String> },

    /// I/O error wrapping (file reads in the CLI).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization error.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    // ---- budget / capability limits (exit 2) ----
    /// A search exceeded its node budget before establishing an answer.
    #[error("search budget exhausted after {nodes} nodes ({context})")]
    BudgetExhausted { nodes: u64, context: String },

    /// An isomorphism-complete computation was requested beyond the
    /// configured size bound.
    #[error("too large for isomorphism-complete search: n = {n}, bound = {bound}")]
    IsoTooLarge { n: usize, bound: usize },

    /// The existence of a projective plane of this order is an open problem.
    #[error("existence of a projective plane of order {0} is unresolved")]
    PlaneOrderUnknown(u64),

    /// A construction was requested for an order outside the supported
    /// table (the plane may well exist; this crate cannot build it).
    #[error("no projective plane construction available for order {0}")]
    PlaneUnavailable(u64),
}

impl Error {
    /// The process exit code this error maps to under the CLI contract.
    /// Usage errors (exit 3) never reach this type; they are produced by
    /// argument parsing in the CLI layer.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            NotAPartition(_)
            | NotOfKind { .. }
            | NotALinearSpace(_)
            | VerificationFailed(_)
            | DegenerateVertices(_)
            | PlaneNonexistent(_)
            | Parse { .. }
            | VertexOutOfRange { .. }
            | TooManyVertices { .. }
            | Invalid(_)
            | ExcludedInput { .. }
            | Io(_)
            | Json(_) => 1,
            BudgetExhausted { .. }
            | IsoTooLarge { .. }
            | PlaneOrderUnknown(_)
            | PlaneUnavailable(_) => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(Error::NotAPartition("x".into()).exit_code(), 1);
        assert_eq!(Error::VerificationFailed("x".into()).exit_code(), 1);
        assert_eq!(Error::PlaneNonexistent(6).exit_code(), 1);
        assert_eq!(Error::Parse { offset: 3, message: "bad byte".into() }.exit_code(), 1);
        assert_eq!(Error::VertexOutOfRange { v: 9, n: 4 }.exit_code(), 1);
        assert_eq!(
            Error::BudgetExhausted { nodes: 7, context: "cp".into() }.exit_code(),
            2
        );
        assert_eq!(Error::IsoTooLarge { n: 9, bound: 7 }.exit_code(), 2);
        assert_eq!(Error::PlaneOrderUnknown(12).exit_code(), 2);
        assert_eq!(Error::PlaneUnavailable(13).exit_code(), 2);
    }
}
