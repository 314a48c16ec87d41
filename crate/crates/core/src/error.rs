use std::fmt;

use thiserror::Error;

/// Axis of a relation matrix along which a monotonicity constraint failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Domain,
    Codomain,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Domain => f.write_str("domain axis"),
            Axis::Codomain => f.write_str("codomain axis"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("order relation is not {0}")]
    NotPreorder(&'static str),
    #[error("{what} of size {size} exceeds enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("relation is not monotone along the {axis}: cell ({row}, {col})")]
    NotMonotone { axis: Axis, row: usize, col: usize },
    #[error("vector is not {0}-closed")]
    NotClosed(&'static str),
    #[error("category axiom violated: {0}")]
    Axiom(String),
    #[error("morphism {0} does not belong to the expected hom-set")]
    WrongHomSet(usize),
    #[error("monotonicity violated: {0}")]
    NotMonotoneComposition(String),
    #[error("negative edge weight on {0} -> {1}")]
    NegativeWeight(String, String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("broken path: {0}")]
    BrokenPath(String),
    #[error("inadmissible bound on ({from}, {to}): mu = {mu} exceeds distance {distance}")]
    Inadmissible {
        from: String,
        to: String,
        mu: String,
        distance: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
