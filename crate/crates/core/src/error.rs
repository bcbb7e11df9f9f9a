use thiserror::Error;

use crate::report::{CheckReport, Witness};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("table entry {index} is outside the carrier (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("components disagree on carrier size ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("order is not directed: {0} and {1} have no common upper bound")]
    NotDirected(usize, usize),
    #[error("choice {choice} for ({x}, {y}) is not a common upper bound")]
    InvalidChoice { x: usize, y: usize, choice: usize },
    #[error("table is not a directoid: {law} fails at {witness}")]
    NotDirectoid { law: &'static str, witness: Witness },

    #[error("axioms violated: {}", .0.failures_summary())]
    AxiomsFailed(CheckReport),
    #[error("induced relation is not a partial order: {0}")]
    InconsistentOrder(Box<Error>),
    #[error("{x} is not in the section [{a}, 1]")]
    OutsideSection { a: usize, x: usize },
    #[error("section involutions are not antitone: fails at {0}")]
    NotSai(Witness),
    #[error("hypothesis `{hypothesis}` fails at {witness}")]
    Hypothesis { hypothesis: &'static str, witness: Witness },
    #[error("missing required properties: {}", .0.join(", "))]
    MissingProperties(Vec<&'static str>),
    #[error("conclusions violated: {}", .0.failures_summary())]
    ConclusionFailed(CheckReport),
    #[error("derived order differs from the given order at ({0}, {1})")]
    OrderMismatch(usize, usize),

    #[error("enumeration size {0} is outside the supported range 2..=8")]
    SizeOutOfRange(usize),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
}
