//! One error type for the whole crate.
//!
//! Variants are named after the contract they enforce (parity of an
//! argument, admissibility of a shape, the column condition for tableau
//! concatenation, ...) so a caller can match on the reason rather than
//! parse a message.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Parts not weakly decreasing, or a part is zero.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// Rows do not form a valid standard or domino tableau.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    /// Column condition for juxtaposition/concatenation violated: the last
    /// column of the left operand must be at least the first column of the
    /// right operand.
    #[error("concatenation order violated: {0}")]
    ConcatenationOrder(String),
    /// An argument is required to be even (or odd) and is not.
    #[error("parity violated: {0}")]
    Parity(String),
    /// An argument is outside its documented range.
    #[error("out of range: {0}")]
    Range(String),
    /// Shape fails the parity condition for the requested form kind.
    #[error("shape not admissible: {0}")]
    Admissibility(String),
    /// Jordan type requested for a matrix that is not nilpotent.
    #[error("matrix not nilpotent: {0}")]
    Nilpotency(String),
    /// A bilinear-form model could not be built or is inconsistent.
    #[error("model error: {0}")]
    Model(String),
    /// A subspace argument violates its precondition (not x-stable, not
    /// contained where required, wrong ambient dimension, ...).
    #[error("subspace error: {0}")]
    Subspace(String),
    /// Enumeration refused: problem size exceeds the safety guard.
    #[error("scale guard: {0}")]
    Scale(String),
    /// A flag's shape chain does not descend by dominoes.
    #[error("not a domino chain: {0}")]
    NotDomino(String),
    /// Unknown orbit label for the requested group type.
    #[error("unknown label: {0}")]
    Label(String),
    /// A point handed to a Jacobian computation does not lie on the variety.
    #[error("point not on variety: {0}")]
    Domain(String),
    /// Malformed textual input (field element, partition string, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
