use thiserror::Error;

use crate::algebra::Vector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in `{argument}`: expected {expected}, found {found}")]
    DimensionMismatch {
        argument: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected {expected} basis labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("algebra dimension must be positive")]
    ZeroDimension,
    #[error(
        "subspace is not a {side} ideal: b{basis_index} times {element} = {product} escapes it"
    )]
    NotAnIdeal {
        side: &'static str,
        basis_index: usize,
        element: Vector,
        product: Vector,
    },
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    #[error("unknown algebra name `{0}`")]
    UnknownAlgebra(String),
    #[error("input is not a Lie algebra: {0}")]
    NotLie(String),
    #[error(
        "basis is not adapted to the lower central series: term {term} has non-coordinate basis vector {vector}"
    )]
    NotAdapted { term: usize, vector: Vector },
    #[error("invalid rational `{0}`")]
    ParseRational(String),
    #[error("certificate error: {0}")]
    Certificate(String),
    #[error("linear map is not invertible")]
    Singular,
}
