use thiserror::Error;

use crate::lie::GroupId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("weight has {got} labels but {group} has rank {expected}")]
    RankMismatch {
        group: GroupId,
        expected: usize,
        got: usize,
    },

    #[error("weight {weight} is not dominant")]
    NotDominant { weight: String },

    #[error("affine folding of {weight} exceeded {bound} reflections")]
    FoldBound { weight: String, bound: usize },

    #[error("unitarity defect {defect:e} exceeds tolerance {tol:e}")]
    PrecisionExhausted { defect: f64, tol: f64 },

    #[error("Verlinde entry ({row},{col}) has rounding residue {residue:e}")]
    IntegralityViolation {
        row: usize,
        col: usize,
        residue: f64,
    },

    #[error("monomial with exponents {exponents:?} is not expressible in the new variables")]
    Inexpressible { exponents: Vec<i32> },

    #[error("invalid fusion data: {0}")]
    InvalidFusionData(String),

    #[error("elements belong to different fusion categories")]
    CategoryMismatch,

    #[error("{what} of size {size} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("sign of value {value:e} is inside the margin {margin:e}")]
    IndeterminateSign { value: f64, margin: f64 },

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal error: {0}")]
    Internal(String),
}
