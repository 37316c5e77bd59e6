use thiserror::Error;

/// Errors produced by matrix construction, the determinant kernels and the
/// surrounding tooling.
///
/// Pivot and step indices carried by variants are 1-based, matching the
/// usual `c_1, ..., c_n` numbering of the pivot vector.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must have order at least 1")]
    Empty,

    #[error("dimension mismatch: {vector} has length {found}, expected {expected}")]
    DimensionMismatch {
        vector: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("non-finite entry in {vector} at position {index}")]
    NonFinite { vector: &'static str, index: usize },

    #[error("matrix order {n} exceeds the dense limit {limit}")]
    DenseLimit { n: usize, limit: usize },

    #[error("grid is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("pivot c_{index} vanishes; the two-term product is undefined past it")]
    ZeroPivot { index: usize },

    #[error("LU factorization does not exist: interior pivot c_{index} vanishes")]
    NoFactorization { index: usize },

    #[error("floating-point overflow at minor f_{index}; retry in scaled mode")]
    Overflow { index: usize },

    #[error("matrix is not symmetric: a_{index} != b_{index}")]
    NotSymmetric { index: usize },

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("symbolic pivot product did not reduce to a polynomial in z")]
    NotPolynomial,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("family {family} does not support order n = {n}")]
    UnsupportedOrder { family: String, n: usize },

    #[error("no closed-form determinant for family {family}")]
    NoClosedForm { family: String },

    #[error("benchmark needs at least 3 trials, got {0}")]
    TooFewTrials(usize),

    #[error("no benchmark records to write")]
    NoRecords,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
