//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Mode index outside {1, 2, 3}.
    InvalidMode(usize),
    /// Operand shapes are inconsistent; the message names the operation.
    ShapeMismatch(String),
    /// An entry index lies outside the tensor dimensions.
    IndexOutOfRange {
        index: (usize, usize, usize),
        dims: (usize, usize, usize),
    },
    /// The same (i1, i2, i3) triple appears twice in an observation set.
    DuplicateIndex((usize, usize, usize)),
    /// A non-finite value where finite data is required.
    NonFinite,
    /// An operation that needs at least one observation got none.
    EmptySet,
    /// Matrix does not have full column rank where one is required.
    RankDeficient { rows: usize, cols: usize },
    /// Factor or feature matrix failed the orthonormality check.
    NotOrthonormal { defect: f64 },
    /// A core Gram matrix stayed singular even after ridge regularisation.
    SingularCore { mode: usize },
    /// An inner tangent/horizontal projection system could not be solved.
    ProjectionSolve { relative_residual: f64 },
    /// Backtracking found no step with sufficient decrease.
    LineSearchFailed { trials: usize },
    /// Configuration or input combination is invalid; the message says why.
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMode(m) => write!(f, "invalid mode index {m}, expected 1, 2 or 3"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::IndexOutOfRange { index, dims } => write!(
                f,
                "index ({}, {}, {}) out of range for dims ({}, {}, {})",
                index.0, index.1, index.2, dims.0, dims.1, dims.2
            ),
            Error::DuplicateIndex(i) => {
                write!(f, "duplicate observed index ({}, {}, {})", i.0, i.1, i.2)
            }
            Error::NonFinite => write!(f, "non-finite value in input data"),
            Error::EmptySet => write!(f, "operation requires a nonempty observation set"),
            Error::RankDeficient { rows, cols } => {
                write!(f, "{rows}x{cols} matrix is rank deficient")
            }
            Error::NotOrthonormal { defect } => {
                write!(f, "matrix is not orthonormal (defect {defect:.3e})")
            }
            Error::SingularCore { mode } => {
                write!(f, "core Gram matrix for mode {mode} is singular")
            }
            Error::ProjectionSolve { relative_residual } => write!(
                f,
                "projection system solve failed (relative residual {relative_residual:.3e})"
            ),
            Error::LineSearchFailed { trials } => {
                write!(f, "line search found no acceptable step in {trials} trials")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
