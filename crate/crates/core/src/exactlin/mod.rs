//! Exact scalars and the multilinear kernel every check is built on.

mod linmap;
mod report;
mod scalar;
mod solve;
mod space;
mod wiring;

pub use linmap::{compose, power, tensor, LinearMap};
pub use report::{maps_equal, CheckReport, Witness};
pub use scalar::{Field, Scalar};
pub use solve::{solve_linear, Solution, Solved};
pub use space::Space;
pub use wiring::{check_all, tabulate, Formula, Identity, Wiring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u32),
    #[error("malformed scalar {0:?}")]
    BadRational(String),
    #[error("unknown field {0:?}, expected \"Q\" or \"GF(p)\"")]
    BadField(String),
    #[error("a space needs at least one basis vector")]
    EmptySpace,
    #[error("duplicate basis name {0:?}")]
    DuplicateBasisName(String),
    #[error("{op}: expected dimension {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("expected a {}x{} matrix, found {}x{}", .expected.0, .expected.1, .found.0, .found.1)]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("scalars over {1} given where {0} was expected")]
    FieldMismatch(Field, Field),
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("matrix is not invertible")]
    NonInvertible,
}
