use thiserror::Error;

use crate::algebra::{Generator, Shape};
use crate::verma::BVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape ({l1},{l2}): need l1 >= l2 >= 0")]
    InvalidShape { l1: i64, l2: i64 },
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(Shape, Shape),
    #[error("row lengths ({row1},{row2}) do not fit shape {shape}")]
    RowLengths {
        shape: Shape,
        row1: usize,
        row2: usize,
    },
    #[error("tableau is not column-strict")]
    NotColumnStrict,
    #[error("tableau is not a KN tableau")]
    NotKn,
    #[error("matrix is not homogeneous")]
    NonHomogeneous,
    #[error("generator {0} does not act on letters; use letter weights for Cartan elements")]
    CartanOnLetter(Generator),
    #[error("no KN tableau of shape {shape} maps to {b}")]
    NoPreimage { b: BVector, shape: Shape },
    #[error("{count} KN tableaux of shape {shape} map to {b}")]
    MultiplePreimages {
        b: BVector,
        shape: Shape,
        count: usize,
    },
    #[error("f2 exponent {b1} exceeds 2*m2 = {max}")]
    F2ExponentTooLarge { b1: u32, max: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
