use thiserror::Error;

use crate::lattice::{Cell, LatticeKind};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid coordinate {0}: hex cube coordinates must sum to zero")]
    InvalidCoordinate(Cell),

    #[error("cell {cell} does not belong to the {expected} lattice")]
    LatticeMismatch { cell: Cell, expected: LatticeKind },

    #[error("slice index {index} out of range for the {kind} lattice")]
    InvalidSlice { kind: LatticeKind, index: usize },

    #[error("cell {cell} is not in slice {slice}")]
    NotInSlice { cell: Cell, slice: usize },

    #[error("unknown symmetry element (rotation {rotation}, reflected {reflected}) for the {kind} lattice")]
    UnknownSymmetry {
        kind: LatticeKind,
        rotation: u8,
        reflected: bool,
    },

    #[error("more than {cap} shortest paths between {from} and {to}")]
    PathCapExceeded { from: Cell, to: Cell, cap: usize },

    #[error("cell budget of {budget} live cells exceeded (would reach {requested})")]
    CellBudgetExceeded { budget: u64, requested: u64 },

    #[error("cell {0} is not live")]
    CellNotLive(Cell),

    #[error("fertility of {0} is not final until the next generation is computed")]
    FertilityNotFinal(Cell),

    #[error("position {pos} out of range for gasket row {row}")]
    PositionOutOfRange { row: u64, pos: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operation not supported on the {0} lattice")]
    Unsupported(LatticeKind),

    #[error("style {style} cannot render this {kind} state: {reason}")]
    StyleMismatch {
        style: &'static str,
        kind: LatticeKind,
        reason: String,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
