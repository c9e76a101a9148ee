use thiserror::Error;

/// Which datum of an instance a validation error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Matrix,
    Rhs,
}

/// Errors raised by instance construction and the solver pipeline.
///
/// Row and column indices are stored 0-based and displayed 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("instance must have at least one row and one column")]
    EmptyInstance,

    #[error("row {} of A has {found} entries, expected {expected}", row + 1)]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("b has {found} entries but A has {expected} rows")]
    RhsLength { expected: usize, found: usize },

    #[error("{} out of [0,1]: {value}", describe(*field, *row, *col))]
    OutOfRange {
        field: Field,
        row: usize,
        col: usize,
        value: f64,
    },

    #[error("epsilon must be finite and non-negative, got {0}")]
    InvalidEpsilon(f64),

    #[error("point coordinate x[{}] out of [0,1]: {value}", index + 1)]
    PointOutOfRange { index: usize, value: f64 },

    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot evaluate the objective on an empty vector")]
    EmptyPoint,

    #[error("row {} has b_i <= epsilon and no minimal solution of its own", row + 1)]
    VacuousRow { row: usize },

    #[error("column {} is not in J({})", col + 1, row + 1)]
    NotInIndexSet { row: usize, col: usize },

    #[error("invalid selector: {0}")]
    InvalidSelector(String),

    #[error(
        "system is infeasible: J(i) is empty for rows {}",
        one_based(empty_rows)
    )]
    Infeasible { empty_rows: Vec<usize> },

    #[error("|E| = {} exceeds the enumeration cap of {cap}", size_text(*size))]
    CapExceeded { size: Option<u128>, cap: u64 },

    #[error("lattice grid has {} points, above the limit of {limit}", size_text(*size))]
    GridTooLarge { size: Option<u128>, limit: u64 },

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn describe(field: Field, row: usize, col: usize) -> String {
    match field {
        Field::Matrix => format!("A[{}][{}]", row + 1, col + 1),
        Field::Rhs => format!("b[{}]", row + 1),
    }
}

fn one_based(rows: &[usize]) -> String {
    rows.iter()
        .map(|r| (r + 1).to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn size_text(size: Option<u128>) -> String {
    match size {
        Some(s) => s.to_string(),
        None => "more than 2^128".to_string(),
    }
}
