use thiserror::Error;

/// Errors produced by the chord/Coxeter toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),

    #[error("chord index {index} out of range for {count} chords")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("matrix is not upper unitriangular")]
    NotUnitriangular,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not a valid bilinear form: {0}")]
    MalformedForm(String),

    #[error("chord {0} is neither a source nor a sink")]
    NotSinkOrSource(usize),

    #[error("over-relation is cyclic; no compatible ordering exists")]
    CyclicRelation,

    #[error("input graph is not a tree")]
    NotATree,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("combinatorial budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("root finder failed to converge (best residual {residual:e})")]
    RootFinder { residual: f64 },

    #[error("theorem violation (implementation bug): {0}")]
    TheoremViolation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
