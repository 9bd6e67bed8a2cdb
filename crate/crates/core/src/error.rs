use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("vector length {found} does not match dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("non-finite floating value")]
    NonFinite,

    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    NotLieAlgebra(usize, usize, usize),
    #[error("expected dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("algebra is not unimodular")]
    NotUnimodular,

    #[error("gram matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("quadratic form is degenerate")]
    DegenerateForm,
    #[error("restriction of the form to the plane is degenerate")]
    DegenerateRestriction,
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("vector has norm {0}; expected 0 or 1")]
    BadNorm(String),
    #[error("normalisation needs {0}, which has no exact Gaussian-rational square root")]
    NoExactRoot(String),

    #[error("vector does not lie in the isotropy subalgebra")]
    NotInIsotropy,
    #[error("isotropy vectors do not span a subalgebra")]
    NotSubalgebra,
    #[error("isotropy and complement vectors do not form a basis")]
    NotComplement,
    #[error("ad(y) does not preserve the isotropy subalgebra")]
    NotSubalgebraInvariant,
    #[error("isotropy has dimension {0}; expected 1")]
    WrongIsotropyDimension(usize),
    #[error("isotropy type is {0}; expected SEMISIMPLE")]
    WrongIsotropyType(String),
    #[error("model has no quotient form")]
    MissingForm,
    #[error("subspace does not contain the isotropy subalgebra")]
    IsotropyNotContained,

    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("catalog is empty")]
    EmptyCatalog,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A located diagnostic from the `.liealg` parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UndeclaredLabel(String),
    DuplicateKey(String),
    MalformedScalar(String),
    MissingSection(String),
    Syntax(String),
    Invalid(String),
}

impl ParseError {
    pub fn new(line: usize, col: usize, kind: ParseErrorKind) -> Self {
        Self { line, col, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::UndeclaredLabel(l) => write!(f, "undeclared label `{l}`"),
            ParseErrorKind::DuplicateKey(k) => write!(f, "duplicate key `{k}`"),
            ParseErrorKind::MalformedScalar(m) => write!(f, "malformed scalar: {m}"),
            ParseErrorKind::MissingSection(s) => write!(f, "missing section [{s}]"),
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::Invalid(m) => write!(f, "{m}"),
        }
    }
}
