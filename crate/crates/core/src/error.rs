use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("representation has no matrix for arrow `{0}`")]
    MissingMatrix(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("representations live on different quivers")]
    QuiverMismatch,

    #[error("dimension vector mismatch: {0}")]
    DimMismatch(String),

    #[error("quiver has an oriented cycle; {0} requires an acyclic quiver")]
    NotAcyclic(&'static str),

    #[error("quiver is not a tree; {0} requires a tree quiver")]
    NotTree(&'static str),

    #[error("quiver is not of Dynkin type; {0} requires a Dynkin quiver")]
    NotDynkin(&'static str),

    #[error("quiver is not an equioriented A_n; {0} is only certified there")]
    NotEquioriented(&'static str),

    #[error("{0} is not a positive root")]
    NotRoot(String),

    #[error("vertex `{0}` is neither a sink nor a source")]
    NotSinkOrSource(String),

    #[error("scalar must be nonzero")]
    ZeroScalar,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ideal is not homogeneous; minimal resolutions need graded input")]
    NotHomogeneous,

    #[error("ideal contains a unit")]
    UnitIdeal,

    #[error("scale guardrail: {0}")]
    Guardrail(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
