use thiserror::Error;

/// Which structural rule an input violated. Used both by library
/// validation and by the `validate` command's JSON report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Normalization,
    CocycleIdentity,
    WellDefinedness,
    TrivialGroup,
    Shape,
}

impl Violation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Violation::Normalization => "normalization",
            Violation::CocycleIdentity => "cocycle_identity",
            Violation::WellDefinedness => "well_definedness",
            Violation::TrivialGroup => "trivial_group",
            Violation::Shape => "shape",
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed phase: {0}")]
    Phase(String),

    #[error("cannot rebase an element of order {order} to order {target}")]
    Rebase { order: u64, target: u64 },

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("elements belong to different twisted algebras")]
    BaseMismatch,

    #[error("invalid group: {0}")]
    Group(String),

    #[error("invalid homomorphism: {0}")]
    Hom(String),

    #[error("{violation} violated: {detail}", violation = .violation.as_str())]
    Invalid { violation: Violation, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("set is not closed: {0}")]
    NotClosed(String),

    #[error("map is not an isomorphism")]
    NotIsomorphism,

    #[error("conditions fail (cocycle: {cocycle}, character: {character})")]
    Conditions { cocycle: bool, character: bool },

    #[error("cocycle is degenerate, witness {witness:?}")]
    Degenerate { witness: Vec<i64> },

    #[error("element is not supported on the zero-sum subgroup")]
    NotLambdaSupported,

    #[error("matrix is not in SL(2,Z)")]
    NotSl2,

    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(violation: Violation, detail: impl Into<String>) -> Self {
        Error::Invalid { violation, detail: detail.into() }
    }

    pub(crate) fn parse(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
