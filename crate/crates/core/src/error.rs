use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("EvenOrSmallL: quantum characteristic l = {l} must be odd and at least 3")]
    EvenOrSmallL { l: i64 },
    #[error("MOutOfRange: m = {m} must satisfy 2 <= m <= l - 2 (l = {l})")]
    MOutOfRange { l: i64, m: i64 },
    #[error("BadN: n = {n} must be positive")]
    BadN { n: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("MalformedWalk: {0}")]
    MalformedWalk(String),
    #[error("SizeMismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("BadPosition: position {r} is outside 1..={max}")]
    BadPosition { r: usize, max: usize },
    #[error("bad sign character {0:?}, expected '+' or '-'")]
    BadSign(char),
    #[error("weight {weight} is not in Lambda_{n}")]
    BadWeight { weight: i64, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlcoveError {
    #[error("NotInResidueClass: tableau does not share the residue sequence of t^lambda for lambda = {lambda}")]
    NotInResidueClass { lambda: i64 },
    #[error("NotAPartition: ({p}, {q}) is not a partition")]
    NotAPartition { p: i64, q: i64 },
    #[error("IndexMismatch: {0}")]
    IndexMismatch(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("TooLarge: shape ({p}, {q}) exceeds the enumeration bound {bound}")]
    TooLarge { p: usize, q: usize, bound: usize },
    #[error("NotSolvable: column of lambda = {lambda} at mu = {mu}: {reason}")]
    NotSolvable {
        lambda: i64,
        mu: i64,
        reason: String,
    },
    #[error("NotAPartition: ({p}, {q}) is not a partition")]
    NotAPartition { p: usize, q: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("InconsistentData: dim_t L({weight}) = {poly} has a negative coefficient")]
    InconsistentData { weight: i64, poly: String },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}
