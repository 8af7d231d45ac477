use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix does not preserve the lattice: entry ({row}, {col}) = {value} is not an integer")]
    NonIntegral { row: usize, col: usize, value: String },

    #[error("element {0} has eigenvalue 1 (parabolic)")]
    ParabolicElement(usize),

    #[error("element {0} has no eigenvalue 1 (elliptic)")]
    EllipticElement(usize),

    #[error("the identity has no proper fixed locus")]
    IdentityElement,

    #[error("group closure has {0} elements, expected 336")]
    ClosureSize(usize),

    #[error("named element {name} failed validation: {reason}")]
    NamedElement { name: String, reason: String },

    #[error("unrecognized subgroup with signature {0}")]
    UnrecognizedSubgroup(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("eigenvalue snapping failed: {0}")]
    Snapping(String),

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("matrix is not an element of G336")]
    NotInGroup,
}
