use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared by the form, conic, automorphism, transport, census, and
/// quadric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("form is degenerate: discriminant is zero")]
    DegenerateForm,
    #[error("form is reducible: discriminant is a nonzero perfect square")]
    ReducibleForm,
    #[error("operation requires {expected}")]
    WrongClass { expected: &'static str },
    #[error("value sign is incompatible with the sign of this definite form")]
    SignMismatch,
    #[error("indefinite sweep requires a box bound")]
    MissingBox,
    #[error("representations carry different values: {0} vs {1}")]
    ValueMismatch(BigInt, BigInt),
    #[error("cannot transport a zero value between distinct pairs")]
    ZeroValue,
    #[error("conic kind does not match the form class")]
    ConicMismatch,
    #[error("point does not lie on the conic")]
    NotOnConic,
    #[error("the base point (1, 0) has no finite chord slope")]
    BasePoint,
    #[error("slope parameter makes the conic denominator vanish")]
    DegenerateParameter,
    #[error("witness pair (m, n) = (0, 0) leaves the matrix undefined")]
    DegenerateWitness,
    #[error("matrix is singular")]
    Singular,
    #[error("the zero point does not determine a unique line")]
    ZeroPoint,
    #[error("point does not satisfy f(x1, x2) = f(x3, x4)")]
    NotOnQuadric,
    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable kebab-case name used in CLI error payloads.
    pub fn code_name(&self) -> &'static str {
        match self {
            Error::DegenerateForm => "degenerate-form",
            Error::ReducibleForm => "reducible-form",
            Error::WrongClass { .. } => "wrong-class",
            Error::SignMismatch => "sign-mismatch",
            Error::MissingBox => "missing-box",
            Error::ValueMismatch(..) => "value-mismatch",
            Error::ZeroValue => "zero-value",
            Error::ConicMismatch => "conic-mismatch",
            Error::NotOnConic => "not-on-conic",
            Error::BasePoint => "base-point",
            Error::DegenerateParameter => "degenerate-parameter",
            Error::DegenerateWitness => "degenerate-witness",
            Error::Singular => "singular",
            Error::ZeroPoint => "zero-point",
            Error::NotOnQuadric => "not-on-quadric",
            Error::InvalidInput(_) => "invalid-input",
        }
    }
}
