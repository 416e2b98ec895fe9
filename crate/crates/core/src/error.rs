use alloc::string::String;

/// Errors reported by the library.
///
/// [`Error::code`] gives a stable machine-readable name for each variant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: String, found: String },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid epsilon-delta sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{partition} is not a ({n}|{m})-hook partition")]
    HookViolation { partition: String, n: usize, m: usize },
    #[error("root {0} is not an isotropic simple root of this Borel subalgebra")]
    NotSimpleIsotropic(String),
    #[error("operation requires family {expected}")]
    FamilyMismatch { expected: char },
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("the module with highest weight {0} is not tame")]
    NotTame(String),
    #[error("outside the regime of this operation: {0}")]
    WrongRegime(String),
    #[error("invalid Levi subalgebra: {0}")]
    InvalidLevi(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible: {0}")]
    NotDivisible(String),
    #[error("alternating sum is not divisible by j = {0}")]
    JDivisibilityFailure(u64),
    #[error("internal error: {0}")]
    InternalError(String),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "RankMismatch",
            Error::InvalidAlgebra(_) => "InvalidAlgebra",
            Error::InvalidSequence(_) => "InvalidSequence",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::HookViolation { .. } => "HookViolation",
            Error::NotSimpleIsotropic(_) => "NotSimpleIsotropic",
            Error::FamilyMismatch { .. } => "FamilyMismatch",
            Error::UnsupportedCase(_) => "UnsupportedCase",
            Error::NotTame(_) => "NotTame",
            Error::WrongRegime(_) => "WrongRegime",
            Error::InvalidLevi(_) => "InvalidLevi",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible(_) => "NotDivisible",
            Error::JDivisibilityFailure(_) => "JDivisibilityFailure",
            Error::InternalError(_) => "InternalError",
        }
    }

    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible(_) | Error::JDivisibilityFailure(_) | Error::InternalError(_)
        )
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
