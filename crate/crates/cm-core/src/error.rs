//! Error types shared by all modules.

use thiserror::Error;

/// Why a prime admits no generator of the required form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoSolutionKind {
    /// The prime is inert (or ramified) in the quadratic field.
    Inert,
    /// The prime splits but is represented only by non-principal forms.
    NonPrincipal,
    /// The class polynomial has no root modulo p.
    NoRoot,
}

impl std::fmt::Display for NoSolutionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoSolutionKind::Inert => write!(f, "inert"),
            NoSolutionKind::NonPrincipal => write!(f, "non-principal class"),
            NoSolutionKind::NoRoot => write!(f, "no root of the class polynomial"),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum CmError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid discriminant {0}: need D < 0 and D = 0 or 1 (mod 4)")]
    InvalidDiscriminant(i64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{a} is not a square mod {p} (legendre symbol {symbol})")]
    Nonresidue { a: String, p: String, symbol: i32 },

    #[error("argument is divisible by the prime; symbol undefined")]
    ZeroArgument,

    #[error("no solution: {0}")]
    NoSolution(NoSolutionKind),

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("unit group of the order of discriminant {0} is larger than {{±1}}")]
    UnitGroup(i64),

    #[error("mode error: {0}")]
    ModeError(String),

    #[error("form has even leading coefficient; an odd-index ideal representative is required")]
    OddIndex,

    #[error("supersingular reduction; the curve has {count} points")]
    Supersingular { count: u64 },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("domain error: {0}")]
    Domain(String),
}

impl CmError {
    /// Process exit status for the CLI: 2 for precondition-class errors,
    /// 3 when no solution exists, 4 for internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            CmError::NoSolution(_) | CmError::Infeasible(_) => 3,
            CmError::Inconsistency(_) => 4,
            _ => 2,
        }
    }
}

pub type CmResult<T> = Result<T, CmError>;
