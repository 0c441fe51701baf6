use thiserror::Error;

/// Errors raised by the field kernel and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent {0} is not integral at the requested sampling scale")]
    NonIntegralExponent(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is infinitely large and has no standard part")]
    NotFinite,
    #[error("element is not a member of the walkable world")]
    NotMember,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("sequence does not converge to the given limit")]
    NotConvergentToL,
    #[error("sequence does not converge")]
    NotConvergent,
    #[error("tolerance must be positive")]
    EpsNotPositive,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("family is not a filter")]
    NotAFilter,
    #[error("filter is an ultrafilter; its order is total")]
    IsUltrafilter,
    #[error("the Fréchet filter needs an infinite index set")]
    FrechetNeedsInfinite,
    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;
