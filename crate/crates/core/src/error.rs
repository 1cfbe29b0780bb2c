use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a polynomial falls outside the hypotheses of the nonzero-count criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotApplicableReason {
    /// `p(0) = 0`: `x` divides `p`, so `p` cannot be primitive and the quotient `g` is undefined.
    ZeroConstantTerm,
    /// `p(1) = 0`: the criterion excludes polynomials vanishing at 1, which rules out `x - 1`.
    VanishesAtOne,
}

impl fmt::Display for NotApplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicableReason::ZeroConstantTerm => {
                f.write_str("p(0) = 0: x divides p(x), so p(x) cannot be primitive")
            }
            NotApplicableReason::VanishesAtOne => f.write_str(
                "p(1) = 0: the criterion requires p(1) != 0, which rules out p(x) = x - 1",
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus is reducible: {0}")]
    ReducibleModulus(String),
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("not applicable: {0}")]
    NotApplicable(NotApplicableReason),
    #[error("division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("{what} needs {needed} entries, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },
    #[error("{0} is out of range")]
    OutOfRange(u64),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("coefficient out of field: {0}")]
    CoefficientOutOfField(String),
}
