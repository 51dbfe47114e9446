use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{n} exceeds the configured limit of {limit} elements")]
    FieldTooLarge { p: u32, n: u32, limit: u64 },
    #[error("modulus {0:?} is not a monic irreducible polynomial")]
    BadModulus(Vec<u32>),
    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("subfield degree {s} does not divide extension degree {n}")]
    NotADivisor { s: u32, n: u32 },
    #[error("elements do not form a basis over the subfield")]
    NotABasis,
    #[error("coefficient {value} out of range for characteristic {p}")]
    CoefficientOutOfRange { value: u32, p: u32 },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("enumeration needs {p}^{k} codewords but the budget is 2^{budget_log2}")]
    BudgetExceeded { p: u32, k: usize, budget_log2: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("zero scalar in monomial transform at column {0}")]
    ZeroScalar(usize),
    #[error("cyclotomic operands use different primes ({0} vs {1})")]
    CyclotomicMismatch(u32, u32),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("closed form at {0} has a non-vanishing imaginary part")]
    NonRealClosedForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
