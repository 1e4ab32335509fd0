use thiserror::Error;

/// Errors raised by the field, curve, lattice and code layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus must be monic of degree {expected}, got {got} coefficients")]
    BadModulusDegree { expected: u32, got: usize },
    #[error("modulus is reducible over GF({0})")]
    NotIrreducible(u32),
    #[error("field order {0} exceeds the supported maximum 2^16")]
    FieldTooLarge(u64),
    #[error("coefficient {digit} is not a residue modulo {p}")]
    BadDigit { digit: u32, p: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("integer {value} is outside [0, {q})")]
    OutOfRange { value: u64, q: u32 },
    #[error("matrix dimensions do not match: {0}")]
    ShapeMismatch(String),

    #[error("gcd(m, r*lambda) = gcd({m}, {r_lambda}) = {gcd}, expected 1")]
    GcdViolation { m: i64, r_lambda: i64, gcd: i64 },
    #[error("characteristic {p} divides m = {m}")]
    CharacteristicDividesM { p: u32, m: i64 },
    #[error("m must be at least 2, got {0}")]
    DegreeTooSmall(i64),
    #[error("lambda must be positive, got {0}")]
    BadLambda(i64),
    #[error("root list is empty")]
    NoRoots,
    #[error("roots are not pairwise distinct (codec {0} repeated)")]
    DuplicateRoots(u32),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial does not split into distinct linear factors over the field")]
    DoesNotSplit,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("divisor has {got} ramified coefficients, curve has r = {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("monomial has a pole at the evaluation place")]
    PoleAtPlace,

    #[error("expected {expected} coordinates, got {got}")]
    BadArity { expected: usize, got: usize },
    #[error("pure gap coordinates must be positive")]
    NonPositiveCoordinate,
    #[error("place tuple selects no places")]
    EmptyPlaceTuple,
    #[error("box of pure gaps is invalid: {0}")]
    InvalidGapBox(String),
    #[error("search grid of {0} cells exceeds the supported size")]
    SearchTooLarge(u128),
    #[error("L(H) is zero, the floor is undefined")]
    EmptyRiemannRochSpace,

    #[error("evaluation place {0} lies in the support of G")]
    PlaceInSupport(String),
    #[error("evaluation place {0} is repeated")]
    DuplicatePlace(String),
    #[error("divisor is inconsistent with the requested bound: {0}")]
    InconsistentDivisor(String),
    #[error("code dimension {got} disagrees with the predicted {expected}")]
    DimensionMismatch { expected: i64, got: i64 },
    #[error("enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
