use thiserror::Error;

/// Errors shared across the crate.
///
/// Resource errors (caps exceeded) are distinguished from argument errors;
/// callers that map errors onto exit codes can use [`Error::is_resource`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("cannot parse {0:?} as a group literal like \"Z4xZ2xZ3\"")]
    GroupLiteral(String),

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    OrderCap { order: u128, cap: u64 },

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coordinate {value} out of range for modulus {modulus}")]
    CoordinateRange { value: u64, modulus: u64 },

    #[error("{value} is neither 0 nor a divisor of {modulus}")]
    NotADivisor { value: u64, modulus: u64 },

    #[error("divisor tuples do not match the group moduli")]
    ModuliMismatch,

    #[error("divisor set must be nonempty")]
    EmptyDivisorSet,

    #[error("connection set is not symmetric: {0:?} lacks its negation")]
    Asymmetric(Vec<u64>),

    #[error("groups differ")]
    GroupMismatch,

    #[error("cyclotomic order {order} exceeds the context cap {cap}")]
    ContextTooLarge { order: u64, cap: u64 },

    #[error("mixed cyclotomic contexts: Q(zeta_{left}) vs Q(zeta_{right})")]
    ContextMismatch { left: u64, right: u64 },

    #[error("context order {order} is not a multiple of modulus {modulus}")]
    ContextOrder { modulus: u64, order: u64 },

    #[error("cannot lift from Q(zeta_{source}) into Q(zeta_{target})")]
    ContextLift { source: u64, target: u64 },

    #[error("character sum at {character:?} is not a rational integer")]
    IntegralityViolation { character: Vec<u64> },

    #[error("zero denominator in rational multiple of pi")]
    ZeroDenominator,

    #[error("cannot parse {0:?} as a rational multiple of pi like \"1/2\"")]
    TimeLiteral(String),

    #[error("connection sets overlap; the union product needs disjoint sets")]
    OverlappingSets,

    #[error("graph order {order} exceeds the dense cap {cap}")]
    DenseCap { order: u64, cap: usize },

    #[error("bit vector {mask:#b} does not fit dimension {dim}")]
    CubeVector { mask: u64, dim: usize },

    #[error("modulus {0} is not a power of two")]
    NotTwoPower(u64),

    #[error("divisor tuples do not share the same odd-part divisors")]
    MixedOddDivisors,

    #[error("the full divisor tuple (the moduli themselves) is not allowed here")]
    FullTupleInSet,

    #[error("no perfect state transfer at pi*{0}; the hypothesis is unmet")]
    NoPstAtTime(String),

    #[error("divisor sets must be disjoint")]
    SetsNotDisjoint,

    #[error("cube connection has even size {0}; an odd size is required")]
    EvenCube(usize),

    #[error("coefficient does not fit in 64 bits when serializing")]
    CoefficientOverflow,
}

impl Error {
    /// True for cap-style resource exhaustion, false for bad arguments.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::OrderCap { .. } | Error::DenseCap { .. } | Error::ContextTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
