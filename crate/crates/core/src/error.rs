use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// `Fault` is reserved for internal consistency violations: a result that
/// contradicts a proven structural fact about the objects involved. The CLI
/// maps it to its own exit code so it is never confused with bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("inverse of zero in GF({0})")]
    ZeroInverse(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("singular generator at index {0}")]
    SingularGenerator(usize),
    #[error("group closure exceeded the element cap of {0}")]
    ElementCap(usize),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not generated by pseudo-reflections")]
    NotReflectionGroup,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("character is undefined on element {0}")]
    CharacterDomain(usize),
    #[error("subspace is not contained in the fixed space V^G")]
    NotFixed,
    #[error("generator {0} is not invariant")]
    NotInvariant(usize),
    #[error("projection requires the direct summand property")]
    NoProjection,
    #[error("hyperplane exponent search hit its cap {cap}; raise the cap to continue")]
    ExponentCap { cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid group spec: {0}")]
    Spec(String),
    #[error("internal consistency fault: {0}")]
    Fault(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_fault(&self) -> bool {
        matches!(self, Error::Fault(_))
    }
}

macro_rules! fault {
    ($($arg:tt)*) => {
        $crate::error::Error::Fault(format!($($arg)*))
    };
}
pub(crate) use fault;
