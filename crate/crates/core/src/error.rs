use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },

    #[error("variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("zero polynomial is not allowed as a generator")]
    ZeroGenerator,

    #[error("expected a form of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("degree {degree} is below the supported minimum {min}")]
    DegreeTooSmall { degree: u32, min: u32 },

    #[error(
        "generators of degrees ({a}, {b}) are not a regular sequence: \
         quotient has dimension {computed} in degree {degree}, expected {expected}"
    )]
    NotRegularSequence {
        a: u32,
        b: u32,
        degree: u32,
        computed: usize,
        expected: usize,
    },

    #[error("polynomial is not smooth: Jacobian ring has dimension {dim} in degree {degree}")]
    NotSmooth { degree: u32, dim: usize },

    #[error("complete intersection of type ({a}, {b}) has non-integral genus")]
    NonIntegralGenus { a: u64, b: u64 },

    #[error("genus {genus} is out of range (minimum {min})")]
    GenusOutOfRange { genus: u64, min: u64 },

    #[error("curve class `{class}` is incompatible with genus {genus}")]
    ClassGenus { class: String, genus: u64 },

    #[error("unknown curve class `{0}`")]
    UnknownClass(String),

    #[error("invalid singularity `{0}`")]
    InvalidSingularity(String),

    #[error("total delta {total_delta} exceeds arithmetic genus {pa}")]
    DeltaExceedsGenus { total_delta: u64, pa: u64 },

    #[error("step {index} raises delta from {initial} to {target}; not a degeneration")]
    DeltaIncrease { index: usize, initial: u64, target: u64 },
}
