use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },

    #[error("ordering functions differ")]
    OrderingMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("ordering is undefined on the empty set")]
    EmptySet,

    #[error("label sequences are not permutations of each other")]
    LabelMismatch,

    #[error("invalid ordering table: {0}")]
    InvalidOrdering(String),

    #[error("not invertible: body is zero")]
    NotInvertible,

    #[error("the zero element has no annihilator witness")]
    ZeroElement,

    #[error("relabeling is not injective: {first} and {second} both map to {image}")]
    NotInjective { first: u64, second: u64, image: u64 },

    #[error("sup-norm algebra requires a non-Archimedean coefficient field")]
    NotUltrametric,

    #[error("tensor norm modes differ")]
    ModeMismatch,

    #[error("internal invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn mismatch(left: impl std::fmt::Debug, right: impl std::fmt::Debug) -> Self {
        Error::DescriptorMismatch {
            left: format!("{left:?}"),
            right: format!("{right:?}"),
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
