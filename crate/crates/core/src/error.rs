//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T, E = OpticError> = std::result::Result<T, E>;

/// Failures raised while building or running optics over dynamic values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpticError {
    /// A function received a value of the wrong constructor.
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: &'static str, found: String },

    /// A lookup-table function was applied outside its domain.
    #[error("value {value} is outside the domain `{domain}`")]
    OutOfDomain { value: String, domain: String },

    /// A shape was used with a functor family that does not contain it.
    #[error("shape `{shape}` is not a member of the `{family}` functor family")]
    NotMember { shape: String, family: String },

    /// A profunctor capability was asked to enhance a shape it cannot lift through.
    #[error("capability `{capability}` cannot enhance shape `{shape}`")]
    UnsupportedShape { capability: String, shape: String },

    /// A capability was handed to an optic whose functor family it does not cover.
    #[error("capability `{capability}` does not cover the `{family}` functor family")]
    UnsupportedCapability { capability: String, family: String },

    /// An operator was requested from an optic family that cannot provide it.
    #[error("operator `{operator}` is not supported by the {family} family")]
    UnsupportedOperator { operator: &'static str, family: String },

    /// Invalid finite domain or generator parameters.
    #[error("domain error: {0}")]
    Domain(String),
}

impl OpticError {
    pub(crate) fn mismatch(expected: &'static str, found: impl std::fmt::Display) -> Self {
        OpticError::TypeMismatch {
            expected,
            found: found.to_string(),
        }
    }
}
