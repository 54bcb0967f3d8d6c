//! Error type shared by the exact algebra layers.

use thiserror::Error;

/// Errors produced by the exact arithmetic and operator layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Addition of scalars carrying different powers of pi.
    #[error("cannot add scalars with pi exponents {0}/2 and {1}/2")]
    PiExponentMismatch(i64, i64),

    /// Square root of a negative rational.
    #[error("square root of negative rational {0}")]
    NegativeRadicand(String),

    /// Trial division could not certify a squarefree split.
    #[error("squarefree factorization of {0} failed (trial division bound {1})")]
    FactorizationFailure(String, u64),

    /// Division by sin(theta) left a nonzero remainder: the function is not
    /// in the smooth trigonometric-polynomial class.
    #[error("division by sin(theta) is not exact (remainder {0})")]
    NonSmoothResult(String),

    /// Invalid spherical-harmonic or subspace index.
    #[error("index out of range: l = {l}, m = {m}")]
    IndexOutOfRange { l: i64, m: i64 },

    /// Unknown operator family name (CLI tables).
    #[error("unknown operator family: {0}")]
    UnknownFamily(String),
}
