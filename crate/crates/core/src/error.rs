//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by fallible operations.
///
/// Dimension mismatches between polynomials in arithmetic (adding a
/// 2-variable polynomial to a 3-variable one, out-of-range variable
/// indices in operators) are programming errors and panic instead; every
/// value-level precondition that user input can violate surfaces here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("double factorial is undefined for {0} (argument must be >= -1)")]
    DoubleFactorialRange(i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable index {index} out of range for dimension {dim}")]
    VariableOutOfRange { index: usize, dim: usize },

    #[error("divisor is not monic in x{var} (leading coefficient must be 1)")]
    NonMonicDivisor { var: usize },

    #[error("substitution needs {expected} images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },

    #[error("substitution images live in different dimensions")]
    ImageDimensionMismatch,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("expected a polynomial of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: String, got: String },

    #[error("matrix is not orthogonal (A^T A != I)")]
    NotOrthogonal,

    #[error("matrix is not square or has inconsistent row lengths")]
    MalformedMatrix,

    #[error("pairing mean requires an even number of linear forms")]
    OddPairingCount,

    #[error("pairing mean requires every form to be homogeneous linear")]
    NonLinearForm,

    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },

    #[error("direction vector must not be all zero")]
    ZeroDirection,

    #[error("eigen signature is inconsistent: {0}")]
    BadSignature(String),

    #[error("derivation does not annihilate X.X")]
    NotAnnihilating,

    #[error("kernel is zero: no lift exists for n = 1 and degree >= 1")]
    EmptyKernel,

    #[error("polynomial is not in the kernel of the block operator L")]
    NotInKernel,

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}
