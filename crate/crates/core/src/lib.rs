//! Exact computer algebra for the rotational symmetry structure of
//! polynomial rings over the Gaussian rationals Q(i).
//!
//! The crate works with sparse multivariate polynomials in `N`
//! indeterminates `x1..xN` with exact `a + b*i` rational coefficients and
//! provides:
//!
//! - the rotation generators `M_jk = x_j d_k - x_k d_j`, the Laplacian,
//!   the Euler operator and the quadratic Casimir ([`ops`]);
//! - harmonic decomposition in base `X.X = x1^2 + ... + xN^2`, the sphere
//!   projection `L_c`, harmonic bases built from boundary data, and the
//!   eigenspace split of `(X.X)Δ` ([`harmonic`]);
//! - the normalized spherical mean `λ0` through three independent routes:
//!   the monomial double-factorial rule, the iterated Laplacian, and the
//!   pair-partition expansion for products of linear forms ([`mean`]);
//! - zonal harmonics via a Gegenbauer-type recursion and simultaneous
//!   eigenvectors of the commuting generators ([`zonal`]);
//! - seeded verification suites that check every identity by exact
//!   computation ([`verify`]).
//!
//! There is no floating point anywhere: every comparison is exact
//! equality in Q(i).

pub mod arith;
pub mod error;
pub mod harmonic;
pub mod linalg;
pub mod mean;
pub mod ops;
pub mod poly;
pub mod text;
pub mod verify;
pub mod zonal;

pub use arith::{double_factorial, BigRational, GaussianRational};
pub use error::Error;
pub use harmonic::{
    harmonic_basis, harmonic_decompose, harmonic_from_boundary, is_harmonic, project_lc,
    HarmonicDecomposition,
};
pub use mean::{
    check_mean_value_harmonic, pairing_mean, rotate, s_coeff, shifted_mean, spherical_mean,
    spherical_mean_via_laplacian, OrthoMatrix,
};
pub use ops::{
    apply_derivation, casimir, commutator, euler, laplacian, partial, rotation_generator,
    Derivation, Operator,
};
pub use poly::{Degree, Monomial, Poly};
pub use zonal::{
    common_eigen_harmonic, eigen_monomial, gegenbauer_solve, l_kernel_lift,
    odd_dim_eigen_harmonic, zonal_harmonic, EigenSignature, UniPoly,
};
