//! Exact symbolic spherical harmonics and their ladder-operator algebra.
//!
//! Harmonics are represented as finite Fourier sums of trigonometric
//! polynomials with coefficients in an exact scalar field (rationals,
//! square roots of squarefree integers, and half-integer powers of pi).
//! Every named first-order operator of the su(2), fixed-order, and
//! u(1,1) ladder families acts exactly on this algebra, so operator
//! identities, ladder coefficients, Casimir eigenvalues, adjointness
//! relations, and generation-route equivalences are decided by exact
//! coefficient comparison, with floating-point quadrature as an
//! independent cross-check.

pub mod error;
pub mod harmonics;
pub mod inner;
pub mod operators;
pub mod poly;
pub mod scalar;
pub mod sphere;
pub mod theta;
pub mod verify;

pub use error::AlgebraError;
pub use harmonics::{HarmonicIndex, SubspaceLabel};
pub use scalar::{Rational, Scalar};
pub use sphere::{LadderOperator, SphereFunction};
pub use theta::ThetaForm;
