//! Evaluation and certified real-zero isolation for Meixner and Krawtchouk
//! polynomials.
//!
//! The crate evaluates both families through their terminating ₂F₁
//! representations, isolates and certifies their real zeros with a
//! generalised Sturmian sign-variation scan over the integer mesh backed by
//! exact rational arithmetic, cross-validates against a Jacobi-matrix
//! eigenvalue oracle, and verifies the discrete orthogonality relations the
//! two families satisfy.
//!
//! Module map:
//!
//! - [`scalar`]: exact rational arithmetic ([`ExactScalar`]) and the
//!   floating-point layer; every sign decision on a certification path is
//!   exact.
//! - [`hypgeo`]: Pochhammer symbols, terminating ₂F₁ series, polynomial
//!   evaluation by three independent routes (direct series, difference-
//!   equation propagation, Pfaff reflection), and the Meixner→Krawtchouk
//!   parameter substitution.
//! - [`zeros`]: sign-variation mesh scan, bracket isolation, certified
//!   bisection refinement, recurrence coefficients, and the symmetric
//!   tridiagonal eigenvalue oracle.
//! - [`ortho`]: Krawtchouk finite orthogonality sums (exact) and Meixner
//!   infinite sums (adaptive truncation) against closed-form right-hand
//!   sides.
//!
//! The crate is `no_std`-compatible (`alloc` required); the default `std`
//! feature enables `std::error::Error` impls.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod hypgeo;
pub mod ortho;
pub mod scalar;
pub mod zeros;

pub use hypgeo::{Family, PolySpec};
pub use scalar::{ExactScalar, RealScalar, Scalar};
pub use zeros::{CertifiedZero, Method, ZeroSet};
