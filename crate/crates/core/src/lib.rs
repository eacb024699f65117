//! Operator calculus for (k,a)-generalized harmonic analysis.
//!
//! The crate provides, over reduced root systems with multiplicity
//! functions:
//!
//! - the Dunkl Laplacian and k-harmonic polynomial spaces, in exact
//!   rational arithmetic ([`poly`]);
//! - a closed symbolic class of radial functions (finite sums
//!   `c·r^γ·exp(-q·r^s)`) together with Laguerre-type orthonormal bases for
//!   both signs of the deformation parameter `a` ([`radial`], [`laguerre`]);
//! - the sl₂-triple of deformed operators, its radial parts, and exact
//!   verification of the bracket, ladder and radial-factorization
//!   identities ([`sl2`], [`polar`]);
//! - the substitution-with-power-twist transforms `κ_{α,β}`, including the
//!   unitary involution that intertwines positive and negative deformation
//!   parameters and generalizes the Kelvin transform ([`kappa`]);
//! - diagonal spectral models of the Laguerre semigroup and generalized
//!   Fourier transform on both branches ([`spectral`]).
//!
//! Identities whose coefficients stay rational are checked in exact
//! arithmetic: the expected defect is zero, not merely small. Everything
//! else (orthonormality, ladder constants, unitarity) is verified by
//! generalized Gauss-Laguerre quadrature with stated tolerances.

pub mod corpus;
pub mod error;
pub mod gamma;
pub mod kappa;
pub mod laguerre;
pub mod poly;
pub mod polar;
pub mod quadrature;
pub mod radial;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod sl2;
pub mod spectral;

pub use error::{Error, Result};
