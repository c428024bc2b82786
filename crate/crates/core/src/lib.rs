//! Exact invariants of finite-dimensional algebras over the rationals.
//!
//! An algebra is presented by structure constants: a basis `e1..en` and a
//! table of products `ei*ej = sum_k c_ijk ek` with rational (optionally
//! parameterized) coefficients. Everything downstream is exact linear
//! algebra over arbitrary-precision rationals — no floating point, no
//! tolerances:
//!
//! * [`derivations`](derivation::derivations) — the Lie algebra `Der(A)` of
//!   maps satisfying the Leibniz rule `d(xy) = d(x)y + x d(y)`,
//! * [`centroid`](centroid::centroid) — the space `Γ(A)` of maps with
//!   `φ(xy) = φ(x)y = x φ(y)`,
//! * [`central_derivations`](centroid::central_derivations) — `Γ(A) ∩ Der(A)`,
//! * nilpotency of the algebra, of individual operators, and of the whole
//!   derivation algebra (characteristic nilpotency).
//!
//! The crate is `no_std` (it allocates, so `alloc` is required); parsing,
//! solving and classification all work without an operating system. IO,
//! serialization and the command-line front end live in the companion
//! `algkit` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod centroid;
pub mod classify;
pub mod derivation;
pub mod matrix;
pub mod parse;
pub mod rational;
pub mod subspace;

pub use algebra::{AlgebraError, ParameterBinding, StructureConstants};
pub use centroid::{
    central_derivations, centroid, CentralDerivationSpace, CentroidPropsReport, CentroidSpace,
};
pub use classify::{classify, ClassificationFlags, EngelError};
pub use derivation::{derivations, DerivationSpace};
pub use matrix::{LinalgError, RatMatrix};
pub use parse::{parse_algebra, parse_algebra_with_params, ParseError, ParseErrorKind};
pub use rational::Rat;
pub use subspace::Subspace;
