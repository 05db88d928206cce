//! Quantions: an eight-real-dimensional associative algebra of 2x2 complex
//! matrices that carries both a quantum-mechanical and a special-relativistic
//! structure, together with the (sigma, alpha, a) "quantal" framework it
//! fits into.
//!
//! The crate is organized around three layers:
//!
//! * [`quantion`] / [`four_vector`] / [`tetrad`] / [`basis`]: the number
//!   system itself. Two independent routes to the product (matrix
//!   multiplication and a Minkowski/Hodge form), involutions, the two norms,
//!   inverses off the null cone, and exact product tables for the tetrad,
//!   quaternion, and null-tetrad bases.
//! * [`quantal`]: realizations of the sigma/alpha/a axioms with a seeded,
//!   reproducible identity-verification suite, tensor composition, complex
//!   structures, centralizers, and the Kahler split of hermitian inner
//!   products.
//! * [`representations`]: the left regular action on state doublets and the
//!   causal classification of Zovko currents.
//!
//! The `qtn` binary exposes the same machinery from the command line.

pub mod basis;
pub mod four_vector;
pub mod quantal;
pub mod quantion;
pub mod representations;
pub mod tetrad;
pub mod tolerances;

pub use four_vector::{minkowski_dot, FourVector};
pub use num_complex::Complex64;
pub use quantion::{Quantion, QuantionError};
