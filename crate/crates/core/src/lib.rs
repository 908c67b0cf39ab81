//! Exact arithmetic for integral binary quadratic forms.
//!
//! For an irreducible form `f(x, y) = f2 x² + f1 xy + f0 y²` this crate
//! builds the rational special automorphisms of `f` from rational points of
//! the conic `x² + ε·δ·y² = 1` (with `4δ = |Δ|`, ε = +1 for definite forms
//! and ε = −1 for indefinite ones), transports any integer representation
//! of a value `h` to any other representation of the same value, runs
//! censuses of representable values, and produces certified rational lines
//! on the quadric surface `f(x1, x2) = f(x3, x4)`.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! the census density diagnostic is the only floating-point output.

pub mod automorphism;
pub mod census;
pub mod conic;
pub mod error;
pub mod form;
pub mod json;
pub mod quadric;
pub mod transporter;

pub use error::Error;
pub use form::{Form, FormClass, Representation};
