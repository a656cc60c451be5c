//! Exact dense linear algebra over an abstract field.
//!
//! The field is an *object*, not just a type: a [`PrimeField`] carries its
//! modulus, so all element operations go through `&self`. Matrices and
//! subspaces store a copy of their field and refuse to mix operands from
//! different fields.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::Matrix;
pub use subspace::{induced_on_quotient, restricted_to, Subspace};
