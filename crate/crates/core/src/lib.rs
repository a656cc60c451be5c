//! Exact computational toolkit for nilpotent orbits and Springer fibers:
//!
//! * partition and Young-diagram combinatorics, including the parity
//!   conditions ("admissibility") a diagram must satisfy to be the Jordan
//!   type of a nilpotent element preserving an orthogonal or symplectic
//!   form ([`partitions`]);
//! * standard Young tableaux and domino tableaux, with column-wise
//!   concatenation and the canonical construction of a distinguished domino
//!   tableau for every admissible shape ([`tableaux`]);
//! * exact dense linear algebra over the rationals and over odd prime
//!   fields — reduced row echelon form, kernels, Jordan types of nilpotent
//!   matrices, canonical subspaces and subquotients ([`linalg`]);
//! * concrete nilpotent matrix models, skew-adjoint with respect to an
//!   explicit bilinear form when one is requested, together with orbit
//!   dimension computations and randomized sampling of induced orbits
//!   ([`models`]);
//! * streaming enumeration of x-stable (and isotropic x-stable) complete
//!   flags over small prime fields, with tableau-valued labelling maps and
//!   finite verification suites for the geometric statements they support
//!   ([`flags`]);
//! * the 14-dimensional exceptional Lie algebra of type G2: structure
//!   constants, adjoint matrices, orbit ranks, and Jacobian smoothness
//!   tests for two explicit subvarieties of its nilpotent cone ([`g2`]);
//! * verdict tables answering, per nilpotent orbit of an exceptional
//!   group, whether a smooth orbital variety is guaranteed to exist
//!   ([`exceptional`]).
//!
//! Everything is exact: no floating point anywhere. Computations over
//! finite fields are checks of finitely many cases and are reported as
//! such ("verified over F_q"), never as proofs.

pub mod error;
pub mod exceptional;
pub mod flags;
pub mod g2;
pub mod linalg;
pub mod models;
pub mod partitions;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{FormKind, Partition};
pub use tableaux::{DominoTableau, StandardTableau};
