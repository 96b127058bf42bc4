//! Derivation algebras of current Lie algebras `g ⊗ A`, computed exactly over
//! the rationals.
//!
//! The crate builds `g ⊗ A` from structure constants, solves the Leibniz
//! system for its derivations, realises the three-summand decomposition
//! `der(g)⊗A + Hom_g(g,g)⊗der(A) + Hom(g/[g,g], z(g))⊗End(A)`, certifies the
//! radical/Levi split of `der(g ⊗ A)`, and provides the explicit block template
//! for derivations of truncated Heisenberg algebras `h_{m,k}`.

pub mod assoc_algebra;
pub mod cli;
pub mod current;
pub mod error;
pub mod exact_linalg;
pub mod heisenberg;
pub mod lie_algebra;

pub use assoc_algebra::AssocAlgebra;
pub use current::{CurrentAlgebra, DecompositionReport};
pub use error::{Error, Result};
pub use exact_linalg::{EndoSubspace, ExactMatrix, Rational, Subspace};
pub use lie_algebra::{LieAlgebra, MatrixLieAlgebra};
