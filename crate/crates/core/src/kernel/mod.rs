//! Exact linear algebra over ℚ and cyclotomic fields.

pub mod cyclotomic;
pub mod elim;
pub mod field;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use cyclotomic::Cyclotomic;
pub use field::{Field, Rref};
pub use matrix::{dot, Matrix};
pub use poly::{squarefree_part, Poly};
pub use rational::Rational;
pub use subspace::Subspace;
