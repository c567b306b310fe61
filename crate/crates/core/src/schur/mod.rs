//! The iSchur algebra `S(n, r)`: standard basis, structure constants through
//! the Hecke model, closed multiplication formulas, the preorder on matrices
//! and triangular bases.

mod algebra;
mod element;
pub mod formulas;
pub mod order;
pub mod triangular;

pub use algebra::{basis_size, product, BasisData, SchurAlgebra, BASIS_CAP};
pub use element::SchurElement;
pub use formulas::{multi_mul, short_mul, Kind};
