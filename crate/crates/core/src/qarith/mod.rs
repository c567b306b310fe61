//! Laurent polynomials in `v` with integer coefficients and the quantum
//! scalars built from them.

mod laurent;
mod scalars;

pub use laurent::LaurentPoly;
pub use scalars::{
    balanced_binom, bbracket, bracket, gauss_binom, qfactorial, quantum_scalar, QuantumScalar,
};
