//! Exact computations in the iSchur algebra `S^j(n, r)` of type AIII.
//!
//! The [`schur`] module multiplies standard basis elements through an
//! independent Hecke algebra model and checks closed multiplication formulas
//! against it; [`longform`] handles long elements and their stable
//! multiplication rules; [`tensor`] realises the algebra on tensor space.

pub mod error;
pub mod hecke;
pub mod longform;
pub mod qarith;
pub mod schur;
pub mod suites;
pub mod tensor;
pub mod weyl;

pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use qarith::LaurentPoly;
pub use schur::{SchurAlgebra, SchurElement};
pub use suites::{run_suite, Suite, SuiteConfig, SuiteReport};
pub use tensor::{MultiIndex, TensorVector};
pub use weyl::{Composition, ThetaMatrix, WeylElement, WeylGroup};
