//! The type C Weyl group as theta-fixed permutations, compositions, parabolic
//! subgroups, coset representatives and the double coset / matrix bijection.

mod composition;
mod element;
mod group;
mod matrix;

pub use composition::{bounded_compositions, Composition};
pub use element::{WeylElement, MAX_RANK};
pub use group::{bfs_distances, WeylGroup};
pub use matrix::{e_theta, ThetaMatrix};
