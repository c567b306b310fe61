//! Shared fixtures for the benchmarks.

use ischur_core::SchurAlgebra;

/// Index pairs `(a, b)` with `co(a) = ro(b)`, i.e. the nonzero products.
pub fn compatible_pairs(alg: &SchurAlgebra) -> Vec<(u32, u32)> {
    let basis = alg.basis_matrices();
    let mut out = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if a.co() == b.ro() {
                out.push((i as u32, j as u32));
            }
        }
    }
    out
}
