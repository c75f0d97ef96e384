//! Exact linear algebra over the rationals.
//!
//! Vectors are rows and matrices act on the right (`x ↦ x·M`), which matches
//! the composition order of right modules.

mod echelon;
mod mat;
mod rat;
mod subspace;

pub use echelon::EchelonBasis;
pub use mat::{axpy, dot, is_zero_vec, unit_vec, Mat};
pub use rat::{ParseRatError, Rat};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

/// Reduced row-echelon form of `m` with its pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    m.rref()
}

/// Left kernel `{x : x·m = 0}`.
pub fn kernel(m: &Mat) -> Subspace {
    m.left_kernel()
}

/// Some `x` with `x·m = b`.
pub fn solve(m: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    m.solve_left(b)
}
