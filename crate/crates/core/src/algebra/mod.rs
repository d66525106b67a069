//! The Lie algebra `su(N)`: generator basis, structure tensors and the
//! vector products built from them.

mod basis;
mod coords;
pub mod identities;
mod tensors;

pub use basis::GeneratorBasis;
pub use coords::{AlgebraCoords, ComplexCoords};
pub use tensors::StructureTensors;

/// Number of generators of `su(n)`, `n² − 1`.
pub fn algebra_dim(n: usize) -> usize {
    n * n - 1
}
