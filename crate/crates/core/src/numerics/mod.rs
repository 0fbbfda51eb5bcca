//! Self-contained numerical kernels: Hermitian extreme eigenvalues,
//! Gauss–Legendre and product quadrature, finite-difference stencils,
//! compensated summation and deterministic random streams.

pub mod eigen;
pub mod fd;
pub mod quadrature;
pub mod rng;
pub mod sum;

pub use eigen::{extreme_eigs, extreme_pairs, jacobi_eigh, ExtremePairs, HermitianMatrix};
pub use quadrature::{
    ball_quadrature, boundary_quadrature, disc_quadrature, gauss_legendre, QuadratureSpec,
};
pub use rng::{rng_stream, StreamRng};
pub use sum::{compensated_sum, NeumaierSum};
