//! Laplacians, Green's functions and Uchiyama's measure.
//!
//! Everything here is a numerical witness for the analysis behind the
//! embedding bounds: closed forms are paired with finite-difference or
//! quadrature oracles, and inequalities are returned as `(lhs, rhs)` pairs
//! for the caller to compare at its own tolerance.

pub mod green;
pub mod laplacian;
pub mod poly;
pub mod uchiyama;

pub use green::{
    beta_constant, green_from_norm_sq, green_function_ball, green_over_weight, green_weight_disc,
    greens_formula_check, GreenCheck, LaplacianSource,
};
pub use laplacian::{
    invariant_laplacian_fd, invariant_laplacian_fd_extrapolated, invariant_laplacian_poisson_ball,
    laplacian_fd, laplacian_fd_extrapolated, laplacian_poisson_disc, poisson_gradient_ball, potential_laplacian_closed,
};
pub use poly::{hardy_norm_sq, monomial_norm_sq, multi_indices, MultiPoly};
pub use uchiyama::{corollary_check, key_inequality_check, uchiyama_density, uchiyama_embedding_check};

pub use crate::numerics::QuadratureSpec;
