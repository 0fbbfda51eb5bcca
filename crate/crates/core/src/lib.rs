//! Carleson measures on the unit disc and the unit ball of ℂⁿ.
//!
//! The crate computes the three classical Carleson constants of a finitely
//! supported measure (embedding norm, reproducing-kernel constant, box
//! constant), and exposes the kernel, Laplacian, Green's-function and
//! quadrature machinery needed to check the 2e and e·(2n)!/(n!)² embedding
//! bounds numerically.
//!
//! Module map:
//!
//! * [`geometry`]: spaces, points, Szegő/Poisson kernels, Möbius maps.
//! * [`measure`]: discrete measures, `A(μ)²`, `C(μ)²`, `I(μ)`, reports.
//! * [`calculus`]: Laplacians, Green's functions, Uchiyama densities.
//! * [`interpolation`]: Carleson separation constant and Gram conditioning.
//! * [`extremal`]: random-restart search for large `A²/C` ratios.
//! * [`numerics`]: eigenvalues, quadrature, finite differences, RNG streams.

pub mod calculus;
pub mod error;
pub mod extremal;
pub mod geometry;
pub mod interpolation;
pub mod measure;
pub mod numerics;

pub use error::{Error, Result};
pub use geometry::{Space, SpaceKind, SpacePoint};
pub use measure::{AnalysisReport, Atom, DiscreteMeasure};
pub use num_complex::Complex64;
