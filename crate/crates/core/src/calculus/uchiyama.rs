//! Uchiyama's measure `ν` built from the Carleson potential, its contractive
//! embedding, the `e·‖φ‖_∞` corollary and the pointwise inequality at atoms.

use std::f64::consts::E;
use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;

use super::green::{ball_normalization, beta_constant, green_from_norm_sq};
use super::laplacian::potential_laplacian_core;
use super::poly::{hardy_norm_sq, MultiPoly};
use crate::error::{Error, Result};
use crate::geometry::{inner_raw, SpacePoint};
use crate::measure::{carleson_potential, kernel_constant_grid, DiscreteMeasure};
use crate::numerics::{ball_quadrature, QuadratureSpec};

/// Grid resolution used for the `‖φ‖_∞` estimate of [`corollary_check`].
pub const PHI_SUP_GRID: usize = 64;

/// Density of `ν` against `dA` (disc) or `dV` (ball), without the factor `e^φ`.
///
/// Disc: `(1/2π) Δφ log(1/|z|)`. Ball: `(n!/πⁿ) Δ̃φ G (1-|z|²)^{-(n+1)}`,
/// which simplifies to `(n!/πⁿ)(4n²/(n+1)) G Σ w (1-|λ|²)/|1-⟨z,λ⟩|^{2n+2}`.
fn density_without_exp(mu: &DiscreteMeasure, z: &SpacePoint) -> Result<f64> {
    let n = mu.space().dim();
    let core = potential_laplacian_core(mu, z)?;
    let g = green_from_norm_sq(n, z.norm_sq());
    let nf = n as f64;
    Ok(ball_normalization(n) * 4.0 * nf * nf / (nf + 1.0) * core * g)
}

/// Density of Uchiyama's measure `ν` at `z`; `+∞` at the origin.
pub fn uchiyama_density(mu: &DiscreteMeasure, z: &SpacePoint) -> Result<f64> {
    let phi = carleson_potential(mu, z)?;
    Ok(phi.exp() * density_without_exp(mu, z)?)
}

fn check_poly(mu: &DiscreteMeasure, f: &MultiPoly) -> Result<()> {
    if f.dim() != mu.space().dim() {
        return Err(Error::Dimension {
            expected: mu.space().dim(),
            found: f.dim(),
        });
    }
    Ok(())
}

/// `(∫|f|² dν, ‖f‖²_{H²})`; the embedding is contractive, so the first never
/// exceeds the second.
pub fn uchiyama_embedding_check(mu: &DiscreteMeasure, f: &MultiPoly, q: &QuadratureSpec) -> Result<(f64, f64)> {
    check_poly(mu, f)?;
    let norm_sq = hardy_norm_sq(f, mu.space())?;
    if f.is_zero() {
        return Ok((0.0, norm_sq));
    }
    let integrand = |z: &SpacePoint| {
        let fz = f.eval(z.coords()).norm_sqr();
        uchiyama_density(mu, z).map_or(f64::NAN, |d| fz * d)
    };
    let integral = ball_quadrature(integrand, q, mu.space().dim())?;
    Ok((integral, norm_sq))
}

/// `(∫|f|² dν/e^φ, e·‖φ‖_∞·‖f‖²)`.
///
/// `‖φ‖_∞` is estimated from below by the largest `-φ` over the quadrature
/// nodes, the atoms and the measure grid at [`PHI_SUP_GRID`].
pub fn corollary_check(mu: &DiscreteMeasure, f: &MultiPoly, q: &QuadratureSpec) -> Result<(f64, f64)> {
    check_poly(mu, f)?;
    let norm_sq = hardy_norm_sq(f, mu.space())?;
    // -φ > 0, and the bit patterns of positive doubles sort like the values
    let node_max = AtomicU64::new(0);
    let integrand = |z: &SpacePoint| {
        let Ok(phi) = carleson_potential(mu, z) else {
            return f64::NAN;
        };
        node_max.fetch_max((-phi).to_bits(), Ordering::Relaxed);
        let fz = f.eval(z.coords()).norm_sqr();
        density_without_exp(mu, z).map_or(f64::NAN, |d| fz * d)
    };
    let integral = ball_quadrature(integrand, q, mu.space().dim())?;
    let phi_sup = f64::from_bits(node_max.load(Ordering::Relaxed)).max(kernel_constant_grid(mu, PHI_SUP_GRID)?);
    Ok((integral, E * phi_sup * norm_sq))
}

/// Both sides of the pointwise inequality at the atom `lambda_idx`:
///
/// `(n!/πⁿ) ∫ |f|² e^φ (1-|λ|²)(1-|z|²)ⁿ / |1-⟨z,λ⟩|^{2n+2} dV
///     ≥ ((n!)²/(2n)!) e^{φ(λ)} |f(λ)|²`,
///
/// which on the disc reads `(1/π) ∫ … dA ≥ ½ e^{φ(λ)} |f(λ)|²`.
pub fn key_inequality_check(
    mu: &DiscreteMeasure,
    f: &MultiPoly,
    lambda_idx: usize,
    q: &QuadratureSpec,
) -> Result<(f64, f64)> {
    check_poly(mu, f)?;
    let atom = mu.atoms().get(lambda_idx).ok_or_else(|| {
        Error::input(format!("atom index {lambda_idx} out of range for {} atoms", mu.len()))
    })?;
    let n = mu.space().dim();
    let lambda = &atom.point;
    let rhs = beta_constant(n) * carleson_potential(mu, lambda)?.exp() * f.eval(lambda.coords()).norm_sqr();
    if f.is_zero() {
        return Ok((0.0, rhs));
    }
    let wl = 1.0 - lambda.norm_sq();
    let integrand = |z: &SpacePoint| {
        let Ok(phi) = carleson_potential(mu, z) else {
            return f64::NAN;
        };
        let den = (Complex64::new(1.0, 0.0) - inner_raw(z.coords(), lambda.coords())).norm_sqr();
        let kernel = wl * (1.0 - z.norm_sq()).powi(n as i32) / den.powi(n as i32 + 1);
        f.eval(z.coords()).norm_sqr() * phi.exp() * kernel
    };
    let lhs = ball_normalization(n) * ball_quadrature(integrand, q, n)?;
    Ok((lhs, rhs))
}
