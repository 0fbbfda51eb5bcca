//! Flat and invariant Laplacians, by finite differences and in closed form.
//!
//! The invariant Laplacian of the ball is `Δ̃ = 4 Σ g^{ij} ∂̄_i ∂_j` with
//! `g^{ij} = ((1-|z|²)/(n+1)) (δ_ij - z̄_i z_j)`. For `n = 1` it equals
//! `(1-|z|²)² Δ / 2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{inner_raw, poisson_kernel, Space, SpacePoint};
use crate::measure::DiscreteMeasure;
use crate::numerics::{compensated_sum, fd, NeumaierSum};

fn check_margin(z: &SpacePoint, h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::input(format!("finite-difference step must be positive, got {h}")));
    }
    if 1.0 - z.norm() <= 2.0 * h {
        return Err(Error::input(format!(
            "stencil of step {h} around a point of norm {} leaves the ball",
            z.norm()
        )));
    }
    Ok(())
}

fn eval_interleaved<F>(u: &F, x: &[f64]) -> f64
where
    F: Fn(&SpacePoint) -> f64,
{
    match SpacePoint::from_interleaved(x) {
        Ok(p) => u(&p),
        Err(_) => f64::NAN,
    }
}

/// Flat Laplacian `Σ (∂²_{x_k} + ∂²_{y_k}) u` by central differences
/// (the five-point stencil on the disc).
pub fn laplacian_fd<F>(u: F, z: &SpacePoint, h: f64) -> Result<f64>
where
    F: Fn(&SpacePoint) -> f64,
{
    check_margin(z, h)?;
    Ok(flat_laplacian_unchecked(&u, z, h))
}

/// Richardson-extrapolated [`laplacian_fd`] from steps `h` and `h/2`.
pub fn laplacian_fd_extrapolated<F>(u: F, z: &SpacePoint, h: f64) -> Result<f64>
where
    F: Fn(&SpacePoint) -> f64,
{
    let a = laplacian_fd(&u, z, h)?;
    let b = laplacian_fd(&u, z, 0.5 * h)?;
    Ok(fd::richardson(a, b))
}

fn flat_laplacian_unchecked<F>(u: &F, z: &SpacePoint, h: f64) -> f64
where
    F: Fn(&SpacePoint) -> f64,
{
    let x = z.to_interleaved();
    let center = u(z);
    let mut p = x.clone();
    let mut acc = NeumaierSum::new();
    for k in 0..x.len() {
        p[k] = x[k] + h;
        let fp = eval_interleaved(u, &p);
        p[k] = x[k] - h;
        let fm = eval_interleaved(u, &p);
        p[k] = x[k];
        acc.add((fp - 2.0 * center + fm) / (h * h));
    }
    acc.value()
}

/// Matrix `H_ij = ∂̄_i ∂_j u` from the real Hessian, row-major `n × n`.
fn complex_hessian<F>(u: &F, z: &SpacePoint, h: f64) -> Vec<Complex64>
where
    F: Fn(&SpacePoint) -> f64,
{
    let n = z.dim();
    let x = z.to_interleaved();
    let real = fd::hessian(|p| eval_interleaved(u, p), &x, h);
    let d = 2 * n;
    let at = |a: usize, b: usize| real[a * d + b];
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let (xi, yi, xj, yj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
            out[i * n + j] = 0.25
                * Complex64::new(at(xi, xj) + at(yi, yj), at(yi, xj) - at(xi, yj));
        }
    }
    out
}

/// `Σ_ij (δ_ij - z̄_i z_j) ∂̄_i ∂_j u`, so that `Δ̃u = 4(1-|z|²)/(n+1)` times it.
pub(crate) fn invariant_contraction_fd<F>(u: &F, z: &SpacePoint, h: f64) -> f64
where
    F: Fn(&SpacePoint) -> f64,
{
    let n = z.dim();
    let hess = complex_hessian(u, z, h);
    let c = z.coords();
    let mut acc = NeumaierSum::new();
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j { 1.0 } else { 0.0 };
            let g = Complex64::new(delta, 0.0) - c[i].conj() * c[j];
            acc.add((g * hess[i * n + j]).re);
        }
    }
    acc.value()
}

/// Invariant Laplacian `Δ̃u(z)` from central differences of the real Hessian.
pub fn invariant_laplacian_fd<F>(u: F, z: &SpacePoint, s: &Space, h: f64) -> Result<f64>
where
    F: Fn(&SpacePoint) -> f64,
{
    s.check(z)?;
    check_margin(z, h)?;
    let n = z.dim() as f64;
    Ok(4.0 * (1.0 - z.norm_sq()) / (n + 1.0) * invariant_contraction_fd(&u, z, h))
}

/// Richardson-extrapolated [`invariant_laplacian_fd`] from steps `h` and `h/2`.
pub fn invariant_laplacian_fd_extrapolated<F>(u: F, z: &SpacePoint, s: &Space, h: f64) -> Result<f64>
where
    F: Fn(&SpacePoint) -> f64,
{
    let a = invariant_laplacian_fd(&u, z, s, h)?;
    let b = invariant_laplacian_fd(&u, z, s, 0.5 * h)?;
    Ok(fd::richardson(a, b))
}

/// Step actually used inside quadrature: `h`, shrunk so the stencil stays
/// well inside the ball.
pub(crate) fn interior_step(z: &SpacePoint, h: f64) -> f64 {
    h.min(0.25 * (1.0 - z.norm()))
}

pub(crate) fn flat_laplacian_adaptive<F>(u: &F, z: &SpacePoint, h: f64) -> f64
where
    F: Fn(&SpacePoint) -> f64,
{
    flat_laplacian_unchecked(u, z, interior_step(z, h))
}

/// `Δ_z 𝒫_z(λ) = 4(|λ|² - 1)/|1 - λ̄z|⁴` on the disc.
pub fn laplacian_poisson_disc(z: &SpacePoint, lambda: &SpacePoint) -> Result<f64> {
    let d = Space::disc();
    d.check(z)?;
    d.check(lambda)?;
    let den = (Complex64::new(1.0, 0.0) - lambda.coords()[0].conj() * z.coords()[0]).norm_sqr();
    Ok(-4.0 * (1.0 - lambda.norm_sq()) / (den * den))
}

/// `Σ_j w_j (1-|λ_j|²) / |1 - ⟨z,λ_j⟩|^{2n+2}`, the common factor of the
/// closed-form Laplacians of the Carleson potential.
pub(crate) fn potential_laplacian_core(mu: &DiscreteMeasure, z: &SpacePoint) -> Result<f64> {
    mu.space().check(z)?;
    let n = z.dim() as i32;
    let terms = mu.atoms().iter().map(|a| {
        let den = (Complex64::new(1.0, 0.0) - inner_raw(z.coords(), a.point.coords())).norm_sqr();
        a.weight * (1.0 - a.point.norm_sq()) / den.powi(n + 1)
    });
    Ok(compensated_sum(terms))
}

/// `Δφ` on the disc, `Δ̃φ` on the ball, for the Carleson potential of `mu`.
///
/// Disc: `4 Σ w (1-|λ|²)/|1-λ̄z|⁴`. Ball:
/// `(4n²/(n+1)) (1-|z|²) Σ w 𝒫_z(λ) 𝒫_λ(z)^{1/n}`.
pub fn potential_laplacian_closed(mu: &DiscreteMeasure, z: &SpacePoint) -> Result<f64> {
    let core = potential_laplacian_core(mu, z)?;
    let s = mu.space();
    if s.is_disc() {
        return Ok(4.0 * core);
    }
    let n = s.dim() as f64;
    let w = 1.0 - z.norm_sq();
    Ok(4.0 * n * n / (n + 1.0) * w.powi(s.dim() as i32 + 1) * core)
}

/// `Δ̃_z 𝒫_z(λ) = -(4n²/(n+1)) (1-|z|²) 𝒫_z(λ) 𝒫_λ(z)^{1/n}`.
pub fn invariant_laplacian_poisson_ball(z: &SpacePoint, lambda: &SpacePoint, s: &Space) -> Result<f64> {
    let n = s.dim() as f64;
    let pz = poisson_kernel(z, lambda, s)?;
    let pl = poisson_kernel(lambda, z, s)?;
    Ok(-4.0 * n * n / (n + 1.0) * (1.0 - z.norm_sq()) * pz * pl.powf(1.0 / n))
}

/// `∂_j 𝒫_z(λ) = n [λ̄_j/(1-⟨z,λ⟩) - z̄_j/(1-|z|²)] 𝒫_z(λ)`, holomorphic
/// derivative in `z_j`, with `j` a 0-based coordinate index.
pub fn poisson_gradient_ball(z: &SpacePoint, lambda: &SpacePoint, j: usize, s: &Space) -> Result<Complex64> {
    let n = s.dim();
    if j >= n {
        return Err(Error::input(format!("coordinate index {j} out of range for dimension {n}")));
    }
    let p = poisson_kernel(z, lambda, s)?;
    let denom = Complex64::new(1.0, 0.0) - inner_raw(z.coords(), lambda.coords());
    let bracket = lambda.coords()[j].conj() / denom - z.coords()[j].conj() / (1.0 - z.norm_sq());
    Ok(bracket * (n as f64 * p))
}
