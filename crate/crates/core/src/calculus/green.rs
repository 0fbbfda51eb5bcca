//! Green's functions with pole at the origin and Green's formula checks.
//!
//! Disc: `(1/2π) ∫_𝔻 Δu log(1/|z|) dA = ∫_𝕋 u dm - u(0)`.
//!
//! Ball of ℂⁿ, invariant metric: `(n!/πⁿ) ∫ Δ̃u G dg = ∫_𝕊 u dσ - u(0)` with
//! `dg = dV/(1-|z|²)^{n+1}` and
//! `G(r) = ((n+1)/(2n)) ∫_r^1 (1-t²)^{n-1} t^{1-2n} dt`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::laplacian::{flat_laplacian_adaptive, interior_step, invariant_contraction_fd};
use crate::error::{Error, Result};
use crate::geometry::{Space, SpaceKind, SpacePoint};
use crate::measure::central_binomial;
use crate::numerics::{ball_quadrature, boundary_quadrature, QuadratureSpec};

/// Below this value of `1 - r²` the Green's function is summed as a power
/// series in `1 - r²` instead of the closed form, which cancels badly.
const SERIES_SWITCH: f64 = 0.5;

/// `log(1/|z|)`, `+∞` at the origin.
pub fn green_weight_disc(z: &SpacePoint) -> f64 {
    log_inv_radius(z.norm_sq())
}

fn log_inv_radius(norm_sq: f64) -> f64 {
    if norm_sq == 0.0 {
        return f64::INFINITY;
    }
    -0.5 * (-(1.0 - norm_sq)).ln_1p()
}

/// `G(λ)` of the invariant Laplacian on the ball of ℂⁿ; `+∞` at the origin.
/// For `n = 1` this is `log(1/|λ|)`.
pub fn green_function_ball(lambda: &SpacePoint, s: &Space) -> Result<f64> {
    s.check(lambda)?;
    Ok(green_from_norm_sq(s.dim(), lambda.norm_sq()))
}

/// `G` as a function of `|λ|²`.
pub fn green_from_norm_sq(n: usize, norm_sq: f64) -> f64 {
    if norm_sq <= 0.0 {
        return f64::INFINITY;
    }
    if norm_sq >= 1.0 {
        return 0.0;
    }
    let w = 1.0 - norm_sq;
    if w < SERIES_SWITCH {
        return green_over_weight(n, norm_sq) * w.powi(n as i32);
    }
    // binomial expansion of (1 - t²)^{n-1}; the k = n-1 term integrates to -log r
    let mut acc = 0.0;
    let mut binom = 1.0;
    for k in 0..n {
        if k > 0 {
            binom *= (n - k) as f64 / k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let m = k as i32 + 1 - n as i32;
        let term = if m == 0 {
            log_inv_radius(norm_sq)
        } else {
            (1.0 - norm_sq.powi(m)) / (2.0 * m as f64)
        };
        acc += sign * binom * term;
    }
    (n as f64 + 1.0) / (2.0 * n as f64) * acc
}

/// `G / (1-|λ|²)ⁿ`, bounded up to the boundary where it tends to `(n+1)/(4n²)`.
pub fn green_over_weight(n: usize, norm_sq: f64) -> f64 {
    let w = 1.0 - norm_sq;
    if w >= SERIES_SWITCH {
        return green_from_norm_sq(n, norm_sq) / w.powi(n as i32);
    }
    // ∫_0^w u^{n-1} (1-u)^{-n} du / 2 = ½ Σ_m C(n+m-1, m) w^{n+m}/(n+m)
    let mut acc = 0.0;
    let mut coeff = 1.0;
    let mut wm = 1.0;
    for m in 0..4000usize {
        if m > 0 {
            coeff *= (n + m - 1) as f64 / m as f64;
            wm *= w;
        }
        let term = coeff * wm / (n + m) as f64;
        acc += term;
        if term < 1e-18 * acc {
            break;
        }
    }
    (n as f64 + 1.0) / (4.0 * n as f64) * acc
}

/// `(n!)²/(2n)! = 2n ∫_0^1 (1-r²)ⁿ r^{2n-1} dr`.
pub fn beta_constant(n: usize) -> f64 {
    1.0 / central_binomial(n)
}

/// `n!/πⁿ`, the normalization of the Green's formula on the ball.
pub(crate) fn ball_normalization(n: usize) -> f64 {
    (1..=n).map(|k| k as f64 / PI).product()
}

/// How the Laplacian inside Green's formula is obtained.
#[derive(Clone, Copy)]
pub enum LaplacianSource<'a> {
    /// Central differences with step `h`, shrunk near the boundary.
    FiniteDifference { h: f64 },
    /// A closed form of `Δu` (disc) or `Δ̃u` (ball).
    Closed(&'a (dyn Fn(&SpacePoint) -> f64 + Sync)),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    /// `|lhs - lhs on the half-order rule|`.
    pub convergence: f64,
}

/// Both sides of Green's formula for `u`, which must be `C²` up to the
/// boundary. `u` takes raw coordinates so it can be evaluated on the sphere.
///
/// Fails with a numeric error when the volume integral moves by more than
/// `q.tol` between `q` and its half-order companion.
pub fn greens_formula_check<U>(u: U, laplacian: LaplacianSource<'_>, s: &Space, q: &QuadratureSpec) -> Result<GreenCheck>
where
    U: Fn(&[Complex64]) -> f64 + Sync,
{
    let lhs = green_lhs(&u, laplacian, s, q)?;
    let coarse = green_lhs(&u, laplacian, s, &q.coarsened())?;
    let convergence = (lhs - coarse).abs();
    if convergence > q.tol {
        return Err(Error::numeric(
            "greens_formula_check",
            format!("volume integral moved by {convergence:e} under order halving, tolerance {:e}", q.tol),
        ));
    }
    let rhs = boundary_quadrature(&u, q, s)? - u(SpacePoint::origin(s.dim()).coords());
    Ok(GreenCheck {
        lhs,
        rhs,
        gap: (lhs - rhs).abs(),
        convergence,
    })
}

fn green_lhs<U>(u: &U, laplacian: LaplacianSource<'_>, s: &Space, q: &QuadratureSpec) -> Result<f64>
where
    U: Fn(&[Complex64]) -> f64 + Sync,
{
    let n = s.dim();
    let at_point = |p: &SpacePoint| u(p.coords());
    match s.kind() {
        SpaceKind::Disc => {
            let integrand = |z: &SpacePoint| {
                let lap = match laplacian {
                    LaplacianSource::FiniteDifference { h } => flat_laplacian_adaptive(&at_point, z, h),
                    LaplacianSource::Closed(f) => f(z),
                };
                lap * green_weight_disc(z)
            };
            Ok(ball_quadrature(integrand, q, 1)? / (2.0 * PI))
        }
        SpaceKind::Ball => {
            let integrand = |z: &SpacePoint| {
                let ns = z.norm_sq();
                let gw = green_over_weight(n, ns);
                match laplacian {
                    // Δ̃u / (1-|z|²)^{n+1} · G = (4/(n+1)) · contraction · G/(1-|z|²)ⁿ
                    LaplacianSource::FiniteDifference { h } => {
                        let step = interior_step(z, h);
                        4.0 / (n as f64 + 1.0) * invariant_contraction_fd(&at_point, z, step) * gw
                    }
                    LaplacianSource::Closed(f) => f(z) * gw / (1.0 - ns),
                }
            };
            Ok(ball_normalization(n) * ball_quadrature(integrand, q, n)?)
        }
    }
}
