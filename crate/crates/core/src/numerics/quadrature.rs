//! Gauss–Legendre rules and product rules on the disc, the ball of ℂ² and
//! their boundaries.
//!
//! Radial integrals use Gauss–Legendre in `s` with `r = s²`, which smooths
//! the `r log r` behaviour of Green's weights at the origin; the origin is
//! never a node. The circle uses the trapezoid rule. The sphere `S³ ⊂ ℂ²`
//! uses Hopf coordinates `(cos η e^{iα}, sin η e^{iβ})` with trapezoid rules
//! in `α, β` and Gauss–Legendre in `t = sin²η ∈ [0, 1]`, where
//! `dσ = dt dα dβ / 4π²`. After the phase averages the integrand is smooth in
//! `t`, and polynomial in `t` for polynomial integrands.
//!
//! Boundary measures are normalized to mass 1; volume measures are not, so
//! `∫_𝔻 1 dA = π` and `∫_{𝔹₂} 1 dV = π²/2`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::sum::compensated_sum;
use crate::error::{Error, Result};
use crate::geometry::{Space, SpacePoint};

/// Orders of the product rules.
///
/// `radial_order` Gauss–Legendre nodes in the radius, `angular_order`
/// trapezoid nodes per periodic angle and `sphere_nodes` Gauss–Legendre
/// nodes in the Hopf angle (ball only). `tol` is the accepted difference
/// between a rule and its half-order companion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub radial_order: usize,
    pub angular_order: usize,
    pub sphere_nodes: usize,
    pub tol: f64,
}

impl QuadratureSpec {
    pub fn new(radial_order: usize, angular_order: usize, sphere_nodes: usize, tol: f64) -> Result<Self> {
        let q = QuadratureSpec {
            radial_order,
            angular_order,
            sphere_nodes,
            tol,
        };
        q.validate()?;
        Ok(q)
    }

    /// Disc rule with `order` radial and angular nodes.
    pub fn disc(order: usize) -> Self {
        QuadratureSpec {
            radial_order: order,
            angular_order: order,
            sphere_nodes: order,
            tol: 1e-8,
        }
    }

    /// Ball rule derived from a single order: `order/2` radial nodes,
    /// `order/2` nodes per Hopf phase and `order/4` Hopf polar nodes.
    pub fn ball(order: usize) -> Self {
        QuadratureSpec {
            radial_order: (order / 2).max(4),
            angular_order: (order / 2).max(4),
            sphere_nodes: (order / 4).max(8),
            tol: 1e-3,
        }
    }

    /// The default rule for `space` at the given order.
    pub fn for_space(space: &Space, order: usize) -> Self {
        if space.dim() == 1 {
            Self::disc(order)
        } else {
            Self::ball(order)
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// Half-order companion used for convergence estimates.
    pub fn coarsened(&self) -> Self {
        QuadratureSpec {
            radial_order: (self.radial_order / 2).max(4),
            angular_order: (self.angular_order / 2).max(4),
            sphere_nodes: (self.sphere_nodes / 2).max(4),
            tol: self.tol,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.radial_order < 4 || self.angular_order < 4 || self.sphere_nodes < 4 {
            return Err(Error::input(format!(
                "quadrature orders must be at least 4, got {self:?}"
            )));
        }
        if self.radial_order > 512 || self.sphere_nodes > 512 {
            return Err(Error::input("Gauss-Legendre orders are limited to 512"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::input("quadrature tolerance must be positive"));
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
///
/// Newton iteration on `P_n` from the Tricomi initial guesses.
pub fn gauss_legendre(order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if order == 0 || order > 512 {
        return Err(Error::input(format!(
            "Gauss-Legendre order must lie in 1..=512, got {order}"
        )));
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let k = (i + 1) as f64;
        let mut x = (PI * (k - 0.25) / (nf + 0.5)).cos()
            * (1.0 - (nf - 1.0) / (8.0 * nf * nf * nf));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok((nodes, weights))
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_interval(order: usize, a: f64, b: f64) -> Result<Vec<(f64, f64)>> {
    let (x, w) = gauss_legendre(order)?;
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    Ok(x.iter().zip(&w).map(|(x, w)| (mid + half * x, half * w)).collect())
}

/// Node and weight of a normalized rule on the unit sphere of ℂⁿ.
#[derive(Debug, Clone)]
struct SphereNode {
    dir: Vec<Complex64>,
    weight: f64,
}

fn sphere_rule(dim: usize, q: &QuadratureSpec) -> Result<Vec<SphereNode>> {
    let m = q.angular_order;
    let angle = |k: usize| 2.0 * PI * k as f64 / m as f64;
    match dim {
        1 => Ok((0..m)
            .map(|k| SphereNode {
                dir: vec![Complex64::from_polar(1.0, angle(k))],
                weight: 1.0 / m as f64,
            })
            .collect()),
        2 => {
            // dσ = dt dα dβ / 4π² with t = sin²η
            let polar = gauss_legendre_interval(q.sphere_nodes, 0.0, 1.0)?;
            let mut out = Vec::with_capacity(polar.len() * m * m);
            let phase_w = 1.0 / (m * m) as f64;
            for (t, w_t) in polar {
                let (s, c) = (t.sqrt(), (1.0 - t).sqrt());
                let w = w_t * phase_w;
                for a in 0..m {
                    let za = Complex64::from_polar(c, angle(a));
                    for b in 0..m {
                        out.push(SphereNode {
                            dir: vec![za, Complex64::from_polar(s, angle(b))],
                            weight: w,
                        });
                    }
                }
            }
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!(
            "quadrature is implemented for complex dimension 1 and 2, not {dim}"
        ))),
    }
}

/// Surface area of the unit sphere in ℂⁿ = ℝ²ⁿ: `2πⁿ / (n-1)!`.
pub fn sphere_area(dim: usize) -> f64 {
    let fact: f64 = (1..dim).map(|k| k as f64).product();
    2.0 * PI.powi(dim as i32) / fact
}

fn non_finite(context: &'static str, p: &[Complex64], v: f64) -> Error {
    Error::numeric(context, format!("integrand is {v} at node {p:?}"))
}

/// `∫_{𝔹ₙ} f dV` for `n ∈ {1, 2}` (`n = 1` is `dA` on the disc).
pub fn ball_quadrature<F>(f: F, q: &QuadratureSpec, dim: usize) -> Result<f64>
where
    F: Fn(&SpacePoint) -> f64 + Sync,
{
    q.validate()?;
    let sphere = sphere_rule(dim, q)?;
    let radial = gauss_legendre_interval(q.radial_order, 0.0, 1.0)?;
    let area = sphere_area(dim);
    let shells: Vec<f64> = radial
        .par_iter()
        .map(|&(s, ws)| -> Result<f64> {
            let r = s * s;
            // dr = 2s ds, volume element r^{2n-1} dr dS
            let jac = 2.0 * s * r.powi(2 * dim as i32 - 1) * ws * area;
            let mut terms = Vec::with_capacity(sphere.len());
            for node in &sphere {
                let p = SpacePoint::new(node.dir.iter().map(|d| d * r).collect())?;
                let v = f(&p);
                if !v.is_finite() {
                    return Err(non_finite("ball quadrature", p.coords(), v));
                }
                terms.push(v * node.weight);
            }
            Ok(jac * compensated_sum(terms))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(compensated_sum(shells))
}

/// `∫_𝔻 f dA`.
pub fn disc_quadrature<F>(f: F, q: &QuadratureSpec) -> Result<f64>
where
    F: Fn(&SpacePoint) -> f64 + Sync,
{
    ball_quadrature(f, q, 1)
}

/// Mean of `f` over the boundary sphere (`dm` on 𝕋, `dσ` on 𝕊).
///
/// `f` receives boundary coordinates, which are not points of the open
/// ball, so it takes a raw coordinate slice.
pub fn boundary_quadrature<F>(f: F, q: &QuadratureSpec, space: &Space) -> Result<f64>
where
    F: Fn(&[Complex64]) -> f64 + Sync,
{
    q.validate()?;
    let sphere = sphere_rule(space.dim(), q)?;
    let terms = sphere
        .par_iter()
        .map(|node| {
            let v = f(&node.dir);
            if v.is_finite() {
                Ok(v * node.weight)
            } else {
                Err(non_finite("boundary quadrature", &node.dir, v))
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(compensated_sum(terms))
}
