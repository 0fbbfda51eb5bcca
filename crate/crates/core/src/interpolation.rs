//! Finite interpolating sequences in the disc: the Carleson separation
//! constant `δ`, the induced measure `Σ (1-|λ_k|²) δ_{λ_k}`, and the chain
//!
//! `√cond(G) ≤ δ⁻¹ K²`, `K² ≤ 2e (1 + 2 ln δ⁻¹)`,
//! `sup_λ ∫|k_λ|² dμ ≤ 1 + 2 ln δ⁻¹`,
//!
//! which bounds the interpolation constant by `2e δ⁻¹ (1 + 2 ln δ⁻¹)`.
//!
//! The orthogonalizer of the normalized kernels `{k_{λ_j}}` is taken to be
//! `J = G^{-1/2}` for the Gram matrix `G`, so `‖J‖ ‖J⁻¹‖ = √(λ_max/λ_min)`.

use std::f64::consts::E;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{pseudo_hyperbolic, Space, SpacePoint};
use crate::measure::{
    embedding_norm_sq, kernel_constant_grid, kernel_constant_on_support, DiscreteMeasure, MAX_ATOMS, REL_SLACK,
};
use crate::numerics::{compensated_sum, extreme_eigs, HermitianMatrix};

/// Relative floor below which the Gram matrix is treated as singular.
pub const GRAM_SINGULAR: f64 = 1e-14;

/// A finite sequence of distinct points of the disc.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSequence {
    points: Vec<SpacePoint>,
}

impl PointSequence {
    pub fn new(points: Vec<SpacePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::input("a sequence needs at least one point"));
        }
        if points.len() > MAX_ATOMS {
            return Err(Error::input(format!("at most {MAX_ATOMS} points are supported, got {}", points.len())));
        }
        let disc = Space::disc();
        for p in &points {
            disc.check(p)?;
        }
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = points[..i].iter().position(|q| q.coords() == p.coords()) {
                return Err(Error::input(format!("points {j} and {i} coincide, so δ = 0")));
            }
        }
        Ok(PointSequence { points })
    }

    pub fn from_complex(points: &[Complex64]) -> Result<Self> {
        Self::new(points.iter().map(|&z| SpacePoint::disc(z)).collect::<Result<Vec<_>>>()?)
    }

    pub fn points(&self) -> &[SpacePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn space(&self) -> Space {
        Space::disc()
    }
}

/// `δ = min_k Π_{j≠k} |(λ_k - λ_j)/(1 - λ̄_j λ_k)|`, summed in log space.
pub fn carleson_delta(seq: &PointSequence) -> Result<f64> {
    let disc = Space::disc();
    let pts = seq.points();
    let logs = (0..pts.len())
        .into_par_iter()
        .map(|k| {
            let mut terms = Vec::with_capacity(pts.len());
            for (j, q) in pts.iter().enumerate() {
                if j == k {
                    continue;
                }
                let rho = pseudo_hyperbolic(&pts[k], q, &disc)?;
                if rho == 0.0 {
                    return Err(Error::numeric(
                        "carleson_delta",
                        format!("points {j} and {k} are numerically indistinguishable"),
                    ));
                }
                terms.push(rho.ln());
            }
            Ok(compensated_sum(terms))
        })
        .collect::<Result<Vec<f64>>>()?;
    let min_log = logs.into_iter().fold(f64::INFINITY, f64::min);
    Ok(min_log.exp())
}

/// `μ = Σ_k (1 - |λ_k|²) δ_{λ_k}`.
pub fn sequence_measure(seq: &PointSequence) -> Result<DiscreteMeasure> {
    DiscreteMeasure::new(
        Space::disc(),
        seq.points().iter().map(|p| (p.clone(), 1.0 - p.norm_sq())),
    )
}

/// Gram matrix `G_jk = ⟨k_{λ_k}, k_{λ_j}⟩ = √((1-|λ_j|²)(1-|λ_k|²)) / (1 - λ_j λ̄_k)`.
pub fn gram_matrix(seq: &PointSequence) -> Result<HermitianMatrix> {
    let pts = seq.points();
    HermitianMatrix::from_upper(pts.len(), |j, k| {
        if j == k {
            return Complex64::new(1.0, 0.0);
        }
        let (a, b) = (pts[j].coords()[0], pts[k].coords()[0]);
        let scale = ((1.0 - pts[j].norm_sq()) * (1.0 - pts[k].norm_sq())).sqrt();
        scale / (Complex64::new(1.0, 0.0) - a * b.conj())
    })
}

/// `‖J‖ ‖J⁻¹‖ = √(λ_max(G)/λ_min(G))`.
pub fn orthogonalizer_cond(seq: &PointSequence) -> Result<f64> {
    let (lo, hi) = extreme_eigs(&gram_matrix(seq)?)?;
    if lo <= GRAM_SINGULAR * hi {
        return Err(Error::numeric(
            "orthogonalizer_cond",
            format!("Gram matrix is numerically singular: λ_min = {lo:e}, λ_max = {hi:e}"),
        ));
    }
    Ok((hi / lo).sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationReport {
    pub len: usize,
    pub delta: f64,
    /// `K²`, embedding norm of the induced measure.
    pub k_sq: f64,
    /// `2e (1 + 2 ln δ⁻¹)`.
    pub k_sq_bound: f64,
    /// `√cond(G)`.
    pub gram_cond_root: f64,
    /// `δ⁻¹ K²`.
    pub orth_bound: f64,
    /// `2e δ⁻¹ (1 + 2 ln δ⁻¹)`.
    pub interp_constant: f64,
    /// Grid estimate of `sup_λ ∫|k_λ|² dμ`.
    pub kernel_sup: f64,
    /// `1 + 2 ln δ⁻¹`.
    pub kernel_sup_bound: f64,
    /// Kernel constant on the support of the induced measure.
    pub c_supp: f64,
    /// `gram_cond_root ≤ orth_bound`.
    pub orth_holds: bool,
    /// `k_sq ≤ k_sq_bound`.
    pub k_sq_holds: bool,
    /// `kernel_sup ≤ kernel_sup_bound`; reported, not asserted.
    pub kernel_sup_holds: bool,
    /// `k_sq ≤ 2e · c_supp`.
    pub embedding_holds: bool,
    pub grid_resolution: usize,
}

impl InterpolationReport {
    /// The three inequalities of the chain, in order (orthogonalizer,
    /// embedding norm, kernel supremum).
    pub fn chain(&self) -> [bool; 3] {
        [self.orth_holds, self.k_sq_holds, self.kernel_sup_holds]
    }
}

fn leq(a: f64, b: f64) -> bool {
    a <= b * (1.0 + REL_SLACK)
}

pub fn interpolation_report(seq: &PointSequence, resolution: usize) -> Result<InterpolationReport> {
    let delta = carleson_delta(seq)?;
    if !(delta > 0.0) {
        return Err(Error::numeric("interpolation_report", "δ underflowed to 0"));
    }
    let mu = sequence_measure(seq)?;
    let k_sq = embedding_norm_sq(&mu)?;
    let c_supp = kernel_constant_on_support(&mu)?;
    let kernel_sup = kernel_constant_grid(&mu, resolution)?;
    let gram_cond_root = orthogonalizer_cond(seq)?;
    let log_inv = -delta.ln();
    let kernel_sup_bound = 1.0 + 2.0 * log_inv;
    let k_sq_bound = 2.0 * E * kernel_sup_bound;
    let orth_bound = k_sq / delta;
    Ok(InterpolationReport {
        len: seq.len(),
        delta,
        k_sq,
        k_sq_bound,
        gram_cond_root,
        orth_bound,
        interp_constant: k_sq_bound / delta,
        kernel_sup,
        kernel_sup_bound,
        c_supp,
        orth_holds: leq(gram_cond_root, orth_bound),
        k_sq_holds: leq(k_sq, k_sq_bound),
        kernel_sup_holds: leq(kernel_sup, kernel_sup_bound),
        embedding_holds: leq(k_sq, 2.0 * E * c_supp),
        grid_resolution: resolution,
    })
}
