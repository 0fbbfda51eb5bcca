//! Points of the unit disc / unit ball of ℂⁿ, the Szegő and Poisson–Szegő
//! kernels, and the involutive Möbius automorphisms.
//!
//! Conventions: `⟨z, w⟩ = Σ z_i·conj(w_i)`, the Szegő kernel is
//! `K(z, w) = (1 - ⟨z, w⟩)⁻ⁿ` (boundary measure normalized to mass 1), the
//! normalized kernel is `k_λ(z) = (1 - |λ|²)^{n/2} K(z, λ)` and the Poisson
//! kernel is `𝒫_z(λ) = |k_z(λ)|²`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points with `|z|² > 1 - CONDITIONING_MARGIN` are flagged as ill-conditioned:
/// kernels grow like `(1 - |z|²)⁻ⁿ` there.
pub const CONDITIONING_MARGIN: f64 = 1e-8;

/// Smallest admissible `|1 - ⟨z, w⟩|`. For interior points the true value is
/// at least `1 - (1 - 2⁻⁵³)`, so anything below is rounding damage.
const SINGULARITY_EPS: f64 = f64::EPSILON / 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Disc,
    Ball,
}

/// The ambient domain: the unit disc, or the unit ball of ℂⁿ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Space {
    kind: SpaceKind,
    dim: usize,
}

impl Space {
    pub const fn disc() -> Self {
        Space {
            kind: SpaceKind::Disc,
            dim: 1,
        }
    }

    pub fn ball(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("ball dimension must be at least 1"));
        }
        Ok(Space {
            kind: SpaceKind::Ball,
            dim,
        })
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// Complex dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_disc(&self) -> bool {
        self.kind == SpaceKind::Disc
    }

    /// Checks that `p` lives in this space.
    pub fn check(&self, p: &SpacePoint) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: p.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpaceKind::Disc => write!(f, "disc"),
            SpaceKind::Ball => write!(f, "ball{}", self.dim),
        }
    }
}

/// A point of the open unit ball of ℂⁿ (`n = 1` for the disc).
#[derive(Debug, Clone, PartialEq)]
pub struct SpacePoint {
    coords: Vec<Complex64>,
    norm_sq: f64,
}

impl SpacePoint {
    /// Validates `Σ|z_i|² < 1` and finiteness.
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::input("a point needs at least one coordinate"));
        }
        if coords.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::input("non-finite coordinate"));
        }
        let norm_sq = coords.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if norm_sq >= 1.0 {
            return Err(Error::input(format!(
                "point is not inside the open unit ball (|z|^2 = {norm_sq})"
            )));
        }
        Ok(SpacePoint { coords, norm_sq })
    }

    /// Builds a point from interleaved `(re, im)` pairs.
    pub fn from_interleaved(values: &[f64]) -> Result<Self> {
        if values.len() % 2 != 0 {
            return Err(Error::input(format!(
                "interleaved coordinates need even length, got {}",
                values.len()
            )));
        }
        Self::new(
            values
                .chunks_exact(2)
                .map(|c| Complex64::new(c[0], c[1]))
                .collect(),
        )
    }

    /// A disc point.
    pub fn disc(z: Complex64) -> Result<Self> {
        Self::new(vec![z])
    }

    pub fn origin(dim: usize) -> Self {
        SpacePoint {
            coords: vec![Complex64::new(0.0, 0.0); dim.max(1)],
            norm_sq: 0.0,
        }
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Cached `Σ|z_i|²`.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq.sqrt()
    }

    /// Interleaved `(re, im)` representation.
    pub fn to_interleaved(&self) -> Vec<f64> {
        self.coords.iter().flat_map(|z| [z.re, z.im]).collect()
    }

    /// Multiplies every coordinate by `c`; `|c| ≤ 1` keeps the point inside.
    pub fn scaled(&self, c: Complex64) -> Result<Self> {
        Self::new(self.coords.iter().map(|z| z * c).collect())
    }

    pub fn is_ill_conditioned(&self) -> bool {
        self.is_ill_conditioned_with(CONDITIONING_MARGIN)
    }

    pub fn is_ill_conditioned_with(&self, margin: f64) -> bool {
        self.norm_sq > 1.0 - margin
    }
}

fn check_pair(s: &Space, a: &SpacePoint, b: &SpacePoint) -> Result<()> {
    s.check(a)?;
    s.check(b)
}

/// Hermitian inner product `Σ z_i·conj(w_i)`.
pub fn inner(z: &SpacePoint, w: &SpacePoint) -> Result<Complex64> {
    if z.dim() != w.dim() {
        return Err(Error::Dimension {
            expected: z.dim(),
            found: w.dim(),
        });
    }
    Ok(inner_raw(z.coords(), w.coords()))
}

#[inline]
pub(crate) fn inner_raw(z: &[Complex64], w: &[Complex64]) -> Complex64 {
    z.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
}

#[inline]
pub(crate) fn cpowi(z: Complex64, n: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        acc *= z;
    }
    acc
}

#[inline]
fn one_minus_inner(z: &SpacePoint, w: &SpacePoint) -> Result<Complex64> {
    let d = Complex64::new(1.0, 0.0) - inner_raw(z.coords(), w.coords());
    if !(d.norm() >= SINGULARITY_EPS) {
        return Err(Error::Singularity(d.norm()));
    }
    Ok(d)
}

/// Unnormalized Szegő kernel `K(z, w) = 1 / (1 - ⟨z, w⟩)ⁿ`.
pub fn szego_kernel(z: &SpacePoint, w: &SpacePoint, s: &Space) -> Result<Complex64> {
    check_pair(s, z, w)?;
    let d = one_minus_inner(z, w)?;
    Ok(cpowi(d, s.dim()).inv())
}

/// Normalized kernel `k_λ(z) = (1 - |λ|²)^{n/2} / (1 - ⟨z, λ⟩)ⁿ`.
pub fn normalized_kernel(lambda: &SpacePoint, z: &SpacePoint, s: &Space) -> Result<Complex64> {
    let k = szego_kernel(z, lambda, s)?;
    Ok(k * (1.0 - lambda.norm_sq()).powf(s.dim() as f64 / 2.0))
}

/// Poisson–Szegő kernel `𝒫_z(λ) = (1 - |z|²)ⁿ / |1 - ⟨λ, z⟩|²ⁿ`.
pub fn poisson_kernel(z: &SpacePoint, lambda: &SpacePoint, s: &Space) -> Result<f64> {
    check_pair(s, z, lambda)?;
    let d = one_minus_inner(lambda, z)?;
    Ok(((1.0 - z.norm_sq()) / d.norm_sqr()).powi(s.dim() as i32))
}

/// Involutive automorphism exchanging `λ` and `0`.
///
/// Disc: `(λ - z) / (1 - conj(λ) z)`. Ball:
/// `(λ - P_λ z - s_λ Q_λ z) / (1 - ⟨z, λ⟩)` with `P_λ` the orthogonal
/// projection onto `ℂλ`, `Q_λ = I - P_λ` and `s_λ = (1 - |λ|²)^{1/2}`;
/// `λ = 0` gives `-z`.
pub fn mobius(lambda: &SpacePoint, z: &SpacePoint, s: &Space) -> Result<SpacePoint> {
    check_pair(s, lambda, z)?;
    let denom = one_minus_inner(z, lambda)?;
    let coords: Vec<Complex64> = if s.is_disc() {
        let (l, w) = (lambda.coords()[0], z.coords()[0]);
        vec![(l - w) / denom]
    } else if lambda.norm_sq() == 0.0 {
        z.coords().iter().map(|w| -w).collect()
    } else {
        let zl = inner_raw(z.coords(), lambda.coords());
        let ratio = zl / lambda.norm_sq();
        let s_l = (1.0 - lambda.norm_sq()).sqrt();
        lambda
            .coords()
            .iter()
            .zip(z.coords())
            .map(|(l, w)| {
                let proj = l * ratio;
                let perp = w - proj;
                (l - proj - perp * s_l) / denom
            })
            .collect()
    };
    SpacePoint::new(coords).map_err(|_| {
        Error::numeric(
            "mobius",
            "image left the open ball through rounding; points are too close to the boundary",
        )
    })
}

/// Pseudo-hyperbolic distance `|φ_a(b)|`.
pub fn pseudo_hyperbolic(a: &SpacePoint, b: &SpacePoint, s: &Space) -> Result<f64> {
    Ok(mobius(a, b, s)?.norm())
}
