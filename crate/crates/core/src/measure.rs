//! Finitely supported measures and their Carleson constants.
//!
//! For `μ = Σ w_j δ_{λ_j}` the embedding `H² → L²(μ)` has finite rank, and
//! its squared norm is the top eigenvalue of the weighted Szegő Gram matrix
//! `M_jk = √(w_j w_k) K(λ_j, λ_k)`. The kernel constants are suprema of
//! `Σ_j w_j 𝒫_z(λ_j)` over the support (exact) or over a grid (a lower
//! bound of the supremum over the whole ball).

use std::f64::consts::{E, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{poisson_kernel, szego_kernel, Space, SpacePoint};
use crate::numerics::{compensated_sum, extreme_eigs, HermitianMatrix};

/// Relative slack for the exactly-true inequalities `C ≤ A² ≤ bound · C`.
pub const REL_SLACK: f64 = 1e-9;

/// Grid radii stop at `1 - GRID_EDGE`.
pub const GRID_EDGE: f64 = 1e-4;

/// Practical cap on the number of atoms handed to the eigensolver.
pub const MAX_ATOMS: usize = 2000;

#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    pub point: SpacePoint,
    pub weight: f64,
}

/// A finite positive measure `Σ w_j δ_{λ_j}` on the disc or ball.
///
/// Atoms at identical points are merged by summing weights; the order of
/// first appearance is kept.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    space: Space,
    atoms: Vec<Atom>,
}

impl DiscreteMeasure {
    pub fn new<I>(space: Space, atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SpacePoint, f64)>,
    {
        let mut merged: Vec<Atom> = Vec::new();
        for (point, weight) in atoms {
            space.check(&point)?;
            if !(weight > 0.0) || !weight.is_finite() {
                return Err(Error::input(format!("atom weight must be positive and finite, got {weight}")));
            }
            match merged.iter_mut().find(|a| a.point.coords() == point.coords()) {
                Some(existing) => existing.weight += weight,
                None => merged.push(Atom { point, weight }),
            }
        }
        if merged.is_empty() {
            return Err(Error::input("a measure needs at least one atom"));
        }
        Ok(DiscreteMeasure { space, atoms: merged })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        compensated_sum(self.atoms.iter().map(|a| a.weight))
    }

    /// `c·μ`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.space, self.atoms.iter().map(|a| (a.point.clone(), a.weight * c)))
    }

    /// Push-forward under `z ↦ u·z` for a unimodular `u`.
    pub fn rotated(&self, u: Complex64) -> Result<Self> {
        let u = u / u.norm();
        let atoms = self
            .atoms
            .iter()
            .map(|a| Ok((a.point.scaled(u)?, a.weight)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.space, atoms)
    }

    pub fn with_atom(&self, point: SpacePoint, weight: f64) -> Result<Self> {
        let mut atoms: Vec<(SpacePoint, f64)> =
            self.atoms.iter().map(|a| (a.point.clone(), a.weight)).collect();
        atoms.push((point, weight));
        Self::new(self.space, atoms)
    }

    /// Indices of atoms close enough to the boundary to make kernels
    /// ill-conditioned.
    pub fn ill_conditioned_atoms(&self) -> Vec<usize> {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| a.point.is_ill_conditioned())
            .map(|(i, _)| i)
            .collect()
    }
}

/// `Σ_j w_j 𝒫_z(λ_j) = ‖k_z‖²_{L²(μ)}`.
pub fn kernel_mass(mu: &DiscreteMeasure, z: &SpacePoint) -> Result<f64> {
    let terms = mu
        .atoms
        .iter()
        .map(|a| Ok(a.weight * poisson_kernel(z, &a.point, &mu.space)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(compensated_sum(terms))
}

/// Carleson potential `φ(z) = -∫ 𝒫_z(λ) dμ(λ)`.
pub fn carleson_potential(mu: &DiscreteMeasure, z: &SpacePoint) -> Result<f64> {
    Ok(-kernel_mass(mu, z)?)
}

fn par_max<I>(values: I) -> Result<f64>
where
    I: ParallelIterator<Item = Result<f64>>,
{
    let all = values.collect::<Result<Vec<f64>>>()?;
    Ok(all.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

/// `sup_{λ ∈ supp μ} ∫ |k_λ|² dμ`, the hypothesis constant of the 2e bound.
pub fn kernel_constant_on_support(mu: &DiscreteMeasure) -> Result<f64> {
    par_max(mu.atoms.par_iter().map(|a| kernel_mass(mu, &a.point)))
}

/// Lower-bound estimate of `sup_{z} ∫ |k_z|² dμ` over a deterministic grid
/// united with the atoms.
///
/// Disc: Chebyshev–Lobatto radii in `[0, 1 - 10⁻⁴]` times uniform angles,
/// at the dyadic level `M = 2^⌊log₂ resolution⌋` (`M + 1` radii, `2M`
/// angles). Ball: the first `4·resolution²` points of a Halton sequence
/// mapped to the ball. Both grids are nested as `resolution` grows, so the
/// result is nondecreasing in `resolution`.
pub fn kernel_constant_grid(mu: &DiscreteMeasure, resolution: usize) -> Result<f64> {
    if resolution < 8 {
        return Err(Error::input(format!("grid resolution must be at least 8, got {resolution}")));
    }
    let grid = grid_points(&mu.space, resolution)?;
    let on_grid = par_max(grid.par_iter().map(|z| kernel_mass(mu, z)))?;
    Ok(on_grid.max(kernel_constant_on_support(mu)?))
}

/// The evaluation grid used by [`kernel_constant_grid`].
pub fn grid_points(space: &Space, resolution: usize) -> Result<Vec<SpacePoint>> {
    let r_max = 1.0 - GRID_EDGE;
    let radius = |u: f64| r_max * 0.5 * (1.0 - (PI * u).cos());
    if space.dim() == 1 {
        let m = 1usize << resolution.ilog2();
        let mut pts = Vec::with_capacity((m + 1) * 2 * m);
        for k in 0..=m {
            let r = radius(k as f64 / m as f64);
            if k == 0 {
                pts.push(SpacePoint::origin(1));
                continue;
            }
            for j in 0..2 * m {
                let theta = PI * j as f64 / m as f64;
                pts.push(SpacePoint::disc(Complex64::from_polar(r, theta))?);
            }
        }
        Ok(pts)
    } else {
        let n = space.dim();
        let count = 4 * resolution * resolution;
        let bases = first_primes(2 * n + 1);
        let mut pts = Vec::with_capacity(count);
        for idx in 1..=count {
            let u: Vec<f64> = bases.iter().map(|&b| radical_inverse(idx as u64, b)).collect();
            let r = radius(u[0]);
            // Box–Muller on the remaining coordinates gives an isotropic direction.
            let mut g = Vec::with_capacity(2 * n);
            for pair in u[1..].chunks(2) {
                let (u1, u2) = (pair[0], *pair.get(1).unwrap_or(&0.5));
                let rad = (-2.0 * u1.ln()).sqrt();
                g.push(Complex64::from_polar(rad, 2.0 * PI * u2));
            }
            let dir: Vec<Complex64> = g.iter().take(n).copied().collect();
            let len = dir.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if len == 0.0 || !len.is_finite() {
                continue;
            }
            pts.push(SpacePoint::new(dir.iter().map(|z| z * (r / len)).collect())?);
        }
        Ok(pts)
    }
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while primes.len() < count {
        if primes.iter().all(|p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut out = 0.0;
    while i > 0 {
        out += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    out
}

/// Lower-bound estimate of the box constant
/// `I(μ) = sup { μ(Q(ξ, r)) / r : ξ ∈ 𝕋, r > 0 }` on the disc.
///
/// For a fixed center the ratio only increases at the radii where an atom
/// enters the closed disc `Q(ξ, r)`, so it suffices to scan those radii. The
/// centers are `directions` equispaced points of 𝕋 plus, for every atom off
/// the origin, its radial projection and a few nearby angles.
pub fn box_constant(mu: &DiscreteMeasure, directions: usize) -> Result<f64> {
    if !mu.space.is_disc() {
        return Err(Error::Unsupported(
            "the box constant is only defined here for the disc".into(),
        ));
    }
    if directions < 16 {
        return Err(Error::input(format!("need at least 16 directions, got {directions}")));
    }
    let step = 2.0 * PI / directions as f64;
    let mut angles: Vec<f64> = (0..directions).map(|k| k as f64 * step).collect();
    for a in &mu.atoms {
        let z = a.point.coords()[0];
        if z.norm() == 0.0 {
            continue;
        }
        let theta = z.arg();
        angles.push(theta);
        for i in 0..5 {
            let d = 0.5 * step * 0.5f64.powi(i);
            angles.push(theta + d);
            angles.push(theta - d);
        }
    }
    let atoms: Vec<(Complex64, f64)> = mu.atoms.iter().map(|a| (a.point.coords()[0], a.weight)).collect();
    let best = angles
        .par_iter()
        .map(|&theta| {
            let xi = Complex64::from_polar(1.0, theta);
            let mut d: Vec<(f64, f64)> = atoms.iter().map(|(z, w)| ((z - xi).norm(), *w)).collect();
            d.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut best: f64 = 0.0;
            let mut mass = 0.0;
            let mut i = 0;
            while i < d.len() {
                let r = d[i].0;
                while i < d.len() && d[i].0 == r {
                    mass += d[i].1;
                    i += 1;
                }
                best = best.max(mass / r);
            }
            best
        })
        .collect::<Vec<f64>>();
    Ok(best.into_iter().fold(0.0, f64::max))
}

/// Weighted Gram matrix `M_jk = √(w_j w_k) K(λ_j, λ_k)` of the embedding.
pub fn embedding_gram(mu: &DiscreteMeasure) -> Result<HermitianMatrix> {
    let n = mu.len();
    if n > MAX_ATOMS {
        return Err(Error::input(format!("at most {MAX_ATOMS} atoms are supported, got {n}")));
    }
    let mut err = None;
    let m = HermitianMatrix::from_upper(n, |j, k| {
        let (a, b) = (&mu.atoms[j], &mu.atoms[k]);
        match szego_kernel(&a.point, &b.point, &mu.space) {
            Ok(kv) => kv * (a.weight * b.weight).sqrt(),
            Err(e) => {
                err.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => m,
    }
}

/// `(λ_min, λ_max)` of the embedding Gram matrix.
pub fn embedding_spectrum(mu: &DiscreteMeasure) -> Result<(f64, f64)> {
    extreme_eigs(&embedding_gram(mu)?)
}

/// Squared norm `A(μ)²` of the embedding `H² ⊂ L²(μ)`.
pub fn embedding_norm_sq(mu: &DiscreteMeasure) -> Result<f64> {
    Ok(embedding_spectrum(mu)?.1.max(0.0))
}

/// `2e` on the disc, `e·(2n)!/(n!)²` on the ball of ℂⁿ.
pub fn theorem_bound_constant(space: &Space) -> f64 {
    match space.kind() {
        crate::geometry::SpaceKind::Disc => 2.0 * E,
        crate::geometry::SpaceKind::Ball => E * central_binomial(space.dim()),
    }
}

/// `(2n)! / (n!)²`.
pub(crate) fn central_binomial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * (n + k) as f64 / k as f64)
}

/// All constants for one measure.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub space: Space,
    pub atom_count: usize,
    /// Embedding norm `A(μ)²`.
    pub a_sq: f64,
    /// Kernel constant over the support.
    pub c_supp: f64,
    /// Kernel constant over the grid (lower bound of the sup over the ball).
    pub c_grid: f64,
    /// Box constant estimate, disc only.
    pub i_box: Option<f64>,
    pub bound_constant: f64,
    /// `bound_constant · c_supp`.
    pub bound: f64,
    /// `a_sq / c_supp`.
    pub ratio: f64,
    /// `a_sq ≤ bound` up to [`REL_SLACK`].
    pub holds: bool,
    /// `c_supp ≤ a_sq` up to [`REL_SLACK`].
    pub lower_holds: bool,
    pub gram_min_eig: f64,
    pub grid_resolution: usize,
    pub box_directions: Option<usize>,
}

/// Number of circle directions used by [`analyze`] for the box constant.
pub fn box_directions_for(resolution: usize) -> usize {
    (4 * resolution).max(16)
}

pub fn analyze(mu: &DiscreteMeasure, resolution: usize) -> Result<AnalysisReport> {
    let (gram_min_eig, a_sq) = embedding_spectrum(mu)?;
    let a_sq = a_sq.max(0.0);
    let c_supp = kernel_constant_on_support(mu)?;
    let c_grid = kernel_constant_grid(mu, resolution)?;
    let (i_box, box_directions) = if mu.space.is_disc() {
        let d = box_directions_for(resolution);
        (Some(box_constant(mu, d)?), Some(d))
    } else {
        (None, None)
    };
    let bound_constant = theorem_bound_constant(&mu.space);
    let bound = bound_constant * c_supp;
    Ok(AnalysisReport {
        space: mu.space,
        atom_count: mu.len(),
        a_sq,
        c_supp,
        c_grid,
        i_box,
        bound_constant,
        bound,
        ratio: a_sq / c_supp,
        holds: a_sq <= bound * (1.0 + REL_SLACK),
        lower_holds: c_supp <= a_sq * (1.0 + REL_SLACK),
        gram_min_eig,
        grid_resolution: resolution,
        box_directions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rng_stream;
    use rand::Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn dp(re: f64) -> SpacePoint {
        SpacePoint::disc(c(re)).unwrap()
    }

    fn unit_atom_at_origin() -> DiscreteMeasure {
        DiscreteMeasure::new(Space::disc(), [(SpacePoint::origin(1), 1.0)]).unwrap()
    }

    fn symmetric_pair() -> DiscreteMeasure {
        DiscreteMeasure::new(Space::disc(), [(dp(0.5), 0.75), (dp(-0.5), 0.75)]).unwrap()
    }

    fn random_disc_measure(seed: u64, atoms: usize) -> DiscreteMeasure {
        let mut rng = rng_stream(seed, 0);
        let pts = (0..atoms).map(|_| {
            let r = 0.95 * rng.random::<f64>().sqrt();
            let t = 2.0 * PI * rng.random::<f64>();
            (SpacePoint::disc(Complex64::from_polar(r, t)).unwrap(), rng.random_range(0.1..2.0))
        });
        DiscreteMeasure::new(Space::disc(), pts.collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn construction_validates_and_merges() {
        assert!(DiscreteMeasure::new(Space::disc(), Vec::<(SpacePoint, f64)>::new()).is_err());
        assert!(DiscreteMeasure::new(Space::disc(), [(dp(0.1), 0.0)]).is_err());
        assert!(DiscreteMeasure::new(Space::disc(), [(dp(0.1), f64::NAN)]).is_err());
        assert!(DiscreteMeasure::new(Space::ball(2).unwrap(), [(dp(0.1), 1.0)]).is_err());
        let m = DiscreteMeasure::new(Space::disc(), [(dp(0.1), 1.0), (dp(0.2), 1.0), (dp(0.1), 0.5)]).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.atoms()[0].weight, 1.5);
    }

    #[test]
    fn potential_examples() {
        let mu = unit_atom_at_origin();
        assert_eq!(carleson_potential(&mu, &SpacePoint::origin(1)).unwrap(), -1.0);
        assert!((carleson_potential(&mu, &dp(0.5)).unwrap() + 0.75).abs() < 1e-15);
        let mu3 = mu.scaled(3.0).unwrap();
        assert!((carleson_potential(&mu3, &dp(0.5)).unwrap() + 2.25).abs() < 1e-15);
    }

    #[test]
    fn support_constant_examples() {
        let mu = DiscreteMeasure::new(Space::disc(), [(dp(0.6), 0.3)]).unwrap();
        assert!((kernel_constant_on_support(&mu).unwrap() - 0.3 / 0.64).abs() < 1e-14);
        assert!((kernel_constant_on_support(&symmetric_pair()).unwrap() - 1.36).abs() < 1e-14);
        let b2 = Space::ball(2).unwrap();
        let p = SpacePoint::new(vec![c(0.3), c(0.4)]).unwrap();
        let mu = DiscreteMeasure::new(b2, [(p, 2.0)]).unwrap();
        assert!((kernel_constant_on_support(&mu).unwrap() - 2.0 / 0.75f64.powi(2)).abs() < 1e-13);
    }

    #[test]
    fn support_constant_is_minus_min_potential() {
        let mu = random_disc_measure(1, 7);
        let min_phi = mu
            .atoms()
            .iter()
            .map(|a| carleson_potential(&mu, &a.point).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert_eq!(kernel_constant_on_support(&mu).unwrap(), -min_phi);
    }

    #[test]
    fn grid_constant_single_atom_at_origin() {
        for res in [8, 16, 33, 64] {
            assert!((kernel_constant_grid(&unit_atom_at_origin(), res).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!(kernel_constant_grid(&unit_atom_at_origin(), 7).is_err());
    }

    #[test]
    fn grid_constant_dominates_and_is_monotone() {
        for seed in 0..5 {
            let mu = random_disc_measure(seed, 6);
            let supp = kernel_constant_on_support(&mu).unwrap();
            let mut prev = 0.0;
            for res in [8, 12, 16, 24, 32, 64] {
                let g = kernel_constant_grid(&mu, res).unwrap();
                assert!(g >= supp);
                assert!(g >= prev);
                prev = g;
            }
        }
        let b2 = Space::ball(2).unwrap();
        let p = SpacePoint::new(vec![c(0.3), c(-0.4)]).unwrap();
        let mu = DiscreteMeasure::new(b2, [(p, 1.0), (SpacePoint::origin(2), 0.5)]).unwrap();
        let mut prev = 0.0;
        for res in [8, 9, 16, 20] {
            let g = kernel_constant_grid(&mu, res).unwrap();
            assert!(g >= prev && g >= kernel_constant_on_support(&mu).unwrap());
            prev = g;
        }
    }

    #[test]
    fn grid_constant_scales_linearly() {
        let mu = random_disc_measure(9, 5);
        let a = kernel_constant_grid(&mu, 16).unwrap();
        let b = kernel_constant_grid(&mu.scaled(2.5).unwrap(), 16).unwrap();
        assert!((b - 2.5 * a).abs() <= 1e-12 * b);
    }

    #[test]
    fn box_constant_examples() {
        let v = box_constant(&unit_atom_at_origin(), 16).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let mu = DiscreteMeasure::new(Space::disc(), [(dp(0.9), 0.19)]).unwrap();
        assert!(box_constant(&mu, 16).unwrap() >= 1.9 - 1e-12);
        let ball = DiscreteMeasure::new(Space::ball(2).unwrap(), [(SpacePoint::origin(2), 1.0)]).unwrap();
        assert!(matches!(box_constant(&ball, 16), Err(Error::Unsupported(_))));
        assert!(box_constant(&mu, 8).is_err());
    }

    #[test]
    fn box_constant_scales_linearly() {
        let mu = random_disc_measure(4, 8);
        let a = box_constant(&mu, 64).unwrap();
        let b = box_constant(&mu.scaled(0.25).unwrap(), 64).unwrap();
        assert!((b - 0.25 * a).abs() <= 1e-12 * a);
    }

    #[test]
    fn embedding_examples() {
        assert!((embedding_norm_sq(&unit_atom_at_origin()).unwrap() - 1.0).abs() < 1e-15);
        let m = embedding_gram(&symmetric_pair()).unwrap();
        assert!((m.get(0, 0).re - 1.0).abs() < 1e-15);
        assert!((m.get(0, 1).re - 0.6).abs() < 1e-15);
        assert!((embedding_norm_sq(&symmetric_pair()).unwrap() - 1.6).abs() < 1e-14);
        let a = embedding_norm_sq(&symmetric_pair().scaled(7.0).unwrap()).unwrap();
        assert!((a - 11.2).abs() < 1e-12);
    }

    #[test]
    fn bound_constants() {
        assert!((theorem_bound_constant(&Space::disc()) - 5.436_563_656_918_09).abs() < 1e-12);
        assert!((theorem_bound_constant(&Space::ball(1).unwrap()) - 2.0 * E).abs() < 1e-12);
        assert!((theorem_bound_constant(&Space::ball(2).unwrap()) - 6.0 * E).abs() < 1e-12);
        assert!((theorem_bound_constant(&Space::ball(3).unwrap()) - 20.0 * E).abs() < 1e-12);
    }

    #[test]
    fn analyze_examples() {
        let r = analyze(&unit_atom_at_origin(), 16).unwrap();
        assert!((r.a_sq - 1.0).abs() < 1e-15 && (r.c_supp - 1.0).abs() < 1e-15);
        assert!((r.ratio - 1.0).abs() < 1e-15 && r.holds && r.lower_holds);
        let r = analyze(&symmetric_pair(), 16).unwrap();
        assert!((r.ratio - 1.6 / 1.36).abs() < 1e-13);
        assert!(r.holds);
        assert!(r.c_supp <= r.c_grid);
    }

    #[test]
    fn rotation_invariance() {
        let mu = random_disc_measure(21, 6);
        let rot = mu.rotated(Complex64::from_polar(1.0, 0.7)).unwrap();
        let a = analyze(&mu, 16).unwrap();
        let b = analyze(&rot, 16).unwrap();
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * x.abs().max(1.0);
        assert!(close(a.a_sq, b.a_sq));
        assert!(close(a.c_supp, b.c_supp));
        assert!(close(a.ratio, b.ratio));
    }

    #[test]
    fn adding_an_atom_never_decreases_a_sq() {
        let mut rng = rng_stream(77, 0);
        for seed in 0..20 {
            let mu = random_disc_measure(100 + seed, 4);
            let p = dp(rng.random_range(-0.9..0.9));
            let bigger = mu.with_atom(p, rng.random_range(0.01..1.0)).unwrap();
            assert!(embedding_norm_sq(&bigger).unwrap() >= embedding_norm_sq(&mu).unwrap() * (1.0 - 1e-12));
        }
    }

    #[test]
    fn gram_is_positive_semidefinite() {
        for seed in 0..20 {
            let mu = random_disc_measure(200 + seed, 12);
            let (lo, hi) = embedding_spectrum(&mu).unwrap();
            assert!(lo >= -1e-10 * hi);
        }
    }

    #[test]
    fn sandwich_holds_on_random_measures() {
        let b2 = Space::ball(2).unwrap();
        for seed in 0..1000u64 {
            let mut rng = rng_stream(seed, 3);
            let atoms = rng.random_range(1..8);
            let mu = if seed % 2 == 0 {
                random_disc_measure(seed, atoms)
            } else {
                let pts = (0..atoms).map(|_| {
                    let r = 0.95 * rng.random::<f64>().powf(0.25);
                    let t: [f64; 3] = [rng.random(), rng.random(), rng.random()];
                    let (a, b) = ((t[0]).sqrt(), (1.0 - t[0]).sqrt());
                    let p = SpacePoint::new(vec![
                        Complex64::from_polar(r * a, 2.0 * PI * t[1]),
                        Complex64::from_polar(r * b, 2.0 * PI * t[2]),
                    ])
                    .unwrap();
                    (p, rng.random_range(0.01..3.0))
                });
                DiscreteMeasure::new(b2, pts.collect::<Vec<_>>()).unwrap()
            };
            let a_sq = embedding_norm_sq(&mu).unwrap();
            let c = kernel_constant_on_support(&mu).unwrap();
            assert!(c <= a_sq * (1.0 + REL_SLACK), "seed {seed}: {c} > {a_sq}");
            assert!(a_sq <= theorem_bound_constant(mu.space()) * c * (1.0 + REL_SLACK), "seed {seed}");
        }
    }

    #[test]
    fn analyze_is_scale_equivariant() {
        let mu = random_disc_measure(31, 5);
        let a = analyze(&mu, 16).unwrap();
        let b = analyze(&mu.scaled(4.0).unwrap(), 16).unwrap();
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * x.abs().max(y.abs());
        assert!(close(4.0 * a.a_sq, b.a_sq));
        assert!(close(4.0 * a.c_supp, b.c_supp));
        assert!(close(4.0 * a.c_grid, b.c_grid));
        assert!(close(4.0 * a.i_box.unwrap(), b.i_box.unwrap()));
        assert!(close(a.ratio, b.ratio) && a.holds == b.holds);
    }

    #[test]
    fn conditioning_flags() {
        let mu = DiscreteMeasure::new(Space::disc(), [(dp(0.5), 1.0), (dp(1.0 - 1e-10), 1.0)]).unwrap();
        assert_eq!(mu.ill_conditioned_atoms(), vec![1]);
    }
}
