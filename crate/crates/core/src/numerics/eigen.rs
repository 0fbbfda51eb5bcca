//! Extreme eigenvalues of dense Hermitian matrices.
//!
//! Orders up to [`JACOBI_MAX_ORDER`] go through a cyclic complex Jacobi
//! sweep that produces the full spectrum. Larger orders use Lanczos with full
//! reorthogonalization and stop once both extreme Ritz pairs have small
//! residuals.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest order handled by the full Jacobi solver.
pub const JACOBI_MAX_ORDER: usize = 512;

/// Maximum tolerated `|a_jk - conj(a_kj)|`, relative to `max |a_jk|`.
pub const HERMITIAN_TOL: f64 = 1e-12;

const JACOBI_MAX_SWEEPS: usize = 100;
const LANCZOS_RESIDUAL_TOL: f64 = 1e-12;

/// Dense Hermitian matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Wraps `entries` (row-major, `order * order`) after checking the
    /// Hermitian deviation. The upper triangle is authoritative: the lower
    /// triangle is overwritten with its conjugate.
    pub fn new(order: usize, mut entries: Vec<Complex64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::input("matrix order must be at least 1"));
        }
        if entries.len() != order * order {
            return Err(Error::Dimension {
                expected: order * order,
                found: entries.len(),
            });
        }
        let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut dev: f64 = 0.0;
        for j in 0..order {
            for k in j..order {
                let a = entries[j * order + k];
                let b = entries[k * order + j];
                dev = dev.max((a - b.conj()).norm());
            }
        }
        if !dev.is_finite() || dev > HERMITIAN_TOL * scale {
            return Err(Error::numeric(
                "hermitian check",
                format!("deviation {dev:e} exceeds {HERMITIAN_TOL:e} x {scale:e}"),
            ));
        }
        for j in 0..order {
            entries[j * order + j].im = 0.0;
            for k in (j + 1)..order {
                entries[k * order + j] = entries[j * order + k].conj();
            }
        }
        Ok(Self { order, entries })
    }

    /// Builds the matrix from its upper triangle; `f(j, k)` is called for `j <= k`.
    pub fn from_upper<F: FnMut(usize, usize) -> Complex64>(order: usize, mut f: F) -> Result<Self> {
        let mut entries = vec![Complex64::new(0.0, 0.0); order * order];
        for j in 0..order {
            for k in j..order {
                let v = f(j, k);
                entries[j * order + k] = v;
                entries[k * order + j] = v.conj();
            }
        }
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.entries[j * self.order + k]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.order;
        (0..n)
            .map(|j| {
                self.entries[j * n..(j + 1) * n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Extreme eigenpairs with unit eigenvectors.
#[derive(Debug, Clone)]
pub struct ExtremePairs {
    pub min: f64,
    pub max: f64,
    pub min_vec: Vec<Complex64>,
    pub max_vec: Vec<Complex64>,
}

/// `(λ_min, λ_max)` of a Hermitian matrix.
pub fn extreme_eigs(m: &HermitianMatrix) -> Result<(f64, f64)> {
    extreme_pairs(m).map(|p| (p.min, p.max))
}

pub fn extreme_pairs(m: &HermitianMatrix) -> Result<ExtremePairs> {
    if m.order() <= JACOBI_MAX_ORDER {
        let (values, vectors) = jacobi_eigh(m)?;
        let last = values.len() - 1;
        Ok(ExtremePairs {
            min: values[0],
            max: values[last],
            min_vec: vectors[0].clone(),
            max_vec: vectors[last].clone(),
        })
    } else {
        lanczos_extremes(m)
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching unit eigenvectors.
pub fn jacobi_eigh(m: &HermitianMatrix) -> Result<(Vec<f64>, Vec<Vec<Complex64>>)> {
    let n = m.order();
    let mut a = m.entries().to_vec();
    let zero = Complex64::new(0.0, 0.0);
    let mut v = vec![zero; n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let total = m.frobenius();
    let mut converged = n == 1 || total == 0.0;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if converged {
            break;
        }
        let off = off_diagonal_norm(&a, n);
        if off <= 1e-15 * total {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a, n);
        if off > 1e-15 * total {
            return Err(Error::numeric(
                "jacobi eigensolver",
                format!("no convergence after {JACOBI_MAX_SWEEPS} sweeps, off-diagonal norm {off:e} (matrix norm {total:e})"),
            ));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|r| v[r * n + i]).collect())
        .collect();
    Ok((values, vectors))
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += 2.0 * a[p * n + q].norm_sqr();
        }
    }
    s.sqrt()
}

/// One complex Jacobi step zeroing `a[p][q]`: a phase change on column `q`
/// that makes `a[p][q]` real, then a real plane rotation.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let ph = apq.conj() / mag;
    for r in 0..n {
        a[r * n + q] *= ph;
        v[r * n + q] *= ph;
    }
    let phc = ph.conj();
    for r in 0..n {
        a[q * n + r] *= phc;
    }
    a[q * n + q] = Complex64::new(aqq, 0.0);

    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = Complex64::new(app - t * mag, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * mag, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let np = arp * c - arq * s;
        let nq = arp * s + arq * c;
        a[r * n + p] = np;
        a[r * n + q] = nq;
        a[p * n + r] = np.conj();
        a[q * n + r] = nq.conj();
    }
    for r in 0..n {
        let vrp = v[r * n + p];
        let vrq = v[r * n + q];
        v[r * n + p] = vrp * c - vrq * s;
        v[r * n + q] = vrp * s + vrq * c;
    }
}

fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn lanczos_extremes(m: &HermitianMatrix) -> Result<ExtremePairs> {
    let n = m.order();
    let scale = m.frobenius().max(f64::MIN_POSITIVE);
    // Deterministic start vector with no special alignment to kernel Gram structure.
    let mut q: Vec<Complex64> = (0..n)
        .map(|i| {
            let t = i as f64 + 1.0;
            Complex64::new(1.0 + 0.5 * (0.7 * t).sin(), 0.3 * (1.3 * t).cos())
        })
        .collect();
    let q_norm = norm(&q);
    q.iter_mut().for_each(|z| *z /= q_norm);

    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut last_residual = (f64::INFINITY, f64::INFINITY);

    for k in 0..n {
        let mut w = m.mul_vec(&q);
        let alpha = dot(&q, &w).re;
        basis.push(q.clone());
        alphas.push(alpha);
        // Full reorthogonalization, applied twice.
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                w.iter_mut().zip(b).for_each(|(wi, bi)| *wi -= c * bi);
            }
        }
        let beta = norm(&w);
        let steps = k + 1;
        let check = steps == n || beta <= 1e-14 * scale || steps % 10 == 0;
        if check {
            let t = HermitianMatrix::from_upper(steps, |i, j| {
                if i == j {
                    Complex64::new(alphas[i], 0.0)
                } else if j == i + 1 {
                    Complex64::new(betas[i], 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })?;
            let (vals, vecs) = jacobi_eigh(&t)?;
            let lo = &vecs[0];
            let hi = &vecs[steps - 1];
            let res_lo = beta * lo[steps - 1].norm();
            let res_hi = beta * hi[steps - 1].norm();
            last_residual = (res_lo, res_hi);
            let tol = LANCZOS_RESIDUAL_TOL * scale;
            if steps == n || beta <= 1e-14 * scale || (res_lo <= tol && res_hi <= tol) {
                let lift = |y: &[Complex64]| -> Vec<Complex64> {
                    let mut out = vec![Complex64::new(0.0, 0.0); n];
                    for (coef, b) in y.iter().zip(&basis) {
                        out.iter_mut().zip(b).for_each(|(o, bi)| *o += coef * bi);
                    }
                    let nn = norm(&out);
                    out.iter_mut().for_each(|o| *o /= nn);
                    out
                };
                return Ok(ExtremePairs {
                    min: vals[0],
                    max: vals[steps - 1],
                    min_vec: lift(lo),
                    max_vec: lift(hi),
                });
            }
        }
        if beta <= 1e-14 * scale {
            break;
        }
        betas.push(beta);
        q = w.into_iter().map(|z| z / beta).collect();
    }
    Err(Error::numeric(
        "lanczos eigensolver",
        format!(
            "no convergence after {} steps, residuals (min {:e}, max {:e})",
            alphas.len(),
            last_residual.0,
            last_residual.1
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rng_stream;
    use rand::Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn random_hermitian(order: usize, seed: u64) -> HermitianMatrix {
        let mut rng = rng_stream(seed, 0);
        HermitianMatrix::from_upper(order, |j, k| {
            if j == k {
                c(rng.random_range(-1.0..1.0))
            } else {
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            }
        })
        .unwrap()
    }

    fn residual(m: &HermitianMatrix, lambda: f64, v: &[Complex64]) -> f64 {
        let mv = m.mul_vec(v);
        mv.iter()
            .zip(v)
            .map(|(a, b)| (a - b * lambda).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn identity() {
        let m = HermitianMatrix::from_upper(3, |j, k| if j == k { c(1.0) } else { c(0.0) }).unwrap();
        assert_eq!(extreme_eigs(&m).unwrap(), (1.0, 1.0));
    }

    #[test]
    fn two_by_two() {
        let m = HermitianMatrix::new(2, vec![c(1.0), c(0.6), c(0.6), c(1.0)]).unwrap();
        let (lo, hi) = extreme_eigs(&m).unwrap();
        assert!((lo - 0.4).abs() < 1e-14);
        assert!((hi - 1.6).abs() < 1e-14);
    }

    #[test]
    fn diagonal() {
        let d = [2.0, -1.0, 5.0];
        let m = HermitianMatrix::from_upper(3, |j, k| if j == k { c(d[j]) } else { c(0.0) }).unwrap();
        assert_eq!(extreme_eigs(&m).unwrap(), (-1.0, 5.0));
    }

    #[test]
    fn complex_two_by_two() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let i = Complex64::new(0.0, 1.0);
        let m = HermitianMatrix::new(2, vec![c(2.0), i, -i, c(2.0)]).unwrap();
        let (lo, hi) = extreme_eigs(&m).unwrap();
        assert!((lo - 1.0).abs() < 1e-14 && (hi - 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let err = HermitianMatrix::new(2, vec![c(1.0), c(0.5), c(0.6), c(1.0)]).unwrap_err();
        assert!(matches!(err, Error::Numeric { .. }));
    }

    #[test]
    fn rejects_bad_shape() {
        assert!(HermitianMatrix::new(2, vec![c(1.0); 3]).is_err());
        assert!(HermitianMatrix::new(0, vec![]).is_err());
    }

    #[test]
    fn jacobi_residuals_on_random_fuzz() {
        for (seed, order) in (0..40u64).zip([1usize, 2, 3, 5, 8, 13, 21, 34, 55, 64].iter().cycle()) {
            let m = random_hermitian(*order, seed);
            let pairs = extreme_pairs(&m).unwrap();
            let scale = m.frobenius();
            assert!(pairs.min <= pairs.max);
            assert!(residual(&m, pairs.min, &pairs.min_vec) <= 1e-9 * scale);
            assert!(residual(&m, pairs.max, &pairs.max_vec) <= 1e-9 * scale);
        }
    }

    #[test]
    fn trace_is_preserved() {
        let m = random_hermitian(20, 99);
        let (vals, _) = jacobi_eigh(&m).unwrap();
        let trace: f64 = (0..20).map(|i| m.get(i, i).re).sum();
        assert!((vals.iter().sum::<f64>() - trace).abs() < 1e-11);
    }

    #[test]
    fn lanczos_matches_jacobi() {
        let m = random_hermitian(120, 5);
        let (vals, _) = jacobi_eigh(&m).unwrap();
        let pairs = lanczos_extremes(&m).unwrap();
        assert!((pairs.min - vals[0]).abs() <= 1e-10 * vals[0].abs().max(1.0));
        assert!((pairs.max - vals[119]).abs() <= 1e-10 * vals[119].abs().max(1.0));
        let scale = m.frobenius();
        assert!(residual(&m, pairs.max, &pairs.max_vec) <= 1e-9 * scale);
    }
}
