//! Analytic polynomials in `n` complex variables and their Hardy norms.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{Space, SpacePoint};

/// `f(z) = Σ_α a_α z^α`, keyed by multi-index.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Complex64>,
}

impl MultiPoly {
    /// Repeated multi-indices are summed; zero coefficients are dropped.
    pub fn new<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Complex64)>,
    {
        if dim == 0 {
            return Err(Error::input("polynomial dimension must be at least 1"));
        }
        let mut map: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
        for (alpha, c) in terms {
            if alpha.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: alpha.len(),
                });
            }
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::input(format!("coefficient of {alpha:?} is not finite")));
            }
            *map.entry(alpha).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        map.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        Ok(MultiPoly { dim, terms: map })
    }

    pub fn zero(dim: usize) -> Self {
        MultiPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Complex64) -> Self {
        Self::new(dim, [(vec![0; dim], c)]).expect("valid constant")
    }

    pub fn monomial(alpha: Vec<u32>, c: Complex64) -> Result<Self> {
        Self::new(alpha.len(), [(alpha, c)])
    }

    /// Random polynomial of total degree at most `degree` with standard
    /// complex Gaussian-like coefficients (uniform in the unit square).
    pub fn random<R: Rng + ?Sized>(dim: usize, degree: u32, rng: &mut R) -> Self {
        let mut terms = Vec::new();
        for alpha in multi_indices(dim, degree) {
            let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            terms.push((alpha, c));
        }
        Self::new(dim, terms).expect("valid random polynomial")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Complex64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|a| a.iter().sum()).max().unwrap_or(0)
    }

    /// Evaluation at raw coordinates; boundary points are allowed.
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        debug_assert_eq!(z.len(), self.dim);
        let mut out = Complex64::new(0.0, 0.0);
        for (alpha, c) in &self.terms {
            let mut m = *c;
            for (zi, &k) in z.iter().zip(alpha) {
                m *= zi.powu(k);
            }
            out += m;
        }
        out
    }

    pub fn eval_point(&self, z: &SpacePoint) -> Result<Complex64> {
        if z.dim() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: z.dim(),
            });
        }
        Ok(self.eval(z.coords()))
    }
}

/// All multi-indices of length `dim` with `|α| ≤ degree`, lexicographic.
pub fn multi_indices(dim: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=budget {
            prefix.push(k);
            rec(prefix, left - 1, budget - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(dim), dim, degree, &mut out);
    out
}

/// `‖z^α‖²` in `H²` of the ball of ℂⁿ, `(n-1)! α! / (n-1+|α|)!`.
pub fn monomial_norm_sq(alpha: &[u32]) -> f64 {
    let n = alpha.len();
    // (n-1)! α! / (n-1+|α|)! = Π_i α_i! / Π_{k=n}^{n-1+|α|} k
    let mut num = 1.0;
    for &a in alpha {
        for k in 1..=a {
            num *= k as f64;
        }
    }
    let total: u32 = alpha.iter().sum();
    let mut den = 1.0;
    for k in n..n + total as usize {
        den *= k as f64;
    }
    num / den
}

/// `‖f‖²_{H²}` with the boundary measure normalized to mass 1.
pub fn hardy_norm_sq(f: &MultiPoly, s: &Space) -> Result<f64> {
    if f.dim() != s.dim() {
        return Err(Error::Dimension {
            expected: s.dim(),
            found: f.dim(),
        });
    }
    Ok(f
        .terms()
        .iter()
        .map(|(alpha, c)| c.norm_sqr() * monomial_norm_sq(alpha))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{boundary_quadrature, rng_stream, QuadratureSpec};
    use rand_distr::StandardNormal;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction() {
        let f = MultiPoly::new(2, [(vec![1, 0], c(1.0, 0.0)), (vec![1, 0], c(-1.0, 0.0))]).unwrap();
        assert!(f.is_zero());
        assert!(MultiPoly::new(2, [(vec![1], c(1.0, 0.0))]).is_err());
        let g = MultiPoly::new(1, [(vec![3], c(1.0, 0.0)), (vec![0], c(2.0, 0.0))]).unwrap();
        assert_eq!(g.degree(), 3);
        assert_eq!(g.eval(&[c(0.5, 0.0)]), c(2.125, 0.0));
    }

    #[test]
    fn disc_norms() {
        let d = Space::disc();
        let f = MultiPoly::new(1, [(vec![0], c(1.0, 0.0)), (vec![1], c(1.0, 0.0))]).unwrap();
        assert_eq!(hardy_norm_sq(&f, &d).unwrap(), 2.0);
        let f = MultiPoly::monomial(vec![5], c(1.0, 0.0)).unwrap();
        assert_eq!(hardy_norm_sq(&f, &d).unwrap(), 1.0);
    }

    #[test]
    fn ball_monomial_norms() {
        let b2 = Space::ball(2).unwrap();
        let f = MultiPoly::monomial(vec![1, 0], c(1.0, 0.0)).unwrap();
        assert!((hardy_norm_sq(&f, &b2).unwrap() - 0.5).abs() < 1e-15);
        assert!((monomial_norm_sq(&[1, 1]) - 1.0 / 6.0).abs() < 1e-15);
        assert!((monomial_norm_sq(&[2, 0, 0]) - 2.0 * 2.0 / 24.0).abs() < 1e-15);
        assert!(hardy_norm_sq(&f, &Space::disc()).is_err());
    }

    #[test]
    fn multi_index_count() {
        // C(d + n, n)
        assert_eq!(multi_indices(1, 5).len(), 6);
        assert_eq!(multi_indices(2, 5).len(), 21);
        assert_eq!(multi_indices(3, 2).len(), 10);
    }

    #[test]
    fn ball_norm_matches_sphere_quadrature() {
        let b2 = Space::ball(2).unwrap();
        let q = QuadratureSpec::ball(64);
        let mut rng = rng_stream(5, 0);
        for _ in 0..5 {
            let f = MultiPoly::random(2, 5, &mut rng);
            let quad = boundary_quadrature(|z| f.eval(z).norm_sqr(), &q, &b2).unwrap();
            let exact = hardy_norm_sq(&f, &b2).unwrap();
            assert!((quad - exact).abs() < 1e-12 * exact, "{quad} vs {exact}");
        }
    }

    #[test]
    fn ball_norm_matches_monte_carlo() {
        let mut rng = rng_stream(11, 0);
        let f = MultiPoly::new(2, [(vec![1, 0], c(1.0, 0.0)), (vec![1, 2], c(0.0, 2.0))]).unwrap();
        let samples = 200_000;
        let mut acc = 0.0;
        for _ in 0..samples {
            let g: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
            let len = g.iter().map(|x| x * x).sum::<f64>().sqrt();
            let z = [c(g[0] / len, g[1] / len), c(g[2] / len, g[3] / len)];
            acc += f.eval(&z).norm_sqr();
        }
        let mc = acc / samples as f64;
        let exact = hardy_norm_sq(&f, &Space::ball(2).unwrap()).unwrap();
        assert!((mc - exact).abs() < 1e-2 * exact, "{mc} vs {exact}");
    }
}
