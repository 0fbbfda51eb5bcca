//! Random-restart hill climbing for measures with large `A(μ)² / C_supp(μ)`.
//!
//! Each atom is parameterized by a real `s`, a direction vector `u ∈ ℝ^{2n}`
//! and a log-weight `v`: the point is `tanh|s| · u/|u|` and the weight is
//! `e^v`, so every parameter vector is a valid measure. A proposal perturbs
//! all parameters with Gaussian noise of the current step size and is
//! accepted only if the ratio strictly improves; after `patience`
//! consecutive rejections the step is multiplied by `step_decay`.
//!
//! Restart `r` draws from stream `r` of the seed, so results do not depend
//! on the thread count.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Space, SpacePoint};
use crate::measure::{embedding_norm_sq, kernel_constant_on_support, theorem_bound_constant, DiscreteMeasure, REL_SLACK};
use crate::numerics::{rng_stream, StreamRng};

/// Largest radius a parameter vector can produce.
pub const MAX_RADIUS: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub space: Space,
    pub atom_count: usize,
    /// Proposals per restart.
    pub iterations: usize,
    pub restarts: usize,
    pub seed: u64,
    pub step_init: f64,
    pub step_decay: f64,
    /// Consecutive rejections before the step decays.
    pub patience: usize,
}

impl SearchConfig {
    pub fn new(space: Space, atom_count: usize) -> Self {
        SearchConfig {
            space,
            atom_count,
            iterations: 1000,
            restarts: 4,
            seed: 42,
            step_init: 0.5,
            step_decay: 0.7,
            patience: 30,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.atom_count == 0 {
            return Err(Error::input("atom_count must be at least 1"));
        }
        if self.iterations == 0 || self.restarts == 0 {
            return Err(Error::input("iterations and restarts must be at least 1"));
        }
        if !(self.step_init > 0.0) || !self.step_init.is_finite() {
            return Err(Error::input(format!("step_init must be positive, got {}", self.step_init)));
        }
        if !(self.step_decay > 0.0 && self.step_decay < 1.0) {
            return Err(Error::input(format!("step_decay must lie in (0, 1), got {}", self.step_decay)));
        }
        if self.patience == 0 {
            return Err(Error::input("patience must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub iteration: usize,
    pub best_ratio: f64,
}

/// A ratio above the theorem bound. Either the implementation or the
/// theorem is wrong, so these are never clipped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub restart: usize,
    pub iteration: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RestartOutcome {
    pub restart: usize,
    pub best_ratio: f64,
    pub accepted: usize,
    pub final_step: f64,
    /// Set when a numeric error stopped this restart early.
    pub aborted: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_ratio: f64,
    pub best_measure: DiscreteMeasure,
    /// Best ratio over all restarts after each iteration at which it changed,
    /// plus the last iteration.
    pub trace: Vec<TracePoint>,
    pub seed: u64,
    pub restarts: Vec<RestartOutcome>,
    pub violations: Vec<Violation>,
}

/// `A(μ)² / C_supp(μ)`; invariant under `μ ↦ cμ`.
pub fn ratio(mu: &DiscreteMeasure) -> Result<f64> {
    Ok(embedding_norm_sq(mu)? / kernel_constant_on_support(mu)?)
}

#[derive(Clone)]
struct Params {
    dim: usize,
    values: Vec<f64>,
}

impl Params {
    fn stride(dim: usize) -> usize {
        2 * dim + 2
    }

    fn random(dim: usize, atoms: usize, rng: &mut StreamRng) -> Self {
        let mut values = Vec::with_capacity(atoms * Self::stride(dim));
        for _ in 0..atoms {
            values.push(rng.sample::<f64, _>(StandardNormal));
            for _ in 0..2 * dim {
                values.push(rng.sample(StandardNormal));
            }
            values.push(0.5 * rng.sample::<f64, _>(StandardNormal));
        }
        Params { dim, values }
    }

    fn perturbed(&self, step: f64, rng: &mut StreamRng) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v + step * rng.sample::<f64, _>(StandardNormal))
            .collect();
        Params { dim: self.dim, values }
    }

    fn measure(&self, space: Space) -> Result<DiscreteMeasure> {
        let atoms = self
            .values
            .chunks_exact(Self::stride(self.dim))
            .map(|c| {
                let r = c[0].tanh().abs().min(MAX_RADIUS);
                let u = &c[1..1 + 2 * self.dim];
                let len = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                let coords: Vec<Complex64> = if len > 0.0 {
                    u.chunks_exact(2).map(|p| Complex64::new(p[0], p[1]) * (r / len)).collect()
                } else {
                    vec![Complex64::new(0.0, 0.0); self.dim]
                };
                let w = c[1 + 2 * self.dim].exp();
                if !w.is_finite() || w == 0.0 {
                    return Err(Error::numeric("search", format!("log-weight {} left the representable range", c[1 + 2 * self.dim])));
                }
                Ok((SpacePoint::new(coords)?, w))
            })
            .collect::<Result<Vec<_>>>()?;
        DiscreteMeasure::new(space, atoms)
    }
}

struct RestartRun {
    outcome: RestartOutcome,
    best: Option<(f64, DiscreteMeasure)>,
    /// best ratio after each iteration, `NEG_INFINITY` before the first evaluation
    history: Vec<f64>,
    violations: Vec<Violation>,
}

fn run_restart(cfg: &SearchConfig, restart: usize) -> RestartRun {
    let bound = theorem_bound_constant(&cfg.space) * (1.0 + REL_SLACK);
    let mut rng = rng_stream(cfg.seed, restart as u64);
    let mut history = Vec::with_capacity(cfg.iterations + 1);
    let mut violations = Vec::new();
    let mut outcome = RestartOutcome {
        restart,
        best_ratio: f64::NEG_INFINITY,
        accepted: 0,
        final_step: cfg.step_init,
        aborted: None,
    };
    let mut current = Params::random(cfg.space.dim(), cfg.atom_count, &mut rng);
    let evaluate = |p: &Params| -> Result<(f64, DiscreteMeasure)> {
        let mu = p.measure(cfg.space)?;
        Ok((ratio(&mu)?, mu))
    };
    let (mut best_ratio, mut best_mu) = match evaluate(&current) {
        Ok(v) => v,
        Err(e) => {
            outcome.aborted = Some(format!("iteration 0: {e}"));
            history.resize(cfg.iterations + 1, f64::NEG_INFINITY);
            return RestartRun { outcome, best: None, history, violations };
        }
    };
    if best_ratio > bound {
        violations.push(Violation { restart, iteration: 0, ratio: best_ratio });
    }
    history.push(best_ratio);
    let mut step = cfg.step_init;
    let mut misses = 0;
    for it in 1..=cfg.iterations {
        let proposal = current.perturbed(step, &mut rng);
        match evaluate(&proposal) {
            Ok((r, mu)) => {
                if r > bound {
                    violations.push(Violation { restart, iteration: it, ratio: r });
                }
                if r > best_ratio {
                    best_ratio = r;
                    best_mu = mu;
                    current = proposal;
                    outcome.accepted += 1;
                    misses = 0;
                } else {
                    misses += 1;
                }
            }
            Err(e) => {
                outcome.aborted = Some(format!("iteration {it}: {e}"));
                history.resize(cfg.iterations + 1, best_ratio);
                break;
            }
        }
        if misses >= cfg.patience {
            step *= cfg.step_decay;
            misses = 0;
        }
        history.push(best_ratio);
    }
    outcome.best_ratio = best_ratio;
    outcome.final_step = step;
    RestartRun {
        outcome,
        best: Some((best_ratio, best_mu)),
        history,
        violations,
    }
}

pub fn search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let runs: Vec<RestartRun> = (0..cfg.restarts).into_par_iter().map(|r| run_restart(cfg, r)).collect();

    let mut best: Option<(f64, DiscreteMeasure)> = None;
    for run in &runs {
        if let Some((r, mu)) = &run.best {
            if best.as_ref().is_none_or(|(b, _)| r > b) {
                best = Some((*r, mu.clone()));
            }
        }
    }
    let Some((best_ratio, best_measure)) = best else {
        let reasons: Vec<String> = runs.iter().filter_map(|r| r.outcome.aborted.clone()).collect();
        return Err(Error::numeric("search", format!("every restart aborted: {}", reasons.join("; "))));
    };

    let mut trace = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for it in 0..=cfg.iterations {
        let v = runs.iter().map(|r| r.history[it]).fold(f64::NEG_INFINITY, f64::max);
        if v > last || it == cfg.iterations {
            trace.push(TracePoint { iteration: it, best_ratio: v });
            last = v;
        }
    }

    Ok(SearchResult {
        best_ratio,
        best_measure,
        trace,
        seed: cfg.seed,
        violations: runs.iter().flat_map(|r| r.violations.iter().copied()).collect(),
        restarts: runs.into_iter().map(|r| r.outcome).collect(),
    })
}
