use std::f64::consts::E;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use carleson_core::calculus::{
    beta_constant, corollary_check, greens_formula_check, invariant_laplacian_fd, invariant_laplacian_fd_extrapolated,
    invariant_laplacian_poisson_ball, key_inequality_check, laplacian_fd, laplacian_fd_extrapolated,
    laplacian_poisson_disc, poisson_gradient_ball, uchiyama_embedding_check, LaplacianSource, MultiPoly,
    QuadratureSpec,
};
use carleson_core::extremal::{search, SearchConfig};
use carleson_core::geometry::{inner, mobius, poisson_kernel};
use carleson_core::interpolation::{interpolation_report, InterpolationReport};
use carleson_core::measure::{analyze, AnalysisReport, REL_SLACK};
use carleson_core::numerics::fd::{central_first, richardson};
use carleson_core::numerics::rng_stream;
use carleson_core::{Complex64, SpacePoint};
use rand::Rng;
use serde::Serialize;

use crate::args::{
    AnalyzeArgs, Command, GreenArgs, InterpolateArgs, ReportFormat, SearchArgs, TestFunction, TextFormat,
    UchiyamaArgs, VerifyArgs,
};
use crate::error::{CliError, Result, Status};
use crate::files::{read_json, to_json, MeasureFile, PolyFile, SequenceFile, SpaceSpec};

/// Slack of the contraction and pointwise checks on the disc.
pub const DISC_SLACK: f64 = 1e-6;
/// Slack of the same checks on the ball, where quadrature is coarser.
pub const BALL_SLACK: f64 = 1e-3;
/// Tolerance of the algebraic identities, which involve no discretization.
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Sample points for the identity checks lie in this ball.
pub const SAMPLE_RADIUS: f64 = 0.9;

fn io_err(e: io::Error) -> CliError {
    CliError::Input(format!("write failed: {e}"))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", path.display())))
}

pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match cmd {
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::VerifyIdentities(a) => cmd_verify_identities(a, out),
        Command::GreenCheck(a) => cmd_green_check(a, out),
        Command::Uchiyama(a) => cmd_uchiyama(a, out),
        Command::Interpolate(a) => cmd_interpolate(a, out),
        Command::Search(a) => cmd_search(a, out, err),
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisJson {
    pub space: SpaceSpec,
    pub atom_count: usize,
    pub a_sq: f64,
    pub c_supp: f64,
    pub c_grid: f64,
    pub i_box: Option<f64>,
    pub bound_constant: f64,
    pub bound: f64,
    pub ratio: f64,
    pub holds: bool,
    pub lower_holds: bool,
    pub gram_min_eig: f64,
    pub grid_resolution: usize,
    pub box_directions: Option<usize>,
}

impl From<&AnalysisReport> for AnalysisJson {
    fn from(r: &AnalysisReport) -> Self {
        AnalysisJson {
            space: SpaceSpec::from_space(&r.space),
            atom_count: r.atom_count,
            a_sq: r.a_sq,
            c_supp: r.c_supp,
            c_grid: r.c_grid,
            i_box: r.i_box,
            bound_constant: r.bound_constant,
            bound: r.bound,
            ratio: r.ratio,
            holds: r.holds,
            lower_holds: r.lower_holds,
            gram_min_eig: r.gram_min_eig,
            grid_resolution: r.grid_resolution,
            box_directions: r.box_directions,
        }
    }
}

fn opt(v: Option<impl ToString>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn analysis_csv(r: &AnalysisReport) -> String {
    let header = "space,atom_count,a_sq,c_supp,c_grid,i_box,bound_constant,bound,ratio,holds,lower_holds,\
                  gram_min_eig,grid_resolution,box_directions";
    format!(
        "{header}\n{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        r.space,
        r.atom_count,
        r.a_sq,
        r.c_supp,
        r.c_grid,
        opt(r.i_box),
        r.bound_constant,
        r.bound,
        r.ratio,
        r.holds,
        r.lower_holds,
        r.gram_min_eig,
        r.grid_resolution,
        opt(r.box_directions)
    )
}

pub fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<Status> {
    let file: MeasureFile = read_json(&a.path)?;
    let mu = file.to_measure()?;
    let r = analyze(&mu, a.grid as usize)?;
    let text = match a.format {
        ReportFormat::Json => to_json(&AnalysisJson::from(&r)) + "\n",
        ReportFormat::Csv => analysis_csv(&r),
    };
    match &a.out {
        Some(p) => create(p)?.write_all(text.as_bytes()).map_err(io_err)?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(Status::from_pass(r.holds && r.lower_holds))
}

/// Point uniformly distributed in the ball of radius `rmax` in `Cⁿ`.
fn sample_point(rng: &mut impl Rng, dim: usize, rmax: f64) -> SpacePoint {
    loop {
        let v: Vec<f64> = (0..2 * dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        let ns: f64 = v.iter().map(|x| x * x).sum();
        if ns < 1.0 && ns > 1e-12 {
            let scaled: Vec<f64> = v.iter().map(|x| x * rmax).collect();
            return SpacePoint::from_interleaved(&scaled).expect("sample lies in the ball");
        }
    }
}

struct Failure {
    sample: usize,
    computed: String,
    expected: String,
    error: f64,
}

struct IdentityCheck {
    name: &'static str,
    tol: f64,
    samples: usize,
    worst: f64,
    failures: Vec<Failure>,
}

impl IdentityCheck {
    fn new(name: &'static str, tol: f64) -> Self {
        IdentityCheck {
            name,
            tol,
            samples: 0,
            worst: 0.0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, sample: usize, computed: String, expected: String, error: f64) {
        self.samples += 1;
        self.worst = self.worst.max(error);
        if !(error <= self.tol) {
            self.failures.push(Failure {
                sample,
                computed,
                expected,
                error,
            });
        }
    }

    fn real(&mut self, sample: usize, computed: f64, expected: f64) {
        let err = (computed - expected).abs() / expected.abs().max(f64::MIN_POSITIVE);
        self.record(sample, format!("{computed:.12e}"), format!("{expected:.12e}"), err);
    }

    fn complex(&mut self, sample: usize, computed: Complex64, expected: Complex64) {
        let err = (computed - expected).norm() / expected.norm().max(f64::MIN_POSITIVE);
        self.record(sample, format!("{computed:.9e}"), format!("{expected:.9e}"), err);
    }
}

fn validate_step(h: f64) -> Result<()> {
    if !(h > 0.0 && h <= 0.025) {
        return Err(CliError::Usage(format!("--fd-step must lie in (0, 0.025], got {h}")));
    }
    Ok(())
}

pub fn cmd_verify_identities(a: &VerifyArgs, out: &mut dyn Write) -> Result<Status> {
    validate_step(a.fd_step)?;
    if !(a.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", a.tol)));
    }
    let s = a.space.0;
    let n = s.dim();
    let h = a.fd_step;
    let mut rng = rng_stream(a.seed, 0);
    let mut involution = IdentityCheck::new("mobius involution", ALGEBRAIC_TOL);
    let mut identity = IdentityCheck::new("1-|φ_λ(z)|² identity", ALGEBRAIC_TOL);
    let mut laplacian = IdentityCheck::new(
        if s.is_disc() { "Laplacian of Poisson kernel" } else { "invariant Laplacian of Poisson-Szegő kernel" },
        a.tol,
    );
    let mut derivative =
        IdentityCheck::new(if s.is_disc() { "Möbius Jacobian" } else { "Poisson-Szegő gradient" }, a.tol);
    let one = Complex64::new(1.0, 0.0);
    for k in 0..a.samples as usize {
        let z = sample_point(&mut rng, n, SAMPLE_RADIUS);
        let l = sample_point(&mut rng, n, SAMPLE_RADIUS);

        let back = mobius(&l, &mobius(&l, &z, &s)?, &s)?;
        let dev = back.coords().iter().zip(z.coords()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max);
        involution.record(k, format!("{:?}", back.to_interleaved()), format!("{:?}", z.to_interleaved()), dev);

        let m = mobius(&l, &z, &s)?;
        let den = (one - inner(&z, &l)?).norm_sqr();
        identity.real(k, 1.0 - m.norm_sq(), (1.0 - l.norm_sq()) * (1.0 - z.norm_sq()) / den);

        let u = |p: &SpacePoint| poisson_kernel(p, &l, &s).unwrap_or(f64::NAN);
        if s.is_disc() {
            let fd = if a.plain { laplacian_fd(u, &z, h)? } else { laplacian_fd_extrapolated(u, &z, h)? };
            laplacian.real(k, fd, laplacian_poisson_disc(&z, &l)?);
        } else {
            let fd = if a.plain {
                invariant_laplacian_fd(u, &z, &s, h)?
            } else {
                invariant_laplacian_fd_extrapolated(u, &z, &s, h)?
            };
            laplacian.real(k, fd, invariant_laplacian_poisson_ball(&z, &l, &s)?);
        }

        let diff = |f: &dyn Fn(f64) -> f64| {
            let d = central_first(f, 0.0, h);
            if a.plain {
                d
            } else {
                richardson(d, central_first(f, 0.0, 0.5 * h))
            }
        };
        if s.is_disc() {
            // |b_λ'(z)|² = ((1-|λ|²)/|1-λ̄z|²)²
            let b = |t: f64| {
                let w = SpacePoint::disc(z.coords()[0] + t).expect("interior");
                mobius(&l, &w, &s).map(|p| p.coords()[0]).unwrap_or(Complex64::new(f64::NAN, 0.0))
            };
            let d = Complex64::new(diff(&|t| b(t).re), diff(&|t| b(t).im));
            let expect = ((1.0 - l.norm_sq()) / den).powi(2);
            derivative.real(k, d.norm_sqr(), expect);
        } else {
            for j in 0..n {
                let shifted = |dx: f64, dy: f64| {
                    let mut c = z.coords().to_vec();
                    c[j] += Complex64::new(dx, dy);
                    SpacePoint::new(c).map(|p| u(&p)).unwrap_or(f64::NAN)
                };
                let dx = diff(&|t| shifted(t, 0.0));
                let dy = diff(&|t| shifted(0.0, t));
                // ∂_j = (∂_x - i ∂_y)/2
                let fd = Complex64::new(0.5 * dx, -0.5 * dy);
                derivative.complex(k, fd, poisson_gradient_ball(&z, &l, j, &s)?);
            }
        }
    }
    let checks = [involution, identity, laplacian, derivative];
    writeln!(
        out,
        "space {s}, {} samples, seed {}, step {h:e} ({}), tol {:e}",
        a.samples,
        a.seed,
        if a.plain { "plain" } else { "Richardson" },
        a.tol
    )
    .map_err(io_err)?;
    writeln!(out, "{:<46} {:>8} {:>12} {:>10} {:>9}  status", "check", "samples", "max error", "tol", "failures")
        .map_err(io_err)?;
    for c in &checks {
        writeln!(
            out,
            "{:<46} {:>8} {:>12.3e} {:>10.1e} {:>9}  {}",
            c.name,
            c.samples,
            c.worst,
            c.tol,
            c.failures.len(),
            if c.failures.is_empty() { "pass" } else { "FAIL" }
        )
        .map_err(io_err)?;
    }
    let failed: Vec<&IdentityCheck> = checks.iter().filter(|c| !c.failures.is_empty()).collect();
    if !failed.is_empty() {
        writeln!(out, "\nfailures (first 10 per check):").map_err(io_err)?;
        writeln!(out, "{:<46} {:>7}  {:>12}  computed / expected", "check", "sample", "error").map_err(io_err)?;
        for c in failed {
            for f in c.failures.iter().take(10) {
                writeln!(out, "{:<46} {:>7}  {:>12.3e}  {} / {}", c.name, f.sample, f.error, f.computed, f.expected)
                    .map_err(io_err)?;
            }
        }
    }
    Ok(Status::from_pass(checks.iter().all(|c| c.failures.is_empty())))
}

fn test_function(f: TestFunction) -> fn(&[Complex64]) -> f64 {
    match f {
        TestFunction::One => |_| 1.0,
        TestFunction::Radial => |z| 1.0 - z.iter().map(|c| c.norm_sqr()).sum::<f64>(),
        TestFunction::Re1 => |z| z[0].re,
        TestFunction::Mixed => |z| (z[0] * z[0]).re + z[0].norm_sqr() * z[z.len() - 1].norm_sqr(),
    }
}

pub fn cmd_green_check(a: &GreenArgs, out: &mut dyn Write) -> Result<Status> {
    let s = a.space.0;
    let n = s.dim() as f64;
    let q = QuadratureSpec::for_space(&s, a.quad_order as usize);
    let tol = a.tol.unwrap_or(q.tol);
    if !(tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
    }
    let disc = s.is_disc();
    let closed: Option<Box<dyn Fn(&SpacePoint) -> f64 + Sync>> = match a.function {
        _ if a.fd => None,
        TestFunction::One | TestFunction::Re1 => Some(Box::new(|_| 0.0)),
        TestFunction::Radial if disc => Some(Box::new(|_| -4.0)),
        // Δ̃(1-|z|²) = -4 (1-|z|²)(n-|z|²)/(n+1)
        TestFunction::Radial => Some(Box::new(move |z| {
            let r = z.norm_sq();
            -4.0 * (1.0 - r) * (n - r) / (n + 1.0)
        })),
        TestFunction::Mixed if disc => Some(Box::new(|z| 16.0 * z.norm_sq())),
        // Re z₁² is pluriharmonic; for v = |z₁|²|zₙ|² the contraction
        // Σ (δ_ij - z̄_i z_j) ∂̄_i ∂_j v is |z₁|² + |zₙ|² - 4|z₁|²|zₙ|²,
        // or 4|z₁|²(1 - |z₁|²) when n = 1
        TestFunction::Mixed => Some(Box::new(move |z| {
            let c = z.coords();
            let (a, b) = (c[0].norm_sqr(), c[c.len() - 1].norm_sqr());
            let contraction = if c.len() == 1 { 4.0 * a * (1.0 - a) } else { a + b - 4.0 * a * b };
            4.0 * (1.0 - z.norm_sq()) / (n + 1.0) * contraction
        })),
    };
    let source = match &closed {
        Some(f) => LaplacianSource::Closed(f.as_ref()),
        None => LaplacianSource::FiniteDifference { h: 1e-3 },
    };
    let chk = greens_formula_check(test_function(a.function), source, &s, &q)?;
    let pass = chk.gap <= tol;
    writeln!(
        out,
        "space {s}, fn {:?}, quad order {}, Laplacian {}",
        a.function,
        a.quad_order,
        if closed.is_some() { "closed form" } else { "finite differences" }
    )
    .map_err(io_err)?;
    writeln!(out, "lhs  {:.15}", chk.lhs).map_err(io_err)?;
    writeln!(out, "rhs  {:.15}", chk.rhs).map_err(io_err)?;
    writeln!(out, "gap  {:.3e} (tol {tol:e}) {}", chk.gap, if pass { "pass" } else { "FAIL" }).map_err(io_err)?;
    writeln!(out, "order-halving change  {:.3e}", chk.convergence).map_err(io_err)?;
    Ok(Status::from_pass(pass))
}

pub fn cmd_uchiyama(a: &UchiyamaArgs, out: &mut dyn Write) -> Result<Status> {
    let mu = read_json::<MeasureFile>(&a.path)?.to_measure()?;
    let s = *mu.space();
    let f = match &a.poly {
        Some(p) => read_json::<PolyFile>(p)?.to_poly()?,
        None => MultiPoly::constant(s.dim(), Complex64::new(1.0, 0.0)),
    };
    let q = QuadratureSpec::for_space(&s, a.quad_order as usize);
    let slack = if s.is_disc() { DISC_SLACK } else { BALL_SLACK };
    let (integral, norm_sq) = uchiyama_embedding_check(&mu, &f, &q)?;
    let (cor_integral, cor_bound) = corollary_check(&mu, &f, &q)?;
    // f = 0 yields -0.0 norms
    let (norm_sq, cor_bound) = (norm_sq + 0.0, cor_bound + 0.0);
    let contraction = integral <= norm_sq * (1.0 + slack);
    let corollary = cor_integral <= cor_bound * (1.0 + slack);
    writeln!(out, "space {s}, {} atoms, degree {}, quad order {}", mu.len(), f.degree(), a.quad_order)
        .map_err(io_err)?;
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    writeln!(out, "contraction  ∫|f|²dν = {integral:.12e}  ‖f‖² = {norm_sq:.12e}  {}", verdict(contraction))
        .map_err(io_err)?;
    writeln!(
        out,
        "corollary    ∫|f|²dν/e^φ = {cor_integral:.12e}  e‖φ‖∞‖f‖² = {cor_bound:.12e}  {}",
        verdict(corollary)
    )
    .map_err(io_err)?;
    writeln!(out, "pointwise inequality, factor {:.9}:", beta_constant(s.dim())).map_err(io_err)?;
    writeln!(out, "{:>5} {:>20} {:>20}  status", "atom", "lhs", "rhs").map_err(io_err)?;
    let mut pointwise = true;
    for k in 0..mu.len() {
        let (lhs, rhs) = key_inequality_check(&mu, &f, k, &q)?;
        let ok = lhs >= rhs * (1.0 - slack);
        pointwise &= ok;
        writeln!(out, "{k:>5} {lhs:>20.12e} {rhs:>20.12e}  {}", verdict(ok)).map_err(io_err)?;
    }
    Ok(Status::from_pass(contraction && corollary && pointwise))
}

#[derive(Debug, Serialize)]
pub struct InterpolationJson {
    pub len: usize,
    pub delta: f64,
    pub k_sq: f64,
    pub k_sq_bound: f64,
    pub gram_cond_root: f64,
    pub orth_bound: f64,
    pub interp_constant: f64,
    pub kernel_sup: f64,
    pub kernel_sup_bound: f64,
    pub c_supp: f64,
    pub orth_holds: bool,
    pub k_sq_holds: bool,
    pub kernel_sup_holds: bool,
    pub embedding_holds: bool,
    pub grid_resolution: usize,
}

impl From<&InterpolationReport> for InterpolationJson {
    fn from(r: &InterpolationReport) -> Self {
        InterpolationJson {
            len: r.len,
            delta: r.delta,
            k_sq: r.k_sq,
            k_sq_bound: r.k_sq_bound,
            gram_cond_root: r.gram_cond_root,
            orth_bound: r.orth_bound,
            interp_constant: r.interp_constant,
            kernel_sup: r.kernel_sup,
            kernel_sup_bound: r.kernel_sup_bound,
            c_supp: r.c_supp,
            orth_holds: r.orth_holds,
            k_sq_holds: r.k_sq_holds,
            kernel_sup_holds: r.kernel_sup_holds,
            embedding_holds: r.embedding_holds,
            grid_resolution: r.grid_resolution,
        }
    }
}

/// The separation-constant bounds `√cond(G) ≤ δ⁻¹K²` and `K² ≤ 2e·C_supp`
/// decide the exit status. The two bounds in terms of `δ` alone are proved
/// for genuine interpolating sequences only, so they are reported.
pub fn cmd_interpolate(a: &InterpolateArgs, out: &mut dyn Write) -> Result<Status> {
    let seq = read_json::<SequenceFile>(&a.path)?.to_sequence()?;
    let r = interpolation_report(&seq, a.grid as usize)?;
    let pass = r.orth_holds && r.embedding_holds;
    if a.format == TextFormat::Json {
        writeln!(out, "{}", to_json(&InterpolationJson::from(&r))).map_err(io_err)?;
        return Ok(Status::from_pass(pass));
    }
    let c_supp_holds = r.c_supp <= r.kernel_sup_bound * (1.0 + REL_SLACK);
    let yes = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "points  {}", r.len).map_err(io_err)?;
    writeln!(out, "delta   {:.12}", r.delta).map_err(io_err)?;
    writeln!(out, "cond    {:.12}", r.gram_cond_root).map_err(io_err)?;
    writeln!(out, "K^2     {:.12}", r.k_sq).map_err(io_err)?;
    writeln!(out, "interpolation constant 2e/δ (1 + 2 ln 1/δ) = {:.12}", r.interp_constant).map_err(io_err)?;
    writeln!(out).map_err(io_err)?;
    writeln!(out, "{:<34} {:>18} {:>18}  holds", "bound", "value", "limit").map_err(io_err)?;
    let rows = [
        ("√cond(G) ≤ K²/δ", r.gram_cond_root, r.orth_bound, r.orth_holds, ""),
        ("K² ≤ 2e·C_supp", r.k_sq, 2.0 * E * r.c_supp, r.embedding_holds, ""),
        ("K² ≤ 2e(1 + 2 ln 1/δ)", r.k_sq, r.k_sq_bound, r.k_sq_holds, " (reported)"),
        ("sup ∫|k_λ|²dμ ≤ 1 + 2 ln 1/δ", r.kernel_sup, r.kernel_sup_bound, r.kernel_sup_holds, " (reported)"),
        ("C_supp ≤ 1 + 2 ln 1/δ", r.c_supp, r.kernel_sup_bound, c_supp_holds, " (reported)"),
    ];
    for (name, value, limit, holds, note) in rows {
        writeln!(out, "{name:<34} {value:>18.12} {limit:>18.12}  {}{note}", yes(holds)).map_err(io_err)?;
    }
    Ok(Status::from_pass(pass))
}

pub fn cmd_search(a: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    let mut cfg = SearchConfig::new(a.space.0, a.atoms as usize);
    cfg.iterations = a.iters as usize;
    cfg.restarts = a.restarts as usize;
    cfg.seed = a.seed;
    let r = search(&cfg)?;
    let mut csv = String::from("iteration,best_ratio\n");
    for t in &r.trace {
        csv.push_str(&format!("{},{}\n", t.iteration, t.best_ratio));
    }
    match &a.out {
        Some(p) => create(p)?.write_all(csv.as_bytes()).map_err(io_err)?,
        None => out.write_all(csv.as_bytes()).map_err(io_err)?,
    }
    if let Some(p) = &a.best_out {
        let text = to_json(&MeasureFile::from_measure(&r.best_measure)) + "\n";
        create(p)?.write_all(text.as_bytes()).map_err(io_err)?;
    }
    for o in r.restarts.iter().filter(|o| o.aborted.is_some()) {
        writeln!(err, "restart {} stopped early: {}", o.restart, o.aborted.as_deref().unwrap_or_default())
            .map_err(io_err)?;
    }
    for v in &r.violations {
        writeln!(
            err,
            "VIOLATION: restart {} iteration {} ratio {} exceeds the bound",
            v.restart, v.iteration, v.ratio
        )
        .map_err(io_err)?;
    }
    writeln!(
        err,
        "space {}, {} atoms, {} restarts x {} iterations, seed {}",
        cfg.space, cfg.atom_count, cfg.restarts, cfg.iterations, r.seed
    )
    .map_err(io_err)?;
    writeln!(err, "best ratio {:.6} (bound {:.6})", r.best_ratio, carleson_core::measure::theorem_bound_constant(&cfg.space))
        .map_err(io_err)?;
    Ok(Status::from_pass(r.violations.is_empty()))
}

/// Parses `CARLESON_THREADS`: `None` when unset, an error when not a
/// positive integer.
pub fn thread_count(value: Option<&str>) -> Result<Option<usize>> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("CARLESON_THREADS must be a positive integer, got `{v}`"))),
        },
    }
}
