use std::path::PathBuf;
use std::str::FromStr;

use carleson_core::Space;
use clap::{Parser, Subcommand, ValueEnum};

/// Numerical checks of Carleson embeddings on the disc and the unit ball of Cⁿ.
///
/// Exit codes: 0 success, 1 usage, 2 invalid input, 3 a checked inequality
/// or identity failed, 4 numeric failure. Set CARLESON_THREADS to bound the
/// worker threads.
#[derive(Debug, Parser)]
#[command(name = "carleson", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embedding norm, kernel constants and the theorem verdict for a measure.
    Analyze(AnalyzeArgs),
    /// Geometric identities and closed-form Laplacians against finite differences.
    VerifyIdentities(VerifyArgs),
    /// Both sides of Green's formula for a test function.
    GreenCheck(GreenArgs),
    /// Uchiyama's contraction, its corollary and the pointwise inequality at atoms.
    Uchiyama(UchiyamaArgs),
    /// Separation constant and bounds for a finite sequence in the disc.
    Interpolate(InterpolateArgs),
    /// Random-restart search for measures with large A²/C.
    Search(SearchArgs),
}

/// `disc` or `ball<n>`, e.g. `ball2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceArg(pub Space);

impl FromStr for SpaceArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "disc" {
            return Ok(SpaceArg(Space::disc()));
        }
        let n = s
            .strip_prefix("ball")
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| format!("expected `disc` or `ball<n>`, got `{s}`"))?;
        Space::ball(n).map(SpaceArg).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TestFunction {
    /// u = 1
    One,
    /// u = 1 - |z|²
    Radial,
    /// u = Re z₁
    Re1,
    /// u = Re z₁² + |z₁|²|zₙ|²
    Mixed,
}

#[derive(Debug, clap::Args)]
pub struct AnalyzeArgs {
    /// Measure file (JSON).
    pub path: PathBuf,
    /// Grid resolution for the kernel constant over the ball.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(8..=4096))]
    pub grid: u32,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "disc")]
    pub space: SpaceArg,
    /// Random (z, λ) pairs per check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub samples: u32,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Finite-difference step.
    #[arg(long, default_value_t = 1e-3)]
    pub fd_step: f64,
    /// Relative tolerance of the finite-difference checks.
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
    /// Use plain central differences instead of Richardson extrapolation.
    #[arg(long)]
    pub plain: bool,
}

#[derive(Debug, clap::Args)]
pub struct GreenArgs {
    #[arg(long, default_value = "disc")]
    pub space: SpaceArg,
    #[arg(long = "fn", value_enum, default_value_t = TestFunction::Radial)]
    pub function: TestFunction,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(8..=1024))]
    pub quad_order: u32,
    /// Evaluate the Laplacian by finite differences even when a closed form is known.
    #[arg(long)]
    pub fd: bool,
    /// Largest accepted gap; defaults to the quadrature tolerance (1e-8 disc, 1e-3 ball).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, clap::Args)]
pub struct UchiyamaArgs {
    /// Measure file (JSON).
    pub path: PathBuf,
    /// Polynomial file (JSON); f = 1 when absent.
    #[arg(long)]
    pub poly: Option<PathBuf>,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(8..=1024))]
    pub quad_order: u32,
}

#[derive(Debug, clap::Args)]
pub struct InterpolateArgs {
    /// Sequence file (JSON).
    pub path: PathBuf,
    /// Grid resolution for the kernel supremum.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(8..=4096))]
    pub grid: u32,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
}

#[derive(Debug, clap::Args)]
pub struct SearchArgs {
    #[arg(long, default_value = "disc")]
    pub space: SpaceArg,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=2000))]
    pub atoms: u32,
    /// Proposals per restart.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
    pub iters: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub restarts: u32,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Trace CSV file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the best measure found as a measure file.
    #[arg(long)]
    pub best_out: Option<PathBuf>,
}
