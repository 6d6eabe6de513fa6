//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::presets::{parse_source, parse_triple};
use cylharm::{GaussianSpec, RadialBackend};

#[derive(Debug, Parser)]
#[command(name = "cylharm", version, about = "Free-space Poisson and biharmonic solves in cylindrical coordinates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for a field stored in a FieldFile and write the requested derivatives.
    Solve(SolveArgs),
    /// Error table for a centered Gaussian over a resolution sweep, both radial backends.
    Convergence(ConvergenceArgs),
    /// Axisymmetric collision operator C(f_a, f_b) and its two parts.
    Collision(CollisionArgs),
    /// Per-stage timings over a sweep of N_z.
    Bench(BenchArgs),
    /// Sample a Gaussian mixture onto a grid.
    MakeGaussian(MakeGaussianArgs),
    /// Closed-form potentials of a Gaussian mixture on a grid.
    Reference(ReferenceArgs),
    /// Maximum absolute and relative difference between two FieldFiles.
    Diff(DiffArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Poisson,
    Biharmonic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Green,
    SpectralIntegration,
}

impl From<Backend> for RadialBackend {
    fn from(b: Backend) -> RadialBackend {
        match b {
            Backend::Green => RadialBackend::Green,
            Backend::SpectralIntegration => RadialBackend::SpectralIntegration,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Numerics {
    /// z oversampling factor eta.
    #[arg(long, default_value_t = 4)]
    pub oversample: usize,
    /// Singular quadrature order m.
    #[arg(long, default_value_t = 10)]
    pub quad_order: usize,
}

/// Grid flags; any left out come from the preset (or the built-in default).
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Radial extent R.
    #[arg(long)]
    pub rmax: Option<f64>,
    /// Half-height A of the z interval.
    #[arg(long)]
    pub zhalf: Option<f64>,
    #[arg(long)]
    pub panels: Option<usize>,
    #[arg(long)]
    pub cheb_order: Option<usize>,
    #[arg(long)]
    pub ntheta: Option<usize>,
    #[arg(long)]
    pub nz: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Named setup: example1, maxwellian, anisotropic, example3.
    #[arg(long)]
    pub preset: Option<String>,
    /// Gaussian `V,X,Y,Z,W` or `VR:VZ,0,0,Z,W` (repeatable).
    #[arg(long = "source", value_parser = parse_source)]
    pub sources: Vec<GaussianSpec>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[arg(short, long)]
    pub input: PathBuf,
    /// Derivative orders `a,b,c` for d^a/dr^a d^b/dtheta^b d^c/dz^c (repeatable).
    #[arg(long = "deriv", value_parser = parse_triple, default_value = "0,0,0")]
    pub derivs: Vec<(u32, u32, u32)>,
    /// Output files are `<prefix>.d<abc>.cylf`.
    #[arg(short, long)]
    pub out_prefix: PathBuf,
    /// Must match the input file when given.
    #[arg(long)]
    pub panels: Option<usize>,
    #[arg(long)]
    pub cheb_order: Option<usize>,
    #[arg(long)]
    pub ntheta: Option<usize>,
    #[arg(long)]
    pub nz: Option<usize>,
    #[command(flatten)]
    pub numerics: Numerics,
    #[arg(long, value_enum, default_value_t = Backend::Green)]
    pub backend: Backend,
    /// JSON-lines run log (default: stdout).
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    #[arg(value_enum, default_value_t = Kind::Poisson)]
    pub kind: Kind,
    #[arg(long, default_value_t = 0.223)]
    pub variance: f64,
    /// Chebyshev orders per panel; the spectral backend uses one panel with the same N_r.
    #[arg(long, value_delimiter = ',', default_value = "8,12,16,20,24,32")]
    pub orders: Vec<usize>,
    #[arg(long, default_value_t = 8)]
    pub panels: usize,
    /// R = A.
    #[arg(long, default_value_t = 8.0)]
    pub extent: f64,
    #[arg(long, default_value_t = 128)]
    pub nz: usize,
    /// Derivatives to track (repeatable); defaults depend on the kind.
    #[arg(long = "deriv", value_parser = parse_triple)]
    pub derivs: Vec<(u32, u32, u32)>,
    #[command(flatten)]
    pub numerics: Numerics,
    /// CSV destination (default: stdout).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CollisionArgs {
    #[arg(long)]
    pub fa: PathBuf,
    #[arg(long)]
    pub fb: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1.0)]
    pub ma: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mb: f64,
    /// Output files are `<prefix>.C.cylf`, `<prefix>.Cp.cylf`, `<prefix>.Cb.cylf`.
    #[arg(short, long)]
    pub out_prefix: PathBuf,
    #[command(flatten)]
    pub numerics: Numerics,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(value_enum, default_value_t = Kind::Poisson)]
    pub kind: Kind,
    #[arg(long, value_delimiter = ',', default_value = "32,64,128,256")]
    pub nz: Vec<usize>,
    #[arg(long, default_value_t = 8)]
    pub panels: usize,
    #[arg(long, default_value_t = 16)]
    pub cheb_order: usize,
    #[arg(long, default_value_t = 8)]
    pub ntheta: usize,
    /// Timings are medians over this many runs.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[command(flatten)]
    pub numerics: Numerics,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MakeGaussianArgs {
    #[command(flatten)]
    pub sources: SourceArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReferenceArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[command(flatten)]
    pub sources: SourceArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Take the grid from this FieldFile instead of the grid flags.
    #[arg(long)]
    pub like: Option<PathBuf>,
    #[arg(long = "deriv", value_parser = parse_triple, default_value = "0,0,0")]
    pub derivs: Vec<(u32, u32, u32)>,
    #[arg(short, long)]
    pub out_prefix: PathBuf,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    pub computed: PathBuf,
    pub reference: PathBuf,
}
