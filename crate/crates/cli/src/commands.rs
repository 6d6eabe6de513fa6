//! Command implementations. Each returns a [`CliError`] that maps onto the
//! documented exit codes.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::json;

use crate::args::*;
use crate::fieldfile::{FieldFile, FieldFileError};
use crate::presets::{preset, GridSpec, PRESET_NAMES};
use cylharm::reference::{gaussian_biharmonic_exact, mixture_poisson_exact, sample_mixture};
use cylharm::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    /// 1 for numerical failures, 2 for usage and file errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numerical(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::Numerical(_) | Error::Domain(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FieldFileError> for CliError {
    fn from(e: FieldFileError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(a) => solve(&a),
        Command::Convergence(a) => convergence(&a),
        Command::Collision(a) => collision(&a),
        Command::Bench(a) => bench(&a),
        Command::MakeGaussian(a) => make_gaussian(&a),
        Command::Reference(a) => reference(&a),
        Command::Diff(a) => diff(&a),
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s: OsString = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn deriv_tag((a, b, c): (u32, u32, u32)) -> String {
    format!("d{a}{b}{c}")
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn ensure_finite(name: &str, v: &[f64]) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(CliError::Numerical(format!("{name} contains non-finite values")))
    }
}

fn run_solver(kind: Kind, f: &[f64], req: &DerivativeRequest, cfg: &SolverConfig) -> cylharm::Result<SolutionBundle> {
    match kind {
        Kind::Poisson => solve_poisson(f, req, cfg),
        Kind::Biharmonic => solve_biharmonic(f, req, cfg),
    }
}

fn solve(a: &SolveArgs) -> Result<()> {
    let input = FieldFile::load(&a.input)?;
    for (flag, given, actual) in [
        ("--panels", a.panels, input.n_panels()),
        ("--cheb-order", a.cheb_order, input.n_r as usize / input.n_panels()),
        ("--ntheta", a.ntheta, input.n_theta as usize),
        ("--nz", a.nz, input.n_z as usize),
    ] {
        if given.is_some_and(|g| g != actual) {
            return Err(CliError::Usage(format!("{flag} {} does not match the input file ({actual})", given.unwrap())));
        }
    }
    let cfg = input
        .config()
        .with_oversample(a.numerics.oversample)
        .with_quad_order(a.numerics.quad_order)
        .with_backend(a.backend.into());
    cfg.validate()?;
    let mut log = sink(a.log.as_deref())?;

    let t = Instant::now();
    let decay = spectral_decay_report(&input.samples, &cfg)?;
    let decay_secs = t.elapsed().as_secs_f64();
    if !decay.is_resolved() {
        eprintln!(
            "warning: input looks under-resolved (tails r {:.1e}, theta {:.1e}, kappa {:.1e}; threshold {:.1e})",
            decay.r_tail, decay.theta_tail, decay.kappa_tail, decay.threshold
        );
    }

    let req = DerivativeRequest::new(&a.derivs);
    let bundle = run_solver(a.kind, &input.samples, &req, &cfg)?;
    for w in &bundle.warnings {
        eprintln!("warning: {w}");
    }
    for d in &bundle.reduced_accuracy {
        eprintln!("warning: biharmonic {} has reduced accuracy", deriv_tag(*d));
    }
    for (&d, field) in &bundle.fields {
        ensure_finite(&deriv_tag(d), field)?;
    }
    for (&d, field) in &bundle.fields {
        let path = with_suffix(&a.out_prefix, &format!(".{}.cylf", deriv_tag(d)));
        input.with_samples(field.clone(), input.n_theta).save(&path)?;
    }

    let (n_modes, n_kappa) = (bundle.n_modes, bundle.n_kappa);
    for st in &bundle.timings {
        writeln!(log, "{}", json!({"stage": st.stage, "seconds": st.seconds, "n_modes": n_modes, "n_kappa": n_kappa}))?;
    }
    writeln!(
        log,
        "{}",
        json!({"stage": "decay", "seconds": decay_secs, "n_modes": n_modes, "n_kappa": n_kappa,
               "r_tail": decay.r_tail, "theta_tail": decay.theta_tail, "kappa_tail": decay.kappa_tail,
               "resolved": decay.is_resolved()})
    )?;
    writeln!(log, "{}", json!({"stage": "total", "seconds": bundle.total_seconds(), "n_modes": n_modes, "n_kappa": n_kappa}))?;
    log.flush()?;
    Ok(())
}

fn exact_value(kind: Kind, specs: &[GaussianSpec], r: f64, t: f64, z: f64, d: (u32, u32, u32)) -> Result<f64> {
    let missing = || CliError::Usage(format!("no closed form for derivative {}", deriv_tag(d)));
    match kind {
        Kind::Poisson => mixture_poisson_exact(specs, r, t, z)?.get(d.0, d.1, d.2).ok_or_else(missing),
        Kind::Biharmonic => specs.iter().try_fold(0.0, |s, g| {
            let v = gaussian_biharmonic_exact(g, r, t, z)?.get(d.0, d.1, d.2).ok_or_else(missing)?;
            Ok(s + v)
        }),
    }
}

fn exact_on_grid(kind: Kind, specs: &[GaussianSpec], grid: &CylGrid, d: (u32, u32, u32)) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(grid.len());
    for &z in &grid.z_nodes {
        for &t in &grid.theta_nodes {
            for &r in &grid.r_nodes {
                out.push(exact_value(kind, specs, r, t, z, d)?);
            }
        }
    }
    Ok(out)
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

fn default_derivs(kind: Kind) -> Vec<(u32, u32, u32)> {
    match kind {
        Kind::Poisson => vec![(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 0, 0), (0, 0, 2)],
        Kind::Biharmonic => vec![(2, 0, 0), (1, 0, 1), (0, 0, 2), (3, 0, 0), (0, 0, 3)],
    }
}

fn convergence(a: &ConvergenceArgs) -> Result<()> {
    if !(a.variance > 0.0) || a.orders.is_empty() || a.panels == 0 {
        return Err(CliError::Usage("need a positive variance, at least one order and one panel".into()));
    }
    let derivs = if a.derivs.is_empty() { default_derivs(a.kind) } else { a.derivs.clone() };
    let spec = GaussianSpec::centered(a.variance);
    let mut out = csv::Writer::from_writer(sink(a.output.as_deref())?);
    let mut header = vec!["backend".to_string(), "n_r".to_string()];
    for &d in &derivs {
        header.push(format!("rel_err_{}", deriv_tag(d)));
        header.push(format!("abs_err_{}", deriv_tag(d)));
    }
    out.write_record(&header)?;
    let req = DerivativeRequest::new(&derivs);
    for backend in [Backend::Green, Backend::SpectralIntegration] {
        for &p in &a.orders {
            let n_r = a.panels * p;
            let cfg = match backend {
                Backend::Green => SolverConfig::uniform(a.extent, a.extent, a.panels, p, 1, a.nz),
                Backend::SpectralIntegration => SolverConfig::uniform(a.extent, a.extent, 1, n_r, 1, a.nz),
            }
            .with_oversample(a.numerics.oversample)
            .with_quad_order(a.numerics.quad_order)
            .with_backend(backend.into());
            let grid = build_grid(&cfg)?;
            let f = sample_mixture(&grid, &[spec]);
            let name = match backend {
                Backend::Green => "green",
                Backend::SpectralIntegration => "spectral_integration",
            };
            let mut row = vec![name.to_string(), n_r.to_string()];
            match run_solver(a.kind, &f, &req, &cfg) {
                Ok(bundle) => {
                    for &d in &derivs {
                        let want = exact_on_grid(a.kind, &[spec], &grid, d)?;
                        let got = bundle.get(d.0, d.1, d.2).unwrap();
                        let abs = got.iter().zip(&want).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
                        row.push(format!("{:e}", abs / max_abs(&want)));
                        row.push(format!("{abs:e}"));
                    }
                }
                // the spectral backend has no fourth-order solver
                Err(Error::InvalidConfig(_)) if backend == Backend::SpectralIntegration => {
                    row.extend(std::iter::repeat_n("NaN".to_string(), 2 * derivs.len()));
                }
                Err(e) => return Err(e.into()),
            }
            out.write_record(&row)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn collision(a: &CollisionArgs) -> Result<()> {
    let fa = FieldFile::load(&a.fa)?;
    let fb = FieldFile::load(&a.fb)?;
    if (fa.n_r, fa.n_theta, fa.n_z, &fa.panel_edges, fa.z_half) != (fb.n_r, fb.n_theta, fb.n_z, &fb.panel_edges, fb.z_half) {
        return Err(CliError::Usage("f_a and f_b must share one grid".into()));
    }
    let cfg = fa.config().with_oversample(a.numerics.oversample).with_quad_order(a.numerics.quad_order);
    let params = CollisionParams { gamma_ab: a.gamma, m_a: a.ma, m_b: a.mb };
    let res = collision_axisymmetric(&fa.samples, &fb.samples, &params, &cfg)?;
    for (name, v) in [("C", &res.c), ("C_p", &res.c_p), ("C_b", &res.c_b)] {
        ensure_finite(name, v)?;
    }
    for (suffix, v) in [(".C.cylf", &res.c), (".Cp.cylf", &res.c_p), (".Cb.cylf", &res.c_b)] {
        fa.with_samples(v.clone(), 1).save(&with_suffix(&a.out_prefix, suffix))?;
    }
    let (cp, cb, c) = res.norms();
    let mut out = io::stdout().lock();
    writeln!(out, "{:<14}{:<14}{:<14}", "||C_p||_inf", "||C_b||_inf", "||C||_inf")?;
    writeln!(out, "{:<14}{:<14}{:<14}", format!("{cp:.3e}"), format!("{cb:.3e}"), format!("{c:.3e}"))?;
    Ok(())
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn bench(a: &BenchArgs) -> Result<()> {
    if a.repeats == 0 || a.nz.is_empty() {
        return Err(CliError::Usage("need at least one N_z and one repeat".into()));
    }
    let mut out = csv::Writer::from_writer(sink(a.output.as_deref())?);
    let mut header_done = false;
    for &nz in &a.nz {
        let cfg = SolverConfig::uniform(8.0, 8.0, a.panels, a.cheb_order, a.ntheta, nz)
            .with_oversample(a.numerics.oversample)
            .with_quad_order(a.numerics.quad_order);
        let grid = build_grid(&cfg)?;
        let f = sample_mixture(&grid, &[GaussianSpec::isotropic(0.223, [0.5, 0.2, 0.0], 1.0)]);
        let req = DerivativeRequest::value();
        let mut stages: Vec<(&'static str, Vec<f64>)> = Vec::new();
        let mut totals = Vec::new();
        for _ in 0..a.repeats {
            let t = Instant::now();
            let bundle = run_solver(a.kind, &f, &req, &cfg)?;
            totals.push(t.elapsed().as_secs_f64());
            if stages.is_empty() {
                stages = bundle.timings.iter().map(|s| (s.stage, Vec::new())).collect();
            }
            for (slot, s) in stages.iter_mut().zip(&bundle.timings) {
                slot.1.push(s.seconds);
            }
        }
        if !header_done {
            let mut h = vec!["n_z".to_string(), "n_points".to_string()];
            h.extend(stages.iter().map(|s| s.0.to_string()));
            h.push("total".into());
            out.write_record(&h)?;
            header_done = true;
        }
        let mut row = vec![nz.to_string(), grid.len().to_string()];
        row.extend(stages.into_iter().map(|(_, v)| format!("{:e}", median(v))));
        row.push(format!("{:e}", median(totals)));
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}

/// Sources and grid from a preset plus explicit flags. Explicit grid flags
/// override the preset's; explicit sources replace its sources.
fn resolve_setup(src: &SourceArgs, grid: &GridArgs) -> Result<(Vec<GaussianSpec>, GridSpec)> {
    let base = match &src.preset {
        Some(name) => Some(preset(name).ok_or_else(|| CliError::Usage(format!("unknown preset '{name}' (known: {})", PRESET_NAMES.join(", "))))?),
        None => None,
    };
    let sources = match (&base, src.sources.is_empty()) {
        (_, false) => src.sources.clone(),
        (Some(p), true) => p.sources.clone(),
        (None, true) => return Err(CliError::Usage("give --preset or at least one --source".into())),
    };
    let d = base.map(|p| p.grid).unwrap_or(GridSpec { r_max: 8.0, z_half: 8.0, panels: 8, cheb_order: 16, n_theta: 1, n_z: 128 });
    let spec = GridSpec {
        r_max: grid.rmax.unwrap_or(d.r_max),
        z_half: grid.zhalf.unwrap_or(d.z_half),
        panels: grid.panels.unwrap_or(d.panels),
        cheb_order: grid.cheb_order.unwrap_or(d.cheb_order),
        n_theta: grid.ntheta.unwrap_or(d.n_theta),
        n_z: grid.nz.unwrap_or(d.n_z),
    };
    Ok((sources, spec))
}

fn make_gaussian(a: &MakeGaussianArgs) -> Result<()> {
    let (sources, spec) = resolve_setup(&a.sources, &a.grid)?;
    let grid = build_grid(&spec.config())?;
    let file = FieldFile::from_grid(&grid, sample_mixture(&grid, &sources));
    file.save(&a.output)?;
    println!("{}: {} x {} x {} samples, {} source(s)", a.output.display(), file.n_r, file.n_theta, file.n_z, sources.len());
    Ok(())
}

fn reference(a: &ReferenceArgs) -> Result<()> {
    let (sources, spec) = resolve_setup(&a.sources, &a.grid)?;
    let cfg = match &a.like {
        Some(p) => FieldFile::load(p)?.config(),
        None => spec.config(),
    };
    let grid = build_grid(&cfg)?;
    for &d in &a.derivs {
        let v = exact_on_grid(a.kind, &sources, &grid, d)?;
        let path = with_suffix(&a.out_prefix, &format!(".{}.cylf", deriv_tag(d)));
        FieldFile::from_grid(&grid, v).save(&path)?;
    }
    Ok(())
}

fn diff(a: &DiffArgs) -> Result<()> {
    let x = FieldFile::load(&a.computed)?;
    let y = FieldFile::load(&a.reference)?;
    if (x.n_r, x.n_theta, x.n_z) != (y.n_r, y.n_theta, y.n_z) {
        return Err(CliError::Usage("files have different dimensions".into()));
    }
    let abs = x.samples.iter().zip(&y.samples).fold(0.0f64, |m, (p, q)| m.max((p - q).abs()));
    let scale = max_abs(&y.samples);
    let rel = if scale > 0.0 { abs / scale } else { abs };
    println!("max_abs_err {abs:e}");
    println!("max_rel_err {rel:e}");
    Ok(())
}
