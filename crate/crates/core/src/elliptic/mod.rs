//! Free-space Poisson and biharmonic solvers on the cylindrical grid.
//!
//! The pipeline: azimuthal modes of the data, oversampled z transform, one
//! radial problem per `(n, |kappa|)`, inverse z transform with the singular
//! correction, azimuthal synthesis. Real input is assumed, so only modes
//! `n >= 0` are solved and the rest follow by conjugate symmetry.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::discretization::{build_grid, CylGrid, RadialBackend, SolverConfig};
use crate::error::{Error, Result};
use crate::quadrature::{build_singular_rule, SingularRule};
use crate::radial::{spectral_integration_solve, BesselGrid, GreenSolver, Order};
use crate::transforms::{fft_plans, theta_decompose_real, theta_synthesize_real, z_forward_with, z_inverse_with, ModeField, SpectralModeField};

/// Derivative orders `(a, b, c)` of `d_r^a d_theta^b d_z^c u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeRequest {
    pub triples: Vec<(u32, u32, u32)>,
}

impl DerivativeRequest {
    pub fn new(triples: &[(u32, u32, u32)]) -> DerivativeRequest {
        DerivativeRequest { triples: triples.to_vec() }
    }

    /// `u` alone.
    pub fn value() -> DerivativeRequest {
        Self::new(&[(0, 0, 0)])
    }

    /// `u`, `u_r`, `u_theta`, `u_z`.
    pub fn gradient() -> DerivativeRequest {
        Self::new(&[(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    }

    fn validate(&self, max_a: u32, max_fourier: u32) -> Result<()> {
        if self.triples.is_empty() {
            return Err(Error::UnsupportedDerivative("empty derivative request".into()));
        }
        for &(a, b, c) in &self.triples {
            if a > max_a {
                return Err(Error::UnsupportedDerivative(format!("r-derivative order {a} exceeds {max_a} for this operator")));
            }
            if b > max_fourier || c > max_fourier {
                return Err(Error::UnsupportedDerivative(format!(
                    "({a},{b},{c}): theta/z orders are capped at {max_fourier}"
                )));
            }
        }
        Ok(())
    }
}

/// Which operator is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticKind {
    /// `Delta u = f`.
    Poisson,
    /// `Delta^2 u = f`.
    Biharmonic,
}

impl EllipticKind {
    fn max_r_order(self) -> u32 {
        match self {
            EllipticKind::Poisson => 2,
            EllipticKind::Biharmonic => 3,
        }
    }
}

/// Wall time of one pipeline stage.
#[derive(Debug, Clone, PartialEq)]
pub struct StageTiming {
    pub stage: &'static str,
    pub seconds: f64,
}

/// Requested derivative fields on the grid, with the configuration used.
#[derive(Debug, Clone)]
pub struct SolutionBundle {
    pub kind: EllipticKind,
    pub config: SolverConfig,
    pub fields: BTreeMap<(u32, u32, u32), Vec<f64>>,
    pub timings: Vec<StageTiming>,
    /// Azimuthal modes solved (`n >= 0`).
    pub n_modes: usize,
    /// Distinct `|kappa|` values.
    pub n_kappa: usize,
    /// Biharmonic outputs of total order below two, which converge more
    /// slowly than the second and higher derivatives.
    pub reduced_accuracy: Vec<(u32, u32, u32)>,
    pub warnings: Vec<String>,
}

impl SolutionBundle {
    pub fn get(&self, a: u32, b: u32, c: u32) -> Option<&[f64]> {
        self.fields.get(&(a, b, c)).map(|v| v.as_slice())
    }

    pub fn total_seconds(&self) -> f64 {
        self.timings.iter().map(|t| t.seconds).sum()
    }
}

/// Solve `Delta u = f` in free space for `f` sampled on the grid of `config`.
pub fn solve_poisson(f: &[f64], req: &DerivativeRequest, config: &SolverConfig) -> Result<SolutionBundle> {
    solve(EllipticKind::Poisson, f, req, config)
}

/// Solve `Delta^2 u = f` in free space.
pub fn solve_biharmonic(f: &[f64], req: &DerivativeRequest, config: &SolverConfig) -> Result<SolutionBundle> {
    solve(EllipticKind::Biharmonic, f, req, config)
}

/// Support check at `r = R` and `z = +-A`; returns the warnings raised.
fn support_warnings(grid: &CylGrid, f: &[f64]) -> Vec<String> {
    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if fmax == 0.0 {
        return Vec::new();
    }
    let tol = grid.config.tol * fmax;
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    let mut edge_r = 0.0f64;
    let mut edge_z = 0.0f64;
    for iz in 0..nz {
        for it in 0..nt {
            edge_r = edge_r.max(f[grid.index(nr - 1, it, iz)].abs());
            if iz == 0 || iz == nz - 1 {
                for ir in 0..nr {
                    edge_z = edge_z.max(f[grid.index(ir, it, iz)].abs());
                }
            }
        }
    }
    let mut out = Vec::new();
    if edge_r > tol {
        out.push(format!("|f| = {edge_r:.3e} at the outer radial nodes exceeds tol * max|f|; the free-space condition assumes f = 0 beyond R"));
    }
    if edge_z > tol {
        out.push(format!("|f| = {edge_z:.3e} at the end z planes exceeds tol * max|f|; data is treated as zero beyond +-A"));
    }
    for w in &out {
        log::warn!("{w}");
    }
    out
}

fn solve(kind: EllipticKind, f: &[f64], req: &DerivativeRequest, config: &SolverConfig) -> Result<SolutionBundle> {
    let grid = build_grid(config)?;
    if f.len() != grid.len() {
        return Err(Error::InvalidInput(format!("field has {} samples, grid has {}", f.len(), grid.len())));
    }
    if f.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("field contains non-finite samples".into()));
    }
    req.validate(kind.max_r_order(), config.max_fourier_deriv)?;
    if kind == EllipticKind::Biharmonic && config.backend == RadialBackend::SpectralIntegration {
        return Err(Error::InvalidConfig("the spectral-integration backend handles the second-order problem only".into()));
    }
    let warnings = support_warnings(&grid, f);
    let rule = build_singular_rule(config.n_z_padded(), config.z_half_padded(), config.quad_order)?;
    let (fwd, inv) = fft_plans(rule.n_padded);
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |stage: &'static str, timings: &mut Vec<StageTiming>| {
        timings.push(StageTiming { stage, seconds: clock.elapsed().as_secs_f64() });
        clock = Instant::now();
    };

    let modes = theta_decompose_real(&grid, f);
    lap("theta_forward", &mut timings);

    let spectral: Vec<SpectralModeField> = modes.par_iter().map(|m| z_forward_with(&grid, m, &rule, fwd.as_ref())).collect();
    drop(modes);
    lap("z_forward", &mut timings);

    let levels = req.triples.iter().map(|t| t.0).max().unwrap_or(0) as usize + 1;
    let solved = radial_stage(kind, &grid, &rule, &spectral, levels)?;
    drop(spectral);
    lap("radial", &mut timings);

    let pairs: BTreeSet<(u32, u32)> = req.triples.iter().map(|&(a, _, c)| (a, c)).collect();
    let mut physical: BTreeMap<(u32, u32), Vec<ModeField>> = BTreeMap::new();
    for &(a, c) in &pairs {
        let fields = solved
            .par_iter()
            .map(|lv| z_inverse_with(&grid, &lv[a as usize], &rule, c, inv.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        physical.insert((a, c), fields);
    }
    drop(solved);
    lap("z_inverse", &mut timings);

    let mut fields = BTreeMap::new();
    for &(a, b, c) in &req.triples {
        if fields.contains_key(&(a, b, c)) {
            continue;
        }
        fields.insert((a, b, c), theta_synthesize_real(&grid, &physical[&(a, c)], b)?);
    }
    lap("theta_inverse", &mut timings);

    let reduced_accuracy = match kind {
        EllipticKind::Biharmonic => req.triples.iter().copied().filter(|&(a, b, c)| a + b + c < 2).collect(),
        EllipticKind::Poisson => Vec::new(),
    };
    Ok(SolutionBundle {
        kind,
        config: config.clone(),
        fields,
        timings,
        n_modes: grid.n_theta() / 2 + 1,
        n_kappa: rule.abs_nodes().len(),
        reduced_accuracy,
        warnings,
    })
}

/// Solve every `(n, kappa)` radial problem; returns, per mode, the spectral
/// fields of `d^k u / dr^k` for `k < levels`.
fn radial_stage(
    kind: EllipticKind,
    grid: &CylGrid,
    rule: &SingularRule,
    spectral: &[SpectralModeField],
    levels: usize,
) -> Result<Vec<Vec<SpectralModeField>>> {
    let nr = grid.n_r();
    let abs_nodes = rule.abs_nodes();
    let mut columns_of: Vec<Vec<usize>> = vec![Vec::new(); abs_nodes.len()];
    for (col, &j) in rule.abs_index_of_columns().iter().enumerate() {
        columns_of[j].push(col);
    }
    // modes at roundoff level relative to the data contribute nothing
    let global = spectral.iter().flat_map(|s| s.values.iter()).fold(0.0f64, |m, v| m.max(v.norm()));
    let active: Vec<bool> = spectral
        .iter()
        .map(|s| s.values.iter().fold(0.0f64, |m, v| m.max(v.norm())) > f64::EPSILON * global)
        .collect();
    let order = match kind {
        EllipticKind::Poisson => Order::Second,
        EllipticKind::Biharmonic => Order::Fourth,
    };
    let max_n = spectral.iter().map(|s| s.n.unsigned_abs() as usize).max().unwrap_or(0);
    let backend = grid.config.backend;

    type Piece = (usize, usize, Vec<Vec<Complex64>>);
    let work = |j: usize| -> Result<Vec<Piece>> {
        let kappa = abs_nodes[j];
        let mut out = Vec::new();
        if backend == RadialBackend::SpectralIntegration {
            for (im, s) in spectral.iter().enumerate().filter(|(im, _)| active[*im]) {
                for &col in &columns_of[j] {
                    let sol = spectral_integration_solve(s.n, kappa, s.column(col), grid)?;
                    out.push((im, col, [sol.u, sol.u_r, sol.u_rr].into_iter().take(levels).collect()));
                }
            }
            return Ok(out);
        }
        let bg = BesselGrid::new(grid, kappa, max_n)?;
        let mut re = vec![0.0; nr];
        let mut im_part = vec![0.0; nr];
        let mut lv_re = vec![vec![0.0; nr]; levels];
        let mut lv_im = vec![vec![0.0; nr]; levels];
        for (im, s) in spectral.iter().enumerate().filter(|(im, _)| active[*im]) {
            let solver = GreenSolver::new(grid, &bg, s.n, order)?;
            for &col in &columns_of[j] {
                for (ir, v) in s.column(col).iter().enumerate() {
                    re[ir] = v.re;
                    im_part[ir] = v.im;
                }
                solver.apply(grid, &re, &mut lv_re);
                solver.apply(grid, &im_part, &mut lv_im);
                let lv: Vec<Vec<Complex64>> = lv_re
                    .iter()
                    .zip(&lv_im)
                    .map(|(a, b)| a.iter().zip(b).map(|(x, y)| Complex64::new(*x, *y)).collect())
                    .collect();
                if lv.iter().flatten().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
                    return Err(Error::Numerical(format!("non-finite radial solution at n={}, kappa={kappa}", s.n)));
                }
                out.push((im, col, lv));
            }
        }
        Ok(out)
    };
    let pieces = (0..abs_nodes.len()).into_par_iter().map(work).collect::<Result<Vec<_>>>()?;

    let mut solved: Vec<Vec<SpectralModeField>> = spectral
        .iter()
        .map(|s| (0..levels).map(|_| SpectralModeField::zeros(s.n, nr, rule)).collect())
        .collect();
    for (im, col, lv) in pieces.into_iter().flatten() {
        for (k, v) in lv.into_iter().enumerate() {
            solved[im][k].column_mut(col).copy_from_slice(&v);
        }
    }
    Ok(solved)
}

/// Largest relative tail in each spectral direction.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    /// Last two Chebyshev coefficients per panel line, over `max |f|`.
    pub r_tail: f64,
    /// Top eighth of the azimuthal modes, over the largest mode.
    pub theta_tail: f64,
    /// Top eighth of the z wavenumbers of the unpadded samples.
    pub kappa_tail: f64,
    /// Ratios above this are flagged.
    pub threshold: f64,
    pub under_resolved_r: bool,
    pub under_resolved_theta: bool,
    pub under_resolved_kappa: bool,
}

impl DecayReport {
    pub fn is_resolved(&self) -> bool {
        !(self.under_resolved_r || self.under_resolved_theta || self.under_resolved_kappa)
    }
}

/// Estimate whether `f` is resolved in `r`, `theta` and `z`.
pub fn spectral_decay_report(f: &[f64], config: &SolverConfig) -> Result<DecayReport> {
    let grid = build_grid(config)?;
    if f.len() != grid.len() {
        return Err(Error::InvalidInput(format!("field has {} samples, grid has {}", f.len(), grid.len())));
    }
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    let p = grid.cheb.order;
    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let threshold = 100.0 * config.tol;
    if fmax == 0.0 {
        return Ok(DecayReport {
            r_tail: 0.0,
            theta_tail: 0.0,
            kappa_tail: 0.0,
            threshold,
            under_resolved_r: false,
            under_resolved_theta: false,
            under_resolved_kappa: false,
        });
    }

    let mut r_tail = 0.0f64;
    if p >= 3 {
        for iz in 0..nz {
            for it in 0..nt {
                for panel in &grid.panels {
                    let line: Vec<f64> = (0..p).map(|j| f[grid.index(panel.offset + j, it, iz)]).collect();
                    let c = grid.cheb.coefficients(&line);
                    r_tail = r_tail.max(c[p - 1].abs().max(c[p - 2].abs()) / fmax);
                }
            }
        }
    }

    let theta_independent =
        (0..nz).all(|iz| (0..nr).all(|ir| (1..nt).all(|it| f[grid.index(ir, it, iz)] == f[grid.index(ir, 0, iz)])));
    let theta_tail = if theta_independent || nt < 8 {
        0.0
    } else {
        let modes = theta_decompose_real(&grid, f);
        let top = modes.iter().map(ModeField::max_abs).fold(0.0, f64::max);
        let cut = nt / 2 - nt / 16;
        modes.iter().filter(|m| m.n as usize >= cut).map(ModeField::max_abs).fold(0.0, f64::max) / top
    };

    let kappa_tail = {
        let mut planner = rustfft::FftPlanner::new();
        let fft = planner.plan_fft_forward(nz);
        let cut = nz / 2 - nz / 16;
        let mut top = 0.0f64;
        let mut tail = 0.0f64;
        let mut line = vec![Complex64::new(0.0, 0.0); nz];
        for it in 0..nt {
            for ir in 0..nr {
                for (iz, v) in line.iter_mut().enumerate() {
                    *v = Complex64::new(f[grid.index(ir, it, iz)], 0.0);
                }
                fft.process(&mut line);
                for (k, v) in line.iter().enumerate() {
                    let freq = k.min(nz - k);
                    top = top.max(v.norm());
                    if freq >= cut {
                        tail = tail.max(v.norm());
                    }
                }
            }
        }
        if top > 0.0 { tail / top } else { 0.0 }
    };

    Ok(DecayReport {
        r_tail,
        theta_tail,
        kappa_tail,
        threshold,
        under_resolved_r: r_tail > threshold,
        under_resolved_theta: theta_tail > threshold,
        under_resolved_kappa: kappa_tail > threshold,
    })
}

#[cfg(test)]
mod tests;
