//! Rosenbluth potentials and the axisymmetric Coulomb collision operator.
//!
//! `Delta H = -4 pi f_b` and `Delta^2 G = -8 pi f_b` are solved on the
//! grid, and
//! `C = (gamma / m_a) [C_b - 2 (1 + m_a / m_b) C_p]` with
//! `C_p = -4 pi f_a f_b + f_a,r H_r + f_a,z H_z` and
//! `C_b = -8 pi f_a f_b + f_a,r (2 G_rzz + 2 G_rrr + 2 G_rr / r - G_r / r^2)
//!       + f_a,z (2 G_rz / r + 2 G_rrz + 2 G_zzz)
//!       + f_a,rr G_rr + 2 f_a,rz G_rz + f_a,zz G_zz`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::discretization::{build_grid, CylGrid, SolverConfig};
use crate::elliptic::{solve_biharmonic, solve_poisson, DerivativeRequest, SolutionBundle};
use crate::error::{Error, Result};

/// Prefactor and species masses (consistent units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionParams {
    pub gamma_ab: f64,
    pub m_a: f64,
    pub m_b: f64,
}

impl Default for CollisionParams {
    fn default() -> Self {
        CollisionParams { gamma_ab: 1.0, m_a: 1.0, m_b: 1.0 }
    }
}

/// `C`, `C_p`, `C_b` on the `(r, z)` grid (`r` fastest), with the potential
/// bundles they were built from.
#[derive(Debug, Clone)]
pub struct CollisionResult {
    pub n_r: usize,
    pub n_z: usize,
    pub c: Vec<f64>,
    pub c_p: Vec<f64>,
    pub c_b: Vec<f64>,
    pub h: SolutionBundle,
    pub g: SolutionBundle,
}

impl CollisionResult {
    /// `(||C_p||_inf, ||C_b||_inf, ||C||_inf)`.
    pub fn norms(&self) -> (f64, f64, f64) {
        let inf = |v: &[f64]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        (inf(&self.c_p), inf(&self.c_b), inf(&self.c))
    }
}

const H_REQUEST: [(u32, u32, u32); 3] = [(0, 0, 0), (1, 0, 0), (0, 0, 1)];
const G_REQUEST: [(u32, u32, u32); 8] = [(1, 0, 0), (2, 0, 0), (1, 0, 1), (0, 0, 2), (3, 0, 0), (2, 0, 1), (1, 0, 2), (0, 0, 3)];

/// `H_b` with `H`, `H_r`, `H_z`.
pub fn rosenbluth_h(f_b: &[f64], config: &SolverConfig) -> Result<SolutionBundle> {
    let rhs: Vec<f64> = f_b.iter().map(|v| -4.0 * PI * v).collect();
    solve_poisson(&rhs, &DerivativeRequest::new(&H_REQUEST), config)
}

/// `G_b` with every derivative the collision operator uses.
pub fn rosenbluth_g(f_b: &[f64], config: &SolverConfig) -> Result<SolutionBundle> {
    let rhs: Vec<f64> = f_b.iter().map(|v| -8.0 * PI * v).collect();
    solve_biharmonic(&rhs, &DerivativeRequest::new(&G_REQUEST), config)
}

/// The `theta = 0` slab, after checking the field does not vary in `theta`.
fn axisymmetric_slab(grid: &CylGrid, f: &[f64], name: &str) -> Result<Vec<f64>> {
    if f.len() != grid.len() {
        return Err(Error::InvalidInput(format!("{name} has {} samples, grid has {}", f.len(), grid.len())));
    }
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut slab = vec![0.0; nr * nz];
    let mut spread = 0.0f64;
    for iz in 0..nz {
        for ir in 0..nr {
            let base = f[grid.index(ir, 0, iz)];
            slab[ir + nr * iz] = base;
            for it in 1..nt {
                spread = spread.max((f[grid.index(ir, it, iz)] - base).abs());
            }
        }
    }
    if spread > grid.config.tol * fmax {
        return Err(Error::InvalidInput(format!(
            "{name} varies in theta (spread {:.3e} of max {fmax:.3e}); the collision operator is axisymmetric only",
            spread
        )));
    }
    Ok(slab)
}

/// `d/dz` and `d^2/dz^2` of each z line by FFT on the zero-padded line.
fn z_derivatives(slab: &[f64], nr: usize, nz: usize, hz: f64, eta: usize) -> (Vec<f64>, Vec<f64>) {
    let npad = nz * eta.max(1);
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(npad);
    let inv = planner.plan_fft_inverse(npad);
    let period = npad as f64 * hz;
    let lines: Vec<(Vec<f64>, Vec<f64>)> = (0..nr)
        .into_par_iter()
        .map(|ir| {
            let mut buf = vec![Complex64::new(0.0, 0.0); npad];
            for iz in 0..nz {
                buf[iz] = Complex64::new(slab[ir + nr * iz], 0.0);
            }
            fwd.process(&mut buf);
            let mut d1 = buf.clone();
            let mut d2 = buf;
            for k in 0..npad {
                let freq = if k < npad / 2 { k as f64 } else if k == npad / 2 { 0.0 } else { k as f64 - npad as f64 };
                let w = 2.0 * PI * freq / period;
                d1[k] *= Complex64::new(0.0, w) / npad as f64;
                // the Nyquist term is kept for the even derivative
                let w2 = if k == npad / 2 { PI * npad as f64 / period } else { w };
                d2[k] *= -w2 * w2 / npad as f64;
            }
            inv.process(&mut d1);
            inv.process(&mut d2);
            (d1[..nz].iter().map(|c| c.re).collect(), d2[..nz].iter().map(|c| c.re).collect())
        })
        .collect();
    let mut dz = vec![0.0; nr * nz];
    let mut dzz = vec![0.0; nr * nz];
    for (ir, (a, b)) in lines.into_iter().enumerate() {
        for iz in 0..nz {
            dz[ir + nr * iz] = a[iz];
            dzz[ir + nr * iz] = b[iz];
        }
    }
    (dz, dzz)
}

/// `d/dr` and `d^2/dr^2` panel by panel.
fn r_derivatives(grid: &CylGrid, slab: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let (nr, nz) = (grid.n_r(), grid.n_z());
    let mut dr = vec![0.0; nr * nz];
    let mut drr = vec![0.0; nr * nz];
    for iz in 0..nz {
        let line = &slab[nr * iz..nr * (iz + 1)];
        grid.differentiate_r(line, 1, &mut dr[nr * iz..nr * (iz + 1)]);
        grid.differentiate_r(line, 2, &mut drr[nr * iz..nr * (iz + 1)]);
    }
    (dr, drr)
}

fn field(b: &SolutionBundle, a: u32, c: u32) -> &[f64] {
    b.get(a, 0, c).expect("requested above")
}

/// Evaluate `C(f_a, f_b)` for axisymmetric samples on the grid of `config`.
pub fn collision_axisymmetric(f_a: &[f64], f_b: &[f64], params: &CollisionParams, config: &SolverConfig) -> Result<CollisionResult> {
    if !(params.m_a > 0.0 && params.m_b > 0.0) {
        return Err(Error::Domain(format!("species masses must be positive, got {} and {}", params.m_a, params.m_b)));
    }
    let grid = build_grid(config)?;
    let fa = axisymmetric_slab(&grid, f_a, "f_a")?;
    let fb = axisymmetric_slab(&grid, f_b, "f_b")?;
    let mut axi = config.clone();
    axi.n_theta = 1;
    let (nr, nz) = (grid.n_r(), grid.n_z());

    let h = rosenbluth_h(&fb, &axi)?;
    let g = rosenbluth_g(&fb, &axi)?;
    let (fa_r, fa_rr) = r_derivatives(&grid, &fa);
    let (fa_z, fa_zz) = z_derivatives(&fa, nr, nz, config.h_z(), config.oversample);
    let (fa_rz, _) = r_derivatives(&grid, &fa_z);

    let (h_r, h_z) = (field(&h, 1, 0), field(&h, 0, 1));
    let (g_r, g_rr, g_rz, g_zz) = (field(&g, 1, 0), field(&g, 2, 0), field(&g, 1, 1), field(&g, 0, 2));
    let (g_rrr, g_rrz, g_rzz, g_zzz) = (field(&g, 3, 0), field(&g, 2, 1), field(&g, 1, 2), field(&g, 0, 3));

    let mut c_p = vec![0.0; nr * nz];
    let mut c_b = vec![0.0; nr * nz];
    let mut c = vec![0.0; nr * nz];
    let mass = 2.0 * (1.0 + params.m_a / params.m_b);
    let pre = params.gamma_ab / params.m_a;
    for i in 0..nr * nz {
        let r = grid.r_nodes[i % nr];
        let ff = fa[i] * fb[i];
        c_p[i] = -4.0 * PI * ff + fa_r[i] * h_r[i] + fa_z[i] * h_z[i];
        c_b[i] = -8.0 * PI * ff
            + fa_r[i] * (2.0 * g_rzz[i] + 2.0 * g_rrr[i] + 2.0 * g_rr[i] / r - g_r[i] / (r * r))
            + fa_z[i] * (2.0 * g_rz[i] / r + 2.0 * g_rrz[i] + 2.0 * g_zzz[i])
            + fa_rr[i] * g_rr[i]
            + 2.0 * fa_rz[i] * g_rz[i]
            + fa_zz[i] * g_zz[i];
        c[i] = pre * (c_b[i] - mass * c_p[i]);
    }
    Ok(CollisionResult { n_r: nr, n_z: nz, c, c_p, c_b, h, g })
}
