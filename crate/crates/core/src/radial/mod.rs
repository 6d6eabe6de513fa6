//! Radial boundary-value problems for one Fourier/Fourier mode `(n, kappa)`.
//!
//! The second-order problem is the modified Bessel equation
//! `u'' + u'/r - (n^2/r^2 + kappa^2) u = f`, and the fourth-order one is the
//! same operator applied twice, both posed on `[0, R]` with regularity at the
//! origin and the free-space (radiation) condition at `R`.

mod green;
mod spectral;

pub(crate) use green::{BesselGrid, GreenSolver, Order};
pub use spectral::spectral_integration_solve;

use num_complex::Complex64;

use crate::discretization::{CylGrid, RadialBackend};
use crate::error::{Error, Result};
use crate::specfun::BesselOrders;

/// Solution of one radial problem and its `r` derivatives on the grid nodes.
#[derive(Debug, Clone)]
pub struct RadialSolution {
    pub n: i64,
    pub kappa: f64,
    pub u: Vec<Complex64>,
    pub u_r: Vec<Complex64>,
    pub u_rr: Vec<Complex64>,
    /// Present for the fourth-order problem only.
    pub u_rrr: Option<Vec<Complex64>>,
    pub backend: RadialBackend,
    pub r_max: f64,
    /// `u(R)` and `u'(R)`, extrapolated from the outermost panel.
    pub boundary: (Complex64, Complex64),
}

impl RadialSolution {
    pub fn max_abs(&self) -> f64 {
        self.u.iter().fold(0.0, |m, v| m.max(v.norm()))
    }
}

fn check_inputs(kappa: f64, rhs: &[Complex64], grid: &CylGrid) -> Result<()> {
    if !(kappa != 0.0) || !kappa.is_finite() {
        return Err(Error::Domain(format!("radial solve needs a finite kappa != 0, got {kappa}")));
    }
    if rhs.len() != grid.n_r() {
        return Err(Error::InvalidInput(format!("rhs has {} values, grid has {} radial nodes", rhs.len(), grid.n_r())));
    }
    Ok(())
}

fn split(rhs: &[Complex64]) -> (Vec<f64>, Vec<f64>) {
    (rhs.iter().map(|c| c.re).collect(), rhs.iter().map(|c| c.im).collect())
}

/// Evaluate the last panel's interpolant at `R`, and its derivative there.
pub(crate) fn boundary_values(grid: &CylGrid, u: &[Complex64], u_r: &[Complex64]) -> (Complex64, Complex64) {
    let r = grid.config.r_max;
    let at = |v: &[Complex64]| {
        let re: Vec<f64> = v.iter().map(|c| c.re).collect();
        let im: Vec<f64> = v.iter().map(|c| c.im).collect();
        Complex64::new(grid.interp_r(&re, r).unwrap_or(f64::NAN), grid.interp_r(&im, r).unwrap_or(f64::NAN))
    };
    (at(u), at(u_r))
}

fn green_solve(n: i64, kappa: f64, rhs: &[Complex64], grid: &CylGrid, order: Order) -> Result<RadialSolution> {
    check_inputs(kappa, rhs, grid)?;
    let bg = BesselGrid::new(grid, kappa, n.unsigned_abs() as usize)?;
    let solver = GreenSolver::new(grid, &bg, n, order)?;
    let nr = grid.n_r();
    let levels = solver.levels();
    let (re, im) = split(rhs);
    let mut out_re = vec![vec![0.0; nr]; levels];
    let mut out_im = vec![vec![0.0; nr]; levels];
    solver.apply(grid, &re, &mut out_re);
    solver.apply(grid, &im, &mut out_im);
    let mut parts: Vec<Vec<Complex64>> = out_re
        .iter()
        .zip(&out_im)
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| Complex64::new(*x, *y)).collect())
        .collect();
    let u_rrr = if levels > 3 { parts.pop() } else { None };
    let u_rr = parts.pop().unwrap();
    let u_r = parts.pop().unwrap();
    let u = parts.pop().unwrap();
    for v in u.iter().chain(&u_r).chain(&u_rr) {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::Numerical(format!("non-finite radial solution at n={n}, kappa={kappa}")));
        }
    }
    let boundary = boundary_values(grid, &u, &u_r);
    Ok(RadialSolution { n, kappa, u, u_r, u_rr, u_rrr, backend: RadialBackend::Green, r_max: grid.config.r_max, boundary })
}

/// Solve `u'' + u'/r - (n^2/r^2 + kappa^2) u = f` by Green's-function sweeps.
pub fn solve_modified_bessel(n: i64, kappa: f64, rhs: &[Complex64], grid: &CylGrid) -> Result<RadialSolution> {
    green_solve(n, kappa, rhs, grid, Order::Second)
}

/// Solve the squared operator `L_n^2 u = f` with `u'''` included.
pub fn solve_fourth_order(n: i64, kappa: f64, rhs: &[Complex64], grid: &CylGrid) -> Result<RadialSolution> {
    green_solve(n, kappa, rhs, grid, Order::Fourth)
}

/// Normalized residual of the radiation condition
/// `u(R) - K_n(|k| R) / (|k| K_n'(|k| R)) u'(R)`, divided by `max |u|`.
pub fn radiation_bc_residual(sol: &RadialSolution) -> f64 {
    let r_max = sol.r_max;
    let kappa = sol.kappa.abs();
    let Ok(t) = BesselOrders::new(sol.n.unsigned_abs() as usize, kappa * r_max) else {
        return f64::NAN;
    };
    let ratio = (t.dk(sol.n, 0) / t.dk(sol.n, 1)).to_f64() / kappa;
    let (u, du) = sol.boundary;
    let norm = sol.max_abs().max(u.norm());
    if norm == 0.0 {
        return 0.0;
    }
    (u - du * ratio).norm() / norm
}

/// Apply `d^2/dr^2 + (1/r) d/dr - (n^2/r^2 + kappa^2)` given nodal derivatives.
pub fn apply_bessel_operator(n: i64, kappa: f64, r: &[f64], u: &[Complex64], u_r: &[Complex64], u_rr: &[Complex64]) -> Vec<Complex64> {
    let nn = (n * n) as f64;
    (0..r.len())
        .map(|j| u_rr[j] + u_r[j] / r[j] - u[j] * (nn / (r[j] * r[j]) + kappa * kappa))
        .collect()
}
