//! Tensor-product grid: panel-Chebyshev in `r`, uniform in `theta` and `z`.
//!
//! Radial nodes are first-kind (open) Chebyshev points on each panel, so `r = 0`
//! is never sampled. All panels share one order `P`, so the reference-interval
//! operators in [`ChebOps`] are built once and rescaled per panel.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Which radial ODE backend the elliptic solvers use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadialBackend {
    /// Green's-function sweep over panels.
    #[default]
    Green,
    /// Global Chebyshev spectral integration (single panel only).
    SpectralIntegration,
}

/// All discretization parameters and tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Radial extent `R`.
    pub r_max: f64,
    /// Half-extent `A` of the z interval.
    pub z_half: f64,
    /// `0 = R_0 < R_1 < ... < R_{N_I} = R`.
    pub panel_edges: Vec<f64>,
    /// Chebyshev order `P` per panel.
    pub cheb_order: usize,
    pub n_theta: usize,
    pub n_z: usize,
    /// Oversampling factor `eta` for the z transform.
    pub oversample: usize,
    /// Singular quadrature order `m`.
    pub quad_order: usize,
    /// Target relative accuracy, used by diagnostics and support checks.
    pub tol: f64,
    /// Largest theta- and z-derivative order accepted in a request.
    pub max_fourier_deriv: u32,
    pub backend: RadialBackend,
}

impl SolverConfig {
    /// Uniform panels with default `eta = 4`, `m = 10`, `tol = 1e-12`.
    pub fn uniform(r_max: f64, z_half: f64, n_panels: usize, cheb_order: usize, n_theta: usize, n_z: usize) -> SolverConfig {
        let edges = (0..=n_panels).map(|i| r_max * i as f64 / n_panels.max(1) as f64).collect();
        SolverConfig {
            r_max,
            z_half,
            panel_edges: edges,
            cheb_order,
            n_theta,
            n_z,
            oversample: 4,
            quad_order: 10,
            tol: 1e-12,
            max_fourier_deriv: 3,
            backend: RadialBackend::Green,
        }
    }

    pub fn with_edges(mut self, edges: Vec<f64>) -> SolverConfig {
        self.r_max = *edges.last().unwrap_or(&self.r_max);
        self.panel_edges = edges;
        self
    }

    pub fn with_oversample(mut self, eta: usize) -> SolverConfig {
        self.oversample = eta;
        self
    }

    pub fn with_quad_order(mut self, m: usize) -> SolverConfig {
        self.quad_order = m;
        self
    }

    pub fn with_backend(mut self, backend: RadialBackend) -> SolverConfig {
        self.backend = backend;
        self
    }

    pub fn n_panels(&self) -> usize {
        self.panel_edges.len().saturating_sub(1)
    }

    pub fn n_r(&self) -> usize {
        self.n_panels() * self.cheb_order
    }

    /// Oversampled z sample count `N_z' = eta N_z`.
    pub fn n_z_padded(&self) -> usize {
        self.oversample * self.n_z
    }

    /// Oversampled half-extent `A' = eta A`.
    pub fn z_half_padded(&self) -> f64 {
        self.oversample as f64 * self.z_half
    }

    pub fn h_z(&self) -> f64 {
        2.0 * self.z_half / self.n_z as f64
    }

    /// Check the structural invariants; warns (does not fail) on `eta < 2`.
    pub fn validate(&self) -> Result<()> {
        let e = &self.panel_edges;
        if e.len() < 2 {
            return Err(Error::InvalidConfig("at least one radial panel is required".into()));
        }
        if e[0] != 0.0 {
            return Err(Error::InvalidConfig(format!("first panel edge must be 0, got {}", e[0])));
        }
        if e.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidConfig("panel edges must be strictly increasing".into()));
        }
        if (e[e.len() - 1] - self.r_max).abs() > 1e-14 * self.r_max {
            return Err(Error::InvalidConfig(format!("last panel edge {} differs from R = {}", e[e.len() - 1], self.r_max)));
        }
        if self.cheb_order == 0 {
            return Err(Error::InvalidConfig("Chebyshev order must be positive".into()));
        }
        if self.n_z == 0 || self.n_z % 2 != 0 {
            return Err(Error::InvalidConfig(format!("N_z must be even and positive, got {}", self.n_z)));
        }
        if self.n_theta == 0 {
            return Err(Error::InvalidConfig("N_theta must be positive".into()));
        }
        if !(self.z_half > 0.0) {
            return Err(Error::InvalidConfig("z half-extent must be positive".into()));
        }
        if self.oversample == 0 {
            return Err(Error::InvalidConfig("oversampling factor must be at least 1".into()));
        }
        if !(2..=16).contains(&self.quad_order) {
            return Err(Error::InvalidConfig(format!("quadrature order {} outside 2..=16", self.quad_order)));
        }
        if self.n_z_padded() <= 2 * self.quad_order {
            return Err(Error::InvalidConfig(format!(
                "oversampled N_z' = {} must exceed 2m = {}",
                self.n_z_padded(),
                2 * self.quad_order
            )));
        }
        if self.oversample < 2 {
            log::warn!("oversampling factor {} < 2: inverse z transform loses accuracy near z = +-A", self.oversample);
        }
        Ok(())
    }
}

/// Chebyshev calculus on `[-1, 1]` at `P` first-kind nodes, as dense row-major
/// `P x P` matrices acting on nodal values.
#[derive(Debug, Clone)]
pub struct ChebOps {
    pub order: usize,
    /// Increasing nodes `x_j = -cos(pi (2j+1) / 2P)`.
    pub nodes: Vec<f64>,
    /// Values to coefficients.
    pub to_coef: Vec<f64>,
    /// `integ[i][j]`: integral from -1 to `x_i` of the `j`-th cardinal function.
    pub integ: Vec<f64>,
    /// Integral over `[-1, 1]` of each cardinal function.
    pub weights: Vec<f64>,
    /// Differentiation matrix.
    pub diff: Vec<f64>,
}

impl ChebOps {
    pub fn new(order: usize) -> ChebOps {
        let p = order;
        let nodes: Vec<f64> = (0..p).map(|j| -(PI * (2 * j + 1) as f64 / (2 * p) as f64).cos()).collect();
        let mut to_coef = vec![0.0; p * p];
        for k in 0..p {
            for j in 0..p {
                let theta = PI * (2 * j + 1) as f64 / (2 * p) as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let mut v = 2.0 / p as f64 * sign * (k as f64 * theta).cos();
                if k == 0 {
                    v *= 0.5;
                }
                to_coef[k * p + j] = v;
            }
        }
        let mut integ = vec![0.0; p * p];
        let mut weights = vec![0.0; p];
        let mut diff = vec![0.0; p * p];
        let mut unit = vec![0.0; p];
        for j in 0..p {
            unit.iter_mut().for_each(|u| *u = 0.0);
            unit[j] = 1.0;
            let c = coef_apply(&to_coef, &unit);
            let ci = cheb_integrate_coefs(&c);
            weights[j] = clenshaw(&ci, 1.0);
            for i in 0..p {
                integ[i * p + j] = clenshaw(&ci, nodes[i]);
            }
        }
        // barycentric form; diagonal by negative row sum
        let bary: Vec<f64> = (0..p)
            .map(|j| {
                let s = (PI * (2 * j + 1) as f64 / (2 * p) as f64).sin();
                if j % 2 == 0 { s } else { -s }
            })
            .collect();
        for i in 0..p {
            let mut diag = 0.0;
            for j in 0..p {
                if i != j {
                    let v = bary[j] / bary[i] / (nodes[i] - nodes[j]);
                    diff[i * p + j] = v;
                    diag -= v;
                }
            }
            diff[i * p + i] = diag;
        }
        ChebOps { order, nodes, to_coef, integ, weights, diff }
    }

    pub fn coefficients(&self, values: &[f64]) -> Vec<f64> {
        coef_apply(&self.to_coef, values)
    }

    /// Weights `l_j(x)` of the nodal interpolant at a reference point `x`.
    pub fn interp_row(&self, x: f64) -> Vec<f64> {
        let p = self.order;
        let bary = |j: usize| {
            let s = (PI * (2 * j + 1) as f64 / (2 * p) as f64).sin();
            if j % 2 == 0 { s } else { -s }
        };
        if let Some(j) = self.nodes.iter().position(|&xj| xj == x) {
            let mut row = vec![0.0; p];
            row[j] = 1.0;
            return row;
        }
        let mut row: Vec<f64> = (0..p).map(|j| bary(j) / (x - self.nodes[j])).collect();
        let total: f64 = row.iter().sum();
        row.iter_mut().for_each(|v| *v /= total);
        row
    }
}

fn coef_apply(m: &[f64], v: &[f64]) -> Vec<f64> {
    let p = v.len();
    (0..p).map(|k| (0..p).map(|j| m[k * p + j] * v[j]).sum()).collect()
}

/// Evaluate `sum c_k T_k(x)` by Clenshaw's recurrence.
pub fn clenshaw(c: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c.first().copied().unwrap_or(0.0) + x * b1 - b2
}

/// Coefficients (one longer) of the antiderivative vanishing at `x = -1`.
fn cheb_integrate_coefs(c: &[f64]) -> Vec<f64> {
    let n = c.len();
    let get = |k: usize| if k < n { c[k] } else { 0.0 };
    let mut out = vec![0.0; n + 1];
    for k in 1..=n {
        let lower = if k == 1 { 2.0 * get(0) } else { get(k - 1) };
        out[k] = (lower - get(k + 1)) / (2.0 * k as f64);
    }
    let at_minus_one: f64 = out.iter().enumerate().skip(1).map(|(k, v)| if k % 2 == 0 { *v } else { -*v }).sum();
    out[0] = -at_minus_one;
    out
}

/// A radial panel `[a, b]` and the index of its first node in `r_nodes`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub a: f64,
    pub b: f64,
    pub offset: usize,
}

impl Panel {
    pub fn half_width(&self) -> f64 {
        0.5 * (self.b - self.a)
    }

    pub fn to_reference(&self, r: f64) -> f64 {
        (2.0 * r - self.a - self.b) / (self.b - self.a)
    }
}

/// The `(r, theta, z)` tensor-product grid. Field arrays are laid out with `r`
/// fastest, then `theta`, then `z` (see [`CylGrid::index`]).
#[derive(Debug, Clone)]
pub struct CylGrid {
    pub config: SolverConfig,
    pub r_nodes: Vec<f64>,
    pub theta_nodes: Vec<f64>,
    pub z_nodes: Vec<f64>,
    pub panels: Vec<Panel>,
    pub cheb: ChebOps,
}

/// Build the grid and its panel operators.
pub fn build_grid(config: &SolverConfig) -> Result<CylGrid> {
    config.validate()?;
    let cheb = ChebOps::new(config.cheb_order);
    let p = config.cheb_order;
    let mut panels = Vec::with_capacity(config.n_panels());
    let mut r_nodes = Vec::with_capacity(config.n_r());
    for (i, w) in config.panel_edges.windows(2).enumerate() {
        let panel = Panel { a: w[0], b: w[1], offset: i * p };
        r_nodes.extend(cheb.nodes.iter().map(|x| panel.a + panel.half_width() * (x + 1.0)));
        panels.push(panel);
    }
    let theta_nodes = (0..config.n_theta).map(|l| 2.0 * PI * l as f64 / config.n_theta as f64).collect();
    let hz = config.h_z();
    let half = (config.n_z / 2) as i64;
    let z_nodes = (-half..half).map(|l| l as f64 * hz).collect();
    Ok(CylGrid { config: config.clone(), r_nodes, theta_nodes, z_nodes, panels, cheb })
}

impl CylGrid {
    pub fn n_r(&self) -> usize {
        self.r_nodes.len()
    }

    pub fn n_theta(&self) -> usize {
        self.theta_nodes.len()
    }

    pub fn n_z(&self) -> usize {
        self.z_nodes.len()
    }

    /// Total number of samples.
    pub fn len(&self) -> usize {
        self.n_r() * self.n_theta() * self.n_z()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, ir: usize, it: usize, iz: usize) -> usize {
        ir + self.n_r() * (it + self.n_theta() * iz)
    }

    /// Sample `f(r, theta, z)` on every node.
    pub fn sample<F: Fn(f64, f64, f64) -> f64>(&self, f: F) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.len());
        for &z in &self.z_nodes {
            for &t in &self.theta_nodes {
                out.extend(self.r_nodes.iter().map(|&r| f(r, t, z)));
            }
        }
        out
    }

    /// Quadrature weights for `int_0^R g(r) dr` at the radial nodes.
    pub fn r_weights(&self) -> Vec<f64> {
        let mut w = Vec::with_capacity(self.n_r());
        for panel in &self.panels {
            w.extend(self.cheb.weights.iter().map(|v| v * panel.half_width()));
        }
        w
    }

    /// Index of the panel containing `r` (closed on the right for the last).
    pub fn panel_of(&self, r: f64) -> Option<usize> {
        if !(r >= 0.0 && r <= self.config.r_max) {
            return None;
        }
        Some(self.panels.iter().position(|p| r <= p.b).unwrap_or(self.panels.len() - 1))
    }

    /// Apply `d^k/dr^k` (`k` = 1 or 2) to one radial line, panel by panel.
    pub fn differentiate_r(&self, values: &[f64], k: u32, out: &mut [f64]) {
        let p = self.cheb.order;
        let mut tmp = vec![0.0; p];
        for panel in &self.panels {
            let src = &values[panel.offset..panel.offset + p];
            let dst = &mut out[panel.offset..panel.offset + p];
            let s = 1.0 / panel.half_width();
            matvec(&self.cheb.diff, src, &mut tmp);
            if k == 1 {
                dst.iter_mut().zip(&tmp).for_each(|(d, t)| *d = t * s);
            } else {
                matvec(&self.cheb.diff, &tmp, dst);
                dst.iter_mut().for_each(|d| *d *= s * s);
            }
        }
    }

    /// Interpolate a radial line to an arbitrary `r` in `[0, R]`.
    pub fn interp_r(&self, values: &[f64], r: f64) -> Result<f64> {
        let ip = self.panel_of(r).ok_or_else(|| Error::Domain(format!("r = {r} outside [0, R]")))?;
        let panel = self.panels[ip];
        let p = self.cheb.order;
        cheb_interp_eval(&values[panel.offset..panel.offset + p], panel.a, panel.b, r)
    }
}

pub(crate) fn matvec(m: &[f64], v: &[f64], out: &mut [f64]) {
    let p = v.len();
    for i in 0..p {
        out[i] = (0..p).map(|j| m[i * p + j] * v[j]).sum();
    }
}

/// Evaluate the degree `P-1` interpolant of first-kind node values on `[a, b]`.
pub fn cheb_interp_eval(panel_values: &[f64], a: f64, b: f64, target: f64) -> Result<f64> {
    let slack = 1e-12 * (b - a).abs();
    if !(target >= a - slack && target <= b + slack) {
        return Err(Error::Domain(format!("target {target} outside panel [{a}, {b}]")));
    }
    let ops = ChebOps::new(panel_values.len());
    let c = ops.coefficients(panel_values);
    let x = ((2.0 * target - a - b) / (b - a)).clamp(-1.0, 1.0);
    Ok(clenshaw(&c, x))
}

/// Chebyshev series on a panel, `sum c_k T_k((2x - a - b)/(b - a))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    pub a: f64,
    pub b: f64,
    pub coefs: Vec<f64>,
}

impl ChebSeries {
    pub fn eval(&self, x: f64) -> f64 {
        clenshaw(&self.coefs, (2.0 * x - self.a - self.b) / (self.b - self.a))
    }
}

/// Antiderivative of the interpolant of `panel_values` on `[a, b]`, zero at `a`,
/// as a degree-`P` Chebyshev series.
pub fn panel_antiderivative(panel_values: &[f64], a: f64, b: f64) -> ChebSeries {
    let ops = ChebOps::new(panel_values.len());
    let mut coefs = cheb_integrate_coefs(&ops.coefficients(panel_values));
    let hw = 0.5 * (b - a);
    coefs.iter_mut().for_each(|c| *c *= hw);
    ChebSeries { a, b, coefs }
}
