//! Green's-function sweeps for the radial problems.
//!
//! Each integral `A(r) = int_0^r q(s) phi(s) ds` against a growing kernel `q`
//! is carried as the normalized quantity `F(r) = A(r) / q(r)`, which stays
//! O(|phi| r) for every order and argument. On a panel `[a, b]`, `F` satisfies
//! `F' = phi - beta F` with `beta = q'/q > 0`, so the panel-local part (zero at
//! `a`) solves the well-conditioned collocation system
//! `(I + Q diag(beta)) F = Q phi`, `Q` the Chebyshev integration matrix. The
//! value carried in from the left is rescaled by `q(a)/q(r) <= 1`. Suffix
//! integrals against decaying kernels `p` are handled the same way from the
//! right. Kernel ratios are formed from exponentially scaled [`Wide`] values so
//! nothing overflows, and the integrands are never interpolated across a range
//! where they vary by more than the ratio of the two ends.

use crate::discretization::{CylGrid, Panel};
use crate::error::{Error, Result};
use crate::linalg::Lu;
use crate::specfun::{BesselOrders, Wide};

/// Grading ratio of the sub-panels that replace the panel touching the origin.
const GRADE: f64 = 0.5;

/// The panels the sweeps actually run on. The first grid panel is split
/// geometrically toward `r = 0`, where the decaying kernels carry logarithms
/// and poles that a single polynomial cannot follow; results are brought
/// back to that panel's nodes by interpolating the (smooth) normalized
/// integrals. Every other panel is used as is.
pub(crate) struct SweepLayout {
    pub panels: Vec<Panel>,
    pub nodes: Vec<f64>,
    /// Edges of `panels`, without the origin.
    pub edges: Vec<f64>,
    pub n_sub: usize,
    /// For each node of the first grid panel: the sub-panel holding it and
    /// its interpolation row.
    pub out_rows: Vec<(usize, Vec<f64>)>,
    /// Interpolation rows from the first grid panel's nodes to the sub-panel nodes.
    pub in_rows: Vec<Vec<f64>>,
}

impl SweepLayout {
    pub fn new(grid: &CylGrid) -> SweepLayout {
        let p = grid.cheb.order;
        let first = grid.panels[0];
        let r0 = grid.r_nodes[0];
        // innermost sub-panel holds no output node
        let mut cuts = vec![first.b];
        while *cuts.last().unwrap() > r0 {
            let next = cuts.last().unwrap() * GRADE;
            cuts.push(next);
        }
        cuts.push(0.0);
        cuts.reverse();
        let n_sub = cuts.len() - 1;
        let mut panels = Vec::with_capacity(n_sub + grid.panels.len() - 1);
        for w in cuts.windows(2) {
            panels.push(Panel { a: w[0], b: w[1], offset: panels.len() * p });
        }
        for pn in &grid.panels[1..] {
            panels.push(Panel { a: pn.a, b: pn.b, offset: panels.len() * p });
        }
        let nodes: Vec<f64> = panels
            .iter()
            .flat_map(|pn| grid.cheb.nodes.iter().map(move |x| pn.a + pn.half_width() * (x + 1.0)))
            .collect();
        let edges = panels.iter().map(|pn| pn.b).collect();
        let out_rows = grid.r_nodes[..p]
            .iter()
            .map(|&r| {
                let k = panels[..n_sub].iter().position(|pn| r <= pn.b).unwrap_or(n_sub - 1);
                (k, grid.cheb.interp_row(panels[k].to_reference(r)))
            })
            .collect();
        let in_rows = nodes[..n_sub * p].iter().map(|&r| grid.cheb.interp_row(first.to_reference(r))).collect();
        SweepLayout { panels, nodes, edges, n_sub, out_rows, in_rows }
    }

    /// Index in `nodes` of grid node `j`, for nodes outside the first panel.
    fn comp_index(&self, j: usize, p: usize) -> usize {
        j - p + self.n_sub * p
    }
}

/// Bessel tables for one `|kappa|` at the sweep nodes and edges and at the
/// first grid panel's nodes.
pub(crate) struct BesselGrid {
    pub kappa: f64,
    pub layout: SweepLayout,
    pub nodes: Vec<BesselOrders>,
    pub edges: Vec<BesselOrders>,
    pub first: Vec<BesselOrders>,
}

impl BesselGrid {
    /// Tables holding orders up to `max_n + 1` with three derivatives, enough
    /// for the fourth-order kernels.
    pub fn new(grid: &CylGrid, kappa: f64, max_n: usize) -> Result<BesselGrid> {
        let kappa = kappa.abs();
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::Domain(format!("radial solve needs kappa != 0, got {kappa}")));
        }
        let layout = SweepLayout::new(grid);
        let table = |rs: &[f64]| rs.iter().map(|&r| BesselOrders::new(max_n + 1, kappa * r)).collect::<Result<Vec<_>>>();
        let nodes = table(&layout.nodes)?;
        let edges = table(&layout.edges)?;
        let first = table(&grid.r_nodes[..grid.cheb.order])?;
        Ok(BesselGrid { kappa, layout, nodes, edges, first })
    }

    pub fn max_n(&self) -> usize {
        self.nodes[0].max_order() - 1
    }

    /// Table at grid node `j`.
    fn at_grid_node(&self, j: usize, p: usize) -> &BesselOrders {
        if j < p { &self.first[j] } else { &self.nodes[self.layout.comp_index(j, p)] }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Order {
    Second,
    Fourth,
}

/// Values needed from one table: the scaled kernels (as magnitudes), their
/// log-derivatives in `r`, and the prefactor products for `d^k u / dr^k`.
struct Local {
    /// `|q1|, |q2|, |p1|, |p2|` scaled by `e^{-x}` (q) or `e^{x}` (p).
    kern: [Wide; 4],
    /// `q'/q` for q1, q2 and `-p'/p` for p1, p2.
    logd: [f64; 4],
}

/// `J_d = d^d/dx^d (x I_n'(x))`, scaled.
fn j_deriv(t: &BesselOrders, n: i64, d: u32) -> Wide {
    let x = t.x();
    let nf = n as f64;
    let a = t.di(n + 1, d) * x;
    let b = t.di(n, d) * nf;
    let c = if d > 0 { t.di(n + 1, d - 1) * d as f64 } else { Wide::ZERO };
    a + b + c
}

/// `(n+1) K_{n+1}^{(d)} + (n-1) K_{n-1}^{(d)}`, scaled.
fn t_comb(t: &BesselOrders, n: i64, d: u32) -> Wide {
    t.dk(n + 1, d) * (n + 1) as f64 + t.dk(n - 1, d) * (n - 1) as f64
}

fn local(t: &BesselOrders, n: i64, kappa: f64) -> Local {
    let x = t.x();
    let nn = (n * n) as f64;
    let i0 = t.di(n, 0);
    let i1 = t.di(n, 1);
    let k0 = t.dk(n, 0);
    let k1 = t.dk(n, 1);
    let j0 = j_deriv(t, n, 0);
    let j1 = j_deriv(t, n, 1);
    let logd = [
        kappa * (i1 / i0).to_f64(),
        kappa * (j1 / j0).to_f64(),
        -kappa * (k1 / k0).to_f64(),
        -kappa * (1.0 + nn / (x * x)) * (k0 / k1).to_f64(),
    ];
    Local { kern: [i0, j0, k0, (k1 * x).abs()], logd }
}

/// Derivatives `d^k/dr^k` (k = 0..=3) of the four prefactors, scaled.
fn prefactors(t: &BesselOrders, n: i64, kappa: f64, kmax: u32) -> [[Wide; 4]; 4] {
    let x = t.x();
    let nf = n as f64;
    let nn = nf * nf;
    let mut out = [[Wide::ZERO; 4]; 4];
    let mut kp = 1.0;
    for k in 0..=kmax {
        out[k as usize][0] = t.di(n, k) * kp;
        out[k as usize][2] = t.dk(n, k) * kp;
        kp *= kappa;
    }
    if kmax >= 3 {
        for k in 0..=3u32 {
            out[k as usize][1] = j_deriv(t, n, k) * kappa.powi(k as i32 - 1);
        }
        let t0 = t_comb(t, n, 0);
        let t1 = t_comb(t, n, 1);
        let k0 = t.dk(n, 0);
        let k1 = t.dk(n, 1);
        let k2 = t.dk(n, 2);
        out[0][3] = k1 * (x / kappa);
        out[1][3] = k0 * (x + nn / x);
        out[2][3] = (k0 + k1 * x - t0 * (nf / (2.0 * x))) * kappa;
        out[3][3] = (k1 * 2.0 + k2 * x + t0 * (nf / (2.0 * x * x)) - t1 * (nf / (2.0 * x))) * (kappa * kappa);
    }
    out
}

/// One prefix or suffix integral: per-panel factored systems and the ratios
/// used to carry the running total across panels.
struct Sweep {
    forward: bool,
    coef: Vec<f64>,
    lus: Vec<Lu>,
    node_ratio: Vec<f64>,
    panel_ratio: Vec<f64>,
}

/// Factored Green's-function solver for one `(n, |kappa|)`.
pub(crate) struct GreenSolver<'a> {
    layout: &'a SweepLayout,
    order: Order,
    kappa: f64,
    /// Prefix over q1, q2 and suffix over p1, p2 (only q1, p1 for Order::Second).
    sweeps: Vec<Sweep>,
    /// `coef[k][node][s]`: multiplier of sweep `s` in `d^k u/dr^k`.
    coef: Vec<Vec<[f64; 4]>>,
}

impl<'a> GreenSolver<'a> {
    pub fn new(grid: &CylGrid, bg: &'a BesselGrid, n: i64, order: Order) -> Result<GreenSolver<'a>> {
        let n = n.abs();
        if n as usize > bg.max_n() {
            return Err(Error::Domain(format!("order {n} exceeds the Bessel table bound {}", bg.max_n())));
        }
        let kappa = bg.kappa;
        let nr = grid.n_r();
        let p = grid.cheb.order;
        let lay = &bg.layout;
        let nc = lay.nodes.len();
        let locals: Vec<Local> = bg.nodes.iter().map(|t| local(t, n, kappa)).collect();
        let edge_locals: Vec<Local> = bg.edges.iter().map(|t| local(t, n, kappa)).collect();

        let kernels: &[usize] = match order {
            Order::Second => &[0, 2],
            Order::Fourth => &[1, 0, 3, 2],
        };
        let mut sweeps = Vec::with_capacity(kernels.len());
        for &kern in kernels {
            let forward = kern < 2;
            let coef: Vec<f64> = locals.iter().map(|l| l.logd[kern]).collect();
            let mut lus = Vec::with_capacity(lay.panels.len());
            let mut node_ratio = vec![0.0; nc];
            let mut panel_ratio = vec![0.0; lay.panels.len()];
            for (ip, panel) in lay.panels.iter().enumerate() {
                let hw = panel.half_width();
                let mut lu = Lu::new(p);
                let m = lu.matrix_mut();
                for i in 0..p {
                    for j in 0..p {
                        let q = grid.cheb.integ[i * p + j];
                        let qq = if forward { q } else { grid.cheb.weights[j] - q };
                        m[i * p + j] = hw * qq * coef[panel.offset + j];
                    }
                    m[i * p + i] += 1.0;
                }
                if !lu.factor() {
                    return Err(Error::Numerical(format!("singular panel system at n={n}, kappa={kappa}")));
                }
                lus.push(lu);
                // ratio of the kernel at the panel's inflow edge to the kernel at r
                let (anchor, anchor_r) = if forward {
                    if ip == 0 {
                        continue;
                    }
                    (edge_locals[ip - 1].kern[kern], panel.a)
                } else {
                    if ip + 1 == lay.panels.len() {
                        continue;
                    }
                    (edge_locals[ip].kern[kern], panel.b)
                };
                let sign = if forward { 1.0 } else { -1.0 };
                let ratio = |w: Wide, r: f64| (anchor / w).to_f64() * (sign * kappa * (anchor_r - r)).exp();
                for j in 0..p {
                    let idx = panel.offset + j;
                    node_ratio[idx] = ratio(locals[idx].kern[kern], lay.nodes[idx]);
                }
                // the outflow edge; the origin is never an outflow edge that matters
                let far = if forward { Some((edge_locals[ip].kern[kern], panel.b)) } else if ip > 0 { Some((edge_locals[ip - 1].kern[kern], panel.a)) } else { None };
                if let Some((w, r)) = far {
                    panel_ratio[ip] = ratio(w, r);
                }
            }
            sweeps.push(Sweep { forward, coef, lus, node_ratio, panel_ratio });
        }

        let kmax = match order {
            Order::Second => 2,
            Order::Fourth => 3,
        };
        let mut coef = vec![vec![[0.0; 4]; nr]; kmax as usize + 1];
        for j in 0..nr {
            let pf = prefactors(bg.at_grid_node(j, p), n, kappa, kmax);
            for k in 0..=kmax as usize {
                let c = &mut coef[k][j];
                match order {
                    Order::Second => {
                        // u^(k) = p1^(k) q1 F_q1 + q1^(k) p1 G_p1
                        c[0] = (pf[k][2] * pf[0][0]).to_f64();
                        c[1] = (pf[k][0] * pf[0][2]).to_f64();
                    }
                    Order::Fourth => {
                        // u^(k) = p1^(k) q2 F_q2 + p2^(k) q1 F_q1 + q1^(k) p2 G_p2 + q2^(k) p1 G_p1
                        c[0] = (pf[k][2] * pf[0][1]).to_f64();
                        c[1] = (pf[k][3] * pf[0][0]).to_f64();
                        c[2] = (pf[k][0] * pf[0][3]).to_f64();
                        c[3] = (pf[k][1] * pf[0][2]).to_f64();
                    }
                }
            }
        }
        Ok(GreenSolver { order, kappa, sweeps, coef, layout: lay })
    }

    /// Number of derivative levels produced (3 or 4).
    pub fn levels(&self) -> usize {
        self.coef.len()
    }

    /// Solve for one real right-hand side; `out[k]` receives `d^k u / dr^k`.
    pub fn apply(&self, grid: &CylGrid, f: &[f64], out: &mut [Vec<f64>]) {
        let nr = grid.n_r();
        let scale = match self.order {
            Order::Second => -1.0,
            Order::Fourth => -0.5 / self.kappa,
        };
        let lay = self.layout;
        let p = grid.cheb.order;
        let nc = lay.nodes.len();
        let mut phi = vec![0.0; nc];
        for (i, row) in lay.in_rows.iter().enumerate() {
            let fv: f64 = row.iter().zip(&f[..p]).map(|(w, v)| w * v).sum();
            phi[i] = scale * lay.nodes[i] * fv;
        }
        for j in p..nr {
            let c = lay.comp_index(j, p);
            phi[c] = scale * lay.nodes[c] * f[j];
        }
        let mut comp = vec![0.0; nc];
        let mut integrals = vec![vec![0.0; nr]; self.sweeps.len()];
        for (s, sw) in self.sweeps.iter().enumerate() {
            run_sweep(grid, lay, sw, &phi, &mut comp);
            let dst = &mut integrals[s];
            for (j, (k, row)) in lay.out_rows.iter().enumerate() {
                let off = lay.panels[*k].offset;
                dst[j] = row.iter().zip(&comp[off..off + p]).map(|(w, v)| w * v).sum();
            }
            for j in p..nr {
                dst[j] = comp[lay.comp_index(j, p)];
            }
        }
        for (k, o) in out.iter_mut().enumerate().take(self.levels()) {
            for j in 0..nr {
                let c = &self.coef[k][j];
                o[j] = (0..self.sweeps.len()).map(|s| c[s] * integrals[s][j]).sum();
            }
        }
        if self.order == Order::Second && out.len() > 2 {
            out[2].iter_mut().zip(f).for_each(|(o, v)| *o += v);
        }
    }
}

fn run_sweep(grid: &CylGrid, lay: &SweepLayout, sw: &Sweep, phi: &[f64], out: &mut [f64]) {
    let p = grid.cheb.order;
    let np = lay.panels.len();
    let mut buf = vec![0.0; p];
    let mut carry = 0.0;
    let order: Box<dyn Iterator<Item = usize>> = if sw.forward { Box::new(0..np) } else { Box::new((0..np).rev()) };
    for ip in order {
        let panel = lay.panels[ip];
        let hw = panel.half_width();
        let off = panel.offset;
        let ph = &phi[off..off + p];
        for i in 0..p {
            let mut s = 0.0;
            for j in 0..p {
                let q = grid.cheb.integ[i * p + j];
                let qq = if sw.forward { q } else { grid.cheb.weights[j] - q };
                s += qq * ph[j];
            }
            buf[i] = hw * s;
        }
        sw.lus[ip].solve(&mut buf);
        let total: f64 = hw * (0..p).map(|j| grid.cheb.weights[j] * (ph[j] - sw.coef[off + j] * buf[j])).sum::<f64>();
        for j in 0..p {
            out[off + j] = buf[j] + if carry != 0.0 { sw.node_ratio[off + j] * carry } else { 0.0 };
        }
        carry = total + if carry != 0.0 { sw.panel_ratio[ip] * carry } else { 0.0 };
    }
}
