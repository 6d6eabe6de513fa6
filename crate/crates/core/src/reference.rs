//! Closed-form Gaussian solutions and a brute-force convolution oracle.
//!
//! Every radial profile here is a function of `y = rho^2 / (4 v)` that is
//! entire in `y`, so the gradient and Hessian factors `g'/rho`,
//! `(g'/rho)'/rho`, ... are evaluated as `y`-derivatives and never divide by
//! a small `rho`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::discretization::CylGrid;
use crate::error::{Error, Result};
use crate::specfun::erf;

/// Variance of a Gaussian density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Variance {
    Isotropic(f64),
    /// `(v_r, v_z)`: variance across and along the z axis.
    Anisotropic(f64, f64),
}

/// `w exp(-|x - c|^2 / 4v) / (4 pi v)^{3/2}` (unit mass times `w`), or its
/// anisotropic analogue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianSpec {
    pub variance: Variance,
    /// Cartesian center.
    pub center: [f64; 3],
    pub weight: f64,
}

impl GaussianSpec {
    pub fn isotropic(v: f64, center: [f64; 3], weight: f64) -> GaussianSpec {
        GaussianSpec { variance: Variance::Isotropic(v), center, weight }
    }

    pub fn anisotropic(v_r: f64, v_z: f64, center: [f64; 3], weight: f64) -> GaussianSpec {
        GaussianSpec { variance: Variance::Anisotropic(v_r, v_z), center, weight }
    }

    /// A unit-mass isotropic Gaussian at the origin.
    pub fn centered(v: f64) -> GaussianSpec {
        Self::isotropic(v, [0.0; 3], 1.0)
    }

    fn check(&self) -> Result<()> {
        let ok = match self.variance {
            Variance::Isotropic(v) => v > 0.0,
            Variance::Anisotropic(a, b) => a > 0.0 && b > 0.0,
        };
        if ok { Ok(()) } else { Err(Error::Domain(format!("Gaussian variances must be positive: {:?}", self.variance))) }
    }

    fn iso(&self) -> Result<f64> {
        self.check()?;
        match self.variance {
            Variance::Isotropic(v) => Ok(v),
            Variance::Anisotropic(..) => Err(Error::Domain("closed forms exist for isotropic Gaussians only".into())),
        }
    }

    /// Density at the cylindrical point `(r, theta, z)`.
    pub fn density(&self, r: f64, theta: f64, z: f64) -> f64 {
        let d = self.offset(r, theta, z);
        let (vr, vz) = match self.variance {
            Variance::Isotropic(v) => (v, v),
            Variance::Anisotropic(a, b) => (a, b),
        };
        // on-axis centers: use r^2 directly so the samples are bitwise theta-independent
        let perp = if self.center[0] == 0.0 && self.center[1] == 0.0 { r * r } else { d[0] * d[0] + d[1] * d[1] };
        let e = -perp / (4.0 * vr) - d[2] * d[2] / (4.0 * vz);
        self.weight * e.exp() / ((4.0 * PI).powf(1.5) * vr * vz.sqrt())
    }

    fn offset(&self, r: f64, theta: f64, z: f64) -> [f64; 3] {
        let c = self.center;
        [r * theta.cos() - c[0], r * theta.sin() - c[1], z - c[2]]
    }
}

/// Sample a Gaussian mixture on the grid.
pub fn sample_mixture(grid: &CylGrid, specs: &[GaussianSpec]) -> Vec<f64> {
    grid.sample(|r, t, z| specs.iter().map(|s| s.density(r, t, z)).sum())
}

/// `d^j/dy^j [erf(sqrt y) / sqrt y]` for `j = 0..=3`.
fn erf_ratio_derivs(y: f64) -> [f64; 4] {
    let c = 2.0 / PI.sqrt();
    let mut out = [0.0; 4];
    if y < 1.0 {
        // sum_{k >= j} (-1)^k y^{k-j} / ((k-j)! (2k+1))
        for (j, o) in out.iter_mut().enumerate() {
            let mut s = 0.0;
            let mut pow = 1.0;
            for i in 0..40 {
                let k = i + j;
                let term = pow / (2 * k + 1) as f64;
                s += if k % 2 == 0 { term } else { -term };
                pow *= y / (i + 1) as f64;
                if pow < 1e-18 {
                    break;
                }
            }
            *o = c * s;
        }
    } else {
        let sy = y.sqrt();
        let ey = (-y).exp() / PI.sqrt();
        out[0] = erf(sy) / sy;
        // y E^{(k+1)} = (-1)^k e^{-y} / sqrt(pi) - (k + 1/2) E^{(k)}
        for k in 0..3 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            out[k + 1] = (sign * ey - (k as f64 + 0.5) * out[k]) / y;
        }
    }
    out
}

/// Value and the factors `D1 = g'/rho`, `D2 = D1'/rho`, `D3 = D2'/rho` of a
/// radial profile `g`.
#[derive(Debug, Clone, Copy)]
struct Radial {
    g: f64,
    d1: f64,
    d2: f64,
    d3: f64,
}

impl Radial {
    /// From `g = c H(y)`, `y = rho^2 / 4v`, using `d/d(rho^2) = (1/4v) d/dy`.
    fn from_y(c: f64, h: [f64; 4], v: f64) -> Radial {
        let s = 1.0 / (4.0 * v);
        Radial { g: c * h[0], d1: 2.0 * c * h[1] * s, d2: 4.0 * c * h[2] * s * s, d3: 8.0 * c * h[3] * s * s * s }
    }

    fn scaled(self, w: f64) -> Radial {
        Radial { g: w * self.g, d1: w * self.d1, d2: w * self.d2, d3: w * self.d3 }
    }
}

fn y_of(d: &[f64; 3], v: f64) -> f64 {
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) / (4.0 * v)
}

/// Cylindrical partial derivatives `d_r^a d_theta^b d_z^c` of a radially
/// symmetric (about the Gaussian's center) function, built from Cartesian
/// derivative tensors.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CylDerivatives {
    pub u: f64,
    pub u_r: f64,
    pub u_theta: f64,
    pub u_z: f64,
    pub u_rr: f64,
    pub u_rz: f64,
    pub u_zz: f64,
    pub u_rrr: f64,
    pub u_rrz: f64,
    pub u_rzz: f64,
    pub u_zzz: f64,
}

impl CylDerivatives {
    fn add(&mut self, o: &CylDerivatives) {
        self.u += o.u;
        self.u_r += o.u_r;
        self.u_theta += o.u_theta;
        self.u_z += o.u_z;
        self.u_rr += o.u_rr;
        self.u_rz += o.u_rz;
        self.u_zz += o.u_zz;
        self.u_rrr += o.u_rrr;
        self.u_rrz += o.u_rrz;
        self.u_rzz += o.u_rzz;
        self.u_zzz += o.u_zzz;
    }

    /// Lookup by derivative orders, for the combinations stored here.
    pub fn get(&self, a: u32, b: u32, c: u32) -> Option<f64> {
        Some(match (a, b, c) {
            (0, 0, 0) => self.u,
            (1, 0, 0) => self.u_r,
            (0, 1, 0) => self.u_theta,
            (0, 0, 1) => self.u_z,
            (2, 0, 0) => self.u_rr,
            (1, 0, 1) => self.u_rz,
            (0, 0, 2) => self.u_zz,
            (3, 0, 0) => self.u_rrr,
            (2, 0, 1) => self.u_rrz,
            (1, 0, 2) => self.u_rzz,
            (0, 0, 3) => self.u_zzz,
            _ => return None,
        })
    }
}

/// Chain rule from `d_i g = D1 d_i`, `d_ij g = D1 delta_ij + D2 d_i d_j`,
/// `d_ijk g = D2 (delta_ij d_k + delta_ik d_j + delta_jk d_i) + D3 d_i d_j d_k`.
fn cylindrical(rad: Radial, d: [f64; 3], r: f64, theta: f64) -> CylDerivatives {
    let (s, c) = theta.sin_cos();
    // unit vectors e_r = (c, s, 0), e_z = (0, 0, 1); dot products with d
    let dr = c * d[0] + s * d[1];
    let dz = d[2];
    // d_theta = r e_theta . grad, e_theta = (-s, c, 0)
    let dt = -s * d[0] + c * d[1];
    let grad = |a: f64| rad.d1 * a;
    // second derivative along unit directions e_a, e_b: D1 (e_a . e_b) + D2 (e_a.d)(e_b.d)
    let hess = |ab: f64, a: f64, b: f64| rad.d1 * ab + rad.d2 * a * b;
    let third = |ab: f64, ac: f64, bc: f64, a: f64, b: f64, cc: f64| {
        rad.d2 * (ab * cc + ac * b + bc * a) + rad.d3 * a * b * cc
    };
    CylDerivatives {
        u: rad.g,
        u_r: grad(dr),
        u_theta: r * grad(dt),
        u_z: grad(dz),
        u_rr: hess(1.0, dr, dr),
        u_rz: hess(0.0, dr, dz),
        u_zz: hess(1.0, dz, dz),
        u_rrr: third(1.0, 1.0, 1.0, dr, dr, dr),
        u_rrz: third(1.0, 0.0, 0.0, dr, dr, dz),
        u_rzz: third(0.0, 0.0, 1.0, dr, dz, dz),
        u_zzz: third(1.0, 1.0, 1.0, dz, dz, dz),
    }
}

/// Exact solution of `Delta u = f` for one Gaussian:
/// `u = -w erf(rho / 2 sqrt v) / (4 pi rho)`, with cylindrical derivatives.
pub fn gaussian_poisson_exact(spec: &GaussianSpec, r: f64, theta: f64, z: f64) -> Result<CylDerivatives> {
    let v = spec.iso()?;
    let d = spec.offset(r, theta, z);
    let h = erf_ratio_derivs(y_of(&d, v));
    let rad = Radial::from_y(-1.0 / (8.0 * PI * v.sqrt()), h, v).scaled(spec.weight);
    Ok(cylindrical(rad, d, r, theta))
}

/// Exact solution of `Delta^2 u = f` for one Gaussian:
/// `u = -[rho/(8 pi) + v/(4 pi rho)] erf(rho / 2 sqrt v) - sqrt(v) e^{-rho^2/4v} / (4 pi^{3/2})`.
pub fn gaussian_biharmonic_exact(spec: &GaussianSpec, r: f64, theta: f64, z: f64) -> Result<CylDerivatives> {
    let v = spec.iso()?;
    let d = spec.offset(r, theta, z);
    let y = y_of(&d, v);
    let e = erf_ratio_derivs(y);
    // u = -(sqrt v / 8 pi) B(y), B = (2y + 1) E + (2 / sqrt pi) e^{-y}
    let ex = 2.0 / PI.sqrt() * (-y).exp();
    let b = [
        (2.0 * y + 1.0) * e[0] + ex,
        2.0 * e[0] + (2.0 * y + 1.0) * e[1] - ex,
        4.0 * e[1] + (2.0 * y + 1.0) * e[2] + ex,
        6.0 * e[2] + (2.0 * y + 1.0) * e[3] - ex,
    ];
    let rad = Radial::from_y(-v.sqrt() / (8.0 * PI), b, v).scaled(spec.weight);
    Ok(cylindrical(rad, d, r, theta))
}

/// Superposition of [`gaussian_poisson_exact`] over a mixture.
pub fn mixture_poisson_exact(specs: &[GaussianSpec], r: f64, theta: f64, z: f64) -> Result<CylDerivatives> {
    let mut out = CylDerivatives::default();
    for s in specs {
        out.add(&gaussian_poisson_exact(s, r, theta, z)?);
    }
    Ok(out)
}

/// `(C_p, C_b)` for the self-collision of one isotropic Gaussian:
/// `C_p = -E^2 / (8 pi^2 v^3) + E R / (16 pi^{3/2} v^{5/2} rho)` and
/// `C_b = -E^2 / (2 pi^2 v^3) + E R / (4 pi^{3/2} v^{5/2} rho)`, with
/// `E = e^{-rho^2/4v}`, `R = erf(rho / 2 sqrt v)`, both scaled by `w^2`.
pub fn gaussian_collision_exact(spec: &GaussianSpec, r: f64, theta: f64, z: f64) -> Result<(f64, f64)> {
    let v = spec.iso()?;
    let d = spec.offset(r, theta, z);
    let y = y_of(&d, v);
    let e = (-y).exp();
    // R / rho = E(y) / (2 sqrt v)
    let r_over_rho = erf_ratio_derivs(y)[0] / (2.0 * v.sqrt());
    let w2 = spec.weight * spec.weight;
    let cp = -e * e / (8.0 * PI * PI * v.powi(3)) + e * r_over_rho / (16.0 * PI.powf(1.5) * v.powf(2.5));
    let cb = -e * e / (2.0 * PI * PI * v.powi(3)) + e * r_over_rho / (4.0 * PI.powf(1.5) * v.powf(2.5));
    Ok((w2 * cp, w2 * cb))
}

/// Direct quadrature of `-(1/4 pi) int f(x') / |x - x'| dx'` with the grid's
/// weights `r dr dtheta dz`, at cylindrical targets `(r, theta, z)`. Meant for
/// small grids and targets away from the support; accuracy is about 1e-6.
/// Targets may coincide with grid nodes.
pub fn brute_force_poisson(grid: &CylGrid, f: &[f64], targets: &[(f64, f64, f64)]) -> Result<Vec<f64>> {
    if f.len() != grid.len() {
        return Err(Error::InvalidInput(format!("field has {} samples, grid has {}", f.len(), grid.len())));
    }
    if grid.len() > 64 * 64 * 64 {
        log::warn!("brute-force convolution over {} samples will be slow", grid.len());
    }
    let wr = grid.r_weights();
    let wt = 2.0 * PI / grid.n_theta() as f64;
    let wz = grid.config.h_z();
    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut sources = Vec::new();
    for (iz, &z) in grid.z_nodes.iter().enumerate() {
        for (it, &t) in grid.theta_nodes.iter().enumerate() {
            for (ir, &r) in grid.r_nodes.iter().enumerate() {
                let v = f[grid.index(ir, it, iz)];
                if v != 0.0 {
                    sources.push(([r * t.cos(), r * t.sin(), z], v * r * wr[ir] * wt * wz));
                }
            }
        }
    }
    let spacing = wz.max(grid.config.r_max / grid.n_r() as f64);
    Ok(targets
        .par_iter()
        .map(|&(r, t, z)| {
            let x = [r * t.cos(), r * t.sin(), z];
            let mut s = 0.0;
            let mut near = false;
            for (p, w) in &sources {
                let d = ((x[0] - p[0]).powi(2) + (x[1] - p[1]).powi(2) + (x[2] - p[2]).powi(2)).sqrt();
                if d < 2.0 * spacing && w.abs() > 1e-6 * fmax * spacing.powi(3) {
                    near = true;
                }
                // a target on a sample node skips that node (punctured sum)
                if d > 0.0 {
                    s += w / d;
                }
            }
            if near {
                log::warn!("brute-force target ({r}, {t}, {z}) lies inside the source support; the oracle degrades there");
            }
            -s / (4.0 * PI)
        })
        .collect())
}
