//! Spectral-integration backend for the second-order radial problem.
//!
//! The unknown is the Chebyshev series of `u_xx` on one global interval
//! (`r = s (x + 1)`, `s = R/2`), plus two integration constants. After
//! multiplying the equation by `r^2`, every term is a product of tridiagonal
//! operators in coefficient space, so the collocation-free (tau) system is
//! banded. The origin condition and the radiation condition at `R` are
//! appended as two dense rows. Elimination runs in linear time.
//!
//! This backend exists for comparison. Its conditioning grows with the
//! polynomial degree, which is the reason the panel Green's sweep is the
//! default.

use num_complex::Complex64;

use super::{check_inputs, RadialSolution};
use crate::discretization::{clenshaw, CylGrid, RadialBackend};
use crate::error::{Error, Result};
use crate::specfun::BesselOrders;

/// Chebyshev series `sum c[j] T_{lo + j}`.
#[derive(Clone, Debug)]
struct Poly {
    lo: usize,
    c: Vec<f64>,
}

impl Poly {
    fn unit(k: usize) -> Poly {
        Poly { lo: k, c: vec![1.0] }
    }

    fn hi(&self) -> usize {
        self.lo + self.c.len() - 1
    }

    fn get(&self, k: usize) -> f64 {
        if k < self.lo || k > self.hi() { 0.0 } else { self.c[k - self.lo] }
    }

    fn from_fn(lo: usize, hi: usize, f: impl Fn(usize) -> f64) -> Poly {
        Poly { lo, c: (lo..=hi).map(f).collect() }
    }

    /// `(x + 1) p`.
    fn mul_xp1(&self) -> Poly {
        let lo = self.lo.saturating_sub(1);
        let hi = self.hi() + 1;
        Poly::from_fn(lo, hi, |k| {
            let mut v = self.get(k);
            // x T_j = (T_{j-1} + T_{j+1}) / 2, x T_0 = T_1
            if k >= 1 {
                v += if k == 1 { self.get(0) } else { 0.5 * self.get(k - 1) };
            }
            v += 0.5 * self.get(k + 1);
            v
        })
    }

    /// An antiderivative; constant terms are dropped.
    fn integ(&self) -> Poly {
        let lo = self.lo.saturating_sub(1).max(1);
        let hi = self.hi() + 1;
        Poly::from_fn(lo, hi, |k| {
            // coefficient of T_k, k >= 1, in int sum a_j T_j
            let a = |j: usize| self.get(j);
            if k == 1 {
                a(0) - 0.5 * a(2)
            } else {
                (a(k - 1) - a(k + 1)) / (2.0 * k as f64)
            }
        })
    }

    fn add_scaled(&self, other: &Poly, w: f64) -> Poly {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        Poly::from_fn(lo, hi, |k| self.get(k) + w * other.get(k))
    }

    fn scaled(&self, w: f64) -> Poly {
        Poly { lo: self.lo, c: self.c.iter().map(|v| v * w).collect() }
    }

    fn at_plus_one(&self) -> f64 {
        self.c.iter().sum()
    }

    fn at_minus_one(&self) -> f64 {
        self.c.iter().enumerate().map(|(j, v)| if (self.lo + j) % 2 == 0 { *v } else { -*v }).sum()
    }
}

/// Lower and upper band extents of the tau rows (column minus row).
const LOWER: usize = 4;
const UPPER: usize = 4;

/// Banded rows over the series coefficients, two dense trailing columns for
/// the integration constants, and two dense border rows. The band block is
/// eliminated with partial pivoting restricted to the band, the constants
/// last, so the free directions of the tau rows are carried by the
/// constants rather than by the smallest coefficients.
struct Bordered {
    n: usize,
    width: usize,
    band: Vec<f64>,
    tail: Vec<[f64; 2]>,
    dense: [Vec<f64>; 2],
}

impl Bordered {
    fn new(n: usize) -> Bordered {
        let width = LOWER + UPPER + LOWER + 1;
        Bordered { n, width, band: vec![0.0; n * width], tail: vec![[0.0; 2]; n], dense: [vec![0.0; n + 2], vec![0.0; n + 2]] }
    }

    fn first_col(i: usize) -> usize {
        i.saturating_sub(LOWER)
    }

    fn slot(&mut self, i: usize, j: usize) -> &mut f64 {
        if j >= self.n {
            return &mut self.tail[i][j - self.n];
        }
        let j0 = Self::first_col(i);
        debug_assert!(j >= j0 && j < j0 + self.width);
        &mut self.band[i * self.width + (j - j0)]
    }

    fn get(&self, i: usize, j: usize) -> f64 {
        if j >= self.n {
            return self.tail[i][j - self.n];
        }
        let j0 = Self::first_col(i);
        if j < j0 || j >= j0 + self.width { 0.0 } else { self.band[i * self.width + (j - j0)] }
    }

    /// Columns of row `k` that may be nonzero after elimination reaches it.
    fn cols(&self, k: usize) -> impl Iterator<Item = usize> {
        let jmax = (Self::first_col(k) + self.width - 1).min(self.n - 1);
        (k + 1..=jmax).chain(self.n..self.n + 2)
    }

    /// Solve with `rhs` for the band rows and `border_rhs` for the dense rows.
    fn solve(mut self, mut rhs: Vec<Complex64>, mut border_rhs: [Complex64; 2]) -> Result<Vec<Complex64>> {
        let n = self.n;
        let scale = self.band.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for k in 0..n {
            let last = (k + LOWER).min(n - 1);
            let mut p = k;
            let mut best = self.get(k, k).abs();
            for i in k + 1..=last {
                let v = self.get(i, k).abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if !(best > 1e-300 * scale.max(1e-300)) {
                return Err(Error::Numerical(format!("spectral integration: zero pivot at column {k} (ill-conditioned)")));
            }
            if p != k {
                // row p starts at or after row k, so row k's window covers both
                for j in std::iter::once(k).chain(self.cols(k)) {
                    let a = self.get(k, j);
                    let b = self.get(p, j);
                    *self.slot(k, j) = b;
                    if j >= n || j < Self::first_col(p) + self.width {
                        *self.slot(p, j) = a;
                    }
                }
                rhs.swap(k, p);
            }
            let piv = self.get(k, k);
            let cols: Vec<usize> = self.cols(k).collect();
            for i in k + 1..=last {
                let l = self.get(i, k) / piv;
                if l == 0.0 {
                    continue;
                }
                *self.slot(i, k) = 0.0;
                for &j in &cols {
                    let v = self.get(k, j);
                    if v != 0.0 {
                        *self.slot(i, j) -= l * v;
                    }
                }
                let r = rhs[k];
                rhs[i] -= r * l;
            }
            for d in 0..2 {
                let l = self.dense[d][k] / piv;
                if l == 0.0 {
                    continue;
                }
                for &j in &cols {
                    self.dense[d][j] -= l * self.get(k, j);
                }
                self.dense[d][k] = 0.0;
                border_rhs[d] -= rhs[k] * l;
            }
        }
        // 2 x 2 system in the trailing columns
        let (a, b, c, d) = (self.dense[0][n], self.dense[0][n + 1], self.dense[1][n], self.dense[1][n + 1]);
        let det = a * d - b * c;
        if !(det.abs() > 1e-300) {
            return Err(Error::Numerical("spectral integration: singular border block".into()));
        }
        let mut x = vec![Complex64::new(0.0, 0.0); n + 2];
        x[n] = (border_rhs[0] * d - border_rhs[1] * b) / det;
        x[n + 1] = (border_rhs[1] * a - border_rhs[0] * c) / det;
        for k in (0..n).rev() {
            let mut s = rhs[k];
            for j in self.cols(k) {
                s -= x[j] * self.get(k, j);
            }
            x[k] = s / self.get(k, k);
        }
        Ok(x)
    }
}

/// Solve the modified Bessel problem by global Chebyshev spectral integration.
/// Requires a single radial panel.
pub fn spectral_integration_solve(n: i64, kappa: f64, rhs: &[Complex64], grid: &CylGrid) -> Result<RadialSolution> {
    check_inputs(kappa, rhs, grid)?;
    if grid.panels.len() != 1 {
        return Err(Error::InvalidConfig(format!(
            "spectral integration uses one global Chebyshev interval, grid has {} panels",
            grid.panels.len()
        )));
    }
    let np = grid.cheb.order;
    let s = 0.5 * grid.config.r_max;
    let ka = kappa.abs();
    let nn = (n * n) as f64;
    let ks2 = ka * ka * s * s;

    // columns: a_0..a_{N-1} (coefficients of u_xx), then c0, c1, with
    // u = S^2 sigma + c1 x + c0
    let col_c0 = np;
    let col_c1 = np + 1;
    let mut sys = Bordered::new(np);

    // L[p] = (x+1)^2 p'' + (x+1) p' - (n^2 + k^2 s^2 (x+1)^2) p, for p'' given
    let apply = |sigma: &Poly, du: &Poly, u: &Poly| -> Poly {
        let xp1_u = u.mul_xp1().mul_xp1();
        sigma
            .mul_xp1()
            .mul_xp1()
            .add_scaled(&du.mul_xp1(), 1.0)
            .add_scaled(u, -nn)
            .add_scaled(&xp1_u, -ks2)
    };
    let zero = Poly { lo: 0, c: vec![0.0] };
    let mut origin_row = vec![0.0; np + 2];
    let mut outer_row = vec![0.0; np + 2];
    let t = BesselOrders::new(n.unsigned_abs() as usize, ka * grid.config.r_max)?;
    let rho = (t.dk(n, 0) / t.dk(n, 1)).to_f64() / ka;

    let mut place = |col: usize, sigma: &Poly, du: &Poly, u: &Poly, sys: &mut Bordered| {
        let res = apply(sigma, du, u);
        for row in res.lo..=res.hi().min(np - 1) {
            let v = res.get(row);
            if v != 0.0 {
                *sys.slot(row, col) += v;
            }
        }
        // origin: u_x(-1) = 0 for n = 0, u(-1) = 0 otherwise
        origin_row[col] = if n == 0 { du.at_minus_one() } else { u.at_minus_one() };
        // radiation: u(R) - rho u_x(1) / s = 0
        outer_row[col] = u.at_plus_one() - rho / s * du.at_plus_one();
    };
    for k in 0..np {
        let sigma = Poly::unit(k);
        let du = sigma.integ();
        let u = du.integ();
        place(k, &sigma, &du, &u, &mut sys);
    }
    place(col_c0, &zero, &zero, &Poly::unit(0), &mut sys);
    place(col_c1, &zero, &Poly::unit(0), &Poly::unit(1), &mut sys);
    sys.dense = [origin_row, outer_row];

    // right side: coefficients of s^2 (x+1)^2 f, truncated
    let mut frhs = vec![Complex64::new(0.0, 0.0); np];
    for part in 0..2 {
        let vals: Vec<f64> = rhs.iter().map(|c| if part == 0 { c.re } else { c.im }).collect();
        let fc = Poly { lo: 0, c: grid.cheb.coefficients(&vals) }.mul_xp1().mul_xp1().scaled(s * s);
        for (row, slot) in frhs.iter_mut().enumerate() {
            let v = fc.get(row);
            if part == 0 { slot.re = v } else { slot.im = v }
        }
    }
    let sol = sys.solve(frhs, [Complex64::new(0.0, 0.0); 2])?;

    let sigma = Poly { lo: 0, c: sol[..np].iter().map(|c| c.re).collect() };
    let sigma_im = Poly { lo: 0, c: sol[..np].iter().map(|c| c.im).collect() };
    let (c0, c1) = (sol[col_c0], sol[col_c1]);
    let eval = |p: &Poly, x: f64| {
        let mut full = vec![0.0; p.hi() + 1];
        full[p.lo..].copy_from_slice(&p.c);
        clenshaw(&full, x)
    };
    let series = |p: &Poly| {
        let du = p.integ();
        let u = du.integ();
        (p.clone(), du, u)
    };
    let (sr, dr, ur) = series(&sigma);
    let (si, di, ui) = series(&sigma_im);
    let nr = grid.n_r();
    let mut u = Vec::with_capacity(nr);
    let mut u_r = Vec::with_capacity(nr);
    let mut u_rr = Vec::with_capacity(nr);
    for &x in &grid.cheb.nodes {
        let uu = Complex64::new(eval(&ur, x), eval(&ui, x)) + c1 * x + c0;
        let du = Complex64::new(eval(&dr, x), eval(&di, x)) + c1;
        let d2 = Complex64::new(eval(&sr, x), eval(&si, x));
        u.push(uu);
        u_r.push(du / s);
        u_rr.push(d2 / (s * s));
    }
    for v in u.iter().chain(&u_r).chain(&u_rr) {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::Numerical(format!("spectral integration produced non-finite values at n={n}, kappa={kappa}")));
        }
    }
    // the series is a polynomial of degree P + 1, so evaluate it at R directly
    let boundary = (
        Complex64::new(eval(&ur, 1.0), eval(&ui, 1.0)) + c1 + c0,
        (Complex64::new(eval(&dr, 1.0), eval(&di, 1.0)) + c1) / s,
    );
    Ok(RadialSolution {
        n,
        kappa,
        u,
        u_r,
        u_rr,
        u_rrr: None,
        backend: RadialBackend::SpectralIntegration,
        r_max: grid.config.r_max,
        boundary,
    })
}
