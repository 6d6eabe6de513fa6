//! Hybrid trapezoidal rule on the `kappa` axis for integrands with a
//! `log|kappa|` singularity at the origin.
//!
//! The trapezoidal nodes `kappa_k = k h` with `|k| < m` are dropped and replaced
//! by `3m` nodes on each side of the origin whose weights make the rule exact
//! for `t^j log t`, `j < m`, and `t^j`, `j < 2m`, in the local variable
//! `t = kappa/h`. The
//! required moments are generalized Euler-Maclaurin constants, values of the
//! Hurwitz zeta function and its derivative at non-positive integers.

use crate::error::{Error, Result};
use crate::dd::{self, Dd};

/// `zeta(-j) = -B_{j+1}/(j+1)` for `j = 0..32`, as exact fractions.
const ZETA_NEG: [(f64, f64); 32] = [
    (-1.0, 2.0),
    (-1.0, 12.0),
    (0.0, 1.0),
    (1.0, 120.0),
    (0.0, 1.0),
    (-1.0, 252.0),
    (0.0, 1.0),
    (1.0, 240.0),
    (0.0, 1.0),
    (-1.0, 132.0),
    (0.0, 1.0),
    (691.0, 32760.0),
    (0.0, 1.0),
    (-1.0, 12.0),
    (0.0, 1.0),
    (3617.0, 8160.0),
    (0.0, 1.0),
    (-43867.0, 14364.0),
    (0.0, 1.0),
    (174611.0, 6600.0),
    (0.0, 1.0),
    (-77683.0, 276.0),
    (0.0, 1.0),
    (236364091.0, 65520.0),
    (0.0, 1.0),
    (-657931.0, 12.0),
    (0.0, 1.0),
    (3392780147.0, 3480.0),
    (0.0, 1.0),
    (-1723168255201.0, 85932.0),
    (0.0, 1.0),
    (7709321041217.0, 16320.0),
];

/// `zeta'(-j)` for `j = 0..=16` as double-double `(hi, lo)` pairs.
const ZETA_PRIME_NEG: [(f64, f64); 17] = [
    (-0.918_938_533_204_672_8, 3.878_294_158_067_241_4e-17),
    (-0.165_421_143_700_450_94, 1.074_783_501_030_576_3e-17),
    (-0.030_448_457_058_393_27, 2.938_633_192_679_347_6e-19),
    (0.005_378_576_357_774_301, 1.438_697_840_113_279_4e-19),
    (0.007_983_811_450_268_625, -5.678_951_988_372_493e-19),
    (-0.000_572_985_980_198_635_2, -2.485_815_627_472_204_6e-20),
    (-0.005_899_759_143_515_937, -3.893_770_034_342_655_4e-19),
    (-0.000_728_642_680_159_240_6, -4.300_347_784_325_127_4e-20),
    (0.008_316_161_985_602_248, -7.594_516_943_392_315e-19),
    (0.003_130_145_319_788_572_8, -1.355_106_259_682_187_3e-20),
    (-0.018_929_926_338_140_373, -1.191_236_589_103_232_6e-18),
    (-0.012_752_984_479_966_657, 7.781_137_863_659_284e-19),
    (0.063_270_583_341_463, -1.407_664_548_102_184_8e-18),
    (0.063_749_873_744_576_88, -4.540_390_682_310_638e-18),
    (-0.291_657_724_743_873_5, 5.098_022_558_725_921e-18),
    (-0.400_319_302_807_725_6, 2.761_046_299_161_023_5e-18),
    (1.773_025_660_899_096_4, -1.553_445_130_280_318_7e-17),
];

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 16;

/// Gauss-Legendre nodes (ascending) and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp;
        loop {
            let (mut p1, mut p2) = (1.0, 0.0);
            for j in 1..=n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                p1 = ((2.0 * jf - 1.0) * z * p2 - (jf - 1.0) * p3) / jf;
            }
            dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() <= 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn zeta_neg(j: usize) -> Dd {
    let (num, den) = ZETA_NEG[j];
    Dd::from_f64(num) / Dd::from_f64(den)
}

fn zeta_prime_neg(j: usize) -> Dd {
    let (hi, lo) = ZETA_PRIME_NEG[j];
    Dd::new(hi, lo)
}

/// `-zeta(-j, m) = sum_{k=1}^{m-1} k^j - zeta(-j)`: the regularized sum
/// of `t^j` over the trapezoidal nodes removed near the endpoint.
fn power_moment(j: usize, m: usize) -> Dd {
    let mut s = -zeta_neg(j);
    for k in 1..m {
        s = s + Dd::from_f64(k as f64).powi(j as u32);
    }
    s
}

/// `zeta'(-j, m) = zeta'(-j) + sum_{k=1}^{m-1} k^j ln k`.
fn log_moment(j: usize, m: usize) -> Dd {
    let mut s = zeta_prime_neg(j);
    for k in 2..m {
        let kd = Dd::from_f64(k as f64);
        s = s + kd.powi(j as u32) * kd.ln();
    }
    s
}

fn solve_moments(a: Vec<Dd>, b: Vec<Dd>) -> Result<Vec<f64>> {
    let x = dd::solve(a, b).ok_or_else(|| Error::Numerical("singular moment system".into()))?;
    Ok(x.iter().map(|v| v.to_f64()).collect())
}

/// Nodes `t` in `(0, m)` (units of `h`) and weights for the one-sided
/// correction at a `log` singularity: `3m` quadratically graded nodes, exact
/// for `t^j log t` with `j < m` and for `t^j` with `j < 2m`. The extra smooth
/// exactness keeps the rule accurate for integrands oscillating like
/// `e^{i kappa z}` across the correction zone.
fn log_correction(m: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = 3 * m;
    let (u, _) = gauss_legendre(n);
    let mf = m as f64;
    // moments in tau = t / m
    let tau: Vec<f64> = u.iter().map(|x| (0.5 * (x + 1.0)).powi(2)).collect();
    let mut a = vec![Dd::ZERO; n * n];
    let mut b = vec![Dd::ZERO; n];
    let md = Dd::from_f64(mf);
    let lnm = md.ln();
    let logs: Vec<Dd> = tau.iter().map(|&t| Dd::from_f64(t).ln()).collect();
    for j in 0..2 * m {
        let scale = md.powi(j as u32);
        let p = power_moment(j, m);
        b[j] = p / scale;
        for (i, &ti) in tau.iter().enumerate() {
            a[j * n + i] = Dd::from_f64(ti).powi(j as u32);
        }
        if j < m {
            let row = 2 * m + j;
            b[row] = (log_moment(j, m) - lnm * p) / scale;
            for i in 0..n {
                a[row * n + i] = a[j * n + i] * logs[i];
            }
        }
    }
    let w = solve_moments(a, b)?;
    Ok((tau.iter().map(|t| t * mf).collect(), w))
}

/// Nodes `t` in `(0, m)` and weights for the smooth end correction of a
/// trapezoidal rule whose first `m` nodes `0..m-1` are dropped.
fn endpoint_correction(m: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let (u, _) = gauss_legendre(m);
    let mf = m as f64;
    let tau: Vec<f64> = u.iter().map(|x| 0.5 * (x + 1.0)).collect();
    let mut a = vec![Dd::ZERO; m * m];
    let mut b = vec![Dd::ZERO; m];
    let md = Dd::from_f64(mf);
    for j in 0..m {
        b[j] = power_moment(j, m) / md.powi(j as u32);
        for (i, &ti) in tau.iter().enumerate() {
            a[j * m + i] = Dd::from_f64(ti).powi(j as u32);
        }
    }
    let w = solve_moments(a, b)?;
    Ok((tau.iter().map(|t| t * mf).collect(), w))
}

/// The `kappa` quadrature rule: trapezoidal nodes `k h`,
/// `-N'/2 <= k < N'/2`, `|k| >= m`, plus mirrored correction nodes near 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularRule {
    /// Spacing `pi / A'`.
    pub h: f64,
    pub order: usize,
    /// Oversampled sample count `N_z'`.
    pub n_padded: usize,
    /// Correction nodes in increasing order, symmetric about 0.
    pub correction_nodes: Vec<f64>,
    /// Weights matching `correction_nodes` (absolute, include `h`).
    pub correction_weights: Vec<f64>,
}

/// Build the rule for `N_z'` samples on `[-A', A']` with correction order `m`.
pub fn build_singular_rule(n_z_padded: usize, a_padded: f64, m: usize) -> Result<SingularRule> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&m) {
        return Err(Error::InvalidConfig(format!("quadrature order {m} outside {MIN_ORDER}..={MAX_ORDER}")));
    }
    if n_z_padded <= 2 * m {
        return Err(Error::InvalidConfig(format!("N_z' = {n_z_padded} must exceed 2m = {}", 2 * m)));
    }
    if !(a_padded > 0.0) {
        return Err(Error::InvalidConfig("A' must be positive".into()));
    }
    let h = std::f64::consts::PI / a_padded;
    let (t, w) = log_correction(m)?;
    let mut nodes = Vec::with_capacity(2 * t.len());
    let mut weights = Vec::with_capacity(2 * t.len());
    for (ti, wi) in t.iter().zip(&w).rev() {
        nodes.push(-ti * h);
        weights.push(wi * h);
    }
    for (ti, wi) in t.iter().zip(&w) {
        nodes.push(ti * h);
        weights.push(wi * h);
    }
    Ok(SingularRule { h, order: m, n_padded: n_z_padded, correction_nodes: nodes, correction_weights: weights })
}

impl SingularRule {
    /// Integer indices `k` of the retained trapezoidal nodes, ascending.
    pub fn regular_indices(&self) -> Vec<i64> {
        let half = (self.n_padded / 2) as i64;
        let m = self.order as i64;
        (-half..half).filter(|k| k.abs() >= m).collect()
    }

    pub fn regular_nodes(&self) -> Vec<f64> {
        self.regular_indices().iter().map(|&k| k as f64 * self.h).collect()
    }

    /// Distinct `|kappa|` values at which radial problems must be solved:
    /// regular `k h` for `m <= k <= N'/2`, then the positive correction nodes.
    pub fn abs_nodes(&self) -> Vec<f64> {
        let half = self.n_padded / 2;
        let mut out: Vec<f64> = (self.order..=half).map(|k| k as f64 * self.h).collect();
        out.extend(self.correction_nodes.iter().filter(|&&x| x > 0.0));
        out
    }

    /// Nodes in spectral-field column order: regular nodes by ascending `k`,
    /// then the correction nodes.
    pub fn spectral_nodes(&self) -> Vec<f64> {
        let mut v = self.regular_nodes();
        v.extend_from_slice(&self.correction_nodes);
        v
    }

    /// For each spectral column, the index into [`SingularRule::abs_nodes`]
    /// of its `|kappa|`.
    pub fn abs_index_of_columns(&self) -> Vec<usize> {
        let m = self.order as i64;
        let n_reg_abs = self.n_padded / 2 - self.order + 1;
        let nc = self.correction_nodes.len();
        let half_c = nc / 2;
        let mut out: Vec<usize> = self.regular_indices().iter().map(|&k| (k.abs() - m) as usize).collect();
        out.extend((0..nc).map(|i| n_reg_abs + if i < half_c { half_c - 1 - i } else { i - half_c }));
        out
    }

    /// Approximate `int f(kappa) d kappa` over the real line (the integrand is
    /// assumed negligible beyond `|kappa| = N' h / 2`).
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let half = (self.n_padded / 2) as i64;
        let mut s = 0.0;
        for k in self.regular_indices() {
            let w = if k == -half { 0.5 } else { 1.0 };
            s += w * f(k as f64 * self.h);
        }
        s += 0.5 * f(half as f64 * self.h);
        s *= self.h;
        for (x, w) in self.correction_nodes.iter().zip(&self.correction_weights) {
            s += w * f(*x);
        }
        s
    }
}

/// All `kappa` nodes of the rule, sorted and duplicate-free.
pub fn rule_nodes(rule: &SingularRule) -> Vec<f64> {
    let mut all = rule.regular_nodes();
    all.extend_from_slice(&rule.correction_nodes);
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    all.dedup();
    all
}

/// `int_a^b f` where `f = s1 log|x| + s2` with smooth `s1`, `s2`, on an
/// equispaced grid of `n` steps that contains the origin as a grid point
/// (`a < 0 < b` with `a / h` integral). Both ends use order-`m` smooth
/// corrections, the origin the log correction. `a >= 0` is also accepted,
/// with a log singularity at `a = 0` or none if `a > 0`.
pub fn integrate_interval<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize, m: usize) -> Result<f64> {
    if !(b > a) || n == 0 {
        return Err(Error::InvalidInput("empty interval".into()));
    }
    let h = (b - a) / n as f64;
    let k0 = -a / h;
    let origin = if a <= 0.0 {
        let k = k0.round();
        if (k - k0).abs() > 1e-9 {
            return Err(Error::InvalidInput("origin is not a grid point".into()));
        }
        Some(k as usize)
    } else {
        None
    };
    let (te, we) = endpoint_correction(m)?;
    let (tl, wl) = log_correction(m)?;
    let mut excluded = vec![false; n + 1];
    for k in 0..m.min(n + 1) {
        excluded[k] = true;
        excluded[n - k] = true;
    }
    if let Some(o) = origin {
        for k in 0..=n {
            if (k as i64 - o as i64).unsigned_abs() < m as u64 {
                excluded[k] = true;
            }
        }
    }
    let mut s = 0.0;
    for k in 0..=n {
        if !excluded[k] {
            s += f(a + k as f64 * h);
        }
    }
    let mut left_end = true;
    let mut right_end = true;
    if let Some(o) = origin {
        if o > 0 {
            s += tl.iter().zip(&wl).map(|(t, w)| w * f(-t * h)).sum::<f64>();
        } else {
            left_end = false;
        }
        if o < n {
            s += tl.iter().zip(&wl).map(|(t, w)| w * f(t * h)).sum::<f64>();
        } else {
            right_end = false;
        }
    }
    if left_end {
        s += te.iter().zip(&we).map(|(t, w)| w * f(a + t * h)).sum::<f64>();
    }
    if right_end {
        s += te.iter().zip(&we).map(|(t, w)| w * f(b - t * h)).sum::<f64>();
    }
    Ok(s * h)
}
