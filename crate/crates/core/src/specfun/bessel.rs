//! Modified Bessel functions `I_n`, `K_n` of integer order and real argument.
//!
//! `K_0`, `K_1` come from the power series (x <= 2) or Steed's continued
//! fraction (x > 2); higher `K_n` from upward recurrence. `I_n` is obtained
//! from the continued fraction for `I_{N+1}/I_N`, downward ratio recurrence,
//! and normalization by the Wronskian `I_n K_{n+1} + I_{n+1} K_n = 1/x`.
//! Values are stored as `e^{-x} I_n` and `e^{x} K_n` in [`Wide`] form so no
//! order/argument combination overflows.

use super::wide::Wide;
use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const SERIES_LIMIT: f64 = 2.0;
const MAX_CF_ITER: usize = 200_000;

/// Exponentially scaled `I_n`, `K_n` and their first three derivatives at one
/// `(n, x)`: `e^{-x} I_n^{(d)}(x)` and `e^{x} K_n^{(d)}(x)`. Derivatives above
/// the requested order are NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledBesselPair {
    pub n: u32,
    pub x: f64,
    pub i_scaled: f64,
    pub k_scaled: f64,
    pub di_scaled: f64,
    pub dk_scaled: f64,
    pub d2i_scaled: f64,
    pub d2k_scaled: f64,
    pub d3i_scaled: f64,
    pub d3k_scaled: f64,
}

impl ScaledBesselPair {
    /// `x (I_n' K_n - I_n K_n')`, which is exactly 1.
    pub fn wronskian(&self) -> f64 {
        self.x * (self.di_scaled * self.k_scaled - self.i_scaled * self.dk_scaled)
    }
}

/// Scaled `I_n`, `K_n` for every order `0..=max_order` at a single argument.
#[derive(Debug, Clone)]
pub struct BesselOrders {
    x: f64,
    is: Vec<Wide>,
    ks: Vec<Wide>,
}

impl BesselOrders {
    /// Evaluate orders `0..=max_order` (plus the guard orders needed for third
    /// derivatives) at `x > 0`.
    pub fn new(max_order: usize, x: f64) -> Result<BesselOrders> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("modified Bessel argument must be positive, got {x}")));
        }
        let top = max_order + 3;
        let (k0, k1) = k01_scaled(x);
        let mut ks = Vec::with_capacity(top + 2);
        ks.push(Wide::from_f64(k0));
        ks.push(Wide::from_f64(k1));
        for n in 1..=top {
            let next = ks[n - 1] + ks[n] * (2.0 * n as f64 / x);
            ks.push(next);
        }

        // ratio[n] = I_{n+1} / I_n, started at the top by continued fraction
        let mut ratio = vec![0.0; top + 1];
        ratio[top] = i_ratio_cf(top, x)?;
        for n in (1..=top).rev() {
            ratio[n - 1] = 1.0 / (2.0 * n as f64 / x + ratio[n]);
        }
        let is = (0..=top)
            .map(|n| (ks[n + 1] + ks[n] * ratio[n]).scale(x).recip())
            .collect();
        ks.truncate(top + 1);
        Ok(BesselOrders { x, is, ks })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Highest order for which third derivatives are available.
    pub fn max_order(&self) -> usize {
        self.is.len() - 4
    }

    #[inline]
    fn idx(n: i64) -> usize {
        n.unsigned_abs() as usize
    }

    /// `e^{-x} I_n(x)`; negative orders reflect.
    #[inline]
    pub fn i(&self, n: i64) -> Wide {
        self.is[Self::idx(n)]
    }

    /// `e^{x} K_n(x)`; negative orders reflect.
    #[inline]
    pub fn k(&self, n: i64) -> Wide {
        self.ks[Self::idx(n)]
    }

    /// Scaled `d^d/dx^d I_n`, `d <= 3`, as a same-sign binomial sum of
    /// neighbouring orders.
    pub fn di(&self, n: i64, d: u32) -> Wide {
        let n = n.abs();
        match d {
            0 => self.i(n),
            1 => (self.i(n - 1) + self.i(n + 1)).scale(0.5),
            2 => (self.i(n - 2) + self.i(n).scale(2.0) + self.i(n + 2)).scale(0.25),
            3 => (self.i(n - 3) + (self.i(n - 1) + self.i(n + 1)).scale(3.0) + self.i(n + 3)).scale(0.125),
            _ => panic!("derivative order {d} not supported"),
        }
    }

    /// Scaled `d^d/dx^d K_n`, `d <= 3`.
    pub fn dk(&self, n: i64, d: u32) -> Wide {
        let n = n.abs();
        match d {
            0 => self.k(n),
            1 => -(self.k(n - 1) + self.k(n + 1)).scale(0.5),
            2 => (self.k(n - 2) + self.k(n).scale(2.0) + self.k(n + 2)).scale(0.25),
            3 => -(self.k(n - 3) + (self.k(n - 1) + self.k(n + 1)).scale(3.0) + self.k(n + 3)).scale(0.125),
            _ => panic!("derivative order {d} not supported"),
        }
    }
}

/// Scaled modified Bessel functions and derivatives up to `max_deriv` (<= 3).
/// Fails with a domain error when `I_n` or `K_n` leaves the f64 range even
/// after scaling; [`BesselOrders`] covers those arguments.
pub fn bessel_ik_scaled(n: i64, x: f64, max_deriv: u32) -> Result<ScaledBesselPair> {
    if max_deriv > 3 {
        return Err(Error::Domain(format!("derivative order {max_deriv} exceeds 3")));
    }
    let table = BesselOrders::new(n.unsigned_abs() as usize, x)?;
    let fits = |w: Wide| {
        let v = w.to_f64().abs();
        v.is_finite() && v >= f64::MIN_POSITIVE
    };
    if !(fits(table.i(n)) && fits(table.k(n))) {
        return Err(Error::Domain(format!("scaled I_{n}({x}) or K_{n}({x}) is outside the f64 range")));
    }
    let i = |d: u32| if d <= max_deriv { table.di(n, d).to_f64() } else { f64::NAN };
    let k = |d: u32| if d <= max_deriv { table.dk(n, d).to_f64() } else { f64::NAN };
    Ok(ScaledBesselPair {
        n: n.unsigned_abs() as u32,
        x,
        i_scaled: i(0),
        k_scaled: k(0),
        di_scaled: i(1),
        dk_scaled: k(1),
        d2i_scaled: i(2),
        d2k_scaled: k(2),
        d3i_scaled: i(3),
        d3k_scaled: k(3),
    })
}

/// `(e^x K_0(x), e^x K_1(x))`.
fn k01_scaled(x: f64) -> (f64, f64) {
    if x <= SERIES_LIMIT {
        let t = 0.25 * x * x;
        let mut term = 1.0;
        let mut i0 = 1.0;
        let mut harmonic = 0.0;
        let mut k0_sum = 0.0;
        let mut i1_sum = 1.0;
        let mut i1_term = 1.0;
        for k in 1..60 {
            let kf = k as f64;
            term *= t / (kf * kf);
            harmonic += 1.0 / kf;
            i0 += term;
            k0_sum += harmonic * term;
            i1_term *= t / (kf * (kf + 1.0));
            i1_sum += i1_term;
            if term < 1e-18 * i0 {
                break;
            }
        }
        let i1 = 0.5 * x * i1_sum;
        let k0 = -((0.5 * x).ln() + EULER_GAMMA) * i0 + k0_sum;
        let k1 = (1.0 / x - i1 * k0) / i0;
        let e = x.exp();
        (k0 * e, k1 * e)
    } else {
        // Steed's continued fraction (Temme's CF2) at order zero.
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut delh = d;
        let mut h = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        for i in 2..MAX_CF_ITER {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if dels.abs() < 1e-17 * s.abs() {
                break;
            }
        }
        h *= a1;
        let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
        let k1 = k0 * (x + 0.5 - h) / x;
        (k0, k1)
    }
}

/// `I_{n+1}(x) / I_n(x)` by the modified Lentz algorithm.
fn i_ratio_cf(n: usize, x: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..MAX_CF_ITER {
        let b = 2.0 * (n + k) as f64 / x;
        d = b + d;
        if d == 0.0 {
            d = TINY;
        }
        c = b + 1.0 / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            return Ok(f);
        }
    }
    Err(Error::Numerical(format!("I-ratio continued fraction did not converge at n={n}, x={x}")))
}
