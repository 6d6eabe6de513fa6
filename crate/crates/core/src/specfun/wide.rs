//! Floating-point numbers with an extended binary exponent.
//!
//! Modified Bessel functions of high order at tiny arguments overflow (K_n)
//! or underflow (I_n) an `f64` long before their products or ratios do. A
//! [`Wide`] keeps a normalized `f64` mantissa and a separate `i32` exponent so
//! such values can be formed exactly and only collapsed to `f64` once combined.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `mant * 2^exp`, with `0.5 <= |mant| < 1` or `mant == 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wide {
    mant: f64,
    exp: i32,
}

const EXP_MASK: u64 = 0x7ff << 52;

/// Split a finite, normal, nonzero `x` into `(m, e)` with `x = m * 2^e`.
#[inline]
fn frexp(x: f64) -> (f64, i32) {
    let bits = x.to_bits();
    let biased = ((bits & EXP_MASK) >> 52) as i32;
    if biased == 0 {
        // subnormal: rescale into the normal range first
        let (m, e) = frexp(x * 2f64.powi(64));
        return (m, e - 64);
    }
    let m = f64::from_bits((bits & !EXP_MASK) | (1022u64 << 52));
    (m, biased - 1022)
}

/// `2^e` for `e` in the normal exponent range.
#[inline]
fn exp2i(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

/// `x * 2^e`, saturating to `inf` or flushing to zero outside the `f64` range.
#[inline]
pub(crate) fn ldexp(mut x: f64, mut e: i32) -> f64 {
    while e > 1023 {
        x *= exp2i(1023);
        e -= 1023;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1022 {
        x *= exp2i(-1022);
        e += 1022;
        if x == 0.0 {
            return x;
        }
    }
    x * exp2i(e)
}

impl Wide {
    pub const ZERO: Wide = Wide { mant: 0.0, exp: 0 };
    pub const ONE: Wide = Wide { mant: 0.5, exp: 1 };

    #[inline]
    fn normalized(mant: f64, exp: i32) -> Wide {
        if mant == 0.0 {
            return Wide::ZERO;
        }
        let (m, e) = frexp(mant);
        Wide { mant: m, exp: exp + e }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Wide {
        debug_assert!(x.is_finite());
        Wide::normalized(x, 0)
    }

    /// `e^x` for any finite `x`, without overflow.
    pub fn exp(x: f64) -> Wide {
        const CHUNK: f64 = 700.0;
        let mut acc = Wide::ONE;
        let mut rest = x;
        while rest > CHUNK {
            acc = acc * Wide::from_f64(CHUNK.exp());
            rest -= CHUNK;
        }
        while rest < -CHUNK {
            acc = acc * Wide::from_f64((-CHUNK).exp());
            rest += CHUNK;
        }
        acc * Wide::from_f64(rest.exp())
    }

    /// `mant * 2^exp` for an arbitrary finite mantissa.
    pub fn from_parts(mant: f64, exp: i32) -> Wide {
        Wide::normalized(mant, exp)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        ldexp(self.mant, self.exp)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.mant == 0.0
    }

    #[inline]
    pub fn mantissa(self) -> f64 {
        self.mant
    }

    #[inline]
    pub fn exponent(self) -> i32 {
        self.exp
    }

    #[inline]
    pub fn abs(self) -> Wide {
        Wide { mant: self.mant.abs(), exp: self.exp }
    }

    #[inline]
    pub fn recip(self) -> Wide {
        Wide::normalized(1.0 / self.mant, -self.exp)
    }

    #[inline]
    pub fn scale(self, x: f64) -> Wide {
        Wide::normalized(self.mant * x, self.exp)
    }

    /// Natural logarithm of the magnitude.
    pub fn ln_abs(self) -> f64 {
        self.mant.abs().ln() + self.exp as f64 * std::f64::consts::LN_2
    }
}

impl Mul for Wide {
    type Output = Wide;
    #[inline]
    fn mul(self, rhs: Wide) -> Wide {
        Wide::normalized(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Div for Wide {
    type Output = Wide;
    #[inline]
    fn div(self, rhs: Wide) -> Wide {
        Wide::normalized(self.mant / rhs.mant, self.exp - rhs.exp)
    }
}

impl Mul<f64> for Wide {
    type Output = Wide;
    #[inline]
    fn mul(self, rhs: f64) -> Wide {
        self.scale(rhs)
    }
}

impl Add for Wide {
    type Output = Wide;
    #[inline]
    fn add(self, rhs: Wide) -> Wide {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exp >= rhs.exp { (self, rhs) } else { (rhs, self) };
        let shift = small.exp - big.exp;
        if shift < -60 {
            return big;
        }
        Wide::normalized(big.mant + small.mant * exp2i(shift), big.exp)
    }
}

impl Neg for Wide {
    type Output = Wide;
    #[inline]
    fn neg(self) -> Wide {
        Wide { mant: -self.mant, exp: self.exp }
    }
}

impl Sub for Wide {
    type Output = Wide;
    #[inline]
    fn sub(self, rhs: Wide) -> Wide {
        self + (-rhs)
    }
}

impl PartialOrd for Wide {
    fn partial_cmp(&self, other: &Wide) -> Option<Ordering> {
        (*self - *other).mant.partial_cmp(&0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_ordinary_values() {
        for &x in &[1.0, -3.5, 1e-300, 7e305, 0.1, 5e-320] {
            assert_eq!(Wide::from_f64(x).to_f64(), x);
        }
        assert_eq!(Wide::from_f64(0.0).to_f64(), 0.0);
    }

    #[test]
    fn products_beyond_f64_range() {
        let big = Wide::exp(1000.0);
        let small = Wide::exp(-1000.0);
        assert!(big.to_f64().is_infinite());
        assert_eq!(small.to_f64(), 0.0);
        let one = (big * small).to_f64();
        assert!((one - 1.0).abs() < 1e-12);
        assert!(((big / Wide::exp(999.0)).to_f64() - 1f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn addition_aligns_exponents() {
        let a = Wide::from_f64(1.5);
        let b = Wide::from_f64(2.25e-3);
        assert_eq!((a + b).to_f64(), 1.5 + 2.25e-3);
        assert_eq!((a - a).to_f64(), 0.0);
        assert!(Wide::from_f64(2.0) > Wide::from_f64(1.0));
    }
}
