//! A tiny extended-exponent float: a double-double mantissa (an unevaluated
//! `hi + lo` pair of `f64`, ~106 significand bits) paired with an `i64`
//! power-of-two exponent. Graeffe iterates square coefficient magnitudes at
//! every step, which overflows `f64` after a handful of rounds; the wide
//! exponent absorbs the scale. The wide mantissa matters too: relative error
//! roughly doubles per squaring step, and with plain `f64` precision the
//! iteration locks onto an inexact fixed pattern after ~14 float steps,
//! stalling the Mahler estimate near 5e-8 for polynomials with unit-circle
//! roots. 106 bits keep the stall beyond the 48 steps used.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive};

/// `s + err = a + b` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `s + err = a + b` exactly, requiring `|a| >= |b|` (or a = 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// `p + err = a * b` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Value is `(hi + lo) * 2^exp2`, with `|hi|` in `[1, 2)` or zero and
/// `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XFloat {
    hi: f64,
    lo: f64,
    exp2: i64,
}

/// Exponent gap beyond which the smaller addend is below the ~106-bit
/// mantissa resolution and is dropped.
const SWALLOW_BITS: i64 = 110;

impl XFloat {
    pub const ZERO: XFloat = XFloat { hi: 0.0, lo: 0.0, exp2: 0 };

    fn normalized(hi: f64, lo: f64, exp2: i64) -> XFloat {
        let (hi, lo) = quick_two_sum(hi, lo);
        if hi == 0.0 {
            return XFloat::ZERO;
        }
        let shift = hi.abs().log2().floor() as i64;
        let scale = exp2f(-shift);
        XFloat { hi: hi * scale, lo: lo * scale, exp2: exp2 + shift }
    }

    #[cfg(test)]
    pub fn from_f64(x: f64) -> XFloat {
        XFloat::normalized(x, 0.0, 0)
    }

    pub fn from_bigint(x: &BigInt) -> XFloat {
        let bits = x.bits() as i64;
        if bits == 0 {
            return XFloat::ZERO;
        }
        // keep the top 104 bits across the two limbs, remember the rest
        let drop = (bits - 104).max(0);
        let top = x >> drop;
        let hi = top.to_f64().unwrap_or(0.0);
        let lo = (&top - BigInt::from_f64(hi).expect("finite"))
            .to_f64()
            .unwrap_or(0.0);
        XFloat::normalized(hi, lo, drop)
    }

    pub fn is_zero(&self) -> bool {
        self.hi == 0.0
    }

    pub fn mul(&self, other: &XFloat) -> XFloat {
        if self.is_zero() || other.is_zero() {
            return XFloat::ZERO;
        }
        let (p, mut e) = two_prod(self.hi, other.hi);
        e += self.hi * other.lo + self.lo * other.hi;
        XFloat::normalized(p, e, self.exp2 + other.exp2)
    }

    pub fn add(&self, other: &XFloat) -> XFloat {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.exp2 >= other.exp2 { (self, other) } else { (other, self) };
        let diff = hi.exp2 - lo.exp2;
        if diff > SWALLOW_BITS {
            return *hi;
        }
        let scale = exp2f(-diff);
        let (s, mut e) = two_sum(hi.hi, lo.hi * scale);
        e += hi.lo + lo.lo * scale;
        XFloat::normalized(s, e, hi.exp2)
    }

    pub fn neg(&self) -> XFloat {
        XFloat { hi: -self.hi, lo: -self.lo, exp2: self.exp2 }
    }

    /// log2 of the absolute value; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            // lo is a relative 2^-53 correction: first order in the log
            self.exp2 as f64
                + self.hi.abs().log2()
                + self.lo / (self.hi * std::f64::consts::LN_2)
        }
    }
}

fn exp2f(e: i64) -> f64 {
    (e as f64).exp2()
}
