//! Signed log-domain scalars and compensated accumulation.
//!
//! Products of gamma factors span hundreds of orders of magnitude, so every
//! multiplicative pipeline in this crate carries values as `LogValue`
//! (sign plus natural log of the magnitude). Signed sums of series terms are
//! accumulated by [`SignedLogSum`], which factors out the running maximum log
//! scale and does linear-domain Kahan summation underneath.

use crate::error::{GwError, Result};
use std::fmt;

/// A real number stored as `sign * exp(log_abs)`.
///
/// `sign == 0` represents exact zero; `log_abs` is ignored in that case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    pub sign: i8,
    pub log_abs: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        sign: 0,
        log_abs: f64::NEG_INFINITY,
    };
    pub const ONE: LogValue = LogValue {
        sign: 1,
        log_abs: 0.0,
    };

    /// A positive value given as its natural log.
    pub fn from_ln(ln: f64) -> LogValue {
        LogValue {
            sign: 1,
            log_abs: ln,
        }
    }

    pub fn from_f64(x: f64) -> LogValue {
        if x == 0.0 {
            LogValue::ZERO
        } else {
            LogValue {
                sign: if x > 0.0 { 1 } else { -1 },
                log_abs: x.abs().ln(),
            }
        }
    }

    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_abs.exp(),
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    /// Natural log of the magnitude; errors on zero or negative values.
    pub fn ln(self) -> Result<f64> {
        match self.sign {
            1 => Ok(self.log_abs),
            0 => Err(GwError::Pole("log of zero value".into())),
            _ => Err(GwError::Pole("log of negative value".into())),
        }
    }

    pub fn mul(self, other: LogValue) -> LogValue {
        if self.sign == 0 || other.sign == 0 {
            return LogValue::ZERO;
        }
        LogValue {
            sign: self.sign * other.sign,
            log_abs: self.log_abs + other.log_abs,
        }
    }

    pub fn div(self, other: LogValue) -> Result<LogValue> {
        if other.sign == 0 {
            return Err(GwError::Pole("division by zero LogValue".into()));
        }
        if self.sign == 0 {
            return Ok(LogValue::ZERO);
        }
        Ok(LogValue {
            sign: self.sign * other.sign,
            log_abs: self.log_abs - other.log_abs,
        })
    }

    pub fn recip(self) -> Result<LogValue> {
        LogValue::ONE.div(self)
    }

    /// Raise to a real power. Requires a positive base unless the power is 0.
    pub fn powf(self, exponent: f64) -> Result<LogValue> {
        if exponent == 0.0 {
            return Ok(LogValue::ONE);
        }
        match self.sign {
            1 => Ok(LogValue {
                sign: 1,
                log_abs: self.log_abs * exponent,
            }),
            0 => {
                if exponent > 0.0 {
                    Ok(LogValue::ZERO)
                } else {
                    Err(GwError::Pole("zero raised to negative power".into()))
                }
            }
            _ => Err(GwError::Pole("negative base with real exponent".into())),
        }
    }

    /// Relative difference of two values of the same sign, in linear domain.
    pub fn rel_diff(self, other: LogValue) -> f64 {
        if self.sign == 0 && other.sign == 0 {
            return 0.0;
        }
        if self.sign != other.sign {
            return f64::INFINITY;
        }
        let d = self.log_abs - other.log_abs;
        d.exp_m1().abs()
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "exp({})", self.log_abs),
            _ => write!(f, "-exp({})", self.log_abs),
        }
    }
}

/// Kahan compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    /// Multiply the accumulated state by a constant (used when rescaling).
    fn scale(&mut self, factor: f64) {
        self.sum *= factor;
        self.c *= factor;
    }
}

/// Accumulates signed terms given in log form: sum of `sign * exp(log_abs)`.
///
/// All linear arithmetic happens relative to the running maximum log scale,
/// so terms of wildly different magnitude can be mixed without overflow.
#[derive(Debug, Clone)]
pub struct SignedLogSum {
    scale: f64,
    acc: KahanSum,
}

impl SignedLogSum {
    pub fn new() -> Self {
        SignedLogSum {
            scale: f64::NEG_INFINITY,
            acc: KahanSum::new(),
        }
    }

    pub fn add_log(&mut self, sign: i8, log_abs: f64) {
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            return;
        }
        if log_abs > self.scale {
            if self.scale > f64::NEG_INFINITY {
                self.acc.scale((self.scale - log_abs).exp());
            }
            self.scale = log_abs;
        }
        self.acc.add(f64::from(sign) * (log_abs - self.scale).exp());
    }

    pub fn add(&mut self, v: LogValue) {
        self.add_log(v.sign, v.log_abs);
    }

    pub fn total(&self) -> LogValue {
        if self.scale == f64::NEG_INFINITY {
            return LogValue::ZERO;
        }
        let s = self.acc.value();
        if s == 0.0 {
            return LogValue::ZERO;
        }
        LogValue {
            sign: if s > 0.0 { 1 } else { -1 },
            log_abs: self.scale + s.abs().ln(),
        }
    }
}

impl Default for SignedLogSum {
    fn default() -> Self {
        Self::new()
    }
}

/// Exact half-integer, stored as twice its value.
///
/// Carries the `delta + k/2` offsets of the gamma factors without float error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_twice(twice: i64) -> HalfInt {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> HalfInt {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn add(self, other: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + other.twice,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logvalue_roundtrip_and_mul() {
        let a = LogValue::from_f64(-3.5);
        let b = LogValue::from_f64(2.0);
        assert_eq!(a.mul(b).to_f64(), -7.0);
        assert_eq!(LogValue::from_f64(0.0).mul(b).to_f64(), 0.0);
        assert!((a.div(b).unwrap().to_f64() + 1.75).abs() < 1e-15);
    }

    #[test]
    fn signed_sum_handles_scale_jumps() {
        let mut s = SignedLogSum::new();
        s.add(LogValue::from_f64(1.0));
        s.add_log(1, 700.0); // would overflow a naive exp
        s.add_log(-1, 700.0);
        let t = s.total();
        assert_eq!(t.sign, 1);
        assert!((t.to_f64() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn signed_sum_cancellation() {
        let mut s = SignedLogSum::new();
        for k in 0..10 {
            s.add(LogValue::from_f64(if k % 2 == 0 { 1e8 } else { -1e8 }));
        }
        assert_eq!(s.total().sign, 0);
    }

    #[test]
    fn half_int_display_and_value() {
        assert_eq!(HalfInt::from_twice(5).to_f64(), 2.5);
        assert_eq!(format!("{}", HalfInt::from_twice(5)), "5/2");
        assert_eq!(format!("{}", HalfInt::from_int(3)), "3");
    }
}
