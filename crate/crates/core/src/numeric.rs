//! Fixed-point decimal evaluation of π, sine and sine ratios.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Guard digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 12;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 30;

/// A decimal number `mantissa / 10^digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    mantissa: BigInt,
    digits: u32,
}

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), n as usize)
}

impl Decimal {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// Rounds half away from zero to `digits` fractional digits.
    pub fn round_to(&self, digits: u32) -> Decimal {
        if digits >= self.digits {
            let mantissa = &self.mantissa * pow10(digits - self.digits);
            return Decimal { mantissa, digits };
        }
        let unit = pow10(self.digits - digits);
        let half = &unit / 2;
        let mag: BigInt = (self.mantissa.abs() + half) / unit;
        let mantissa = if self.mantissa.is_negative() { -mag } else { mag };
        Decimal { mantissa, digits }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// `|self − other|` as an `f64`, computed exactly before conversion.
    pub fn abs_diff_f64(&self, other: &Decimal) -> f64 {
        let d = self.digits.max(other.digits);
        let a = self.round_to(d).mantissa;
        let b = other.round_to(d).mantissa;
        Decimal { mantissa: (a - b).abs(), digits: d }.to_f64()
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = pow10(self.digits);
        let (int, frac) = self.mantissa.abs().div_rem(&unit);
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        if self.digits == 0 {
            write!(f, "{sign}{int}")
        } else {
            write!(f, "{sign}{int}.{:0>width$}", frac.to_string(), width = self.digits as usize)
        }
    }
}

/// Fixed-point arithmetic context at `digits` fractional digits.
struct Fixed {
    one: BigInt,
}

impl Fixed {
    fn new(digits: u32) -> Self {
        Fixed { one: pow10(digits) }
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) / &self.one
    }

    fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * &self.one) / b
    }

    /// atan(1/n) by its Taylor series.
    fn atan_inv(&self, n: i64) -> BigInt {
        let n2 = BigInt::from(n * n);
        let mut power = &self.one / n;
        let mut sum = power.clone();
        let mut k = 1i64;
        loop {
            power = &power / &n2;
            let term = &power / (2 * k + 1);
            if term.is_zero() {
                break;
            }
            if k % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
            k += 1;
        }
        sum
    }

    /// Machin: π = 16 atan(1/5) − 4 atan(1/239).
    fn pi(&self) -> BigInt {
        self.atan_inv(5) * 16 - self.atan_inv(239) * 4
    }

    /// sin(x) for `0 <= x <= π`, reduced to `[0, π/2]` first.
    fn sin(&self, x: &BigInt, pi: &BigInt) -> BigInt {
        let half_pi = pi / 2;
        let x = if *x > half_pi { pi - x } else { x.clone() };
        let x2 = self.mul(&x, &x);
        let mut term = x.clone();
        let mut sum = x;
        let mut n = 1i64;
        loop {
            term = self.mul(&term, &x2) / ((2 * n) * (2 * n + 1));
            if term.is_zero() {
                break;
            }
            if n % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            n += 1;
        }
        sum
    }
}

/// `sin(π·num/den) / sin(π/den)` to `digits` decimal places, for
/// `1 <= num <= den − 1`. The result is rounded once at the end.
pub fn sine_ratio(num: u64, den: u64, digits: u32) -> Decimal {
    let working = digits + GUARD_DIGITS;
    let ctx = Fixed::new(working);
    let pi = ctx.pi();
    let top = ctx.sin(&(&pi * num / den), &pi);
    let bottom = ctx.sin(&(&pi / den), &pi);
    Decimal { mantissa: ctx.div(&top, &bottom), digits: working }.round_to(digits)
}

/// `Σ_{n=1}^{den−1} (sin(πn/den) / sin(π/den))²`, scaled by `factor`.
pub fn scaled_sum_of_squared_ratios(den: u64, factor: u64, digits: u32) -> Decimal {
    let working = digits + GUARD_DIGITS;
    let ctx = Fixed::new(working);
    let pi = ctx.pi();
    let bottom = ctx.sin(&(&pi / den), &pi);
    let mut sum = BigInt::zero();
    for n in 1..den {
        let r = ctx.div(&ctx.sin(&(&pi * n / den), &pi), &bottom);
        sum += ctx.mul(&r, &r);
    }
    Decimal { mantissa: sum * factor, digits: working }.round_to(digits)
}

/// `2cos(π/den)` at `digits` places, computed as `2 sin(π/2 − π/den)`.
pub fn two_cos_pi_over(den: u64, digits: u32) -> Decimal {
    let working = digits + GUARD_DIGITS;
    let ctx = Fixed::new(working);
    let pi = ctx.pi();
    let arg = &pi / 2 - &pi / den;
    Decimal { mantissa: ctx.sin(&arg, &pi) * 2, digits: working }.round_to(digits)
}

/// Evaluates an integer polynomial (lowest degree first) at a decimal
/// point, keeping `digits` places.
pub fn eval_poly(coeffs: &[BigInt], at: &Decimal, digits: u32) -> Decimal {
    let working = digits + GUARD_DIGITS;
    let ctx = Fixed::new(working);
    let x = at.round_to(working).mantissa;
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = ctx.mul(&acc, &x) + c * &ctx.one;
    }
    Decimal { mantissa: acc, digits: working }.round_to(digits)
}
