//! Integer polynomials and the rescaled Chebyshev family `S_n`.
//!
//! `S_0 = 1`, `S_1 = x`, `S_{n+1} = x S_n − S_{n−1}`, so that
//! `S_n(2cos θ) = sin((n+1)θ) / sin θ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial with integer coefficients, lowest degree first.
/// The leading coefficient is nonzero; the zero polynomial has none.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ChebPoly {
    coeffs: Vec<BigInt>,
}

impl ChebPoly {
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = ChebPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        ChebPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        ChebPoly::from_coeffs([c])
    }

    pub fn one() -> Self {
        ChebPoly::constant(1)
    }

    pub fn x() -> Self {
        ChebPoly::from_coeffs([0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Returns the constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigInt) -> ChebPoly {
        ChebPoly::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    /// Quotient and remainder by a divisor whose leading coefficient is ±1,
    /// so the division stays in the integers. Returns `None` otherwise.
    pub fn div_rem_unit(&self, divisor: &ChebPoly) -> Option<(ChebPoly, ChebPoly)> {
        let lead = divisor.leading()?;
        if !lead.abs().is_one() {
            return None;
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((ChebPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let q = &rem[top] * lead; // lead = ±1 is its own inverse
            let shift = top - dd;
            for (n, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + n] -= &q * c;
            }
            quot[shift] = q;
        }
        Some((ChebPoly::from_coeffs(quot), ChebPoly::from_coeffs(rem)))
    }

    /// Remainder by a divisor with unit leading coefficient.
    ///
    /// Panics if the leading coefficient of `divisor` is not ±1.
    pub fn rem_unit(&self, divisor: &ChebPoly) -> ChebPoly {
        self.div_rem_unit(divisor)
            .expect("divisor must have leading coefficient ±1")
            .1
    }

    /// Horner evaluation in `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
        })
    }
}

impl Add for &ChebPoly {
    type Output = ChebPoly;
    fn add(self, rhs: &ChebPoly) -> ChebPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        ChebPoly::from_coeffs((0..n).map(|d| {
            self.coeffs.get(d).unwrap_or(&zero) + rhs.coeffs.get(d).unwrap_or(&zero)
        }))
    }
}

impl Sub for &ChebPoly {
    type Output = ChebPoly;
    fn sub(self, rhs: &ChebPoly) -> ChebPoly {
        self + &(-rhs)
    }
}

impl Neg for &ChebPoly {
    type Output = ChebPoly;
    fn neg(self) -> ChebPoly {
        ChebPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &ChebPoly {
    type Output = ChebPoly;
    fn mul(self, rhs: &ChebPoly) -> ChebPoly {
        if self.is_zero() || rhs.is_zero() {
            return ChebPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        ChebPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ChebPoly {
            type Output = ChebPoly;
            fn $m(self, rhs: ChebPoly) -> ChebPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for ChebPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{d}")?,
                _ => write!(f, "{mag}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// `S_0, ..., S_n`.
pub fn cheb_u_table(n: usize) -> Vec<ChebPoly> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(ChebPoly::one());
    if n >= 1 {
        table.push(ChebPoly::x());
    }
    let x = ChebPoly::x();
    for m in 2..=n {
        let next = &(&x * &table[m - 1]) - &table[m - 2];
        table.push(next);
    }
    table
}

/// The rescaled Chebyshev polynomial of the second kind `S_n`.
pub fn cheb_u(n: usize) -> ChebPoly {
    cheb_u_table(n).pop().expect("table is never empty")
}
