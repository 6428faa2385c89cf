//! Quantum dimensions as exact integer-polynomial residues.
//!
//! The quantum dimension of every module built on `L(k,i)` is
//! `sin(π(i+1)/(k+2)) / sin(π/(k+2)) = S_i(2cos(π/(k+2)))`. Elements are
//! stored as residues of `S_i` modulo
//!
//! ```text
//! G_k = gcd(S_{k+1}, S_k − 1)
//!     = S_m − S_{m−1}   (k odd,  m = (k+1)/2)
//!     = S_m − S_{m−2}   (k even, m = (k+2)/2)
//! ```
//!
//! whose roots are `2cos(nπ/(k+2))` for odd `n`. `S_{k+1}` alone is not
//! enough: the simple current `S_k` is not `1` modulo `S_{k+1}`, but it is
//! modulo `G_k`, and so `S_{k−i} ≡ S_i`. Every root of `G_k` is a root of
//! `S_{k+1}`, so any residue identity still implies the numeric one at
//! `2cos(π/(k+2))`.

use std::ops::{Add, Mul};

use num_bigint::BigInt;

use crate::cheb::{cheb_u_table, ChebPoly};
use crate::error::{Error, Result};
use crate::labels::{enumerate_irreducibles, IrrLabel, Level};
use crate::numeric::{self, Decimal, DEFAULT_DIGITS};

/// The monic integer polynomial `G_k` quantum dimensions are reduced by.
pub fn qdim_modulus(k: Level) -> ChebPoly {
    let k = k.get() as usize;
    let m = k / 2 + 1;
    let s = cheb_u_table(m);
    if k % 2 == 1 {
        &s[m] - &s[m - 1]
    } else {
        &s[m] - &s[m - 2]
    }
}

/// A quantum dimension (or a sum/product of them) at a fixed level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QDimElement {
    residue: ChebPoly,
    level: Level,
}

impl QDimElement {
    pub fn residue(&self) -> &ChebPoly {
        &self.residue
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn is_one(&self) -> bool {
        self.residue == ChebPoly::one()
    }

    /// Value at `2cos(π/(k+2))`, to `digits` places.
    pub fn evaluate(&self, digits: u32) -> Decimal {
        let den = self.level.get() as u64 + 2;
        let at = numeric::two_cos_pi_over(den, digits + numeric::GUARD_DIGITS);
        numeric::eval_poly(self.residue.coeffs(), &at, digits)
    }

    pub fn scale(&self, c: u64) -> QDimElement {
        QDimElement { residue: self.residue.scale(&BigInt::from(c)), level: self.level }
    }
}

impl Add for &QDimElement {
    type Output = QDimElement;
    fn add(self, rhs: &QDimElement) -> QDimElement {
        assert_eq!(self.level, rhs.level, "quantum dimensions at different levels");
        QDimElement { residue: &self.residue + &rhs.residue, level: self.level }
    }
}

impl Mul for &QDimElement {
    type Output = QDimElement;
    fn mul(self, rhs: &QDimElement) -> QDimElement {
        assert_eq!(self.level, rhs.level, "quantum dimensions at different levels");
        let residue = (&self.residue * &rhs.residue).rem_unit(&qdim_modulus(self.level));
        QDimElement { residue, level: self.level }
    }
}

/// Precomputed residues `S_i mod G_k` for one level; the verifier uses this
/// to avoid rebuilding the Chebyshev table per label.
#[derive(Clone, Debug)]
pub struct QDimTable {
    level: Level,
    modulus: ChebPoly,
    by_index: Vec<ChebPoly>,
}

impl QDimTable {
    pub fn new(k: Level) -> Self {
        let modulus = qdim_modulus(k);
        let by_index = cheb_u_table(k.get() as usize)
            .iter()
            .map(|s| s.rem_unit(&modulus))
            .collect();
        QDimTable { level: k, modulus, by_index }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn modulus(&self) -> &ChebPoly {
        &self.modulus
    }

    pub fn get(&self, label: IrrLabel) -> Result<QDimElement> {
        label.check(self.level)?;
        Ok(self.element(label.i() as usize))
    }

    pub(crate) fn element(&self, i: usize) -> QDimElement {
        QDimElement { residue: self.by_index[i].clone(), level: self.level }
    }

    pub fn zero(&self) -> QDimElement {
        QDimElement { residue: ChebPoly::zero(), level: self.level }
    }

    pub fn mul(&self, a: &QDimElement, b: &QDimElement) -> QDimElement {
        let residue = (&a.residue * &b.residue).rem_unit(&self.modulus);
        QDimElement { residue, level: self.level }
    }
}

/// Exact quantum dimension; depends only on `label.i()`.
pub fn qdim_exact(label: IrrLabel, k: Level) -> Result<QDimElement> {
    label.check(k)?;
    let s = cheb_u_table(label.i() as usize + 1);
    let residue = s[label.i() as usize].rem_unit(&qdim_modulus(k));
    Ok(QDimElement { residue, level: k })
}

/// `sin(π(i+1)/(k+2)) / sin(π/(k+2))` rounded to `precision` places.
pub fn qdim_numeric(label: IrrLabel, k: Level, precision: u32) -> Result<Decimal> {
    if precision < 1 {
        return Err(Error::Precision);
    }
    label.check(k)?;
    Ok(numeric::sine_ratio(label.i() as u64 + 1, k.get() as u64 + 2, precision))
}

/// True iff the exact quantum dimension is the residue `1`, which happens
/// exactly for `i = 0` and `i = k`.
pub fn has_unit_qdim(label: IrrLabel, k: Level) -> Result<bool> {
    Ok(qdim_exact(label, k)?.is_one())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalDimension {
    pub exact: QDimElement,
    pub numeric: Decimal,
}

/// `9 Σ_{i=0}^{k} d_i²`, exactly and to [`DEFAULT_DIGITS`] places.
pub fn global_dimension(k: Level) -> GlobalDimension {
    global_dimension_with_digits(k, DEFAULT_DIGITS)
}

pub fn global_dimension_with_digits(k: Level, digits: u32) -> GlobalDimension {
    let table = QDimTable::new(k);
    let mut exact = table.zero();
    for i in 0..=k.get() as usize {
        let d = table.element(i);
        exact = &exact + &table.mul(&d, &d);
    }
    let exact = exact.scale(9);
    let numeric = numeric::scaled_sum_of_squared_ratios(k.get() as u64 + 2, 9, digits);
    GlobalDimension { exact, numeric }
}

/// `Σ qdim²` over every label of the catalog, each evaluated separately.
pub fn label_sum_of_squares(k: Level, digits: u32) -> f64 {
    enumerate_irreducibles(k)
        .into_iter()
        .map(|l| {
            let d = qdim_numeric(l, k, digits).expect("enumerated labels are valid").to_f64();
            d * d
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::cheb_u;
    use crate::labels::{make_label, Sector};
    use num_traits::One;

    fn lvl(k: i64) -> Level {
        Level::new(k).unwrap()
    }

    fn label(s: &str) -> IrrLabel {
        s.parse().unwrap()
    }

    #[test]
    fn modulus_divides_both_generators() {
        for k in 1..=20i64 {
            let g = qdim_modulus(lvl(k));
            let k = k as usize;
            let (_, r1) = cheb_u(k + 1).div_rem_unit(&g).unwrap();
            let (_, r2) = (&cheb_u(k) - &ChebPoly::one()).div_rem_unit(&g).unwrap();
            assert!(r1.is_zero() && r2.is_zero(), "k={k}");
            // number of odd n in 1..=k+1 = number of common roots
            assert_eq!(g.degree(), Some((k + 2) / 2));
            assert!(g.leading().unwrap().is_one());
        }
        assert_eq!(qdim_modulus(lvl(2)), ChebPoly::from_coeffs([-2, 0, 1]));
        assert_eq!(qdim_modulus(lvl(1)), ChebPoly::from_coeffs([-1, 1]));
    }

    #[test]
    fn modulus_vanishes_at_evaluation_point() {
        for k in 1..=12 {
            let g = QDimElement { residue: qdim_modulus(lvl(k)), level: lvl(k) };
            assert!(g.evaluate(25).to_f64().abs() < 1e-20);
        }
    }

    #[test]
    fn examples() {
        for k in 1..=12 {
            let k = lvl(k);
            assert!(qdim_exact(IrrLabel::VACUUM, k).unwrap().is_one());
            let top = make_label(Sector::T1, k.get() as i64, 2, k).unwrap();
            assert!(qdim_exact(top, k).unwrap().is_one());
            let l = make_label(Sector::T2, k.get() as i64, 1, k).unwrap();
            assert!(has_unit_qdim(l, k).unwrap());
        }
        let root2 = qdim_exact(label("u:1:0"), lvl(2)).unwrap();
        assert_eq!(root2.evaluate(10).to_string(), "1.4142135624");
        assert!(!has_unit_qdim(label("u:1:0"), lvl(2)).unwrap());
        assert_eq!(&root2 * &root2, QDimElement { residue: ChebPoly::constant(2), level: lvl(2) });
    }

    #[test]
    fn numeric_examples() {
        assert_eq!(qdim_numeric(label("u:1:0"), lvl(1), 10).unwrap().to_string(), "1.0000000000");
        assert_eq!(qdim_numeric(label("u:1:0"), lvl(2), 10).unwrap().to_string(), "1.4142135624");
        assert_eq!(qdim_numeric(label("u:2:0"), lvl(2), 10).unwrap().to_string(), "1.0000000000");
        assert_eq!(qdim_numeric(label("u:1:0"), lvl(2), 0), Err(Error::Precision));
        assert!(qdim_numeric(label("u:3:0"), lvl(2), 5).is_err());
    }

    #[test]
    fn exact_matches_numeric() {
        for k in 1..=12 {
            let k = lvl(k);
            for l in enumerate_irreducibles(k) {
                let exact = qdim_exact(l, k).unwrap().evaluate(20);
                let num = qdim_numeric(l, k, 20).unwrap();
                assert!(exact.abs_diff_f64(&num) < 1e-18, "{l} at k={k}");
            }
        }
    }

    #[test]
    fn symmetry_and_positivity() {
        for kk in 1..=12i64 {
            let k = lvl(kk);
            for i in 0..=kk {
                let a = qdim_exact(make_label(Sector::U, i, 0, k).unwrap(), k).unwrap();
                let b = qdim_exact(make_label(Sector::U, kk - i, 0, k).unwrap(), k).unwrap();
                assert_eq!(a, b, "k={kk} i={i}");
            }
            for l in enumerate_irreducibles(k) {
                assert!(qdim_numeric(l, k, 15).unwrap().to_f64() >= 1.0 - 1e-15);
                let unit = l.i() == 0 || l.i() == k.get();
                assert_eq!(has_unit_qdim(l, k).unwrap(), unit, "{l} at k={kk}");
            }
        }
    }

    #[test]
    fn global_dimension_values() {
        let g1 = global_dimension(lvl(1));
        assert_eq!(g1.exact.residue(), &ChebPoly::constant(18));
        assert!((g1.numeric.to_f64() - 18.0).abs() < 1e-9);
        let g2 = global_dimension(lvl(2));
        assert_eq!(g2.exact.residue(), &ChebPoly::constant(36));
        assert!((g2.numeric.to_f64() - 36.0).abs() < 1e-9);
        let g3 = global_dimension(lvl(3));
        assert!((g3.numeric.to_f64() - label_sum_of_squares(lvl(3), 20)).abs() < 1e-9);
        assert!((g3.exact.evaluate(20).to_f64() - g3.numeric.to_f64()).abs() < 1e-9);
    }
}
