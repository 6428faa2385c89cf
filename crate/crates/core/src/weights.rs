//! Conformal weights (lowest `L(0)`-eigenvalues) of the irreducible modules.
//!
//! Level 1 is read from its own table; higher levels use the base twisted
//! weight plus a per-`j` offset, with the special rows for `i = 0`
//! (sector T1), `i = k` (sector T2) and `i ∈ {0, 1}` (sector U).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labels::{enumerate_irreducibles, IrrLabel, Level, Sector};
use crate::rational::Rational;

/// A label with its conformal weight and a description of the lowest
/// weight vector generating it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedLabel {
    pub label: IrrLabel,
    pub weight: Rational,
    pub generator_desc: String,
}

/// Untwisted lowest weight `i(i+2) / (4(k+2))`.
fn affine_weight(k: i64, i: i64) -> Rational {
    Rational::new(i * (i + 2), 4 * (k + 2))
}

/// `a_{k,i}^{(r)} = i(i+2)/(4(k+2)) + (r²k − 6ir)/36`, the lowest weight
/// of the `σ^r`-twisted module built on `L(k,i)`.
pub fn base_twist_weight(k: Level, i: i64, r: i64) -> Result<Rational> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    if i > k.as_i64() {
        return Err(Error::IndexAboveLevel { i, k: k.get() });
    }
    if !(0..=2).contains(&r) {
        return Err(Error::TwistOutOfRange(r));
    }
    let k = k.as_i64();
    Ok(affine_weight(k, i) + Rational::new(r * r * k - 6 * i * r, 36))
}

const LEVEL_ONE: [[[(i64, i64); 3]; 2]; 3] = [
    [[(0, 1), (1, 1), (1, 1)], [(1, 4), (1, 4), (9, 4)]],
    [[(1, 36), (49, 36), (25, 36)], [(1, 9), (4, 9), (16, 9)]],
    [[(1, 9), (4, 9), (16, 9)], [(1, 36), (49, 36), (25, 36)]],
];

// j-offsets in 36ths
const GENERIC_OFFSETS: [i64; 3] = [0, 12, 24];
const EDGE_OFFSETS: [i64; 3] = [0, 48, 24];

pub fn conformal_weight(label: IrrLabel, k: Level) -> Result<Rational> {
    label.check(k)?;
    let (i, j) = (label.i() as i64, label.j() as usize);
    if k.get() == 1 {
        let (n, d) = LEVEL_ONE[label.sector().grade() as usize][i as usize][j];
        return Ok(Rational::new(n, d));
    }
    let kk = k.as_i64();
    let w = match label.sector() {
        Sector::U => match i {
            0 => Rational::from_integer([0, 1, 1][j]),
            1 if j == 2 => Rational::new(4 * kk + 11, 4 * (kk + 2)),
            _ => affine_weight(kk, i),
        },
        Sector::T1 => {
            let offsets = if i == 0 { EDGE_OFFSETS } else { GENERIC_OFFSETS };
            base_twist_weight(k, i, 1)? + Rational::new(offsets[j], 36)
        }
        Sector::T2 => {
            let offsets = if i == kk { EDGE_OFFSETS } else { GENERIC_OFFSETS };
            base_twist_weight(k, i, 2)? + Rational::new(offsets[j], 36)
        }
    };
    Ok(w)
}

/// Lowest weight vector generating the module, as a display string.
/// `1` is the vacuum vector and `v^{i,m}` the top-level basis of `L(k,i)`.
pub fn generator_desc(label: IrrLabel, k: Level) -> String {
    let (i, j, level_one) = (label.i(), label.j(), k.get() == 1);
    let top = |m: u32| {
        if i == 0 {
            "1".to_string()
        } else {
            format!("v^{{{i},{m}}}")
        }
    };
    match (label.sector(), j) {
        (Sector::U, 0) => top(i),
        (Sector::U, 1) if i == 0 => "e(-1)1".into(),
        (Sector::U, 1) => top(i - 1),
        (Sector::U, _) if i == 0 => "f(-1)1".into(),
        (Sector::U, _) if i == 1 && level_one => "f(-2)v^{1,1}".into(),
        (Sector::U, _) if i == 1 => "f(-1)v^{1,1}".into(),
        (Sector::U, _) => top(i - 2),

        (Sector::T1, 0) => top(i),
        (Sector::T1, 1) if i == 0 => "e(-1)1".into(),
        (Sector::T1, 1) => top(i - 1),
        (Sector::T1, _) if i == 0 => "f(-1)1".into(),
        (Sector::T1, _) if i == 1 && level_one => "f(-2)v^{1,1}".into(),
        (Sector::T1, _) if i == 1 => "f(-1)v^{1,1}".into(),
        (Sector::T1, _) => top(i - 2),

        (Sector::T2, 0) => top(i),
        (Sector::T2, 1) if i == k.get() => format!("f(-2)v^{{{i},{i}}}"),
        (Sector::T2, 1) if i == 0 => "f(-1)1".into(),
        (Sector::T2, 1) => format!("f(-1)v^{{{i},{i}}}"),
        (Sector::T2, _) if i == 0 && level_one => "e(-1)1".into(),
        (Sector::T2, _) if i == 0 => "f(-1)^2 1".into(),
        (Sector::T2, _) => top(i - 1),
    }
}

pub fn weighted_label(label: IrrLabel, k: Level) -> Result<WeightedLabel> {
    Ok(WeightedLabel {
        label,
        weight: conformal_weight(label, k)?,
        generator_desc: generator_desc(label, k),
    })
}

/// Every irreducible module at level `k` with its weight, canonical order.
pub fn weighted_catalog(k: Level) -> Vec<WeightedLabel> {
    enumerate_irreducibles(k)
        .into_iter()
        .map(|l| weighted_label(l, k).expect("enumerated labels are valid"))
        .collect()
}
