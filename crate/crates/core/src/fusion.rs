//! Fusion products of the irreducible modules.
//!
//! The eigenspace index of each summand is selected by [`sign_value`]. Six
//! sector combinations carry their own formula; the other three orders
//! (T1⊠U, T2⊠U, T2⊠T1) are obtained by swapping the factors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labels::{canonical_index, enumerate_irreducibles, residue3, IrrLabel, Level, Sector};
use crate::vector::FusionVector;

/// One structure constant `N_{a,b}^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FusionTriple {
    pub a: IrrLabel,
    pub b: IrrLabel,
    pub c: IrrLabel,
    pub multiplicity: u64,
}

/// Level-`k` affine sl₂ fusion: every `i3` with `|i1 − i2| <= i3 <=
/// min(i1 + i2, 2k − i1 − i2)` and `i1 + i2 + i3` even, ascending.
pub fn sl2_fusion_range(k: Level, i1: u32, i2: u32) -> Result<Vec<u32>> {
    let kk = k.get();
    for i in [i1, i2] {
        if i > kk {
            return Err(Error::IndexAboveLevel { i: i as i64, k: kk });
        }
    }
    let lo = i1.abs_diff(i2);
    let hi = (i1 + i2).min(2 * kk - i1 - i2);
    Ok((lo..=hi).step_by(2).collect())
}

/// `j1 + j2 − t` where `t = ((i1 + i2 − i3) / 2) mod 3`. Unreduced.
pub fn sign_value(i1: i64, i2: i64, i3: i64, j1: i64, j2: i64) -> Result<i64> {
    let total = i1 + i2 + i3;
    if total.rem_euclid(2) != 0 {
        return Err(Error::Parity(total));
    }
    let half = (i1 + i2 - i3).div_euclid(2);
    Ok(j1 + j2 - residue3(half) as i64)
}

fn sign(i1: i64, i2: i64, i3: i64, j1: i64, j2: i64) -> i64 {
    sign_value(i1, i2, i3, j1, j2).expect("fusion range keeps i1 + i2 + i3 even")
}

/// `a ⊠ b` as a sum of irreducibles, each with multiplicity 1.
pub fn fuse_irreducible(a: IrrLabel, b: IrrLabel, k: Level) -> Result<FusionVector> {
    a.check(k)?;
    b.check(k)?;
    let (a, b) = if a.sector().grade() > b.sector().grade() { (b, a) } else { (a, b) };
    let (i1, j1) = (a.i() as i64, a.j() as i64);
    let (i2, j2) = (b.i() as i64, b.j() as i64);
    let kk = k.as_i64();

    let mut out = FusionVector::zero(k);
    for i3 in sl2_fusion_range(k, a.i(), b.i())? {
        let i3 = i3 as i64;
        let (sector, index, j) = match (a.sector(), b.sector()) {
            (Sector::U, Sector::U) => (Sector::U, i3, sign(i1, i2, i3, j1, j2)),
            (Sector::U, Sector::T1) => (Sector::T1, i3, sign(i1, i2, i3, j1, j2)),
            (Sector::U, Sector::T2) => (Sector::T2, i3, -sign(i1, i2, i3, j1, -j2)),
            (Sector::T1, Sector::T1) => (Sector::T2, i3, -sign(i1, i2, i3, j1, j2)),
            (Sector::T1, Sector::T2) => (Sector::U, kk - i3, sign(i1, i2, i3, j1, -j2) + kk - i3),
            (Sector::T2, Sector::T2) => {
                (Sector::T1, kk - i3, sign(i1, i2, i3, -j1, -j2) + kk - i3)
            }
            _ => unreachable!("factors are ordered by sector grade"),
        };
        out.add_unchecked(IrrLabel::from_parts(sector, index as u32, j), 1);
    }
    Ok(out)
}

/// Bilinear extension of [`fuse_irreducible`].
pub fn fuse(v1: &FusionVector, v2: &FusionVector, k: Level) -> Result<FusionVector> {
    if v1.level() != k {
        return Err(Error::LevelMismatch(format!("vector at level {} used at level {k}", v1.level())));
    }
    v1.same_level(v2)?;
    let mut out = FusionVector::zero(k);
    for (&a, &m) in v1.iter() {
        for (&b, &n) in v2.iter() {
            out.add_scaled(&fuse_irreducible(a, b, k)?, m * n)?;
        }
    }
    Ok(out)
}

/// The contragredient (dual) module.
///
/// Untwisted: `(i, j) ↦ (i, (i mod 3) − j)`. Twisted: `T1 ↔ T2` with
/// `i ↦ k − i` and `j` unchanged.
pub fn contragredient(label: IrrLabel, k: Level) -> Result<IrrLabel> {
    label.check(k)?;
    let (i, j) = (label.i(), label.j() as i64);
    Ok(match label.sector() {
        Sector::U => IrrLabel::from_parts(Sector::U, i, residue3(i as i64) as i64 - j),
        Sector::T1 => IrrLabel::from_parts(Sector::T2, k.get() - i, j),
        Sector::T2 => IrrLabel::from_parts(Sector::T1, k.get() - i, j),
    })
}

/// `N_{a,b}^c`, the multiplicity of `c` in `a ⊠ b`.
pub fn fusion_coefficient(a: IrrLabel, b: IrrLabel, c: IrrLabel, k: Level) -> Result<u64> {
    c.check(k)?;
    Ok(fuse_irreducible(a, b, k)?.multiplicity(&c))
}

/// Every product `a ⊠ b` at one level, indexed by canonical position.
#[derive(Clone, Debug)]
pub struct FusionTable {
    level: Level,
    labels: Vec<IrrLabel>,
    products: Vec<FusionVector>,
}

impl FusionTable {
    pub fn new(k: Level) -> Self {
        let labels = enumerate_irreducibles(k);
        let mut products = Vec::with_capacity(labels.len() * labels.len());
        for &a in &labels {
            for &b in &labels {
                products.push(fuse_irreducible(a, b, k).expect("enumerated labels are valid"));
            }
        }
        FusionTable { level: k, labels, products }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn labels(&self) -> &[IrrLabel] {
        &self.labels
    }

    /// Panics if either label is not valid at this level.
    pub fn product(&self, a: IrrLabel, b: IrrLabel) -> &FusionVector {
        assert!(a.is_valid_at(self.level) && b.is_valid_at(self.level));
        let n = self.labels.len();
        &self.products[canonical_index(a, self.level) * n + canonical_index(b, self.level)]
    }

    pub fn coefficient(&self, a: IrrLabel, b: IrrLabel, c: IrrLabel) -> u64 {
        self.product(a, b).multiplicity(&c)
    }

    /// `v ⊠ c` for a vector `v` and an irreducible `c`.
    pub fn fuse_right(&self, v: &FusionVector, c: IrrLabel) -> FusionVector {
        let mut out = FusionVector::zero(self.level);
        for (&a, &m) in v.iter() {
            for (&x, &n) in self.product(a, c).iter() {
                out.add_unchecked(x, m * n);
            }
        }
        out
    }

    /// `a ⊠ v` for an irreducible `a` and a vector `v`.
    pub fn fuse_left(&self, a: IrrLabel, v: &FusionVector) -> FusionVector {
        let mut out = FusionVector::zero(self.level);
        for (&b, &m) in v.iter() {
            for (&x, &n) in self.product(a, b).iter() {
                out.add_unchecked(x, m * n);
            }
        }
        out
    }

    /// All nonzero structure constants, in canonical `(a, b, c)` order.
    pub fn triples(&self) -> impl Iterator<Item = FusionTriple> + '_ {
        self.labels.iter().flat_map(move |&a| {
            self.labels.iter().flat_map(move |&b| {
                self.product(a, b).iter().map(move |(&c, &multiplicity)| FusionTriple {
                    a,
                    b,
                    c,
                    multiplicity,
                })
            })
        })
    }
}
