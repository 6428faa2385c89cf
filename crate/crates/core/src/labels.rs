//! Names of the irreducible modules of the orbifold algebra.
//!
//! Every irreducible module is named by a sector (the twisted sector it
//! comes from), an affine weight index `i` in `0..=k` and a Z/3 eigenspace
//! index `j` in `{0, 1, 2}`. The canonical text form is `u:<i>:<j>`,
//! `t1:<i>:<j>` or `t2:<i>:<j>`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The level `k >= 1` of the affine algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(u32);

impl Level {
    pub fn new(k: i64) -> Result<Level> {
        if k < 1 || k > u32::MAX as i64 {
            return Err(Error::LevelOutOfRange(k));
        }
        Ok(Level(k as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn as_i64(self) -> i64 {
        self.0 as i64
    }

    /// Number of irreducible modules at this level, `9(k+1)`.
    pub fn irreducible_count(self) -> usize {
        9 * (self.0 as usize + 1)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which twisted sector a module originates from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    /// Untwisted.
    U,
    /// σ-twisted.
    T1,
    /// σ²-twisted.
    T2,
}

impl Sector {
    pub const ALL: [Sector; 3] = [Sector::U, Sector::T1, Sector::T2];

    /// Z/3 grade: U ↦ 0, T1 ↦ 1, T2 ↦ 2.
    pub fn grade(self) -> u8 {
        match self {
            Sector::U => 0,
            Sector::T1 => 1,
            Sector::T2 => 2,
        }
    }

    pub fn from_grade(g: i64) -> Sector {
        Sector::ALL[residue3(g) as usize]
    }

    pub fn tag(self) -> &'static str {
        match self {
            Sector::U => "u",
            Sector::T1 => "t1",
            Sector::T2 => "t2",
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `n mod 3` in `{0, 1, 2}`, also for negative `n`.
pub fn residue3(n: i64) -> u8 {
    n.rem_euclid(3) as u8
}

/// One irreducible module. Ordered by sector, then `i`, then `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrLabel {
    sector: Sector,
    i: u32,
    j: u8,
}

impl IrrLabel {
    /// The algebra itself, `L(k,0)^0`.
    pub const VACUUM: IrrLabel = IrrLabel { sector: Sector::U, i: 0, j: 0 };

    /// Caller guarantees `i <= k`; `j` is reduced mod 3.
    pub(crate) fn from_parts(sector: Sector, i: u32, j: i64) -> IrrLabel {
        IrrLabel { sector, i, j: residue3(j) }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    pub fn is_vacuum(&self) -> bool {
        *self == IrrLabel::VACUUM
    }

    /// Whether this label names a module at level `k`.
    pub fn is_valid_at(&self, k: Level) -> bool {
        self.i <= k.get()
    }

    pub(crate) fn check(&self, k: Level) -> Result<()> {
        if self.is_valid_at(k) {
            Ok(())
        } else {
            Err(Error::LevelMismatch(format!(
                "label {self} has i = {} but the level is k = {k}",
                self.i
            )))
        }
    }

    /// Document form: `L(k,i)^j`, `L(k,i)^{T1,j}` or `L(k,i)^{T2,j}`.
    pub fn pretty(&self, k: Level) -> String {
        match self.sector {
            Sector::U => format!("L({k},{})^{}", self.i, self.j),
            Sector::T1 => format!("L({k},{})^{{T1,{}}}", self.i, self.j),
            Sector::T2 => format!("L({k},{})^{{T2,{}}}", self.i, self.j),
        }
    }

    /// Parse the canonical text form and validate it against `k`.
    pub fn parse_at(text: &str, k: Level) -> Result<IrrLabel> {
        let (sector, i, j) = parse_fields(text)?;
        make_label(sector, i, j, k)
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.sector, self.i, self.j)
    }
}

/// Parses without a level check; `i` is only required to be a
/// non-negative decimal and `j` is reduced mod 3.
impl FromStr for IrrLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<IrrLabel> {
        let (sector, i, j) = parse_fields(s)?;
        let i = u32::try_from(i).map_err(|_| syntax(s, 0, "index does not fit in 32 bits"))?;
        Ok(IrrLabel::from_parts(sector, i, j))
    }
}

impl Serialize for IrrLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IrrLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn syntax(input: &str, pos: usize, msg: &str) -> Error {
    Error::Syntax { input: input.to_string(), pos, msg: msg.to_string() }
}

fn parse_fields(text: &str) -> Result<(Sector, i64, i64)> {
    let (sector, rest_at) = if text.starts_with("t1:") {
        (Sector::T1, 3)
    } else if text.starts_with("t2:") {
        (Sector::T2, 3)
    } else if text.starts_with("u:") {
        (Sector::U, 2)
    } else {
        return Err(syntax(text, 0, "expected sector tag `u:`, `t1:` or `t2:`"));
    };
    let (i, pos) = parse_decimal(text, rest_at)?;
    match text[pos..].chars().next() {
        Some(':') => {}
        Some(_) => return Err(syntax(text, pos, "expected `:` after the weight index")),
        None => return Err(syntax(text, pos, "missing `:<j>` eigenspace index")),
    }
    let (j, end) = parse_decimal(text, pos + 1)?;
    if end != text.len() {
        return Err(syntax(text, end, "unexpected trailing input"));
    }
    Ok((sector, i, j))
}

fn parse_decimal(text: &str, start: usize) -> Result<(i64, usize)> {
    let digits = text[start..].bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Err(syntax(text, start, "expected a decimal integer"));
    }
    let end = start + digits;
    let value = text[start..end]
        .parse::<i64>()
        .map_err(|_| syntax(text, start, "integer too large"))?;
    Ok((value, end))
}

/// Validated label constructor; `j` is reduced mod 3.
pub fn make_label(sector: Sector, i: i64, j: i64, k: Level) -> Result<IrrLabel> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    if i > k.as_i64() {
        return Err(Error::IndexAboveLevel { i, k: k.get() });
    }
    Ok(IrrLabel::from_parts(sector, i as u32, j))
}

/// All `9(k+1)` labels in canonical order.
pub fn enumerate_irreducibles(k: Level) -> Vec<IrrLabel> {
    let mut out = Vec::with_capacity(k.irreducible_count());
    for sector in Sector::ALL {
        for i in 0..=k.get() {
            for j in 0..3 {
                out.push(IrrLabel { sector, i, j });
            }
        }
    }
    out
}

/// Position of `label` in [`enumerate_irreducibles`].
pub fn canonical_index(label: IrrLabel, k: Level) -> usize {
    let per_sector = 3 * (k.get() as usize + 1);
    label.sector.grade() as usize * per_sector + 3 * label.i as usize + label.j as usize
}
