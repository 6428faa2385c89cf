use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::labels::{IrrLabel, Level};

/// A finite formal sum of irreducible modules with non-negative integer
/// multiplicities. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionVector {
    level: Level,
    entries: BTreeMap<IrrLabel, u64>,
}

impl FusionVector {
    pub fn zero(level: Level) -> Self {
        FusionVector { level, entries: BTreeMap::new() }
    }

    pub fn singleton(label: IrrLabel, level: Level) -> Result<Self> {
        let mut v = FusionVector::zero(level);
        v.add(label, 1)?;
        Ok(v)
    }

    pub fn from_pairs<I>(level: Level, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IrrLabel, u64)>,
    {
        let mut v = FusionVector::zero(level);
        for (label, m) in pairs {
            v.add(label, m)?;
        }
        Ok(v)
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// Adds `multiplicity` copies of `label`.
    pub fn add(&mut self, label: IrrLabel, multiplicity: u64) -> Result<()> {
        label.check(self.level)?;
        if multiplicity > 0 {
            *self.entries.entry(label).or_insert(0) += multiplicity;
        }
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, label: IrrLabel, multiplicity: u64) {
        if multiplicity > 0 {
            *self.entries.entry(label).or_insert(0) += multiplicity;
        }
    }

    /// Accumulates `factor * other` into `self`.
    pub fn add_scaled(&mut self, other: &FusionVector, factor: u64) -> Result<()> {
        self.same_level(other)?;
        for (&label, &m) in &other.entries {
            self.add_unchecked(label, m * factor);
        }
        Ok(())
    }

    pub fn multiplicity(&self, label: &IrrLabel) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    /// Entries in canonical label order.
    pub fn iter(&self) -> impl Iterator<Item = (&IrrLabel, &u64)> {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &IrrLabel> {
        self.entries.keys()
    }

    /// Number of distinct labels with nonzero multiplicity.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub(crate) fn same_level(&self, other: &FusionVector) -> Result<()> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(Error::LevelMismatch(format!(
                "fusion vectors at levels {} and {}",
                self.level, other.level
            )))
        }
    }
}

impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (n, (label, m)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if *m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

/// Serialized as a JSON object `{"u:0:0": 1, ...}` in canonical order.
impl Serialize for FusionVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (label, m) in &self.entries {
            map.serialize_entry(&label.to_string(), m)?;
        }
        map.end()
    }
}
