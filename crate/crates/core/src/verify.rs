//! Executable checks of the algebraic identities satisfied by the catalog.
//!
//! Each suite returns a [`VerificationReport`]; an empty failure list means
//! every instance of the identity held. Cubic suites sweep all ordered
//! triples up to [`VerifyConfig::cubic_cap`] and sample beyond it;
//! quadratic suites do the same against [`VerifyConfig::quadratic_cap`].

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{contragredient, fuse_irreducible, FusionTable};
use crate::labels::{enumerate_irreducibles, IrrLabel, Level, Sector};
use crate::qdim::{has_unit_qdim, QDimTable};
use crate::rational::Rational;
use crate::weights::{base_twist_weight, conformal_weight};

pub const DEFAULT_CUBIC_CAP: u32 = 8;
pub const DEFAULT_QUADRATIC_CAP: u32 = 12;
pub const DEFAULT_SAMPLES: usize = 20_000;
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub cubic_cap: u32,
    pub quadratic_cap: u32,
    /// Instances drawn when a level exceeds its cap. Zero refuses instead.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cubic_cap: DEFAULT_CUBIC_CAP,
            quadratic_cap: DEFAULT_QUADRATIC_CAP,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

/// A failed identity instance with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub description: String,
    pub labels: Vec<IrrLabel>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub level: u32,
    pub checks_run: u64,
    pub sampled: bool,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} k={:<3} {} checks={}{} failures={} ({:.3}s)",
            self.suite,
            self.level,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks_run,
            if self.sampled { " (sampled)" } else { "" },
            self.failures.len(),
            self.elapsed.as_secs_f64(),
        )
    }
}

struct Recorder {
    suite: &'static str,
    level: u32,
    checks: u64,
    sampled: bool,
    failures: Vec<Failure>,
    start: Instant,
}

impl Recorder {
    fn new(suite: &'static str, level: u32) -> Self {
        Recorder { suite, level, checks: 0, sampled: false, failures: Vec::new(), start: Instant::now() }
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        description: impl FnOnce() -> String,
        labels: &[IrrLabel],
        lhs: T,
        rhs: T,
    ) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                description: description(),
                labels: labels.to_vec(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite.to_string(),
            level: self.level,
            checks_run: self.checks,
            sampled: self.sampled,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Either every ordered tuple or a seeded sample of them.
enum Sweep {
    Exhaustive,
    Sampled(Box<ChaCha8Rng>, usize),
}

fn plan(k: Level, cap: u32, config: &VerifyConfig) -> Result<Sweep> {
    if k.get() <= cap {
        Ok(Sweep::Exhaustive)
    } else if config.samples == 0 {
        Err(Error::CapExceeded { k: k.get(), cap })
    } else {
        Ok(Sweep::Sampled(Box::new(ChaCha8Rng::seed_from_u64(config.seed)), config.samples))
    }
}

fn for_pairs(labels: &[IrrLabel], sweep: Sweep, rec: &mut Recorder, mut f: impl FnMut(&mut Recorder, IrrLabel, IrrLabel)) {
    match sweep {
        Sweep::Exhaustive => {
            for &a in labels {
                for &b in labels {
                    f(rec, a, b);
                }
            }
        }
        Sweep::Sampled(mut rng, n) => {
            rec.sampled = true;
            for _ in 0..n {
                let a = labels[rng.random_range(0..labels.len())];
                let b = labels[rng.random_range(0..labels.len())];
                f(rec, a, b);
            }
        }
    }
}

fn for_triples(
    labels: &[IrrLabel],
    sweep: Sweep,
    rec: &mut Recorder,
    mut f: impl FnMut(&mut Recorder, IrrLabel, IrrLabel, IrrLabel),
) {
    match sweep {
        Sweep::Exhaustive => {
            for &a in labels {
                for &b in labels {
                    for &c in labels {
                        f(rec, a, b, c);
                    }
                }
            }
        }
        Sweep::Sampled(mut rng, n) => {
            rec.sampled = true;
            for _ in 0..n {
                let mut pick = || labels[rng.random_range(0..labels.len())];
                let (a, b, c) = (pick(), pick(), pick());
                f(rec, a, b, c);
            }
        }
    }
}

/// `vacuum ⊠ x = x` for every irreducible `x`.
pub fn verify_unit(k: Level) -> VerificationReport {
    let mut rec = Recorder::new("unit", k.get());
    for x in enumerate_irreducibles(k) {
        let got = fuse_irreducible(IrrLabel::VACUUM, x, k).expect("valid labels");
        let right = fuse_irreducible(x, IrrLabel::VACUUM, k).expect("valid labels");
        rec.check(|| format!("1 ⊠ {x} = {x}"), &[x], got.to_string(), x.to_string());
        rec.check(|| format!("{x} ⊠ 1 = {x}"), &[x], right.to_string(), x.to_string());
    }
    rec.finish()
}

/// `a ⊠ b = b ⊠ a` for every ordered pair.
pub fn verify_commutativity(k: Level, config: &VerifyConfig) -> Result<VerificationReport> {
    let sweep = plan(k, config.quadratic_cap, config)?;
    let table = FusionTable::new(k);
    let mut rec = Recorder::new("comm", k.get());
    for_pairs(table.labels(), sweep, &mut rec, |rec, a, b| {
        rec.check(
            || format!("{a} ⊠ {b} = {b} ⊠ {a}"),
            &[a, b],
            table.product(a, b),
            table.product(b, a),
        );
    });
    Ok(rec.finish())
}

/// `(a ⊠ b) ⊠ c = a ⊠ (b ⊠ c)` for every ordered triple.
pub fn verify_associativity(k: Level, config: &VerifyConfig) -> Result<VerificationReport> {
    let sweep = plan(k, config.cubic_cap, config)?;
    let table = FusionTable::new(k);
    let mut rec = Recorder::new("assoc", k.get());
    for_triples(table.labels(), sweep, &mut rec, |rec, a, b, c| {
        let lhs = table.fuse_right(table.product(a, b), c);
        let rhs = table.fuse_left(a, table.product(b, c));
        rec.check(|| format!("({a} ⊠ {b}) ⊠ {c} = {a} ⊠ ({b} ⊠ {c})"), &[a, b, c], lhs, rhs);
    });
    Ok(rec.finish())
}

/// Duality: `N_{a,b}^c = N_{a,c'}^{b'}` on triples, `N_{a,b}^1 = [b = a']`
/// on pairs, and duals preserving weight and quantum dimension.
pub fn verify_duality(k: Level, config: &VerifyConfig) -> Result<VerificationReport> {
    let sweep = plan(k, config.cubic_cap, config)?;
    let table = FusionTable::new(k);
    let qdims = QDimTable::new(k);
    let dual = |x: IrrLabel| contragredient(x, k).expect("valid label");
    let mut rec = Recorder::new("dual", k.get());

    for_triples(table.labels(), sweep, &mut rec, |rec, a, b, c| {
        rec.check(
            || format!("N[{a},{b}]^{c} = N[{a},{c}']^({b}')"),
            &[a, b, c],
            table.coefficient(a, b, c),
            table.coefficient(a, dual(c), dual(b)),
        );
    });

    for &a in table.labels() {
        for &b in table.labels() {
            let want = u64::from(b == dual(a));
            rec.check(
                || format!("N[{a},{b}]^vacuum = [{b} = {a}']"),
                &[a, b],
                table.coefficient(a, b, IrrLabel::VACUUM),
                want,
            );
        }
        let d = dual(a);
        rec.check(|| format!("({a}')' = {a}"), &[a], dual(d), a);
        rec.check(
            || format!("weight({a}') = weight({a})"),
            &[a, d],
            conformal_weight(d, k).expect("valid"),
            conformal_weight(a, k).expect("valid"),
        );
        rec.check(
            || format!("qdim({a}') = qdim({a})"),
            &[a, d],
            qdims.get(d).expect("valid").residue().clone(),
            qdims.get(a).expect("valid").residue().clone(),
        );
    }
    Ok(rec.finish())
}

/// `qdim(a) qdim(b) = Σ_c N_{a,b}^c qdim(c)` as exact residues.
pub fn verify_qdim_homomorphism(k: Level, config: &VerifyConfig) -> Result<VerificationReport> {
    let sweep = plan(k, config.quadratic_cap, config)?;
    let table = FusionTable::new(k);
    let qdims = QDimTable::new(k);
    let mut rec = Recorder::new("qdim", k.get());
    for_pairs(table.labels(), sweep, &mut rec, |rec, a, b| {
        let lhs = qdims.mul(&qdims.get(a).expect("valid"), &qdims.get(b).expect("valid"));
        let mut rhs = qdims.zero();
        for (&c, &m) in table.product(a, b).iter() {
            rhs = &rhs + &qdims.get(c).expect("valid").scale(m);
        }
        rec.check(
            || format!("qdim({a}) qdim({b}) = Σ N qdim(c)"),
            &[a, b],
            lhs.residue().clone(),
            rhs.residue().clone(),
        );
    });
    Ok(rec.finish())
}

/// Level-one correspondence between the 18 irreducibles and the cosets
/// `s/18` of the rank-one lattice with norm 18.
pub const LEVEL_ONE_LATTICE: [(&str, u32); 18] = [
    ("u:0:0", 0),
    ("t1:0:0", 1),
    ("t2:0:0", 2),
    ("u:1:1", 3),
    ("t1:1:1", 4),
    ("t2:1:2", 5),
    ("u:0:1", 6),
    ("t1:0:1", 7),
    ("t2:0:2", 8),
    ("u:1:2", 9),
    ("t1:1:2", 10),
    ("t2:1:1", 11),
    ("u:0:2", 12),
    ("t1:0:2", 13),
    ("t2:0:1", 14),
    ("u:1:0", 15),
    ("t1:1:0", 16),
    ("t2:1:0", 17),
];

/// Coset index `s` of a level-one label.
pub fn lattice_coset(label: IrrLabel) -> Option<u32> {
    let text = label.to_string();
    LEVEL_ONE_LATTICE.iter().find(|(t, _)| *t == text).map(|&(_, s)| s)
}

fn lattice_label(s: u32) -> IrrLabel {
    let (text, _) = LEVEL_ONE_LATTICE[LEVEL_ONE_LATTICE
        .iter()
        .position(|&(_, t)| t == s % 18)
        .expect("every coset is listed")];
    text.parse().expect("table labels parse")
}

/// Checks level-one fusion, duals and weights against the lattice model:
/// cosets add mod 18, the dual of `s` is `−s`, and the weight of coset `s`
/// is `s²/36` modulo 1.
pub fn verify_k1_lattice_oracle() -> VerificationReport {
    let k = Level::new(1).expect("1 is a level");
    let mut rec = Recorder::new("oracle", 1);
    let labels = enumerate_irreducibles(k);
    for &a in &labels {
        let sa = lattice_coset(a).expect("every level-one label has a coset");
        for &b in &labels {
            let sb = lattice_coset(b).expect("every level-one label has a coset");
            let got = fuse_irreducible(a, b, k).expect("valid labels");
            rec.check(
                || format!("{a} ⊠ {b} ↦ coset {sa} + {sb}"),
                &[a, b],
                got.to_string(),
                lattice_label(sa + sb).to_string(),
            );
        }
        rec.check(
            || format!("{a}' ↦ coset 18 − {sa}"),
            &[a],
            contragredient(a, k).expect("valid"),
            lattice_label(18 - sa),
        );
        let s = sa as i64;
        rec.check(
            || format!("weight({a}) ≡ {sa}²/36 mod 1"),
            &[a],
            conformal_weight(a, k).expect("valid").fract_floor(),
            Rational::new(s * s, 36).fract_floor(),
        );
    }
    rec.finish()
}

/// Catalog shape: `9(k+1)` distinct labels, non-negative weights with only
/// the vacuum at zero, paired T1/T2 weights, and unit quantum dimension
/// exactly at `i ∈ {0, k}`.
pub fn verify_catalog(k: Level) -> VerificationReport {
    let mut rec = Recorder::new("catalog", k.get());
    let labels = enumerate_irreducibles(k);
    rec.check(|| "count = 9(k+1)".into(), &[], labels.len(), k.irreducible_count());
    let mut sorted = labels.clone();
    sorted.dedup();
    rec.check(|| "labels are distinct".into(), &[], sorted.len(), labels.len());

    for &x in &labels {
        let w = conformal_weight(x, k).expect("valid");
        rec.check(|| format!("weight({x}) >= 0"), &[x], !w.is_negative(), true);
        rec.check(|| format!("weight({x}) = 0 iff vacuum"), &[x], w.is_zero(), x.is_vacuum());
        if x.sector() == Sector::T1 {
            let partner = IrrLabel::from_parts(Sector::T2, k.get() - x.i(), x.j() as i64);
            rec.check(
                || format!("weight({x}) = weight({partner})"),
                &[x, partner],
                w,
                conformal_weight(partner, k).expect("valid"),
            );
            if x.j() == 0 {
                rec.check(
                    || format!("weight({x}) = a(k,i,1)"),
                    &[x],
                    w,
                    base_twist_weight(k, x.i() as i64, 1).expect("valid"),
                );
            }
        }
        let unit = x.i() == 0 || x.i() == k.get();
        rec.check(
            || format!("qdim({x}) = 1 iff i ∈ {{0, k}}"),
            &[x],
            has_unit_qdim(x, k).expect("valid"),
            unit,
        );
    }
    rec.finish()
}

/// Named suites, as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Unit,
    Comm,
    Assoc,
    Dual,
    Qdim,
    Oracle,
    Catalog,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Catalog, Suite::Unit, Suite::Comm, Suite::Assoc, Suite::Dual, Suite::Qdim, Suite::Oracle];

    pub fn run(self, k: Level, config: &VerifyConfig) -> Result<VerificationReport> {
        match self {
            Suite::Unit => Ok(verify_unit(k)),
            Suite::Comm => verify_commutativity(k, config),
            Suite::Assoc => verify_associativity(k, config),
            Suite::Dual => verify_duality(k, config),
            Suite::Qdim => verify_qdim_homomorphism(k, config),
            Suite::Oracle => Ok(verify_k1_lattice_oracle()),
            Suite::Catalog => Ok(verify_catalog(k)),
        }
    }
}

/// Every suite in a fixed order.
pub fn verify_all(k: Level, config: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    Suite::ALL.iter().map(|s| s.run(k, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(k: i64) -> Level {
        Level::new(k).unwrap()
    }

    #[test]
    fn unit_counts() {
        for (k, n) in [(1, 18), (2, 27), (6, 63)] {
            let r = verify_unit(lvl(k));
            assert!(r.passed(), "{r}");
            assert_eq!(r.checks_run, 2 * n);
        }
    }

    #[test]
    fn commutativity_counts() {
        let cfg = VerifyConfig::default();
        let r = verify_commutativity(lvl(1), &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks_run, 18 * 18);
        assert!(verify_commutativity(lvl(4), &cfg).unwrap().passed());
    }

    #[test]
    fn associativity_small_levels() {
        let cfg = VerifyConfig::default();
        let r = verify_associativity(lvl(1), &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks_run, 5832);
        let r = verify_associativity(lvl(2), &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks_run, 27 * 27 * 27);
    }

    #[test]
    fn cap_policy() {
        let refuse = VerifyConfig { cubic_cap: 2, samples: 0, ..VerifyConfig::default() };
        assert_eq!(
            verify_associativity(lvl(3), &refuse).unwrap_err(),
            Error::CapExceeded { k: 3, cap: 2 }
        );
        let sample = VerifyConfig { cubic_cap: 2, samples: 500, ..VerifyConfig::default() };
        let r = verify_associativity(lvl(3), &sample).unwrap();
        assert!(r.passed() && r.sampled);
        assert_eq!(r.checks_run, 500);
    }

    #[test]
    fn duality_and_spot_check() {
        let cfg = VerifyConfig::default();
        assert!(verify_duality(lvl(1), &cfg).unwrap().passed());
        assert!(verify_duality(lvl(3), &cfg).unwrap().passed());
        let k = lvl(3);
        let a: IrrLabel = "t1:1:0".parse().unwrap();
        let d = contragredient(a, k).unwrap();
        assert_eq!(d.to_string(), "t2:2:0");
        assert_eq!(FusionTable::new(k).coefficient(a, d, IrrLabel::VACUUM), 1);
    }

    #[test]
    fn qdim_homomorphism_small() {
        let cfg = VerifyConfig::default();
        assert!(verify_qdim_homomorphism(lvl(1), &cfg).unwrap().passed());
        assert!(verify_qdim_homomorphism(lvl(5), &cfg).unwrap().passed());
    }

    #[test]
    fn oracle_passes_with_expected_count() {
        let r = verify_k1_lattice_oracle();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.checks_run, 324 + 18 + 18);
    }

    #[test]
    fn lattice_table_is_a_bijection() {
        let mut seen: Vec<u32> = LEVEL_ONE_LATTICE.iter().map(|&(_, s)| s).collect();
        seen.sort();
        assert_eq!(seen, (0..18).collect::<Vec<_>>());
        let mut names: Vec<&str> = LEVEL_ONE_LATTICE.iter().map(|&(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 18);
    }

    #[test]
    fn oracle_spot_values() {
        let l = |s: &str| s.parse::<IrrLabel>().unwrap();
        assert_eq!(lattice_label(1 + 1), l("t2:0:0"));
        assert_eq!(lattice_coset(l("t1:1:1")), Some(4));
        assert_eq!(lattice_label(18 - 5), l("t1:0:2"));
    }

    #[test]
    fn failures_are_reported_with_both_sides() {
        let mut rec = Recorder::new("demo", 1);
        rec.check(|| "1 = 2".into(), &[IrrLabel::VACUUM], 1, 2);
        let r = rec.finish();
        assert!(!r.passed());
        assert_eq!(r.failures[0].lhs, "1");
        assert_eq!(r.failures[0].rhs, "2");
        assert!(r.to_string().contains("FAIL"));
    }

    #[test]
    fn catalog_levels() {
        for (k, n) in [(1, 18), (2, 27), (12, 117)] {
            let r = verify_catalog(lvl(k));
            assert!(r.passed(), "{:?}", r.failures);
            assert_eq!(enumerate_irreducibles(lvl(k)).len(), n);
        }
    }
}
