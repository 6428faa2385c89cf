//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p z3orbifold --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use z3orbifold::cli;
use z3orbifold::qdim::{global_dimension_with_digits, label_sum_of_squares};
use z3orbifold::verify::{
    verify_associativity, verify_commutativity, verify_duality, verify_k1_lattice_oracle,
    verify_qdim_homomorphism, verify_unit, VerificationReport, VerifyConfig,
};
use z3orbifold::{
    conformal_weight, contragredient, enumerate_irreducibles, has_unit_qdim, make_label,
    qdim_exact, ChebPoly, IrrLabel, Level, Rational, Sector,
};

fn lvl(k: u32) -> Level {
    Level::new(k as i64).unwrap()
}

fn criterion(id: u32, name: &str, ok: bool, elapsed: Duration, limit: Option<Duration>, detail: &str) {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "[{status}] AC{id} {name}: {detail} ({:.3}s{})",
        elapsed.as_secs_f64(),
        limit.map_or(String::new(), |l| format!(", limit {}s", l.as_secs()))
    );
    assert!(ok, "AC{id} {name} failed: {detail}");
    assert!(in_time, "AC{id} {name} exceeded its time limit");
}

fn all_pass(reports: &[VerificationReport]) -> (bool, String) {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} k={}: {:?}", r.suite, r.level, r.failures.first()))
        .collect();
    let checks: u64 = reports.iter().map(|r| r.checks_run).sum();
    (bad.is_empty(), format!("{} reports, {checks} checks, failing: {bad:?}", reports.len()))
}

#[test]
fn ac1_level_one_weights() {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["z3orbifold", "catalog", "--level", "1", "--format", "json"], &mut out, &mut err);
    let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let weights: Vec<String> = doc["modules"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["weight"].as_str().unwrap().to_string())
        .collect();
    let expected = [
        "0", "1", "1", "1/4", "1/4", "9/4", "1/36", "49/36", "25/36", "1/9", "4/9", "16/9", "1/9",
        "4/9", "16/9", "1/36", "49/36", "25/36",
    ];
    // every emitted label key parses back to the same label
    let round_trip = doc["modules"].as_array().unwrap().iter().all(|m| {
        let text = m["label"].as_str().unwrap();
        cli::parse_label(text, lvl(1)).map(|l| l.to_string()) == Ok(text.to_string())
    });
    let ok = code == 0 && weights == expected && round_trip;
    criterion(1, "level-one weights exact", ok, start.elapsed(), Some(Duration::from_secs(1)), &format!("{weights:?}"));
}

/// Generic-level weights written out directly as formulas in `k`, `i`.
fn generic_weight(sector: Sector, k: i64, i: i64, j: usize) -> Rational {
    let h = Rational::new(i * (i + 2), 4 * (k + 2));
    match sector {
        Sector::U if i == 0 => Rational::from_integer([0, 1, 1][j]),
        Sector::U if i == 1 => [Rational::new(3, 4 * (k + 2)), Rational::new(3, 4 * (k + 2)), Rational::new(4 * k + 11, 4 * (k + 2))][j],
        Sector::U => h,
        Sector::T1 if i == 0 => [Rational::new(k, 36), Rational::new(k + 48, 36), Rational::new(k + 24, 36)][j],
        Sector::T1 => h + [Rational::new(k - 6 * i, 36), Rational::new(k - 6 * i + 12, 36), Rational::new(k - 6 * i + 24, 36)][j],
        Sector::T2 if i == k => [Rational::new(k, 36), Rational::new(k + 48, 36), Rational::new(k + 24, 36)][j],
        Sector::T2 => h + [Rational::new(k - 3 * i, 9), Rational::new(k - 3 * i + 3, 9), Rational::new(k - 3 * i + 6, 9)][j],
    }
}

#[test]
fn ac2_generic_weights() {
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for k in [2u32, 3, 5] {
        for sector in Sector::ALL {
            for i in 0..=k as i64 {
                for j in 0..3 {
                    let label = make_label(sector, i, j as i64, lvl(k)).unwrap();
                    let got = conformal_weight(label, lvl(k)).unwrap();
                    let want = generic_weight(sector, k as i64, i, j);
                    checked += 1;
                    if got != want {
                        mismatches.push(format!("{label}@k={k}: {got} vs {want}"));
                    }
                }
            }
        }
    }
    criterion(
        2,
        "generic-level weight spot checks",
        mismatches.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(1)),
        &format!("{checked} weights, mismatches {mismatches:?}"),
    );
}

#[test]
fn ac3_catalog_count() {
    let start = Instant::now();
    let ok = (1..=20u32).all(|k| {
        let mut labels = enumerate_irreducibles(lvl(k));
        let n = labels.len();
        labels.dedup();
        n == 9 * (k as usize + 1) && labels.len() == n
    });
    criterion(3, "catalog count 9(k+1), k = 1..20", ok, start.elapsed(), Some(Duration::from_secs(1)), "all levels");
}

#[test]
fn ac4_lattice_oracle() {
    let start = Instant::now();
    let r = verify_k1_lattice_oracle();
    let ok = r.passed() && r.checks_run == 324 + 18 + 18;
    criterion(
        4,
        "k=1 lattice oracle",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(1)),
        &format!("{} checks, {} failures", r.checks_run, r.failures.len()),
    );
}

#[test]
fn ac5_ring_axioms() {
    let config = VerifyConfig::default();
    let start = Instant::now();
    let mut quadratic = Vec::new();
    for k in 1..=12 {
        quadratic.push(verify_unit(lvl(k)));
        let r = verify_commutativity(lvl(k), &config).unwrap();
        assert!(!r.sampled);
        quadratic.push(r);
    }
    let mut cubic = Vec::new();
    for k in 1..=6 {
        for r in [verify_associativity(lvl(k), &config).unwrap(), verify_duality(lvl(k), &config).unwrap()] {
            assert!(!r.sampled);
            cubic.push(r);
        }
    }
    let cubic_start = Instant::now();
    let assoc6 = verify_associativity(lvl(6), &config).unwrap();
    let cubic6 = cubic_start.elapsed();
    assert_eq!(assoc6.checks_run, 63 * 63 * 63);

    let assoc6_ok = assoc6.passed();
    let mut reports = quadratic;
    reports.extend(cubic);
    reports.push(assoc6);
    let (ok, detail) = all_pass(&reports);
    criterion(5, "ring axioms (unit, comm k<=12; assoc, dual k<=6)", ok, start.elapsed(), None, &detail);
    criterion(5, "cubic associativity sweep at k=6", assoc6_ok, cubic6, Some(Duration::from_secs(60)), "63^3 triples");
}

#[test]
fn ac6_qdim_homomorphism() {
    let config = VerifyConfig::default();
    let start = Instant::now();
    let reports: Vec<_> = (1..=12).map(|k| verify_qdim_homomorphism(lvl(k), &config).unwrap()).collect();
    assert!(reports.iter().all(|r| !r.sampled));
    let (ok, detail) = all_pass(&reports);
    criterion(6, "exact qdim homomorphism, k<=12", ok, start.elapsed(), Some(Duration::from_secs(10)), &detail);
}

#[test]
fn ac7_global_dimension() {
    let start = Instant::now();
    let g1 = global_dimension_with_digits(lvl(1), 30);
    let mut ok = g1.exact.residue() == &ChebPoly::constant(18) && (g1.numeric.to_f64() - 18.0).abs() < 1e-9;
    let mut worst = 0f64;
    for k in 1..=8 {
        let formula = global_dimension_with_digits(lvl(k), 20).numeric.to_f64();
        let direct = label_sum_of_squares(lvl(k), 20);
        worst = worst.max((formula - direct).abs());
    }
    ok &= worst < 1e-9;
    criterion(
        7,
        "global dimension",
        ok,
        start.elapsed(),
        None,
        &format!("glob(1) = {} exact {}, max |formula - direct| over k<=8 = {worst:e}", g1.numeric, g1.exact.residue()),
    );
}

#[test]
fn ac8_simple_currents() {
    let start = Instant::now();
    let mut ok = enumerate_irreducibles(lvl(1)).into_iter().all(|x| has_unit_qdim(x, lvl(1)).unwrap());
    for k in 1..=12 {
        for x in enumerate_irreducibles(lvl(k)) {
            ok &= has_unit_qdim(x, lvl(k)).unwrap() == (x.i() == 0 || x.i() == k);
        }
    }
    criterion(8, "simple-current predicate", ok, start.elapsed(), None, "k=1 all 18; k<=12 exactly i in {0,k}");
}

#[test]
fn ac9_duality_invariants() {
    let start = Instant::now();
    let mut bad: Vec<IrrLabel> = Vec::new();
    for k in 1..=12 {
        let k = lvl(k);
        for x in enumerate_irreducibles(k) {
            let d = contragredient(x, k).unwrap();
            let ok = contragredient(d, k).unwrap() == x
                && conformal_weight(d, k) == conformal_weight(x, k)
                && qdim_exact(d, k) == qdim_exact(x, k);
            if !ok {
                bad.push(x);
            }
        }
    }
    criterion(9, "duality invariants, k<=12", bad.is_empty(), start.elapsed(), None, &format!("violations {bad:?}"));
}
