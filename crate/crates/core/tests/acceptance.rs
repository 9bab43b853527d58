//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line and
//! then asserts. Equalities are exact; the only tolerances are wall-clock
//! budgets.

use std::process::Command;
use std::time::{Duration, Instant};

use lieverify::chevalley::{dn_matrix_model, ChevalleyAlgebra, JacobiMode};
use lieverify::roots::{DynkinType, RootSystem};
use lieverify::verify::{
    cross_validate, run_scenarios, scenario_dn, scenario_e6, scenario_e7, ClaimRecord, Config,
    Scenario, Status,
};

const BUDGET_INFRA: Duration = Duration::from_secs(60);
const BUDGET_DN: Duration = Duration::from_secs(120);
const BUDGET_E6: Duration = Duration::from_secs(120);
const BUDGET_E7: Duration = Duration::from_secs(180);
const BUDGET_ALL: Duration = Duration::from_secs(600);

const MIN_CROSSVAL_SAMPLES: usize = 100;
const MIN_IOTA_SAMPLES: usize = 50;

fn verdict(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// Ids among `ids` whose claim is missing or not passing.
fn failing(claims: &[ClaimRecord], ids: &[&str]) -> Vec<String> {
    let mut bad = Vec::new();
    for id in ids {
        let hits: Vec<_> = claims.iter().filter(|c| c.id == *id).collect();
        if hits.is_empty() || hits.iter().any(|c| c.status != Status::Pass) {
            bad.push(id.to_string());
        }
    }
    for c in claims.iter().filter(|c| c.status == Status::Fail) {
        if !bad.contains(&c.id) {
            bad.push(c.id.clone());
        }
    }
    bad
}

#[test]
fn criterion_1_root_and_algebra_infrastructure() {
    let t = Instant::now();
    let mut problems = Vec::new();
    for (t_, pos, dim) in [
        (DynkinType::a(3), 6, 15),
        (DynkinType::d(5), 20, 45),
        (DynkinType::e(6), 36, 78),
        (DynkinType::e(7), 63, 133),
    ] {
        let t_ = t_.unwrap();
        let rs = RootSystem::new(t_);
        if rs.num_positive() != pos || rs.dim_algebra() != dim {
            problems.push(format!("{t_}: {} positive roots, dim {}", rs.num_positive(), rs.dim_algebra()));
        }
        let g = ChevalleyAlgebra::from_type(t_).unwrap();
        let mode = if dim <= 78 {
            JacobiMode::Exhaustive
        } else {
            JacobiMode::Sampled {
                triples: 10_000,
                seed: 0,
            }
        };
        let report = g.verify_jacobi(mode);
        if !report.passed() {
            problems.push(format!("{t_}: Jacobi fails at {:?}", report.first_failure));
        }
        if dim > 78 && report.triples_checked < 10_000 {
            problems.push(format!("{t_}: only {} triples", report.triples_checked));
        }
        if let Err((a, b)) = g.verify_structure_constants() {
            problems.push(format!("{t_}: N({a}, {b}) is not +-(p+1)"));
        }
    }
    let elapsed = t.elapsed();
    let ok = problems.is_empty() && elapsed < BUDGET_INFRA;
    verdict(1, ok, &format!("{problems:?} in {elapsed:.1?}"));
    assert!(ok);
}

#[test]
fn criterion_2_dn_suite() {
    let t = Instant::now();
    let cfg = Config::default();
    let mut bad = Vec::new();
    for n in 4..=8 {
        let claims = scenario_dn(n, &cfg);
        for id in failing(
            &claims,
            &[
                "dn.nilrad.dim",
                "dn.nilrad.abelian",
                "dn.decomp",
                "dn.expident",
                "dn.suborbit.dim",
                "dn.orbvar.dim",
                "dn.stab.dim",
            ],
        ) {
            bad.push(format!("D{n}:{id}"));
        }
    }
    let elapsed = t.elapsed();
    let ok = bad.is_empty() && elapsed < BUDGET_DN;
    verdict(2, ok, &format!("n=4..8 failing {bad:?} in {elapsed:.1?}"));
    assert!(ok);
}

#[test]
fn criterion_3_dn_oracle_cross_validation() {
    let mut details = Vec::new();
    let mut ok = true;
    for n in [4, 5] {
        let model = dn_matrix_model(n).unwrap();
        let cv = cross_validate(&model, 0, n as u64, MIN_CROSSVAL_SAMPLES).unwrap();
        let good = cv.samples >= MIN_CROSSVAL_SAMPLES
            && cv.agree == cv.samples
            && cv.members > 0
            && cv.members < cv.samples
            && cv.orbit_points > 0
            && cv.orbit_points_accepted == cv.orbit_points
            && cv.sums > 0
            && cv.sums_rejected == cv.sums;
        ok &= good;
        details.push(format!(
            "D{n}: agree {}/{}, members {}, orbit points {}/{}, sums rejected {}/{}",
            cv.agree,
            cv.samples,
            cv.members,
            cv.orbit_points_accepted,
            cv.orbit_points,
            cv.sums_rejected,
            cv.sums
        ));
    }
    verdict(3, ok, &details.join("; "));
    assert!(ok);
}

#[test]
fn criterion_4_e6_suite() {
    let t = Instant::now();
    let cfg = Config {
        samples: MIN_IOTA_SAMPLES,
        ..Config::default()
    };
    let claims = scenario_e6(&cfg);
    let bad = failing(
        &claims,
        &[
            "e6.nilrad.dim",
            "e6.nilrad.abelian",
            "e6.spin",
            "e6.decomp",
            "e6.expident.member",
            "e6.expident.projections",
            "e6.suborbit.dim",
            "e6.orbvar.dim",
            "e6.stab.profile",
            "e6.intertwiner",
            "e6.iota.membership",
        ],
    );
    let iota = claims.iter().find(|c| c.id == "e6.iota.membership");
    let enough = iota.is_some_and(|c| c.actual.as_u64() >= Some(MIN_IOTA_SAMPLES as u64));
    let elapsed = t.elapsed();
    let ok = bad.is_empty() && enough && elapsed < BUDGET_E6;
    verdict(4, ok, &format!("failing {bad:?} in {elapsed:.1?}"));
    assert!(ok);
}

#[test]
fn criterion_5_e7_suite() {
    let t = Instant::now();
    let claims = scenario_e7(&Config::default());
    let bad = failing(
        &claims,
        &[
            "e7.nilrad.dim",
            "e7.nilrad.abelian",
            "e7.decomp",
            "e7.minorb.dim",
            "e7.orbvar.dim",
            "e7.orbvar.half",
        ],
    );
    let elapsed = t.elapsed();
    let ok = bad.is_empty() && elapsed < BUDGET_E7;
    verdict(5, ok, &format!("failing {bad:?} in {elapsed:.1?}"));
    assert!(ok);
}

#[test]
fn criterion_6_prescription_audit() {
    let cfg = Config {
        check_prescriptions: true,
        samples: 10,
        ..Config::default()
    };
    let mut claims = scenario_dn(5, &cfg);
    claims.extend(scenario_e6(&cfg));
    let mut missing = Vec::new();
    for id in ["dn.prescription.phi1", "e6.prescription.phi1", "e6.hwroots"] {
        match claims.iter().find(|c| c.id == id) {
            Some(c) if c.status == Status::Reported && !c.actual.is_null() => {}
            _ => missing.push(id),
        }
    }
    let verdicts: Vec<String> = claims
        .iter()
        .filter(|c| c.id.ends_with(".phi1"))
        .map(|c| format!("{}={}", c.id, c.actual["verdict"]))
        .collect();
    let gating_ok = claims.iter().all(|c| c.status != Status::Fail);
    let ok = missing.is_empty() && gating_ok;
    verdict(6, ok, &format!("missing {missing:?}; {}", verdicts.join(", ")));
    assert!(ok);
}

#[test]
fn criterion_7_reproducibility() {
    let all: Vec<Scenario> = (4..=8)
        .map(Scenario::Dn)
        .chain([Scenario::E6, Scenario::E7])
        .collect();
    let cfg = Config {
        seed: 7,
        check_prescriptions: true,
        ..Config::default()
    };
    let a = serde_json::to_string(&run_scenarios(&all, &cfg).claims).unwrap();
    let b = serde_json::to_string(&run_scenarios(&all, &cfg).claims).unwrap();
    let identical = a == b;

    let t = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(["all", "--out"])
        .arg(std::env::temp_dir().join("lieverify-acceptance-all.json"))
        .status()
        .unwrap();
    let elapsed = t.elapsed();
    let ok = identical && status.code() == Some(0) && elapsed < BUDGET_ALL;
    verdict(
        7,
        ok,
        &format!(
            "identical claims {identical}, `verify all` exit {:?} in {elapsed:.1?}",
            status.code()
        ),
    );
    assert!(ok);
}
