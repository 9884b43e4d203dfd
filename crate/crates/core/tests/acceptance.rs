//! The acceptance suite: one test per named check, each printing a single
//! `<check-id>: PASS|FAIL` line and asserting the check's headline facts
//! and, where pinned, its wall-clock budget.
//!
//! Checks are serialized through a global lock so that the time budgets
//! measure the check alone rather than scheduler contention.

use jordanlab_core::checks::{run_check, CheckParams, Report, Status};
use std::sync::Mutex;
use std::time::Duration;

static GATE: Mutex<()> = Mutex::new(());

fn run(id: &str) -> Report {
    let _guard = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    let report = run_check(id, &CheckParams::default()).expect("known check id");
    println!(
        "{}: {}",
        report.check_id,
        if report.status == Status::Pass {
            "PASS"
        } else {
            "FAIL"
        }
    );
    assert_eq!(
        report.status,
        Status::Pass,
        "{id} failed: {}",
        report.details
    );
    report
}

#[test]
fn four_atoms() {
    let report = run("four-atoms");
    assert_eq!(report.details["dim"], 27);
    assert!(
        report.elapsed < Duration::from_secs(10),
        "four-atoms took {:?}, budget is 10s",
        report.elapsed
    );
}

#[test]
fn glennie_albert() {
    let report = run("glennie-albert");
    assert_eq!(report.details["g8"]["value_nonzero"], true);
    assert_eq!(report.details["g9"]["value_nonzero"], true);
    assert_eq!(report.seed, 0);
    assert!(
        report.elapsed < Duration::from_secs(30),
        "glennie-albert took {:?}, budget is 30s",
        report.elapsed
    );
}

#[test]
fn glennie_special() {
    let report = run("glennie-special");
    let algebras = report.details["algebras"].as_array().unwrap();
    assert_eq!(algebras.len(), 3);
    for entry in algebras {
        assert_eq!(entry["triples"], 50);
        assert_eq!(entry["g8_zero"], true);
        assert_eq!(entry["g9_zero"], true);
        if entry["algebra"].as_str().unwrap().starts_with("mat_sa") {
            assert_eq!(entry["sandwich_crosscheck"], true);
        }
    }
}

#[test]
fn peirce() {
    let report = run("peirce");
    assert_eq!(report.details["sum"], 27);
    let dims = &report.details["component_dims"];
    for (key, expected) in [("00", 1), ("11", 1), ("22", 1), ("01", 8), ("02", 8), ("12", 8)] {
        assert_eq!(dims[key], expected, "component {key}");
    }
    assert!(
        report.elapsed < Duration::from_secs(5),
        "peirce took {:?}, budget is 5s",
        report.elapsed
    );
}

#[test]
fn three_projections_proper() {
    let report = run("three-projections-proper");
    assert_eq!(report.details["projection_triples"], 25);
    assert_eq!(report.details["apq_triples"], 25);
    assert!(report.details["max_dim_projection_triples"].as_u64().unwrap() < 27);
    assert!(report.details["max_dim_apq_triples"].as_u64().unwrap() < 27);
}

#[test]
fn two_projections() {
    let report = run("two-projections");
    assert_eq!(report.details["named_points_exact"], true);
    assert_eq!(report.details["grid_points"], 1001);
    assert!(report.details["max_grid_deviation"].as_f64().unwrap() <= 1e-12);
    assert_eq!(report.details["random_elements"], 100);
    assert_eq!(report.details["endpoints_diagonal_exact"], true);
}

#[test]
fn linearization() {
    let report = run("linearization");
    let cases = report.details["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 3);
    for case in cases {
        assert_eq!(case["substitution_identity"], true);
    }
}

#[test]
fn left_regular() {
    let report = run("left-regular");
    assert!(report.details["monomials_checked"].as_u64().unwrap() > 0);
    assert_eq!(report.details["top_components_match"], true);
}

#[test]
fn macdonald_instance() {
    let report = run("macdonald-instance");
    assert_eq!(report.details["instances"], 25);
    assert_eq!(report.details["all_zero"], true);
}

#[test]
fn uxef() {
    let report = run("uxef");
    assert_eq!(report.details["samples"], 25);
    assert_eq!(report.details["decomposition_exact"], true);
}

#[test]
fn shirshov_cohn_desk() {
    let report = run("shirshov-cohn-desk");
    assert_eq!(report.details["pairs"], 10);
    assert_eq!(report.details["triples_per_pair"], 5);
    assert_eq!(report.details["g8_zero_on_all"], true);
}
