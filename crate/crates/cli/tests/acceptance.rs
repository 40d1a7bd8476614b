//! The twelve acceptance criteria, one test each, at their stated tolerances.

use ising_geometry_cli::verify::{self, Check, Report, Status, Tolerances};

fn assert_criterion(k: u8, checks: Vec<Check>) {
    assert!(!checks.is_empty(), "criterion {k} produced no checks");
    let report = Report::new(checks);
    println!("{}", report.summary_lines()[usize::from(k) - 1]);
    for c in &report.checks {
        println!(
            "  [{}] {}: measured {:?}, expected {:?}, tolerance {:?}{}",
            c.status.label(),
            c.name,
            c.measured,
            c.expected,
            c.tolerance,
            c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
        );
    }
    let failed: Vec<&str> = report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
    assert!(failed.is_empty(), "criterion {k} failed: {failed:?}");
}

fn run(k: u8) {
    let tol = Tolerances::default();
    assert_criterion(k, verify::CRITERIA[usize::from(k) - 1](&tol));
}

#[test]
fn criterion_01_representation_equivalence() {
    run(1);
}

#[test]
fn criterion_02_metric_oracle() {
    run(2);
}

#[test]
fn criterion_03_curvature() {
    run(3);
}

#[test]
fn criterion_04_gauss_bonnet() {
    run(4);
}

#[test]
fn criterion_05_phases() {
    run(5);
}

#[test]
fn criterion_06_aa_phase() {
    run(6);
}

#[test]
fn criterion_07_speed_identity() {
    run(7);
}

#[test]
fn criterion_08_brachistochrone() {
    run(8);
}

#[test]
fn criterion_09_concurrence() {
    run(9);
}

#[test]
fn criterion_10_concurrence_chart() {
    run(10);
}

#[test]
fn criterion_11_documented_discrepancies() {
    let checks = verify::criterion_11(&Tolerances::default());
    let documented = checks.iter().filter(|c| c.status == Status::DiscrepancyDocumented).count();
    assert!(documented >= 3, "expected the three known discrepancies to be flagged");
    for topic in ["AA-curvature", "sphere radius", "odd N"] {
        assert!(
            checks.iter().any(|c| c.status == Status::DiscrepancyDocumented && c.name.contains(topic)),
            "no documented discrepancy for {topic}"
        );
    }
    assert_criterion(11, checks);
}

#[test]
fn criterion_12_figures_and_suite_time() {
    // the full suite supplies the wall-time check
    let report = verify::run_all(&Tolerances::default());
    let checks: Vec<Check> = report.checks.into_iter().filter(|c| c.criterion == 12).collect();
    assert!(checks.iter().any(|c| c.name.contains("wall time")));
    assert_criterion(12, checks);
}
