//! Acceptance suite: every identity the library promises, checked at
//! full verification size with exact arithmetic and zero tolerance.
//! One pass/fail line per criterion (visible with `--nocapture`).

use rhombic::verify::{
    check_confluence, check_insertion, check_lah_counts, check_partition_identity,
    check_round_trips, check_stationarity, check_tiling_invariance, check_weight_preservation,
    check_worked_example, CriterionReport,
};

fn settle(number: u8, report: CriterionReport) {
    println!(
        "criterion {:02} ({}): {} — {}",
        number,
        report.name,
        if report.pass { "PASS" } else { "FAIL" },
        report.details
    );
    assert!(report.pass, "criterion {number} failed: {}", report.details);
}

#[test]
fn criterion_01_lah_counts() {
    settle(1, check_lah_counts(7));
}

#[test]
fn criterion_02_partition_identity() {
    settle(2, check_partition_identity(6));
}

#[test]
fn criterion_03_tiling_invariance() {
    settle(3, check_tiling_invariance(5));
}

#[test]
fn criterion_04_round_trips() {
    settle(4, check_round_trips(7, 6));
}

#[test]
fn criterion_05_weight_preservation() {
    settle(5, check_weight_preservation(7));
}

#[test]
fn criterion_06_stationarity() {
    settle(6, check_stationarity(5));
}

#[test]
fn criterion_07_insertion() {
    settle(7, check_insertion(7));
}

#[test]
fn criterion_08_worked_example() {
    settle(8, check_worked_example());
}

#[test]
fn criterion_09_confluence() {
    settle(9, check_confluence(5, 20));
}

// Criterion 10 (byte-identical `verify-all` reports across runs) drives
// the CLI binary; it lives in the cli crate's acceptance tests.
