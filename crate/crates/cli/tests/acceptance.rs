//! Acceptance criterion 10: `verify-all --max-n 5` must emit
//! byte-identical reports across runs (and pass).

use std::process::Command;

#[test]
fn criterion_10_determinism() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_rhombic"))
            .args(["verify-all", "--max-n", "5"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "verify-all failed");
    assert!(second.status.success(), "verify-all failed on the rerun");
    assert_eq!(
        first.stdout, second.stdout,
        "verify-all output differs between runs"
    );
    assert!(first.stderr.is_empty());
    println!(
        "criterion 10 (determinism): PASS — {} bytes, byte-identical across two runs",
        first.stdout.len()
    );
}
