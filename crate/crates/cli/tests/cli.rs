//! End-to-end checks of the command line surface: exit codes, wire
//! formats and renders.

use std::path::Path;
use std::process::{Command, Output};

fn rhombic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhombic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = rhombic(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn write(path: &Path, content: &str) {
    std::fs::write(path, content).expect("write temp file");
}

#[test]
fn weight_of_de() {
    let out = stdout_of(&["weight", "--word", "DE"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    // αβq + αβ² + α²β
    assert_eq!(
        value,
        serde_json::json!([
            {"c": "1/1", "ea": 1, "eb": 1, "eq": 1},
            {"c": "1/1", "ea": 1, "eb": 2, "eq": 0},
            {"c": "1/1", "ea": 2, "eb": 1, "eq": 0},
        ])
    );
}

#[test]
fn biject_round_trips_the_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.json");
    let t_path = dir.path().join("t.json");
    write(&a_path, "[[2,10,12,7],[5,9,1,8,6],[3,11,4]]");
    stdout_of(&[
        "biject",
        "a2t",
        "--in",
        a_path.to_str().unwrap(),
        "--out",
        t_path.to_str().unwrap(),
    ]);
    let back = stdout_of(&["biject", "t2a", "--in", t_path.to_str().unwrap()]);
    assert_eq!(back.trim(), "[[2,10,12,7],[5,9,1,8,6],[3,11,4]]");

    let tableau: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&t_path).unwrap()).unwrap();
    assert_eq!(tableau["word"], "DDEADEEEADE");
    assert_eq!(tableau["tiles"].as_array().unwrap().len(), 25);
}

#[test]
fn insert_reproduces_the_worked_insertion() {
    let out = stdout_of(&[
        "insert",
        "--values",
        "3,5,2,6,1,9,2,1",
        "--r",
        "2",
        "--green",
        "3,6",
    ]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        value["assemblee"],
        serde_json::json!([[7, 10, 5, 8], [9, 2, 11, 6], [3, 1, 4]])
    );
    assert_eq!(
        value["rho"],
        serde_json::json!([[7, 11, 5, 8], [9, 2, 10, 6], [1, 3, 4]])
    );
    assert_eq!(
        value["weight"],
        serde_json::json!([{"c": "1/1", "ea": -2, "eb": -2, "eq": 0}])
    );
}

#[test]
fn verify_partition_passes_and_prints_both_polynomials() {
    let out = stdout_of(&["verify-partition", "--n", "4", "--r", "2"]);
    assert!(out.contains("partition(q=1):"));
    assert!(out.contains("closed form:"));
    assert!(out.trim_end().ends_with("PASS"));
}

#[test]
fn verify_asep_emits_the_report() {
    let out = stdout_of(&[
        "verify-asep",
        "--n",
        "3",
        "--r",
        "1",
        "--alpha",
        "2/7",
        "--beta",
        "3/5",
        "--q",
        "1/3",
    ]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["states"].as_array().unwrap().len(), 12);
    for state in value["states"].as_array().unwrap() {
        assert_eq!(state["match"], true);
        assert_eq!(state["pi"], state["tableau_ratio"]);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(rhombic(&["weight"]).status.code(), Some(2));
    assert_eq!(rhombic(&["weight", "--word", "DAX"]).status.code(), Some(2));
    assert_eq!(rhombic(&["no-such-command"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    write(&bad, "{not json");
    assert_eq!(
        rhombic(&["render", "--in", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn render_single_cell_tableau() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    write(
        &path,
        r#"{"word":"DE","tiles":[{"kind":"square","anchor":[0,0]}],"filling":["q"]}"#,
    );
    let svg = stdout_of(&["render", "--in", path.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert_eq!(svg.matches(">q</text>").count(), 1);
    let ascii = stdout_of(&[
        "render",
        "--in",
        path.to_str().unwrap(),
        "--format",
        "ascii",
    ]);
    assert!(ascii.contains("word: DE"));
    assert!(ascii.lines().any(|l| l.trim() == "q"));
}

#[test]
fn render_counts_glyphs_on_a_large_tableau() {
    // The fusion image of the worked example on a tiling realizing the
    // 15-q split: 25 tiles, 3 α, 2 β, 15 q glyphs.
    use rhombic::assemblees::{word_of_assemblee, Assemblee};
    use rhombic::bijections::fusion_exchange;
    use rhombic::rat::Fill;
    use rhombic::shapes::{apply_flip, build_diagram, canonical_tiling, flippable_centers};

    let a = Assemblee::from_blocks(vec![
        vec![2, 10, 12, 7],
        vec![5, 9, 1, 8, 6],
        vec![3, 11, 4],
    ])
    .unwrap();
    let diagram = build_diagram(&word_of_assemblee(&a));
    let mut queue = vec![canonical_tiling(&diagram)];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(queue[0].sorted_tiles());
    let mut found = None;
    while let Some(t) = queue.pop() {
        let lt = fusion_exchange(&a, &t).unwrap();
        if lt.tableau.count_fill(Fill::Q) == 15 {
            found = Some(lt.tableau);
            break;
        }
        for c in flippable_centers(&t) {
            let f = apply_flip(&t, c).unwrap();
            if seen.insert(f.sorted_tiles()) {
                queue.push(f);
            }
        }
    }
    let tableau = found.expect("a 15-q tiling exists");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    write(&path, &tableau.to_json().to_string());
    let svg = stdout_of(&["render", "--in", path.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(svg.matches("<polygon").count(), 25);
    assert_eq!(svg.matches(">α</text>").count(), 3);
    assert_eq!(svg.matches(">β</text>").count(), 2);
    assert_eq!(svg.matches(">q</text>").count(), 15);
}

#[test]
fn render_assemblee_block_boxes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    write(&path, "[[1,2]]");
    let svg = stdout_of(&["render", "--in", path.to_str().unwrap()]);
    assert_eq!(svg.matches("<rect").count(), 1);
    assert!(svg.contains(">1 2</text>"));
    let ascii = stdout_of(&[
        "render",
        "--in",
        path.to_str().unwrap(),
        "--format",
        "ascii",
    ]);
    assert_eq!(ascii.trim(), "[1 2]");
}

#[test]
fn render_trace_shows_labels() {
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.json");
    let trace_path = dir.path().join("trace.json");
    write(&a_path, "[[1,3,2]]");
    stdout_of(&[
        "biject",
        "a2t",
        "--in",
        a_path.to_str().unwrap(),
        "--trace",
        "--out",
        trace_path.to_str().unwrap(),
    ]);
    let svg = stdout_of(&["render", "--in", trace_path.to_str().unwrap()]);
    assert!(svg.contains("(1)") && svg.contains("(3)"));
}

#[test]
fn emitted_json_round_trips_through_render() {
    let dir = tempfile::tempdir().unwrap();
    let rats = dir.path().join("rats.json");
    stdout_of(&[
        "enumerate-rat",
        "--word",
        "DDEA",
        "--out",
        rats.to_str().unwrap(),
    ]);
    let listing: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&rats).unwrap()).unwrap();
    for tableau in listing["tableaux"].as_array().unwrap() {
        let one = dir.path().join("one.json");
        write(&one, &tableau.to_string());
        let echoed = stdout_of(&["render", "--in", one.to_str().unwrap(), "--format", "json"]);
        let parsed: serde_json::Value = serde_json::from_str(&echoed).unwrap();
        assert_eq!(&parsed, tableau);
    }
}

#[test]
fn enumerate_assemblees_counts() {
    let out = stdout_of(&["enumerate-assemblees", "--n", "3", "--r", "2"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["count"], 6);
}

#[test]
fn partition_is_identical_across_jobs() {
    let sequential = stdout_of(&["partition", "--n", "4", "--r", "1"]);
    let parallel = stdout_of(&["partition", "--n", "4", "--r", "1", "--jobs", "3"]);
    assert_eq!(sequential, parallel);
}
