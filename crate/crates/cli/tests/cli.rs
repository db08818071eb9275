use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(name: &str) -> Command {
    Command::new(match name {
        "repro" => env!("CARGO_BIN_EXE_repro"),
        "lattice" => env!("CARGO_BIN_EXE_lattice"),
        _ => env!("CARGO_BIN_EXE_gb"),
    })
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fourfold-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_shows_every_scene() {
    let o = bin("repro").arg("list").output().unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 15);
    assert!(text.contains("sing-QW") && text.contains("(long)"));
}

#[test]
fn run_writes_report() {
    let path = scratch("counts.json");
    let o = bin("repro").args(["run", "lattice-counts", "--report"]).arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for field in ["scene", "prime", "seed", "values", "golden", "wall_ms"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["prime"], 67);
    assert_eq!(v["values"]["cubics_count"], 17280);
    let g = &v["golden"][0];
    for field in ["key", "expected", "actual", "pass", "anchor"] {
        assert!(g.get(field).is_some(), "golden entry missing {field}");
    }
}

#[test]
fn filtered_run_and_exit_codes() {
    let o = bin("repro").args(["all", "--filter", "lattice-*"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3 passed, 0 failed, 0 errors"));

    let o = bin("repro").args(["run", "no-such-scene"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));

    // A golden table expecting a wrong count makes the run fail with 1.
    let table = fourfold::GoldenTable::builtin();
    let mut v = serde_json::to_value(&table).unwrap();
    v["scenes"]["lattice-counts"][0]["expected"] = serde_json::json!(239);
    let path = scratch("golden.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let o = bin("repro").args(["run", "lattice-counts", "--golden"]).arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed = report["golden"].as_array().unwrap().iter().find(|g| g["pass"] == false).unwrap();
    assert_eq!(failed["expected"], 239);
    assert_eq!(failed["actual"], 240);
}

#[test]
fn lattice_enum_writes_all_classes() {
    let path = scratch("cubics.txt");
    let o = bin("lattice").args(["enum", "cubics", "--out"]).arg(&path).output().unwrap();
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 17280);
    assert!(rows.iter().all(|r| r.split_whitespace().count() == 9));
    let o = bin("lattice").args(["enum", "quartics"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gb_compute_orders() {
    let path = scratch("cubic.txt");
    std::fs::write(&path, "ring p=67 vars=4\n# twisted cubic\nideal c = x0*x2 - x1^2; x1*x3 - x2^2; x0*x3 - x1*x2\n").unwrap();
    let o = bin("gb").args(["compute", "--order", "grevlex", "--input"]).arg(&path).output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("ideal c_gb = "));
    assert_eq!(stdout(&o).matches(';').count(), 2);

    let o = bin("gb").args(["compute", "--order", "elim:1", "--input"]).arg(&path).output().unwrap();
    assert!(o.status.success());
    // Projecting from the point (1:0:0:0) maps the curve onto a conic.
    let text = stdout(&o);
    let elim = text.split("ideal c_elim = ").nth(1).unwrap().trim();
    assert!(!elim.contains("x0"));
    assert_eq!(elim, "x2^2 - x1*x3");

    std::fs::write(&path, "ring p=67 vars=2\nideal bad = x0 + + x1\n").unwrap();
    let o = bin("gb").args(["compute", "--input"]).arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
