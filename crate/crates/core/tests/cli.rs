use std::process::{Command, Output};

use kronbrist::harness::Report;

fn kronbrist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronbrist")).args(args).output().expect("run kronbrist")
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn passing_scenario_exits_zero() {
    let out = kronbrist(&["cover-equalities"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.starts_with("scenario cover-equalities"));
    assert!(!table.contains("FAIL"));
}

#[test]
fn failing_check_exits_one() {
    let out = kronbrist(&["main-theorem-b-bristle-orbits", "--q", "2", "--tmax", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!report.pass);
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["bristles B with tau B not generated by B0"]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["no-such-scenario"][..],
        &["main-theorem-a", "--q", "4"],
        &["main-theorem-a", "--q", "5", "--rational"],
        &["optimality-I3", "--rational"],
        &["n2-generation", "--n", "3"],
        &["main-theorem-a", "--n", "x"],
        &["main-theorem-a", "--module", "/nonexistent.kron"],
        &[],
    ] {
        let out = kronbrist(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_module_file_exits_two_with_position() {
    let dir = std::env::temp_dir().join(format!("kronbrist-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.kron");
    std::fs::write(&path, "kron n=3 field=gf(5) dims=1,1\nalpha 1\n7\n").unwrap();
    let out = kronbrist(&["main-theorem-b-bristle-orbits", "--module", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = ["saturated-faithful", "--samples", "40", "--format", "json"];
    let first = kronbrist(&args);
    let second = kronbrist(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report: Report = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report.config.samples, 40);
    assert!(report.elapsed_ms.is_none());

    let other_seed = kronbrist(&["saturated-faithful", "--samples", "40", "--format", "json", "--seed", "9"]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn timing_is_opt_in() {
    let out = kronbrist(&["n2-classification", "--format", "json", "--timing"]);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.elapsed_ms.is_some());
}

#[test]
fn module_file_sets_field_and_arrows() {
    let out =
        kronbrist(&["main-theorem-b-bristle-orbits", "--module", &fixture("zigzag_gf2.kron"), "--format", "json"]);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.config.field, "gf(2)");
    assert_eq!(report.config.n, 3);
    assert!(report.config.module.is_some());
    let conflicting =
        kronbrist(&["main-theorem-b-bristle-orbits", "--module", &fixture("zigzag_gf2.kron"), "--q", "5"]);
    assert_eq!(conflicting.status.code(), Some(2));
}

#[test]
fn report_written_to_file() {
    let path = std::env::temp_dir().join(format!("kronbrist-report-{}.json", std::process::id()));
    let out = kronbrist(&["mu-ext", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.scenario, "mu-ext");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn help_lists_every_scenario() {
    let out = kronbrist(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let help = String::from_utf8(out.stdout).unwrap();
    for name in ["main-theorem-a", "optimality-I3", "cover-not-bristled", "indecomposable-generator"] {
        assert!(help.contains(name), "{name}");
    }
}
