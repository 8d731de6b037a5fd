use assert_cmd::Command;
use predicates::prelude::*;

fn parkfn() -> Command {
    Command::cargo_bin("parkfn").unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn count_published_cells() {
    parkfn()
        .args(["count", "ELL_IPF", "-n7", "-l2"])
        .assert()
        .success()
        .stdout("109438\n");
    parkfn()
        .args(["count", "ND_ELL_FUBINI", "-n11", "-l2"])
        .assert()
        .success()
        .stdout("274\n");
}

#[test]
fn count_all_methods_agree() {
    parkfn()
        .args(["count", "UIRPF", "-n2", "-m4", "--method", "all"])
        .assert()
        .success()
        .stdout("closed_form 15\nrecursion 15\noracle 15\n");
}

#[test]
fn count_json_shape() {
    let out = parkfn()
        .args(["--json", "count", "PF", "-n6"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(doc["counts"][0], "16807");
    assert_eq!(doc["agree"], true);
    assert!(doc["elapsed_ms"].is_u64());
}

#[test]
fn enumerate_is_lexicographic() {
    parkfn()
        .args(["enumerate", "PF", "-n2", "-m2"])
        .assert()
        .success()
        .stdout("(1,1)\n(1,2)\n(2,1)\n");
}

#[test]
fn check_members_and_non_members() {
    parkfn()
        .args(["check", "FUBINI", "(2,2,1)"])
        .assert()
        .success()
        .stdout("true\n");
    parkfn()
        .args(["check", "PF", "(2,3,3,3)", "-m4"])
        .assert()
        .success()
        .stdout("false\n");
    parkfn()
        .args(["check", "IPF_PAIR", "(1,2,2)", "--tolerance", "(2,3,3)"])
        .assert()
        .success()
        .stdout("true\n");
}

#[test]
fn map_examples() {
    parkfn()
        .args(["map", "uirpf-to-bpa", "(5,1,3,8,3,8,9)", "-m10"])
        .assert()
        .success()
        .stdout("(2)|(3 5)(1)||(4 6 7)\n");
    parkfn()
        .args(["map", "dyck-to-prefs", "NENNEEENENEEE", "-n5", "-m8"])
        .assert()
        .success()
        .stdout("(1,2,2,5,6)\n");
    parkfn()
        .args(["map", "prefs-to-dyck", "(1,2,2,5,6)", "-m8"])
        .assert()
        .success()
        .stdout("NENNEEENENEEE\n");
    parkfn()
        .args(["map", "fub-to-pa", "(1,1,3)"])
        .assert()
        .success()
        .stdout("(1 2)(3)\n");
    parkfn()
        .args(["map", "pa-to-fub", "(3)(1)(2)"])
        .assert()
        .success()
        .stdout("(2,3,1)\n");
    parkfn()
        .args(["map", "bpa-to-uirpf", "(2)|(3 5)(1)||(4)"])
        .assert()
        .success()
        .stdout("(5,1,3,8,3)\n");
}

#[test]
fn map_precondition_failure_exits_2() {
    parkfn()
        .args(["map", "prefs-to-dyck", "(2,1)", "-m2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("nondecreasing"));
}

#[test]
fn tables_match_golden_files() {
    parkfn()
        .args(["table", "table1"])
        .assert()
        .success()
        .stdout(golden("table1.csv"));
    parkfn()
        .args(["table", "table2"])
        .assert()
        .success()
        .stdout(golden("table2.csv"));
}

#[test]
fn oeis_matches_reference_files() {
    for id in [
        "A000670", "A080936", "A365623", "A000045", "A000073", "A000078", "A001591", "A000383",
        "A122189",
    ] {
        parkfn()
            .args(["oeis", id])
            .assert()
            .success()
            .stdout(golden(&format!("{id}.txt")));
    }
}

#[test]
fn verify_single_identity_passes() {
    parkfn()
        .args(["verify", "--identity", "fubini-closed-form-vs-oracle"])
        .assert()
        .success()
        .stdout(predicate::str::contains("0 failures"));
}

#[test]
fn verify_negative_selftest_exits_1() {
    parkfn()
        .args(["verify", "--identity", "negative-selftest"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("FAIL negative-selftest"));
}

#[test]
fn verify_writes_report() {
    let dir = std::env::temp_dir().join("parkfn-report-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    parkfn()
        .args([
            "verify",
            "--identity",
            "fubini-closed-form-vs-oracle",
            "--report",
        ])
        .arg(&path)
        .assert()
        .success();
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["records"][0]["status"], "pass");
    assert_eq!(
        doc["records"][0]["identity"],
        "fubini-closed-form-vs-oracle"
    );
}

#[test]
fn usage_errors_exit_2() {
    parkfn()
        .args(["count", "NO_SUCH_FAMILY", "-n2"])
        .assert()
        .code(2);
    parkfn()
        .args(["count", "ELL_IPF", "-n2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("requires -l"));
    parkfn().args(["table", "table9"]).assert().code(2);
    parkfn()
        .args(["check", "PF", "(1,x)"])
        .assert()
        .code(2);
    parkfn().args(["oeis", "A999999"]).assert().code(2);
}

#[test]
fn scale_cap_exits_3() {
    parkfn()
        .env("PARKFN_CAP", "10")
        .args(["count", "PF", "-n5", "--method", "oracle"])
        .assert()
        .code(3)
        .stderr(predicate::str::contains("cap"));
}

#[test]
fn config_file_sets_cap() {
    let dir = std::env::temp_dir().join("parkfn-config-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("low-cap.toml");
    std::fs::write(&path, "cap = 10\n").unwrap();
    parkfn()
        .arg("--config")
        .arg(&path)
        .args(["count", "PF", "-n5", "--method", "oracle"])
        .assert()
        .code(3);
    // the environment variable overrides the file
    parkfn()
        .arg("--config")
        .arg(&path)
        .env("PARKFN_CAP", "1000000")
        .args(["count", "PF", "-n5", "--method", "oracle"])
        .assert()
        .success()
        .stdout("1296\n");
}

#[test]
fn deterministic_output() {
    let run = || {
        parkfn()
            .args(["enumerate", "ND_ELL_IPF", "-n4", "-m6", "-l1"])
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    assert_eq!(run(), run());
}
