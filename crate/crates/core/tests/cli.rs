use assert_cmd::Command;
use serde_json::Value;

fn qgv() -> Command {
    let mut c = Command::cargo_bin("qgv").unwrap();
    c.env_remove("QGV_SEED");
    c
}

fn json(out: &[u8]) -> Value {
    serde_json::from_slice(out).expect("valid json")
}

#[test]
fn list_json_has_every_entry() {
    let out = qgv().args(["list", "--format", "json"]).assert().success().get_output().stdout.clone();
    let v = json(&out);
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 31);
    assert_eq!(entries[0]["id"], "GOSPER_1");
    assert_eq!(entries[30]["id"], "PI_SERIES");
}

#[test]
fn eval_prints_exact_fractions() {
    qgv().args(["eval", "QGOSPER_1", "lhs", "--n", "0", "--s", "1/2", "--x", "3/5"]).assert().success().stdout("1/1\n");
    let lhs = qgv().args(["eval", "THM5", "lhs", "--n", "2", "--ell", "1", "--s", "2/7", "--x", "3/11"]).output().unwrap();
    let rhs = qgv().args(["eval", "THM5", "rhs", "--n", "2", "--ell", "1", "--s", "2/7", "--x", "3/11"]).output().unwrap();
    assert!(lhs.status.success());
    assert_eq!(lhs.stdout, rhs.stdout);
}

#[test]
fn eval_phi65_takes_b_and_c() {
    let args = ["--ell", "2", "--s", "1/3", "--x", "2/5", "--b", "3/7", "--c", "5/11"];
    let l = qgv().args(["eval", "PHI65", "lhs"]).args(args).output().unwrap();
    let r = qgv().args(["eval", "PHI65", "rhs"]).args(args).output().unwrap();
    assert!(l.status.success());
    assert_eq!(l.stdout, r.stdout);
}

#[test]
fn exit_codes() {
    let pole = qgv().args(["eval", "THM1", "rhs", "--n", "1", "--ell", "1", "--s", "1/2", "--x", "1/2"]).output().unwrap();
    assert_eq!(pole.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("pole"));
    qgv().args(["eval", "THM1", "lhs", "--n", "1", "--s", "1/2", "--x", "1/3"]).assert().code(64);
    qgv().args(["verify", "NOT_AN_ID"]).assert().code(64);
    qgv().args(["limits", "--chain", "BOGUS"]).assert().code(64);
    qgv().args(["verify", "GOSPER_1", "--trials", "1"]).env("QGV_SEED", "minus one").assert().code(64);
    qgv().args(["pi", "--precision", "128"]).assert().success();
}

#[test]
fn verify_report_schema_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        qgv()
            .args(["verify", "QGOSPER_2", "REL5", "--n-max", "2", "--ell-max", "2", "--trials", "4", "--seed", "11"])
            .args(["--format", "json", "--out"])
            .arg(&path)
            .assert()
            .success();
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("duration_ms");
        v
    };
    let a = run("a.json");
    assert_eq!(a, run("b.json"));
    assert_eq!(a["seed"], 11);
    assert_eq!(a["mode"], "sample");
    assert_eq!(a["summary"]["fail"], 0);
    let first = &a["results"][0];
    for key in ["id", "n", "ell", "k", "status", "trials", "counterexample"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn seed_env_overrides_flag() {
    let out = qgv()
        .args(["verify", "GOSPER_2", "--n-max", "1", "--trials", "1", "--seed", "3", "--format", "json"])
        .env("QGV_SEED", "42")
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(json(&out)["seed"], 42);
}

#[test]
fn mutation_is_caught_with_a_counterexample() {
    let out = qgv()
        .args(["verify", "QGOSPER_1", "--n-max", "2", "--trials", "3", "--mutation", "sign-flip", "--format", "json"])
        .assert()
        .code(2)
        .get_output()
        .stdout
        .clone();
    let v = json(&out);
    let fail = v["results"].as_array().unwrap().iter().find(|r| r["status"] == "fail").expect("a failing line");
    let ce = &fail["counterexample"];
    assert_ne!(ce["lhs"], ce["rhs"]);
    assert!(ce["s"].as_str().unwrap().contains('/'));
}

#[test]
fn limits_report_second_order_decay() {
    let out = qgv()
        .args(["limits", "--chain", "THM1:PROP3", "--format", "json"])
        .assert()
        .code(2)
        .get_output()
        .stdout
        .clone();
    let v = json(&out);
    let ratio = v[0]["lhs_ratios"][0].as_f64().unwrap();
    assert!(ratio > 95.0 && ratio < 105.0, "{ratio}");
    qgv().args(["limits", "--chain", "THM1:PROP3", "--window", "50,200"]).assert().success();
}
