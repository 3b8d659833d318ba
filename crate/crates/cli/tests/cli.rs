use assert_cmd::Command;

fn reality() -> Command {
    let mut cmd = Command::cargo_bin("reality").unwrap();
    cmd.env_remove("REALITY_BUDGET");
    cmd
}

fn stdout_of(args: &[&str]) -> String {
    let out = reality().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_text_row() {
    let out = stdout_of(&["analyze", "A7"]);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["A7", "2520", "9", "7", "7", "7", "0", "2"]);
}

#[test]
fn analyze_json_fields() {
    let out = stdout_of(&["analyze", "Q8", "--plesken", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["row"]["strongly_real"], 2);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    assert_eq!(v["characters"].as_array().unwrap().len(), 5);
    assert_eq!(v["flags"]["strongly_real_group"], false);
    assert_eq!(v["plesken"]["dim_formula"], 3);
    assert_eq!(v["plesken"]["semisimple_predicate"], true);
}

#[test]
fn chartable_modes() {
    let out = stdout_of(&["chartable", "S4"]);
    assert!(out
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["X2", "+1", "2", "2", "0", "0", "-1"]));
    let raw = stdout_of(&["chartable", "S4", "--raw-modp"]);
    assert!(raw.contains("values mod 13"));
    assert!(raw
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["X2", "+1", "2", "2", "0", "0", "12"]));
}

#[test]
fn count_subcommands() {
    assert_eq!(
        stdout_of(&["count", "gl", "2", "3"]),
        "GL(2,3): 8 classes, 6 real classes\n"
    );
    let an = stdout_of(&["count", "an", "14"]);
    assert!(an.starts_with("A14: 72 classes, 72 real classes, ambivalent: true"));
    let sl2 = stdout_of(&["count", "sl2", "5"]);
    assert!(sl2.starts_with("SL(2,5): 9 classes, 9 real, 2 strongly real"));
}

#[test]
fn verify_and_search() {
    let out = stdout_of(&["verify", "paper", "covers"]);
    assert!(out.contains("UNVERIFIED"));
    assert!(out.contains("0 failed"));
    let out = stdout_of(&["search", "order32"]);
    assert!(out.contains("all properties: true"));
    assert!(out.contains("0 not totally orthogonal"));
}

#[test]
fn exit_codes() {
    reality().args(["analyze", "B5"]).assert().code(2);
    reality().args(["analyze", "SL(2 5)"]).assert().code(2);
    reality().args(["verify", "paper", "tables"]).assert().code(2);
    reality().args(["count", "gl", "2", "6"]).assert().code(1);
    reality().args(["analyze", "C512"]).assert().code(3);
    reality()
        .args(["analyze", "S5"])
        .env("REALITY_BUDGET", "100")
        .assert()
        .code(3);
    reality()
        .args(["analyze", "S5"])
        .env("REALITY_BUDGET", "lots")
        .assert()
        .code(2);
    reality()
        .args(["analyze", "S5"])
        .env("REALITY_BUDGET", "120")
        .assert()
        .success();
}

#[test]
fn errors_go_to_stderr() {
    let out = reality().args(["analyze", "A"]).output().unwrap();
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 1"));
}
