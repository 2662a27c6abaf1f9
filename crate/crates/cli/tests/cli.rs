use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn vpower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vpower"))
        .args(args)
        .env_remove("VPOWER_THREADS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn fractions(report: &Value, index: &str) -> Vec<String> {
    report["indices"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["index"] == index)
        .unwrap()["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["fraction"].as_str().unwrap().to_owned())
        .collect()
}

#[test]
fn shareholder_example() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "g.json",
        r#"{"quota": "1/2", "weights": ["0.42", "0.40", "0.09", "0.09"]}"#,
    );
    let o = vpower(&["compute", &file, "--index", "all", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sixths = ["1/2", "1/6", "1/6", "1/6"];
    assert_eq!(fractions(&report, "banzhaf"), sixths);
    assert_eq!(fractions(&report, "shapley-shubik"), sixths);
    assert_eq!(
        fractions(&report, "nucleolus"),
        ["2/5", "1/5", "1/5", "1/5"]
    );
    assert_eq!(report["delta"]["fraction"], "21/50");
    assert_eq!(report["lambda"]["fraction"], "14/3");
    assert_eq!(report["indices"][0]["l1"]["fraction"], "7/15");
}

#[test]
fn emitted_game_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "g.json",
        r#"{"quota": "0.6", "weights": ["0.3", "0.25", "0.25", "0.2"]}"#,
    );
    let first: Value =
        serde_json::from_str(&stdout(&vpower(&["compute", &file, "--format", "json"]))).unwrap();
    let again = write(dir.path(), "again.json", &first["game"].to_string());
    let second: Value =
        serde_json::from_str(&stdout(&vpower(&["compute", &again, "--format", "json"]))).unwrap();
    assert_eq!(first["indices"], second["indices"]);
    assert_eq!(first["game"], second["game"]);
}

#[test]
fn classes_and_weights_forms_agree() {
    let dir = tempfile::tempdir().unwrap();
    let n = 11;
    let classes = write(
        dir.path(),
        "classes.json",
        &format!(
            r#"{{"quota": "{}", "classes": [["{}", 1], ["1", {}]]}}"#,
            n * n * n + n * n,
            2 * n * n,
            2 * n * n * n
        ),
    );
    let mut weights = vec![format!("\"{}\"", 2 * n * n)];
    weights.extend(std::iter::repeat("\"1\"".to_owned()).take(2 * n * n * n));
    let expanded = write(
        dir.path(),
        "weights.json",
        &format!(
            r#"{{"quota": "{}", "weights": [{}]}}"#,
            n * n * n + n * n,
            weights.join(",")
        ),
    );
    let run = |f: &str| {
        let o = vpower(&["compute", f, "--index", "banzhaf", "--format", "csv"]);
        assert_eq!(code(&o), 0);
        // drop the class column, which numbers classes differently
        stdout(&o)
            .lines()
            .map(|l| {
                let cols: Vec<&str> = l.split(',').collect();
                format!(
                    "{},{},{},{},{}",
                    cols[0], cols[1], cols[3], cols[4], cols[5]
                )
            })
            .collect::<Vec<_>>()
    };
    let a = run(&classes);
    assert_eq!(a.len(), 1 + 2663 + 2);
    assert_eq!(a, run(&expanded));
}

#[test]
fn bad_input_and_caps() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&vpower(&["compute", "/nonexistent/game.json"])), 2);
    let broken = write(dir.path(), "broken.json", "{ not json");
    assert_eq!(code(&vpower(&["compute", &broken])), 2);
    let negative = write(
        dir.path(),
        "neg.json",
        r#"{"quota": "1", "weights": ["-1", "3"]}"#,
    );
    assert_eq!(code(&vpower(&["compute", &negative])), 2);
    let both = write(
        dir.path(),
        "both.json",
        r#"{"quota": "1", "weights": ["1"], "classes": [["1", 1]]}"#,
    );
    assert_eq!(code(&vpower(&["compute", &both])), 2);
    let big = write(
        dir.path(),
        "big.json",
        r#"{"quota": "7", "classes": [["1", 13]]}"#,
    );
    let o = vpower(&["compute", &big, "--index", "nucleolus"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("at most 12"));
    assert_eq!(code(&vpower(&["compute", &big, "--index", "banzhaf"])), 0);
    assert_eq!(code(&vpower(&["compute", &big, "--index", "bogus"])), 2);
}

#[test]
fn family_verdicts() {
    let o = vpower(&["family", "prop1", "--n", "11"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches("PASS").count(), 7);
    let o = vpower(&["family", "--format", "json", "prop2", "--n", "11"]);
    assert_eq!(code(&o), 0);
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["players"], 2685);
    let o = vpower(&[
        "family", "--format", "json", "vnq", "--n", "2", "--q", "1/2",
    ]);
    assert_eq!(code(&o), 0);
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["swing_sums"]["printed_weight2"], "2");
    assert_eq!(report["swing_sums"]["counted_weight2"], "4");
    assert_eq!(code(&vpower(&["family", "prop1", "--n", "1"])), 2);
    assert_eq!(
        code(&vpower(&["family", "vnq", "--n", "3", "--q", "3/2"])),
        2
    );
    assert_eq!(
        code(&vpower(&["family", "vnq", "--n", "3", "--q", "half"])),
        2
    );
}

#[test]
fn fcurve_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.csv");
    let out = out.to_str().unwrap();
    let o = vpower(&[
        "fcurve",
        "--n",
        "200",
        "--grid",
        "0.5:1.0:0.05",
        "--out",
        out,
    ]);
    assert_eq!(code(&o), 0);
    let summary = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(summary.contains("duality=holds"));
    assert!(summary.contains("nondecreasing_on_upper_half=true"));
    assert!(summary.contains("q<=g(q): holds g(q)<=1.07q: holds (over 11 points"));
    let first = std::fs::read(out).unwrap();
    let text = String::from_utf8(first.clone()).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "q,quota,f_frac,f_dec,cand_cubic,cand_entropy,g"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[0][0], "0.5");
    assert_eq!(rows[10][0..4], ["1", "600", "1/3", "0.333333333333"]);
    let f: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(f.windows(2).all(|p| p[0] <= p[1]));

    vpower(&[
        "fcurve",
        "--n",
        "200",
        "--grid",
        "0.5:1.0:0.05",
        "--out",
        out,
    ]);
    assert_eq!(std::fs::read(out).unwrap(), first);

    let o = vpower(&[
        "fcurve",
        "--n",
        "10",
        "--grid",
        "0:1:0.5",
        "--out",
        "/nonexistent/dir/f.csv",
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(
        code(&vpower(&["fcurve", "--n", "10", "--grid", "0.5:1.5:0.5"])),
        2
    );
}

#[test]
fn scans_are_deterministic() {
    let args = [
        "scan",
        "ssi",
        "--samples",
        "40",
        "--seed",
        "7",
        "--nmax",
        "8",
        "--family-n",
        "5",
    ];
    let a = vpower(&args);
    assert_eq!(code(&a), 0);
    let report: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["seed"], 7);
    assert!(report["violations"].as_array().unwrap().is_empty());
    assert!(report["max"]["game"]["classes"].is_array());
    let b = Command::new(env!("CARGO_BIN_EXE_vpower"))
        .args(args)
        .env("VPOWER_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);

    let o = vpower(&[
        "scan",
        "bzi",
        "--samples",
        "15",
        "--seed",
        "3",
        "--family-n",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let uniform: Vec<&Value> = report["samples"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["label"].as_str().unwrap().starts_with("uniform"))
        .collect();
    assert!(!uniform.is_empty());
    assert!(uniform.iter().all(|s| s["r"]["fraction"] == "0"));
}

#[test]
fn scan_and_thread_errors() {
    assert_eq!(code(&vpower(&["scan", "ssi", "--samples", "0"])), 2);
    assert_eq!(
        code(&vpower(&["scan", "ssi", "--nmin", "5", "--nmax", "3"])),
        2
    );
    assert_eq!(
        code(&vpower(&[
            "scan",
            "ssi",
            "--q-grid",
            "0:1:0.5",
            "--samples",
            "3"
        ])),
        2
    );
    assert_eq!(
        code(&vpower(&["scan", "bzi", "--q-grid", "0.1:0.2:0.1"])),
        2
    );
    assert_eq!(
        code(&vpower(&["scan", "ssi", "--nmax", "30", "--samples", "2"])),
        3
    );
    let o = Command::new(env!("CARGO_BIN_EXE_vpower"))
        .args(["family", "prop1", "--n", "3"])
        .env("VPOWER_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn precision_flag() {
    let o = vpower(&[
        "family",
        "vnq",
        "--n",
        "4",
        "--q",
        "0.7",
        "--precision",
        "4",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("g(q) = 0.7370"));
}
