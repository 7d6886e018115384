use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn novikov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_novikov"))
        .args(args)
        .env_remove("NOVIKOV_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn make_writes_documents_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    assert!(novikov(&["make", "novikov-free3:4", "-o", path(&a)])
        .status
        .success());
    assert!(novikov(&["make", "novikov-free3:4", "-o", path(&b)])
        .status
        .success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["dim"], 30);
    assert_eq!(doc["basis"].as_array().unwrap().len(), 30);
    assert!(doc["product"].is_array());

    let cex = novikov(&["make", "cex13"]);
    let doc: Value = serde_json::from_slice(&cex.stdout).unwrap();
    assert_eq!(doc["dim"], 13);
    assert!(doc.get("product").is_none());
    // [b_4, b_7] = b_9
    let hit = doc["bracket"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["i"] == 4 && e["j"] == 7 && e["k"] == 9 && e["coeff"] == "1");
    assert!(hit);
}

#[test]
fn make_rejects_bad_names() {
    for name in ["free3:1", "nothing"] {
        let o = novikov(&["make", name]);
        assert_eq!(o.status.code(), Some(1), "{name}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn check_passes_on_a_shipped_structure() {
    let o = novikov(&["check", "novikov-free3:5", "--all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["status"], "ok");
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.len() > 6);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn check_reports_a_perturbed_coefficient() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f.json");
    assert!(novikov(&["make", "novikov-free3:3", "-o", path(&file)])
        .status
        .success());
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    doc["product"][0]["coeff"] = Value::from("7/3");
    std::fs::write(&file, doc.to_string()).unwrap();

    let o = novikov(&[
        "check",
        path(&file),
        "--compat",
        "--novikov",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    let failed: Vec<&Value> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed[0]["witness"]["indices"].is_array());

    let text = stdout(&novikov(&["check", path(&file), "--compat"]));
    assert!(
        text.contains("FAIL") && text.contains("witness ("),
        "{text}"
    );
}

#[test]
fn check_on_the_abelian_zero_product_passes() {
    let o = novikov(&["check", "abelian:3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn product_checks_need_a_product_block() {
    let o = novikov(&["check", "cex13", "--lsa"]);
    assert_eq!(o.status.code(), Some(1));
    let o = novikov(&["check", "cex13", "--lie"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_documents_fail_with_context() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    let mut doc: Value = serde_json::from_slice(&novikov(&["make", "free3:2"]).stdout).unwrap();
    doc["bracket"][1]["coeff"] = Value::from("1.5");
    std::fs::write(&file, doc.to_string()).unwrap();
    let o = novikov(&["check", path(&file)]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bracket entry 2"), "{err}");

    doc["version"] = Value::from(5);
    std::fs::write(&file, doc.to_string()).unwrap();
    let err = String::from_utf8(novikov(&["series", path(&file)]).stderr).unwrap();
    assert!(err.contains("version"), "{err}");
}

#[test]
fn series_reports_classes() {
    let r = json(&novikov(&[
        "series",
        "filiform910:20:f",
        "--format",
        "json",
    ]));
    let derived = r["series"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["series"] == "derived")
        .unwrap();
    assert_eq!(derived["class"], 4);
    let r = json(&novikov(&["series", "cex13", "--format", "json"]));
    assert_eq!(r["series"][0]["class"], 3);
    let r = json(&novikov(&["series", "abelian:3", "--format", "json"]));
    for s in r["series"].as_array().unwrap() {
        assert_eq!(s["class"], 1, "{s}");
    }
}

#[test]
fn prove_counterexample_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let o = novikov(&[
        "prove",
        "cex13",
        "--emit-certificate",
        path(&cert),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let p = &r["proof"];
    assert_eq!(p["grading_zeros"], 1421);
    let free: Vec<i64> = p["stages"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["free"].as_i64().unwrap())
        .collect();
    assert_eq!(free, [776, 424, 268, 58]);
    assert_eq!(p["outcome"], "certificate");
    assert_eq!(p["contradiction"]["constant"], "1/8");

    let o = novikov(&["verify-cert", path(&cert), "--algebra", "cex13"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // replay against a different bracket is rejected
    let o = novikov(&["verify-cert", path(&cert), "--algebra", "free3:4"]);
    assert_eq!(o.status.code(), Some(1));

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    doc["contradiction"]["constant"] = Value::from("1/4");
    std::fs::write(&cert, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let o = novikov(&["verify-cert", path(&cert)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn certificates_match_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for threads in ["1", "3"] {
        let cert = dir.path().join(format!("c{threads}.json"));
        let o = novikov(&[
            "prove",
            "cex13",
            "--threads",
            threads,
            "--emit-certificate",
            path(&cert),
        ]);
        assert!(o.status.success());
        texts.push(std::fs::read(&cert).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
}

#[test]
fn prove_on_abelian_input_finds_the_zero_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let o = novikov(&["prove", "abelian:2", "--emit-structure", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("outcome: structure"));
    let o = novikov(&["check", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn prove_reads_standard_input() {
    use std::io::Write;
    use std::process::Stdio;
    let doc = novikov(&["make", "nilt:3"]).stdout;
    let mut child = Command::new(env!("CARGO_BIN_EXE_novikov"))
        .args(["prove", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&doc).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["proof"]["outcome"], "structure");
}

#[test]
fn triangular_prover_runs_terminate() {
    for name in ["nilt:5", "solvt:3"] {
        let o = novikov(&["prove", name, "--format", "json"]);
        let code = o.status.code().unwrap();
        assert!(code == 0 || code == 2, "{name}: exit {code}");
        assert_ne!(json(&o)["proof"]["outcome"], "structure");
    }
}

#[test]
fn text_and_json_reports_agree() {
    let text = stdout(&novikov(&["prove", "cex13"]));
    let r = json(&novikov(&["prove", "cex13", "--format", "json"]));
    for s in r["proof"]["stages"].as_array().unwrap() {
        let line = format!("free after {}: {}", s["stage"].as_str().unwrap(), s["free"]);
        assert!(text.contains(&line), "{line}");
    }
    let c = &r["proof"]["contradiction"];
    assert!(
        text.contains(c["source"].as_str().unwrap())
            && text.contains(c["constant"].as_str().unwrap())
    );
    assert!(!text.contains("0.125"));
}
