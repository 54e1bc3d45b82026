use cyclocode::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("cyclocode").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn classes_prints_partition() {
    let (code, out, _) = cli(&["classes", "--p", "3", "--q", "5"]);
    assert_eq!(code, 0);
    for line in ["C0={1,2,4,8}", "C1={7,11,13,14}", "P={3,6,9,12}", "Q={5,10}", "R={0}"] {
        assert!(out.lines().any(|l| l == line), "missing {line} in\n{out}");
    }
}

#[test]
fn bad_gcd_is_usage_error() {
    let (code, _, err) = cli(&["build", "--p", "5", "--q", "13", "--field", "2", "--kind", "pure", "--m", "1,0,1,0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("gcd(p−1, q−1) = 4 ≠ 2"), "{err}");
}

#[test]
fn malformed_inputs_are_usage_errors() {
    assert_eq!(cli(&["build", "--p", "3", "--q", "5", "--m", "1,0,1"]).0, 2);
    assert_eq!(cli(&["build", "--p", "3", "--q", "5", "--field", "6", "--m", "1,0,0,0,0"]).0, 2);
    assert_eq!(cli(&["build", "--p", "3", "--q", "5", "--m", "1,0,w,0,0"]).0, 2);
    assert_eq!(cli(&["build", "--p", "4", "--q", "5", "--m", "1,0,0,0,0"]).0, 2);
    assert_eq!(cli(&["build", "--p", "3", "--q", "5", "--kind", "bordered", "--m", "0,0,0,0,0"]).0, 2);
}

#[test]
fn reproduce_tables_passes() {
    let (code, out, _) = cli(&["reproduce-tables"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS Table")).count(), 5);
    assert!(out.contains("[70, 35, 10]") && out.contains("[32, 16, 8]"));
    assert!(out.ends_with("overall: PASS\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["reproduce-tables"][..],
        &["--json", "reproduce-tables"],
        &["search", "--p", "5", "--q", "7", "--kind", "bordered"],
        &["--json", "search", "--p", "3", "--q", "5", "--field", "4"],
        &["mindist", "--p", "3", "--q", "5", "--field", "4", "--m", "1,1,0,u+1,u"],
    ] {
        let first = cli(args);
        let second = cli(args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn json_and_text_agree() {
    let (_, text, _) = cli(&["mindist", "--p", "5", "--q", "7", "--m", "1,0,1,0,1", "--method", "infoset"]);
    let (_, json, _) = cli(&["--json", "mindist", "--p", "5", "--q", "7", "--m", "1,0,1,0,1", "--method", "infoset"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["N"], 70);
    assert_eq!(v["k"], 35);
    assert_eq!(v["d"], 10);
    assert_eq!(v["bound"], 14);
    assert_eq!(v["elapsed_ms"], serde_json::Value::Null);
    assert!(text.contains("params=[70, 35, 10]") && text.contains("bound=14"), "{text}");
}

#[test]
fn search_json_emits_one_record_per_line() {
    let (code, out, _) = cli(&["--json", "search", "--p", "5", "--q", "7"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3]["summary"]["hits"], 3);
    assert_eq!(lines[1]["m"], "1,0,1,0,1");
    assert_eq!(lines[1]["d"], 10);
}

#[test]
fn generator_file_roundtrip() {
    let (_, matrix, _) = cli(&["build", "--p", "3", "--q", "5", "--field", "4", "--kind", "bordered", "--alpha", "0", "--m", "0,0,1,u+1,u"]);
    let path = std::env::temp_dir().join(format!("cyclocode-gen-{}.txt", std::process::id()));
    std::fs::write(&path, &matrix).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["check", "--generator", p]);
    assert_eq!(code, 0);
    assert!(out.contains("[32, 16] self-dual: true"), "{out}");
    let (code, out, _) = cli(&["mindist", "--generator", p]);
    assert_eq!(code, 0);
    assert!(out.contains("params=[32, 16, 8]"), "{out}");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn numbers_flags_minus_one_disagreement() {
    let (code, out, _) = cli(&["numbers", "--p", "3", "--q", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("computed class C1, claimed class C0"), "{out}");
    assert!(out.contains("DISAGREE"));
}

#[test]
fn family_and_identities() {
    let (code, out, _) = cli(&["family", "--p", "5", "--q", "11", "--field", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    let (code, _, err) = cli(&["family", "--p", "3", "--q", "5", "--field", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("(p+q)/4 = 2 is even"), "{err}");
    let (code, out, _) = cli(&["identities", "--p", "5", "--q", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("20/20 identities hold"));
    assert_eq!(cli(&["identities", "--p", "3", "--q", "7"]).0, 2);
}

#[test]
fn budget_exhaustion_exits_one() {
    let (code, out, _) = cli(&["mindist", "--p", "5", "--q", "7", "--kind", "bordered", "--alpha", "0", "--m", "0,1,0,1,0", "--budget", "10"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("budget exhausted"), "{out}");
}
