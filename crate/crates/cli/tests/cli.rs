use std::io::Write;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("aqjl").chain(args.iter().copied());
    let code = aqjl::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn descriptor_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const TEMPERED_INNER: &str = r#"{
  "places": {"d": 2, "m": 2,
             "archimedean": [{"label": "inf1", "kind": "real-nonsplit"}, {"label": "inf2", "kind": "real-split"}],
             "finite": [{"label": "p2"}, {"label": "p3", "ramified": true}]},
  "side": "inner",
  "cuspidal_transfer": true,
  "archimedean": {"inf1": {"partition": [0,1,1], "mu": [0,0,0,0]},
                  "inf2": {"partition": [0,2,2], "mu": [0,0,0,0]}},
  "finite": {"p2": {"satake": [{"N":5,"coords":{"1":"1"}}, {"N":5,"coords":{"4":"1"}},
                               {"N":1,"coords":{"0":"1"}}, {"N":1,"coords":{"0":"1"}}]},
             "p3": {"opaque": "steinberg"}}
}"#;

#[test]
fn tables_match_golden() {
    let (code, out, _) = run(&["tables", "--k", "2", "--mu", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("tables_k2_mu0.txt"));
}

#[test]
fn catalogs_match_golden() {
    for (kind, file) in [("h", "catalog_h_k2_mu0.jsonl"), ("r", "catalog_r_k2_mu0.jsonl")] {
        let (code, out, _) = run(&["catalog", "--kind", kind, "--k", "2", "--mu", "0,0,0,0"]);
        assert_eq!(code, 0);
        assert_eq!(out, golden(file));
    }
}

#[test]
fn thread_count_does_not_change_output() {
    for kind in ["h", "r"] {
        let (_, one, _) = run(&["catalog", "--kind", kind, "--k", "4", "--mu", "3,2,1,1,0,0,-1,-2"]);
        let (_, four, _) = run(&["catalog", "--kind", kind, "--k", "4", "--mu", "3,2,1,1,0,0,-1,-2", "--threads", "4"]);
        assert!(!one.is_empty());
        assert_eq!(one, four);
    }
    let (_, a, _) = run(&["tables", "--k", "3", "--mu", "0"]);
    let (_, b, _) = run(&["tables", "--k", "3", "--mu", "0", "--threads", "3"]);
    assert_eq!(a, b);
}

#[test]
fn distinct_catalog_drops_aliases() {
    let (_, out, _) = run(&["catalog", "--kind", "h", "--k", "2", "--mu", "0", "--distinct"]);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.get("canonical").is_none()));
}

#[test]
fn poincare_of_trivial_quaternionic_module() {
    let (code, out, _) = run(&["poincare", "--kind", "h", "--partition", "2", "--lambda", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + X^5");
    let (_, out, _) = run(&["poincare", "--kind", "r", "--partition", "0,4", "--mu", "0", "--format", "json"]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v, serde_json::json!({"3": 1, "6": 1}));
}

#[test]
fn poincare_rejects_split_zero_block() {
    let (code, _, err) = run(&["poincare", "--kind", "r", "--partition", "2,2", "--mu", "0"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn fiber_of_tempered_class() {
    let (code, out, _) = run(&["jl-fiber", "--partition", "0,1,1", "--mu", "0,0,0,0"]);
    assert_eq!(code, 0);
    let rows = json_lines(&out);
    let got: Vec<(Value, Value)> = rows.iter().map(|r| (r["partition"].clone(), r["eps"].clone())).collect();
    let want: Vec<(Value, Value)> = vec![
        (serde_json::json!([0, 2, 2]), 0.into()),
        (serde_json::json!([2, 2]), 0.into()),
        (serde_json::json!([2, 2]), 1.into()),
    ];
    assert_eq!(got, want);
}

#[test]
fn transfer_reads_catalog_rows() {
    let (_, catalog, _) = run(&["catalog", "--kind", "r", "--k", "2", "--mu", "0"]);
    let mut input = tempfile::NamedTempFile::new().unwrap();
    input.write_all(catalog.as_bytes()).unwrap();
    let (code, out, _) = run(&["jl-transfer", "--input", input.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let images: Vec<Value> = json_lines(&out).iter().map(|r| r["partition"].clone()).collect();
    let want: Vec<Value> = [vec![0, 1, 1], vec![0, 1, 1], vec![0, 1, 1], vec![0, 2], vec![2], vec![2]]
        .into_iter()
        .map(Value::from)
        .collect();
    assert_eq!(images, want);
}

#[test]
fn transfer_of_single_module() {
    let (code, out, _) = run(&["jl-transfer", "--partition", "0,4", "--mu", "0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["kind"], "H");
    assert_eq!(v["partition"], serde_json::json!([0, 2]));
}

#[test]
fn parameter_of_nontempered_module() {
    let (code, out, _) = run(&["param", "--partition", "0,4", "--mu", "0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["algebraic"], true);
    assert_eq!(v["regular"], true);
    assert_eq!(v["purity"], Value::Null);
}

#[test]
fn parameter_from_exponents() {
    // p-values 2, -1, 1, -2 for n = 4 are not in 3/2 + Z
    let (code, out, _) = run(&["param", "--exponents", "[[2,1,-1,1],[-1,1,2,1],[1,1,-2,1],[-2,1,1,1]]"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["algebraic"], false);
}

#[test]
fn bad_input_exits_with_two() {
    let (code, _, err) = run(&["catalog", "--kind", "h", "--k", "2", "--mu", "x"]);
    assert_eq!(code, 2);
    assert!(err.contains("--mu"));
    let (code, _, _) = run(&["catalog", "--kind", "h", "--k", "2", "--mu", "1,2,3,4"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["check", "purity", "/nonexistent/descriptor.json"]);
    assert_eq!(code, 2);
}

#[test]
fn non_selfdual_weight_gives_empty_catalog() {
    let (code, out, _) = run(&["tables", "--k", "2", "--mu", "2,1,0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("empty"));
}

#[test]
fn checks_on_tempered_descriptor() {
    let f = descriptor_file(TEMPERED_INNER);
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["check", "regular-algebraic", path]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["check", "purity", path]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["weight"], 0);
    let (code, out, _) = run(&["check", "field-equality", path]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    // ζ5 + ζ5^4 generates the real subfield of Q(ζ5)
    assert_eq!(v["field"]["degree"], 2);
}

#[test]
fn failed_check_exits_with_one() {
    let text = TEMPERED_INNER.replace(r#""inf2": {"partition": [0,2,2]"#, r#""inf2": {"partition": [0,4]"#);
    let f = descriptor_file(&text);
    let (code, out, err) = run(&["check", "purity", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["ok"], false);
    assert!(err.starts_with("check failed"));
}

#[test]
fn global_commands() {
    let f = descriptor_file(TEMPERED_INNER);
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["global", "jl", path]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["side"], "split");
    assert_eq!(v["archimedean"]["inf1"]["partition"], serde_json::json!([0, 2, 2]));
    let (code, out, _) = run(&["global", "poincare", path]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    // (X^2 + X^3)(2X^4 + 2X^5)
    assert_eq!(v["text"], "2X^6 + 4X^7 + 2X^8");
    let (code, out, _) = run(&["global", "field", path]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["equal_after_transfer"], true);
}

#[test]
fn rationality_collapse_and_twist() {
    let zeta3 = r#"[{"N":3,"coords":{"1":"1"}},{"N":3,"coords":{"2":"1"}},{"N":1,"coords":{"0":"1"}}]"#;
    let (code, out, _) = run(&["rationality", "--satake", zeta3]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["field"]["name"], "Q");
    let (_, out, _) = run(&["rationality", "--satake", r#"[{"N":5,"coords":{"1":"1"}}]"#, "--sigma", "2"]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["satake"][0]["coords"], serde_json::json!({"2": "1"}));
    assert_eq!(v["field"]["degree"], 4);
    let (_, out, _) = run(&["rationality", "--compositum", r#"[{"N":8,"gens":[3]},{"N":8,"gens":[5]}]"#]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["field"]["degree"], 4);
}
