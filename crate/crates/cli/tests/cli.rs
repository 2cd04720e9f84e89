use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_braidinj")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf-8"))
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn braid_nf_respects_the_braid_relation() {
    let (c1, a) = run_json(&["braid", "nf", "--n", "3", "--word", "z1 z2 z1"]);
    let (c2, b) = run_json(&["braid", "nf", "--n", "3", "--word", "z2 z1 z2"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a["normal_form"], b["normal_form"]);
    let (_, e) = run_json(&["braid", "eq", "--n", "3", "--a", "z1 z2", "--b", "z2 z1"]);
    assert_eq!(e["equal"], Value::Bool(false));
}

#[test]
fn braid_word_operations() {
    let (_, d) = run_json(&["braid", "delete", "--n", "3", "--word", "z1 z2", "--strands", "1"]);
    assert_eq!(d["n"], 2);
    let (_, c) = run_json(&["braid", "cable", "--n", "2", "--word", "z1", "--widths", "2,1"]);
    assert_eq!(c["n"], 3);
    let (_, p) = run_json(&["braid", "parabolic", "--n", "4", "--word", "z1 z3^-1", "--widths", "2,2"]);
    assert_eq!(p["parabolic"], Value::Bool(true));
    let (_, q) = run_json(&["braid", "parabolic", "--n", "4", "--word", "z2", "--widths", "2,2"]);
    assert_eq!(q["parabolic"], Value::Bool(false));
}

#[test]
fn presentation_passes_to_six() {
    let (code, r) = run_json(&["binj", "verify-presentation", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(r["pass"], Value::Bool(true));
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn from_word_and_compose() {
    let (code, m) = run_json(&["binj", "from-word", "--word", "z1@2 d3@2"]);
    assert_eq!(code, 0);
    assert_eq!(m["image"], serde_json::json!([1, 2]));
    assert_eq!(m["braid"], "z1");
    let (_, id) = run_json(&["binj", "compose", "--g", r#"{"m":3,"n":3,"image":[1,2,3]}"#, "--f", &m.to_string()]);
    assert_eq!(id, m);
    let (code, e) = run_json(&["binj", "compose", "--g", r#"{"m":1,"n":1,"image":[1]}"#, "--f", &m.to_string()]);
    assert_eq!(code, 2);
    assert_eq!(e["error"], "dimension");
}

#[test]
fn phi_verify_on_the_z2_fixture() {
    let (code, r) = run_json(&["phi", "verify", "--cat", &fixture("z2.json"), "--max-level", "4"]);
    assert_eq!(code, 0, "{r}");
    let (code, _) = run_json(&["phi", "p", "--cat", &fixture("z2.json"), "--samples", "50"]);
    assert_eq!(code, 0);
}

#[test]
fn category_checks_catch_corruption() {
    assert_eq!(run(&["cat", "check", "--cat", &fixture("z2-group.json")]).0, 0);
    assert_eq!(run(&["cat", "check", "--cat", &fixture("z2-group-corrupted.json")]).0, 1);
    assert_eq!(run(&["cat", "check-braided", "--cat", &fixture("z2.json")]).0, 0);
    let (code, r) = run_json(&["cat", "check-braided", "--cat", &fixture("corrupted/z2-bad-braiding.json")]);
    assert_eq!(code, 1);
    assert!(r["failures"].as_array().unwrap().iter().any(|f| f["key"].as_str().unwrap().starts_with("hexagon")));
}

#[test]
fn usage_and_format_errors_exit_two_with_distinct_messages() {
    let (code, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, e) = run_json(&["cat", "check", "--cat", "{\"objects\":"]);
    assert_eq!(code, 2);
    assert_eq!(e["error"], "format");
    assert!(e["message"].as_str().unwrap().contains("malformed JSON"));
    let (code, t) = run_json(&["spec", "level", "--fixture", "terminal", "--n", "3", "--max-level", "2"]);
    assert_eq!(code, 2);
    assert_eq!(t["error"], "truncation");
    assert_ne!(e["message"], t["message"]);
    let (code, f) = run_json(&["bspace", "check", "--fixture", "nope"]);
    assert_eq!(code, 2);
    assert!(f["message"].as_str().unwrap().contains("unknown space fixture"));
}

#[test]
fn bspace_verbs() {
    assert_eq!(run(&["bspace", "check", "--fixture", "xbullet-s0", "--max-level", "3"]).0, 0);
    assert_eq!(run(&["bspace", "flat", "--fixture", "free-one"]).0, 0);
    assert_eq!(run(&["bspace", "flat", "--fixture", "non-flat"]).0, 1);
    assert_eq!(run(&["bspace", "commutative", "--fixture", "nphi", "--cat", &fixture("z2.json")]).0, 0);
    assert_eq!(run(&["bspace", "commutative", "--fixture", "free-one"]).0, 2);
    assert_eq!(run(&["bspace", "check", "--fixture", "broken-sigma"]).0, 0);
    assert_eq!(run(&["bspace", "commutative", "--fixture", "terminal", "--symmetric"]).0, 0);
}

#[test]
fn homology_and_hocolims() {
    let (_, h) = run_json(&["sset", "homology", "--fixture", "nerve-z2", "--dim", "4"]);
    let groups: Vec<&str> = h["homology"].as_array().unwrap().iter().map(|g| g["group"].as_str().unwrap()).collect();
    assert_eq!(groups, ["Z", "Z/2", "0", "Z/2"]);
    let (_, c) = run_json(&["sset", "homology", "--sset", &fixture("circle.json")]);
    assert_eq!(c["homology"][1]["rank"], 1);
    let (_, p) = run_json(&["hocolim", "finite", "--diagram", &fixture("pushout.json")]);
    assert_eq!(p["homology"][0]["group"], "Z");
    assert_eq!(p["homology"][1]["group"], "Z");
    let (code, a) = run_json(&["hocolim", "approx", "--fixture", "terminal", "--max-n", "2", "--word-len", "1"]);
    assert_eq!(code, 0);
    assert_eq!(a["approximate"], Value::Bool(true));
    assert!(a["caveat"].as_str().unwrap().starts_with("APPROXIMATE"));
}

#[test]
fn bar_verbs() {
    let e = r#"{"splits":[1,1],"phi":{"m":2,"n":2,"image":[1,2],"braid":"z1"},"xs":["[1]","[0]"],"dim":0}"#;
    let (code, f) = run_json(&["bar", "face", "--fixture", "xbullet-s0", "--element", e, "--i", "0"]);
    assert_eq!(code, 0);
    assert_eq!(f["splits"].as_array().unwrap().len(), 1);
    assert_eq!(run(&["bar", "face", "--fixture", "xbullet-s0", "--element", e, "--i", "3"]).0, 2);
    assert_eq!(run(&["bar", "verify", "--fixture", "xbullet-s0", "--samples", "50"]).0, 0);
    let x = r#"{"splits":[1],"phi":{"m":1,"n":1,"image":[1]},"xs":["[1]"],"dim":0}"#;
    let (code, m) = run_json(&["bar", "mult", "--fixture", "xbullet-s0", "--x", x, "--y", x]);
    assert_eq!(code, 0);
    assert_eq!(m["phi"]["n"], 2);
}

#[test]
fn spectrum_verbs() {
    let (_, l) = run_json(&["spec", "level", "--fixture", "terminal", "--n", "2"]);
    let groups: Vec<&str> = l["homology"].as_array().unwrap().iter().map(|g| g["group"].as_str().unwrap()).collect();
    assert_eq!(groups, ["Z", "0", "Z"]);
    assert_eq!(run(&["spec", "structure", "--fixture", "terminal", "--n", "1"]).0, 0);
    assert_eq!(run(&["spec", "structure", "--fixture", "xbullet-s0", "--n", "0", "--max-level", "3"]).0, 0);
}

#[test]
fn groth_verbs() {
    let cat = fixture("z2.json");
    let (code, c) = run_json(&["groth", "braiding", "--cat", &cat, "--a", r#"["1"]"#, "--b", r#"["0","1"]"#]);
    assert_eq!(code, 0);
    assert_eq!(c["target"]["x"], serde_json::json!(["0", "1", "1"]));
    let (code, t) = run_json(&["groth", "tensor", "--cat", &cat, "--f", &c.to_string(), "--g", &c.to_string()]);
    assert_eq!(code, 0);
    assert_eq!(t["source"]["n"], 6);
    let inv = run_json(&["groth", "braiding", "--cat", &cat, "--a", r#"["0","1"]"#, "--b", r#"["1"]"#]).1;
    let (code, round) = run_json(&["groth", "compose", "--cat", &cat, "--g", &inv.to_string(), "--f", &c.to_string()]);
    assert_eq!(code, 0);
    assert_eq!(round["source"], c["source"]);
    let (_, p) = run_json(&["phi", "p", "--cat", &cat, "--mor", &c.to_string()]);
    assert_eq!(p["source"], "0");
}

#[test]
fn verify_all_is_deterministic_and_replayable() {
    let args = ["verify-all", "--profile", "quick", "--seed", "5", "--only", "composition", "--only", "bar"];
    let (c1, a) = run(&args);
    let (c2, b) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let dir = fixture("corrupted");
    let (code, r) = run_json(&["verify-all", "--profile", "quick", "--fixtures", &dir, "--only", "categories"]);
    assert_eq!(code, 1);
    let failures = r["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    let replay: Vec<String> = failures[0]["reproducer"].as_str().unwrap().split_whitespace().skip(1).map(String::from).collect();
    let replay: Vec<&str> = replay.iter().map(String::as_str).collect();
    let (code, again) = run_json(&replay);
    assert_eq!(code, 1);
    assert_eq!(again["failures"], r["failures"]);
}
