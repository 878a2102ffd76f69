use rigged_cli::{run, EXIT_INVALID, EXIT_OK};
use serde_json::Value;

fn rk(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rk").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn kostka_polynomial() {
    let (code, out, _) = rk(&["kostka", "--lambda", "2,1", "--mu", "1,1,1", "--q"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "q + q^2");
}

#[test]
fn kostka_methods_agree() {
    for m in ["fermionic", "charge", "gt"] {
        let (code, out, _) = rk(&["kostka", "--lambda", "3,2,1", "--mu", "2,2,1,1", "--method", m]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "4", "method {m}");
    }
}

#[test]
fn rectangular_catalan() {
    let (code, out, _) = rk(&["catalan", "--n", "3", "--m", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "462");
}

#[test]
fn okounkov_json() {
    let (code, out, _) = rk(&["okounkov", "--n", "5", "--power", "3", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["threshold"], 45010);
}

#[test]
fn unknown_suite_is_invalid() {
    let (code, _, err) = rk(&["verify", "--suite", "nightly"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("unknown suite"));
}

#[test]
fn bad_partition_is_invalid() {
    let (code, _, _) = rk(&["kostka", "--lambda", "1,2", "--mu", "1,1,1"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = rk(&["kostka", "--lambda", "2,1", "--mu", "1,1"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn non_dominant_rectangles_warn() {
    let (code, _, err) = rk(&["pkostka", "--lambda", "3,2,1", "--rect", "1,1,2^2", "--at-one"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning"));
}

#[test]
fn json_polynomial_round_trip() {
    let (code, out, _) = rk(&["pkostka", "--lambda", "4,2", "--rect", "2^2,1,1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let text = v["polynomial"]["text"].as_str().unwrap();
    let (_, plain, _) = rk(&["pkostka", "--lambda", "4,2", "--rect", "2^2,1,1", "--q"]);
    assert_eq!(plain.trim(), text);
    let back: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(back, v);
}

#[test]
fn internal_methods_agree() {
    let (code, out, _) = rk(&["internal", "--alpha", "4,2", "--beta", "2,2,1,1", "--N", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("agree up to a power of q: true"));
}

#[test]
fn narayana_methods_agree() {
    let outputs: Vec<String> = ["maj", "bosonic", "fermionic"]
        .iter()
        .map(|m| rk(&["narayana", "--n", "3", "--m", "3", "--method", m, "--q"]).1)
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}
