use mfal::cli::run;
use mfal::qseries::QSeries;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["mfal"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn expand_j_text() {
    let (code, out, _) = call(&["expand", "j", "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q^-1 + 744 + 196884 q + 21493760 q^2 + O(q^3)");
}

#[test]
fn unknown_form_is_usage_error() {
    let (code, _, err) = call(&["expand", "nosuch"]);
    assert_eq!(code, 2);
    assert!(err.contains("nosuch"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(call(&["expand"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "everything"]).0, 2);
    assert_eq!(call(&["eval", "j", "--tau", "1-2i"]).0, 2);
    assert_eq!(call(&["hilbert", "2", "Gamma(7)", "10"]).0, 2);
    assert_eq!(call(&["alia", "A2", "minimal"]).0, 2);
}

#[test]
fn expand_json_round_trips() {
    let (code, out, _) = call(&["expand", "Delta", "--order", "8", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["id"], "Delta");
    let series: QSeries = serde_json::from_value(v["series"].clone()).unwrap();
    let again = serde_json::to_value(&series).unwrap();
    assert_eq!(again, v["series"]);
    assert_eq!(series, mfal::modforms::eisenstein::discriminant_product(8));
}

#[test]
fn alia_json_shape() {
    let (code, out, _) = call(&["alia", "A1", "principal", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["h", "e", "f"]));
    let ef = v["brackets"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["x"] == "e" && b["y"] == "f")
        .unwrap();
    assert_eq!(ef["coeff"], serde_json::json!({"eps": 1, "w4": 1, "w6": 1}));
    assert_eq!(ef["target"], "h");
    let back: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(back, v);
}

#[test]
fn hilbert_json_matches_shifted_dimensions() {
    let (code, out, _) = call(&["hilbert", "2", "1", "12", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let weights: Vec<(i64, i64)> = serde_json::from_value(v["weights"].clone()).unwrap();
    assert_eq!(weights.first(), Some(&(-2, 1)));
    assert_eq!(weights.last(), Some(&(12, 4)));
    assert_eq!(weights.len(), 15);
}

#[test]
fn eval_checks() {
    let (code, out, _) = call(&["eval", "E6", "--tau", "0.3+1.1i", "--check", "S", "--order", "40"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS S"));
    let (code, out, _) = call(&["eval", "theta4", "--tau", "i", "--check", "T", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["tau"], serde_json::json!([0.0, 1.0]));
    // q^(1/8) picks up an eighth root of unity, outside the rational coefficients
    assert_eq!(call(&["eval", "theta2", "--tau", "i", "--check", "T"]).0, 2);
    // E2 is only quasimodular, so the S check reports a failure
    assert_eq!(call(&["eval", "E2", "--tau", "0.3+1.1i", "--check", "S"]).0, 1);
    // theta series live on Gamma(2) and have half-integral weight
    assert_eq!(call(&["eval", "theta3", "--tau", "i", "--check", "S"]).0, 2);
}

#[test]
fn verify_core_json_report() {
    let (code, out, _) = call(&["verify", "--suite", "core", "--format", "json", "--order", "24"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    let ids: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.iter().all(|id| id.starts_with("core.")));
    for r in v["results"].as_array().unwrap() {
        assert_eq!(r["status"], "pass", "{r}");
        assert!(r["elapsed_ms"].is_u64());
    }
    assert_eq!(v["order"], 24);
}

#[test]
fn order_from_environment() {
    std::env::set_var("MFAL_ORDER", "2");
    let (code, out, _) = call(&["expand", "j"]);
    std::env::remove_var("MFAL_ORDER");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q^-1 + 744 + 196884 q + O(q^2)");
}

#[test]
fn verify_is_deterministic() {
    let strip = |out: &str| {
        let mut v: Value = serde_json::from_str(out).unwrap();
        for r in v["results"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let (c1, first, _) = call(&["verify", "--suite", "gamma", "--format", "json", "--order", "30"]);
    let (c2, second, _) = call(&["verify", "--suite", "gamma", "--format", "json", "--order", "30"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(strip(&first), strip(&second));
}
