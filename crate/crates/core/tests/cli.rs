//! The binary as a process: exit codes, JSON on every path, sorted keys and
//! repeatable output.

use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tbshift(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tbshift")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let v = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    (out.status.code().expect("exit code"), v, text)
}

fn keys_sorted(v: &Value) -> bool {
    match v {
        Value::Object(m) => {
            let keys: Vec<_> = m.keys().collect();
            keys.windows(2).all(|w| w[0] < w[1]) && m.values().all(keys_sorted)
        }
        Value::Array(a) => a.iter().all(keys_sorted),
        _ => true,
    }
}

#[test]
fn validate_reports_violations() {
    let (code, v, _) = tbshift(&["validate", &data("mu_3.json")]);
    assert_eq!((code, &v["ok"]), (0, &Value::Bool(true)));
    for (file, violation) in [
        ("normalization", "normalization"),
        ("cocycle_identity", "cocycle_identity"),
        ("character", "well_definedness"),
        ("trivial_group", "trivial_group"),
    ] {
        let (code, v, _) = tbshift(&["validate", &data(&format!("invalid/{file}.json"))]);
        assert_eq!(code, 2, "{file}");
        assert_eq!(v["violation"], violation);
        assert_eq!(v["ok"], false);
    }
    let (code, v, _) = tbshift(&["validate", &data("invalid/parse.json")]);
    assert_eq!((code, v["error"].as_str(), v["path"].as_str()), (2, Some("parse"), Some("cocycle.matrix")));
}

#[test]
fn centralizer_command() {
    let (code, v, _) = tbshift(&["centralizer", &data("mu_3.json")]);
    assert_eq!(code, 0);
    assert_eq!((v["order"].as_u64(), v["structure"].as_str()), (Some(3), Some("Z/3")));
    let (_, v, _) = tbshift(&["centralizer", &data("untwisted_z3.json")]);
    assert_eq!(v["order"], 2);
    let (_, v, _) = tbshift(&["centralizer", &data("z_plus_z5.json")]);
    assert_eq!(v["order"], 20);
    let (_, v, _) = tbshift(&["centralizer", &data("z_chi_1_5.json")]);
    assert_eq!(v["order"], 1);
    let (code, v, _) = tbshift(&["centralizer", &data("z2_theta_1_16.json"), "--bound", "1"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("INFINITE")));
    assert!(!v["elements"].as_array().unwrap().is_empty());
}

#[test]
fn conjugate_exit_codes() {
    let mu3 = data("mu_3.json");
    let (code, v, _) = tbshift(&["conjugate", &mu3, &mu3]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("YES")));
    assert_eq!(v["witness"]["matrix"], serde_json::json!([[1, 0], [0, 1]]));

    let (code, v, _) = tbshift(&["conjugate", &mu3, &data("mu_3_chi_squared.json")]);
    assert_eq!((code, v["method"].as_str(), v["complete"].as_bool()), (0, Some("enumeration"), Some(true)));

    let (code, v, _) = tbshift(&["conjugate", &data("z2_theta_1_16.json"), &data("z2_theta_3_16.json")]);
    assert_eq!((code, v["verdict"].as_str()), (1, Some("NO")));

    // Free rank one is searched completely; a mismatched free part is not.
    let (code, _, _) = tbshift(&["conjugate", &data("z_plus_z3.json"), &data("z_plus_z3.json")]);
    assert_eq!(code, 0);
}

#[test]
fn factor_bicharacter_malleability() {
    let (_, v, _) = tbshift(&["factor", &data("mu_3.json")]);
    assert_eq!(v["nondegenerate"], true);
    assert!(v.get("witness_g").is_none());
    let (_, v, _) = tbshift(&["factor", &data("untwisted_z5.json")]);
    assert_eq!(v["nondegenerate"], false);
    assert_ne!(v["witness_g"], serde_json::json!([0]));

    let (code, v, _) = tbshift(&["bicharacter", &data("mu_3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["matrix"], serde_json::json!([["0/1", "1/3"], ["2/3", "0/1"]]));

    let (code, v, _) = tbshift(&["malleability", &data("mu_3.json")]);
    assert_eq!((code, v["ok"].as_bool()), (0, Some(true)));
    let (code, v, _) = tbshift(&["malleability", &data("untwisted_z3.json")]);
    assert_eq!((code, v["error"].as_str()), (2, Some("unsupported")));
}

#[test]
fn json_everywhere_and_repeatable() {
    let runs: &[&[&str]] = &[
        &["validate", "/no/such/file.json"],
        &["bogus"],
        &["conjugate", "/no/a.json"],
        &["selftest", "--suite", "nope"],
        &["selftest", "--suite", "lemma21", "--json"],
        &["selftest", "--suite", "malleability", "--q", "3"],
    ];
    for args in runs {
        let (code, v, text) = tbshift(args);
        assert!(keys_sorted(&v), "{args:?}");
        let (code2, _, text2) = tbshift(args);
        assert_eq!((code, &text), (code2, &text2), "{args:?}");
    }
    let (code, v, _) = tbshift(&["selftest", "--suite", "lemma21"]);
    assert_eq!(code, 0);
    assert_eq!(v["suites"][0]["name"], "det_gcd");
    assert_eq!(v["suites"][0]["params"]["pairs"], 28561);
}

#[test]
fn unknown_verdict_exits_three() {
    let dir = std::env::temp_dir().join(format!("tbshift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, phase: &str| {
        let text = format!(
            r#"{{"group": {{"free_rank": 3, "torsion": []}},
                "cocycle": {{"kind": "bichar", "matrix": [["0","0","0"],["0","0","0"],["0","0","0"]]}},
                "character": {{"phases": ["{phase}", "0", "0"]}}}}"#
        );
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    // Conjugate over Z^3, but every witness has an entry of size at least 5.
    let (a, b) = (write("a.json", "1/5"), write("b.json", "2/5"));
    let (code, v, _) = tbshift(&["conjugate", &a, &b]);
    assert_eq!((code, v["verdict"].as_str(), v["complete"].as_bool()), (3, Some("UNKNOWN"), Some(false)));
    let (code, _, _) = tbshift(&["conjugate", &a, &a]);
    assert_eq!(code, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
