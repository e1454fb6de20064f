use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_slopeforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // commands that take no input may exit before reading it
    if let Err(e) = child.stdin.take().unwrap().write_all(input.as_bytes()) {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe);
    }
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], input: Value) -> Value {
    let out = run(args, &input.to_string());
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["format"], 1);
    v
}

#[test]
fn newton_polygon() {
    let dir = std::env::temp_dir().join(format!("slopeforge-np-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("np.svg");
    let v = ok(&["np", "--svg", svg.to_str().unwrap()], json!({"slopes": [["1/2", 2]]}));
    assert_eq!(v["vertices"], json!([["0", "0"], ["2", "1"]]));
    assert_eq!(v["height"], "1");
    assert_eq!(v["integral"], true);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let v = ok(&["np"], json!({"slopes": [["0", 2], ["1/2", 2]]}));
    assert_eq!(v["vertices"], json!([["0", "0"], ["2", "0"], ["4", "1"]]));
}

#[test]
fn input_and_output_files() {
    let dir = std::env::temp_dir().join(format!("slopeforge-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (i, o) = (dir.join("in.json"), dir.join("out.json"));
    std::fs::write(&i, r#"{"p": 2, "coefficients": ["0", "1"]}"#).unwrap();
    let out = run(&["robba", "--input", i.to_str().unwrap(), "--output", o.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&o).unwrap()).unwrap();
    assert_eq!(v["p_power_N"], 2);
}

#[test]
fn weyl_dimension() {
    let v = ok(&["weyl-dim", "--family", "A", "--rank", "2", "--weight", "2rho"], Value::Null);
    assert_eq!(v["dimension"], "27");
    let v = ok(&["weyl-dim", "--family", "G", "--rank", "2", "--weight", "4rho"], Value::Null);
    assert_eq!(v["dimension"], "15625");
    let out = run(&["weyl-dim", "--family", "D", "--rank", "2"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["weyl-dim", "--family", "A", "--rank", "2", "--weight", "-1,0,1"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn robba() {
    let v = ok(&["robba"], json!({"p": 3, "coefficients": ["1/2", "1"]}));
    assert_eq!(v["slope"], "1");
    assert_eq!(v["p_power_N"], 1);
    assert_eq!(v["tame"], false);
    let v = ok(&["robba"], json!({"p": 3, "coefficients": ["0", "9"]}));
    assert_eq!(v["reduced"]["coefficients"], json!([]));
    assert_eq!(v["slope"], "0");
    let out = run(&["robba"], r#"{"p": 3, "coefficients": ["1/3"]}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn swan_on_c6() {
    let input = json!({
        "group": {"library": "C6"},
        "breaks": ["1/2", "1"],
        "subgroups": ["whole", [0, 3]],
        "character": "regular"
    });
    let v = ok(&["swan"], input);
    assert_eq!(v["slopes"], json!([["0", 1], ["1/2", 2], ["1", 3]]));
    assert_eq!(v["swan"], "4");
    assert_eq!(v["hasse_arf"], true);
}

#[test]
fn herbrand_on_c4() {
    let c2 = json!([0, 2]);
    let input = json!({"group": {"library": "C4"}, "lower": ["whole", "whole", "whole", c2, c2, c2]});
    let v = ok(&["herbrand"], input);
    assert_eq!(v["upper"]["breaks"], json!(["2", "7/2"]));
    assert_eq!(v["final_slope"], "1/4");
}

#[test]
fn induction() {
    let base = json!({
        "group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]]},
        "subgroup": {"permutations": [[2, 3, 1]]},
        "character": "trivial"
    });
    let v = ok(&["induce"], base.clone());
    assert_eq!(v["degree"], 2);
    let v = ok(&["tind"], base.clone());
    assert_eq!(v["degree"], 1);
    let v = ok(&["mackey"], json!({
        "group": base["group"],
        "subgroup": base["subgroup"],
        "characters": [{"irreducible": 1}, {"irreducible": 2}]
    }));
    assert_eq!(v["holds"], true);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn wreath_and_classify() {
    let v = ok(&["wreath"], json!({"base": {"library": "C3"}, "ell": 2}));
    assert_eq!(v["order"], 18);
    let v = ok(&["classify"], json!({"base": {"library": "C3"}, "ell": 2, "tuples": [[1, 2]]}));
    assert_eq!(v["goursat"]["kind"], "twisted_diagonal");
    assert_eq!(v["goursat"]["automorphisms"], json!([[0, 2, 1]]));
    let v = ok(&["classify"], json!({"base": {"library": "C3"}, "ell": 2, "tuples": [[1, 0], [0, 1]]}));
    assert_eq!(v["goursat"]["kind"], "full");
    let v = ok(&["classify"], json!({"embedding": {"group": {"library": "S3"}, "subgroup": {"permutations": [[2, 3, 1]]}}}));
    assert_eq!(v["prop45"]["order"], 6);
    assert_eq!(v["prop45"]["base_is_abelian"], true);
    let v = ok(&["classify"], json!({"base": {"library": "C2"}, "ell": 3, "generators": [
        {"sigma": [2, 3, 1], "coords": [0, 0, 0]},
        {"sigma": [1, 2, 3], "coords": [1, 0, 0]}
    ]}));
    assert_eq!(v["prop45"]["case"], "full_base");
    assert_eq!(v["prop45"]["order"], 24);
}

#[test]
fn character_tables() {
    let v = ok(&["table", "--gcd"], json!({"group": {"library": "Q8"}}));
    assert_eq!(v["gcd"], 1);
    let mut degrees: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
    let v = ok(&["table"], json!({"group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]]}}));
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert!(v["classes"][0]["permutation"].is_array());
    assert!(v.get("gcd").is_none());
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "weyl", "--jobs", "1"], "");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS [ 1]"));
    let again = run(&["verify", "weyl", "--jobs", "1"], "");
    assert_eq!(out.stdout, again.stdout);
    assert_eq!(run(&["verify", "nonsense"], "").status.code(), Some(2));
}

#[test]
fn input_errors() {
    let out = run(&["np"], r#"{"slopes": [["1/2", -1]]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("slopes[0][1]"));
    assert_eq!(run(&["np"], "{").status.code(), Some(2));
    assert_eq!(run(&["np"], r#"{"slopes": [["-1", 1]]}"#).status.code(), Some(2));
    let bad_group = json!({"group": {"library": "C4", "cayley_table": [[0]]}}).to_string();
    assert_eq!(run(&["table"], &bad_group).status.code(), Some(2));
    let not_normal = json!({
        "group": {"library": "S3"},
        "subgroup": {"permutations": [[2, 1, 3]]},
        "characters": ["trivial", "trivial"]
    });
    assert_eq!(run(&["mackey"], &not_normal.to_string()).status.code(), Some(2));
    let big = json!({"base": {"library": "A5"}, "ell": 2}).to_string();
    assert_eq!(run(&["wreath", "--max-order", "1000"], &big).status.code(), Some(2));
}
