use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

use realtrop::puiseux::PuiseuxPoly;
use realtrop::seminorm::{CompatibleFamily, DiagonalSignedSeminorm, FamilyMorphism, SeminormExpr, SignedFlag};
use realtrop::tropical::LinearEmbedding;
use realtrop::valuation::Valuation;
use realtrop::Limits;

const LINE: &str = "[[1,0,1],[0,1,1]]";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realtrop")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_realtrop"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_kind(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(1), "{args:?} should fail");
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["error"]["kind"].as_str().unwrap().to_string()
}

fn polys(xs: &[&str]) -> Vec<PuiseuxPoly> {
    xs.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn circuits_of_the_line() {
    assert_eq!(ok_json(&["circuits", LINE]), json!([[["+", "0"], ["+", "0"], ["-", "0"]]]));
}

#[test]
fn equal_signs_are_not_on_the_line() {
    assert_eq!(ok_json(&["member", "+:0,+:0,-:0", LINE]), json!({"member": false}));
    assert_eq!(ok_json(&["member", "+:0,-:0,+:0", LINE]), json!({"member": true}));
    // Puiseux coordinates are tropicalized first.
    assert_eq!(ok_json(&["member", "1,t,1+t", LINE]), json!({"member": true}));
}

#[test]
fn zero_point_is_rejected() {
    assert_eq!(error_kind(&["tropicalize", "0"]), "all_zero");
    assert_eq!(error_kind(&["tropicalize", "0,0,0"]), "all_zero");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["circuits"]).status.code(), Some(2));
    assert_eq!(run(&["--convention", "log", "circuits", LINE]).status.code(), Some(2));
    assert_eq!(error_kind(&["circuits", "[[1,"]), "invalid_input");
    assert_eq!(error_kind(&["circuits", "[[\"1+\"]]"]), "syntax");
    assert_eq!(error_kind(&["circuits", "[[1,2],[2,4]]"]), "rank_deficient");
    assert_eq!(error_kind(&["--cap", "1", "covectors", "[[1,0,1,1],[0,1,1,2]]"]), "cap_exceeded");
}

#[test]
fn output_is_deterministic() {
    let m = "[[1,0,1,\"t\",2],[0,1,1,1,\"-1+t^(1/2)\"],[1,1,0,0,3]]";
    for cmd in ["circuits", "covectors", "bergman", "gp-check"] {
        let (a, b) = (run(&[cmd, m]), run(&[cmd, m]));
        assert_eq!(a.status.code(), Some(0), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn multiplicative_convention() {
    let doc = ok_json(&["--convention", "mult", "tropicalize", "1,-1+t,t^(1/2)"]);
    assert_eq!(doc["point"], "+:0,-:0,+:1/2");
    assert_eq!(doc["coords"][2], json!({"sign": "+", "val": "1/2", "mult": "+e^{-1/2}"}));
}

#[test]
fn inputs_from_stdin_and_files() {
    let out = run_stdin(&["circuits", "-"], LINE);
    assert_eq!(serde_json::from_slice::<Value>(&out.stdout).unwrap(), ok_json(&["circuits", LINE]));

    let path = std::env::temp_dir().join(format!("realtrop-cli-{}.json", std::process::id()));
    std::fs::write(&path, format!("{{\"matrix\": {LINE}}}")).unwrap();
    let from_file = ok_json(&["circuits", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file, ok_json(&["circuits", LINE]));
}

#[test]
fn covector_report_of_the_line() {
    let doc = ok_json(&["covectors", LINE]);
    assert_eq!(doc["axioms"]["ok"], true);
    assert_eq!(doc["cocircuits"].as_array().unwrap().len(), 6);
    // Zero, six cocircuits and six topes.
    assert_eq!(doc["vectors"].as_array().unwrap().len(), 13);
    let fan = ok_json(&["bergman", LINE]);
    assert_eq!(fan["rank"], 2);
    assert_eq!(fan["covectors"], doc["vectors"]);
}

#[test]
fn gp_check_detects_a_broken_relation() {
    let gp = ok_json(&["gp-check", "[[1,0,1,1],[0,1,1,2]]"]);
    assert_eq!(gp["ok"], true);
    // All-positive signs on four vectors in the upper half plane satisfy
    // χ01·χ23 − χ02·χ13 + χ03·χ12 ∋ 0; flipping χ02 makes every term positive.
    let broken = json!({
        "rank": 2, "ground": ["a", "b", "c", "d"], "hyperfield": "S",
        "values": [
            {"tuple": [0, 1], "value": "+"}, {"tuple": [0, 2], "value": "-"}, {"tuple": [0, 3], "value": "+"},
            {"tuple": [1, 2], "value": "+"}, {"tuple": [1, 3], "value": "+"}, {"tuple": [2, 3], "value": "+"}
        ]
    });
    let doc = ok_json(&["gp-check", &broken.to_string()]);
    assert_eq!(doc["hyperfield"], "S");
    assert_eq!(doc["ok"], false);
}

#[test]
fn seminorm_round_trips() {
    let left = r#"{"basis":[["1","0"],["0","1"]],"c":["0","1"]}"#;
    let right = r#"{"basis":[["0","1"],["1","-1"]],"c":["0",null]}"#;
    let composed = ok_json(&["seminorm", "compose", left, right]);
    let expr = SeminormExpr::from_json(&composed).unwrap();
    let composed_text = composed.to_string();

    let diagonal = ok_json(&["seminorm", "diagonalize", &composed_text]);
    let diagonal_text = diagonal.to_string();
    for f in ["1,0", "0,1", "1,-1", "2,-1", "-3,5", "1/2,1/3"] {
        let a = ok_json(&["seminorm", "eval", &composed_text, f]);
        let b = ok_json(&["seminorm", "eval", &diagonal_text, f]);
        assert_eq!(a["sign"], b["sign"], "at {f}");
        let direct = expr.eval(&f.split(',').map(|s| s.parse().unwrap()).collect::<Vec<PuiseuxPoly>>()).unwrap();
        assert_eq!(a["sign"], direct.sign().to_string());
        assert_eq!(a["val"], direct.val().to_string());
    }

    let flags = ok_json(&["seminorm", "flags", left]);
    let signed = SignedFlag::from_json(&flags["signed"]).unwrap();
    assert_eq!(signed.to_json(), flags["signed"]);
    let back = SeminormExpr::from(signed.to_diagonal().unwrap());
    for f in [["1", "0"], ["0", "1"], ["1", "-1"], ["-1", "3"]] {
        let x = polys(&f);
        assert_eq!(back.eval(&x).unwrap(), SeminormExpr::from_json(&left.parse().unwrap()).unwrap().eval(&x).unwrap());
    }

    let phi = ok_json(&["seminorm", "phi", "--fiber", left]);
    assert_eq!(phi["complete"], true);
    assert_eq!(phi["fiber"].as_array().unwrap().len(), 2);
    let equal_weights = r#"{"basis":[["1","0"],["0","1"]],"c":["0","0"]}"#;
    assert_eq!(error_kind(&["seminorm", "phi", "--fiber", equal_weights]), "infinite_fiber");
    assert_eq!(
        error_kind(&["seminorm", "diagonalize", r#"{"basis":[["t","0"],["0","1"]],"c":["0","1"]}"#]),
        "not_trivially_valued"
    );
}

#[test]
fn projection_lands_in_the_linear_space() {
    let s = r#"{"basis":[["1","1"],["1","-1"]],"c":["0","1/2"]}"#;
    let y = ok_json(&["seminorm", "project", s, LINE]);
    let point = y["point"].as_str().unwrap();
    assert_eq!(ok_json(&["member", point, LINE]), json!({"member": true}));
}

#[test]
fn family_check_and_reconstruction() {
    let limits = Limits::default();
    let e = |k: usize| -> Vec<PuiseuxPoly> { (0..2).map(|j| PuiseuxPoly::from_int((j == k) as i64)).collect() };
    let d = DiagonalSignedSeminorm::new(vec![polys(&["1", "t"]), polys(&["-1", "2"])], vec![Valuation::from_int(0), Valuation::from_int(1)])
        .unwrap();
    let s = SeminormExpr::from(d);
    let source = LinearEmbedding::from_columns(&[e(0), e(1), polys(&["1", "1"])], &limits).unwrap();
    let target = LinearEmbedding::from_columns(&[polys(&["1", "1"]), e(0)], &limits).unwrap();
    let morphism = FamilyMorphism { source: 0, target: 1, map: vec![2, 0] };
    let family = CompatibleFamily::from_seminorm(&s, vec![source, target], vec![morphism]).unwrap();
    let doc = family.to_json().to_string();

    let probes = r#"[["0","1"],["1","1"]]"#;
    let out = ok_json(&["limit", "check", &doc, "--probes", probes]);
    assert_eq!(out["consistent"], true);
    let scale = s.eval(&e(0)).unwrap();
    for (k, f) in [e(1), polys(&["1", "1"])].iter().enumerate() {
        let expected = s.eval(f).unwrap().div(&scale).unwrap();
        assert_eq!(out["values"][k]["sign"], expected.sign().to_string());
        assert_eq!(out["values"][k]["val"], expected.val().to_string());
    }

    let mut corrupted: Value = serde_json::from_str(&doc).unwrap();
    let sign = &mut corrupted["members"][1]["point"][1]["sign"];
    *sign = Value::String(if *sign == "+" { "-" } else { "+" }.into());
    assert_eq!(error_kind(&["limit", "check", &corrupted.to_string()]), "inconsistent_family");
}

#[test]
fn nondiagonalizable_fixture() {
    assert_eq!(ok_json(&["fixture", "nondiag", "1", "t"]), json!({"sign": "+"}));
    assert_eq!(ok_json(&["fixture", "nondiag", "t", "-1"]), json!({"sign": "-"}));
    assert_eq!(ok_json(&["fixture", "nondiag", "0", "0"]), json!({"sign": "0"}));
}
