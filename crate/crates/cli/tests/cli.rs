use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, Output) {
    let out = Command::new(env!("CARGO_BIN_EXE_braidwork"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit code");
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v, out)
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("braidwork-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, v: &Value) -> String {
    let p = tmp(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.display().to_string()
}

#[test]
fn g4_monodromy_profile() {
    let (code, v, _) = run(&["monodromy", "profile", "--catalog", "G4_paper"]);
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 24);
    let counts: Vec<(u64, u64)> = v["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["cycles"][0]["count"].as_u64().unwrap(), p["cycles"][0]["length"].as_u64().unwrap()))
        .collect();
    assert_eq!(counts, [(8, 3), (8, 3), (4, 6)]);
    // 2 - 2g = 2·24 - (8·2 + 8·2 + 4·5)
    let g = (8 * 2 + 8 * 2 + 4 * 5 - 2 * 24 + 2) / 2;
    assert_eq!(v["genus"], g);
    assert_eq!(v["transitive"], true);
}

#[test]
fn braid_subgroup_index() {
    let (code, v, _) = run(&["present", "tc", "--catalog", "Br4", "--subgroup", "s1^2,s2,s3"]);
    assert_eq!(code, 0);
    assert_eq!(v["index"], 4);
    assert_eq!(v["status"], "complete");
}

#[test]
fn garside_w_lemma() {
    let (code, v, _) = run(&["garside", "equal", "--type", "D5", "--u", "w4 s2", "--v", "s3 w4"]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);
    // w4 = s1 s1p s2 s3 s4 needs s4, which D4 lacks
    let (code, v, _) = run(&["garside", "equal", "--type", "D4", "--u", "w4 s2", "--v", "s3 w4"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "input");
    let (code, v, _) = run(&["garside", "equal", "--type", "A2", "--u", "s1", "--v", "s2"]);
    assert_eq!(code, 1);
    assert_eq!(v["equal"], false);
}

#[test]
fn garside_nf_and_delta() {
    let (code, v, _) = run(&["garside", "nf", "--type", "I2(6)", "--word", "a b a b a b"]);
    assert_eq!(code, 0);
    assert_eq!(v["normal_form"]["delta_power"], 1);
    assert_eq!(v["normal_form"]["factors"], serde_json::json!([]));
    let (_, v, _) = run(&["garside", "delta", "--type", "D3"]);
    assert_eq!(v["length"], 6);
    assert_eq!(v["conjugation"][0], serde_json::json!(["s1", "s1p"]));
}

#[test]
fn gt_commands() {
    let (code, v, _) = run(&["gt", "act", "--n", "3", "--lambda", "-1", "--f", "[x,y]", "--backend", "coxeter:3,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["relators"].as_array().unwrap().len(), 3);
    assert_eq!(v["automorphism"], true);
    let (code, v, _) = run(&["gt", "images", "--n", "3", "--lambda", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["images"], serde_json::json!(["s1", "s2"]));
    let (code, v, _) = run(&["gt", "stabilize", "--n", "3", "--lambda", "3", "--f", "[x,y]"]);
    assert_eq!(code, 0);
    assert_eq!(v["index"], 4);
    let (code, _, _) = run(&["gt", "images", "--n", "5", "--lambda", "3", "--f", "[x,y]", "--matsumoto"]);
    assert_eq!(code, 0);
    let (code, v, _) = run(&["gt", "gd-check", "--m", "5", "--lambda", "1", "--g", "a"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["type"], "precondition");
    let (code, v, _) = run(&["gt", "act", "--n", "3", "--lambda", "1", "--f", "x"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["type"], "precondition");
}

#[test]
fn falsified_maps_exit_1() {
    let hom = serde_json::json!({"source": "Br3", "target": "Br3", "images": {"s1": "s1", "s2": "s1^2"}});
    let path = write("bad-hom.json", &hom);
    let (code, v, _) = run(&["present", "verify-map", "--input", &path, "--backend", "torsion:2"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"]["verdict"], "falsified");
    let (code, v, _) = run(&["present", "verify-map", "--map", "g12-conjugation", "--backend", "torsion:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["strength"], "necessary-condition evidence");
    let (code, v, _) = run(&["present", "verify-map", "--map", "i26-transported-conjugation", "--backend", "garside:I2(6)"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["strength"], "proof");
}

#[test]
fn budget_exceeded_exits_2() {
    let (code, v, _) = run(&["present", "tc", "--catalog", "Br3", "--budget-cosets", "50"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "budget_exceeded");
    let (code, v, _) = run(&["present", "quotient", "--catalog", "Br4", "--torsion", "3", "--budget-cosets", "100"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "budget");
}

#[test]
fn input_errors_exit_3() {
    let (code, v, out) = run(&["garside", "nf", "--type", "Q7", "--word", "s1"]);
    assert_eq!(code, 3);
    assert!(v["error"].is_object());
    assert!(!out.stderr.is_empty());
    let (code, v, _) = run(&["nonsense"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["type"], "usage");
    let (code, _, _) = run(&["present", "tc", "--catalog", "Br3", "--budget-cosets", "0"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["group", "info", "--catalog", "G99"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn invariants_check_and_round_trip() {
    let (code, v, _) = run(&["invariants", "check", "--catalog", "G4", "--poly", "g1", "--poly", "g2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][1]["invariant"], true);
    let (code, _, _) = run(&["invariants", "check", "--catalog", "G4", "--poly", "f1"]);
    assert_eq!(code, 1);
    let (code, v, _) = run(&["invariants", "compute", "--catalog", "S3_paper"]);
    assert_eq!(code, 0);
    assert_eq!(v["degrees"], serde_json::json!([2, 3]));
    let path = write("s3-invariants.json", &v);
    let (code, v, _) = run(&["invariants", "check", "--catalog", "S3_paper", "--poly-file", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn group_info_round_trips() {
    let (code, v, _) = run(&["group", "info", "--catalog", "G4_paper"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 24);
    assert_eq!(v["reflections"], 8);
    assert_eq!(v["degrees"], serde_json::json!([4, 6]));
    assert_eq!(v["field_of_definition"]["conductor"], 3);
    let path = write("g4-info.json", &v);
    let (code, w, _) = run(&["group", "info", "--input", &path]);
    assert_eq!(code, 0);
    assert_eq!(w["order"], 24);
    assert_eq!(w["spec"], v["spec"]);
}

#[test]
fn arrangement_commands() {
    let (code, v, _) = run(&["arrangement", "supersolvable", "--catalog", "G(2,2,4)", "--brute-force"]);
    assert_eq!(code, 0);
    assert_eq!(v["supersolvable"], false);
    assert_eq!(v["all_chains"], false);
    let (code, v, _) = run(&["arrangement", "discriminant", "--catalog", "G(2,1,3)"]);
    assert_eq!(code, 0);
    let path = write("b3-disc.json", &v);
    let (code, v, _) = run(&["arrangement", "supersolvable", "--input", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["supersolvable"], true);
    assert_eq!(v["chain"].as_array().unwrap().len(), 4);
}

#[test]
fn quotient_feeds_table_backend() {
    let (code, v, _) = run(&["present", "quotient", "--catalog", "Br3", "--torsion", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 24);
    let path = write("g4-table.json", &v);
    let backend = format!("table:{path}");
    let (code, v, _) = run(&["present", "verify-map", "--map", "artb2-to-br", "--backend", "torsion:2"]);
    assert_eq!(code, 0, "{v}");
    let hom = serde_json::json!({"source": "Br3", "target": "Br3", "images": {"s1": "s2", "s2": "s1"}});
    let hpath = write("swap.json", &hom);
    let (code, _, _) = run(&["present", "verify-map", "--input", &hpath, "--backend", &backend]);
    assert_eq!(code, 0);
}

#[test]
fn profile_round_trips_into_genus() {
    let spec = serde_json::json!({"group": {"kind": "catalog", "name": "S3"}, "fiber": "regular", "x": "s1", "y": "s2"});
    let path = write("s3-cover.json", &spec);
    let (code, v, _) = run(&["monodromy", "profile", "--input", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["genus"], 0);
    let ppath = write("s3-profile.json", &v);
    let (code, g, _) = run(&["monodromy", "genus", "--input", &ppath]);
    assert_eq!(code, 0);
    assert_eq!(g["genus"], 0);
    let bad = serde_json::json!({"degree": 2, "points": [
        {"label": "0", "cycles": [{"length": 2, "count": 1}]},
        {"label": "1", "cycles": [{"length": 1, "count": 2}]},
        {"label": "inf", "cycles": [{"length": 1, "count": 2}]}]});
    let bpath = write("odd-profile.json", &bad);
    let (code, v, _) = run(&["monodromy", "genus", "--input", &bpath]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "falsified");
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["paper-suite", "--criteria", "4,7", "--seed", "11"];
    let (_, _, a) = run(&args);
    let (_, _, b) = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let path = tmp("suite.json");
    let p = path.display().to_string();
    let (_, _, c) = run(&["acceptance", "--criteria", "7", "--json", &p]);
    assert!(c.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["criteria"][0]["id"], 7);
    assert_eq!(v["criteria"][0]["passed"], true);
    assert!(v["criteria"][0].get("elapsed_secs").is_none());
}
