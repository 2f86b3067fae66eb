use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lorhom3"));
    c.env_remove("LORHOM3_SEED");
    c
}

fn input(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("inputs").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn catalog_list_and_show() {
    let out = run(&["catalog", "list", "--format", "json"]);
    assert_eq!(json(&out)["result"].as_array().unwrap().len(), 11);
    let out = json(&run(&["catalog", "show", "lorentz_sol"]));
    let table = out["result"]["connection"].as_array().unwrap();
    let entry = |a: &str, b: &str| {
        table.iter().find(|l| l["along"] == a && l["of"] == b).unwrap()["value"].as_str().unwrap().to_string()
    };
    assert_eq!(entry("Z", "T"), "Z");
    assert_eq!(entry("T", "Z"), "0");
    assert_eq!(entry("T", "T"), "-T");
    assert_eq!(entry("Z", "Z"), "-X");
    assert_eq!(entry("T", "X"), "X");
    assert_eq!(run(&["catalog", "show", "bogus"]).status.code(), Some(2));
}

#[test]
fn analyze_documents() {
    let out = json(&run(&["analyze", input("heis_lorentz.json").to_str().unwrap()]));
    assert_eq!(out["result"]["classification"]["geometry_class"], "LorentzHeisenberg");
    assert_eq!(out["tolerances"]["prolongation_cap"], 3);

    let out = json(&run(&["analyze", input("sol_scaled.json").to_str().unwrap()]));
    assert_eq!(out["result"]["classification"]["geometry_class"], "LorentzSOL");
    let nf = &out["result"]["normal_form"];
    assert_eq!(nf["group"], "Sol");
    assert_eq!(nf["scale"], "3");
    assert!(nf["witness"].is_array());

    let out = json(&run(&["analyze", input("unipotent_model.json").to_str().unwrap()]));
    assert_eq!(out["result"]["classification"]["geometry_class"], "LorentzSOL");
    assert_eq!(out["result"]["classification"]["transverse"]["tag"], "Sol");
}

#[test]
fn invalid_inputs_exit_3() {
    let out = run(&["analyze", input("bad_rational.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("metric.X,X"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("jacobi.json");
    std::fs::write(
        &path,
        r#"{"dimension": 3, "basis": ["a","b","c"],
            "brackets": [{"on": ["a","b"], "result": {"a": 1}}, {"on": ["a","c"], "result": {"b": 1}}],
            "metric": {"a,a": 1, "b,b": 1, "c,c": -1}}"#,
    )
    .unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi"));
    assert_eq!(run(&["analyze", "/nonexistent.json"]).status.code(), Some(3));
    assert_eq!(run(&["geodesic", "lorentz_sol", "--v0", "0,0,0"]).status.code(), Some(3));
    assert_eq!(run(&["model", "nope", "--analyze"]).status.code(), Some(2));
}

#[test]
fn geodesic_examples() {
    let out = json(&run(&["geodesic", "lorentz_sol", "--v0", "0,0,1", "--t-max", "2"]));
    let outcome = &out["result"]["trajectory"]["outcome"];
    assert_eq!(outcome["kind"], "BlowupDetected");
    assert!((outcome["t_high"].as_f64().unwrap() - 1.0).abs() < 1e-4);

    let out = json(&run(&["geodesic", "minkowski", "--v0", "1,-2,3", "--t-max", "10"]));
    assert_eq!(out["result"]["trajectory"]["outcome"]["kind"], "ReachedHorizon");

    let out = json(&run(&["geodesic", "lorentz_heisenberg", "--v0", "1,1,0", "--t-max", "50"]));
    let tr = &out["result"]["trajectory"];
    assert_eq!(tr["outcome"]["kind"], "ReachedHorizon");
    assert!(tr["max_energy_drift"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn reports_are_deterministic_and_seeded() {
    let a = run(&["geodesic", "lorentz_heisenberg", "--samples", "8", "--t-max", "5"]);
    let b = run(&["geodesic", "lorentz_heisenberg", "--samples", "8", "--t-max", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 0x5eed);
    let c = bin()
        .env("LORHOM3_SEED", "7")
        .args(["geodesic", "lorentz_heisenberg", "--samples", "8", "--t-max", "5"])
        .output()
        .unwrap();
    assert_eq!(json(&c)["seed"], 7);
    let path = input("heis_scaled_basis.json");
    let a = run(&["analyze", path.to_str().unwrap()]);
    let b = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn model_documents_round_trip_through_analyze() {
    let out = json(&run(&["model", "unipotent_family(1,0,2)"]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("model.json");
    std::fs::write(&path, out["result"]["document"].to_string()).unwrap();
    let from_file = json(&run(&["analyze", path.to_str().unwrap()]));
    let named = json(&run(&["model", "unipotent_family(1,0,2)", "--analyze"]));
    assert_eq!(from_file["result"]["classification"], named["result"]["classification"]);
}
