use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn statidx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_statidx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn compute_figure1() {
    let out = statidx(&[
        "compute",
        fixture("figure1.edges").to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["s1"], 74);
    assert_eq!(v["s2"], 169);
    assert_eq!(v["s1_co"], 22);
    assert_eq!(v["s2_co"], 60);
    assert_eq!(v["transmission"], serde_json::json!([5, 5, 4, 6, 4]));
    assert_eq!(v["transmission_regular_k"], serde_json::Value::Null);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn compute_small_fixtures() {
    let v = json(&statidx(&[
        "compute",
        fixture("p3.edges").to_str().unwrap(),
        "--json",
    ]));
    assert_eq!(
        (
            v["s1"].clone(),
            v["s2"].clone(),
            v["s1_co"].clone(),
            v["s2_co"].clone()
        ),
        (10.into(), 12.into(), 6.into(), 9.into())
    );
    let v = json(&statidx(&[
        "compute",
        fixture("k2.edges").to_str().unwrap(),
        "--json",
    ]));
    assert_eq!(
        (
            v["s1"].clone(),
            v["s2"].clone(),
            v["s1_co"].clone(),
            v["s2_co"].clone()
        ),
        (2.into(), 1.into(), 0.into(), 0.into())
    );
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("loop.edges");
    std::fs::write(&bad, "0 0\n").unwrap();
    assert_eq!(
        statidx(&["compute", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let split = dir.path().join("split.edges");
    std::fs::write(&split, "n 4\n0 1\n2 3\n").unwrap();
    let out = statidx(&["compute", split.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));

    let missing = dir.path().join("nope.edges");
    assert_eq!(
        statidx(&["compute", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        statidx(&["generate", "--family", "nanotorus", "--p", "3", "--q", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn generate_edge_lists() {
    let out = statidx(&["generate", "--family", "hypercube", "--n", "2"]);
    assert_eq!(stdout(&out), "n 4\n0 1\n0 2\n1 3\n2 3\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.edges");
    let out = statidx(&[
        "generate",
        "--family",
        "kneser",
        "--p",
        "5",
        "--k",
        "2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n 10\n"));
    assert_eq!(text.lines().count(), 16);

    let out = statidx(&[
        "generate",
        "--family",
        "hypercube",
        "--n",
        "5",
        "--max-vertices",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closed_form_modes() {
    let v = json(&statidx(&[
        "closed-form",
        "--family",
        "hypercube",
        "--n",
        "2",
        "--json",
    ]));
    assert_eq!(v["indices"]["s1_co"]["value"], 16);
    assert_eq!(v["mode"], "corrected");
    let v = json(&statidx(&[
        "closed-form",
        "--family",
        "hypercube",
        "--n",
        "2",
        "--as-printed",
        "--json",
    ]));
    assert_eq!(v["indices"]["s1_co"]["value"], -16);
    assert_eq!(v["indices"]["s1_co"]["erratum"], true);
    assert_eq!(v["indices"]["s1"]["erratum"], false);
    let v = json(&statidx(&[
        "closed-form",
        "--family",
        "intersection",
        "--p",
        "4",
        "--t",
        "2",
        "--json",
    ]));
    assert_eq!(v["indices"]["s1"]["value"], 144);
    let v = json(&statidx(&[
        "closed-form",
        "--family",
        "kneser",
        "--p",
        "5",
        "--k",
        "2",
        "--as-printed",
        "--json",
    ]));
    assert_eq!(v["indices"]["s2_co"]["value"], 7800);
    assert_eq!(v["indices"]["s2_co"]["corrected"], 6750);
}

#[test]
fn verify_exit_codes() {
    let out = statidx(&["verify", "--family", "kneser", "--p", "5..7", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = statidx(&[
        "verify",
        "--family",
        "hypercube",
        "--n",
        "1..4",
        "--mode",
        "as-printed",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["errata"], 7);
    assert_eq!(v["summary"]["failed"], 0);
    // a single degenerate torus is rejected as an input error
    let out = statidx(&["verify", "--family", "nanotorus", "--p", "4", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = statidx(&[
        "verify", "--family", "corpus", "--count", "30", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bounds_and_identities() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = dir.path().join("p4.edges");
    std::fs::write(&p4, "0 1\n1 2\n2 3\n").unwrap();
    let v = json(&statidx(&["bounds", p4.to_str().unwrap(), "--json"]));
    assert_eq!(
        (v["s1_lower"].clone(), v["s1_actual"].clone()),
        (26.into(), 28.into())
    );
    assert_eq!(v["equality"], false);
    assert_eq!(v["complement_diameter"], 3);

    let out = statidx(&[
        "identities",
        fixture("figure1.edges").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let erratum: Vec<_> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["matched"] == false)
        .collect();
    assert_eq!(erratum.len(), 1);
    assert_eq!(erratum[0]["check"], "printed_s1_co");
    assert_eq!(erratum[0]["claimed"], 11);
    assert_eq!(erratum[0]["registered_erratum"], true);
}

#[test]
fn outputs_are_deterministic_across_threads() {
    let runs = |extra: &[&str]| {
        let mut args = vec!["verify", "--family", "grid", "--json"];
        args.extend_from_slice(extra);
        stdout(&statidx(&args))
    };
    assert_eq!(runs(&["--threads", "1"]), runs(&["--threads", "4"]));
}
