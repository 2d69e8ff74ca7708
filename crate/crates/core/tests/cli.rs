use std::process::Command;

use serde_json::Value;

fn edgesym(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_edgesym"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap()
    };
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn verify_reads_graph6_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("double_broom.g6");
    std::fs::write(&path, "F?oHg\n").unwrap();
    let (code, v, _) = edgesym(&["verify", "--graph", path.to_str().unwrap(), "--edges", "0-4,4-5"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["results"]["holds"], true);
    assert_eq!(v["results"]["autG"], "8");
    assert_eq!(v["results"]["aoG"], 4);
    assert_eq!(v["results"]["autGminus"], "12");
    assert_eq!(v["results"]["aoGminus"], 6);
}

#[test]
fn verify_reads_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("double_broom.txt");
    std::fs::write(&path, "7 6\n0 4\n1 4\n4 5\n5 6\n6 2\n6 3\n").unwrap();
    let (code, v, _) = edgesym(&["verify", "--graph", path.to_str().unwrap(), "--edges", "0-4,4-5"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["graph6"], "F?oHg");
}

#[test]
fn aut_of_k4() {
    let (code, v, _) = edgesym(&["aut", "--graph6", "C~"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["order"], "24");
    assert!(!v["results"]["generators"].as_array().unwrap().is_empty());
}

#[test]
fn orbit_of_example_edge_set() {
    let (code, v, _) = edgesym(&[
        "orbit",
        "--graph",
        "F?oHg",
        "--labels",
        "a,b,c,d,e,f,g",
        "--edges",
        "a-e,e-f",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["size"], 4);
    assert_eq!(v["results"]["kind"], "pair-set");
}

#[test]
fn exhaustive_sweep_at_five() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let (code, v, _) = edgesym(&[
        "sweep",
        "--n",
        "4",
        "--subsets",
        "all",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["violations"], 0);
    let rows = std::fs::read_to_string(&csv).unwrap();
    // 3^6 - 2^6 checks plus the header
    assert_eq!(rows.lines().count(), 729 - 64 + 1);

    let (code, v, _) = edgesym(&["sweep", "--n", "5", "--subsets", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["violations"], 0);
    assert_eq!(v["results"]["checks"], 58025);
}

#[test]
fn seeded_reports_are_reproducible() {
    let args = [
        "sweep", "--n", "6", "--random-graphs", "50", "--samples", "5", "--seed", "9",
    ];
    let (_, a, _) = edgesym(&args);
    let (_, b, _) = edgesym(&[&args[..], &["--threads", "3"]].concat());
    let mut b = strip_timing(b);
    b["inputs"]["threads"] = 1.into();
    assert_eq!(strip_timing(a), b);

    let sample = ["er-sample", "--graph", "Ch", "--trials", "5000", "--seed", "3"];
    let (code, a, _) = edgesym(&sample);
    assert_eq!(code, 0);
    let (_, b, _) = edgesym(&sample);
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn er_commands() {
    let (code, v, _) = edgesym(&["er-prob", "--graph", "Ch"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["probability"]["numerator"], "3");
    assert_eq!(v["results"]["probability"]["denominator"], "5");

    let (code, v, _) = edgesym(&["er-check-cancel", "--nmax", "6"]);
    assert_eq!(code, 0);
    assert!(v["results"]["failures"].as_array().unwrap().is_empty());

    let (code, v, _) = edgesym(&["proof-chain", "--graph", "Ch", "--edges", "1-2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["holds"], true);
}

#[test]
fn deck_round_trips_through_recon_filter() {
    let dir = tempfile::tempdir().unwrap();
    let deck = dir.path().join("deck.json");
    let (code, v, _) = edgesym(&["deck", "--graph", "Dhc", "--out", deck.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["cards"], 5);

    let (code, v, _) = edgesym(&["recon-filter", "--deck", deck.to_str().unwrap(), "--blind"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["certified"], true);
    assert_eq!(v["results"]["reconstructed"]["aut_order"], "10");

    let (code, v, _) = edgesym(&["recover-aut", "--graph", "Dhc"]);
    assert_eq!(code, 0);
    assert!(v["results"]["cards"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["recovered"] == "10"));
}

#[test]
fn input_errors() {
    let (code, _, err) = edgesym(&["verify", "--graph", "C~", "--edges", "0-9"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    assert_eq!(edgesym(&["er-sample", "--graph", "Ch"]).0, 2);
    assert_eq!(edgesym(&["recon-filter", "--graph", "Bw"]).0, 0);
    assert_eq!(edgesym(&["recon-filter", "--graph", "C`"]).0, 2);
    assert_eq!(edgesym(&["aut", "--graph", "/no/such/file"]).0, 2);
}
