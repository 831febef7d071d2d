use std::process::{Command, Output};

use serde_json::Value;

fn kneser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kneser"))
        .args(args)
        .env_remove("KNESER_THREADS")
        .output()
        .expect("spawn kneser")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn betti_json() {
    let out = kneser(&["betti", "--n", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["field"], 2);
    let b2 = v["betti"].as_array().unwrap().iter().find(|r| r["dim"] == 2).unwrap();
    assert_eq!(b2["betti"], 4);
    assert_eq!(v["face_counts"]["0"], 10);
}

#[test]
fn betti_csv_over_gf3() {
    let out = kneser(&["--format", "csv", "-p", "3", "betti", "--n", "2", "--k", "0", "--max-dim", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "dim,betti\n0,0\n1,0\n2,1\n3,0\n");
}

#[test]
fn resource_cap_exits_2() {
    let out = kneser(&["--max-simplices", "1000", "betti", "--n", "3", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max_simplices"));
}

#[test]
fn invalid_input_exits_64() {
    assert_eq!(kneser(&["betti", "--n", "1", "--k", "0"]).status.code(), Some(64));
    assert_eq!(kneser(&["bogus"]).status.code(), Some(64));
    assert_eq!(kneser(&["-p", "4", "betti", "--n", "2", "--k", "0"]).status.code(), Some(64));
}

#[test]
fn unwritable_output_exits_3() {
    let out = kneser(&["-o", "/nonexistent-dir/out.json", "bounds", "--table", "bigdim", "--n", "3", "--k", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_passes() {
    for lemma in ["dist", "n3", "max-2n", "contiguity"] {
        let out = kneser(&["verify", "--lemma", lemma]);
        assert_eq!(out.status.code(), Some(0), "{lemma}");
        assert_eq!(json(&out)["pass"], true, "{lemma}");
    }
}

#[test]
fn bounds_tables() {
    let out = kneser(&["--format", "csv", "bounds", "--table", "bigdim", "--n", "3..4", "--k", "0..2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("3,1,7,28"), "{text}");
    assert!(text.contains("4,1,9,45"), "{text}");

    let out = kneser(&["bounds", "--table", "smalldim", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("paper_discrepancy"));
}

#[test]
fn certificate_and_export() {
    let out = kneser(&["certificate", "--n", "3", "--m", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["rank_lower_bound"], 7);

    let dir = std::env::temp_dir().join(format!("kneser-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tops.txt");
    let out = kneser(&["-o", path.to_str().unwrap(), "export", "--n", "2", "--k", "0", "--r", "2", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let (_, simplices) = kneser_core::complex::parse_simplex_export(&text).unwrap();
    assert_eq!(simplices.len(), 8);
    std::fs::remove_dir_all(&dir).unwrap();
}
