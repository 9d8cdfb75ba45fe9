use std::io::Write;
use std::process::Command;

use cubic_torsion::classify::{ClassificationResult, FamilyRecord, FilterReport};
use cubic_torsion::cli::{CheckReport, EnumeratedGroup, FixtureCurve, EXIT_NEEDS_INPUT, EXIT_OK, EXIT_USAGE};
use cubic_torsion::modcurve::CongruenceInvariants;
use cubic_torsion::TorsionShape;
use serde::de::DeserializeOwned;
use serde::Serialize;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bin(args: &[&str]) -> Out {
    let o = Command::new(env!("CARGO_BIN_EXE_cubic-torsion")).args(args).output().unwrap();
    Out {
        code: o.status.code().unwrap(),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

/// Parses the output and checks that reserializing gives the same JSON value.
fn round_trip<T: Serialize + DeserializeOwned>(s: &str) -> T {
    let v: T = serde_json::from_str(s).unwrap();
    let a: serde_json::Value = serde_json::from_str(s).unwrap();
    assert_eq!(serde_json::to_value(&v).unwrap(), a);
    v
}

#[test]
fn classify_by_j() {
    let o = bin(&["classify", "--j", "2268945/128"]);
    assert_eq!(o.code, EXIT_OK);
    let r: ClassificationResult = round_trip(&o.stdout);
    assert_eq!(r.torsion, TorsionShape::new(14, 14));

    let o = bin(&["classify", "--j", "1728"]);
    assert_eq!(o.code, EXIT_NEEDS_INPUT);
    assert!(o.stderr.contains("curve required"));

    let o = bin(&["classify", "--j", "-121945/32"]);
    let r: ClassificationResult = round_trip(&o.stdout);
    assert_eq!(r.torsion, TorsionShape::new(6, 30));
}

#[test]
fn classify_by_curve() {
    let o = bin(&["classify", "--curve", "0,0,0,1,0"]);
    assert_eq!(o.code, EXIT_OK);
    let r: ClassificationResult = round_trip(&o.stdout);
    assert_eq!(r.torsion, TorsionShape::new(4, 4));
    assert!(o.stdout.contains("j1728-rule"));
    assert_eq!(bin(&["classify", "--curve", "1,2,3"]).code, EXIT_USAGE);
}

#[test]
fn classify_fixture_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# label,a1,a2,a3,a4,a6\n256b1,0,0,0,-2,0\n32a1,0,0,0,4,0\nj0,0,0,0,0,1").unwrap();
    let o = bin(&["classify", "--fixtures", f.path().to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: Vec<serde_json::Value> = serde_json::from_str(&o.stdout).unwrap();
    let shapes: Vec<_> = v.iter().map(|r| (r["label"].as_str().unwrap().to_string(), r["torsion"].clone())).collect();
    assert_eq!(shapes[0], ("256b1".into(), serde_json::json!([2, 2])));
    assert_eq!(shapes[1], ("32a1".into(), serde_json::json!([4, 4])));
    assert_eq!(shapes[2], ("j0".into(), serde_json::json!([18, 18])));
}

#[test]
fn ingest() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "256b1,0,0,0,-2,0\n32a1,0,0,0,4,0").unwrap();
    let o = bin(&["ingest", "--fixtures", f.path().to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    let v: Vec<FixtureCurve> = round_trip(&o.stdout);
    assert_eq!(v.len(), 2);
    assert_eq!(v[1].j, "1728");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "ok,0,0,0,1,0\nsing,0,0,0,0,0").unwrap();
    let o = bin(&["ingest", "--fixtures", bad.path().to_str().unwrap()]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);

    let empty = tempfile::NamedTempFile::new().unwrap();
    let o = bin(&["ingest", "--fixtures", empty.path().to_str().unwrap()]);
    assert_eq!((o.code, o.stdout.trim()), (EXIT_OK, "[]"));
    assert!(o.stderr.contains("no curves"));
}

#[test]
fn verify_checks() {
    for name in ["gl2of3-borel", "genus-labels", "max-images-2-22", "j1728-anchors"] {
        let o = bin(&["verify", name]);
        assert_eq!(o.code, EXIT_OK, "{name}: {}", o.stdout);
        let r: CheckReport = round_trip(&o.stdout);
        assert!(r.passed);
    }
    let o = bin(&["verify", "unknown-check"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn verify_reports_missing_fixture() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "32a1,0,0,0,4,0").unwrap();
    let o = bin(&["verify", "j1728-anchors", "--fixtures", f.path().to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("256b1"));
}

#[test]
fn genus_command() {
    let o = bin(&["genus", "--modulus", "27", "--gens", "1,2,9,1;1,0,0,2;8,0,0,1"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let c: CongruenceInvariants = round_trip(&o.stdout);
    assert_eq!(c.genus, 4);
    assert_eq!(bin(&["genus", "--modulus", "64", "--gens", "1,1,0,1"]).code, EXIT_USAGE);
}

#[test]
fn groups_enum_command() {
    let o = bin(&["groups-enum", "--modulus", "3", "--s3-only"]);
    assert_eq!(o.code, EXIT_OK);
    let v: Vec<EnumeratedGroup> = round_trip(&o.stdout);
    assert!(v.iter().all(|g| g.s3_type));
    let o = bin(&["groups-enum", "--modulus", "3", "--s3-only", "--all"]);
    let all: Vec<EnumeratedGroup> = round_trip(&o.stdout);
    assert_eq!(all.len(), 40);
    assert!(v.len() < all.len());
}

#[test]
fn filter_command() {
    let o = bin(&["filter", "--poly", "x^7 - 2", "--seed", "5"]);
    let r: FilterReport = round_trip(&o.stdout);
    assert_eq!(r.seed, 5);
    assert!(o.stdout.contains("ruled_out"));
    let o = bin(&["filter", "--poly", "x^3 - 2", "--seed", "5", "--trials", "12"]);
    let r: FilterReport = round_trip(&o.stdout);
    assert_eq!(r.trials, 12);
    assert_eq!(bin(&["filter", "--poly", "x^3 - 2"]).code, EXIT_USAGE);
    assert_eq!(bin(&["filter", "--poly", "x^^3", "--seed", "1"]).code, EXIT_USAGE);
}

#[test]
fn export_table() {
    let o = bin(&["export-table1"]);
    let v: Vec<FamilyRecord> = round_trip(&o.stdout);
    assert_eq!(v.len(), 20);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.json");
    let o = bin(&["export-table1", "--out", p.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    let again: Vec<FamilyRecord> = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn help_and_usage() {
    let o = bin(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    for cmd in ["classify", "verify", "genus", "groups-enum", "filter", "export-table1", "ingest"] {
        assert!(o.stdout.contains(cmd), "{cmd}");
    }
    assert_eq!(bin(&[]).code, EXIT_USAGE);
    assert_eq!(bin(&["frobnicate"]).code, EXIT_USAGE);
}
