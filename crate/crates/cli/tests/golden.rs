//! JSON schemas pinned by committed golden files; `UPDATE_GOLDEN=1` rewrites them.

use std::path::PathBuf;
use std::process::Command;

fn golden(name: &str, args: &[&str]) {
    let out = Command::new(env!("CARGO_BIN_EXE_klein336")).args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(out.stdout == expected, "{name} differs from {}", path.display());
}

#[test]
fn classes_of_h() {
    golden("classes_h", &["group", "classes", "--in", "H"]);
}

#[test]
fn subgroup_table() {
    golden("subgroups", &["group", "subgroups"]);
}

#[test]
fn fixed_g7() {
    golden("fixed_g7", &["fixed", "--element", "g7"]);
}

#[test]
fn fixed_rho2() {
    golden("fixed_rho2", &["fixed", "--element", "rho2"]);
}

#[test]
fn classify_beta() {
    golden("classify_beta", &["classify", "--locus", "beta"]);
}

#[test]
fn stabilizer_half_period() {
    golden("stabilizer_xi1", &["stabilizer", "--point", "[1/2,0,0,0,0,0]", "--in", "G"]);
}

#[test]
fn singularities_g() {
    golden("singularities_g", &["singularities", "--quotient", "G"]);
}

#[test]
fn verify_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("verify.json");
    Command::new(env!("CARGO_BIN_EXE_klein336")).args(["verify", "--json"]).arg(&json).output().unwrap();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verify.json");
    let bytes = std::fs::read(&json).unwrap();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &bytes).unwrap();
        return;
    }
    assert!(bytes == std::fs::read(&path).unwrap(), "verify report differs from golden");
}
