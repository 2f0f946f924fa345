//! Runs the binary and compares stdout with files under `tests/golden`.
//! Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deristab"))
        .args(args)
        .env_remove("DERISTAB_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn check(name: &str, args: &[&str]) {
    for json in [false, true] {
        let mut full: Vec<&str> = Vec::new();
        if json {
            full.push("--json");
        }
        full.extend_from_slice(args);
        let out = run(&full);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let stdout = String::from_utf8(out.stdout).unwrap();
        let path = golden_dir().join(format!("{name}.{}", if json { "json" } else { "txt" }));
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(stdout, expected, "{name} ({})", path.display());
        // Identical invocations give identical bytes.
        assert_eq!(run(&full).stdout, stdout.as_bytes(), "{name} is not deterministic");
    }
}

#[test]
fn commutes() {
    check(
        "commutes_intro",
        &["commutes", "-n", "3", "-D", "1-x1*x2,x1^3,x2", "-f", "x1,x2,x3+7"],
    );
    check("commutes_identity", &["commutes", "-D", "x1*x2,x1+1", "-f", "x1,x2"]);
    check("commutes_fails", &["commutes", "-D", "x1,x2", "-f", "x1+1,x2"]);
}

#[test]
fn invariant_translations() {
    check("translations_line", &["invariant-translations", "-n", "1", "-D", "1"]);
    check(
        "translations_intro",
        &["invariant-translations", "-n", "3", "-D", "1-x1*x2,x1^3,x2"],
    );
    check("translations_euler", &["invariant-translations", "-D", "x1"]);
    check(
        "translations_slanted",
        &["invariant-translations", "-D", "2*x2 - x1 + 3,1"],
    );
}

#[test]
fn witness() {
    check("witness_line_family", &["witness", "-n", "2", "-D", "1,x1"]);
    check("witness_quadratic_line", &["witness", "-n", "1", "-D", "x1^2"]);
    check("witness_inconclusive", &["witness", "-n", "2", "-D", "1,x1*x2+1"]);
    check("witness_plane", &["witness", "-D", "x2-x1,x2-x1+1", "-c", "1,1"]);
    check("witness_dependence", &["witness", "-D", "x1+x2,2*x1+2*x2"]);
    check("witness_constant_q", &["witness", "-D", "1,5", "-c", "1,0"]);
}

#[test]
fn shamsuddin() {
    check("shamsuddin_simple", &["shamsuddin", "-a", "x1", "-b", "1"]);
    check("shamsuddin_solvable", &["shamsuddin", "-a", "1", "-b", "x1"]);
    check(
        "shamsuddin_antiderivative",
        &["shamsuddin", "-a", "0", "-b", "x1^2 - 1/3"],
    );
}

#[test]
fn isotropy_b() {
    check(
        "isotropy_b_build",
        &["isotropy-b", "-b", "x1", "-p", "w^2", "--ctilde", "2", "--cbar", "3"],
    );
    check(
        "isotropy_b_decompose",
        &["isotropy-b", "-b", "x1", "-f", "x1 + 1, x1 + x2"],
    );
    check("isotropy_b_not_member", &["isotropy-b", "-b", "x1", "-f", "x1 + 1, x2"]);
}

#[test]
fn enumerate_and_classify() {
    check(
        "enumerate_quadratic_line",
        &["enumerate", "-n", "1", "-D", "x1^2", "--deg", "2", "--coeff", "2"],
    );
    check(
        "enumerate_translations",
        &["enumerate", "-D", "1", "--deg", "1", "--coeff", "2"],
    );
    check("classify_flag", &["classify", "-D", "1,0", "-f", "x1,2*x2"]);
    check(
        "classify_translation",
        &["classify", "-n", "3", "-D", "1-x1*x2,x1^3,x2", "-f", "x1,x2,x3+4"],
    );
}

#[test]
fn corpus() {
    check("corpus", &["corpus"]);
}

#[test]
fn input_errors_exit_nonzero() {
    let cases: &[&[&str]] = &[
        &["commutes", "-D", "x1+,x2", "-f", "x1,x2"],
        &["commutes", "-n", "3", "-D", "x1,x2", "-f", "x1,x2"],
        &["invariant-translations", "-D", "x3"],
        &["witness", "-D", "1,x1", "-c", "1/0,1"],
        &["witness", "-D", "1,x1*x2+1", "-c", "1,0"],
        &["isotropy-b", "-b", "x2", "-p", "w"],
        &["isotropy-b", "-b", "x1", "--ctilde", "0"],
        &["enumerate", "-D", "1", "--deg", "4"],
        &["classify", "-D", "x1,x2", "-f", "x1+1,x2"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "), "{args:?}");
    }
}

#[test]
fn answers_exit_zero() {
    for args in [
        &["commutes", "-D", "x1,x2", "-f", "x1+1,x2"][..],
        &["witness", "-D", "1,x1*x2+1"][..],
    ] {
        assert!(run(args).status.success());
    }
}

#[test]
fn enumeration_cap_can_be_raised() {
    let args = ["enumerate", "-D", "1", "--deg", "2", "--coeff", "1"];
    let low = Command::new(env!("CARGO_BIN_EXE_deristab"))
        .args(args)
        .env("DERISTAB_MAX_ENUM", "5")
        .output()
        .unwrap();
    assert_eq!(low.status.code(), Some(2));
    let default = run(&args);
    assert!(default.status.success());
}
