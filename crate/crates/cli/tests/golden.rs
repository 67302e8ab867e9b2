//! Runs the binary on fixed command lines and compares stdout with files in
//! `tests/golden/`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture() -> String {
    manifest_dir().join("../../fixtures/s6-outer.json").display().to_string()
}

fn tarski(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tarski")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn golden(name: &str, args: &[&str], code: i32) {
    let (got_code, stdout, stderr) = tarski(args);
    assert_eq!(got_code, code, "{name}: exit code\nstdout:\n{stdout}\nstderr:\n{stderr}");
    let path = manifest_dir().join("tests/golden").join(format!("{name}.out"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).expect("write golden file");
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(stdout, expected, "{name}: stdout differs from {}", path.display());
}

#[test]
fn eval_cuntz() {
    golden("eval_cuntz", &["eval", "let t = {0->1, 1->0}; phi(t); sigma(t); unit?(t); t * {00}; {0} | {10}"], 0);
}

#[test]
fn eval_symmetric_json() {
    golden("eval_sym_json", &["--model", "sym4", "--json", "eval", "let g = (0 1 2); g * [0:3]; dom(g * [0:3])"], 0);
}

#[test]
fn eval_product() {
    golden("eval_prod", &["--model", "prod:sym2,sym3", "eval", "<(0 1), {0}> * <[0:1], (0 2)>; phi(<1, [0:0]>)"], 0);
}

#[test]
fn axiom_witnesses() {
    golden("f1_cuntz", &["axioms", "f1", "--e", "{0}"], 0);
    golden("f2_cuntz", &["axioms", "f2", "--t", "{0->1, 1->0}", "--e", "{0}"], 0);
    golden("f3_cuntz_json", &["--json", "axioms", "f3", "--e", "{1}"], 0);
    golden("f3_sampled", &["--model", "cuntz3", "--seed", "7", "axioms", "f3"], 0);
    golden("f1_sym", &["--model", "sym4", "axioms", "f1", "--e", "{0, 1, 2}"], 0);
    golden("f3_sym_obstruction", &["--model", "sym4", "axioms", "f3", "--e", "{0, 1}"], 2);
}

#[test]
fn factorizations() {
    golden("factor_cuntz", &["factorize", "--s", "{0->00, 10->01}"], 0);
    golden("factor_sym_json", &["--model", "sym4", "--json", "factorize", "--s", "[0:1, 2:0]"], 0);
}

#[test]
fn duality() {
    golden("points_sym3", &["--model", "sym3", "duality", "points"], 0);
    golden("groupoid_sym3", &["--model", "sym3", "duality", "groupoid"], 0);
}

#[test]
fn reconstructions() {
    golden("reconstruct_identity_json", &["--model", "sym3", "--json", "reconstruct", "--alpha", "identity"], 0);
    golden("reconstruct_inner", &["--model", "sym4", "reconstruct", "--alpha", "inner:(0 1)(2 3)"], 0);
    golden("reconstruct_s6_outer", &["--model", "sym6", "reconstruct", "--alpha", &fixture()], 2);
}

#[test]
fn builtin_outer_matches_fixture() {
    let (code, from_file, _) = tarski(&["--model", "sym6", "--json", "reconstruct", "--alpha", &fixture()]);
    let (_, builtin, _) = tarski(&["--model", "sym6", "--json", "reconstruct", "--alpha", "s6-outer"]);
    assert_eq!(code, 2);
    assert_eq!(from_file, builtin);
    assert!(builtin.contains("\"error\": \"SkeletonNotUltrafilter\""));
}

#[test]
fn exit_codes() {
    assert_eq!(tarski(&["--help"]).0, 0);
    assert_eq!(tarski(&["--model", "cuntz1", "eval", "1"]).0, 1);
    assert_eq!(tarski(&["eval", "{0"]).0, 1);
    assert_eq!(tarski(&["eval", "phi("]).0, 1);
    assert_eq!(tarski(&["--model", "sym3", "axioms", "f1"]).0, 1);
    assert_eq!(tarski(&["--model", "sym3", "reconstruct", "--alpha", "/nonexistent.json"]).0, 1);
    assert_eq!(tarski(&["--model", "sym3", "eval", "[0:1] | [0:2]"]).0, 2);
    assert_eq!(tarski(&["axioms", "f1", "--e", "{}"]).0, 2);
    assert_eq!(tarski(&["reconstruct", "--alpha", "identity"]).0, 2);
}

#[test]
fn parse_errors_report_positions() {
    let (code, _, stderr) = tarski(&["--model", "sym3", "eval", "{0}; {1} ^ 2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("position 9"), "{stderr}");
}

#[test]
fn printed_values_parse_back() {
    for (model, program) in [
        ("cuntz2", "{0->01, 1->1} * {00->1, 1->00}"),
        ("cuntz3", "sigma({0->1, 1->2, 2->0})"),
        ("sym5", "(0 1 2 3 4) * [0:1, 2:3]"),
        ("prod:sym2,sym2", "<(0 1), [1:1]> * <[0:1], (0 1)>"),
    ] {
        let (code, first, _) = tarski(&["--model", model, "eval", program]);
        assert_eq!(code, 0, "{model}: {program}");
        let (code, second, _) = tarski(&["--model", model, "eval", first.trim()]);
        assert_eq!(code, 0, "{model}: {first}");
        assert_eq!(first, second, "{model}");
    }
}

#[test]
fn sampled_inputs_depend_only_on_the_seed() {
    let a = tarski(&["--seed", "42", "factorize"]);
    let b = tarski(&["--seed", "42", "factorize"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert!(a.1.contains("verified: true"));
}
