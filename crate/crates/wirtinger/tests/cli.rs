use std::io::Write;
use std::process::{Command, Output};

use wirtinger::VerificationReport;
use wirtinger_core::WeylOperator;

fn wirtinger(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wirtinger")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn config_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn flags_override_config_file() {
    let file = config_file("# lorentz only\nsuite = lorentz\nn = 3\nseed = 9\nformat = text\n");
    let path = file.path().to_str().unwrap();
    let out = wirtinger(&["verify", "--config", path, "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = VerificationReport::from_json(&stdout(&out)).unwrap();
    let cfg = &report.header.config;
    assert_eq!((cfg.n, cfg.seed), (2, 9));
    assert_eq!(cfg.suites.len(), 1);
    assert!(report.get("lorentz.signature.n2").unwrap().passed());
}

#[test]
fn printed_variant_exits_with_failure() {
    let out = wirtinger(&["verify", "--suite", "lorentz", "--variant", "as_printed", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL    lorentz.commutator.J1.J2"));
    assert!(text.contains("failed=10"));
}

#[test]
fn bad_input_exits_with_error() {
    for args in [
        &["verify", "--suite", "nonsense"][..],
        &["verify", "--suite", "internal", "--n", "1"],
        &["verify", "--tolerance", "0"],
    ] {
        let out = wirtinger(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    let file = config_file("colour = blue\n");
    let out = wirtinger(&["verify", "--config", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_suite_list_gives_empty_report() {
    let file = config_file("suite =\nformat = json\n");
    let out = wirtinger(&["verify", "--config", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = VerificationReport::from_json(&stdout(&out)).unwrap();
    assert!(report.checks.is_empty());
    assert_eq!(report.summary.total, 0);
}

#[test]
fn json_output_is_reproducible() {
    let args = ["verify", "--suite", "transforms,gauge", "--seed", "5", "--format", "json"];
    let (a, b) = (wirtinger(&args), wirtinger(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report = VerificationReport::from_json(&stdout(&a)).unwrap();
    assert_eq!(report.to_json(), stdout(&a));
}

#[test]
fn dumped_generators_parse_back() {
    let out = wirtinger(&["dump-generators", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut sections = Vec::new();
    for block in text.split("# ").skip(2) {
        let (name, body) = block.split_once('\n').unwrap();
        let op: WeylOperator = body.trim().parse().unwrap_or_else(|e| panic!("{name}: {e:?}"));
        assert!(!op.is_zero(), "{name}");
        sections.push(name.to_string());
    }
    assert_eq!(sections.len(), 10 + 1 + 3);
    assert_eq!(sections[0], "J1");
    assert_eq!(sections[10], "O");
}

#[test]
fn diff_variants_lists_differing_pairs() {
    let out = wirtinger(&["diff-variants", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("correction: "));
    assert!(text.contains("10 of 45 pairs differ"));

    let json = stdout(&wirtinger(&["diff-variants", "--format", "json"]));
    let diff: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(diff["pairs"].as_array().unwrap().len(), 45);
}
