//! Harness-level checks: report determinism, exit codes, config errors and
//! the text-format round trip through the binary-facing API.

use std::process::Command;

use verifier_cli::{
    parse_monoid_str, run_suite, serialize_monoid, ParsedEntity, SuiteConfig, SuiteName,
};

#[test]
fn identical_configs_yield_byte_identical_reports() {
    let mut cfg = SuiteConfig { seed: 42, ..Default::default() };
    cfg.caps.random_cases = 40;
    for suite in [
        SuiteName::MonoidProperties,
        SuiteName::TorsorSelfproduct,
        SuiteName::CohomologyFixedpoints,
        SuiteName::KummerSurjectivity,
    ] {
        let a = run_suite(&cfg, suite).unwrap().to_json();
        let b = run_suite(&cfg, suite).unwrap().to_json();
        assert_eq!(a, b, "{}", suite.as_str());
    }
}

#[test]
fn different_seeds_change_only_randomized_inputs_not_verdicts() {
    let mut cfg = SuiteConfig::default();
    cfg.caps.random_cases = 25;
    cfg.seed = 1;
    let a = run_suite(&cfg, SuiteName::MonoidProperties).unwrap();
    cfg.seed = 2;
    let b = run_suite(&cfg, SuiteName::MonoidProperties).unwrap();
    assert!(a.passed() && b.passed());
    assert_eq!(a.cases.len(), b.cases.len());
}

#[test]
fn failing_case_does_not_suppress_siblings() {
    // an invalid grid prime cannot happen through validation, so check the
    // captured-error path instead: resource-capped runs become "unknown"
    // while other cases still execute
    let mut cfg = SuiteConfig::default();
    cfg.caps.random_cases = 5;
    cfg.caps.hilbert_candidates = 1; // forces caps in saturation-heavy cases
    let report = run_suite(&cfg, SuiteName::MonoidProperties).unwrap();
    // every case is present, whatever its status
    assert!(report.cases.len() >= 8);
}

#[test]
fn empty_prime_set_is_a_config_error() {
    let cfg = SuiteConfig { primes: Vec::new(), ..Default::default() };
    assert!(run_suite(&cfg, SuiteName::TorsorSelfproduct).is_err());
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verify"))
}

#[test]
fn exit_codes() {
    // 0: pass
    let out = bin().args(["kummer-surjectivity"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // 2: config error (unknown suite)
    let out = bin().args(["no-such-suite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // 2: config error (composite prime)
    let out = bin().args(["kummer-surjectivity", "--p", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // 2: config error (field size not a power of a listed prime)
    let out = bin()
        .args(["cohomology-fixedpoints", "--p", "2", "--q", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_is_written_and_deterministic() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("verify_report_a.json");
    let p2 = dir.join("verify_report_b.json");
    for p in [&p1, &p2] {
        let out = bin()
            .args([
                "torsor-selfproduct",
                "--seed",
                "7",
                "--json",
                p.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert_eq!(a, b);
    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(parsed["schema_version"], 1);
    assert_eq!(parsed["cases"].as_array().unwrap().len(), 4);
}

#[test]
fn caps_file_is_honored() {
    let dir = std::env::temp_dir();
    let caps_path = dir.join("verify_caps.json");
    std::fs::write(&caps_path, r#"{ "random_cases": 3, "timings": false }"#).unwrap();
    let out = bin()
        .args(["monoid-properties", "--caps", caps_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // malformed caps file is a config error
    std::fs::write(&caps_path, "{ not json").unwrap();
    let out = bin()
        .args(["monoid-properties", "--caps", caps_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn format_roundtrip_through_the_public_api() {
    let text = "ambient 2 [2 2]\n1 0 1 0\n0 1 0 1\n";
    let ParsedEntity::Monoid(m) = parse_monoid_str(text).unwrap() else {
        panic!()
    };
    let s = serialize_monoid(&m);
    let ParsedEntity::Monoid(m2) = parse_monoid_str(&s).unwrap() else {
        panic!()
    };
    assert_eq!(serialize_monoid(&m2), s);
}
