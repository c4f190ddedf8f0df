//! One pass/fail line per acceptance criterion, computed over the bundled corpus.

use leibniz::format::bundled_corpus_dir;
use leibniz::verify::{verify_paper, Check};
use std::fs;
use std::process::Command;

const TITLES: [&str; 10] = [
    "worked-example exact values",
    "series classes",
    "centralizer and commutator properties",
    "Hopf oracle on abelian algebras",
    "presentation independence",
    "exact sequences",
    "stem-cover certification",
    "precise center cross-validation",
    "nilpotency criterion harness",
    "determinism",
];

fn cli_report_twice() -> Check {
    let dir = std::env::temp_dir().join(format!("leibniz-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let p = dir.join(name);
        Command::new(env!("CARGO_BIN_EXE_leibniz"))
            .arg("verify-paper")
            .arg("--json-out")
            .arg(&p)
            .output()
            .expect("binary runs");
        fs::read(&p).unwrap_or_default()
    };
    let a = run("first.json");
    let b = run("second.json");
    Check {
        criterion: 10,
        id: "two CLI runs write identical reports".into(),
        passed: !a.is_empty() && a == b,
        detail: format!("{} and {} bytes", a.len(), b.len()),
    }
}

#[test]
fn acceptance() {
    let report = verify_paper(&bundled_corpus_dir(), 4).expect("corpus loads");
    let mut checks = report.checks.clone();
    checks.push(cli_report_twice());

    let mut failed = Vec::new();
    for (k, title) in TITLES.iter().enumerate() {
        let criterion = (k + 1) as u8;
        let mine: Vec<&Check> = checks.iter().filter(|c| c.criterion == criterion).collect();
        let bad: Vec<&Check> = mine.iter().copied().filter(|c| !c.passed).collect();
        let ok = !mine.is_empty() && bad.is_empty();
        println!("criterion {criterion:>2} {}: {title} ({}/{} checks)", if ok { "PASS" } else { "FAIL" }, mine.len() - bad.len(), mine.len());
        for c in &bad {
            println!("    failed: {} ({})", c.id, c.detail);
        }
        if !ok {
            failed.push(criterion);
        }
    }
    let loading: Vec<&Check> = checks.iter().filter(|c| c.criterion == 0).collect();
    for c in &loading {
        println!("fixture error: {} ({})", c.id, c.detail);
    }
    assert!(loading.is_empty(), "fixtures failed to load");
    assert!(failed.is_empty(), "criteria failing: {failed:?}");
}
