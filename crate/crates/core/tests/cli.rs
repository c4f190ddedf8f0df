use serde_json::Value;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
}

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn fixture(kind: &str, name: &str) -> PathBuf {
    corpus().join(kind).join(format!("{name}.json"))
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("leibniz-cli-{}-{tag}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stderr(o)))
}

fn copy_corpus(to: &Path) {
    for kind in ["algebras", "extensions"] {
        fs::create_dir_all(to.join(kind)).unwrap();
        for entry in fs::read_dir(corpus().join(kind)).unwrap() {
            let p = entry.unwrap().path();
            fs::copy(&p, to.join(kind).join(p.file_name().unwrap())).unwrap();
        }
    }
}

#[test]
fn validate_accepts_a_fixture() {
    let o = bin().arg("validate").arg(fixture("algebras", "ex_5_15_c")).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("OK ex_5_15_c"));
}

#[test]
fn validate_rejects_index_zero() {
    let dir = scratch("index0");
    let p = dir.join("bad.json");
    fs::write(
        &p,
        r#"{"name":"bad","dim":2,"basis":["e1","e2"],"brackets":[{"left":0,"right":1,"value":[{"basis":1,"coeff":"1"}]}]}"#,
    )
    .unwrap();
    let o = bin().arg("validate").arg(&p).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("index 0"), "{}", stderr(&o));
}

#[test]
fn validate_names_violated_triples() {
    let dir = scratch("nonleib");
    let p = dir.join("bad.json");
    fs::write(
        &p,
        r#"{"name":"bad","dim":2,"basis":["e1","e2"],"brackets":[
            {"left":1,"right":1,"value":[{"basis":2,"coeff":"1"}]},
            {"left":2,"right":1,"value":[{"basis":1,"coeff":"1"}]}]}"#,
    )
    .unwrap();
    let o = bin().arg("validate").arg(&p).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("triple (1, 2, 1)") && out.contains("triple (2, 2, 1)"), "{out}");
    assert!(!out.contains("(1, 1, 1)"));
}

#[test]
fn analyze_reports_series_classes() {
    let o = bin().args(["analyze", "--series"]).arg(fixture("algebras", "ex_5_5_c")).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let s = &json(&o)["body"]["series"];
    assert_eq!(s["lie_solvable_class"], 2);
    assert!(s.get("lie_nilpotent_class").is_none());

    let o = bin().args(["analyze", "--series"]).arg(fixture("algebras", "ex_5_15_e")).output().unwrap();
    let s = &json(&o)["body"]["series"];
    assert_eq!(s["lie_nilpotent_class"], 2);
    assert!(s.get("nilpotent_class").is_none());
}

#[test]
fn analyze_reports_homology_with_degree() {
    let o = bin().args(["analyze", "--homology", "3"]).arg(fixture("algebras", "abelian_3")).output().unwrap();
    let doc = json(&o);
    let h = &doc["body"]["homology"];
    assert_eq!(h["dim"], 6);
    assert_eq!(h["degree_used"], 3);
    assert_eq!(h["stable"], true);
    assert_eq!(doc["provenance"]["degree"], 3);
    assert!(doc["body"].get("series").is_none());
}

#[test]
fn analyze_output_is_byte_stable() {
    let dir = scratch("stable");
    let run = |name: &str| {
        let p = dir.join(name);
        let o = bin().arg("analyze").arg(fixture("algebras", "ex_3_14_a_g")).arg("--json-out").arg(&p).output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        fs::read(p).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

fn classify(g: &str, q: &str, map: &Path) -> Output {
    bin().arg("classify-ext").arg(fixture("algebras", g)).arg(fixture("algebras", q)).arg(map).output().unwrap()
}

#[test]
fn classify_ext_flags() {
    let o = classify("ex_3_2_g", "ex_3_2_q", &fixture("extensions", "ex_3_2"));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["body"]["classification"]["lie_trivial"], true);

    let o = classify("ex_3_14_a_g", "ex_3_14_a_q", &fixture("extensions", "ex_3_14_a"));
    let doc = json(&o);
    let c = &doc["body"]["classification"];
    assert_eq!(c["lie_stem"], true);
    assert_eq!(c["kernel"], c["g_ann"]);
    assert_eq!(doc["body"]["six_term"]["exact"], true);

    let o = classify("ex_3_2_g", "abelian_2", &fixture("extensions", "remark_3"));
    let c = &json(&o)["body"]["classification"];
    assert_eq!(c["central"], false);
    // the kernel span{a1} is not inside Z_Lie = span{a2}
    assert_eq!(c["lie_central"], false);
}

#[test]
fn classify_ext_rejects_bad_maps_distinctly() {
    let dir = scratch("maps");
    let not_hom = dir.join("printed.json");
    fs::write(
        &not_hom,
        r#"{"name":"printed","source":"ex_3_14_a_g","target":"ex_3_14_a_q","images":[
            {"source":2,"value":[{"basis":1,"coeff":"1"}]},
            {"source":3,"value":[{"basis":2,"coeff":"1"}]}]}"#,
    )
    .unwrap();
    let o = classify("ex_3_14_a_g", "ex_3_14_a_q", &not_hom);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a homomorphism"), "{}", stderr(&o));

    let not_onto = dir.join("zero.json");
    fs::write(&not_onto, r#"{"name":"zero","source":"abelian_1","target":"abelian_2","images":[{"source":1,"value":[{"basis":1,"coeff":"1"}]}]}"#).unwrap();
    let o = classify("abelian_1", "abelian_2", &not_onto);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not surjective"), "{}", stderr(&o));
}

#[test]
fn verify_paper_names_a_perturbed_fixture() {
    let dir = scratch("perturbed");
    copy_corpus(&dir);
    fs::write(
        dir.join("algebras/abelian_3.json"),
        r#"{"name":"abelian_3","dim":3,"basis":["e1","e2","e3"],"brackets":[{"left":1,"right":1,"value":[{"basis":2,"coeff":"1"}]}]}"#,
    )
    .unwrap();
    let o = bin().arg("verify-paper").arg("--corpus").arg(&dir).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL [4] abelian_3 HL2 = 6")), "{}", stdout(&o));
}

#[test]
fn verify_paper_reports_broken_fixture_by_name() {
    let dir = scratch("broken");
    copy_corpus(&dir);
    fs::write(
        dir.join("algebras/ex_5_5_c.json"),
        r#"{"name":"ex_5_5_c","dim":1,"basis":["x"],"brackets":[{"left":1,"right":1,"value":[{"basis":1,"coeff":"1"}]}]}"#,
    )
    .unwrap();
    let o = bin().args(["verify-paper", "--degree", "3", "--corpus"]).arg(&dir).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("FAIL [0] fixture ex_5_5_c.json loads")), "{out}");
    assert!(out.lines().any(|l| l.starts_with("FAIL [2] fixture ex_5_5_c")), "{out}");
}

#[test]
fn verify_paper_on_empty_corpus() {
    let dir = scratch("empty");
    let o = bin().arg("verify-paper").arg("--corpus").arg(&dir).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no fixtures"), "{}", stderr(&o));
}
