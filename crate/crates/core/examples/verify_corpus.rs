//! Run the full check list over the bundled corpus.
use leibniz::format::bundled_corpus_dir;
use leibniz::verify::verify_paper;

fn main() {
    let report = verify_paper(&bundled_corpus_dir(), 4).unwrap();
    for s in report.summary() {
        println!("criterion {}: {} passed, {} failed", s.criterion, s.passed, s.failed);
    }
    for line in report.lines().into_iter().filter(|l| l.starts_with("FAIL")) {
        println!("{line}");
    }
}
