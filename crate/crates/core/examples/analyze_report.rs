//! Emit a JSON analysis document for one algebra file.
use leibniz::format::{bundled_corpus_dir, read_text, AlgebraFile};
use leibniz::report::{analyze, AnalyzeOptions};

fn main() {
    let path = bundled_corpus_dir().join("algebras/ex_5_5_c.json");
    let text = read_text(&path).unwrap();
    let q = AlgebraFile::parse(&text).unwrap().to_algebra().unwrap();
    let opts = AnalyzeOptions { series: true, homology: Some(3), ..AnalyzeOptions::default() };
    print!("{}", analyze(&q, &text, &opts).unwrap().to_json());
}
