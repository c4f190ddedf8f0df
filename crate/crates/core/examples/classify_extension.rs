//! Classify the fixture extensions and check their exact sequences.
use leibniz::extensions::classify;
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::homology::{five_term, six_term};

fn main() {
    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    for (name, ext) in &corpus.extensions {
        let e = &ext.extension;
        let r = classify(e);
        println!("{name}: central {} Lie-central {} Lie-trivial {} Lie-stem {}", r.central, r.lie_central, r.lie_trivial, r.lie_stem);
        let five = five_term(e, 4).unwrap();
        println!("  five-term exact {} {:?}", five.is_exact(), five.nodes);
        match six_term(e, 4) {
            Ok(six) => println!("  six-term exact {}", six.is_exact()),
            Err(err) => println!("  six-term: {err}"),
        }
    }
}
