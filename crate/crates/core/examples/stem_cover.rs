//! Build a finite Lie-stem cover and certify it.
use leibniz::extensions::stem_quotient_extension;
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::homology::is_lie_stem_cover;

fn main() {
    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    for (name, q) in &corpus.algebras {
        match stem_quotient_extension(q, 4) {
            Ok(e) => {
                let v = is_lie_stem_cover(&e, 4).unwrap();
                println!("{name:12} cover dim {} theta* bijective {}", e.source().dim(), v.via_theta);
            }
            Err(err) => println!("{name:12} {err}"),
        }
    }
}
