//! Second Leibniz homology through the Hopf formula, with a stability sweep.
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::homology::hopf_hl2_sweep;

fn main() {
    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    for (name, q) in &corpus.algebras {
        let h = hopf_hl2_sweep(q, 3, 6).unwrap();
        println!("{name:12} HL2 dim {} at d={} stable {}", h.dim(), h.degree_used, h.stable);
    }
}
