//! Word basis of a free nilpotent Leibniz algebra and a presentation of a nilpotent target.
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::freeleib::{free_nilpotent, present, word_label};

fn main() {
    let f = free_nilpotent(2, 3).unwrap();
    let words: Vec<String> = f.words().iter().map(|w| word_label(w)).collect();
    println!("F(2,3) has dim {}: {}", f.dim(), words.join(" "));

    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    let q = corpus.algebra("ex_5_15_c").unwrap();
    let pres = present(q, &[q.basis_vector(1), q.basis_vector(2)], 3).unwrap();
    println!("kernel of F(2,3) -> {} has dim {}", q.name(), pres.kernel().dim());
}
