//! Centers and Lie-relative series of a fixture algebra.
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::invariants::{center, is_lie_nilpotent, is_nilpotent, lie_center, lie_upper_central_series, right_center};

fn main() {
    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    let q = corpus.algebra("ex_5_15_e").unwrap();
    println!("Z     = {}", center(q).space());
    println!("Z^r   = {}", right_center(q).space());
    println!("Z_Lie = {}", lie_center(q).space());
    for (i, t) in lie_upper_central_series(q).terms.iter().enumerate() {
        println!("zeta_{i} = {t}");
    }
    println!("Lie-nilpotent class {:?}, nilpotent class {:?}", is_lie_nilpotent(q), is_nilpotent(q));
}
