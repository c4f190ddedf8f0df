//! Precise Lie-center, capability and unicentrality.
use leibniz::centers::{is_unicentral, precise_center};
use leibniz::format::{bundled_corpus_dir, Corpus};

fn main() {
    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    for (name, q) in &corpus.algebras {
        let r = precise_center(q, 4).unwrap();
        let u = is_unicentral(q, 4).unwrap();
        println!(
            "{name:12} Z_Lie dim {} z* dim {} ({:?}) capable {} unicentral {}",
            r.z_lie.dim(),
            r.z_star.dim(),
            r.cover_route,
            r.capable,
            u.via_c_map
        );
    }
}
