//! Homological criterion for isomorphisms modulo relative lower central terms.
use leibniz::algebra::Ideal;
use leibniz::exactla::{int, Matrix};
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::nilcheck::{check_isomorphism_criterion, vanishing_series_criterion};

fn main() {
    let corpus = Corpus::load(&bundled_corpus_dir()).unwrap();
    let q = corpus.algebra("ex_5_15_c").unwrap();
    let mut p = Matrix::identity(3);
    p.set(2, 0, int(1));
    let (g, phi) = q.change_basis(&p).unwrap();
    let r = check_isomorphism_criterion(&phi, &Ideal::full(&g), &Ideal::full(q), 3, 4).unwrap();
    println!("conditions {:?} -> phi_k bijective {:?}", r.conditions, r.conclusion);

    let (l, eta) = q.liezation();
    let r = check_isomorphism_criterion(&eta, &Ideal::full(q), &Ideal::full(&l), 3, 4).unwrap();
    println!("Liezation: conditions {:?} -> {:?}", r.conditions, r.conclusion);

    let v = vanishing_series_criterion(q, &Ideal::full(q));
    println!("Q^[k] vanishes {} upper index {:?}", v.series_vanishes, v.upper_index);
}
