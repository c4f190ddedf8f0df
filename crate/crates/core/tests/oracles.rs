//! Independent cross-checks: each production route against a second computation.

use leibniz::algebra::LeibnizAlgebra;
use leibniz::centers::{precise_center, precise_center_truncated};
use leibniz::exactla::Vector;
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::freeleib::{free_nilpotent, present, Generators};
use leibniz::homology::{hopf_hl2, hopf_hl2_truncated, hopf_hl2_with, identity_relations};

fn corpus() -> Corpus {
    Corpus::load(&bundled_corpus_dir()).unwrap()
}

fn basis(q: &LeibnizAlgebra) -> Vec<Vector> {
    (0..q.dim()).map(|i| q.basis_vector(i)).collect()
}

#[test]
fn free_algebra_has_tensor_dimensions() {
    for (m, d) in [(1, 4), (2, 3), (3, 2), (2, 4)] {
        let f = free_nilpotent(m, d).unwrap();
        let expected: usize = (1..=d as u32).map(|k| m.pow(k)).sum();
        assert_eq!(f.dim(), expected, "F({m},{d})");
        assert!(f.underlying().validate().is_empty());
    }
}

#[test]
fn symmetric_route_matches_truncated_hopf_on_abelian() {
    for n in 1..=3 {
        let q = LeibnizAlgebra::abelian(n);
        let pres = present(&q, &basis(&q), 2).unwrap();
        let truncated = hopf_hl2_truncated(&pres).dim();
        assert_eq!(truncated, hopf_hl2(&q, 3).unwrap().dim());
        assert_eq!(truncated, n * (n + 1) / 2);
    }
}

#[test]
fn symmetric_route_matches_truncated_hopf_on_nilpotent_fixture() {
    let c = corpus();
    let q = c.algebra("ex_5_15_c").unwrap();
    let gens = vec![q.basis_vector(1), q.basis_vector(2)];
    let pres = present(q, &gens, 4).unwrap();
    let truncated = hopf_hl2_truncated(&pres).dim();
    let symmetric = hopf_hl2_with(&Generators::new(q, gens).unwrap(), 4).unwrap();
    assert_eq!(truncated, symmetric.dim());
    assert_eq!(truncated, 3);
}

#[test]
fn symmetric_route_matches_truncated_hopf_on_free_nilpotent() {
    for (d, expected) in [(2, 6), (3, 13)] {
        let f = free_nilpotent(2, d).unwrap();
        let q = f.underlying().clone();
        let gens = vec![f.letter(0), f.letter(1)];
        let pres = present(&q, &gens, 2 * d).unwrap();
        assert_eq!(hopf_hl2_truncated(&pres).dim(), expected, "F(2,{d}) truncated");
        let sym = hopf_hl2_with(&Generators::new(&q, gens).unwrap(), 2 * d).unwrap();
        assert_eq!(sym.dim(), expected, "F(2,{d}) symmetric");
    }
}

#[test]
fn stable_relations_equal_the_identity_span() {
    for (name, q) in corpus().algebras {
        let h = hopf_hl2(&q, 4).unwrap();
        assert!(h.stable, "{name}");
        assert_eq!(h.denominator, identity_relations(&q), "{name}");
    }
}

#[test]
fn precise_center_matches_literal_truncated_route() {
    let c = corpus();
    let q = c.algebra("ex_5_15_c").unwrap();
    let gens = vec![q.basis_vector(1), q.basis_vector(2)];
    let literal = precise_center_truncated(q, &gens, 4).unwrap();
    assert_eq!(&literal, precise_center(q, 4).unwrap().z_star.space());
    for n in 1..=2 {
        let a = LeibnizAlgebra::abelian(n);
        let literal = precise_center_truncated(&a, &basis(&a), 3).unwrap();
        assert!(literal.is_zero());
        assert!(precise_center(&a, 3).unwrap().z_star.space().is_zero());
    }
}
