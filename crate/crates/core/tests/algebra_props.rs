use leibniz::algebra::{Hom, Ideal, LeibnizAlgebra};
use leibniz::exactla::{int, Matrix, Subspace, Vector};
use leibniz::extensions::{classify, pullback, Extension};
use leibniz::format::{bundled_corpus_dir, Corpus};
use leibniz::homology::hopf_hl2;
use leibniz::invariants::{
    center, is_lie_nilpotent, is_lie_solvable, is_nilpotent, is_solvable, lie_center, lie_centralizer, lie_commutator,
    right_center,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn corpus() -> &'static Vec<LeibnizAlgebra> {
    static C: OnceLock<Vec<LeibnizAlgebra>> = OnceLock::new();
    C.get_or_init(|| Corpus::load(&bundled_corpus_dir()).unwrap().algebras.into_values().collect())
}

fn invertible(n: usize, xs: &[i64]) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    let mut it = xs.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, int(*it.next().unwrap()));
            upper.set(j, i, int(*it.next().unwrap()));
        }
    }
    lower.mul(&upper)
}

fn closure(q: &LeibnizAlgebra, xs: &[i64]) -> Ideal {
    let v: Vector = (0..q.dim()).map(|i| int(xs[i % xs.len()])).collect();
    q.ideal_closure(&Subspace::canonicalize(q.dim(), [v]).unwrap())
}

fn pick() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_change_preserves_invariants(k in pick(), xs in coeffs()) {
        let q = &corpus()[k];
        let (g, phi) = q.change_basis(&invertible(q.dim(), &xs)).unwrap();
        prop_assert!(g.validate().is_empty());
        prop_assert!(phi.is_iso());
        prop_assert_eq!(g.ann_ideal().dim(), q.ann_ideal().dim());
        prop_assert_eq!(center(&g).dim(), center(q).dim());
        prop_assert_eq!(lie_center(&g).dim(), lie_center(q).dim());
        prop_assert_eq!(right_center(&g).dim(), right_center(q).dim());
        prop_assert_eq!(is_lie_solvable(&g), is_lie_solvable(q));
        prop_assert_eq!(is_lie_nilpotent(&g), is_lie_nilpotent(q));
        prop_assert_eq!(is_solvable(&g), is_solvable(q));
        prop_assert_eq!(is_nilpotent(&g), is_nilpotent(q));
        // the iso carries the Lie-center onto the Lie-center
        prop_assert_eq!(lie_center(&g).space().image_under(phi.matrix()), lie_center(q).into_space());
    }

    #[test]
    fn ideal_closures_are_ideals_and_quotients_are_leibniz(k in pick(), xs in coeffs()) {
        let q = &corpus()[k];
        let i = closure(q, &xs);
        prop_assert!(Ideal::new(q, i.space().clone()).is_ok());
        let (quot, p) = q.quotient(&i).unwrap();
        prop_assert!(quot.validate().is_empty());
        prop_assert_eq!(p.kernel().into_space(), i.into_space());
        prop_assert!(p.is_surjective());
    }

    #[test]
    fn centralizer_and_commutator_properties(k in pick(), xs in coeffs(), ys in coeffs()) {
        let q = &corpus()[k];
        let m = closure(q, &xs);
        let n = closure(q, &ys);
        let c = lie_centralizer(q, &m, &n);
        let br = lie_commutator(q, &m, &n);
        prop_assert!(Ideal::new(q, c.space().clone()).is_ok());
        prop_assert!(Ideal::new(q, br.space().clone()).is_ok());
        prop_assert!(center(q).space().is_subspace_of(c.space()));
        prop_assert!(br.space().is_subspace_of(right_center(q).space()));
        prop_assert!(br.space().is_subspace_of(&m.space().intersect(n.space()).unwrap()));
    }

    #[test]
    fn liezation_is_lie_and_ann_is_its_kernel(k in pick()) {
        let q = &corpus()[k];
        let (l, eta) = q.liezation();
        prop_assert!(l.is_lie());
        prop_assert!(l.validate().is_empty());
        prop_assert_eq!(eta.kernel().into_space(), q.ann_ideal().into_space());
    }

    #[test]
    fn pullback_of_identity_is_the_source(k in pick()) {
        let q = &corpus()[k];
        let id = Extension::identity(q);
        let (p, to_g, to_h) = pullback(id.map(), &Hom::identity(q)).unwrap();
        prop_assert!(p.validate().is_empty());
        prop_assert_eq!(p.dim(), q.dim());
        prop_assert!(to_g.is_iso() && to_h.is_iso());
        let r = classify(&id);
        prop_assert!(r.central && r.lie_central && r.lie_trivial);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hopf_dimension_is_a_basis_invariant(k in pick(), xs in coeffs()) {
        let q = &corpus()[k];
        prop_assume!(q.dim() <= 3);
        let (g, _) = q.change_basis(&invertible(q.dim(), &xs)).unwrap();
        prop_assert_eq!(hopf_hl2(&g, 3).unwrap().dim(), hopf_hl2(q, 3).unwrap().dim());
    }
}

#[test]
fn idempotent_line_is_not_leibniz() {
    let q = LeibnizAlgebra::builder("x", &["x"]).bracket("x", "x", &[(1, "x")]).build().unwrap();
    assert!(!q.validate().is_empty());
}
