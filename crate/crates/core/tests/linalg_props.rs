use leibniz::exactla::{int, Matrix, Subspace, SymPairs, Vector};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
        let rs: Vec<Vector> = xs.chunks(cols).map(|c| c.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(&rs, cols).unwrap()
    })
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=n)
        .prop_map(move |vs| Subspace::canonicalize(n, vs.into_iter().map(|v| v.into_iter().map(int).collect::<Vector>())).unwrap())
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix(4, 5)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        for v in m.kernel().basis() {
            prop_assert!(m.apply(v).iter().all(|c| *c == int(0)));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn solve_recovers_image_vectors(m in matrix(4, 3), x in prop::collection::vec(-3i64..=3, 3)) {
        let x: Vector = x.into_iter().map(int).collect();
        let b = m.apply(&x);
        let y = m.solve(&b).expect("b lies in the image");
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(a in subspace(4), b in subspace(4)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
    }

    #[test]
    fn canonical_form_is_unique(a in subspace(4)) {
        let again = Subspace::canonicalize(4, a.basis().iter().rev().cloned()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn quotient_projection_kills_the_subspace(w in subspace(4)) {
        let full = Subspace::full(4);
        let q = full.quotient_map(&w).unwrap();
        prop_assert_eq!(q.dim(), 4 - w.dim());
        for v in w.basis() {
            prop_assert!(q.project(v).iter().all(|c| *c == int(0)));
        }
        for r in &q.reps {
            let back = q.project(r);
            prop_assert_eq!(back.iter().filter(|c| **c != int(0)).count(), 1);
        }
    }

    #[test]
    fn preimage_of_image_contains_the_space(m in matrix(3, 4), a in subspace(4)) {
        let img = a.image_under(&m);
        prop_assert!(a.is_subspace_of(&img.preimage_under(&m)));
    }

    #[test]
    fn symmetric_product_commutes(x in prop::collection::vec(-3i64..=3, 3), y in prop::collection::vec(-3i64..=3, 3)) {
        let s = SymPairs::new(3);
        let x: Vector = x.into_iter().map(int).collect();
        let y: Vector = y.into_iter().map(int).collect();
        prop_assert_eq!(s.product(&x, &y), s.product(&y, &x));
        prop_assert_eq!(s.dim(), 6);
    }
}
