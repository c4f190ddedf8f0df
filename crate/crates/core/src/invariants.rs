//! Centers, relative commutators and the Lie-relative and absolute series.

use crate::algebra::{Ideal, LeibnizAlgebra};
use crate::exactla::{Matrix, Subspace, Vector};
use serde::Serialize;

/// Solution space of `x ↦ Σ_a x_a · column(a) = 0`.
fn solution_space(n: usize, rows: usize, column: impl Fn(usize) -> Vector) -> Subspace {
    let cols: Vec<Vector> = (0..n).map(column).collect();
    Matrix::from_columns(&cols, rows).expect("column height").kernel()
}

/// `Z^r(Q) = {a : [x, a] = 0 for all x}`.
pub fn right_center(q: &LeibnizAlgebra) -> Ideal {
    let n = q.dim();
    Ideal::trusted(solution_space(n, n * n, |a| (0..n).flat_map(|i| q.bracket_basis(i, a)).collect()))
}

/// `Z(Q) = {a : [x, a] = 0 = [a, x] for all x}`.
pub fn center(q: &LeibnizAlgebra) -> Ideal {
    let n = q.dim();
    Ideal::trusted(solution_space(n, 2 * n * n, |a| {
        (0..n).flat_map(|i| q.bracket_basis(i, a).into_iter().chain(q.bracket_basis(a, i))).collect()
    }))
}

/// `Z_Lie(Q) = {z : [x, z] + [z, x] = 0 for all x}`.
pub fn lie_center(q: &LeibnizAlgebra) -> Ideal {
    lie_centralizer_spaces(q, &Subspace::full(q.dim()), &Subspace::zero(q.dim()))
}

pub(crate) fn lie_centralizer_spaces(q: &LeibnizAlgebra, m: &Subspace, n: &Subspace) -> Ideal {
    let dim = q.dim();
    let proj = Subspace::full(dim).quotient_map(n).expect("subspace of the full space");
    let rows = proj.dim() * m.dim();
    Ideal::trusted(solution_space(dim, rows, |a| {
        let e = q.basis_vector(a);
        m.basis().iter().flat_map(|mb| proj.project(&q.sym(&e, mb))).collect()
    }))
}

/// `C_Q^Lie(M, N) = {q : [q, m] + [m, q] ∈ N for all m ∈ M}`.
pub fn lie_centralizer(q: &LeibnizAlgebra, m: &Ideal, n: &Ideal) -> Ideal {
    lie_centralizer_spaces(q, m.space(), n.space())
}

pub(crate) fn lie_commutator_spaces(q: &LeibnizAlgebra, m: &Subspace, n: &Subspace) -> Subspace {
    let mut gens = Vec::with_capacity(m.dim() * n.dim());
    for x in m.basis() {
        for y in n.basis() {
            gens.push(q.sym(x, y));
        }
    }
    Subspace::canonicalize(q.dim(), gens).expect("table width")
}

/// `[M, N]_Lie`, spanned by `[m, n] + [n, m]`.
pub fn lie_commutator(q: &LeibnizAlgebra, m: &Ideal, n: &Ideal) -> Ideal {
    Ideal::trusted(lie_commutator_spaces(q, m.space(), n.space()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LieDerived,
    LieLowerCentral,
    LieUpperCentral,
    RelativeLowerCentral,
    AbsoluteDerived,
    AbsoluteLowerCentral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Terms up to (not repeating) the first stable one.
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    /// Solvability or nilpotency class; `None` when the series stalls at a nonzero term.
    pub class: Option<usize>,
}

impl SeriesReport {
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series has a first term")
    }

    /// The i-th term, continuing with the stable value past the end.
    pub fn term(&self, i: usize) -> &Subspace {
        self.terms.get(i).unwrap_or_else(|| self.last())
    }
}

fn iterate(kind: SeriesKind, first: Subspace, step: impl Fn(&Subspace) -> Subspace, target: Subspace) -> SeriesReport {
    let limit = first.ambient() + 2;
    let mut terms = vec![first];
    let mut stabilized = false;
    for _ in 0..limit {
        let next = step(terms.last().expect("nonempty"));
        if &next == terms.last().expect("nonempty") {
            stabilized = true;
            break;
        }
        terms.push(next);
    }
    let class = terms.iter().position(|t| *t == target);
    SeriesReport { kind, terms, stabilized, class }
}

/// `Q^(0) = Q`, `Q^(i) = [Q^(i-1), Q^(i-1)]_Lie`; class is the least `k` with `Q^(k) = 0`.
pub fn lie_derived_series(q: &LeibnizAlgebra) -> SeriesReport {
    let n = q.dim();
    iterate(SeriesKind::LieDerived, Subspace::full(n), |t| lie_commutator_spaces(q, t, t), Subspace::zero(n))
}

pub fn is_lie_solvable(q: &LeibnizAlgebra) -> Option<usize> {
    lie_derived_series(q).class
}

/// `terms[i] = Q^[i+1]`, with `Q^[1] = Q` and `Q^[i] = [Q^[i-1], Q]_Lie`; class is the least `k` with `Q^[k+1] = 0`.
pub fn lie_lower_central_series(q: &LeibnizAlgebra) -> SeriesReport {
    relative_series(q, Subspace::full(q.dim()), SeriesKind::LieLowerCentral)
}

pub fn is_lie_nilpotent(q: &LeibnizAlgebra) -> Option<usize> {
    lie_lower_central_series(q).class
}

/// `terms[i] = ζ_i`, with `ζ_0 = 0` and `ζ_i = C_Q^Lie(Q, ζ_{i-1})`; class is the least `k` with `ζ_k = Q`.
pub fn lie_upper_central_series(q: &LeibnizAlgebra) -> SeriesReport {
    let n = q.dim();
    let full = Subspace::full(n);
    iterate(
        SeriesKind::LieUpperCentral,
        Subspace::zero(n),
        |t| lie_centralizer_spaces(q, &full, t).into_space(),
        Subspace::full(n),
    )
}

fn relative_series(q: &LeibnizAlgebra, first: Subspace, kind: SeriesKind) -> SeriesReport {
    let n = q.dim();
    let full = Subspace::full(n);
    iterate(kind, first, |t| lie_commutator_spaces(q, t, &full), Subspace::zero(n))
}

/// `terms[i] = N^[i+1]`, with `N^[1] = N` and `N^[i] = [N^[i-1], Q]_Lie`.
pub fn relative_lower_central_series(q: &LeibnizAlgebra, n: &Ideal) -> SeriesReport {
    relative_series(q, n.space().clone(), SeriesKind::RelativeLowerCentral)
}

/// `A^(0) = Q`, `A^(i) = [A^(i-1), A^(i-1)]` with the full bracket.
pub fn absolute_derived_series(q: &LeibnizAlgebra) -> SeriesReport {
    let n = q.dim();
    iterate(SeriesKind::AbsoluteDerived, Subspace::full(n), |t| q.bracket_span(t, t), Subspace::zero(n))
}

/// `terms[i] = Q^{i+1}`, with `Q^1 = Q` and `Q^{i} = [Q^{i-1}, Q]`.
pub fn absolute_lower_central_series(q: &LeibnizAlgebra) -> SeriesReport {
    let n = q.dim();
    let full = Subspace::full(n);
    iterate(SeriesKind::AbsoluteLowerCentral, full.clone(), |t| q.bracket_span(t, &full), Subspace::zero(n))
}

pub fn absolute_series(q: &LeibnizAlgebra) -> (SeriesReport, SeriesReport) {
    (absolute_derived_series(q), absolute_lower_central_series(q))
}

pub fn is_solvable(q: &LeibnizAlgebra) -> Option<usize> {
    absolute_derived_series(q).class
}

pub fn is_nilpotent(q: &LeibnizAlgebra) -> Option<usize> {
    absolute_lower_central_series(q).class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn span(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::canonicalize(n, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect())).unwrap()
    }

    fn g32() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("g", &["a1", "a2", "a3"]).bracket("a1", "a3", &[(1, "a1")]).build().unwrap()
    }

    fn ex_5_5_c() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("c", &["a1", "a2", "a3"])
            .bracket("a1", "a3", &[(1, "a2")])
            .bracket("a2", "a3", &[(1, "a2")])
            .bracket("a3", "a3", &[(1, "a1")])
            .build()
            .unwrap()
    }

    fn ex_5_15_c() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("c", &["a1", "a2", "a3"]).bracket("a3", "a3", &[(1, "a1")]).build().unwrap()
    }

    fn ex_5_15_e() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("e", &["e1", "e2", "e3", "e4"])
            .bracket("e1", "e1", &[(1, "e3")])
            .bracket("e2", "e4", &[(1, "e2")])
            .bracket("e4", "e2", &[(-1, "e2")])
            .build()
            .unwrap()
    }

    #[test]
    fn centers_of_g() {
        let g = g32();
        assert_eq!(center(&g).space(), &span(3, &[&[0, 1, 0]]));
        assert_eq!(right_center(&g).space(), &span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        // {a1, a3} = a1, so only a2 is Lie-central
        assert_eq!(lie_center(&g).space(), &span(3, &[&[0, 1, 0]]));
    }

    #[test]
    fn lie_center_examples() {
        let ab = LeibnizAlgebra::abelian(3);
        assert!(lie_center(&ab).space().is_full());
        assert_eq!(lie_center(&ex_5_15_e()).space(), &span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn commutator_examples() {
        let c = ex_5_5_c();
        let full = Ideal::full(&c);
        assert_eq!(lie_commutator(&c, &full, &full).space(), &span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let e = ex_5_15_e();
        let f = Ideal::full(&e);
        assert_eq!(lie_commutator(&e, &f, &f).space(), &span(4, &[&[0, 0, 1, 0]]));
        assert!(lie_commutator(&c, &Ideal::zero(&c), &full).space().is_zero());
        assert!(lie_centralizer(&c, &full, &full).space().is_full());
        assert!(lie_centralizer(&c, &Ideal::zero(&c), &Ideal::zero(&c)).space().is_full());
    }

    #[test]
    fn series_classes() {
        assert_eq!(is_lie_solvable(&LeibnizAlgebra::abelian(2)), Some(1));
        assert_eq!(is_lie_solvable(&ex_5_5_c()), Some(2));
        assert_eq!(is_solvable(&ex_5_5_c()), Some(2));
        assert_eq!(is_lie_nilpotent(&ex_5_5_c()), None);
        assert_eq!(lie_lower_central_series(&ex_5_5_c()).last(), &span(3, &[&[0, 1, 0]]));
        assert_eq!(is_lie_nilpotent(&ex_5_15_c()), Some(2));
        assert_eq!(is_lie_nilpotent(&ex_5_15_e()), Some(2));
        assert_eq!(is_nilpotent(&ex_5_15_e()), None);
    }

    #[test]
    fn upper_series_of_ex_5_15_c() {
        let s = lie_upper_central_series(&ex_5_15_c());
        assert_eq!(s.terms[1], span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert!(s.terms[2].is_full());
        assert_eq!(s.class, Some(2));
        let c = lie_upper_central_series(&ex_5_5_c());
        assert_eq!(c.class, None);
        assert!(c.stabilized);
    }

    #[test]
    fn relative_series_matches_lower() {
        let q = ex_5_15_c();
        assert_eq!(relative_lower_central_series(&q, &Ideal::full(&q)).terms, lie_lower_central_series(&q).terms);
        let z = relative_lower_central_series(&q, &Ideal::zero(&q));
        assert_eq!(z.terms.len(), 1);
        assert_eq!(z.class, Some(0));
    }
}
