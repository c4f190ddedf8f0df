//! Finite-dimensional Leibniz algebras given by structure constants.

use crate::exactla::{
    add_scaled, int, sub, unit_vector, zero_vector, LinAlgError, Matrix, Scalar, Subspace,
    Vector,
};
use num::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("subspace is not a two-sided ideal: [{left}, {right}] escapes it")]
    NotTwoSided { left: String, right: String },
    #[error("map does not preserve the bracket on ({left}, {right})")]
    NotHomomorphism { left: String, right: String },
    #[error("map has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    BadShape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("homomorphism is not surjective (image dim {image} < {target})")]
    NotSurjective { image: usize, target: usize },
    #[error("algebras differ: {0}")]
    Mismatch(String),
}

/// A basis triple `(i, j, k)` on which `[e_i,[e_j,e_k]] = [[e_i,e_j],e_k] − [[e_i,e_k],e_j]` fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i + 1, self.j + 1, self.k + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    name: String,
    labels: Vec<String>,
    // entry i*dim + j holds the sparse coordinates of [e_i, e_j]
    table: Vec<Vec<(usize, Scalar)>>,
}

impl LeibnizAlgebra {
    /// The algebra with all brackets zero.
    pub fn with_labels(name: impl Into<String>, labels: Vec<String>) -> Self {
        let n = labels.len();
        LeibnizAlgebra { name: name.into(), labels, table: vec![Vec::new(); n * n] }
    }

    pub fn abelian(n: usize) -> Self {
        Self::with_labels(format!("abelian_{n}"), (1..=n).map(|i| format!("e{i}")).collect())
    }

    pub fn zero() -> Self {
        Self::with_labels("zero", Vec::new())
    }

    /// Starts a table keyed by labels, e.g. `builder("g", &["a1","a2","a3"]).bracket("a1","a3",&[(1,"a1")])`.
    pub fn builder(name: &str, labels: &[&str]) -> AlgebraBuilder {
        AlgebraBuilder {
            algebra: Self::with_labels(name, labels.iter().map(|s| s.to_string()).collect()),
            error: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[Scalar]) -> Result<(), AlgebraError> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(AlgebraError::IndexOutOfRange { index: idx + 1, dim: n });
            }
        }
        if value.len() != n {
            return Err(LinAlgError::DimensionMismatch { expected: n, found: value.len() }.into());
        }
        self.table[i * n + j] =
            value.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
        Ok(())
    }

    /// Sparse coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dim());
        for (k, c) in self.structure(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let row = &self.table[i * n + j];
                if row.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in row {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// The symmetrized bracket `{x, y} = [x, y] + [y, x]`.
    pub fn sym(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut v = self.bracket(x, y);
        let w = self.bracket(y, x);
        add_scaled(&mut v, &int(1), &w);
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn validate(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let eij = self.bracket_basis(i, j);
                for k in 0..n {
                    let lhs = self.bracket(&ei, &self.bracket_basis(j, k));
                    let ek = self.basis_vector(k);
                    let ej = self.basis_vector(j);
                    let rhs = sub(&self.bracket(&eij, &ek), &self.bracket(&self.bracket_basis(i, k), &ej));
                    if lhs != rhs {
                        out.push(Violation { i, j, k });
                    }
                }
            }
        }
        out
    }

    pub fn is_leibniz(&self) -> bool {
        self.validate().is_empty()
    }

    /// `Q^ann`, spanned by `[e_i,e_i]` and `[e_i,e_j]+[e_j,e_i]`.
    pub fn ann_ideal(&self) -> Ideal {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.bracket_basis(i, i));
            for j in i + 1..n {
                let mut v = self.bracket_basis(i, j);
                add_scaled(&mut v, &int(1), &self.bracket_basis(j, i));
                gens.push(v);
            }
        }
        Ideal(Subspace::canonicalize(n, gens).expect("table width"))
    }

    pub fn is_lie(&self) -> bool {
        self.ann_ideal().space().is_zero()
    }

    pub fn is_lie_perfect(&self) -> bool {
        self.dim() == self.ann_ideal().dim()
    }

    /// Span of `[u, v]` over basis vectors of `u_space` and `v_space`.
    pub fn bracket_span(&self, u_space: &Subspace, v_space: &Subspace) -> Subspace {
        let mut gens = Vec::with_capacity(u_space.dim() * v_space.dim());
        for u in u_space.basis() {
            for v in v_space.basis() {
                gens.push(self.bracket(u, v));
            }
        }
        Subspace::canonicalize(self.dim(), gens).expect("table width")
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Ideal {
        let n = self.dim();
        let mut current = s.clone();
        loop {
            let mut gens: Vec<Vector> = current.basis().to_vec();
            for h in current.basis() {
                for i in 0..n {
                    let e = self.basis_vector(i);
                    gens.push(self.bracket(h, &e));
                    gens.push(self.bracket(&e, h));
                }
            }
            let next = Subspace::canonicalize(n, gens).expect("table width");
            if next.dim() == current.dim() {
                return Ideal(next);
            }
            current = next;
        }
    }

    /// Subalgebra generated by `gens`.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut current = Subspace::canonicalize(n, gens.to_vec()).expect("generator width");
        loop {
            let mut all: Vec<Vector> = current.basis().to_vec();
            for x in current.basis() {
                for y in current.basis() {
                    all.push(self.bracket(x, y));
                }
            }
            let next = Subspace::canonicalize(n, all).expect("table width");
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// Quotient by an ideal, on coset representatives, with its projection.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(LeibnizAlgebra, Hom), AlgebraError> {
        Ideal::new(self, ideal.space().clone())?;
        let n = self.dim();
        let qm = Subspace::full(n).quotient_map(ideal.space())?;
        let labels: Vec<String> = qm
            .reps
            .iter()
            .enumerate()
            .map(|(t, r)| match unit_position(r) {
                Some(i) => self.labels[i].clone(),
                None => format!("r{}", t + 1),
            })
            .collect();
        let mut q = LeibnizAlgebra::with_labels(format!("{}/I", self.name), labels);
        for (a, ra) in qm.reps.iter().enumerate() {
            for (b, rb) in qm.reps.iter().enumerate() {
                q.set_bracket(a, b, &qm.project(&self.bracket(ra, rb)))?;
            }
        }
        let proj = Hom::new(self.clone(), q.clone(), qm.project.clone())?;
        Ok((q, proj))
    }

    /// `Q_Lie = Q / Q^ann` with the canonical epimorphism.
    pub fn liezation(&self) -> (LeibnizAlgebra, Hom) {
        let (q, eta) = self.quotient(&self.ann_ideal()).expect("Q^ann is a two-sided ideal");
        (q.renamed(format!("{}_Lie", self.name)), eta)
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        let n = self.dim();
        let m = other.dim();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        let mut s = LeibnizAlgebra::with_labels(format!("{}+{}", self.name, other.name), labels);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.structure(i, j) {
                    s.table[i * (n + m) + j].push((*k, c.clone()));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for (k, c) in other.structure(i, j) {
                    s.table[(n + i) * (n + m) + n + j].push((n + k, c.clone()));
                }
            }
        }
        s
    }

    /// The same algebra on the basis given by the columns of an invertible `p`,
    /// with the isomorphism sending the new basis to those columns.
    pub fn change_basis(&self, p: &Matrix) -> Result<(LeibnizAlgebra, Hom), AlgebraError> {
        let n = self.dim();
        let inv = p.inverse().ok_or_else(|| AlgebraError::Mismatch("basis change is not invertible".into()))?;
        let cols = p.columns();
        let labels = (1..=n).map(|i| format!("b{i}")).collect();
        let mut out = LeibnizAlgebra::with_labels(format!("{}'", self.name), labels);
        for i in 0..n {
            for j in 0..n {
                out.set_bracket(i, j, &inv.apply(&self.bracket(&cols[i], &cols[j])))?;
            }
        }
        let iso = Hom::new(out.clone(), self.clone(), p.clone())?;
        Ok((out, iso))
    }

    /// Writes `v` as `c1·a1 + c2·a2 ...` with this algebra's labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if *c == int(1) {
                    self.labels[i].clone()
                } else {
                    format!("{}·{}", crate::exactla::format_scalar(c), self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn unit_position(v: &[Scalar]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    (nz.len() == 1 && v[nz[0]] == int(1)).then(|| nz[0])
}

pub struct AlgebraBuilder {
    algebra: LeibnizAlgebra,
    error: Option<AlgebraError>,
}

impl AlgebraBuilder {
    /// Sets `[left, right] = Σ c·label`.
    pub fn bracket(mut self, left: &str, right: &str, value: &[(i64, &str)]) -> Self {
        if self.error.is_some() {
            return self;
        }
        let res = (|| {
            let a = &mut self.algebra;
            let i = a.label_index(left)?;
            let j = a.label_index(right)?;
            let mut v = zero_vector(a.dim());
            for (c, l) in value {
                v[a.label_index(l)?] += int(*c);
            }
            a.set_bracket(i, j, &v)
        })();
        if let Err(e) = res {
            self.error = Some(e);
        }
        self
    }

    pub fn build(self) -> Result<LeibnizAlgebra, AlgebraError> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self.algebra),
        }
    }
}

/// A two-sided ideal, held as its subspace of the parent algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal(Subspace);

impl Ideal {
    pub fn new(parent: &LeibnizAlgebra, space: Subspace) -> Result<Ideal, AlgebraError> {
        let n = parent.dim();
        if space.ambient() != n {
            return Err(LinAlgError::DimensionMismatch { expected: n, found: space.ambient() }.into());
        }
        for h in space.basis() {
            for i in 0..n {
                let e = parent.basis_vector(i);
                if !space.contains(&parent.bracket(h, &e)) {
                    return Err(AlgebraError::NotTwoSided {
                        left: parent.format_vector(h),
                        right: parent.labels[i].clone(),
                    });
                }
                if !space.contains(&parent.bracket(&e, h)) {
                    return Err(AlgebraError::NotTwoSided {
                        left: parent.labels[i].clone(),
                        right: parent.format_vector(h),
                    });
                }
            }
        }
        Ok(Ideal(space))
    }

    /// Wraps a subspace already known to be a two-sided ideal.
    pub(crate) fn trusted(space: Subspace) -> Ideal {
        Ideal(space)
    }

    pub fn zero(parent: &LeibnizAlgebra) -> Ideal {
        Ideal(Subspace::zero(parent.dim()))
    }

    pub fn full(parent: &LeibnizAlgebra) -> Ideal {
        Ideal(Subspace::full(parent.dim()))
    }

    pub fn space(&self) -> &Subspace {
        &self.0
    }

    pub fn into_space(self) -> Subspace {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

/// A bracket-preserving linear map; the matrix columns are images of the source basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    source: LeibnizAlgebra,
    target: LeibnizAlgebra,
    matrix: Matrix,
}

impl Hom {
    pub fn new(source: LeibnizAlgebra, target: LeibnizAlgebra, matrix: Matrix) -> Result<Hom, AlgebraError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(AlgebraError::BadShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: target.dim(),
                expected_cols: source.dim(),
            });
        }
        let images = matrix.columns();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.apply(&source.bracket_basis(i, j));
                let rhs = target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(AlgebraError::NotHomomorphism {
                        left: source.labels[i].clone(),
                        right: source.labels[j].clone(),
                    });
                }
            }
        }
        Ok(Hom { source, target, matrix })
    }

    /// Wraps a matrix already known to preserve brackets.
    pub(crate) fn trusted(source: LeibnizAlgebra, target: LeibnizAlgebra, matrix: Matrix) -> Hom {
        Hom { source, target, matrix }
    }

    /// Builds a map from the images of the source basis.
    pub fn from_images(source: LeibnizAlgebra, target: LeibnizAlgebra, images: &[Vector]) -> Result<Hom, AlgebraError> {
        let m = Matrix::from_columns(images, target.dim())?;
        Hom::new(source, target, m)
    }

    pub fn identity(q: &LeibnizAlgebra) -> Hom {
        Hom { source: q.clone(), target: q.clone(), matrix: Matrix::identity(q.dim()) }
    }

    pub fn zero_map(source: &LeibnizAlgebra, target: &LeibnizAlgebra) -> Hom {
        Hom { source: source.clone(), target: target.clone(), matrix: Matrix::zeros(target.dim(), source.dim()) }
    }

    pub fn source(&self) -> &LeibnizAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LeibnizAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn kernel(&self) -> Ideal {
        Ideal(self.matrix.kernel())
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Hom) -> Result<Hom, AlgebraError> {
        if first.target != self.source {
            return Err(AlgebraError::Mismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source.name, self.target.name, first.source.name, first.target.name
            )));
        }
        Ok(Hom { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix) })
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.is_surjective()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// A linear right inverse `s` with `f ∘ s = id`, for surjective maps.
    pub fn section(&self) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> =
            (0..self.target.dim()).map(|k| self.matrix.solve(&self.target.basis_vector(k))).collect();
        cols.map(|c| Matrix::from_columns(&c, self.source.dim()).expect("source width"))
    }

    /// Checks that `f(space) ⊆ target_space`.
    pub fn maps_into(&self, space: &Subspace, target_space: &Subspace) -> bool {
        space.basis().iter().all(|v| target_space.contains(&self.apply(v)))
    }

    /// The map `source/I → target/J` induced on quotient coordinates.
    pub fn induced_on_quotients(&self, i: &Subspace, j: &Subspace) -> Result<Matrix, AlgebraError> {
        if !self.maps_into(i, j) {
            return Err(AlgebraError::Mismatch("map does not send the source ideal into the target ideal".into()));
        }
        let qi = Subspace::full(self.source.dim()).quotient_map(i)?;
        let qj = Subspace::full(self.target.dim()).quotient_map(j)?;
        let cols: Vec<Vector> = qi.reps.iter().map(|r| qj.project(&self.apply(r))).collect();
        Ok(Matrix::from_columns(&cols, qj.dim())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g32() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("g", &["a1", "a2", "a3"]).bracket("a1", "a3", &[(1, "a1")]).build().unwrap()
    }

    fn q32() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("q", &["e1", "e2"]).bracket("e1", "e2", &[(1, "e1")]).build().unwrap()
    }

    fn span(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::canonicalize(n, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect())).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(LeibnizAlgebra::abelian(4).validate().is_empty());
        let c = LeibnizAlgebra::builder("c", &["a1", "a2", "a3"]).bracket("a3", "a3", &[(1, "a1")]).build().unwrap();
        assert!(c.validate().is_empty());
        let bad = LeibnizAlgebra::builder("bad", &["e1", "e2"])
            .bracket("e1", "e1", &[(1, "e2")])
            .bracket("e2", "e1", &[(1, "e1")])
            .build()
            .unwrap();
        // (1,1,1) holds trivially; the identity breaks on (1,2,1) and (2,2,1)
        assert_eq!(bad.validate(), vec![Violation { i: 0, j: 1, k: 0 }, Violation { i: 1, j: 1, k: 0 }]);
        let sq = LeibnizAlgebra::builder("x", &["x"]).bracket("x", "x", &[(1, "x")]).build().unwrap();
        assert!(!sq.validate().is_empty());
    }

    #[test]
    fn ann_and_lie() {
        assert_eq!(g32().ann_ideal().space(), &span(3, &[&[1, 0, 0]]));
        assert_eq!(q32().ann_ideal().space(), &span(2, &[&[1, 0]]));
        assert!(!g32().is_lie());
        assert!(LeibnizAlgebra::abelian(3).is_lie());
        assert!(LeibnizAlgebra::zero().is_lie_perfect());
        assert!(!g32().is_lie_perfect());
    }

    #[test]
    fn bracket_span_and_closure() {
        let g = g32();
        let full = Subspace::full(3);
        assert_eq!(g.bracket_span(&full, &full), span(3, &[&[1, 0, 0]]));
        assert!(g.bracket_span(&Subspace::zero(3), &full).is_zero());
        assert_eq!(g.ideal_closure(&span(3, &[&[0, 0, 1]])).space(), &span(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert!(g.ideal_closure(&Subspace::zero(3)).space().is_zero());
    }

    #[test]
    fn quotient_examples() {
        let g = g32();
        let (q, p) = g.quotient(&Ideal::new(&g, span(3, &[&[1, 0, 0]])).unwrap()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
        assert_eq!(p.kernel().space(), &span(3, &[&[1, 0, 0]]));
        let (same, id) = g.quotient(&Ideal::zero(&g)).unwrap();
        assert_eq!(same.dim(), 3);
        assert!(id.is_iso());
        let (z, _) = g.quotient(&Ideal::full(&g)).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(g.quotient(&Ideal(span(3, &[&[0, 0, 1]]))).is_err());
    }

    #[test]
    fn liezation_of_g() {
        let (l, eta) = g32().liezation();
        assert!(l.is_lie());
        assert!(l.is_abelian());
        assert!(eta.is_surjective());
    }

    #[test]
    fn hom_examples() {
        let g = g32();
        let q = q32();
        let f = Hom::from_images(
            g.clone(),
            q.clone(),
            &[vec![int(1), int(0)], vec![int(0), int(0)], vec![int(0), int(1)]],
        )
        .unwrap();
        assert_eq!(f.kernel().space(), &span(3, &[&[0, 1, 0]]));
        assert!(f.is_surjective());
        assert!(Hom::identity(&g).kernel().space().is_zero());
        assert!(Hom::zero_map(&g, &q).kernel().space().is_full());
        let bad = Hom::from_images(g, q, &[vec![int(0), int(1)], vec![int(0), int(0)], vec![int(1), int(0)]]);
        assert!(matches!(bad, Err(AlgebraError::NotHomomorphism { .. })));
    }
}
