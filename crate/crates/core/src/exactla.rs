//! Exact rational linear algebra.
//!
//! Every subspace is stored in reduced row echelon form, so equality of
//! subspaces is structural equality of their bases.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;
use thiserror::Error;

pub type Scalar = BigRational;
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace of dimension {inner} is not contained in the enclosing subspace")]
    NotContained { inner: usize },
    #[error("invalid rational literal {0:?}")]
    BadScalar(String),
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinAlgError> {
    let bad = || LinAlgError::BadScalar(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn format_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `dst += c * src`
pub fn add_scaled(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

pub fn scaled(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Dense matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vector], cols: usize) -> Result<Self, LinAlgError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinAlgError::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.entries)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let cols: Vec<Vector> = other.columns().iter().map(|c| self.apply(c)).collect();
        Matrix::from_columns(&cols, self.rows).expect("consistent shapes")
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::canonicalize(self.cols, self.row_vectors()).expect("rows have matrix width")
    }

    /// Column space, as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::canonicalize(self.rows, self.columns()).expect("columns have matrix height")
    }

    /// Null space, as a subspace of the domain.
    pub fn kernel(&self) -> Subspace {
        let rs = self.row_space();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rs.pivots.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = unit_vector(self.cols, f);
            for (r, &p) in rs.rows.iter().zip(&rs.pivots) {
                x[p] = -r[f].clone();
            }
            out.push(x);
        }
        Subspace::canonicalize(self.cols, out).expect("kernel vectors have domain width")
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let aug: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let rs = Subspace::canonicalize(self.cols + 1, aug).expect("augmented width");
        if rs.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (r, &p) in rs.rows.iter().zip(&rs.pivots) {
            x[p] = r[self.cols].clone();
        }
        Some(x)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self.solve(&unit_vector(n, j))?);
        }
        if !self.is_injective() {
            return None;
        }
        Some(Matrix::from_columns(&cols, n).expect("square"))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Echelon { ambient: s.ambient, rows: s.rows.clone(), pivots: s.pivots.clone() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Reduces `v` in place against the current rows.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                add_scaled(v, &c, r);
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "echelon insert dimension mismatch");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for r in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(r, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { ambient: self.ambient, rows: self.rows, pivots: self.pivots }
    }
}

/// A subspace of `K^ambient` in canonical reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn canonicalize<I>(ambient: usize, vectors: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(LinAlgError::DimensionMismatch { expected: ambient, found: v.len() });
            }
            if !e.is_full() {
                e.insert(v);
            }
        }
        Ok(e.into_subspace())
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.rows, self.ambient).expect("rows have ambient width")
    }

    /// Positions of the unit vectors completing this basis to the ambient space.
    pub fn complement_positions(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Remainder of `v` modulo this subspace (zero at every pivot).
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                add_scaled(&mut w, &c, r);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && is_zero(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside.
    pub fn solve_membership(&self, v: &[Scalar]) -> Result<Option<Vector>, LinAlgError> {
        if v.len() != self.ambient {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        if !self.contains(v) {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        let mut e = Echelon::from_subspace(self);
        for r in &other.rows {
            e.insert(r.clone());
        }
        Ok(e.into_subspace())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        // a·U = b·V  <=>  (a, -b) in the kernel of the stacked system
        let k = self.dim();
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(other.rows.iter().map(|r| scaled(&int(-1), r)));
        let system = Matrix::from_columns(&cols, self.ambient)?;
        let ker = system.kernel();
        let mut out = Vec::with_capacity(ker.dim());
        for coeffs in ker.basis() {
            let mut v = zero_vector(self.ambient);
            for (c, r) in coeffs[..k].iter().zip(&self.rows) {
                add_scaled(&mut v, c, r);
            }
            out.push(v);
        }
        Subspace::canonicalize(self.ambient, out)
    }

    /// Quotient `self / w`: coset representatives and a projection onto quotient coordinates.
    pub fn quotient_map(&self, w: &Subspace) -> Result<QuotientMap, LinAlgError> {
        self.check(w)?;
        if !w.is_subspace_of(self) {
            return Err(LinAlgError::NotContained { inner: w.dim() });
        }
        let mut e = Echelon::from_subspace(w);
        let mut reps = Vec::new();
        for r in &self.rows {
            if e.insert(r.clone()) {
                reps.push(r.clone());
            }
        }
        // basis of the ambient space: W, reps, then a complement of self
        let mut basis: Vec<Vector> = w.rows.clone();
        basis.extend(reps.iter().cloned());
        basis.extend(self.complement_positions().into_iter().map(|c| unit_vector(self.ambient, c)));
        let change = Matrix::from_columns(&basis, self.ambient)?;
        let inv = change.inverse().expect("completed basis is invertible");
        let q = reps.len();
        let mut project = Matrix::zeros(q, self.ambient);
        for i in 0..q {
            for j in 0..self.ambient {
                project.set(i, j, inv.get(w.dim() + i, j).clone());
            }
        }
        Ok(QuotientMap { reps, project })
    }

    /// Image of this subspace under a linear map.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        Subspace::canonicalize(m.rows(), self.rows.iter().map(|r| m.apply(r))).expect("map codomain")
    }

    /// Preimage of this subspace under a linear map.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        let q = Subspace::full(self.ambient).quotient_map(self).expect("contained in full space");
        q.project.mul(m).kernel()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(format_scalar).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Coset representatives of `U/W` and the projection onto their coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    pub reps: Vec<Vector>,
    /// `dim(U/W) × ambient`; exact on `U`, kills `W`.
    pub project: Matrix,
}

impl QuotientMap {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.project.apply(v)
    }

    /// Lifts quotient coordinates back to the span of the representatives.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vector(self.project.cols());
        for (c, r) in coords.iter().zip(&self.reps) {
            add_scaled(&mut v, c, r);
        }
        v
    }
}

/// Index set of the symmetric square basis `e_i ⊙ e_j`, `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPairs {
    n: usize,
}

impl SymPairs {
    pub fn new(n: usize) -> Self {
        SymPairs { n }
    }

    pub fn base_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        a * self.n - a * a.saturating_sub(1) / 2 + (b - a)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.n {
            for j in i..self.n {
                out.push((i, j));
            }
        }
        out
    }

    /// `x ⊙ y` in the pair basis.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[self.index(i, j)] += a * b;
            }
        }
        out
    }

    /// Matrix of `x ⊙ y ↦ f(x) ⊙ f(y)` for a linear map `f` into a space of dim `target.base_dim()`.
    pub fn induced(&self, f: &Matrix, target: &SymPairs) -> Matrix {
        let cols: Vec<Vector> = self
            .pairs()
            .into_iter()
            .map(|(i, j)| target.product(&f.column(i), &f.column(j)))
            .collect();
        Matrix::from_columns(&cols, target.dim()).expect("pair basis")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn span(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::canonicalize(n, rows.iter().map(|r| v(r))).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(span(2, &[&[1, 0], &[0, 1]]), Subspace::full(2));
        let s = span(2, &[&[2, 4], &[1, 2]]);
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert_eq!(span(3, &[]).dim(), 0);
        assert!(Subspace::canonicalize(2, vec![v(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let s = span(3, &[&[1, 1, 0]]).sum(&span(3, &[&[1, -1, 0]])).unwrap();
        assert_eq!(s, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let i = span(3, &[&[1, 0, 0], &[0, 1, 0]]).intersect(&span(3, &[&[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(i, span(3, &[&[0, 1, 0]]));
        assert!(span(2, &[&[1, 0]]).intersect(&span(2, &[&[0, 1]])).unwrap().is_zero());
        assert!(span(2, &[&[1, 0]]).sum(&span(3, &[])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = Subspace::full(2).quotient_map(&span(2, &[&[1, 0]])).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(is_zero(&q.project(&v(&[1, 0]))));
        assert_eq!(q.project(&q.reps[0]), v(&[1]));
        let u = span(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(u.quotient_map(&u).unwrap().dim(), 0);
        let id = u.quotient_map(&Subspace::zero(3)).unwrap();
        for (i, r) in id.reps.iter().enumerate() {
            assert_eq!(id.project(r), unit_vector(2, i));
        }
        assert!(span(3, &[&[1, 0, 0]]).quotient_map(&span(3, &[&[0, 1, 0]])).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = span(2, &[&[1, 2]]);
        assert_eq!(s.solve_membership(&v(&[2, 4])).unwrap(), Some(v(&[2])));
        assert_eq!(span(2, &[&[0, 1]]).solve_membership(&v(&[1, 0])).unwrap(), None);
        assert_eq!(s.solve_membership(&v(&[0, 0])).unwrap(), Some(v(&[0])));
    }

    #[test]
    fn scalar_strings() {
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_scalar(&frac(-3, 2)), "-3/2");
        assert_eq!(format_scalar(&int(5)), "5");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn sym_pairs_indexing() {
        for n in 0..6 {
            let s = SymPairs::new(n);
            for (k, (i, j)) in s.pairs().into_iter().enumerate() {
                assert_eq!(s.index(i, j), k);
                assert_eq!(s.index(j, i), k);
            }
        }
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_rows(&[v(&[1, 2, 3]), v(&[2, 4, 6])], 3).unwrap();
        assert_eq!(m.kernel().dim(), 2);
        for k in m.kernel().basis() {
            assert!(is_zero(&m.apply(k)));
        }
        assert!(m.solve(&v(&[1, 3])).is_none());
        let x = m.solve(&v(&[1, 2])).unwrap();
        assert_eq!(m.apply(&x), v(&[1, 2]));
    }
}
