//! Exact rational subspace arithmetic.
use leibniz::exactla::{frac, int, Matrix, Subspace};

fn main() {
    let m = Matrix::from_rows(&[vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]], 3).unwrap();
    println!("rank {} kernel {}", m.rank(), m.kernel());

    let a = Subspace::canonicalize(3, [vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]).unwrap();
    let b = Subspace::canonicalize(3, [vec![int(0), int(1), int(1)], vec![frac(1, 2), int(0), int(0)]]).unwrap();
    println!("a ∩ b = {}", a.intersect(&b).unwrap());
    println!("a + b = {}", a.sum(&b).unwrap());
    let q = Subspace::full(3).quotient_map(&a).unwrap();
    println!("dim R^3/a = {}", q.dim());
}
