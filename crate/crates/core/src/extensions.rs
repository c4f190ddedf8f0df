//! Extensions of Leibniz algebras: Lie-relative classification, pullbacks and
//! finite Lie-stem covers.

use crate::algebra::{AlgebraError, Hom, Ideal, LeibnizAlgebra};
use crate::exactla::{frac, int, is_zero, sub, zero_vector, Matrix, Scalar, Subspace, SymPairs, Vector};
use crate::homology::{hopf_hl2, HomologyError, HopfHomology};
use crate::invariants::{center, lie_center, lie_commutator_spaces};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] Box<HomologyError>),
    #[error("map {source_name} -> {target} is not surjective")]
    NotSurjective { source_name: String, target: String },
    #[error("pullback legs have different targets")]
    TargetMismatch,
    #[error("truncation degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("{0} has no Lie-stem cover: the cocycle system for the Liezation is inconsistent")]
    NoStemCover(String),
}

/// A surjective homomorphism `f: G ↠ Q` with kernel `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    f: Hom,
    kernel: Ideal,
}

impl Extension {
    pub fn new(f: Hom) -> Result<Extension, ExtensionError> {
        if !f.is_surjective() {
            return Err(ExtensionError::NotSurjective {
                source_name: f.source().name().to_string(),
                target: f.target().name().to_string(),
            });
        }
        let kernel = f.kernel();
        Ok(Extension { f, kernel })
    }

    pub fn identity(q: &LeibnizAlgebra) -> Extension {
        Extension::new(Hom::identity(q)).expect("identity is surjective")
    }

    /// `Q ↠ Q/I`.
    pub fn quotient(q: &LeibnizAlgebra, ideal: &Ideal) -> Result<Extension, ExtensionError> {
        let (_, p) = q.quotient(ideal)?;
        Extension::new(p)
    }

    pub fn map(&self) -> &Hom {
        &self.f
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn source(&self) -> &LeibnizAlgebra {
        self.f.source()
    }

    pub fn target(&self) -> &LeibnizAlgebra {
        self.f.target()
    }
}

/// Flags of the Lie-relative classification, each computed independently of the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// `N ⊆ Z(G)`.
    pub central: bool,
    /// `[N, G]_Lie = 0`.
    pub lie_central: bool,
    /// `N ⊆ Z_Lie(G)`.
    pub lie_central_via_center: bool,
    /// `N ∩ G^ann = 0`.
    pub lie_trivial: bool,
    /// `f` restricts to an isomorphism `G^ann ≅ Q^ann`.
    pub lie_trivial_via_ann_iso: bool,
    /// `0 → N → G_Lie → Q_Lie → 0` is exact.
    pub lie_trivial_via_exactness: bool,
    /// Lie-central and `N ⊆ G^ann`.
    pub lie_stem: bool,
    /// Lie-central and the induced map `N → G_Lie` is zero.
    pub lie_stem_via_kernel_map: bool,
    /// Lie-central and the induced map `G_Lie → Q_Lie` is bijective.
    pub lie_stem_via_liezation: bool,
    pub kernel: Subspace,
    pub g_ann: Subspace,
    pub intersection: Subspace,
}

pub fn classify(e: &Extension) -> ClassificationReport {
    let g = e.source();
    let q = e.target();
    let f = e.map();
    let n = e.kernel().space();
    let full = Subspace::full(g.dim());
    let g_ann = g.ann_ideal().into_space();
    let q_ann = q.ann_ideal().into_space();
    let intersection = n.intersect(&g_ann).expect("same ambient");

    let lie_central = lie_commutator_spaces(g, n, &full).is_zero();
    let lie_central_via_center = n.is_subspace_of(lie_center(g).space());

    // f|: G^ann → Q^ann
    let ann_image = g_ann.image_under(f.matrix());
    let ann_injective = g_ann.basis().iter().map(|v| f.apply(v)).collect::<Vec<_>>();
    let ann_rank = Subspace::canonicalize(q.dim(), ann_injective).expect("target width").dim();
    let lie_trivial_via_ann_iso = ann_image == q_ann && ann_rank == g_ann.dim();

    // N → G_Lie and G_Lie → Q_Lie
    let g_lie = full.quotient_map(&g_ann).expect("ann is a subspace");
    let q_lie = Subspace::full(q.dim()).quotient_map(&q_ann).expect("ann is a subspace");
    let n_to_glie = Matrix::from_columns(
        &n.basis().iter().map(|v| g_lie.project(v)).collect::<Vec<_>>(),
        g_lie.dim(),
    )
    .expect("quotient height");
    let f_lie = Matrix::from_columns(
        &g_lie.reps.iter().map(|r| q_lie.project(&f.apply(r))).collect::<Vec<_>>(),
        q_lie.dim(),
    )
    .expect("quotient height");
    let exact_at_n = n_to_glie.is_injective();
    let exact_at_glie = n_to_glie.image() == f_lie.kernel();
    let exact_at_qlie = f_lie.is_surjective();

    ClassificationReport {
        central: n.is_subspace_of(center(g).space()),
        lie_central,
        lie_central_via_center,
        lie_trivial: intersection.is_zero(),
        lie_trivial_via_ann_iso,
        lie_trivial_via_exactness: exact_at_n && exact_at_glie && exact_at_qlie,
        lie_stem: lie_central && n.is_subspace_of(&g_ann),
        lie_stem_via_kernel_map: lie_central && n_to_glie.is_zero(),
        lie_stem_via_liezation: lie_central && f_lie.is_injective() && f_lie.is_surjective(),
        kernel: n.clone(),
        g_ann,
        intersection,
    }
}

/// Pullback `P = {(g, h) : π(g) = φ(h)}` with its two projections.
pub fn pullback(pi: &Hom, phi: &Hom) -> Result<(LeibnizAlgebra, Hom, Hom), ExtensionError> {
    if pi.target() != phi.target() {
        return Err(ExtensionError::TargetMismatch);
    }
    for m in [pi, phi] {
        if !m.is_surjective() {
            return Err(ExtensionError::NotSurjective {
                source_name: m.source().name().to_string(),
                target: m.target().name().to_string(),
            });
        }
    }
    let g = pi.source();
    let h = phi.source();
    let (ng, nh) = (g.dim(), h.dim());
    let sum = g.direct_sum(h);
    // columns of [π, −φ]
    let mut cols: Vec<Vector> = pi.matrix().columns();
    cols.extend(phi.matrix().columns().iter().map(|c| c.iter().map(|x| -x).collect::<Vector>()));
    let space = Matrix::from_columns(&cols, pi.target().dim()).expect("target height").kernel();
    let labels = (1..=space.dim()).map(|i| format!("p{i}")).collect();
    let mut p = LeibnizAlgebra::with_labels(format!("{}x{}", g.name(), h.name()), labels);
    for (a, x) in space.basis().iter().enumerate() {
        for (b, y) in space.basis().iter().enumerate() {
            let coords = space
                .solve_membership(&sum.bracket(x, y))
                .expect("ambient width")
                .expect("pullback is a subalgebra");
            p.set_bracket(a, b, &coords)?;
        }
    }
    let to_g: Vec<Vector> = space.basis().iter().map(|v| v[..ng].to_vec()).collect();
    let to_h: Vec<Vector> = space.basis().iter().map(|v| v[ng..ng + nh].to_vec()).collect();
    let to_g = Hom::from_images(p.clone(), g.clone(), &to_g)?;
    let to_h = Hom::from_images(p.clone(), h.clone(), &to_h)?;
    Ok((p, to_g, to_h))
}

/// Construction data of a finite Lie-stem cover `U = C ⊕ W ↠ Q`.
#[derive(Debug, Clone)]
pub struct StemCover {
    pub extension: Extension,
    /// Positions of the basis vectors of `Q` spanning the complement `C` of `Q^ann`.
    pub complement: Vec<usize>,
    /// Symmetric-square positions whose classes form the basis of `W = Sym²Q / Rel`.
    pub symbols: Vec<usize>,
    pub hl2: HopfHomology,
}

/// A Lie-stem cover of `q`: a Lie-central extension `U ↠ Q` with kernel `≅ HL_2^Lie(Q)` inside `U^ann`.
pub fn stem_quotient_extension(q: &LeibnizAlgebra, d: usize) -> Result<Extension, ExtensionError> {
    Ok(stem_cover(q, d)?.extension)
}

pub fn stem_cover(q: &LeibnizAlgebra, d: usize) -> Result<StemCover, ExtensionError> {
    if d < 2 {
        return Err(ExtensionError::DegreeTooSmall(d));
    }
    let hl2 = hopf_hl2(q, d).map_err(Box::new)?;
    let n = q.dim();
    let sp = SymPairs::new(n);
    let pairs = sp.pairs();
    let ann = q.ann_ideal().into_space();
    let complement = ann.complement_positions();
    let k = complement.len();
    let rel = hl2.denominator.clone();
    let symbols = rel.complement_positions();
    let w = symbols.len();

    let pi_ann = |v: &[Scalar]| -> Vector {
        let mut out = zero_vector(n);
        for (r, &p) in ann.basis().iter().zip(ann.pivots()) {
            crate::exactla::add_scaled(&mut out, &v[p], r);
        }
        out
    };
    let c_coords = |v: &[Scalar]| -> Vector {
        let c = sub(v, &pi_ann(v));
        complement.iter().map(|&i| c[i].clone()).collect()
    };
    let p = |v: &[Scalar]| -> Vector {
        let r = rel.reduce(v);
        symbols.iter().map(|&i| r[i].clone()).collect()
    };
    let mu_bar = |t: usize| -> Vector {
        let (i, j) = pairs[symbols[t]];
        q.sym(&q.basis_vector(i), &q.basis_vector(j))
    };
    let ce: Vec<Vector> = complement.iter().map(|&i| q.basis_vector(i)).collect();

    // unknowns α_ij (i < j) in W, antisymmetric
    let apairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let nu = apairs.len() * w;
    let slot = |i: usize, j: usize| -> Option<(usize, Scalar)> {
        if i == j {
            return None;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let idx = apairs.iter().position(|&pr| pr == (a, b)).expect("pair listed");
        Some((idx * w, int(s)))
    };
    // γ(x, y) for C-coordinates x, y as (constant, coefficient rows w × nu)
    let gamma = |x: &[Scalar], y: &[Scalar]| -> (Vector, Vec<Vector>) {
        let mut constant = zero_vector(w);
        let mut coeff = vec![zero_vector(nu); w];
        for i in 0..k {
            for j in 0..k {
                let a = &x[i] * &y[j];
                if a.is_zero() {
                    continue;
                }
                let half = p(&sp.product(&ce[i], &ce[j]));
                crate::exactla::add_scaled(&mut constant, &(&a * frac(1, 2)), &half);
                if let Some((base, s)) = slot(i, j) {
                    for (t, row) in coeff.iter_mut().enumerate() {
                        row[base + t] += &a * &s;
                    }
                }
            }
        }
        (constant, coeff)
    };
    let unit = |i: usize| -> Vector { (0..k).map(|t| if t == i { int(1) } else { int(0) }).collect() };

    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    // μ̄(α_ij) fixes the Q^ann-part of the antisymmetric bracket
    for (pi_idx, &(i, j)) in apairs.iter().enumerate() {
        let anti = sub(&q.bracket(&ce[i], &ce[j]), &q.bracket(&ce[j], &ce[i]));
        let target = pi_ann(&anti.iter().map(|x| x * frac(1, 2)).collect::<Vector>());
        for r in 0..n {
            let mut row = zero_vector(nu);
            for t in 0..w {
                row[pi_idx * w + t] = mu_bar(t)[r].clone();
            }
            rows.push(row);
            rhs.push(target[r].clone());
        }
    }
    // Leibniz identity on C-triples, W-component:
    // γ(c_i, π_C[c_j,c_l]) = γ(π_C[c_i,c_j], c_l) + p(c_l ⊙ π_ann[c_i,c_j]) − (j ↔ l)
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let (lc, lm) = gamma(&unit(i), &c_coords(&q.bracket(&ce[j], &ce[l])));
                let (r1c, r1m) = gamma(&c_coords(&q.bracket(&ce[i], &ce[j])), &unit(l));
                let (r2c, r2m) = gamma(&c_coords(&q.bracket(&ce[i], &ce[l])), &unit(j));
                let extra = sub(
                    &p(&sp.product(&ce[l], &pi_ann(&q.bracket(&ce[i], &ce[j])))),
                    &p(&sp.product(&ce[j], &pi_ann(&q.bracket(&ce[i], &ce[l])))),
                );
                for t in 0..w {
                    let row: Vector = (0..nu).map(|u| &lm[t][u] - &r1m[t][u] + &r2m[t][u]).collect();
                    let c = -&lc[t] + &r1c[t] - &r2c[t] + &extra[t];
                    rows.push(row);
                    rhs.push(c);
                }
            }
        }
    }
    let alpha = if nu == 0 {
        if !rhs.iter().all(Zero::is_zero) {
            return Err(ExtensionError::NoStemCover(q.name().to_string()));
        }
        Vec::new()
    } else {
        let system = Matrix::from_rows(&rows, nu).expect("row width");
        system.solve(&rhs).ok_or_else(|| ExtensionError::NoStemCover(q.name().to_string()))?
    };
    let gamma_value = |i: usize, j: usize| -> Vector {
        let (c, m) = gamma(&unit(i), &unit(j));
        (0..w)
            .map(|t| {
                let mut x = c[t].clone();
                for (u, a) in alpha.iter().enumerate() {
                    if !m[t][u].is_zero() {
                        x += &m[t][u] * a;
                    }
                }
                x
            })
            .collect()
    };

    let mut labels: Vec<String> = complement.iter().map(|&i| q.labels()[i].clone()).collect();
    labels.extend(symbols.iter().map(|&s| {
        let (i, j) = pairs[s];
        format!("{{{},{}}}", q.labels()[i], q.labels()[j])
    }));
    let mut u = LeibnizAlgebra::with_labels(format!("{}_cover", q.name()), labels);
    for i in 0..k {
        for j in 0..k {
            let mut v = c_coords(&q.bracket(&ce[i], &ce[j]));
            v.extend(gamma_value(i, j));
            u.set_bracket(i, j, &v)?;
        }
    }
    for t in 0..w {
        let a = mu_bar(t);
        for j in 0..k {
            let mut v = zero_vector(k);
            v.extend(p(&sp.product(&ce[j], &a)));
            u.set_bracket(k + t, j, &v)?;
        }
    }
    let mut images: Vec<Vector> = ce.clone();
    images.extend((0..w).map(mu_bar));
    let tau = Hom::from_images(u, q.clone(), &images)?;
    let extension = Extension::new(tau)?;
    Ok(StemCover { extension, complement, symbols, hl2 })
}

/// True when every basis vector of the kernel lies in `G^ann`.
pub fn kernel_inside_ann(e: &Extension) -> bool {
    let ann = e.source().ann_ideal();
    e.kernel().space().basis().iter().all(|v| ann.space().contains(v) || is_zero(v))
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

    fn imgs(rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn ex_3_2_is_lie_trivial() {
        let f = Hom::from_images(g32(), q32(), &imgs(&[&[1, 0], &[0, 0], &[0, 1]])).unwrap();
        let r = classify(&Extension::new(f).unwrap());
        assert!(r.lie_trivial);
        assert!(r.lie_trivial_via_ann_iso);
        assert!(r.lie_trivial_via_exactness);
    }

    #[test]
    fn remark_extension_flags() {
        let q = LeibnizAlgebra::abelian(2);
        let f = Hom::from_images(g32(), q, &imgs(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let r = classify(&Extension::new(f).unwrap());
        assert!(!r.central);
        // {a1, a3} = a1 ≠ 0, so the kernel span{a1} is not Lie-central
        assert!(!r.lie_central);
        assert_eq!(r.lie_central, r.lie_central_via_center);
    }

    #[test]
    fn non_surjective_is_rejected() {
        let f = Hom::zero_map(&g32(), &LeibnizAlgebra::abelian(1));
        assert!(matches!(Extension::new(f), Err(ExtensionError::NotSurjective { .. })));
    }

    #[test]
    fn pullback_of_identity() {
        let g = g32();
        let q = q32();
        let f = Hom::from_images(g.clone(), q.clone(), &imgs(&[&[1, 0], &[0, 0], &[0, 1]])).unwrap();
        let (p, to_g, to_h) = pullback(&f, &Hom::identity(&q)).unwrap();
        assert_eq!(p.dim(), 3);
        assert!(to_g.is_iso());
        assert!(to_h.is_surjective());
        assert!(p.validate().is_empty());
    }

    #[test]
    fn abelian_line_cover() {
        let e = stem_quotient_extension(&LeibnizAlgebra::abelian(1), 3).unwrap();
        assert_eq!(e.source().dim(), 2);
        assert_eq!(e.kernel().dim(), 1);
        let r = classify(&e);
        assert!(r.lie_central && r.lie_stem);
        assert!(e.source().validate().is_empty());
    }
}
