//! Precise Lie-center, Lie-capability and Lie-unicentrality.

use crate::algebra::{AlgebraError, Hom, Ideal, LeibnizAlgebra};
use crate::exactla::{Matrix, Subspace, Vector};
use crate::extensions::{stem_cover, Extension, ExtensionError};
use crate::freeleib::{present, FreeError};
use crate::homology::{extension_homology, hopf_hl2_truncated, sigma, ExtensionHomology, HomologyError};
use crate::invariants::lie_center;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Free(#[from] FreeError),
    #[error("the ideal is not contained in the Lie-center")]
    NotInLieCenter,
    #[error("C is not well defined at degree {0}")]
    IllDefined(usize),
    #[error("the elements killed by C do not form a two-sided ideal")]
    NotAnIdeal,
}

/// Which Lie-central extension the cover-based route was evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverRoute {
    /// Lie-center of the finite Lie-stem cover, pushed forward.
    StemCover,
    /// `Z_Lie(Q) = 0` bounds the precise center from above.
    TrivialBound,
    /// No finite cover available; only the `C`-map characterization was run.
    Unavailable,
}

#[derive(Debug, Clone)]
pub struct PreciseCenterReport {
    pub target: LeibnizAlgebra,
    pub z_lie: Ideal,
    /// Largest ideal inside `Z_Lie(Q)` on which `C` vanishes.
    pub z_star: Ideal,
    /// Image of the Lie-center of a Lie-central cover.
    pub cover_route: CoverRoute,
    pub z_star_from_cover: Option<Subspace>,
    pub routes_agree: Option<bool>,
    /// `Z_Lie(U) = ker τ` for the stem cover `τ: U ↠ Q`, i.e. `Q ≅ U/Z_Lie(U)`.
    pub capable_witness: Option<bool>,
    /// `C: Z_Lie(Q) ⊗ Q_Lie → HL_2(Q)`.
    pub c_map: Matrix,
    pub degree_used: usize,
    pub stable: bool,
    pub capable: bool,
    pub unicentral: bool,
}

/// The homology of `Q ↠ Q/A` for `A ⊆ Z_Lie(Q)`.
fn central_quotient(q: &LeibnizAlgebra, a: &Ideal, d: usize) -> Result<ExtensionHomology, CenterError> {
    if !a.space().is_subspace_of(lie_center(q).space()) {
        return Err(CenterError::NotInLieCenter);
    }
    let e = Extension::quotient(q, a)?;
    Ok(extension_homology(&e, d)?)
}

/// `C: A ⊗ Q_Lie → HL_2(Q)`, the σ-map of `0 → A → Q → Q/A → 0`, on the
/// product basis (basis of `A` × coset representatives of `Q_Lie`).
pub fn c_map(q: &LeibnizAlgebra, a: &Ideal, d: usize) -> Result<Matrix, CenterError> {
    let h = central_quotient(q, a, d)?;
    let (m, defined) = sigma(&h);
    if !defined {
        return Err(CenterError::IllDefined(d));
    }
    Ok(m)
}

/// Largest subspace of `A` killed by `C`, from the block structure of the σ-matrix.
fn killed_by_c(h: &ExtensionHomology, m: &Matrix) -> Subspace {
    let basis = h.extension.kernel().space().basis();
    let reps = h.g_lie.dim();
    let hl = m.rows();
    // λ ↦ (Σ λ_i σ(a_i ⊗ x))_x
    let rows: Vec<Vector> = (0..reps)
        .flat_map(|x| (0..hl).map(move |r| (x, r)))
        .map(|(x, r)| (0..basis.len()).map(|i| m.get(r, i * reps + x).clone()).collect())
        .collect();
    let coeffs = Matrix::from_rows(&rows, basis.len()).expect("row width").kernel();
    let n = h.extension.source().dim();
    Subspace::canonicalize(
        n,
        coeffs.basis().iter().map(|l| {
            let mut v = crate::exactla::zero_vector(n);
            for (c, b) in l.iter().zip(basis) {
                crate::exactla::add_scaled(&mut v, c, b);
            }
            v
        }),
    )
    .expect("ambient width")
}

fn z_star_at(q: &LeibnizAlgebra, z_lie: &Ideal, d: usize) -> Result<(Subspace, Matrix, ExtensionHomology), CenterError> {
    let h = central_quotient(q, z_lie, d)?;
    let (m, defined) = sigma(&h);
    if !defined {
        return Err(CenterError::IllDefined(d));
    }
    Ok((killed_by_c(&h, &m), m, h))
}

pub fn precise_center(q: &LeibnizAlgebra, d: usize) -> Result<PreciseCenterReport, CenterError> {
    let z_lie = lie_center(q);
    let (space, c, h) = z_star_at(q, &z_lie, d)?;
    let (next, _, h_next) = z_star_at(q, &z_lie, d + 1)?;
    let stable = h.stable() && h_next.stable() && space == next;
    let z_star = Ideal::new(q, space).map_err(|_| CenterError::NotAnIdeal)?;

    let (cover_route, z_star_from_cover, capable_witness) = match stem_cover(q, d) {
        Ok(cover) => {
            let tau = cover.extension.map();
            let zu = lie_center(tau.source());
            let witness = zu.space() == cover.extension.kernel().space();
            (CoverRoute::StemCover, Some(zu.space().image_under(tau.matrix())), Some(witness))
        }
        Err(ExtensionError::NoStemCover(_)) if z_lie.dim() == 0 => {
            (CoverRoute::TrivialBound, Some(Subspace::zero(q.dim())), None)
        }
        Err(ExtensionError::NoStemCover(_)) => (CoverRoute::Unavailable, None, None),
        Err(e) => return Err(e.into()),
    };
    let routes_agree = z_star_from_cover.as_ref().map(|s| s == z_star.space());
    Ok(PreciseCenterReport {
        target: q.clone(),
        capable: z_star.dim() == 0,
        unicentral: z_star.space() == z_lie.space(),
        z_lie,
        z_star,
        cover_route,
        z_star_from_cover,
        routes_agree,
        capable_witness,
        c_map: c,
        degree_used: d,
        stable,
    })
}

/// Cover route on a word-truncated free presentation `F_d / [R,F]_Lie`, for
/// nilpotent targets. Truncation can only enlarge the center, so `d` should
/// comfortably exceed twice the nilpotency class.
pub fn precise_center_truncated(q: &LeibnizAlgebra, gen_images: &[Vector], d: usize) -> Result<Subspace, CenterError> {
    let pres = present(q, gen_images, d)?;
    let hopf = hopf_hl2_truncated(&pres);
    let f = pres.free().underlying();
    let ideal = Ideal::new(f, hopf.denominator)?;
    let (u, pi) = f.quotient(&ideal)?;
    let zu = lie_center(&u);
    let section = pi.section().expect("projection is surjective");
    Ok(Subspace::canonicalize(
        q.dim(),
        zu.space().basis().iter().map(|z| pres.ev().apply(&section.apply(z))),
    )
    .expect("target width"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicentralVerdict {
    /// `C` vanishes on `Z_Lie(Q) ⊗ Q_Lie`.
    pub via_c_map: bool,
    /// `HL_2(Q) → HL_2(Q/Z_Lie(Q))` is injective.
    pub via_injectivity: bool,
    /// When unicentral: `dim HL_2(Q) = dim ker θ*(Q/Z_Lie(Q))`.
    pub kernel_identity: Option<bool>,
    pub degree_used: usize,
    pub stable: bool,
}

impl UnicentralVerdict {
    pub fn agree(&self) -> bool {
        self.via_c_map == self.via_injectivity
    }
}

pub fn is_unicentral(q: &LeibnizAlgebra, d: usize) -> Result<UnicentralVerdict, CenterError> {
    let z_lie = lie_center(q);
    let h = central_quotient(q, &z_lie, d)?;
    let (m, defined) = sigma(&h);
    if !defined || !h.well_defined() {
        return Err(CenterError::IllDefined(d));
    }
    let via_c_map = m.is_zero();
    let via_injectivity = h.f_star.is_injective();
    let kernel_identity = via_c_map.then(|| h.hl2_g.dim() == h.theta_star.kernel().dim());
    Ok(UnicentralVerdict { via_c_map, via_injectivity, kernel_identity, degree_used: d, stable: h.stable() })
}

/// `Q / Z*_Lie(Q)`, the smallest Lie-capable quotient.
pub fn smallest_capable_quotient(q: &LeibnizAlgebra, d: usize) -> Result<(LeibnizAlgebra, Hom), CenterError> {
    let report = precise_center(q, d)?;
    let (quot, p) = q.quotient(&report.z_star)?;
    Ok((quot.renamed(format!("{}/Z*", q.name())), p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_is_capable() {
        for n in 1..4 {
            let r = precise_center(&LeibnizAlgebra::abelian(n), 3).unwrap();
            assert!(r.capable && r.stable);
            assert_eq!(r.routes_agree, Some(true));
            assert_eq!(r.capable_witness, Some(true));
        }
    }

    #[test]
    fn zero_ideal_gives_zero_c() {
        let q = LeibnizAlgebra::abelian(2);
        assert!(c_map(&q, &Ideal::zero(&q), 3).unwrap().is_zero());
    }

    #[test]
    fn truncated_route_on_abelian() {
        let q = LeibnizAlgebra::abelian(2);
        let gens: Vec<Vector> = (0..2).map(|i| q.basis_vector(i)).collect();
        assert!(precise_center_truncated(&q, &gens, 3).unwrap().is_zero());
    }
}
