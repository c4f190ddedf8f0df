//! Homological criteria for Lie-nilpotency: a harness that certifies the
//! isomorphisms `G/M^[k] ≅ Q/N^[k]` on concrete homomorphisms.

use crate::algebra::{AlgebraError, Hom, Ideal, LeibnizAlgebra};
use crate::exactla::{Matrix, Subspace};
use crate::homology::{induced_hl2, HomologyError};
use crate::invariants::{lie_upper_central_series, relative_lower_central_series};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("phi does not map M into N")]
    IdealNotPreserved,
    #[error("ideals do not belong to the source and target of phi")]
    WrongParent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conditions {
    /// `G_Lie → Q_Lie` is bijective.
    pub hl1_iso: bool,
    /// `HL_2(G) → HL_2(Q)` is surjective.
    pub hl2_epi: bool,
    /// `G/M → Q/N` is bijective.
    pub quotient_iso: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.hl1_iso && self.hl2_epi && self.quotient_iso
    }
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub phi: Hom,
    pub m: Ideal,
    pub n: Ideal,
    pub conditions: Conditions,
    /// `φ_k` bijective for `k = 1..=k_max`; only present when every condition holds.
    pub conclusion: Option<Vec<bool>>,
    /// The matrices of `φ_k: G/M^[k] → Q/N^[k]`, alongside the conclusion.
    pub phi_k: Vec<Matrix>,
    /// When both relative series vanish by `k_max`, whether `φ` itself is bijective.
    pub phi_iso: Option<bool>,
    pub degree_used: usize,
    pub stable: bool,
    pub well_defined: bool,
}

fn bijective(m: &Matrix) -> bool {
    m.rows() == m.cols() && m.is_injective()
}

pub fn check_isomorphism_criterion(phi: &Hom, m: &Ideal, n: &Ideal, k_max: usize, d: usize) -> Result<CriterionReport, NilError> {
    let g = phi.source();
    let q = phi.target();
    if m.space().ambient() != g.dim() || n.space().ambient() != q.dim() {
        return Err(NilError::WrongParent);
    }
    if !phi.maps_into(m.space(), n.space()) {
        return Err(NilError::IdealNotPreserved);
    }
    let f_lie = phi.induced_on_quotients(g.ann_ideal().space(), q.ann_ideal().space())?;
    let hl2 = induced_hl2(phi, d)?;
    let quotient = phi.induced_on_quotients(m.space(), n.space())?;
    let conditions = Conditions {
        hl1_iso: bijective(&f_lie),
        hl2_epi: hl2.matrix.is_surjective(),
        quotient_iso: bijective(&quotient),
    };
    let stable = hl2.source.stable && hl2.target.stable;
    let mut report = CriterionReport {
        phi: phi.clone(),
        m: m.clone(),
        n: n.clone(),
        conditions,
        conclusion: None,
        phi_k: Vec::new(),
        phi_iso: None,
        degree_used: d,
        stable,
        well_defined: hl2.well_defined,
    };
    if !report.conditions.all() {
        return Ok(report);
    }
    let ms = relative_lower_central_series(g, m);
    let ns = relative_lower_central_series(q, n);
    let mut verdicts = Vec::new();
    for k in 1..=k_max {
        let phi_k = phi.induced_on_quotients(ms.term(k - 1), ns.term(k - 1))?;
        verdicts.push(bijective(&phi_k));
        report.phi_k.push(phi_k);
    }
    let vanished = |s: &crate::invariants::SeriesReport| s.class.is_some_and(|c| c < k_max);
    if vanished(&ms) && vanished(&ns) {
        report.phi_iso = Some(phi.is_iso());
    }
    report.conclusion = Some(verdicts);
    Ok(report)
}

/// Runs the criterion with `M = ζ_i(G)` and `N = ζ_i(Q)`.
pub fn check_upper_central(phi: &Hom, i: usize, k_max: usize, d: usize) -> Result<CriterionReport, NilError> {
    let zg = lie_upper_central_series(phi.source());
    let zq = lie_upper_central_series(phi.target());
    let m = Ideal::new(phi.source(), zg.term(i).clone())?;
    let n = Ideal::new(phi.target(), zq.term(i).clone())?;
    check_isomorphism_criterion(phi, &m, &n, k_max, d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    /// `N^[k] = 0` for some `k`.
    pub series_vanishes: bool,
    /// Least `i` with `N ⊆ ζ_i(Q)`.
    pub upper_index: Option<usize>,
    pub lower_terms: Vec<Subspace>,
}

impl VanishingReport {
    pub fn agree(&self) -> bool {
        self.series_vanishes == self.upper_index.is_some()
    }
}

pub fn vanishing_series_criterion(q: &LeibnizAlgebra, n: &Ideal) -> VanishingReport {
    let lower = relative_lower_central_series(q, n);
    let upper = lie_upper_central_series(q);
    let upper_index = upper.terms.iter().position(|z| n.space().is_subspace_of(z));
    VanishingReport { series_vanishes: lower.class.is_some(), upper_index, lower_terms: lower.terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_5_5_c() -> LeibnizAlgebra {
        LeibnizAlgebra::builder("c", &["a1", "a2", "a3"])
            .bracket("a1", "a3", &[(1, "a2")])
            .bracket("a2", "a3", &[(1, "a2")])
            .bracket("a3", "a3", &[(1, "a1")])
            .build()
            .unwrap()
    }

    #[test]
    fn identity_certifies() {
        let q = LeibnizAlgebra::builder("c", &["a1", "a2", "a3"]).bracket("a3", "a3", &[(1, "a1")]).build().unwrap();
        let full = Ideal::full(&q);
        let r = check_isomorphism_criterion(&Hom::identity(&q), &full, &full, 3, 3).unwrap();
        assert!(r.conditions.all());
        assert_eq!(r.conclusion, Some(vec![true, true, true]));
        assert_eq!(r.phi_iso, Some(true));
    }

    #[test]
    fn vanishing_on_non_nilpotent() {
        let q = ex_5_5_c();
        let r = vanishing_series_criterion(&q, &Ideal::full(&q));
        assert!(!r.series_vanishes && r.upper_index.is_none());
        let z = vanishing_series_criterion(&q, &Ideal::zero(&q));
        assert!(z.series_vanishes && z.agree());
    }

    #[test]
    fn unpreserved_ideal_is_rejected() {
        let q = ex_5_5_c();
        let r = check_isomorphism_criterion(&Hom::identity(&q), &Ideal::full(&q), &Ideal::zero(&q), 2, 3);
        assert_eq!(r.unwrap_err(), NilError::IdealNotPreserved);
    }
}
