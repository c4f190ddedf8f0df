//! Deterministic JSON report documents for the command-line tool.
//!
//! Every subspace is emitted by its canonical basis and every map by its full
//! matrix, with rational entries as strings, so that claims such as exactness can
//! be re-verified from the document alone.

use crate::algebra::LeibnizAlgebra;
use crate::centers::{is_unicentral, precise_center, CenterError, CoverRoute};
use crate::exactla::{format_scalar, Matrix, Subspace};
use crate::extensions::{classify, Extension};
use crate::homology::{extension_homology, five_term_from, hopf_hl2, is_lie_stem_cover, six_term_from, HomologyError, SequenceKind, SequenceReport};
use crate::invariants::{
    absolute_derived_series, absolute_lower_central_series, center, lie_center, lie_derived_series,
    lie_lower_central_series, lie_upper_central_series, right_center, SeriesKind, SeriesReport,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub type Rows = Vec<Vec<String>>;

pub fn subspace_rows(s: &Subspace) -> Rows {
    s.basis().iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

pub fn matrix_rows(m: &Matrix) -> Rows {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_scalar).collect()).collect()
}

/// SHA-256 over the inputs, each prefixed by its length so concatenations cannot collide.
pub fn input_hash<'a>(parts: impl IntoIterator<Item = &'a str>) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub input_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub sweep: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub provenance: Provenance,
    pub body: serde_json::Value,
}

impl ReportDocument {
    pub fn new(command: &str, provenance: Provenance, body: impl Serialize) -> ReportDocument {
        ReportDocument {
            tool: "leibniz",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            provenance,
            body: serde_json::to_value(body).expect("report data serializes"),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report data serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesJson {
    pub kind: SeriesKind,
    pub terms: Vec<Rows>,
    pub dims: Vec<usize>,
    pub stabilized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
}

impl From<&SeriesReport> for SeriesJson {
    fn from(s: &SeriesReport) -> Self {
        SeriesJson {
            kind: s.kind,
            terms: s.terms.iter().map(subspace_rows).collect(),
            dims: s.terms.iter().map(Subspace::dim).collect(),
            stabilized: s.stabilized,
            class: s.class,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_solvable_class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_nilpotent_class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solvable_class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotent_class: Option<usize>,
    pub lie_derived: SeriesJson,
    pub lie_lower_central: SeriesJson,
    pub lie_upper_central: SeriesJson,
    pub derived: SeriesJson,
    pub lower_central: SeriesJson,
}

pub fn series_section(q: &LeibnizAlgebra) -> SeriesSection {
    let ld = lie_derived_series(q);
    let ll = lie_lower_central_series(q);
    let lu = lie_upper_central_series(q);
    let ad = absolute_derived_series(q);
    let al = absolute_lower_central_series(q);
    SeriesSection {
        lie_solvable_class: ld.class,
        lie_nilpotent_class: ll.class,
        solvable_class: ad.class,
        nilpotent_class: al.class,
        lie_derived: (&ld).into(),
        lie_lower_central: (&ll).into(),
        lie_upper_central: (&lu).into(),
        derived: (&ad).into(),
        lower_central: (&al).into(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CentersSection {
    pub center: Rows,
    pub right_center: Rows,
    pub lie_center: Rows,
    pub ann: Rows,
}

pub fn centers_section(q: &LeibnizAlgebra) -> CentersSection {
    CentersSection {
        center: subspace_rows(center(q).space()),
        right_center: subspace_rows(right_center(q).space()),
        lie_center: subspace_rows(lie_center(q).space()),
        ann: subspace_rows(q.ann_ideal().space()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologySection {
    pub dim: usize,
    pub degree_used: usize,
    pub stable: bool,
    /// Basis of `Sym²Q` in order, as label pairs.
    pub sym_basis: Vec<(String, String)>,
    pub numerator: Rows,
    pub denominator: Rows,
    pub reps: Rows,
}

/// Computes `HL_2` at `d`, raising `d` up to `d + 3` when `sweep` is set and the result is unstable.
pub fn homology_section(q: &LeibnizAlgebra, d: usize, sweep: bool) -> Result<HomologySection, HomologyError> {
    let top = if sweep { d + 3 } else { d };
    let mut h = hopf_hl2(q, d)?;
    let mut used = d;
    while !h.stable && used < top {
        used += 1;
        h = hopf_hl2(q, used)?;
    }
    let sym_basis = h
        .sym_pairs()
        .pairs()
        .into_iter()
        .map(|(i, j)| (q.labels()[i].clone(), q.labels()[j].clone()))
        .collect();
    Ok(HomologySection {
        dim: h.dim(),
        degree_used: h.degree_used,
        stable: h.stable,
        sym_basis,
        numerator: subspace_rows(&h.numerator),
        denominator: subspace_rows(&h.denominator),
        reps: h.reps().iter().map(|r| r.iter().map(format_scalar).collect()).collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PreciseCenterSection {
    pub z_lie: Rows,
    pub z_star: Rows,
    pub cover_route: CoverRoute,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_star_from_cover: Option<Rows>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capable_witness: Option<bool>,
    pub capable: bool,
    pub unicentral: bool,
    pub unicentral_via_c_map: bool,
    pub unicentral_via_injectivity: bool,
    pub c_map: Rows,
    pub degree_used: usize,
    pub stable: bool,
}

pub fn precise_center_section(q: &LeibnizAlgebra, d: usize) -> Result<PreciseCenterSection, CenterError> {
    let r = precise_center(q, d)?;
    let u = is_unicentral(q, d)?;
    Ok(PreciseCenterSection {
        z_lie: subspace_rows(r.z_lie.space()),
        z_star: subspace_rows(r.z_star.space()),
        cover_route: r.cover_route,
        z_star_from_cover: r.z_star_from_cover.as_ref().map(subspace_rows),
        routes_agree: r.routes_agree,
        capable_witness: r.capable_witness,
        capable: r.capable,
        unicentral: r.unicentral,
        unicentral_via_c_map: u.via_c_map,
        unicentral_via_injectivity: u.via_injectivity,
        c_map: matrix_rows(&r.c_map),
        degree_used: d,
        stable: r.stable && u.stable,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub is_lie: bool,
    pub is_abelian: bool,
}

impl From<&LeibnizAlgebra> for AlgebraSummary {
    fn from(q: &LeibnizAlgebra) -> Self {
        AlgebraSummary {
            name: q.name().to_string(),
            dim: q.dim(),
            basis: q.labels().to_vec(),
            is_lie: q.is_lie(),
            is_abelian: q.is_abelian(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub series: bool,
    pub centers: bool,
    pub homology: Option<usize>,
    pub precise_center: Option<usize>,
    pub sweep: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeBody {
    pub algebra: AlgebraSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centers: Option<CentersSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precise_center: Option<PreciseCenterSection>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Center(#[from] CenterError),
}

pub fn analyze(q: &LeibnizAlgebra, input: &str, opts: &AnalyzeOptions) -> Result<ReportDocument, ReportError> {
    let body = AnalyzeBody {
        algebra: q.into(),
        series: opts.series.then(|| series_section(q)),
        centers: opts.centers.then(|| centers_section(q)),
        homology: opts.homology.map(|d| homology_section(q, d, opts.sweep)).transpose()?,
        precise_center: opts.precise_center.map(|d| precise_center_section(q, d)).transpose()?,
    };
    let degree = opts.homology.or(opts.precise_center);
    Ok(ReportDocument::new("analyze", Provenance { input_sha256: input_hash([input]), degree, sweep: opts.sweep }, body))
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceJson {
    pub kind: SequenceKind,
    pub nodes: Vec<(String, usize)>,
    pub maps: Vec<Rows>,
    pub exact_at: Vec<Option<bool>>,
    pub exact: bool,
    pub compositions_zero: bool,
    pub degree_used: usize,
    pub stable: bool,
    pub well_defined: bool,
}

impl From<&SequenceReport> for SequenceJson {
    fn from(r: &SequenceReport) -> Self {
        SequenceJson {
            kind: r.kind,
            nodes: r.nodes.clone(),
            maps: r.maps.iter().map(matrix_rows).collect(),
            exact_at: r.exact_at.clone(),
            exact: r.is_exact(),
            compositions_zero: r.compositions_zero,
            degree_used: r.degree_used,
            stable: r.stable,
            well_defined: r.well_defined,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationJson {
    pub central: bool,
    pub lie_central: bool,
    pub lie_central_via_center: bool,
    pub lie_trivial: bool,
    pub lie_trivial_via_ann_iso: bool,
    pub lie_trivial_via_exactness: bool,
    pub lie_stem: bool,
    pub lie_stem_via_kernel_map: bool,
    pub lie_stem_via_liezation: bool,
    pub kernel: Rows,
    pub g_ann: Rows,
    pub intersection: Rows,
}

#[derive(Debug, Clone, Serialize)]
pub struct StemCoverJson {
    pub via_theta: bool,
    pub via_definition: bool,
    pub degree_used: usize,
    pub stable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyBody {
    pub source: AlgebraSummary,
    pub target: AlgebraSummary,
    pub map: Rows,
    pub classification: ClassificationJson,
    pub five_term: SequenceJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub six_term: Option<SequenceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stem_cover: Option<StemCoverJson>,
}

pub fn classify_report(e: &Extension, inputs: &[&str], d: usize, sweep: bool) -> Result<ReportDocument, ReportError> {
    let c = classify(e);
    let top = if sweep { d + 3 } else { d };
    let mut used = d;
    let mut h = extension_homology(e, used)?;
    while !h.stable() && used < top {
        used += 1;
        h = extension_homology(e, used)?;
    }
    let five = five_term_from(&h);
    let six = if c.lie_central { Some(six_term_from(&h)?) } else { None };
    let stem = if c.lie_central {
        let v = is_lie_stem_cover(e, used)?;
        Some(StemCoverJson { via_theta: v.via_theta, via_definition: v.via_definition, degree_used: v.degree_used, stable: v.stable })
    } else {
        None
    };
    let body = ClassifyBody {
        source: e.source().into(),
        target: e.target().into(),
        map: matrix_rows(e.map().matrix()),
        classification: ClassificationJson {
            central: c.central,
            lie_central: c.lie_central,
            lie_central_via_center: c.lie_central_via_center,
            lie_trivial: c.lie_trivial,
            lie_trivial_via_ann_iso: c.lie_trivial_via_ann_iso,
            lie_trivial_via_exactness: c.lie_trivial_via_exactness,
            lie_stem: c.lie_stem,
            lie_stem_via_kernel_map: c.lie_stem_via_kernel_map,
            lie_stem_via_liezation: c.lie_stem_via_liezation,
            kernel: subspace_rows(&c.kernel),
            g_ann: subspace_rows(&c.g_ann),
            intersection: subspace_rows(&c.intersection),
        },
        five_term: (&five).into(),
        six_term: six.as_ref().map(Into::into),
        stem_cover: stem,
    };
    let provenance = Provenance { input_sha256: input_hash(inputs.iter().copied()), degree: Some(used), sweep };
    Ok(ReportDocument::new("classify-ext", provenance, body))
}
