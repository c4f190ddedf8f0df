//! The executable check list run by `verify-paper`: exact values, property
//! suites and cross-validations over the fixture corpus.
//!
//! Checks are grouped by acceptance criterion (1 to 10). A failing check is
//! reported, never skipped; the detail string says what was computed.

use crate::algebra::{Hom, Ideal, LeibnizAlgebra};
use crate::centers::{is_unicentral, precise_center, smallest_capable_quotient};
use crate::exactla::{int, Matrix, Subspace, Vector};
use crate::extensions::{classify, stem_quotient_extension, Extension};
use crate::format::{Corpus, FormatError};
use crate::freeleib::Generators;
use crate::homology::{extension_homology, five_term_from, hopf_hl2, hopf_hl2_with, is_lie_stem_cover, six_term_from, ExtensionHomology, HomologyError, HopfHomology};
use crate::invariants::{
    center, is_lie_nilpotent, is_lie_solvable, is_nilpotent, is_solvable, lie_center, lie_centralizer,
    lie_commutator, lie_lower_central_series, lie_upper_central_series, right_center,
};
use crate::nilcheck::{check_isomorphism_criterion, check_upper_central, vanishing_series_criterion, CriterionReport};
use crate::report::{Provenance, ReportDocument};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::Path;

/// How far past the requested degree stabilization sweeps may go.
pub const SWEEP_SPAN: usize = 3;
const SEED: u64 = 0x6c65_6962;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionSummary {
    pub criterion: u8,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub degree: usize,
    pub input_sha256: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn summary(&self) -> Vec<CriterionSummary> {
        let mut by: BTreeMap<u8, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = by.entry(c.criterion).or_default();
            if c.passed {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        by.into_iter().map(|(criterion, (passed, failed))| CriterionSummary { criterion, passed, failed }).collect()
    }

    pub fn criterion_passed(&self, criterion: u8) -> bool {
        self.checks.iter().filter(|c| c.criterion == criterion).all(|c| c.passed)
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{} [{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.criterion, c.id, c.detail))
            .collect()
    }

    pub fn document(&self) -> ReportDocument {
        #[derive(Serialize)]
        struct Body<'a> {
            checks: &'a [Check],
            summary: Vec<CriterionSummary>,
            all_passed: bool,
        }
        let provenance = Provenance { input_sha256: self.input_sha256.clone(), degree: Some(self.degree), sweep: true };
        ReportDocument::new("verify-paper", provenance, Body { checks: &self.checks, summary: self.summary(), all_passed: self.all_passed() })
    }
}

struct Ctx<'a> {
    corpus: &'a Corpus,
    d: usize,
    checks: Vec<Check>,
}

impl Ctx<'_> {
    fn push(&mut self, criterion: u8, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { criterion, id: id.into(), passed, detail: detail.into() });
    }

    fn alg(&mut self, criterion: u8, name: &str) -> Option<LeibnizAlgebra> {
        let found = self.corpus.algebras.get(name).cloned();
        if found.is_none() {
            self.push(criterion, format!("fixture {name}"), false, "fixture missing or invalid");
        }
        found
    }

    fn ext(&mut self, criterion: u8, name: &str) -> Option<Extension> {
        let found = self.corpus.extension(name).cloned();
        if found.is_none() {
            self.push(criterion, format!("fixture {name}"), false, "fixture missing or invalid");
        }
        found
    }
}

fn span_of(q: &LeibnizAlgebra, labels: &[&str]) -> Subspace {
    Subspace::canonicalize(q.dim(), labels.iter().filter_map(|l| q.label_index(l).ok()).map(|i| q.basis_vector(i)))
        .expect("basis width")
}

fn show(q: &LeibnizAlgebra, s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|v| q.format_vector(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn show_class(c: Option<usize>) -> String {
    c.map_or("none".to_string(), |k| k.to_string())
}

/// Hopf homology at the first stable degree in `d..=d+SWEEP_SPAN`, or the last one tried.
pub fn stabilized(gens: &Generators, d: usize) -> Result<HopfHomology, HomologyError> {
    let mut h = hopf_hl2_with(gens, d)?;
    let mut used = d;
    while !h.stable && used < d + SWEEP_SPAN {
        used += 1;
        h = hopf_hl2_with(gens, used)?;
    }
    Ok(h)
}

/// Extension homology at the first stable degree, as for [`stabilized`].
pub fn stabilized_extension(e: &Extension, d: usize) -> Result<ExtensionHomology, HomologyError> {
    let mut h = extension_homology(e, d)?;
    let mut used = d;
    while !h.stable() && used < d + SWEEP_SPAN {
        used += 1;
        h = extension_homology(e, used)?;
    }
    Ok(h)
}

/// Ideals with a name, used as test inputs.
pub fn named_ideals(q: &LeibnizAlgebra) -> Vec<(String, Subspace)> {
    let n = q.dim();
    let mut out = vec![
        ("0".to_string(), Subspace::zero(n)),
        ("Q".to_string(), Subspace::full(n)),
        ("ann".to_string(), q.ann_ideal().into_space()),
        ("Z".to_string(), center(q).into_space()),
        ("Z^r".to_string(), right_center(q).into_space()),
        ("Z_Lie".to_string(), lie_center(q).into_space()),
    ];
    for (i, t) in lie_lower_central_series(q).terms.iter().enumerate().skip(1) {
        out.push((format!("Q^[{}]", i + 1), t.clone()));
    }
    for (i, t) in lie_upper_central_series(q).terms.iter().enumerate().skip(2) {
        out.push((format!("zeta_{i}"), t.clone()));
    }
    out
}

/// Ideal closures of seeded random vectors.
pub fn random_ideals(q: &LeibnizAlgebra, count: usize, seed: u64) -> Vec<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=2);
            let vs: Vec<Vector> = (0..k).map(|_| (0..q.dim()).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
            q.ideal_closure(&Subspace::canonicalize(q.dim(), vs).expect("width"))
        })
        .collect()
}

/// A seeded invertible matrix: a product of unit lower and upper triangular factors.
pub fn random_invertible(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, int(rng.gen_range(-2..=2)));
            upper.set(j, i, int(rng.gen_range(-2..=2)));
        }
    }
    lower.mul(&upper)
}

fn criterion_1(cx: &mut Ctx) {
    if let Some(g) = cx.alg(1, "ex_3_2_g") {
        let ann = g.ann_ideal().into_space();
        cx.push(1, "ex_3_2_g ann = span{a1}", ann == span_of(&g, &["a1"]), show(&g, &ann));
        let z = center(&g).into_space();
        cx.push(1, "ex_3_2_g Z = span{a2}", z == span_of(&g, &["a2"]), show(&g, &z));
        let zl = lie_center(&g).into_space();
        cx.push(1, "ex_3_2_g Z_Lie = span{a1,a2}", zl == span_of(&g, &["a1", "a2"]), show(&g, &zl));
    }
    if let Some(q) = cx.alg(1, "ex_3_2_q") {
        let ann = q.ann_ideal().into_space();
        cx.push(1, "ex_3_2_q ann = span{e1}", ann == span_of(&q, &["e1"]), show(&q, &ann));
    }
    if let Some(e) = cx.ext(1, "ex_3_2") {
        let r = classify(&e);
        let ok = r.lie_trivial && r.lie_trivial_via_ann_iso && r.lie_trivial_via_exactness;
        cx.push(1, "ex_3_2 is Lie-trivial", ok, format!("intersection {}", show(e.source(), &r.intersection)));
    }
    if let Some(e) = cx.ext(1, "remark_3") {
        let r = classify(&e);
        let detail = format!("kernel {}, [N,G]_Lie zero: {}, N in Z_Lie(G): {}", show(e.source(), &r.kernel), r.lie_central, r.lie_central_via_center);
        cx.push(1, "remark_3 is Lie-central", r.lie_central && r.lie_central_via_center, detail);
        cx.push(1, "remark_3 is not central", !r.central, format!("central: {}", r.central));
    }
    if let Some(e) = cx.ext(1, "ex_3_14_a") {
        let r = classify(&e);
        let ok = r.lie_stem && r.lie_stem_via_kernel_map && r.lie_stem_via_liezation;
        cx.push(1, "ex_3_14_a is Lie-stem", ok, format!("kernel {}, G^ann {}", show(e.source(), &r.kernel), show(e.source(), &r.g_ann)));
    }
}

type ClassFn = fn(&LeibnizAlgebra) -> Option<usize>;

fn criterion_2(cx: &mut Ctx) {
    let cases: [(&str, &str, ClassFn, Option<usize>); 7] = [
        ("ex_5_5_c", "Lie-solvable class", is_lie_solvable, Some(2)),
        ("ex_5_5_c", "solvable class", is_solvable, Some(2)),
        ("ex_5_5_d", "Lie-solvable class", is_lie_solvable, Some(2)),
        ("ex_5_5_d", "solvable class", is_solvable, None),
        ("ex_5_15_c", "Lie-nilpotent class", is_lie_nilpotent, Some(2)),
        ("ex_5_15_e", "Lie-nilpotent class", is_lie_nilpotent, Some(2)),
        ("ex_5_15_e", "nilpotent class", is_nilpotent, None),
    ];
    for (name, what, f, expected) in cases {
        if let Some(q) = cx.alg(2, name) {
            let got = f(&q);
            cx.push(2, format!("{name} {what} = {}", show_class(expected)), got == expected, format!("computed {}", show_class(got)));
        }
    }
    if let Some(q) = cx.alg(2, "ex_5_5_c") {
        let got = is_lie_nilpotent(&q);
        cx.push(2, "ex_5_5_c is not Lie-nilpotent", got.is_none(), format!("computed {}", show_class(got)));
    }
}

fn centralizer_commutator_properties(q: &LeibnizAlgebra, m: &Ideal, n: &Ideal) -> Result<(), String> {
    let c = lie_centralizer(q, m, n);
    if Ideal::new(q, c.space().clone()).is_err() {
        return Err("centralizer is not two-sided".into());
    }
    let k = lie_commutator(q, m, n);
    if Ideal::new(q, k.space().clone()).is_err() {
        return Err("commutator is not two-sided".into());
    }
    if !center(q).space().is_subspace_of(c.space()) {
        return Err("Z(Q) not inside the centralizer".into());
    }
    if !k.space().is_subspace_of(right_center(q).space()) {
        return Err("commutator not inside Z^r(Q)".into());
    }
    Ok(())
}

fn criterion_3(cx: &mut Ctx) {
    let mut randomized = 0;
    for (idx, (name, q)) in cx.corpus.algebras.clone().iter().enumerate() {
        let mut ideals = Vec::new();
        let mut bad = Vec::new();
        for (label, s) in named_ideals(q) {
            match Ideal::new(q, s) {
                Ok(i) => ideals.push(i),
                Err(_) => bad.push(label),
            }
        }
        let fixed = ideals.len();
        let random = random_ideals(q, 6, SEED + idx as u64);
        ideals.extend(random);
        let mut failures = Vec::new();
        let mut pairs = 0;
        for (a, m) in ideals.iter().enumerate() {
            for (b, n) in ideals.iter().enumerate() {
                pairs += 1;
                if a >= fixed || b >= fixed {
                    randomized += 1;
                }
                if let Err(e) = centralizer_commutator_properties(q, m, n) {
                    failures.push(format!("pair ({a},{b}): {e}"));
                }
            }
        }
        let passed = failures.is_empty() && bad.is_empty();
        let detail = if passed {
            format!("{pairs} ideal pairs")
        } else {
            format!("non-ideals {:?}; {}", bad, failures.join("; "))
        };
        cx.push(3, format!("{name} centralizer and commutator properties"), passed, detail);
    }
    cx.push(3, "at least 50 randomized ideal pairs", randomized >= 50, format!("{randomized} pairs"));
}

fn criterion_4(cx: &mut Ctx) {
    for n in 1..=4 {
        let name = format!("abelian_{n}");
        if let Some(q) = cx.alg(4, &name) {
            let expected = n * (n + 1) / 2;
            let detail = match (hopf_hl2(&q, 3), hopf_hl2(&q, 4)) {
                (Ok(a), Ok(b)) => {
                    let ok = a.dim() == expected && b.dim() == expected && b.stable;
                    cx.push(4, format!("{name} HL2 = {expected}"), ok, format!("d=3: {}, d=4: {} (stable {})", a.dim(), b.dim(), b.stable));
                    continue;
                }
                (Err(e), _) | (_, Err(e)) => e.to_string(),
            };
            cx.push(4, format!("{name} HL2 = {expected}"), false, detail);
        }
    }
}

fn generating_sets(q: &LeibnizAlgebra, seed: u64) -> Vec<(&'static str, Vec<Vector>)> {
    let n = q.dim();
    let basis: Vec<Vector> = (0..n).map(|i| q.basis_vector(i)).collect();
    let changed = random_invertible(n, seed).columns();
    let mut redundant = basis.clone();
    redundant.push((0..n).map(|_| int(1)).collect());
    vec![("basis", basis), ("random basis", changed), ("basis plus sum", redundant)]
}

fn criterion_5(cx: &mut Ctx) {
    for (idx, (name, q)) in cx.corpus.algebras.clone().iter().enumerate() {
        let mut dims = Vec::new();
        let mut failure = None;
        for (label, gens) in generating_sets(q, SEED ^ idx as u64) {
            match Generators::new(q, gens).map_err(HomologyError::from).and_then(|g| stabilized(&g, cx.d)) {
                Ok(h) => dims.push((label, h.dim(), h.degree_used, h.stable)),
                Err(e) => failure = Some(format!("{label}: {e}")),
            }
        }
        let agree = dims.windows(2).all(|w| w[0].1 == w[1].1) && dims.iter().all(|x| x.3);
        let detail = failure.clone().unwrap_or_else(|| {
            dims.iter().map(|(l, k, d, s)| format!("{l}: {k} at d={d}{}", if *s { "" } else { " (unstable)" })).collect::<Vec<_>>().join(", ")
        });
        cx.push(5, format!("{name} HL2 independent of generators"), failure.is_none() && agree, detail);
    }
}

/// Corpus fixtures plus extensions derived from every corpus algebra.
pub fn derived_extensions(corpus: &Corpus, d: usize) -> Vec<(String, Extension)> {
    let mut out: Vec<(String, Extension)> = corpus.extensions.iter().map(|(k, v)| (k.clone(), v.extension.clone())).collect();
    for (name, q) in &corpus.algebras {
        out.push((format!("{name} identity"), Extension::identity(q)));
        let (_, eta) = q.liezation();
        if let Ok(e) = Extension::new(eta) {
            out.push((format!("{name} -> Liezation"), e));
        }
        if let Ok(e) = Extension::quotient(q, &lie_center(q)) {
            out.push((format!("{name} -> Q/Z_Lie"), e));
        }
        let full = Ideal::full(q);
        if let Ok(e) = Extension::quotient(q, &lie_commutator(q, &full, &full)) {
            out.push((format!("{name} -> Q/[Q,Q]_Lie"), e));
        }
        if let Ok(e) = stem_quotient_extension(q, d) {
            out.push((format!("{name} stem cover"), e));
        }
    }
    out
}

fn sequence_detail(r: &crate::homology::SequenceReport) -> String {
    let nodes: Vec<String> = r.nodes.iter().map(|(l, k)| format!("{l}:{k}")).collect();
    let exact: Vec<&str> = r.exact_at.iter().map(|e| match e {
        None => "-",
        Some(true) => "y",
        Some(false) => "n",
    }).collect();
    format!("{} exact [{}] compositions zero {} d={} stable {} defined {}", nodes.join(" -> "), exact.join(""), r.compositions_zero, r.degree_used, r.stable, r.well_defined)
}

fn criterion_6(cx: &mut Ctx) {
    let exts = derived_extensions(cx.corpus, cx.d);
    cx.push(6, "at least 10 extensions", exts.len() >= 10, format!("{} extensions", exts.len()));
    for (name, e) in exts {
        let h = match stabilized_extension(&e, cx.d) {
            Ok(h) => h,
            Err(err) => {
                cx.push(6, format!("{name} five-term"), false, err.to_string());
                continue;
            }
        };
        let five = five_term_from(&h);
        let ok = five.is_exact() && five.compositions_zero && five.well_defined && five.stable;
        cx.push(6, format!("{name} five-term"), ok, sequence_detail(&five));
        if classify(&e).lie_central {
            match six_term_from(&h) {
                Ok(six) => {
                    let ok = six.is_exact() && six.compositions_zero && six.well_defined && six.stable;
                    cx.push(6, format!("{name} six-term"), ok, sequence_detail(&six));
                }
                Err(err) => cx.push(6, format!("{name} six-term"), false, err.to_string()),
            }
        }
    }
}

fn criterion_7(cx: &mut Ctx) {
    for (name, q) in cx.corpus.algebras.clone() {
        let id = format!("{name} stem cover has bijective theta*");
        let e = match stem_quotient_extension(&q, cx.d) {
            Ok(e) => e,
            Err(err) => {
                cx.push(7, id, false, err.to_string());
                continue;
            }
        };
        match is_lie_stem_cover(&e, cx.d) {
            Ok(v) => {
                let ok = v.via_theta && v.via_definition && v.stable;
                let detail = format!("cover dim {}, kernel dim {}, via theta {}, via definition {}, stable {}", e.source().dim(), e.kernel().dim(), v.via_theta, v.via_definition, v.stable);
                cx.push(7, id, ok, detail);
            }
            Err(err) => cx.push(7, id, false, err.to_string()),
        }
    }
}

fn criterion_8(cx: &mut Ctx) {
    let mut z_stars: BTreeMap<String, Subspace> = BTreeMap::new();
    for (name, q) in cx.corpus.algebras.clone() {
        let r = match precise_center(&q, cx.d) {
            Ok(r) => r,
            Err(err) => {
                cx.push(8, format!("{name} precise center"), false, err.to_string());
                continue;
            }
        };
        z_stars.insert(name.clone(), r.z_star.space().clone());
        let detail = format!(
            "z_star {} via {:?}, cover image {}, stable {}",
            show(&q, r.z_star.space()),
            r.cover_route,
            r.z_star_from_cover.as_ref().map_or("none".to_string(), |s| show(&q, s)),
            r.stable
        );
        cx.push(8, format!("{name} precise center routes agree"), r.routes_agree == Some(true) && r.stable, detail);
        let witness_ok = r.capable_witness.is_none_or(|w| w == r.capable);
        cx.push(
            8,
            format!("{name} capable iff z_star = 0"),
            r.capable == r.z_star.space().is_zero() && witness_ok,
            format!("capable {}, cover witness {:?}", r.capable, r.capable_witness),
        );
        match is_unicentral(&q, cx.d) {
            Ok(u) => cx.push(
                8,
                format!("{name} unicentral criteria agree"),
                u.agree() && u.kernel_identity != Some(false) && u.via_c_map == r.unicentral,
                format!("C zero {}, HL2 injective {}, z_star = Z_Lie {}", u.via_c_map, u.via_injectivity, r.unicentral),
            ),
            Err(err) => cx.push(8, format!("{name} unicentral criteria agree"), false, err.to_string()),
        }
        match smallest_capable_quotient(&q, cx.d).map_err(|e| e.to_string()).and_then(|(quot, _)| precise_center(&quot, cx.d).map_err(|e| e.to_string())) {
            Ok(qr) => cx.push(8, format!("{name} Q/z_star is capable"), qr.capable, format!("quotient z_star dim {}", qr.z_star.dim())),
            Err(err) => cx.push(8, format!("{name} Q/z_star is capable"), false, err),
        }
    }
    // monotonicity along corpus quotient maps
    let mut maps: Vec<(String, Hom)> = cx.corpus.extensions.iter().map(|(k, v)| (k.clone(), v.extension.map().clone())).collect();
    for (name, q) in &cx.corpus.algebras {
        maps.push((format!("{name} -> Liezation"), q.liezation().1));
        if let Ok((_, p)) = q.quotient(&lie_center(q)) {
            maps.push((format!("{name} -> Q/Z_Lie"), p));
        }
        if let Some(z) = z_stars.get(name) {
            if let Ok(i) = Ideal::new(q, z.clone()) {
                if let Ok((_, p)) = q.quotient(&i) {
                    maps.push((format!("{name} -> Q/z_star"), p));
                }
            }
        }
    }
    for (name, pi) in maps {
        let id = format!("{name} maps z_star into z_star");
        let zg = z_stars.get(pi.source().name()).cloned().map_or_else(|| precise_center(pi.source(), cx.d).map(|r| r.z_star.into_space()), Ok);
        let zq = precise_center(pi.target(), cx.d).map(|r| r.z_star.into_space());
        match (zg, zq) {
            (Ok(zg), Ok(zq)) => {
                let img = zg.image_under(pi.matrix());
                cx.push(8, id, img.is_subspace_of(&zq), format!("image dim {}, target z_star dim {}", img.dim(), zq.dim()));
            }
            (Err(e), _) | (_, Err(e)) => cx.push(8, id, false, e.to_string()),
        }
    }
}

fn certify(r: &CriterionReport, expect_iso: bool) -> (bool, String) {
    let all = r.conclusion.as_ref().is_some_and(|v| v.iter().all(|&b| b));
    let ok = r.conditions.all() && all && (!expect_iso || r.phi_iso == Some(true)) && r.stable && r.well_defined;
    let detail = format!(
        "conditions {:?}, phi_k bijective {:?}, phi iso {:?}, d={} stable {}",
        (r.conditions.hl1_iso, r.conditions.hl2_epi, r.conditions.quotient_iso),
        r.conclusion,
        r.phi_iso,
        r.degree_used,
        r.stable
    );
    (ok, detail)
}

fn criterion_9(cx: &mut Ctx) {
    let d = cx.d;
    let k_max = 4;
    // instances satisfying every hypothesis
    let mut positive: Vec<(String, Result<CriterionReport, String>, bool)> = Vec::new();
    if let Some(q) = cx.alg(9, "ex_5_15_c") {
        let full = Ideal::full(&q);
        positive.push(("identity on ex_5_15_c, M = N = Q".into(), check_isomorphism_criterion(&Hom::identity(&q), &full, &full, k_max, d).map_err(|e| e.to_string()), true));
        match q.change_basis(&random_invertible(q.dim(), SEED + 101)) {
            Ok((g, phi)) => positive.push((
                "basis change onto ex_5_15_c, M = G, N = Q".into(),
                check_isomorphism_criterion(&phi, &Ideal::full(&g), &full, k_max, d).map_err(|e| e.to_string()),
                true,
            )),
            Err(e) => positive.push(("basis change onto ex_5_15_c".into(), Err(e.to_string()), true)),
        }
    }
    if let Some(q) = cx.alg(9, "ex_5_15_e") {
        match q.change_basis(&random_invertible(q.dim(), SEED + 202)) {
            Ok((g, phi)) => {
                positive.push((
                    "basis change onto ex_5_15_e, M = G, N = Q".into(),
                    check_isomorphism_criterion(&phi, &Ideal::full(&g), &Ideal::full(&q), k_max, d).map_err(|e| e.to_string()),
                    true,
                ));
                positive.push((
                    "basis change onto ex_5_15_e, M = zeta_1(G), N = zeta_1(Q)".into(),
                    check_upper_central(&phi, 1, k_max, d).map_err(|e| e.to_string()),
                    true,
                ));
            }
            Err(e) => positive.push(("basis change onto ex_5_15_e".into(), Err(e.to_string()), true)),
        }
    }
    if let Some(q) = cx.alg(9, "ex_5_5_c") {
        let z = lie_center(&q);
        positive.push(("identity on ex_5_5_c, M = N = Z_Lie".into(), check_isomorphism_criterion(&Hom::identity(&q), &z, &z, k_max, d).map_err(|e| e.to_string()), false));
    }
    for (id, r, expect_iso) in positive {
        match r {
            Ok(r) => {
                let (ok, detail) = certify(&r, expect_iso);
                cx.push(9, format!("certified: {id}"), ok, detail);
            }
            Err(e) => cx.push(9, format!("certified: {id}"), false, e),
        }
    }

    // instances violating exactly one hypothesis
    let mut negative: Vec<(String, usize, Result<CriterionReport, String>)> = Vec::new();
    if let (Some(a2), Some(a1)) = (cx.alg(9, "abelian_2"), cx.alg(9, "abelian_1")) {
        let images = vec![a1.basis_vector(0), crate::exactla::zero_vector(1)];
        match Hom::from_images(a2.clone(), a1.clone(), &images) {
            Ok(p) => negative.push(("projection abelian_2 -> abelian_1".into(), 0, check_isomorphism_criterion(&p, &Ideal::full(&a2), &Ideal::full(&a1), k_max, d).map_err(|e| e.to_string()))),
            Err(e) => negative.push(("projection abelian_2 -> abelian_1".into(), 0, Err(e.to_string()))),
        }
    }
    if let Some(q) = cx.alg(9, "ex_5_15_c") {
        let (l, eta) = q.liezation();
        negative.push(("ex_5_15_c -> Liezation".into(), 1, check_isomorphism_criterion(&eta, &Ideal::full(&q), &Ideal::full(&l), k_max, d).map_err(|e| e.to_string())));
    }
    if let Some(q) = cx.alg(9, "ex_5_15_e") {
        negative.push(("identity on ex_5_15_e, M = 0, N = Q".into(), 2, check_isomorphism_criterion(&Hom::identity(&q), &Ideal::zero(&q), &Ideal::full(&q), k_max, d).map_err(|e| e.to_string())));
    }
    if let Some(q) = cx.alg(9, "ex_3_2_g") {
        negative.push(("identity on ex_3_2_g, M = Z_Lie, N = Q".into(), 2, check_isomorphism_criterion(&Hom::identity(&q), &lie_center(&q), &Ideal::full(&q), k_max, d).map_err(|e| e.to_string())));
    }
    for (id, failing, r) in negative {
        match r {
            Ok(r) => {
                let c = [r.conditions.hl1_iso, r.conditions.hl2_epi, r.conditions.quotient_iso];
                let exactly_one = c.iter().filter(|&&b| !b).count() == 1 && !c[failing];
                let ok = exactly_one && r.conclusion.is_none();
                cx.push(9, format!("no conclusion: {id}"), ok, format!("conditions {:?}, conclusion {:?}", c, r.conclusion));
            }
            Err(e) => cx.push(9, format!("no conclusion: {id}"), false, e),
        }
    }

    for (name, q) in cx.corpus.algebras.clone() {
        let mut failures = Vec::new();
        let mut count = 0;
        for (label, s) in named_ideals(&q) {
            if let Ok(n) = Ideal::new(&q, s) {
                count += 1;
                let v = vanishing_series_criterion(&q, &n);
                if !v.agree() {
                    failures.push(format!("{label}: vanishes {} upper index {:?}", v.series_vanishes, v.upper_index));
                }
            }
        }
        let detail = if failures.is_empty() { format!("{count} ideals") } else { failures.join("; ") };
        cx.push(9, format!("{name} vanishing series criterion"), failures.is_empty(), detail);
    }
}

fn run_checks(corpus: &Corpus, broken: &[(String, String)], d: usize) -> Vec<Check> {
    let mut cx = Ctx { corpus, d, checks: Vec::new() };
    for (file, err) in broken {
        cx.push(0, format!("fixture {file} loads"), false, err.clone());
    }
    criterion_1(&mut cx);
    criterion_2(&mut cx);
    criterion_3(&mut cx);
    criterion_4(&mut cx);
    criterion_5(&mut cx);
    criterion_6(&mut cx);
    criterion_7(&mut cx);
    criterion_8(&mut cx);
    criterion_9(&mut cx);
    cx.checks
}

/// Runs every check on the corpus at `root`. Criterion 10 reruns the whole list
/// and compares the serialized results byte for byte.
pub fn verify_paper(root: &Path, d: usize) -> Result<VerifyReport, FormatError> {
    let (corpus, broken) = Corpus::load_lenient(root)?;
    let first = run_checks(&corpus, &broken, d);
    let second = run_checks(&corpus, &broken, d);
    let a = serde_json::to_string(&first).expect("checks serialize");
    let b = serde_json::to_string(&second).expect("checks serialize");
    let mut checks = first;
    checks.push(Check {
        criterion: 10,
        id: "rerun produces identical results".into(),
        passed: a == b,
        detail: format!("{} bytes", a.len()),
    });
    Ok(VerifyReport { degree: d, input_sha256: corpus.input_hash(), checks })
}
