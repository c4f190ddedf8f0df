//! JSON file formats for algebras and extensions, and the fixture corpus loader.
//!
//! Indices are 1-based; coefficients are rational strings such as `"-3/2"`.
//! Omitted bracket pairs and omitted images are zero.

use crate::algebra::{AlgebraError, Hom, LeibnizAlgebra, Violation};
use crate::exactla::{format_scalar, parse_scalar, zero_vector, Vector};
use crate::extensions::{Extension, ExtensionError};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field} index {index} is outside 1..={dim}")]
    Index { field: &'static str, index: usize, dim: usize },
    #[error("dim is {dim} but {labels} basis labels are given")]
    BasisLength { dim: usize, labels: usize },
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error("bracket [{left},{right}] is given twice")]
    DuplicateBracket { left: usize, right: usize },
    #[error("image of basis element {0} is given twice")]
    DuplicateImage(usize),
    #[error("Leibniz identity fails at {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    NotLeibniz(Vec<Violation>),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(AlgebraError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error("unknown algebra {0:?} referenced by an extension")]
    UnknownAlgebra(String),
    #[error("no fixtures in {0}")]
    EmptyCorpus(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub value: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageEntry {
    pub source: usize,
    pub value: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    pub name: String,
    /// Name of the source algebra in the corpus.
    pub source: String,
    /// Name of the target algebra in the corpus.
    pub target: String,
    #[serde(default)]
    pub images: Vec<ImageEntry>,
}

fn check_index(field: &'static str, index: usize, dim: usize) -> Result<usize, FormatError> {
    if index == 0 || index > dim {
        return Err(FormatError::Index { field, index, dim });
    }
    Ok(index - 1)
}

fn parse_terms(terms: &[Term], dim: usize) -> Result<Vector, FormatError> {
    let mut v = zero_vector(dim);
    for t in terms {
        let k = check_index("basis", t.basis, dim)?;
        let c = parse_scalar(&t.coeff).map_err(|_| FormatError::Coefficient(t.coeff.clone()))?;
        v[k] += c;
    }
    Ok(v)
}

fn terms_of(v: &[crate::exactla::Scalar]) -> Vec<Term> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| Term { basis: k + 1, coeff: format_scalar(c) })
        .collect()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds the algebra without checking the Leibniz identity.
    pub fn to_algebra_unchecked(&self) -> Result<LeibnizAlgebra, FormatError> {
        if self.basis.len() != self.dim {
            return Err(FormatError::BasisLength { dim: self.dim, labels: self.basis.len() });
        }
        let mut q = LeibnizAlgebra::with_labels(self.name.clone(), self.basis.clone());
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.brackets {
            let i = check_index("left", b.left, self.dim)?;
            let j = check_index("right", b.right, self.dim)?;
            if !seen.insert((i, j)) {
                return Err(FormatError::DuplicateBracket { left: b.left, right: b.right });
            }
            let v = parse_terms(&b.value, self.dim)?;
            q.set_bracket(i, j, &v).expect("indices checked");
        }
        Ok(q)
    }

    pub fn to_algebra(&self) -> Result<LeibnizAlgebra, FormatError> {
        let q = self.to_algebra_unchecked()?;
        let violations = q.validate();
        if !violations.is_empty() {
            return Err(FormatError::NotLeibniz(violations));
        }
        Ok(q)
    }

    /// Canonical form: brackets ordered by (left, right), zero entries dropped.
    pub fn from_algebra(q: &LeibnizAlgebra) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..q.dim() {
            for j in 0..q.dim() {
                let v = q.bracket_basis(i, j);
                let value = terms_of(&v);
                if !value.is_empty() {
                    brackets.push(BracketEntry { left: i + 1, right: j + 1, value });
                }
            }
        }
        AlgebraFile { name: q.name().to_string(), dim: q.dim(), basis: q.labels().to_vec(), brackets }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl ExtensionFile {
    pub fn parse(text: &str) -> Result<ExtensionFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Images of the basis of `g` in `q`, with omitted entries zero.
    pub fn images_in(&self, g: &LeibnizAlgebra, q: &LeibnizAlgebra) -> Result<Vec<Vector>, FormatError> {
        let mut images = vec![None; g.dim()];
        for e in &self.images {
            let k = check_index("source", e.source, g.dim())?;
            if images[k].is_some() {
                return Err(FormatError::DuplicateImage(e.source));
            }
            images[k] = Some(parse_terms(&e.value, q.dim())?);
        }
        Ok(images.into_iter().map(|v| v.unwrap_or_else(|| zero_vector(q.dim()))).collect())
    }

    pub fn to_hom(&self, g: &LeibnizAlgebra, q: &LeibnizAlgebra) -> Result<Hom, FormatError> {
        let images = self.images_in(g, q)?;
        Hom::from_images(g.clone(), q.clone(), &images).map_err(FormatError::NotHomomorphism)
    }

    pub fn to_extension(&self, g: &LeibnizAlgebra, q: &LeibnizAlgebra) -> Result<Extension, FormatError> {
        Ok(Extension::new(self.to_hom(g, q)?)?)
    }

    pub fn from_hom(name: &str, f: &Hom) -> ExtensionFile {
        let images = (0..f.source().dim())
            .map(|k| ImageEntry { source: k + 1, value: terms_of(&f.matrix().column(k)) })
            .filter(|e| !e.value.is_empty())
            .collect();
        ExtensionFile {
            name: name.to_string(),
            source: f.source().name().to_string(),
            target: f.target().name().to_string(),
            images,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

pub fn read_text(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn load_algebra(path: &Path) -> Result<LeibnizAlgebra, FormatError> {
    AlgebraFile::parse(&read_text(path)?)?.to_algebra()
}

/// A named extension from the corpus.
#[derive(Debug, Clone)]
pub struct NamedExtension {
    pub file: ExtensionFile,
    pub extension: Extension,
}

/// Fixture algebras and extensions, keyed by name and kept in sorted order.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub root: PathBuf,
    pub algebras: BTreeMap<String, LeibnizAlgebra>,
    /// Raw file text by algebra name, for input hashing.
    pub sources: BTreeMap<String, String>,
    pub extensions: BTreeMap<String, NamedExtension>,
}

fn json_files(dir: &Path) -> Result<Vec<PathBuf>, FormatError> {
    if !dir.is_dir() {
        return Ok(Vec::new());
    }
    let entries = std::fs::read_dir(dir).map_err(|source| FormatError::Io { path: dir.display().to_string(), source })?;
    let mut out: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    out.sort();
    Ok(out)
}

impl Corpus {
    /// Reads `algebras/*.json` and `extensions/*.json` under `root`.
    pub fn load(root: &Path) -> Result<Corpus, FormatError> {
        let mut corpus = Corpus { root: root.to_path_buf(), ..Corpus::default() };
        for path in json_files(&root.join("algebras"))? {
            let text = read_text(&path)?;
            let q = AlgebraFile::parse(&text)?.to_algebra()?;
            corpus.sources.insert(q.name().to_string(), text);
            corpus.algebras.insert(q.name().to_string(), q);
        }
        for path in json_files(&root.join("extensions"))? {
            let text = read_text(&path)?;
            let file = ExtensionFile::parse(&text)?;
            let g = corpus.algebra(&file.source)?;
            let q = corpus.algebra(&file.target)?;
            let extension = file.to_extension(g, q)?;
            corpus.sources.insert(format!("extension:{}", file.name), text);
            corpus.extensions.insert(file.name.clone(), NamedExtension { file, extension });
        }
        if corpus.algebras.is_empty() {
            return Err(FormatError::EmptyCorpus(root.display().to_string()));
        }
        Ok(corpus)
    }

    /// Like [`Corpus::load`], but a fixture that fails to parse or validate is
    /// skipped and reported as `(file name, error)` instead of aborting.
    pub fn load_lenient(root: &Path) -> Result<(Corpus, Vec<(String, String)>), FormatError> {
        let mut corpus = Corpus { root: root.to_path_buf(), ..Corpus::default() };
        let mut broken = Vec::new();
        let file_name = |p: &Path| p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let algebra_files = json_files(&root.join("algebras"))?;
        if algebra_files.is_empty() {
            return Err(FormatError::EmptyCorpus(root.display().to_string()));
        }
        for path in algebra_files {
            let loaded = read_text(&path).and_then(|text| Ok((AlgebraFile::parse(&text)?.to_algebra()?, text)));
            match loaded {
                Ok((q, text)) => {
                    corpus.sources.insert(q.name().to_string(), text);
                    corpus.algebras.insert(q.name().to_string(), q);
                }
                Err(e) => broken.push((file_name(&path), e.to_string())),
            }
        }
        for path in json_files(&root.join("extensions"))? {
            let loaded = read_text(&path).and_then(|text| {
                let file = ExtensionFile::parse(&text)?;
                let extension = file.to_extension(corpus.algebra(&file.source)?, corpus.algebra(&file.target)?)?;
                Ok((file, extension, text))
            });
            match loaded {
                Ok((file, extension, text)) => {
                    corpus.sources.insert(format!("extension:{}", file.name), text);
                    corpus.extensions.insert(file.name.clone(), NamedExtension { file, extension });
                }
                Err(e) => broken.push((file_name(&path), e.to_string())),
            }
        }
        Ok((corpus, broken))
    }

    /// SHA-256 of every fixture text, in name order.
    pub fn input_hash(&self) -> String {
        crate::report::input_hash(self.sources.iter().flat_map(|(k, v)| [k.as_str(), v.as_str()]))
    }

    pub fn algebra(&self, name: &str) -> Result<&LeibnizAlgebra, FormatError> {
        self.algebras.get(name).ok_or_else(|| FormatError::UnknownAlgebra(name.to_string()))
    }

    pub fn extension(&self, name: &str) -> Option<&Extension> {
        self.extensions.get(name).map(|e| &e.extension)
    }
}

/// The corpus shipped with this crate.
pub fn bundled_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_canonical() {
        let text = r#"{"name":"g","dim":3,"basis":["a1","a2","a3"],
            "brackets":[{"left":1,"right":3,"value":[{"basis":1,"coeff":"2/4"}]}]}"#;
        let f = AlgebraFile::parse(text).unwrap();
        let q = f.to_algebra().unwrap();
        let canon = AlgebraFile::from_algebra(&q);
        assert_eq!(canon.brackets[0].value[0].coeff, "1/2");
        let again = AlgebraFile::parse(&canon.to_json()).unwrap();
        assert_eq!(again, canon);
        assert_eq!(again.to_algebra().unwrap(), q);
    }

    #[test]
    fn index_zero_is_rejected() {
        let text = r#"{"name":"x","dim":1,"basis":["x"],
            "brackets":[{"left":0,"right":1,"value":[]}]}"#;
        let err = AlgebraFile::parse(text).unwrap().to_algebra().unwrap_err();
        assert!(matches!(err, FormatError::Index { field: "left", index: 0, dim: 1 }));
    }

    #[test]
    fn non_leibniz_names_triples() {
        let text = r#"{"name":"bad","dim":2,"basis":["e1","e2"],"brackets":[
            {"left":1,"right":1,"value":[{"basis":2,"coeff":"1"}]},
            {"left":2,"right":1,"value":[{"basis":1,"coeff":"1"}]}]}"#;
        match AlgebraFile::parse(text).unwrap().to_algebra() {
            Err(FormatError::NotLeibniz(v)) => assert!(!v.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bundled_corpus_loads() {
        let c = Corpus::load(&bundled_corpus_dir()).unwrap();
        assert!(c.algebras.contains_key("ex_5_15_c"));
        assert_eq!(c.extensions.len(), 3);
    }
}
