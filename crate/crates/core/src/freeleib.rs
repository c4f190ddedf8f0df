//! Free Leibniz algebras on the word basis, truncated by word length, and
//! presentations of finite-dimensional algebras.
//!
//! Left-normed words `x_{i1} x_{i2} ... x_{ik}` form a basis of the free
//! Leibniz algebra, with `[u, x] = ux` for a letter `x` and
//! `[u, vx] = [u, v]x − [ux, v]`.

use crate::algebra::{Hom, LeibnizAlgebra};
use crate::exactla::{int, is_zero, Echelon, Matrix, Scalar, Subspace, SymPairs, Vector};
use num::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

pub type Word = Vec<u8>;

/// Largest truncated free algebra materialized as a structure-constant table.
pub const DEFAULT_WORD_CAP: usize = 1200;
/// Largest multidegree block whose kernel is computed densely.
pub const BLOCK_CAP: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeError {
    #[error("free algebra on {m} letters up to length {d} has {dim} words, above the cap {cap}")]
    TooLarge { m: usize, d: usize, dim: usize, cap: usize },
    #[error("need at least one generator and degree ≥ 1 (got m={m}, d={d})")]
    Degenerate { m: usize, d: usize },
    #[error("generator images do not generate the target (subalgebra of dim {generated} < {dim})")]
    DoesNotGenerate { generated: usize, dim: usize },
    #[error("truncation degree {d} too small: {reason}")]
    DegreeTooSmall { d: usize, reason: String },
    #[error("generator image has length {found}, target has dimension {dim}")]
    BadImage { found: usize, dim: usize },
    #[error("extension source does not match the presented algebra")]
    SourceMismatch,
}

/// `[u, v]` of two words as an integer combination of words of length `|u| + |v|`.
pub fn word_bracket(u: &[u8], v: &[u8]) -> Vec<(Word, i64)> {
    let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
    bracket_into(u, v, 1, &mut acc);
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn bracket_into(u: &[u8], v: &[u8], sign: i64, acc: &mut BTreeMap<Word, i64>) {
    let (x, rest) = v.split_last().expect("nonempty word");
    if rest.is_empty() {
        let mut w = u.to_vec();
        w.push(*x);
        *acc.entry(w).or_insert(0) += sign;
        return;
    }
    // [u, v'x] = [u, v']x − [ux, v']
    let mut inner = BTreeMap::new();
    bracket_into(u, rest, sign, &mut inner);
    for (mut w, c) in inner {
        w.push(*x);
        *acc.entry(w).or_insert(0) += c;
    }
    let mut ux = u.to_vec();
    ux.push(*x);
    bracket_into(&ux, rest, -sign, acc);
}

/// `{u, v} = [u, v] + [v, u]` on words.
pub fn word_sym(u: &[u8], v: &[u8]) -> Vec<(Word, i64)> {
    let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
    bracket_into(u, v, 1, &mut acc);
    bracket_into(v, u, 1, &mut acc);
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn words_of_length(m: usize, k: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w: Word| {
                (0..m as u8).map(move |x| {
                    let mut w2 = w.clone();
                    w2.push(x);
                    w2
                })
            })
            .collect();
    }
    out
}

/// The free Leibniz algebra on `m` letters modulo words longer than `d`.
#[derive(Debug, Clone)]
pub struct FreeNilpotentLeibniz {
    m: usize,
    d: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    underlying: LeibnizAlgebra,
}

pub fn word_label(w: &[u8]) -> String {
    w.iter().map(|x| format!("x{}", x + 1)).collect::<Vec<_>>().join("")
}

pub fn free_nilpotent(m: usize, d: usize) -> Result<FreeNilpotentLeibniz, FreeError> {
    free_nilpotent_capped(m, d, DEFAULT_WORD_CAP)
}

pub fn free_nilpotent_capped(m: usize, d: usize, cap: usize) -> Result<FreeNilpotentLeibniz, FreeError> {
    if m == 0 || d == 0 || m > u8::MAX as usize {
        return Err(FreeError::Degenerate { m, d });
    }
    let dim: usize = (1..=d).map(|k| m.saturating_pow(k as u32)).fold(0usize, |a, b| a.saturating_add(b));
    if dim > cap {
        return Err(FreeError::TooLarge { m, d, dim, cap });
    }
    let words: Vec<Word> = (1..=d).flat_map(|k| words_of_length(m, k)).collect();
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut underlying = LeibnizAlgebra::with_labels(format!("F({m},{d})"), words.iter().map(|w| word_label(w)).collect());
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.len() + v.len() > d {
                continue;
            }
            let mut val = vec![Scalar::zero(); dim];
            for (w, c) in word_bracket(u, v) {
                val[index[&w]] = int(c);
            }
            underlying.set_bracket(i, j, &val).expect("indices in range");
        }
    }
    Ok(FreeNilpotentLeibniz { m, d, words, index, underlying })
}

impl FreeNilpotentLeibniz {
    pub fn generators(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word_index(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn underlying(&self) -> &LeibnizAlgebra {
        &self.underlying
    }

    pub fn letter(&self, x: usize) -> Vector {
        self.underlying.basis_vector(self.index[&vec![x as u8]])
    }

    /// Indices of words of each length `1..=d`.
    pub fn graded_positions(&self, k: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.words[i].len() == k).collect()
    }
}

/// Left-normed evaluation of words in a target algebra.
#[derive(Debug, Clone)]
pub struct Evaluator<'a> {
    target: &'a LeibnizAlgebra,
    images: &'a [Vector],
    memo: HashMap<Word, Vector>,
}

impl<'a> Evaluator<'a> {
    pub fn new(target: &'a LeibnizAlgebra, images: &'a [Vector]) -> Self {
        Evaluator { target, images, memo: HashMap::new() }
    }

    pub fn eval(&mut self, w: &[u8]) -> Vector {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let (x, rest) = w.split_last().expect("nonempty word");
        let v = if rest.is_empty() {
            self.images[*x as usize].clone()
        } else {
            let head = self.eval(rest);
            if is_zero(&head) {
                head
            } else {
                self.target.bracket(&head, &self.images[*x as usize])
            }
        };
        self.memo.insert(w.to_vec(), v.clone());
        v
    }
}

/// A truncated free presentation `ρ: F_d → Q` with kernel `R`.
#[derive(Debug, Clone)]
pub struct Presentation {
    free: FreeNilpotentLeibniz,
    gen_images: Vec<Vector>,
    ev: Hom,
    kernel: Subspace,
}

fn check_images(q: &LeibnizAlgebra, gen_images: &[Vector]) -> Result<(), FreeError> {
    for g in gen_images {
        if g.len() != q.dim() {
            return Err(FreeError::BadImage { found: g.len(), dim: q.dim() });
        }
    }
    Ok(())
}

/// Presents `q` by the truncated free algebra on `gen_images.len()` letters.
pub fn present(q: &LeibnizAlgebra, gen_images: &[Vector], d: usize) -> Result<Presentation, FreeError> {
    check_images(q, gen_images)?;
    let generated = q.generated_subalgebra(gen_images).dim();
    if generated < q.dim() {
        return Err(FreeError::DoesNotGenerate { generated, dim: q.dim() });
    }
    let free = free_nilpotent(gen_images.len(), d)?;
    build_presentation(free, q, gen_images.to_vec())
}

fn build_presentation(free: FreeNilpotentLeibniz, q: &LeibnizAlgebra, gen_images: Vec<Vector>) -> Result<Presentation, FreeError> {
    let d = free.d;
    let mut ev = Evaluator::new(q, &gen_images);
    let cols: Vec<Vector> = free.words.iter().map(|w| ev.eval(w)).collect();
    let matrix = Matrix::from_columns(&cols, q.dim()).expect("target height");
    if !matrix.is_surjective() {
        return Err(FreeError::DegreeTooSmall { d, reason: "evaluation is not surjective".into() });
    }
    // Brackets inside the truncation are respected by construction; products that
    // the truncation kills must vanish in the target.
    for (i, u) in free.words.iter().enumerate() {
        for (j, v) in free.words.iter().enumerate() {
            if u.len() + v.len() > d && !is_zero(&q.bracket(&cols[i], &cols[j])) {
                return Err(FreeError::DegreeTooSmall {
                    d,
                    reason: format!("[{}, {}] survives in the target", word_label(u), word_label(v)),
                });
            }
        }
    }
    let kernel = matrix.kernel();
    let ev = Hom::trusted(free.underlying.clone(), q.clone(), matrix);
    Ok(Presentation { free, gen_images, ev, kernel })
}

impl Presentation {
    pub fn free(&self) -> &FreeNilpotentLeibniz {
        &self.free
    }

    pub fn target(&self) -> &LeibnizAlgebra {
        self.ev.target()
    }

    pub fn gen_images(&self) -> &[Vector] {
        &self.gen_images
    }

    pub fn ev(&self) -> &Hom {
        &self.ev
    }

    /// `R = ker ρ`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// The presentation `τ = f ∘ ρ` of the target of `f`.
    pub fn lift(&self, f: &Hom) -> Result<Presentation, FreeError> {
        if f.source() != self.target() {
            return Err(FreeError::SourceMismatch);
        }
        let images: Vec<Vector> = self.gen_images.iter().map(|g| f.apply(g)).collect();
        build_presentation(self.free.clone(), f.target(), images)
    }
}

/// A generating set of a target algebra, used for the symmetric-square Hopf computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    target: LeibnizAlgebra,
    images: Vec<Vector>,
}

impl Generators {
    pub fn new(target: &LeibnizAlgebra, images: Vec<Vector>) -> Result<Generators, FreeError> {
        check_images(target, &images)?;
        let generated = target.generated_subalgebra(&images).dim();
        if generated < target.dim() {
            return Err(FreeError::DoesNotGenerate { generated, dim: target.dim() });
        }
        // zero generators contribute nothing to any relation
        let images = images.into_iter().filter(|g| !is_zero(g)).collect();
        Ok(Generators { target: target.clone(), images })
    }

    pub fn basis(target: &LeibnizAlgebra) -> Generators {
        Generators::new(target, (0..target.dim()).map(|i| target.basis_vector(i)).collect())
            .expect("the basis generates")
    }

    /// Images `f(g)` of generators of the source of a surjective `f`.
    pub fn push_forward(&self, f: &Hom) -> Result<Generators, FreeError> {
        if f.source() != &self.target {
            return Err(FreeError::SourceMismatch);
        }
        Generators::new(f.target(), self.images.iter().map(|g| f.apply(g)).collect())
    }

    pub fn target(&self) -> &LeibnizAlgebra {
        &self.target
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

/// Kernel of `Sym²F → F, u⊙v ↦ [u,v]+[v,u]` on one multidegree block, on canonical letters.
#[derive(Debug, Clone)]
pub struct BlockKernel {
    /// Letter multiplicities, non-increasing; canonical letter `t` occurs `counts[t]` times.
    pub counts: Vec<usize>,
    /// Unordered pairs `u ⊙ v` spanning the block of `Sym²F`.
    pub pairs: Vec<(Word, Word)>,
    /// Kernel basis as sparse combinations of `pairs`.
    pub vectors: Vec<Vec<(usize, Scalar)>>,
}

fn arrangements(counts: &[usize]) -> Vec<Word> {
    let total: usize = counts.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    let mut left = counts.to_vec();
    fn rec(left: &mut Vec<usize>, cur: &mut Word, total: usize, out: &mut Vec<Word>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for t in 0..left.len() {
            if left[t] > 0 {
                left[t] -= 1;
                cur.push(t as u8);
                rec(left, cur, total, out);
                cur.pop();
                left[t] += 1;
            }
        }
    }
    rec(&mut left, &mut cur, total, &mut out);
    out
}

fn sub_counts(counts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &c in counts {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=c).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

fn pair_key(u: Word, v: Word) -> (Word, Word) {
    if (u.len(), &u) <= (v.len(), &v) {
        (u, v)
    } else {
        (v, u)
    }
}

fn compute_block_kernel(counts: &[usize]) -> Result<BlockKernel, FreeError> {
    let total: usize = counts.iter().sum();
    let words = arrangements(counts);
    if words.len() > BLOCK_CAP {
        return Err(FreeError::TooLarge { m: counts.len(), d: total, dim: words.len(), cap: BLOCK_CAP });
    }
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut pairs: BTreeSet<(Word, Word)> = BTreeSet::new();
    for a in sub_counts(counts) {
        let k: usize = a.iter().sum();
        if k == 0 || k == total {
            continue;
        }
        let b: Vec<usize> = counts.iter().zip(&a).map(|(c, x)| c - x).collect();
        let us = arrangements(&a);
        let vs = arrangements(&b);
        for u in &us {
            for v in &vs {
                pairs.insert(pair_key(u.clone(), v.clone()));
            }
        }
    }
    let pairs: Vec<(Word, Word)> = pairs.into_iter().collect();
    let cols: Vec<Vector> = pairs
        .iter()
        .map(|(u, v)| {
            let mut col = vec![Scalar::zero(); words.len()];
            for (w, c) in word_sym(u, v) {
                col[index[&w]] += int(c);
            }
            col
        })
        .collect();
    let s = Matrix::from_columns(&cols, words.len()).expect("block height");
    let vectors = s
        .kernel()
        .basis()
        .iter()
        .map(|k| k.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
        .collect();
    Ok(BlockKernel { counts: counts.to_vec(), pairs, vectors })
}

fn kernel_cache() -> &'static Mutex<HashMap<Vec<usize>, Arc<BlockKernel>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<BlockKernel>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The block kernel for a multiplicity pattern (sorted non-increasing), shared process-wide.
pub fn block_kernel(counts: &[usize]) -> Result<Arc<BlockKernel>, FreeError> {
    let mut key: Vec<usize> = counts.iter().copied().filter(|&c| c > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(k) = kernel_cache().lock().expect("cache lock").get(&key) {
        return Ok(k.clone());
    }
    let k = Arc::new(compute_block_kernel(&key)?);
    kernel_cache().lock().expect("cache lock").insert(key, k.clone());
    Ok(k)
}

fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, m - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Images in `Sym²Q` of the free symmetric kernel, cumulated by word degree.
///
/// Entry `k` of the result spans `ρ⊙ρ(K_F ∩ degree ≤ k)`; entries 0 and 1 are zero.
/// `ceiling` bounds the span from above (the kernel of μ); once reached, the
/// remaining blocks are skipped since they cannot add anything.
pub fn symmetric_relations(gens: &Generators, max_degree: usize, ceiling: Option<usize>) -> Result<Vec<Subspace>, FreeError> {
    let q = gens.target();
    let sp = SymPairs::new(q.dim());
    let m = gens.len();
    let mut ech = Echelon::new(sp.dim());
    let mut out = vec![Subspace::zero(sp.dim()); 2.min(max_degree + 1)];
    let mut ev = Evaluator::new(q, gens.images());
    let saturated = |e: &Echelon| ceiling.is_some_and(|c| e.rank() >= c);
    for n in 2..=max_degree {
        if m > 0 && !saturated(&ech) {
            for comp in compositions(n, m) {
                if saturated(&ech) {
                    break;
                }
                // canonical letter t ↦ actual letter, ordered by multiplicity
                let mut letters: Vec<usize> = (0..m).filter(|&x| comp[x] > 0).collect();
                letters.sort_by(|&a, &b| comp[b].cmp(&comp[a]).then(a.cmp(&b)));
                let counts: Vec<usize> = letters.iter().map(|&x| comp[x]).collect();
                let bk = block_kernel(&counts)?;
                let relabel = |w: &Word| -> Word { w.iter().map(|&t| letters[t as usize] as u8).collect() };
                let prods: Vec<Option<Vector>> = bk
                    .pairs
                    .iter()
                    .map(|(u, v)| {
                        let x = ev.eval(&relabel(u));
                        if is_zero(&x) {
                            return None;
                        }
                        let y = ev.eval(&relabel(v));
                        if is_zero(&y) {
                            return None;
                        }
                        Some(sp.product(&x, &y))
                    })
                    .collect();
                if prods.iter().all(Option::is_none) {
                    continue;
                }
                for kv in &bk.vectors {
                    let mut img = vec![Scalar::zero(); sp.dim()];
                    for (p, c) in kv {
                        if let Some(pr) = &prods[*p] {
                            crate::exactla::add_scaled(&mut img, c, pr);
                        }
                    }
                    if !is_zero(&img) {
                        ech.insert(img);
                        if saturated(&ech) {
                            break;
                        }
                    }
                }
            }
        }
        out.push(ech.clone().into_subspace());
    }
    out.truncate(max_degree + 1);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_dims_and_examples() {
        assert_eq!(free_nilpotent(2, 3).unwrap().dim(), 14);
        let f = free_nilpotent(1, 4).unwrap();
        let x2 = f.word_index(&[0, 0]).unwrap();
        let x = f.word_index(&[0]).unwrap();
        let x3 = f.word_index(&[0, 0, 0]).unwrap();
        let a = f.underlying();
        assert_eq!(a.bracket_basis(x2, x), a.basis_vector(x3));
        assert!(is_zero(&a.bracket_basis(x2, x2)));
        assert!(free_nilpotent(3, 1).unwrap().underlying().is_abelian());
        assert!(matches!(free_nilpotent(10, 6), Err(FreeError::TooLarge { .. })));
    }

    #[test]
    fn truncated_free_algebras_are_leibniz() {
        for (m, d) in [(1, 5), (2, 3), (3, 2), (2, 4)] {
            assert!(free_nilpotent(m, d).unwrap().underlying().validate().is_empty(), "m={m} d={d}");
        }
    }

    #[test]
    fn one_generator_law() {
        for a in 1..4 {
            for b in 1..4 {
                let u = vec![0u8; a];
                let v = vec![0u8; b];
                let expect = if b == 1 { vec![(vec![0u8; a + 1], 1)] } else { vec![] };
                assert_eq!(word_bracket(&u, &v), expect);
            }
        }
    }

    #[test]
    fn grading() {
        let f = free_nilpotent(2, 4).unwrap();
        let a = f.underlying();
        for (i, u) in f.words().iter().enumerate() {
            for (j, v) in f.words().iter().enumerate() {
                for (k, _) in a.structure(i, j) {
                    assert_eq!(f.words()[*k].len(), u.len() + v.len());
                }
                if u.len() + v.len() > 4 {
                    assert!(a.structure(i, j).is_empty());
                }
            }
        }
    }

    #[test]
    fn degree_two_kernel_is_trivial() {
        for counts in [vec![2], vec![1, 1]] {
            assert!(block_kernel(&counts).unwrap().vectors.is_empty());
        }
    }
}
