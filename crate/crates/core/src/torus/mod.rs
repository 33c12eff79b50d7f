//! The torus complex of a C∞ algebra: tensor words modulo the ideal
//! generated by shuffle products, with the A∞ differential plus δ.
//!
//! A word `a_1⊗…⊗a_n` has weight `n` and total degree `n + Σ|a_i|`, so the
//! differential has degree -1. Each weight's quotient is realised by a
//! section: the words that are not pivots of the ideal's reduced echelon form.

mod bonnet;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cinfty::CInftyAlgebra;
use crate::linalg::{
    GradedChainComplex, IntegerEchelon, LinalgError, Rational, Rref, SparseMatrix,
};

pub use bonnet::{bonnet_representative, bonnet_rewrite_orders, BonnetNormalForm};
pub use oracle::harrison_oracle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusError {
    #[error("weight cap must be at least 1, got {0}")]
    WeightCap(usize),
    #[error("the oracle only handles m_2 and δ; the algebra has m_{0}")]
    HigherOperations(usize),
    #[error("word {0:?} uses a letter outside the basis")]
    BadLetter(Vec<usize>),
    #[error("not a bonnet-profile generator: {0}")]
    NotBonnet(String),
    #[error("word has {got} letters but the graph has {expected} incoming legs")]
    WordLength { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Linear combination of tensor words.
pub type WordChain = BTreeMap<Vec<usize>, Rational>;

fn add(chain: &mut WordChain, w: Vec<usize>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = chain.entry(w.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        chain.remove(&w);
    }
}

fn signed(odd: bool, c: &Rational) -> Rational {
    if odd {
        -c.clone()
    } else {
        c.clone()
    }
}

/// A word in the basis letters of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord {
    pub letters: Vec<usize>,
}

impl TensorWord {
    pub fn new(letters: Vec<usize>) -> Self {
        TensorWord { letters }
    }

    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    pub fn degree(&self, a: &CInftyAlgebra) -> i64 {
        word_degree(a, &self.letters)
    }

    pub fn render(&self, a: &CInftyAlgebra) -> String {
        render(a, &self.letters)
    }
}

pub(crate) fn word_degree(a: &CInftyAlgebra, w: &[usize]) -> i64 {
    w.len() as i64 + w.iter().map(|&i| a.degree(i)).sum::<i64>()
}

pub(crate) fn render(a: &CInftyAlgebra, w: &[usize]) -> String {
    w.iter()
        .map(|&i| a.basis()[i].name.as_str())
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Every word of length `n`, lexicographically; position = base-`dim` value.
fn all_words(dim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .iter()
            .flat_map(|w| {
                (0..dim).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

fn word_index(dim: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &i| acc * dim + i)
}

/// `u ∗ v`: sum over shuffles with sign(σ) times the Koszul sign on letter degrees.
pub fn shuffle_product(a: &CInftyAlgebra, u: &[usize], v: &[usize]) -> WordChain {
    let mut out = WordChain::new();
    let (p, q) = (u.len(), v.len());
    // positions of u's letters, as an increasing p-subset of 0..p+q
    let mut pos: Vec<usize> = (0..p).collect();
    loop {
        let mut word = Vec::with_capacity(p + q);
        let mut odd = false;
        let (mut i, mut j) = (0, 0);
        for k in 0..p + q {
            if i < p && pos[i] == k {
                for &b in &v[..j] {
                    odd ^= (1 + a.degree(u[i]) * a.degree(b)) % 2 != 0;
                }
                word.push(u[i]);
                i += 1;
            } else {
                word.push(v[j]);
                j += 1;
            }
        }
        add(
            &mut out,
            word,
            signed(odd, &Rational::from_integer(1.into())),
        );
        // next p-subset in lexicographic order
        let mut k = p;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if pos[k] < q + k {
                pos[k] += 1;
                for l in k + 1..p {
                    pos[l] = pos[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Weight-`n` words modulo the shuffle ideal.
#[derive(Clone, Debug)]
pub struct ShuffleQuotient {
    weight: usize,
    dim: usize,
    rref: Rref,
    /// Word indices of the section, increasing.
    section: Vec<usize>,
    section_pos: BTreeMap<usize, usize>,
}

impl ShuffleQuotient {
    /// Spans `u ∗ v` over all splittings of all words of length `n`. The
    /// span is already an ideal for the shuffle product, which is associative.
    pub fn new(a: &CInftyAlgebra, n: usize) -> Self {
        let dim = a.dim();
        let mut ech = IntegerEchelon::new();
        for x in all_words(dim, n) {
            for p in 1..n {
                let row: Vec<(usize, Rational)> = shuffle_product(a, &x[..p], &x[p..])
                    .into_iter()
                    .map(|(w, c)| (word_index(dim, &w), c))
                    .collect();
                if !row.is_empty() {
                    ech.insert_rational(&row);
                }
            }
        }
        let rref = ech.into_rref();
        let total = dim.pow(n as u32);
        let section: Vec<usize> = (0..total).filter(|&i| !rref.is_pivot(i)).collect();
        let section_pos = section.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        ShuffleQuotient {
            weight: n,
            dim,
            rref,
            section,
            section_pos,
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Dimension of the shuffle subspace.
    pub fn ideal_dim(&self) -> usize {
        self.rref.rank()
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.section.len()
    }

    pub fn section_words(&self) -> Vec<Vec<usize>> {
        self.section.iter().map(|&i| self.word(i)).collect()
    }

    fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = vec![0; self.weight];
        for k in (0..self.weight).rev() {
            w[k] = i % self.dim;
            i /= self.dim;
        }
        w
    }

    /// Coordinates of a word in the section basis.
    pub fn project(&self, w: &[usize]) -> Vec<(usize, Rational)> {
        self.rref
            .normal_form_of_unit(word_index(self.dim, w))
            .into_iter()
            .map(|(i, c)| (self.section_pos[&i], c))
            .collect()
    }

    /// A basis of the shuffle subspace, as word chains.
    pub fn ideal_basis(&self) -> Vec<WordChain> {
        (0..self.dim.pow(self.weight as u32))
            .filter_map(|i| self.rref.row(i))
            .map(|row| {
                row.iter()
                    .map(|(j, c)| (self.word(*j), c.clone()))
                    .collect()
            })
            .collect()
    }
}

/// The shuffle subspace of `A^{⊗n}` together with its quotient section.
pub fn shuffle_subspace(a: &CInftyAlgebra, n: usize) -> ShuffleQuotient {
    ShuffleQuotient::new(a, n)
}

/// The differential on a single word in the full tensor space: for every
/// `1 ≤ j ≤ n` and position `s`, the word with `m_j` (δ for j = 1) applied to
/// letters `s+1..s+j`, signed by `(-1)^{j + s(j+1) + j(|a_1|+…+|a_s|) + nj}`.
pub fn word_differential(a: &CInftyAlgebra, w: &[usize]) -> WordChain {
    let n = w.len();
    let mut out = WordChain::new();
    let mut prefix_degree = 0i64;
    for s in 0..n {
        for j in 1..=n - s {
            let inner = if j == 1 {
                a.delta(w[s])
            } else {
                a.op(&w[s..s + j])
            };
            let outer = (j + s * (j + 1) + n * j) % 2 == 1;
            let odd = outer != (j as i64 * prefix_degree % 2 != 0);
            for (o, c) in inner {
                let word: Vec<usize> = w[..s]
                    .iter()
                    .chain([o])
                    .chain(&w[s + j..])
                    .copied()
                    .collect();
                add(&mut out, word, signed(odd, c));
            }
        }
        prefix_degree += a.degree(w[s]);
    }
    out
}

/// Whether weights above `cap` can reach total degrees `d-1`, `d`, `d+1`.
pub(crate) fn degree_is_complete(a: &CInftyAlgebra, cap: usize, d: i64) -> bool {
    let degs = a.basis().iter().map(|g| g.degree);
    let (lo, hi) = match (degs.clone().min(), degs.max()) {
        (Some(lo), Some(hi)) => (1 + lo, 1 + hi),
        _ => return true,
    };
    let hits = |n: i64| n * lo <= d + 1 && d - 1 <= n * hi;
    let mut n = cap as i64 + 1;
    if lo > 0 {
        while n * lo <= d + 1 {
            if hits(n) {
                return false;
            }
            n += 1;
        }
        true
    } else if hi < 0 {
        while n * hi >= d - 1 {
            if hits(n) {
                return false;
            }
            n += 1;
        }
        true
    } else {
        false
    }
}

/// The assembled complex and per-degree bookkeeping.
#[derive(Clone, Debug)]
pub struct TorusComplex {
    pub complex: GradedChainComplex,
    pub weight_cap: usize,
    pub quotients: Vec<ShuffleQuotient>,
    /// Weights of the basis elements in each total degree.
    pub weights: BTreeMap<i64, Vec<usize>>,
}

impl TorusComplex {
    pub fn quotient(&self, n: usize) -> &ShuffleQuotient {
        &self.quotients[n - 1]
    }

    /// Applies the differential to every basis element of every shuffle
    /// subspace and lists those whose image leaves the ideal.
    pub fn ideal_failures(&self, a: &CInftyAlgebra) -> Vec<String> {
        self.quotients
            .par_iter()
            .flat_map_iter(|q| {
                q.ideal_basis().into_iter().filter_map(move |v| {
                    let mut image = WordChain::new();
                    for (w, c) in &v {
                        for (t, e) in word_differential(a, w) {
                            add(&mut image, t, c * e);
                        }
                    }
                    let mut residue: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
                    for (t, c) in &image {
                        for (k, e) in self.quotient(t.len()).project(t) {
                            let r = residue.entry((t.len(), k)).or_insert_with(Rational::zero);
                            *r += c * e;
                        }
                    }
                    residue.retain(|_, c| !c.is_zero());
                    (!residue.is_empty()).then(|| {
                        let (w, _) = v.iter().next().expect("nonzero ideal vector");
                        format!("ideal vector led by {} leaves the ideal", render(a, w))
                    })
                })
            })
            .collect()
    }
}

/// Quotients for weights `1..=cap`, assembled into a total-degree-graded complex.
pub fn torus_complex(a: &CInftyAlgebra, cap: usize) -> Result<TorusComplex, TorusError> {
    if cap < 1 {
        return Err(TorusError::WeightCap(cap));
    }
    let quotients: Vec<ShuffleQuotient> = (1..=cap)
        .into_par_iter()
        .map(|n| ShuffleQuotient::new(a, n))
        .collect();
    // basis per degree, ordered by weight then word
    let mut by_degree: BTreeMap<i64, Vec<(usize, usize, Vec<usize>)>> = BTreeMap::new();
    for q in &quotients {
        for (k, w) in q.section_words().into_iter().enumerate() {
            by_degree
                .entry(word_degree(a, &w))
                .or_default()
                .push((q.weight(), k, w));
        }
    }
    let index: BTreeMap<(usize, usize), usize> = by_degree
        .values()
        .flat_map(|v| v.iter().enumerate().map(|(i, (n, k, _))| ((*n, *k), i)))
        .collect();
    let mut complex = GradedChainComplex::new();
    for (&d, items) in &by_degree {
        complex.set_basis(d, items.iter().map(|(_, _, w)| render(a, w)).collect());
    }
    for (&d, items) in &by_degree {
        let rows = by_degree.get(&(d - 1)).map_or(0, |v| v.len());
        let mut m = SparseMatrix::zeros(rows, items.len());
        for (col, (_, _, w)) in items.iter().enumerate() {
            for (t, c) in word_differential(a, w) {
                debug_assert_eq!(word_degree(a, &t), d - 1);
                let q = &quotients[t.len() - 1];
                for (k, e) in q.project(&t) {
                    m.add_to(index[&(t.len(), k)], col, c.clone() * e)?;
                }
            }
        }
        if rows > 0 {
            complex.set_differential(d, m)?;
        }
    }
    let weights = by_degree
        .iter()
        .map(|(&d, v)| (d, v.iter().map(|(n, _, _)| *n).collect()))
        .collect();
    Ok(TorusComplex {
        complex,
        weight_cap: cap,
        quotients,
        weights,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub degree: i64,
    pub dim: usize,
    pub betti: usize,
    pub complete: bool,
    pub weights: Vec<usize>,
}

/// Betti numbers per total degree with completeness flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub algebra: String,
    pub weight_cap: usize,
    pub rows: Vec<BettiRow>,
}

impl BettiReport {
    pub fn complete_rows(&self) -> impl Iterator<Item = &BettiRow> {
        self.rows.iter().filter(|r| r.complete)
    }

    /// Degrees where two reports disagree on a degree complete in `self`.
    pub fn diff_complete(&self, other: &BettiReport) -> Vec<String> {
        let theirs: BTreeMap<i64, usize> = other.rows.iter().map(|r| (r.degree, r.betti)).collect();
        self.complete_rows()
            .filter_map(|r| {
                let t = theirs.get(&r.degree).copied().unwrap_or(0);
                (t != r.betti).then(|| format!("degree {}: {} vs {}", r.degree, r.betti, t))
            })
            .collect()
    }
}

impl fmt::Display for BettiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} at weight cap {}", self.algebra, self.weight_cap)?;
        writeln!(f, "  degree  dim  betti  complete  weights")?;
        for r in &self.rows {
            let ws: Vec<String> = r.weights.iter().map(|w| w.to_string()).collect();
            writeln!(
                f,
                "  {:>6}  {:>3}  {:>5}  {:>8}  {}",
                r.degree,
                r.dim,
                r.betti,
                if r.complete { "yes" } else { "no" },
                ws.join(",")
            )?;
        }
        Ok(())
    }
}

/// Homology of the torus complex per total degree.
pub fn harrison_betti(a: &CInftyAlgebra, cap: usize) -> Result<BettiReport, TorusError> {
    let t = torus_complex(a, cap)?;
    Ok(betti_report(a, &t)?)
}

pub(crate) fn betti_report(
    a: &CInftyAlgebra,
    t: &TorusComplex,
) -> Result<BettiReport, LinalgError> {
    let betti: BTreeMap<i64, usize> = t.complex.betti()?.into_iter().collect();
    let rows = t
        .weights
        .iter()
        .map(|(&d, ws)| {
            let mut weights = ws.clone();
            weights.dedup();
            BettiRow {
                degree: d,
                dim: ws.len(),
                betti: betti.get(&d).copied().unwrap_or(0),
                complete: degree_is_complete(a, t.weight_cap, d),
                weights,
            }
        })
        .collect();
    Ok(BettiReport {
        algebra: a.name().to_string(),
        weight_cap: t.weight_cap,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cinfty::builtin;
    use crate::linalg::rational;

    #[test]
    fn shuffle_examples() {
        let q = builtin("Q").unwrap();
        assert!(shuffle_product(&q, &[0], &[0]).is_empty());
        let s = shuffle_product(&q, &[0], &[0, 0]);
        assert_eq!(s, WordChain::from([(vec![0, 0, 0], rational(1))]));
        let d = builtin("Qx2").unwrap();
        let ab = shuffle_product(&d, &[0], &[1]);
        assert_eq!(
            ab,
            WordChain::from([(vec![0, 1], rational(1)), (vec![1, 0], rational(-1))])
        );
        // odd letters commute with a sign
        let c = builtin("S1").unwrap();
        assert_eq!(
            shuffle_product(&c, &[1], &[1]),
            WordChain::from([(vec![1, 1], rational(2))])
        );
    }

    #[test]
    fn shuffle_subspaces_of_q() {
        let q = builtin("Q").unwrap();
        assert_eq!(shuffle_subspace(&q, 2).ideal_dim(), 0);
        assert_eq!(shuffle_subspace(&q, 3).ideal_dim(), 1);
        let d = builtin("Qx2").unwrap();
        assert_eq!(shuffle_subspace(&d, 2).ideal_dim(), 1);
    }

    #[test]
    fn torus_of_q() {
        let q = builtin("Q").unwrap();
        let t = torus_complex(&q, 6).unwrap();
        let dims: Vec<usize> = t.quotients.iter().map(|q| q.dim()).collect();
        assert_eq!(dims, vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(t.complex.differential(2).get(0, 0), rational(1));
        assert!(t.complex.verify_dd_zero().passed());
        let r = harrison_betti(&q, 6).unwrap();
        assert!(r.complete_rows().all(|r| r.betti == 0));
        assert!(torus_complex(&q, 0).is_err());
    }

    #[test]
    fn weight_one_sees_only_delta() {
        let mut a = CInftyAlgebra::new("dga", &[("1", 0), ("u", 1), ("w", 0)], 2);
        a.set_differential("u", "w", rational(1)).unwrap();
        for n in ["1", "u", "w"] {
            a.set_op(&["1", n], n, rational(1)).unwrap();
            a.set_op(&[n, "1"], n, rational(1)).unwrap();
        }
        let d = word_differential(&a, &[1]);
        assert_eq!(d.len(), 1);
        assert_eq!(d.keys().next().unwrap(), &vec![2]);
        let t = torus_complex(&a, 4).unwrap();
        assert!(t.complex.verify_dd_zero().passed());
        assert!(t.ideal_failures(&a).is_empty());
    }

    #[test]
    fn builtins_preserve_the_ideal_at_small_weight() {
        for name in ["Q", "Qx2", "Qx3", "S2", "S1"] {
            let a = builtin(name).unwrap();
            let t = torus_complex(&a, 4).unwrap();
            assert!(t.ideal_failures(&a).is_empty(), "{name}");
            assert!(t.complex.verify_dd_zero().passed(), "{name}");
        }
    }

    #[test]
    fn completeness_flags() {
        let q = builtin("Q").unwrap();
        assert!(degree_is_complete(&q, 6, 5));
        assert!(!degree_is_complete(&q, 6, 6));
        let s = builtin("S2").unwrap();
        assert!(degree_is_complete(&s, 6, 5));
        assert!(!degree_is_complete(&s, 6, 7));
    }
}
