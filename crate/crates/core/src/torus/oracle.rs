//! A deliberately naive second computation of the torus homology for strict
//! commutative dg algebras (only m_2 and δ).
//!
//! Nothing here is shared with the main path except the rational type: words
//! are grouped into content blocks, shuffles come from the recursive formula
//! and are taken over all pairs of shorter words, the quotient is represented by the
//! annihilator of the ideal rather than a section, and ranks come from a
//! dense elimination written below.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{BettiReport, BettiRow, TorusError};
use crate::cinfty::CInftyAlgebra;
use crate::linalg::Rational;

type Word = Vec<usize>;
type Sparse = BTreeMap<Word, Rational>;

/// Dense reduced row echelon form: nonzero rows and their pivot columns.
fn eliminate(mut rows: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn dense_rank(rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    eliminate(rows, ncols).1.len()
}

/// Vectors `v` with `row · v = 0` for every row.
fn annihilator(rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let (red, pivots) = eliminate(rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

fn words(dim: usize, n: usize) -> Vec<Word> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for w in words(dim, n - 1) {
        for i in 0..dim {
            let mut v = w.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

fn content(w: &[usize]) -> Word {
    let mut c = w.to_vec();
    c.sort_unstable();
    c
}

fn bump(v: &mut Sparse, w: Word, c: Rational) {
    let e = v.entry(w.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&w);
    }
}

/// Recursive shuffle: `(a u) ∗ (b v) = a (u ∗ b v) ± b (a u ∗ v)`, where `b`
/// jumping over `a u` costs `-(-1)^{|b||x|}` per letter `x`.
fn shuffle(alg: &CInftyAlgebra, u: &[usize], v: &[usize]) -> Sparse {
    let mut out = Sparse::new();
    if u.is_empty() || v.is_empty() {
        out.insert([u, v].concat(), Rational::one());
        return out;
    }
    for (w, c) in shuffle(alg, &u[1..], v) {
        bump(&mut out, [&[u[0]][..], &w].concat(), c);
    }
    let jump: i64 = u
        .iter()
        .map(|&x| 1 + alg.degree(v[0]) * alg.degree(x))
        .sum();
    for (w, c) in shuffle(alg, u, &v[1..]) {
        let c = if jump % 2 == 0 { c } else { -c };
        bump(&mut out, [&[v[0]][..], &w].concat(), c);
    }
    out
}

/// Content blocks of one weight, each with the annihilator of the shuffle span.
struct Weight {
    blocks: Vec<(Vec<Word>, Vec<Vec<Rational>>)>,
}

fn build_weight(alg: &CInftyAlgebra, n: usize) -> Weight {
    let dim = alg.dim();
    let mut gens: BTreeMap<Word, Vec<Sparse>> = BTreeMap::new();
    for p in 1..n {
        for u in words(dim, p) {
            for v in words(dim, n - p) {
                let s = shuffle(alg, &u, &v);
                if !s.is_empty() {
                    gens.entry(content(&[&u[..], &v[..]].concat()))
                        .or_default()
                        .push(s);
                }
            }
        }
    }
    let mut by_content: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
    for w in words(dim, n) {
        by_content.entry(content(&w)).or_default().push(w);
    }
    let mut blocks = Vec::new();
    for (key, block) in by_content {
        let pos: BTreeMap<&Word, usize> = block.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let rows: Vec<Vec<Rational>> = gens
            .get(&key)
            .map(|vs| {
                vs.iter()
                    .map(|v| {
                        let mut r = vec![Rational::zero(); block.len()];
                        for (w, c) in v {
                            r[pos[w]] += c;
                        }
                        r
                    })
                    .collect()
            })
            .unwrap_or_default();
        let ann = annihilator(rows, block.len());
        blocks.push((block, ann));
    }
    Weight { blocks }
}

fn word_degree(alg: &CInftyAlgebra, w: &[usize]) -> i64 {
    w.iter().map(|&x| alg.degree(x) + 1).sum()
}

/// `d` for a strict algebra: δ at position s with `(-1)^{1+n+|a_1|+…+|a_s|}`,
/// `m_2` at positions s, s+1 with `(-1)^s`.
fn boundary(alg: &CInftyAlgebra, w: &[usize]) -> Sparse {
    let n = w.len();
    let mut out = Sparse::new();
    let mut before = 0i64;
    for s in 0..n {
        let odd = (1 + n as i64 + before) % 2 != 0;
        for (o, c) in alg.delta(w[s]) {
            let mut t = w.to_vec();
            t[s] = *o;
            bump(&mut out, t, if odd { -c.clone() } else { c.clone() });
        }
        if s + 1 < n {
            for (o, c) in alg.op(&w[s..s + 2]) {
                let t: Word = [&w[..s], &[*o], &w[s + 2..]].concat();
                bump(&mut out, t, if s % 2 == 1 { -c.clone() } else { c.clone() });
            }
        }
        before += alg.degree(w[s]);
    }
    out
}

/// Betti numbers of the torus complex through weight `cap`, computed
/// independently of [`super::torus_complex`].
pub fn harrison_oracle(alg: &CInftyAlgebra, cap: usize) -> Result<BettiReport, TorusError> {
    if cap < 1 {
        return Err(TorusError::WeightCap(cap));
    }
    if let Some(&k) = alg.arities().iter().find(|&&k| k != 2) {
        return Err(TorusError::HigherOperations(k));
    }
    let weights: Vec<Weight> = (1..=cap).map(|n| build_weight(alg, n)).collect();
    // annihilator functionals and full words, per total degree
    let mut functionals: BTreeMap<i64, Vec<Sparse>> = BTreeMap::new();
    let mut domain: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
    let mut weights_at: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        for (block, ann) in &w.blocks {
            let d = word_degree(alg, &block[0]);
            domain.entry(d).or_default().extend(block.iter().cloned());
            for f in ann {
                let f: Sparse = f
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (block[k].clone(), c.clone()))
                    .collect();
                functionals.entry(d).or_default().push(f);
                weights_at.entry(d).or_default().push(i + 1);
            }
        }
    }
    // rank of the induced map out of degree d: rank of N_{d-1}^T · D_d
    let mut rank: BTreeMap<i64, usize> = BTreeMap::new();
    for (&d, ws) in &domain {
        let Some(fs) = functionals.get(&(d - 1)) else {
            continue;
        };
        let columns: Vec<Sparse> = ws.iter().map(|w| boundary(alg, w)).collect();
        let rows: Vec<Vec<Rational>> = fs
            .iter()
            .map(|f| {
                columns
                    .iter()
                    .map(|col| {
                        col.iter()
                            .filter_map(|(t, c)| f.get(t).map(|x| x * c))
                            .fold(Rational::zero(), |s, x| s + x)
                    })
                    .collect()
            })
            .collect();
        rank.insert(d, dense_rank(rows, ws.len()));
    }
    let lo = alg.basis().iter().map(|g| g.degree).min().unwrap_or(0);
    let rows = functionals
        .iter()
        .filter(|(_, fs)| !fs.is_empty())
        .map(|(&d, fs)| {
            let r = |k: i64| rank.get(&k).copied().unwrap_or(0);
            let mut ws = weights_at[&d].clone();
            ws.dedup();
            BettiRow {
                degree: d,
                dim: fs.len(),
                betti: fs.len() - r(d) - r(d + 1),
                complete: lo >= 0 && d + 1 < (cap as i64 + 1) * (1 + lo),
                weights: ws,
            }
        })
        .collect();
    Ok(BettiReport {
        algebra: alg.name().to_string(),
        weight_cap: cap,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cinfty::builtin;
    use crate::linalg::rational;

    #[test]
    fn dense_elimination() {
        let m = vec![
            vec![rational(1), rational(2), rational(3)],
            vec![rational(2), rational(4), rational(6)],
        ];
        assert_eq!(dense_rank(m.clone(), 3), 1);
        let ann = annihilator(m, 3);
        assert_eq!(ann.len(), 2);
        for v in ann {
            let dot = rational(1) * &v[0] + rational(2) * &v[1] + rational(3) * &v[2];
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn q_is_acyclic() {
        let r = harrison_oracle(&builtin("Q").unwrap(), 6).unwrap();
        assert!(r.rows.iter().all(|r| r.betti == 0));
    }

    #[test]
    fn higher_operations_are_refused() {
        let mut a = CInftyAlgebra::new("m3", &[("1", 0), ("y", 1)], 3);
        a.set_op(&["1", "1", "1"], "y", rational(1)).unwrap();
        assert_eq!(harrison_oracle(&a, 3), Err(TorusError::HigherOperations(3)));
    }
}
