//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's enumeration, canonicalization or rank code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use harrison_core::linalg::{GradedChainComplex, Rational};
use num_traits::{One, Zero};

/// Rank by plain dense Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Rational::one() / rows[rank][c].clone();
        for i in rank + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] * &inv;
            for k in c..ncols {
                let t = &f * &rows[rank][k];
                rows[i][k] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers of a library complex, recomputed from its matrices with
/// [`dense_rank`].
pub fn dense_betti(c: &GradedChainComplex) -> Vec<(i64, usize)> {
    let rank = |d: i64| -> usize {
        let m = c.differential(d);
        if m.rows() == 0 || m.cols() == 0 {
            return 0;
        }
        let mut rows = vec![vec![Rational::zero(); m.cols()]; m.rows()];
        for (i, j, v) in m.entries() {
            rows[i][j] = v.clone();
        }
        dense_rank(rows)
    };
    c.degrees()
        .into_iter()
        .map(|d| (d, c.dim(d) - rank(d) - rank(d + 1)))
        .collect()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A graph with `legs` labelled leaves (half-edges `0..legs`, leg 0 being the
/// outgoing one is irrelevant here since labels are fixed) and internal
/// vertices given by `vert` on the remaining half-edges.
#[derive(Clone, Debug)]
struct BruteGraph {
    legs: usize,
    pair: Vec<usize>,
    /// Vertex of each half-edge; legs map to `usize::MAX`.
    vert: Vec<usize>,
    nverts: usize,
}

impl BruteGraph {
    fn edges(&self) -> Vec<usize> {
        (0..self.pair.len()).filter(|&h| h < self.pair[h]).collect()
    }

    fn internal(&self, e: usize) -> bool {
        e >= self.legs && self.pair[e] >= self.legs && self.vert[e] != self.vert[self.pair[e]]
    }

    fn is_forest(&self, f: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.nverts).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &e in f {
            let (a, b) = (
                find(&mut parent, self.vert[e]),
                find(&mut parent, self.vert[self.pair[e]]),
            );
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Contracts edge `e`, renumbering half-edges and vertices; returns the
    /// old-to-new half-edge map.
    fn collapse(&self, e: usize) -> (BruteGraph, Vec<Option<usize>>) {
        let (x, y) = (e, self.pair[e]);
        let (vx, vy) = (self.vert[x], self.vert[y]);
        let mut map = vec![None; self.pair.len()];
        let mut next = 0;
        for (h, m) in map.iter_mut().enumerate() {
            if h != x && h != y {
                *m = Some(next);
                next += 1;
            }
        }
        let mut pair = vec![0; next];
        let mut vert = vec![0; next];
        for h in 0..self.pair.len() {
            if let Some(n) = map[h] {
                pair[n] = map[self.pair[h]].unwrap();
                let v = if self.vert[h] == vy { vx } else { self.vert[h] };
                vert[n] = match v {
                    usize::MAX => usize::MAX,
                    v if v > vy => v - 1,
                    v => v,
                };
            }
        }
        (
            BruteGraph {
                legs: self.legs,
                pair,
                vert,
                nverts: self.nverts - 1,
            },
            map,
        )
    }
}

type Key = (Vec<usize>, Vec<usize>, Vec<usize>);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(seq: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            inv += usize::from(seq[i] > seq[j]);
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Minimal key over all relabellings, and the orientation signs of the
/// ordered forest `f` under the minimizing relabellings (0 if they disagree).
fn canon(g: &BruteGraph, f: &[usize]) -> (Key, i64) {
    let around: Vec<Vec<usize>> = (0..g.nverts)
        .map(|v| (0..g.pair.len()).filter(|&h| g.vert[h] == v).collect())
        .collect();
    let mut best: Option<(Key, BTreeSet<i64>)> = None;
    for vp in permutations(g.nverts) {
        // vp[i] = old vertex placed at position i
        let locals: Vec<Vec<Vec<usize>>> =
            vp.iter().map(|&v| permutations(around[v].len())).collect();
        let mut choice = vec![0; g.nverts];
        loop {
            let mut new_id = vec![0; g.pair.len()];
            for (h, id) in new_id.iter_mut().enumerate().take(g.legs) {
                *id = h;
            }
            let mut next = g.legs;
            let mut valences = Vec::new();
            for (i, &v) in vp.iter().enumerate() {
                valences.push(around[v].len());
                for &k in &locals[i][choice[i]] {
                    new_id[around[v][k]] = next;
                    next += 1;
                }
            }
            let mut pair = vec![0; g.pair.len()];
            for h in 0..g.pair.len() {
                pair[new_id[h]] = new_id[g.pair[h]];
            }
            let ordered: Vec<usize> = f
                .iter()
                .map(|&e| new_id[e].min(new_id[g.pair[e]]))
                .collect();
            let sign = parity(&ordered);
            let mut sorted = ordered.clone();
            sorted.sort_unstable();
            let key = (valences, pair, sorted);
            match &mut best {
                Some((k, signs)) if *k == key => {
                    signs.insert(sign);
                }
                Some((k, _)) if *k < key => {}
                _ => best = Some((key, BTreeSet::from([sign]))),
            }
            // advance the mixed-radix counter over local orderings
            let mut i = 0;
            while i < g.nverts {
                choice[i] += 1;
                if choice[i] < locals[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == g.nverts {
                break;
            }
        }
    }
    let (key, signs) = best.expect("at least one relabelling");
    let s = if signs.len() == 1 {
        *signs.iter().next().unwrap()
    } else {
        0
    };
    (key, s)
}

fn matchings(free: &mut Vec<usize>, legs: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some(&a) = free.first() else {
        out.push(cur.clone());
        return;
    };
    for i in 1..free.len() {
        let b = free[i];
        if a < legs && b < legs {
            continue;
        }
        let rest: Vec<usize> = free.iter().copied().filter(|&x| x != a && x != b).collect();
        let saved = std::mem::replace(free, rest);
        cur[a] = b;
        cur[b] = a;
        matchings(free, legs, cur, out);
        *free = saved;
    }
}

fn valence_tuples(k: usize, sum: usize, min: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if sum == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for v in min..=sum {
        for mut rest in valence_tuples(k - 1, sum - v, v) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

fn connected(g: &BruteGraph) -> bool {
    let n = g.nverts;
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for h in 0..g.pair.len() {
            if g.vert[h] == v {
                let w = g.vert[g.pair[h]];
                if w != usize::MAX && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Nonvanishing cells (graph, forest) of the genus-`g` graphs with `legs`
/// labelled legs, by forest size, together with the Betti numbers of the
/// cube complex with faces (G, F - f) and (G/f, F - f). Only for tiny sizes.
pub fn brute_cells(g: usize, legs: usize) -> (BTreeMap<usize, usize>, Vec<(i64, usize)>) {
    let max_k = (legs + 2 * g).saturating_sub(2);
    let mut graphs: BTreeMap<Key, BruteGraph> = BTreeMap::new();
    for k in 1..=max_k {
        let sum = 2 * (g + k - 1) + legs;
        for vals in valence_tuples(k, sum, 3) {
            let mut vert = vec![usize::MAX; legs];
            for (v, &n) in vals.iter().enumerate() {
                vert.extend(std::iter::repeat(v).take(n));
            }
            let h = vert.len();
            let mut out = Vec::new();
            matchings(&mut (0..h).collect(), legs, &mut vec![0; h], &mut out);
            for pair in out {
                let bg = BruteGraph {
                    legs,
                    pair,
                    vert: vert.clone(),
                    nverts: k,
                };
                if connected(&bg) {
                    graphs.entry(canon(&bg, &[]).0).or_insert(bg);
                }
            }
        }
    }
    // cells keyed canonically, with each cell's boundary
    let mut cells: BTreeMap<Key, (usize, Vec<(i64, Key)>)> = BTreeMap::new();
    for bg in graphs.values() {
        let internal: Vec<usize> = bg.edges().into_iter().filter(|&e| bg.internal(e)).collect();
        for mask in 0u32..1 << internal.len() {
            let f: Vec<usize> = (0..internal.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| internal[i])
                .collect();
            if !bg.is_forest(&f) {
                continue;
            }
            let (key, s) = canon(bg, &f);
            if s == 0 || cells.contains_key(&key) {
                continue;
            }
            let mut bd = Vec::new();
            for i in 0..f.len() {
                let rest: Vec<usize> = f.iter().copied().filter(|&x| x != f[i]).collect();
                let sign = s * if i % 2 == 0 { 1 } else { -1 };
                let (k1, s1) = canon(bg, &rest);
                let (col, map) = bg.collapse(f[i]);
                let rest2: Vec<usize> = rest.iter().map(|&e| map[e].unwrap()).collect();
                let (k2, s2) = canon(&col, &rest2);
                if s2 != 0 {
                    bd.push((sign * s2, k2));
                }
                if s1 != 0 {
                    bd.push((-sign * s1, k1));
                }
            }
            cells.insert(key, (f.len(), bd));
        }
    }
    let mut by_dim: BTreeMap<usize, Vec<&Key>> = BTreeMap::new();
    for (k, (d, _)) in &cells {
        by_dim.entry(*d).or_default().push(k);
    }
    let counts = by_dim.iter().map(|(d, v)| (*d, v.len())).collect();
    let rank = |d: usize| -> usize {
        let (Some(src), Some(tgt)) = (
            by_dim.get(&d),
            d.checked_sub(1).and_then(|t| by_dim.get(&t)),
        ) else {
            return 0;
        };
        let pos: BTreeMap<&Key, usize> = tgt.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let rows = src
            .iter()
            .map(|k| {
                let mut r = vec![Rational::zero(); tgt.len()];
                for (s, t) in &cells[*k].1 {
                    r[pos[t]] += Rational::from_integer((*s).into());
                }
                r
            })
            .collect();
        dense_rank(rows)
    };
    let betti = by_dim
        .iter()
        .map(|(&d, v)| (d as i64, v.len() - rank(d) - rank(d + 1)))
        .collect();
    (counts, betti)
}
