//! Vertex labels drawn from a cooperad, and the Bar(Comm) instance.
//!
//! A label lives on a vertex whose half-edges are given as a bit set
//! (`universe`). For Bar(Comm) the label is an unrooted tree with those
//! half-edges as leaves, stored as the set of splits its internal edges
//! induce. Each split is recorded by the side avoiding the lowest bit of the
//! universe, so the stored sets form a laminar family.

use std::fmt::Debug;
use std::hash::Hash;

pub fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

pub fn lowest_bit(x: u64) -> u64 {
    x & x.wrapping_neg()
}

pub fn bits(x: u64) -> impl Iterator<Item = u32> {
    (0..64u32).filter(move |&i| x >> i & 1 == 1)
}

/// Two sets are compatible when nested or disjoint.
pub fn compatible(a: u64, b: u64) -> bool {
    a & b == 0 || a & b == a || a & b == b
}

/// All laminar families drawn from `candidates`, each returned sorted.
pub fn laminar_families(candidates: &[u64]) -> Vec<Vec<u64>> {
    fn go(c: &[u64], i: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == c.len() {
            let mut f = cur.clone();
            f.sort_unstable();
            out.push(f);
            return;
        }
        go(c, i + 1, cur, out);
        if cur.iter().all(|&x| compatible(x, c[i])) {
            cur.push(c[i]);
            go(c, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(candidates, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Labels of a dg cooperad placed on the vertices of a graph.
pub trait CooperadLabel: Clone + Ord + Hash + Debug + Sized {
    /// Basis of labels on a vertex with the given half-edges.
    fn basis(universe: u64) -> Vec<Self>;
    fn universe(&self) -> u64;
    fn degree(&self) -> usize;
    /// Internal differential; the `i`-th term carries `(-1)^i` relative to the label's edge order.
    fn differential(&self) -> Vec<(i64, Self)>;
    /// Infinitesimal decompositions through each internal edge, half-edges
    /// `x` and `y` naming the two ends of the new edge.
    fn decompositions(&self, x: u32, y: u32) -> Vec<Decomposition<Self>>;
    /// Renames half-edges.
    fn relabel(&self, map: &dyn Fn(u32) -> u32) -> Self;
}

/// Cutting a label along one of its internal edges. The half-edges in `side`
/// move to a new vertex labelled `inner` (which also gets `y`); the rest stay,
/// labelled `outer` (with `x` added).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<L> {
    /// Index of the consumed edge in the label's edge order.
    pub position: usize,
    pub side: u64,
    pub inner: L,
    pub outer: L,
    /// For every other edge, in order: whether it lands in `inner`, and its index there or in `outer`.
    pub images: Vec<(bool, usize)>,
}

/// Bar(Comm) label: an unrooted tree with leaves the half-edges of a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitTree {
    universe: u64,
    splits: Vec<u64>,
}

impl SplitTree {
    pub fn corolla(universe: u64) -> Self {
        SplitTree {
            universe,
            splits: Vec::new(),
        }
    }

    fn normalize(universe: u64, s: u64) -> u64 {
        if s & lowest_bit(universe) != 0 {
            universe & !s
        } else {
            s
        }
    }

    fn is_split(universe: u64, s: u64) -> bool {
        let k = popcount(s);
        s & !universe == 0 && s & lowest_bit(universe) == 0 && k >= 2 && k + 2 <= popcount(universe)
    }

    /// Builds from splits given by either side; fails on an invalid or incompatible family.
    pub fn new(universe: u64, splits: impl IntoIterator<Item = u64>) -> Option<Self> {
        let mut v: Vec<u64> = splits
            .into_iter()
            .map(|s| Self::normalize(universe, s))
            .collect();
        v.sort_unstable();
        let n = v.len();
        v.dedup();
        if v.len() != n || !v.iter().all(|&s| Self::is_split(universe, s)) {
            return None;
        }
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if !compatible(v[i], v[j]) {
                    return None;
                }
            }
        }
        Some(SplitTree {
            universe,
            splits: v,
        })
    }

    pub fn splits(&self) -> &[u64] {
        &self.splits
    }

    /// The smallest stored split containing every bit of `mask`, if any.
    pub fn smallest_split_containing(&self, mask: u64) -> Option<u64> {
        self.splits
            .iter()
            .copied()
            .filter(|&s| s & mask == mask)
            .min_by_key(|&s| popcount(s))
    }

    pub fn without(&self, i: usize) -> Self {
        let mut splits = self.splits.clone();
        splits.remove(i);
        SplitTree {
            universe: self.universe,
            splits,
        }
    }
}

impl CooperadLabel for SplitTree {
    fn basis(universe: u64) -> Vec<Self> {
        let free = universe & !lowest_bit(universe);
        let n = popcount(universe);
        let mut candidates = Vec::new();
        // enumerate subsets of `free` by walking submasks
        let mut s = free;
        while s != 0 {
            let k = popcount(s);
            if k >= 2 && k + 2 <= n {
                candidates.push(s);
            }
            s = (s - 1) & free;
        }
        candidates.sort_unstable();
        laminar_families(&candidates)
            .into_iter()
            .map(|splits| SplitTree { universe, splits })
            .collect()
    }

    fn universe(&self) -> u64 {
        self.universe
    }

    fn degree(&self) -> usize {
        self.splits.len()
    }

    fn differential(&self) -> Vec<(i64, Self)> {
        (0..self.splits.len())
            .map(|i| (if i % 2 == 0 { 1 } else { -1 }, self.without(i)))
            .collect()
    }

    fn decompositions(&self, x: u32, y: u32) -> Vec<Decomposition<Self>> {
        let (xb, yb) = (1u64 << x, 1u64 << y);
        (0..self.splits.len())
            .map(|i| {
                let c = self.splits[i];
                let inner_u = c | yb;
                let outer_u = (self.universe & !c) | xb;
                let mut moved = Vec::new();
                for (j, &d) in self.splits.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    if d & c == d {
                        moved.push((true, Self::normalize(inner_u, d)));
                    } else if d & c == c {
                        moved.push((false, Self::normalize(outer_u, (d & !c) | xb)));
                    } else {
                        moved.push((false, Self::normalize(outer_u, d)));
                    }
                }
                let pick = |side: bool| moved.iter().filter(move |m| m.0 == side).map(|m| m.1);
                let inner =
                    SplitTree::new(inner_u, pick(true)).expect("restriction of a laminar family");
                let outer =
                    SplitTree::new(outer_u, pick(false)).expect("quotient of a laminar family");
                let images = moved
                    .iter()
                    .map(|&(side, s)| {
                        let target = if side { &inner } else { &outer };
                        (
                            side,
                            target.splits.binary_search(&s).expect("image present"),
                        )
                    })
                    .collect();
                Decomposition {
                    position: i,
                    side: c,
                    inner,
                    outer,
                    images,
                }
            })
            .collect()
    }

    fn relabel(&self, map: &dyn Fn(u32) -> u32) -> Self {
        let m = |s: u64| bits(s).fold(0u64, |acc, b| acc | 1u64 << map(b));
        let universe = m(self.universe);
        SplitTree::new(universe, self.splits.iter().map(|&s| m(s)))
            .expect("relabelling preserves splits")
    }
}
