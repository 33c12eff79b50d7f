//! Rooted trees, the Bar construction on Comm, and its Cobar resolution.
//!
//! A rooted tree with leaves `1..n` is stored as the family of leaf sets
//! ("clusters") hanging below its internal edges. Distinct families give
//! non-isomorphic leaf-labelled trees, so the family is already a canonical
//! form. Leaf `i` is bit `i - 1`.

mod cobar;
mod label;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Port};
use crate::linalg::{assemble_complex, GradedChainComplex, LinalgError};

pub use cobar::{cobar_bar_complex, graft, CobarBarElement};
pub use label::{
    bits, compatible, laminar_families, lowest_bit, popcount, CooperadLabel, SplitTree,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("arity must be at least {min}, got {got}")]
    ArityTooSmall { min: usize, got: usize },
    #[error("arity {0} is beyond the supported maximum of 31")]
    ArityTooLarge(usize),
    #[error("graft expects {expected} inputs, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cannot parse tree literal: {0}")]
    Parse(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn check_arity(n: usize, min: usize) -> Result<(), OperadError> {
    if n < min {
        return Err(OperadError::ArityTooSmall { min, got: n });
    }
    if n > 31 {
        return Err(OperadError::ArityTooLarge(n));
    }
    Ok(())
}

pub(crate) fn full(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

/// Every possible cluster of an `n`-leaf tree: leaf sets of size `2..n`, proper.
pub(crate) fn candidate_clusters(n: usize) -> Vec<u64> {
    (1u64..(1u64 << n))
        .filter(|&s| (2..n).contains(&popcount(s)))
        .collect()
}

pub(crate) fn sign_of(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A leaf-labelled rooted tree; its Bar degree is the number of internal edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarTree {
    n: usize,
    clusters: Vec<u32>,
}

impl BarTree {
    pub fn corolla(n: usize) -> Self {
        BarTree {
            n,
            clusters: Vec::new(),
        }
    }

    pub fn new(n: usize, clusters: impl IntoIterator<Item = u32>) -> Result<Self, OperadError> {
        check_arity(n, 1)?;
        let mut c: Vec<u32> = clusters.into_iter().collect();
        c.sort_unstable();
        c.dedup();
        for &x in &c {
            if x & !full(n) != 0 || !(2..n).contains(&(x.count_ones() as usize)) {
                return Err(OperadError::Parse(format!(
                    "{x:#b} is not a proper cluster of {n} leaves"
                )));
            }
        }
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if !compatible(u64::from(c[i]), u64::from(c[j])) {
                    return Err(OperadError::Parse("clusters overlap".into()));
                }
            }
        }
        Ok(BarTree { n, clusters: c })
    }

    /// All `n`-leaf trees, by degree and then clusters.
    pub fn all(n: usize) -> Result<Vec<BarTree>, OperadError> {
        check_arity(n, 1)?;
        Ok(laminar_families(&candidate_clusters(n))
            .into_iter()
            .map(|f| BarTree {
                n,
                clusters: f.into_iter().map(|c| c as u32).collect(),
            })
            .collect())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn clusters(&self) -> &[u32] {
        &self.clusters
    }

    pub fn degree(&self) -> usize {
        self.clusters.len()
    }

    pub fn internal_vertices(&self) -> usize {
        self.clusters.len() + 1
    }

    /// Contraction of every internal edge, signed by its position.
    pub fn differential(&self) -> Vec<(i64, BarTree)> {
        (0..self.clusters.len())
            .map(|i| {
                let mut c = self.clusters.clone();
                c.remove(i);
                (
                    sign_of(i),
                    BarTree {
                        n: self.n,
                        clusters: c,
                    },
                )
            })
            .collect()
    }

    /// The tree as a boundary-labelled graph: leaves `In(1..n)`, root `Out(1)`.
    pub fn to_graph(&self) -> Graph {
        tree_graph(self.n, &self.clusters)
    }
}

/// Graph of a rooted tree given by clusters (top vertex plus one vertex per cluster).
pub(crate) fn tree_graph(n: usize, clusters: &[u32]) -> Graph {
    let nodes: Vec<u32> = std::iter::once(full(n))
        .chain(clusters.iter().copied())
        .collect();
    let parent_of = |set: u32, exclude: usize| -> usize {
        (0..nodes.len())
            .filter(|&k| k != exclude && nodes[k] & set == set)
            .min_by_key(|&k| nodes[k].count_ones())
            .expect("top node contains everything")
    };
    let mut pair = Vec::new();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    let mut ports = Vec::new();
    let add_edge = |pair: &mut Vec<usize>| {
        let a = pair.len();
        pair.extend([a + 1, a]);
        (a, a + 1)
    };
    // root leg
    let (r, rl) = add_edge(&mut pair);
    blocks[0].push(r);
    blocks.push(vec![rl]);
    ports.push((rl, Port::Out(1)));
    for (k, &c) in nodes.iter().enumerate().skip(1) {
        let (up, down) = add_edge(&mut pair);
        blocks[parent_of(c, k)].push(up);
        blocks[k].push(down);
    }
    for leaf in 0..n {
        let (a, b) = add_edge(&mut pair);
        blocks[parent_of(1 << leaf, usize::MAX)].push(a);
        blocks.push(vec![b]);
        ports.push((b, Port::In(leaf as u32 + 1)));
    }
    Graph::build(pair, blocks, ports, [], n == 1).expect("tree from laminar family")
}

/// Renders a cluster family as nested parentheses; clusters in `inner` use brackets.
pub(crate) fn render(n: usize, outer: &[u32], inner: &[u32]) -> String {
    fn go(set: u32, all: &[(u32, bool)], n: usize, top: bool, bracket: bool, out: &mut String) {
        if set.count_ones() == 1 {
            out.push_str(&(set.trailing_zeros() + 1).to_string());
            return;
        }
        let mut children: Vec<(u32, bool)> = all
            .iter()
            .copied()
            .filter(|&(c, _)| c != set && c & set == c)
            .filter(|&(c, _)| {
                !all.iter()
                    .any(|&(d, _)| d != set && d != c && d & set == d && d & c == c)
            })
            .collect();
        let covered = children.iter().fold(0, |acc, &(c, _)| acc | c);
        for leaf in 0..n {
            let b = 1u32 << leaf;
            if set & b != 0 && covered & b == 0 {
                children.push((b, false));
            }
        }
        children.sort_by_key(|&(c, _)| c.trailing_zeros());
        let (open, close) = if bracket && !top {
            ('[', ']')
        } else {
            ('(', ')')
        };
        out.push(open);
        for (i, &(c, br)) in children.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            go(c, all, n, false, br, out);
        }
        out.push(close);
    }
    let all: Vec<(u32, bool)> = outer
        .iter()
        .map(|&c| (c, false))
        .chain(inner.iter().map(|&c| (c, true)))
        .collect();
    let mut s = String::new();
    go(full(n), &all, n, true, false, &mut s);
    s
}

/// Parses nested parentheses/brackets; returns `(n, outer clusters, inner clusters)`.
pub(crate) fn parse_nested(s: &str) -> Result<(usize, Vec<u32>, Vec<u32>), OperadError> {
    struct P<'a> {
        b: &'a [u8],
        i: usize,
        outer: Vec<u32>,
        inner: Vec<u32>,
    }
    impl P<'_> {
        fn err<T>(&self, msg: &str) -> Result<T, OperadError> {
            Err(OperadError::Parse(format!("{msg} at offset {}", self.i)))
        }
        fn node(&mut self, top: bool) -> Result<u32, OperadError> {
            match self.b.get(self.i) {
                Some(&c) if c == b'(' || c == b'[' => {
                    let close = if c == b'(' { b')' } else { b']' };
                    if top && c == b'[' {
                        return self.err("the whole tree cannot be bracketed");
                    }
                    self.i += 1;
                    let mut set = 0u32;
                    let mut count = 0;
                    loop {
                        let child = self.node(false)?;
                        if set & child != 0 {
                            return self.err("repeated leaf");
                        }
                        set |= child;
                        count += 1;
                        match self.b.get(self.i) {
                            Some(b',') => self.i += 1,
                            Some(&x) if x == close => {
                                self.i += 1;
                                break;
                            }
                            _ => return self.err("expected `,` or a closing bracket"),
                        }
                    }
                    if count < 2 {
                        return self.err("a vertex needs at least two children");
                    }
                    if !top {
                        if c == b'(' {
                            &mut self.outer
                        } else {
                            &mut self.inner
                        }
                        .push(set);
                    }
                    Ok(set)
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.i;
                    while self.b.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
                        self.i += 1;
                    }
                    let k: u32 = std::str::from_utf8(&self.b[start..self.i])
                        .expect("ascii")
                        .parse()
                        .expect("digits");
                    if k == 0 || k > 31 {
                        return self.err("leaf labels run from 1 to 31");
                    }
                    Ok(1 << (k - 1))
                }
                _ => self.err("expected a leaf or `(`"),
            }
        }
    }
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = P {
        b: cleaned.as_bytes(),
        i: 0,
        outer: Vec::new(),
        inner: Vec::new(),
    };
    let set = p.node(true)?;
    if p.i != p.b.len() {
        return p.err("trailing input");
    }
    let n = set.count_ones() as usize;
    if set != full(n) {
        return Err(OperadError::Parse("leaves must be exactly 1..n".into()));
    }
    p.outer.sort_unstable();
    p.inner.sort_unstable();
    Ok((n, p.outer, p.inner))
}

impl fmt::Display for BarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.n, &self.clusters, &[]))
    }
}

impl FromStr for BarTree {
    type Err = OperadError;

    fn from_str(s: &str) -> Result<Self, OperadError> {
        let (n, outer, inner) = parse_nested(s)?;
        if !inner.is_empty() {
            return Err(OperadError::Parse(
                "bar trees have no bracketed vertices".into(),
            ));
        }
        BarTree::new(n, outer)
    }
}

/// Bar complex of Comm in arity `n`: trees graded by internal edges.
pub fn bar_complex(n: usize) -> Result<GradedChainComplex, OperadError> {
    check_arity(n, 2)?;
    let basis = BarTree::all(n)?
        .into_iter()
        .map(|t| (t.degree() as i64, t))
        .collect();
    Ok(assemble_complex(basis, |t: &BarTree| t.differential())?)
}
