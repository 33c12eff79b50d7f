//! Combinatorial half-edge graphs.
//!
//! A graph is a finite set of half-edges partitioned twice: into edges (a
//! fixed-point-free involution) and into vertices. Valence-one vertices are
//! the ends of boundary edges and carry an incoming or outgoing label; some
//! loops are marked as boundary tori, and the vertex carrying such a loop is
//! its base vertex.

mod canon;
mod enumerate;
mod literal;
mod orientation;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_labeling, Labeling, Structure};
pub use enumerate::graphs_of_profile;
pub use orientation::{
    forest_sign_after, parity_of_sorting, permutation_parity, FaceMove, OrientationSign,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("pairing is not a fixed-point-free involution at half-edge {0}")]
    BadPairing(usize),
    #[error("vertex blocks do not partition the half-edges (half-edge {0})")]
    BadPartition(usize),
    #[error("vertex {vertex} has valence {valence}")]
    Valence { vertex: usize, valence: usize },
    #[error("half-edge {0} is labelled but does not sit at a valence-one vertex")]
    LabelNotOnBoundary(usize),
    #[error("boundary half-edge {0} carries no label")]
    UnlabelledBoundary(usize),
    #[error("labels {0} are not a contiguous 1..n range without repeats")]
    BadLabels(String),
    #[error("torus mark on edge {0} is not a single-edge cycle")]
    TorusNotLoop(usize),
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("edge {0} is a boundary edge")]
    BoundaryEdge(usize),
    #[error("edge {0} is not an edge of this graph")]
    NoSuchEdge(usize),
    #[error("edge {0} is not in the ordering")]
    NotInOrdering(usize),
    #[error("profile {0}")]
    BadProfile(String),
    #[error("cannot parse graph literal: {0}")]
    Parse(String),
}

/// Label of a sphere boundary edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    In(u32),
    Out(u32),
}

/// Label of a boundary torus (a marked loop).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorusPort {
    In(u32),
    Out(u32),
}

/// Boundary data of a family of graphs: genus count, sphere edges and tori.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryProfile {
    pub g: usize,
    pub e_in: usize,
    pub e_out: usize,
    pub t_in: usize,
    pub t_out: usize,
}

impl BoundaryProfile {
    /// `(g, e, t)` with one outgoing sphere edge (when `e > 0`) and all tori incoming.
    pub fn from_triple(g: usize, e: usize, t: usize) -> Self {
        let e_out = usize::from(e > 0);
        BoundaryProfile {
            g,
            e_in: e - e_out,
            e_out,
            t_in: t,
            t_out: 0,
        }
    }

    pub fn e(&self) -> usize {
        self.e_in + self.e_out
    }

    pub fn t(&self) -> usize {
        self.t_in + self.t_out
    }

    /// First Betti number of every graph in the family.
    pub fn genus(&self) -> usize {
        self.g + self.t()
    }

    /// Profiles without boundary, or whose smallest graph would need a vertex of
    /// valence below three, are rejected.
    pub fn check_admissible(&self) -> Result<(), GraphError> {
        if self.e() + self.t() == 0 {
            return Err(GraphError::BadProfile(format!("{self} has no boundary")));
        }
        if self.e() + 2 * self.genus() < 3 {
            return Err(GraphError::BadProfile(format!(
                "{self} is degenerate: its reference graph has a vertex of valence {}",
                self.e() + 2 * self.genus()
            )));
        }
        Ok(())
    }

    /// Upper bound on the number of non-leaf vertices: attained when all are trivalent.
    pub fn max_internal_vertices(&self) -> usize {
        (self.e() + 2 * self.genus()).saturating_sub(2)
    }

    pub fn ports(&self) -> Vec<Port> {
        (1..=self.e_in as u32)
            .map(Port::In)
            .chain((1..=self.e_out as u32).map(Port::Out))
            .collect()
    }

    pub fn torus_ports(&self) -> Vec<TorusPort> {
        (1..=self.t_in as u32)
            .map(TorusPort::In)
            .chain((1..=self.t_out as u32).map(TorusPort::Out))
            .collect()
    }

    /// Parses `g,e,t` (see [`BoundaryProfile::from_triple`]) or `g,ein,eout,tin,tout`.
    pub fn parse(s: &str) -> Result<Self, GraphError> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| GraphError::BadProfile(format!("`{s}`: {e}")))?;
        match parts.as_slice() {
            [g, e, t] => Ok(Self::from_triple(*g, *e, *t)),
            [g, ei, eo, ti, to] => Ok(BoundaryProfile {
                g: *g,
                e_in: *ei,
                e_out: *eo,
                t_in: *ti,
                t_out: *to,
            }),
            _ => Err(GraphError::BadProfile(format!(
                "`{s}`: expected g,e,t or g,ein,eout,tin,tout"
            ))),
        }
    }
}

impl fmt::Display for BoundaryProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::from_triple(self.g, self.e(), self.t()) {
            write!(f, "({},{},{})", self.g, self.e(), self.t())
        } else {
            write!(
                f,
                "({},{}+{},{}+{})",
                self.g, self.e_in, self.e_out, self.t_in, self.t_out
            )
        }
    }
}

/// A boundary-labelled half-edge graph. Vertices are numbered by their
/// smallest half-edge; edges are named by their smaller half-edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    pair: Vec<usize>,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    /// Keyed by the half-edge sitting at the valence-one vertex.
    ports: BTreeMap<usize, Port>,
    /// Keyed by the smaller half-edge of the marked loop.
    tori: BTreeMap<usize, TorusPort>,
    allow_bivalent: bool,
}

fn check_contiguous(labels: &[u32], what: &str) -> Result<(), GraphError> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(i, &l)| l as usize != i + 1) {
        return Err(GraphError::BadLabels(format!("{what} {sorted:?}")));
    }
    Ok(())
}

impl Graph {
    /// Validating constructor.
    ///
    /// `allow_bivalent` admits valence-two vertices, which only the trivial
    /// bonnet and degenerate reference graphs need.
    pub fn build(
        pair: Vec<usize>,
        vertices: Vec<Vec<usize>>,
        ports: impl IntoIterator<Item = (usize, Port)>,
        tori: impl IntoIterator<Item = (usize, TorusPort)>,
        allow_bivalent: bool,
    ) -> Result<Graph, GraphError> {
        let n = pair.len();
        for (h, &p) in pair.iter().enumerate() {
            if p >= n || p == h || pair[p] != h {
                return Err(GraphError::BadPairing(h));
            }
        }
        let mut vertex_of = vec![usize::MAX; n];
        for (v, block) in vertices.iter().enumerate() {
            for &h in block {
                if h >= n || vertex_of[h] != usize::MAX {
                    return Err(GraphError::BadPartition(h.min(n)));
                }
                vertex_of[h] = v;
            }
        }
        if let Some(h) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(GraphError::BadPartition(h));
        }
        for (v, block) in vertices.iter().enumerate() {
            let val = block.len();
            if !(val == 1 || val >= 3 || (val == 2 && allow_bivalent)) {
                return Err(GraphError::Valence {
                    vertex: v,
                    valence: val,
                });
            }
        }

        let ports: BTreeMap<usize, Port> = ports.into_iter().collect();
        for &h in ports.keys() {
            if h >= n || vertices[vertex_of[h]].len() != 1 {
                return Err(GraphError::LabelNotOnBoundary(h));
            }
        }
        for (h, &v) in vertex_of.iter().enumerate() {
            if vertices[v].len() == 1 && !ports.contains_key(&h) {
                return Err(GraphError::UnlabelledBoundary(h));
            }
        }
        let ins: Vec<u32> = ports
            .values()
            .filter_map(|p| if let Port::In(i) = p { Some(*i) } else { None })
            .collect();
        let outs: Vec<u32> = ports
            .values()
            .filter_map(|p| if let Port::Out(i) = p { Some(*i) } else { None })
            .collect();
        check_contiguous(&ins, "incoming")?;
        check_contiguous(&outs, "outgoing")?;

        let mut torus_map = BTreeMap::new();
        for (h, t) in tori {
            if h >= n || vertex_of[h] != vertex_of[pair[h]] {
                return Err(GraphError::TorusNotLoop(h.min(n)));
            }
            let key = h.min(pair[h]);
            if torus_map.insert(key, t).is_some() {
                return Err(GraphError::BadLabels(format!("edge {key} marked twice")));
            }
        }
        let tin: Vec<u32> = torus_map
            .values()
            .filter_map(|p| {
                if let TorusPort::In(i) = p {
                    Some(*i)
                } else {
                    None
                }
            })
            .collect();
        let tout: Vec<u32> = torus_map
            .values()
            .filter_map(|p| {
                if let TorusPort::Out(i) = p {
                    Some(*i)
                } else {
                    None
                }
            })
            .collect();
        check_contiguous(&tin, "incoming tori")?;
        check_contiguous(&tout, "outgoing tori")?;

        Ok(Self::assemble(
            pair,
            vertex_of,
            ports,
            torus_map,
            allow_bivalent,
        ))
    }

    /// Builds from already-validated data, renumbering vertices by smallest half-edge.
    fn assemble(
        pair: Vec<usize>,
        vertex_of: Vec<usize>,
        ports: BTreeMap<usize, Port>,
        tori: BTreeMap<usize, TorusPort>,
        allow_bivalent: bool,
    ) -> Graph {
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (h, &v) in vertex_of.iter().enumerate() {
            blocks.entry(v).or_default().push(h);
        }
        let mut vertices: Vec<Vec<usize>> = blocks.into_values().collect();
        vertices.sort_by_key(|b| b[0]);
        let mut vertex_of = vec![0; pair.len()];
        for (v, b) in vertices.iter().enumerate() {
            for &h in b {
                vertex_of[h] = v;
            }
        }
        Graph {
            pair,
            vertex_of,
            vertices,
            ports,
            tori,
            allow_bivalent,
        }
    }

    /// Relabels half-edges by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.pair.len();
        let mut pair = vec![0; n];
        let mut vertex_of = vec![0; n];
        for h in 0..n {
            pair[perm[h]] = perm[self.pair[h]];
            vertex_of[perm[h]] = self.vertex_of[h];
        }
        let ports = self.ports.iter().map(|(&h, &p)| (perm[h], p)).collect();
        let tori = self
            .tori
            .iter()
            .map(|(&h, &t)| (perm[h].min(perm[self.pair[h]]), t))
            .collect();
        Self::assemble(pair, vertex_of, ports, tori, self.allow_bivalent)
    }

    pub fn num_half_edges(&self) -> usize {
        self.pair.len()
    }

    pub fn partner(&self, h: usize) -> usize {
        self.pair[h]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn half_edges_at(&self, v: usize) -> &[usize] {
        &self.vertices[v]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pair
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_of
    }

    pub fn ports(&self) -> &BTreeMap<usize, Port> {
        &self.ports
    }

    pub fn tori(&self) -> &BTreeMap<usize, TorusPort> {
        &self.tori
    }

    pub fn allows_bivalent(&self) -> bool {
        self.allow_bivalent
    }

    /// Edges named by their smaller half-edge, ascending.
    pub fn edges(&self) -> Vec<usize> {
        (0..self.pair.len()).filter(|&h| h < self.pair[h]).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.pair.len() / 2
    }

    pub fn is_edge(&self, e: usize) -> bool {
        e < self.pair.len() && e < self.pair[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.vertex_of[e] == self.vertex_of[self.pair[e]]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.vertices[v].len() == 1
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.is_leaf(self.vertex_of[e]) || self.is_leaf(self.vertex_of[self.pair[e]])
    }

    pub fn is_torus_edge(&self, e: usize) -> bool {
        self.tori.contains_key(&e.min(self.pair[e]))
    }

    /// Internal edges that are not loops: the ones a forest may contain.
    pub fn collapsible_edges(&self) -> Vec<usize> {
        self.edges()
            .into_iter()
            .filter(|&e| !self.is_boundary_edge(e) && !self.is_loop(e))
            .collect()
    }

    /// Vertices carrying a marked loop.
    pub fn base_vertices(&self) -> BTreeSet<usize> {
        self.tori.keys().map(|&h| self.vertex_of[h]).collect()
    }

    pub fn torus_at(&self, v: usize) -> Option<(usize, TorusPort)> {
        self.tori
            .iter()
            .find(|(&h, _)| self.vertex_of[h] == v)
            .map(|(&h, &t)| (h, t))
    }

    pub fn profile(&self) -> BoundaryProfile {
        let e_in = self
            .ports
            .values()
            .filter(|p| matches!(p, Port::In(_)))
            .count();
        let e_out = self.ports.len() - e_in;
        let t_in = self
            .tori
            .values()
            .filter(|p| matches!(p, TorusPort::In(_)))
            .count();
        let t_out = self.tori.len() - t_in;
        let genus = self.genus();
        BoundaryProfile {
            g: genus.saturating_sub(self.tori.len()),
            e_in,
            e_out,
            t_in,
            t_out,
        }
    }

    pub fn num_components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in self.edges() {
            uf.union(self.vertex_of[e], self.vertex_of[self.pair[e]]);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    /// Rank of the first homology: `|E| - |V| + #components`.
    pub fn genus(&self) -> usize {
        self.num_edges() + self.num_components() - self.vertices.len()
    }

    /// Collapses a non-loop internal edge. Also returns the map from old
    /// half-edges to new ones (`None` for the two removed half-edges).
    pub fn collapse_edge_with_map(
        &self,
        e: usize,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        if !self.is_edge(e) {
            return Err(GraphError::NoSuchEdge(e));
        }
        if self.is_loop(e) {
            return Err(GraphError::LoopEdge(e));
        }
        if self.is_boundary_edge(e) {
            return Err(GraphError::BoundaryEdge(e));
        }
        let (x, y) = (e, self.pair[e]);
        let (vx, vy) = (self.vertex_of[x], self.vertex_of[y]);
        let mut map = vec![None; self.pair.len()];
        let mut next = 0;
        for (h, slot) in map.iter_mut().enumerate() {
            if h != x && h != y {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut pair = vec![0; next];
        let mut vertex_of = vec![0; next];
        for h in 0..self.pair.len() {
            if let Some(nh) = map[h] {
                pair[nh] = map[self.pair[h]].expect("partner survives");
                let v = self.vertex_of[h];
                vertex_of[nh] = if v == vy { vx } else { v };
            }
        }
        let ports = self
            .ports
            .iter()
            .map(|(&h, &p)| (map[h].expect("leaf survives"), p))
            .collect();
        let tori = self
            .tori
            .iter()
            .map(|(&h, &t)| (map[h].expect("loop survives"), t))
            .collect();
        Ok((
            Self::assemble(pair, vertex_of, ports, tori, self.allow_bivalent),
            map,
        ))
    }

    pub fn collapse_edge(&self, e: usize) -> Result<Graph, GraphError> {
        self.collapse_edge_with_map(e).map(|(g, _)| g)
    }

    /// Collapses every edge of `forest`, returning the old-to-new half-edge map.
    pub fn collapse_forest_with_map(
        &self,
        forest: &Forest,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let mut g = self.clone();
        let mut total: Vec<Option<usize>> = (0..self.pair.len()).map(Some).collect();
        for &e in forest.edges() {
            let cur = total[e].ok_or(GraphError::NoSuchEdge(e))?;
            let cur = cur.min(g.pair[cur]);
            let (next, map) = g.collapse_edge_with_map(cur)?;
            for slot in total.iter_mut() {
                *slot = slot.and_then(|h| map[h]);
            }
            g = next;
        }
        Ok((g, total))
    }

    pub fn collapse_forest(&self, forest: &Forest) -> Result<Graph, GraphError> {
        self.collapse_forest_with_map(forest).map(|(g, _)| g)
    }

    /// Whether `edges` span a forest meeting the admissibility rules: no
    /// boundary, loop or torus edges, no cycle, and at most one base vertex
    /// per tree.
    pub fn is_admissible_forest(&self, edges: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        for &e in edges {
            if !self.is_edge(e) || self.is_boundary_edge(e) || self.is_loop(e) {
                return false;
            }
            if !uf.union(self.vertex_of[e], self.vertex_of[self.pair[e]]) {
                return false;
            }
        }
        let mut seen = BTreeSet::new();
        self.base_vertices()
            .into_iter()
            .all(|b| seen.insert(uf.find(b)))
    }

    /// All admissible forests, ordered by size and then lexicographically.
    pub fn admissible_forests(&self) -> Vec<Forest> {
        let candidates = self.collapsible_edges();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << candidates.len()) {
            let edges: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if self.is_admissible_forest(&edges) {
                out.push(Forest::new(edges));
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges().cmp(b.edges())));
        out
    }

    /// Colors for canonical labeling; `marked` edges get their own class.
    fn colors(&self, marked: &[usize]) -> Vec<u64> {
        let marked: BTreeSet<usize> = marked.iter().map(|&e| e.min(self.pair[e])).collect();
        (0..self.pair.len())
            .map(|h| {
                let e = h.min(self.pair[h]);
                if let Some(p) = self.ports.get(&h) {
                    match p {
                        Port::In(i) => (1 << 32) | u64::from(*i),
                        Port::Out(i) => (2 << 32) | u64::from(*i),
                    }
                } else if let Some(t) = self.tori.get(&e) {
                    match t {
                        TorusPort::In(i) => (3 << 32) | u64::from(*i),
                        TorusPort::Out(i) => (4 << 32) | u64::from(*i),
                    }
                } else if marked.contains(&e) {
                    5 << 32
                } else {
                    0
                }
            })
            .collect()
    }

    /// Canonical labeling of the graph with `marked` edges as an extra color class.
    pub fn labeling_with(&self, marked: &[usize]) -> Labeling {
        canonical_labeling(&Structure {
            pair: &self.pair,
            vertex_of: &self.vertex_of,
            num_vertices: self.vertices.len(),
            color: self.colors(marked),
        })
    }

    /// Canonical representative of the boundary-label-preserving isomorphism
    /// class, with the half-edge relabelling (old -> new) witnessing it.
    pub fn canonicalize(&self) -> (Graph, Vec<usize>) {
        let lab = self.labeling_with(&[]);
        (self.relabel(&lab.perm), lab.perm)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.num_half_edges() == other.num_half_edges()
            && self.canonicalize().0 == other.canonicalize().0
    }

    /// Generators of the group of label-preserving automorphisms, as half-edge permutations.
    pub fn automorphism_generators(&self) -> Vec<Vec<usize>> {
        self.labeling_with(&[]).generators
    }

    /// Every non-identity label-preserving automorphism.
    pub fn automorphism_group(&self) -> Vec<Vec<usize>> {
        self.labeling_with(&[]).automorphisms()
    }

    /// Whether `perm` (old -> new) is an automorphism preserving all labels.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.relabel(perm) == *self
    }
}

/// A set of internal edges of a host graph, named by smaller half-edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Forest {
    edges: Vec<usize>,
}

impl Forest {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Forest { edges }
    }

    pub fn empty() -> Self {
        Forest::default()
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn without(&self, e: usize) -> Forest {
        Forest {
            edges: self.edges.iter().copied().filter(|&x| x != e).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}

/// Small constructors used across the crate and in tests.
pub mod shapes {
    use super::*;

    /// Corolla with legs `In(1..n-1)` and `Out(1)` when `out` is set, else `In(1..n)`.
    pub fn corolla(n: usize, out: bool) -> Graph {
        let pair: Vec<usize> = (0..2 * n)
            .map(|h| if h < n { h + n } else { h - n })
            .collect();
        let mut vertices = vec![(0..n).collect::<Vec<_>>()];
        vertices.extend((n..2 * n).map(|h| vec![h]));
        let ports = (0..n).map(|i| {
            let p = if out && i == n - 1 {
                Port::Out(1)
            } else {
                Port::In(i as u32 + 1)
            };
            (n + i, p)
        });
        Graph::build(pair, vertices, ports, [], false).expect("corolla")
    }

    /// One vertex with a marked loop and `n` incoming legs; `B(0)` is flagged bivalent.
    pub fn bonnet(n: usize) -> Graph {
        // half-edges: 0,1 loop; 2..2+n legs at the vertex; 2+n.. leaf ends
        let total = 2 + 2 * n;
        let mut pair = vec![0; total];
        pair[0] = 1;
        pair[1] = 0;
        for i in 0..n {
            pair[2 + i] = 2 + n + i;
            pair[2 + n + i] = 2 + i;
        }
        let mut vertices = vec![(0..2 + n).collect::<Vec<_>>()];
        vertices.extend((0..n).map(|i| vec![2 + n + i]));
        let ports = (0..n).map(|i| (2 + n + i, Port::In(i as u32 + 1)));
        Graph::build(pair, vertices, ports, [(0, TorusPort::Out(1))], n == 0).expect("bonnet")
    }

    /// Vertex with an unmarked loop and a single outgoing leg.
    pub fn loop_with_tail() -> Graph {
        Graph::build(
            vec![1, 0, 3, 2],
            vec![vec![0, 1, 2], vec![3]],
            [(3, Port::Out(1))],
            [],
            false,
        )
        .expect("loop with tail")
    }

    /// Two vertices joined by three parallel edges, no boundary.
    pub fn theta() -> Graph {
        Graph::build(
            vec![3, 4, 5, 0, 1, 2],
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            [],
            [],
            false,
        )
        .expect("theta")
    }

    /// Two trivalent vertices joined by an internal edge; leaves a,b on the
    /// first vertex and c,d on the second, labelled in the given order.
    pub fn two_vertex_tree(labels: [Port; 4]) -> Graph {
        // 0,1,2 at u (2 internal), 3,4,5 at w (3 internal); leaves 6..9
        let pair = vec![6, 7, 3, 2, 8, 9, 0, 1, 4, 5];
        let vertices = vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![6],
            vec![7],
            vec![8],
            vec![9],
        ];
        let ports = [
            (6, labels[0]),
            (7, labels[1]),
            (8, labels[2]),
            (9, labels[3]),
        ];
        Graph::build(pair, vertices, ports, [], false).expect("two-vertex tree")
    }
}
