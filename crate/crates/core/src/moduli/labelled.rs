//! Graphs whose vertices carry cooperad labels, and the comparison with the
//! forested-graph complex when the labels are Bar(Comm) trees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::{add_term, canonical_cell, enumerate_cells, Chain, ForestedCell, ModuliError};
use crate::graph::{graphs_of_profile, parity_of_sorting, BoundaryProfile, Graph, UnionFind};
use crate::linalg::{assemble_complex, GradedChainComplex};
use crate::operad::{bits, CooperadLabel, SplitTree};

const MAX_HALF_EDGES: usize = 62;

fn mask(hs: &[usize]) -> u64 {
    hs.iter().fold(0, |acc, &h| acc | 1u64 << h)
}

/// One term of the differential of a labelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialTerm<L> {
    /// Vertex whose label produced the term.
    pub vertex: usize,
    /// Whether the term splits that vertex (otherwise it only changes its label).
    pub expanding: bool,
    pub sign: i64,
    pub term: LabelledGraph<L>,
}

/// A graph with one label per vertex, oriented by listing label edges vertex by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledGraph<L> {
    graph: Graph,
    labels: Vec<L>,
}

impl<L: CooperadLabel> LabelledGraph<L> {
    pub fn new(graph: Graph, labels: Vec<L>) -> Result<Self, ModuliError> {
        if graph.num_half_edges() > MAX_HALF_EDGES {
            return Err(ModuliError::TooLarge(graph.num_half_edges()));
        }
        assert_eq!(labels.len(), graph.num_vertices(), "one label per vertex");
        for (v, l) in labels.iter().enumerate() {
            assert_eq!(
                l.universe(),
                mask(graph.half_edges_at(v)),
                "label universe at vertex {v}"
            );
        }
        Ok(LabelledGraph { graph, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.labels.iter().map(|l| l.degree()).sum()
    }

    fn offset(&self, v: usize) -> usize {
        self.labels[..v].iter().map(|l| l.degree()).sum()
    }

    /// Internal label differential plus the edge-expanding part. Terms are
    /// returned with their own vertex-by-vertex orientation.
    pub fn differential(&self) -> Vec<(i64, LabelledGraph<L>)> {
        self.differential_parts()
            .into_iter()
            .map(|t| (t.sign, t.term))
            .collect()
    }

    /// The differential term by term, recording where each term comes from.
    pub fn differential_parts(&self) -> Vec<DifferentialTerm<L>> {
        let mut out = Vec::new();
        let sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
        for v in 0..self.labels.len() {
            let off = self.offset(v);
            for (s, l) in self.labels[v].differential() {
                let mut labels = self.labels.clone();
                labels[v] = l;
                let term = LabelledGraph {
                    graph: self.graph.clone(),
                    labels,
                };
                out.push(DifferentialTerm {
                    vertex: v,
                    expanding: false,
                    sign: sign(off) * s,
                    term,
                });
            }
            let n = self.graph.num_half_edges();
            if n + 2 > MAX_HALF_EDGES {
                continue;
            }
            for dec in self.labels[v].decompositions(n as u32, n as u32 + 1) {
                let side: Vec<usize> = bits(dec.side).map(|b| b as usize).collect();
                let (g2, x, y) = self
                    .graph
                    .split_vertex(v, &side)
                    .expect("label splits are valid vertex splits");
                let (vx, vy) = (g2.vertex_of(x), g2.vertex_of(y));
                let new_vertex = |w: usize| g2.vertex_of(self.graph.half_edges_at(w)[0]);
                let mut labels: Vec<Option<L>> = vec![None; g2.num_vertices()];
                for (w, l) in self.labels.iter().enumerate() {
                    if w != v {
                        labels[new_vertex(w)] = Some(l.clone());
                    }
                }
                labels[vx] = Some(dec.outer.clone());
                labels[vy] = Some(dec.inner.clone());
                let mut order = Vec::with_capacity(self.degree() - 1);
                for (w, l) in self.labels.iter().enumerate() {
                    if w == v {
                        order.extend(
                            dec.images
                                .iter()
                                .map(|&(inner, k)| if inner { (vy, k) } else { (vx, k) }),
                        );
                    } else {
                        order.extend((0..l.degree()).map(|k| (new_vertex(w), k)));
                    }
                }
                let s = sign(off + dec.position) * i64::from(parity_of_sorting(&order));
                let labels = labels
                    .into_iter()
                    .map(|l| l.expect("every vertex labelled"))
                    .collect();
                let term = LabelledGraph { graph: g2, labels };
                out.push(DifferentialTerm {
                    vertex: v,
                    expanding: true,
                    sign: s,
                    term,
                });
            }
        }
        out
    }
}

impl LabelledGraph<SplitTree> {
    /// Every vertex labelled by a corolla.
    pub fn corollas(graph: Graph) -> Result<Self, ModuliError> {
        let labels = (0..graph.num_vertices())
            .map(|v| SplitTree::corolla(mask(graph.half_edges_at(v))))
            .collect();
        Self::new(graph, labels)
    }

    /// Labels allowed at vertex `v`: marked loops must stay loops after expansion.
    pub fn vertex_basis(graph: &Graph, v: usize) -> Vec<SplitTree> {
        let loops: Vec<u64> = graph
            .tori()
            .keys()
            .filter(|&&h| graph.vertex_of(h) == v)
            .map(|&h| 1u64 << h | 1u64 << graph.partner(h))
            .collect();
        SplitTree::basis(mask(graph.half_edges_at(v)))
            .into_iter()
            .filter(|t| {
                t.splits()
                    .iter()
                    .all(|&s| loops.iter().all(|&l| s & l == 0 || s & l == l))
            })
            .collect()
    }

    /// Replaces every label by its tree, returning the expanded graph and the
    /// new edges in the orientation order.
    pub fn expand(&self) -> (Graph, Vec<usize>) {
        let g = &self.graph;
        let mut pair = g.pairing().to_vec();
        let mut vertex_of = g.vertex_map().to_vec();
        let mut next_vertex = g.num_vertices();
        let mut forest = Vec::new();
        for (v, label) in self.labels.iter().enumerate() {
            let splits = label.splits();
            let node: Vec<usize> = splits
                .iter()
                .map(|_| {
                    next_vertex += 1;
                    next_vertex - 1
                })
                .collect();
            let home = |set: u64, skip: Option<usize>| -> usize {
                (0..splits.len())
                    .filter(|&j| Some(j) != skip && splits[j] & set == set)
                    .min_by_key(|&j| splits[j].count_ones())
                    .map_or(v, |j| node[j])
            };
            for &h in g.half_edges_at(v) {
                vertex_of[h] = home(1u64 << h, None);
            }
            for (j, &s) in splits.iter().enumerate() {
                let a = pair.len();
                pair.extend([a + 1, a]);
                vertex_of.push(home(s, Some(j)));
                vertex_of.push(node[j]);
                forest.push(a);
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (h, &v) in vertex_of.iter().enumerate() {
            blocks.entry(v).or_default().push(h);
        }
        let graph = Graph::build(
            pair,
            blocks.into_values().collect(),
            g.ports().iter().map(|(&h, &p)| (h, p)),
            g.tori().iter().map(|(&h, &t)| (h, t)),
            g.allows_bivalent(),
        )
        .expect("expanding a label keeps valences at least three");
        (graph, forest)
    }

    /// The forested cell this element is identified with, and the sign relating them.
    pub fn cell(&self) -> Option<(i64, ForestedCell)> {
        let (g, ordering) = self.expand();
        canonical_cell(&g, &ordering)
    }

    /// Contracts the forest of a cell, recording each forest tree as a vertex label.
    /// Returns the element and the sign relating its orientation to the cell's.
    pub fn from_cell(cell: &ForestedCell) -> Result<(i64, Self), ModuliError> {
        let g = cell.graph();
        let forest = cell.forest().edges();
        let (contracted, map) = g.collapse_forest_with_map(cell.forest())?;
        let in_forest: BTreeSet<usize> = forest.iter().flat_map(|&e| [e, g.partner(e)]).collect();
        let mut uf = UnionFind::new(g.num_vertices());
        for &e in forest {
            uf.union(g.vertex_of(e), g.vertex_of(g.partner(e)));
        }
        let mut outer_rep: BTreeMap<usize, usize> = BTreeMap::new();
        for h in 0..g.num_half_edges() {
            if !in_forest.contains(&h) {
                outer_rep.entry(uf.find(g.vertex_of(h))).or_insert(h);
            }
        }
        let mut splits: Vec<Vec<u64>> = vec![Vec::new(); contracted.num_vertices()];
        let mut order_sides = Vec::with_capacity(forest.len());
        for &f in forest {
            // vertices reachable from one end of f through the other forest edges
            let mut seen = BTreeSet::from([g.vertex_of(f)]);
            let mut stack = vec![g.vertex_of(f)];
            while let Some(u) = stack.pop() {
                for &h in g.half_edges_at(u) {
                    if in_forest.contains(&h) && h != f && h != g.partner(f) {
                        let w = g.vertex_of(g.partner(h));
                        if seen.insert(w) {
                            stack.push(w);
                        }
                    }
                }
            }
            let side = seen
                .iter()
                .flat_map(|&u| g.half_edges_at(u).iter().copied())
                .filter(|h| !in_forest.contains(h))
                .fold(0u64, |acc, h| {
                    acc | 1u64 << map[h].expect("non-forest half-edges survive")
                });
            let w = contracted.vertex_of(map[outer_rep[&uf.find(g.vertex_of(f))]].expect("kept"));
            splits[w].push(side);
            order_sides.push((w, side));
        }
        let labels: Vec<SplitTree> = (0..contracted.num_vertices())
            .map(|w| {
                SplitTree::new(mask(contracted.half_edges_at(w)), splits[w].iter().copied())
                    .expect("forest trees give laminar splits")
            })
            .collect();
        let order: Vec<(usize, usize)> = order_sides
            .iter()
            .map(|&(w, side)| {
                let u = labels[w].universe();
                let norm = if side & (u & u.wrapping_neg()) != 0 {
                    u & !side
                } else {
                    side
                };
                (
                    w,
                    labels[w]
                        .splits()
                        .binary_search(&norm)
                        .expect("split present"),
                )
            })
            .collect();
        let elem = LabelledGraph::new(contracted, labels)?;
        Ok((i64::from(parity_of_sorting(&order)), elem))
    }
}

impl fmt::Display for LabelledGraph<SplitTree> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\tL=", self.graph)?;
        let mut first = true;
        for (v, l) in self.labels.iter().enumerate() {
            if l.degree() == 0 {
                continue;
            }
            if !first {
                f.write_str(";")?;
            }
            first = false;
            let parts: Vec<String> = l
                .splits()
                .iter()
                .map(|&s| bits(s).map(|b| b.to_string()).collect::<Vec<_>>().join(","))
                .collect();
            write!(f, "{v}:{}", parts.join("|"))?;
        }
        Ok(())
    }
}

/// Generators of the labelled complex, keyed by their forested cell. Each
/// value is a representative element `e` with `e = sign * [cell]`.
pub fn labelled_generators(
    p: &BoundaryProfile,
) -> Result<BTreeMap<ForestedCell, (i64, LabelledGraph<SplitTree>)>, ModuliError> {
    generators(p)
}

fn generators(
    p: &BoundaryProfile,
) -> Result<BTreeMap<ForestedCell, (i64, LabelledGraph<SplitTree>)>, ModuliError> {
    let graphs = graphs_of_profile(p)?;
    let per_graph: Vec<Vec<(ForestedCell, (i64, LabelledGraph<SplitTree>))>> = graphs
        .par_iter()
        .map(|g| {
            let choices: Vec<Vec<SplitTree>> = (0..g.num_vertices())
                .map(|v| LabelledGraph::vertex_basis(g, v))
                .collect();
            let mut out = Vec::new();
            let mut idx = vec![0usize; choices.len()];
            loop {
                let labels = idx
                    .iter()
                    .enumerate()
                    .map(|(v, &i)| choices[v][i].clone())
                    .collect();
                let e = LabelledGraph {
                    graph: g.clone(),
                    labels,
                };
                if let Some((s, c)) = e.cell() {
                    out.push((c, (s, e)));
                }
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < choices[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
            out
        })
        .collect();
    let mut map = BTreeMap::new();
    for (c, v) in per_graph.into_iter().flatten() {
        map.entry(c).or_insert(v);
    }
    Ok(map)
}

/// Differential of a generator `[cell]`, computed on labels and re-expressed in cells.
fn labelled_boundary(rep: &(i64, LabelledGraph<SplitTree>)) -> Chain {
    let (s_rep, e) = rep;
    let mut out = Chain::new();
    for (t, term) in e.differential() {
        if let Some((s, c)) = term.cell() {
            add_term(&mut out, c, s_rep * t * s);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Tagged(ForestedCell, String);

impl fmt::Display for Tagged {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.1)
    }
}

/// The Bar(Comm)-labelled graph complex of profile `p`, graded by label degree.
pub fn generalized_cobar(p: &BoundaryProfile) -> Result<GradedChainComplex, ModuliError> {
    let gens = generators(p)?;
    let tags: BTreeMap<ForestedCell, Tagged> = gens
        .iter()
        .map(|(c, (_, e))| (c.clone(), Tagged(c.clone(), e.to_string())))
        .collect();
    let boundaries: BTreeMap<ForestedCell, Chain> = gens
        .par_iter()
        .map(|(c, r)| (c.clone(), labelled_boundary(r)))
        .collect();
    let basis = tags
        .values()
        .map(|t| (t.0.dimension() as i64, t.clone()))
        .collect();
    Ok(assemble_complex(basis, |t: &Tagged| {
        boundaries[&t.0]
            .iter()
            .map(|(c, &v)| (v, tags[c].clone()))
            .collect()
    })?)
}

/// Outcome of comparing the forested-graph complex with the labelled one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoReport {
    pub cells_by_degree: BTreeMap<usize, usize>,
    pub generators_by_degree: BTreeMap<usize, usize>,
    pub basis_mismatches: Vec<String>,
    pub sign_mismatches: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.basis_mismatches.is_empty() && self.sign_mismatches.is_empty()
    }
}

/// Contracts forests into labels and checks this is a degreewise bijection
/// intertwining the two differentials, signs included.
pub fn forest_cobar_iso(p: &BoundaryProfile) -> Result<IsoReport, ModuliError> {
    let cells = enumerate_cells(p)?;
    let gens = generators(p)?;
    let mut report = IsoReport::default();
    for c in &cells {
        *report.cells_by_degree.entry(c.dimension()).or_insert(0) += 1;
    }
    for c in gens.keys() {
        *report
            .generators_by_degree
            .entry(c.dimension())
            .or_insert(0) += 1;
    }
    // phi([c]) = sigma(c) * [c] after transporting through labels
    let mut sigma: BTreeMap<ForestedCell, i64> = BTreeMap::new();
    for c in &cells {
        let (s_order, e) = LabelledGraph::from_cell(c)?;
        match e.cell() {
            Some((s_key, key)) if key == *c && gens.contains_key(c) => {
                sigma.insert(c.clone(), s_order * s_key);
            }
            Some((_, key)) => report.basis_mismatches.push(format!("{c} maps to {key}")),
            None => report
                .basis_mismatches
                .push(format!("{c} maps to a vanishing element")),
        }
    }
    for c in gens.keys() {
        if !sigma.contains_key(c) {
            report
                .basis_mismatches
                .push(format!("generator {c} is not hit"));
        }
    }
    if !report.basis_mismatches.is_empty() {
        return Ok(report);
    }
    let mismatches: Vec<String> = cells
        .par_iter()
        .filter_map(|c| {
            let dx = c.boundary();
            let dg = labelled_boundary(&gens[c]);
            let keys: BTreeSet<&ForestedCell> = dx.keys().chain(dg.keys()).collect();
            for k in keys {
                let lhs = dg.get(k).copied().unwrap_or(0) * sigma[c];
                let rhs = sigma[k] * dx.get(k).copied().unwrap_or(0);
                if lhs != rhs {
                    return Some(format!("{c} -> {k}: labelled {lhs}, forested {rhs}"));
                }
            }
            None
        })
        .collect();
    report.sign_mismatches = mismatches;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_small_profiles() {
        for (g, e, t) in [(0, 4, 0), (1, 1, 0), (1, 2, 0), (0, 1, 1)] {
            let r = forest_cobar_iso(&BoundaryProfile::from_triple(g, e, t)).unwrap();
            assert!(r.passed(), "{:?}", r);
            assert_eq!(r.cells_by_degree, r.generators_by_degree);
        }
    }

    #[test]
    fn tree_profile_matches_cobar_bar() {
        let g = generalized_cobar(&BoundaryProfile::from_triple(0, 4, 0)).unwrap();
        let c = crate::operad::cobar_bar_complex(3).unwrap();
        assert_eq!((g.dim(0), g.dim(1)), (c.dim(0), c.dim(1)));
        assert_eq!(g.betti().unwrap(), c.betti().unwrap());
    }

    #[test]
    fn differential_squares_to_zero() {
        let g = generalized_cobar(&BoundaryProfile::from_triple(1, 2, 0)).unwrap();
        assert!(g.verify_dd_zero().passed());
    }
}
