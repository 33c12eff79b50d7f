//! Bonnets: a vertex carrying one boundary torus plus incoming open legs.

use std::collections::{BTreeMap, BTreeSet};

use super::{glue_cells, labelled_generators, LabelledGraph, ModuliError};
use crate::graph::{shapes, BoundaryProfile, Graph, Port};
use crate::operad::{CooperadLabel, SplitTree};

/// One vertex with a marked loop (outgoing torus) and `n` incoming legs.
pub fn bonnet_graph(n: usize) -> Graph {
    shapes::bonnet(n)
}

/// `k` incoming open legs and one outgoing torus, genus zero otherwise.
pub fn bonnet_profile(k: usize) -> BoundaryProfile {
    BoundaryProfile {
        g: 0,
        e_in: k,
        e_out: 0,
        t_in: 0,
        t_out: 1,
    }
}

fn base_vertex(g: &Graph) -> Option<usize> {
    g.tori().keys().next().map(|&h| g.vertex_of(h))
}

/// Number of non-loop half-edges at the torus vertex.
pub fn bonnet_degree(e: &LabelledGraph<SplitTree>) -> Option<usize> {
    let g = e.graph();
    base_vertex(g).map(|v| g.valence(v) - 2)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BonnetFiltrationReport {
    pub generators_by_degree: BTreeMap<usize, usize>,
    /// Terms by (source degree, target degree).
    pub transitions: BTreeMap<(usize, usize), usize>,
    pub violations: Vec<String>,
}

impl BonnetFiltrationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks on every generator of `bonnet_profile(k)` that the differential
/// never raises the bonnet degree, that splitting the torus vertex lowers it,
/// and that every other term keeps it.
pub fn bonnet_filtration(k: usize) -> Result<BonnetFiltrationReport, ModuliError> {
    let mut report = BonnetFiltrationReport::default();
    for (cell, (_, e)) in labelled_generators(&bonnet_profile(k))? {
        let n = bonnet_degree(&e).expect("bonnet profile has a torus");
        *report.generators_by_degree.entry(n).or_insert(0) += 1;
        let base = base_vertex(e.graph()).expect("torus");
        for t in e.differential_parts() {
            let m = bonnet_degree(&t.term).expect("torus survives");
            *report.transitions.entry((n, m)).or_insert(0) += 1;
            let ok = if t.expanding && t.vertex == base {
                m < n
            } else {
                m == n
            };
            if !ok {
                report.violations.push(format!(
                    "{cell}: degree {n} -> {m} (vertex {}, expanding {})",
                    t.vertex, t.expanding
                ));
            }
        }
    }
    Ok(report)
}

/// Sub-graph on `vertices`; each half-edge in `cuts` loses its partner and
/// gets a fresh leaf with the given label instead.
fn restrict(
    e: &LabelledGraph<SplitTree>,
    vertices: &BTreeSet<usize>,
    cuts: &[(usize, Port)],
) -> Result<LabelledGraph<SplitTree>, ModuliError> {
    let g = e.graph();
    let kept: Vec<usize> = (0..g.num_half_edges())
        .filter(|&h| vertices.contains(&g.vertex_of(h)))
        .collect();
    let idx: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let cut_at: BTreeMap<usize, usize> = cuts
        .iter()
        .enumerate()
        .map(|(c, &(h, _))| (h, kept.len() + c))
        .collect();
    let mut pair: Vec<usize> = kept
        .iter()
        .map(|&h| {
            cut_at
                .get(&h)
                .copied()
                .unwrap_or_else(|| idx[&g.partner(h)])
        })
        .collect();
    let mut blocks: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&v| g.half_edges_at(v).iter().map(|h| idx[h]).collect())
        .collect();
    let mut ports: Vec<(usize, Port)> = g
        .ports()
        .iter()
        .filter(|(h, _)| idx.contains_key(h))
        .map(|(h, &p)| (idx[h], p))
        .collect();
    for &(h, port) in cuts {
        let leaf = pair.len();
        pair.push(idx[&h]);
        blocks.push(vec![leaf]);
        ports.push((leaf, port));
    }
    let tori = g
        .tori()
        .iter()
        .filter(|(h, _)| idx.contains_key(h))
        .map(|(h, &t)| (idx[h], t));
    let sub = Graph::build(pair, blocks, ports, tori, g.allows_bivalent())?;
    let labels = (0..sub.num_vertices())
        .map(|w| {
            let rep = sub.half_edges_at(w)[0];
            if rep < kept.len() {
                e.labels()[g.vertex_of(kept[rep])].relabel(&|b| idx[&(b as usize)] as u32)
            } else {
                SplitTree::corolla(1u64 << rep)
            }
        })
        .collect();
    LabelledGraph::new(sub, labels)
}

/// Cuts every generator of `bonnet_profile(k)` into its open part and the
/// labelled bonnet at the torus vertex, glues them back, and lists every
/// generator that is not recovered.
pub fn bonnet_decomposition_failures(k: usize) -> Result<Vec<String>, ModuliError> {
    let mut failures = Vec::new();
    for (cell, (_, e)) in labelled_generators(&bonnet_profile(k))? {
        let g = e.graph();
        let base = base_vertex(g).expect("torus");
        let loop_half_edges: BTreeSet<usize> =
            g.tori().keys().flat_map(|&h| [h, g.partner(h)]).collect();
        let legs: Vec<usize> = g
            .half_edges_at(base)
            .iter()
            .copied()
            .filter(|h| !loop_half_edges.contains(h))
            .collect();
        let open_vertices: BTreeSet<usize> = (0..g.num_vertices()).filter(|&v| v != base).collect();
        let open_cuts: Vec<(usize, Port)> = legs
            .iter()
            .enumerate()
            .map(|(i, &h)| (g.partner(h), Port::Out(i as u32 + 1)))
            .collect();
        let bonnet_cuts: Vec<(usize, Port)> = legs
            .iter()
            .enumerate()
            .map(|(i, &h)| (h, Port::In(i as u32 + 1)))
            .collect();
        let open = restrict(&e, &open_vertices, &open_cuts)?;
        let bonnet = restrict(&e, &BTreeSet::from([base]), &bonnet_cuts)?;
        let recovered = match (open.cell(), bonnet.cell()) {
            (Some((_, a)), Some((_, b))) => glue_cells(&a, &b)?.map(|(_, c)| c),
            _ => None,
        };
        if recovered.as_ref() != Some(&cell) {
            failures.push(format!("{cell}: gluing gave {recovered:?}"));
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::{canonical_cell, ForestedCell};

    #[test]
    fn bonnet_shapes() {
        let b1 = bonnet_graph(1);
        assert_eq!((b1.genus(), b1.profile().e()), (1, 1));
        let b3 = bonnet_graph(3);
        assert_eq!((b3.genus(), b3.profile().e(), b3.valence(0)), (1, 3, 5));
    }

    #[test]
    fn trivial_bonnet_has_zero_boundary() {
        let b0 = bonnet_graph(0);
        assert!(b0.allows_bivalent());
        let (_, c): (i64, ForestedCell) = canonical_cell(&b0, &[]).unwrap();
        assert!(c.boundary().is_empty());
    }

    #[test]
    fn filtration_and_decomposition() {
        for k in 1..=3 {
            let r = bonnet_filtration(k).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
            assert!(bonnet_decomposition_failures(k).unwrap().is_empty());
        }
    }
}
