//! Forested graphs and the cube complex they span, the Bar(Comm)-labelled
//! graph complex, the comparison between the two, gluing, and bonnets.
//!
//! A cell is a graph with an admissible forest. Its orientation is an
//! ordering of the forest edges; a [`ForestedCell`] always stores the
//! canonical graph and the sorted canonical edge names, so a signed chain is
//! a map from cells to integers.

mod bonnet;
mod glue;
mod labelled;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{
    graphs_of_profile, parity_of_sorting, permutation_parity, BoundaryProfile, Forest, Graph,
    GraphError,
};
use crate::linalg::{assemble_complex, GradedChainComplex, LinalgError};

pub use bonnet::{
    bonnet_decomposition_failures, bonnet_degree, bonnet_filtration, bonnet_graph, bonnet_profile,
    BonnetFiltrationReport,
};
pub use glue::{glue_cells, glue_chains, identity_cell};
pub use labelled::{
    forest_cobar_iso, generalized_cobar, labelled_generators, DifferentialTerm, IsoReport,
    LabelledGraph,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cannot glue: outgoing boundary {left} does not match incoming boundary {right}")]
    ProfileMismatch { left: String, right: String },
    #[error("graph has {0} half-edges; at most 62 are supported for labels")]
    TooLarge(usize),
}

/// A canonical forested graph. Cells whose automorphisms reverse their
/// orientation are zero and are never constructed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestedCell {
    graph: Graph,
    forest: Forest,
}

pub type Chain = BTreeMap<ForestedCell, i64>;

pub(crate) fn add_term(chain: &mut Chain, cell: ForestedCell, coeff: i64) {
    let entry = chain.entry(cell.clone()).or_insert(0);
    *entry += coeff;
    if *entry == 0 {
        chain.remove(&cell);
    }
}

/// Canonical form of `(g, ordering)` where `ordering` lists forest edges in
/// orientation order. Returns `None` when some automorphism of the forested
/// graph permutes the forest edges oddly (the cell is then zero).
pub fn canonical_cell(g: &Graph, ordering: &[usize]) -> Option<(i64, ForestedCell)> {
    let ordering: Vec<usize> = ordering.iter().map(|&e| e.min(g.partner(e))).collect();
    let lab = g.labeling_with(&ordering);
    // parity is a homomorphism, so generators decide it
    for aut in &lab.generators {
        let image: Vec<usize> = ordering
            .iter()
            .map(|&e| {
                let t = aut[e].min(aut[g.partner(e)]);
                ordering
                    .iter()
                    .position(|&f| f == t)
                    .expect("automorphisms preserve the forest")
            })
            .collect();
        if permutation_parity(&image) < 0 {
            return None;
        }
    }
    let graph = g.relabel(&lab.perm);
    let mapped: Vec<usize> = ordering
        .iter()
        .map(|&e| lab.perm[e].min(lab.perm[g.partner(e)]))
        .collect();
    let sign = i64::from(parity_of_sorting(&mapped));
    Some((
        sign,
        ForestedCell {
            graph,
            forest: Forest::new(mapped),
        },
    ))
}

impl ForestedCell {
    pub fn dimension(&self) -> usize {
        self.forest.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn forest(&self) -> &Forest {
        &self.forest
    }

    /// Canonicalizes an arbitrary forested graph, oriented by the sorted forest.
    pub fn new(g: &Graph, forest: &Forest) -> Option<(i64, ForestedCell)> {
        canonical_cell(g, forest.edges())
    }

    /// Both face types: contract a forest edge, or drop it from the forest.
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::new();
        let edges = self.forest.edges();
        for (i, &e) in edges.iter().enumerate() {
            let pos = if i % 2 == 0 { 1 } else { -1 };
            let (contracted, map) = self
                .graph
                .collapse_edge_with_map(e)
                .expect("forest edges are collapsible");
            let rest: Vec<usize> = edges
                .iter()
                .filter(|&&f| f != e)
                .map(|&f| map[f].expect("kept"))
                .collect();
            if let Some((s, c)) = canonical_cell(&contracted, &rest) {
                add_term(&mut out, c, pos * s);
            }
            let rest: Vec<usize> = edges.iter().copied().filter(|&f| f != e).collect();
            if let Some((s, c)) = canonical_cell(&self.graph, &rest) {
                add_term(&mut out, c, pos * s);
            }
        }
        out
    }

    /// Graph with the forest contracted.
    pub fn contracted(&self) -> Graph {
        self.graph
            .collapse_forest(&self.forest)
            .expect("admissible forest")
    }
}

impl fmt::Display for ForestedCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.forest.edges().iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "{}\tF={}\tdim={}",
            self.graph,
            edges.join(","),
            self.dimension()
        )
    }
}

/// The boundary of a cell as a signed chain.
pub fn cell_boundary(c: &ForestedCell) -> Chain {
    c.boundary()
}

/// Every non-vanishing cell of the profile, by dimension and then text form.
pub fn enumerate_cells(p: &BoundaryProfile) -> Result<Vec<ForestedCell>, ModuliError> {
    let graphs = graphs_of_profile(p)?;
    let cells: BTreeSet<ForestedCell> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            g.admissible_forests()
                .into_iter()
                .filter_map(move |f| canonical_cell(g, f.edges()).map(|(_, c)| c))
        })
        .collect();
    let mut cells: Vec<ForestedCell> = cells.into_iter().collect();
    cells.sort_by_cached_key(|c| (c.dimension(), c.to_string()));
    Ok(cells)
}

/// Cellular chains of the moduli quotient for profile `p`.
pub fn xv_complex(p: &BoundaryProfile) -> Result<GradedChainComplex, ModuliError> {
    let cells = enumerate_cells(p)?;
    let boundaries: BTreeMap<ForestedCell, Chain> = cells
        .par_iter()
        .map(|c| (c.clone(), c.boundary()))
        .collect();
    let basis = cells
        .into_iter()
        .map(|c| (c.dimension() as i64, c))
        .collect();
    Ok(assemble_complex(basis, |c: &ForestedCell| {
        boundaries[c].iter().map(|(k, &v)| (v, k.clone())).collect()
    })?)
}

/// One line per cell: graph literal, forest edges, dimension.
pub fn cell_dump(cells: &[ForestedCell]) -> String {
    cells.iter().map(|c| format!("{c}\n")).collect()
}

/// Cells up to `max_forest` forest edges, for every profile in `profiles`.
pub fn small_cells(
    profiles: &[BoundaryProfile],
    max_forest: usize,
) -> Result<Vec<ForestedCell>, ModuliError> {
    let mut out = Vec::new();
    for p in profiles {
        out.extend(
            enumerate_cells(p)?
                .into_iter()
                .filter(|c| c.dimension() <= max_forest),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shapes::*;
    use crate::graph::Port;

    fn profile(g: usize, e: usize, t: usize) -> BoundaryProfile {
        BoundaryProfile::from_triple(g, e, t)
    }

    #[test]
    fn cell_counts() {
        let c = enumerate_cells(&profile(1, 1, 0)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].dimension(), 0);
        let c = enumerate_cells(&profile(0, 4, 0)).unwrap();
        assert_eq!(c.iter().filter(|c| c.dimension() == 0).count(), 4);
        assert_eq!(c.iter().filter(|c| c.dimension() == 1).count(), 3);
    }

    #[test]
    fn small_homology() {
        assert_eq!(
            xv_complex(&profile(0, 3, 0)).unwrap().betti().unwrap(),
            vec![(0, 1)]
        );
        assert_eq!(
            xv_complex(&profile(1, 1, 0)).unwrap().betti().unwrap(),
            vec![(0, 1)]
        );
        assert_eq!(
            xv_complex(&profile(0, 4, 0)).unwrap().betti().unwrap(),
            vec![(0, 1), (1, 0)]
        );
    }

    #[test]
    fn tree_cell_boundary() {
        let t = two_vertex_tree([Port::In(1), Port::In(2), Port::In(3), Port::Out(1)]);
        let (_, cell) = ForestedCell::new(&t, &Forest::new(vec![2])).unwrap();
        let b = cell.boundary();
        assert_eq!(b.len(), 2);
        assert!(b.keys().all(|c| c.dimension() == 0));
        let empty = ForestedCell::new(&t, &Forest::empty()).unwrap().1;
        assert!(empty.boundary().is_empty());
    }

    #[test]
    fn theta_single_edge_forest_survives() {
        let g = theta();
        let (_, c) = ForestedCell::new(&g, &Forest::new(vec![0])).unwrap();
        assert_eq!(c.dimension(), 1);
        // two parallel edges form a cycle
        assert!(!g.is_admissible_forest(&[0, 1]));
    }

    #[test]
    fn swapped_forest_edges_vanish() {
        // centre with an out leg and two stems, each ending in a vertex with an unmarked loop;
        // swapping the two stems reverses the forest {stem1, stem2}
        let pair = vec![9, 3, 6, 1, 5, 4, 2, 8, 7, 0];
        let vertices = vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8], vec![9]];
        let g = Graph::build(pair, vertices, [(9, Port::Out(1))], [], false).unwrap();
        assert!(g.is_admissible_forest(&[1, 2]));
        assert!(ForestedCell::new(&g, &Forest::new(vec![1, 2])).is_none());
        assert!(ForestedCell::new(&g, &Forest::new(vec![1])).is_some());
    }
}
