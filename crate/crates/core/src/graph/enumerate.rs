//! Enumeration of all graphs with a given boundary profile.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{BoundaryProfile, Graph, GraphError};

impl Graph {
    /// Splits vertex `v`: the half-edges in `side` move to a new vertex joined
    /// to `v` by a new edge. Returns the graph and the new half-edges `(x, y)`,
    /// with `x` at `v` and `y` at the new vertex.
    pub fn split_vertex(
        &self,
        v: usize,
        side: &[usize],
    ) -> Result<(Graph, usize, usize), GraphError> {
        let side: BTreeSet<usize> = side.iter().copied().collect();
        let at_v = self.half_edges_at(v);
        if side.iter().any(|h| !at_v.contains(h)) {
            return Err(GraphError::BadPartition(
                *side.iter().find(|h| !at_v.contains(h)).expect("exists"),
            ));
        }
        let stay = at_v.len() - side.len();
        for (vertex, size) in [(v, stay + 1), (self.num_vertices(), side.len() + 1)] {
            if size < 3 {
                return Err(GraphError::Valence {
                    vertex,
                    valence: size,
                });
            }
        }
        for &h in self.tori().keys() {
            if side.contains(&h) != side.contains(&self.partner(h)) {
                return Err(GraphError::TorusNotLoop(h));
            }
        }
        let n = self.num_half_edges();
        let (x, y) = (n, n + 1);
        let mut pair = self.pairing().to_vec();
        pair.extend([y, x]);
        let new_vertex = self.num_vertices();
        let mut vertex_of = self.vertex_map().to_vec();
        for &h in &side {
            vertex_of[h] = new_vertex;
        }
        vertex_of.extend([v, new_vertex]);
        let g = Graph::assemble(
            pair,
            vertex_of,
            self.ports().clone(),
            self.tori().clone(),
            self.allows_bivalent(),
        );
        Ok((g, x, y))
    }

    /// All splits of all vertices, each yielding valence at least three on both sides.
    fn all_splits(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        for v in 0..self.num_vertices() {
            let hs = self.half_edges_at(v);
            let k = hs.len();
            if k < 4 {
                continue;
            }
            // the new vertex never receives hs[0], so each unordered split is seen once
            for mask in 1u64..(1u64 << (k - 1)) {
                let side: Vec<usize> = (1..k)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .map(|i| hs[i])
                    .collect();
                if side.len() < 2 || k - side.len() < 2 {
                    continue;
                }
                if let Ok((g, _, _)) = self.split_vertex(v, &side) {
                    out.push(g);
                }
            }
        }
        out
    }
}

/// Seed graph: one vertex carrying every loop and every leg.
fn rose(p: &BoundaryProfile) -> Result<Graph, GraphError> {
    let loops = p.genus();
    let legs = p.e();
    let n = 2 * loops + 2 * legs;
    let mut pair = vec![0; n];
    for l in 0..loops {
        pair[2 * l] = 2 * l + 1;
        pair[2 * l + 1] = 2 * l;
    }
    let base = 2 * loops;
    for i in 0..legs {
        pair[base + i] = base + legs + i;
        pair[base + legs + i] = base + i;
    }
    let mut vertices = vec![(0..base + legs).collect::<Vec<_>>()];
    vertices.extend((0..legs).map(|i| vec![base + legs + i]));
    let ports = p
        .ports()
        .into_iter()
        .enumerate()
        .map(|(i, port)| (base + legs + i, port));
    let tori = p
        .torus_ports()
        .into_iter()
        .enumerate()
        .map(|(l, t)| (2 * l, t));
    Graph::build(pair, vertices, ports, tori, false)
}

fn acceptable(g: &Graph) -> bool {
    let mut counts = BTreeMap::new();
    for &h in g.tori().keys() {
        *counts.entry(g.vertex_of(h)).or_insert(0) += 1;
    }
    counts.values().all(|&c| c <= 1)
}

/// Canonical representatives of every connected graph with the given profile
/// whose non-leaf vertices have valence at least three and whose base vertices
/// each carry a single marked loop. Sorted by number of vertices, then literal.
pub fn graphs_of_profile(p: &BoundaryProfile) -> Result<Vec<Graph>, GraphError> {
    p.check_admissible()?;
    let seed = rose(p)?.canonicalize().0;
    let mut seen: HashSet<Graph> = HashSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in g.all_splits() {
                let c = s.canonicalize().0;
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Graph> = seen.into_iter().filter(acceptable).collect();
    out.sort_by_cached_key(|g| (g.num_vertices(), g.to_string()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: usize, e: usize, t: usize) -> usize {
        graphs_of_profile(&BoundaryProfile::from_triple(g, e, t))
            .unwrap()
            .len()
    }

    #[test]
    fn labelled_trees() {
        // corolla plus the three binary trees
        assert_eq!(count(0, 4, 0), 4);
        // 1 + 10 + 15 planar-free trees with 5 labelled leaves
        assert_eq!(count(0, 5, 0), 26);
        assert_eq!(count(0, 3, 0), 1);
    }

    #[test]
    fn genus_one_one_leg() {
        // loop with tail only
        assert_eq!(count(1, 1, 0), 1);
    }

    #[test]
    fn bonnet_family() {
        assert_eq!(count(0, 1, 1), 1);
        assert!(count(0, 2, 1) >= 2);
    }

    #[test]
    fn degenerate_profiles_rejected() {
        assert!(graphs_of_profile(&BoundaryProfile::from_triple(2, 0, 0)).is_err());
        assert!(graphs_of_profile(&BoundaryProfile::from_triple(0, 2, 0)).is_err());
    }

    #[test]
    fn every_graph_has_the_profile() {
        let p = BoundaryProfile::from_triple(1, 2, 1);
        for g in graphs_of_profile(&p).unwrap() {
            assert_eq!(g.profile(), p);
            assert!(g.is_connected());
        }
    }
}
