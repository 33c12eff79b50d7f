//! Composition of forested cells along boundary edges.

use std::collections::BTreeMap;

use super::{add_term, canonical_cell, Chain, ForestedCell, ModuliError};
use crate::graph::{Graph, Port, TorusPort};

fn leaf_of(g: &Graph, port: Port) -> usize {
    *g.ports()
        .iter()
        .find(|(_, &p)| p == port)
        .expect("label present")
        .0
}

/// The cell of `m` parallel boundary edges `In(i) -> Out(i)`.
pub fn identity_cell(m: usize) -> ForestedCell {
    let pair: Vec<usize> = (0..2 * m).map(|h| h ^ 1).collect();
    let vertices = (0..2 * m).map(|h| vec![h]).collect();
    let ports = (0..m).flat_map(|i| {
        [
            (2 * i, Port::In(i as u32 + 1)),
            (2 * i + 1, Port::Out(i as u32 + 1)),
        ]
    });
    let g = Graph::build(pair, vertices, ports, [], false).expect("identity edges");
    canonical_cell(&g, &[]).expect("no forest").1
}

/// Glues each outgoing edge `Out(j)` of `a` to the incoming edge `In(j)` of `b`.
/// Forests are concatenated, `a`'s edges first; incoming tori of `b` are
/// renumbered after those of `a`, likewise outgoing ones. Returns `None` when
/// the composite cell vanishes.
pub fn glue_cells(
    a: &ForestedCell,
    b: &ForestedCell,
) -> Result<Option<(i64, ForestedCell)>, ModuliError> {
    let (pa, pb) = (a.graph().profile(), b.graph().profile());
    if pa.e_out != pb.e_in {
        return Err(ModuliError::ProfileMismatch {
            left: pa.to_string(),
            right: pb.to_string(),
        });
    }
    let (ga, gb) = (a.graph(), b.graph());
    let ha = ga.num_half_edges();
    let mut removed = vec![false; ha + gb.num_half_edges()];
    let mut pair: Vec<usize> = ga
        .pairing()
        .iter()
        .copied()
        .chain(gb.pairing().iter().map(|&p| p + ha))
        .collect();
    for j in 1..=pa.e_out as u32 {
        let la = leaf_of(ga, Port::Out(j));
        let lb = leaf_of(gb, Port::In(j)) + ha;
        let (xa, xb) = (pair[la], pair[lb]);
        pair[xa] = xb;
        pair[xb] = xa;
        removed[la] = true;
        removed[lb] = true;
    }
    let mut index = vec![usize::MAX; removed.len()];
    let mut next = 0;
    for h in 0..removed.len() {
        if !removed[h] {
            index[h] = next;
            next += 1;
        }
    }
    let new_pair: Vec<usize> = (0..removed.len())
        .filter(|&h| !removed[h])
        .map(|h| index[pair[h]])
        .collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..ga.num_vertices() {
        blocks.push(
            ga.half_edges_at(v)
                .iter()
                .filter(|&&h| !removed[h])
                .map(|&h| index[h])
                .collect(),
        );
    }
    for v in 0..gb.num_vertices() {
        blocks.push(
            gb.half_edges_at(v)
                .iter()
                .filter(|&&h| !removed[h + ha])
                .map(|&h| index[h + ha])
                .collect(),
        );
    }
    blocks.retain(|b| !b.is_empty());
    let mut ports: BTreeMap<usize, Port> = BTreeMap::new();
    for (&h, &p) in ga.ports() {
        if matches!(p, Port::In(_)) {
            ports.insert(index[h], p);
        }
    }
    for (&h, &p) in gb.ports() {
        if matches!(p, Port::Out(_)) {
            ports.insert(index[h + ha], p);
        }
    }
    let mut tori = Vec::new();
    for (&h, &t) in ga.tori() {
        tori.push((index[h], t));
    }
    for (&h, &t) in gb.tori() {
        let t = match t {
            TorusPort::In(i) => TorusPort::In(i + pa.t_in as u32),
            TorusPort::Out(i) => TorusPort::Out(i + pa.t_out as u32),
        };
        tori.push((index[h + ha], t));
    }
    let bivalent = ga.allows_bivalent() || gb.allows_bivalent();
    let g = Graph::build(new_pair, blocks, ports, tori, bivalent)?;
    let ordering: Vec<usize> = a
        .forest()
        .edges()
        .iter()
        .map(|&e| index[e])
        .chain(b.forest().edges().iter().map(|&e| index[e + ha]))
        .collect();
    Ok(canonical_cell(&g, &ordering))
}

/// Bilinear extension of [`glue_cells`] to chains.
pub fn glue_chains(x: &Chain, y: &Chain) -> Result<Chain, ModuliError> {
    let mut out = Chain::new();
    for (a, &ca) in x {
        for (b, &cb) in y {
            if let Some((s, c)) = glue_cells(a, b)? {
                add_term(&mut out, c, s * ca * cb);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shapes::corolla;
    use crate::graph::BoundaryProfile;
    use crate::moduli::enumerate_cells;

    fn cell(g: &Graph) -> ForestedCell {
        canonical_cell(g, &[]).unwrap().1
    }

    #[test]
    fn corolla_into_corolla() {
        let a = cell(&corolla(3, true));
        let b: Graph = "G h=6 e=0:3,1:4,2:5 v=0,1,2|3|4|5 in=3 out=4,5 tin= tout= b=0"
            .parse()
            .unwrap();
        let (s, c) = glue_cells(&a, &cell(&b)).unwrap().unwrap();
        assert_eq!(s, 1);
        assert_eq!(c.graph().num_vertices(), 2 + 4);
        let p = BoundaryProfile {
            g: 0,
            e_in: 2,
            e_out: 2,
            t_in: 0,
            t_out: 0,
        };
        assert_eq!(c.graph().profile(), p);
        assert_eq!(c.dimension(), 0);
    }

    #[test]
    fn identity_is_a_unit() {
        for c in enumerate_cells(&BoundaryProfile::from_triple(1, 2, 0)).unwrap() {
            assert_eq!(
                glue_cells(&c, &identity_cell(1)).unwrap(),
                Some((1, c.clone()))
            );
            assert_eq!(
                glue_cells(&identity_cell(1), &c).unwrap(),
                Some((1, c.clone()))
            );
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = cell(&corolla(3, true));
        assert!(matches!(
            glue_cells(&a, &identity_cell(2)),
            Err(ModuliError::ProfileMismatch { .. })
        ));
    }
}
