//! One-line text form of a graph.
//!
//! `G h=6 e=0:3,1:4,2:5 v=0,1,2|3|4|5 in=3,4 out=5 tin= tout= b=0`
//!
//! `e` lists edges as half-edge pairs, `v` the vertex blocks, `in`/`out` the
//! leaf half-edge of each labelled boundary edge in label order, `tin`/`tout`
//! one half-edge of each marked loop in label order, `b` the bivalent flag.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, Port, TorusPort};

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn by_label(items: impl Iterator<Item = (usize, u32)>) -> Vec<usize> {
    let mut v: Vec<(u32, usize)> = items.map(|(h, l)| (l, h)).collect();
    v.sort_unstable();
    v.into_iter().map(|(_, h)| h).collect()
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|&e| format!("{}:{}", e, self.partner(e)))
            .collect();
        let vertices: Vec<String> = (0..self.num_vertices())
            .map(|v| join(self.half_edges_at(v).iter().copied()))
            .collect();
        let ins = by_label(self.ports().iter().filter_map(|(&h, p)| match p {
            Port::In(i) => Some((h, *i)),
            _ => None,
        }));
        let outs = by_label(self.ports().iter().filter_map(|(&h, p)| match p {
            Port::Out(i) => Some((h, *i)),
            _ => None,
        }));
        let tin = by_label(self.tori().iter().filter_map(|(&h, p)| match p {
            TorusPort::In(i) => Some((h, *i)),
            _ => None,
        }));
        let tout = by_label(self.tori().iter().filter_map(|(&h, p)| match p {
            TorusPort::Out(i) => Some((h, *i)),
            _ => None,
        }));
        write!(
            f,
            "G h={} e={} v={} in={} out={} tin={} tout={} b={}",
            self.num_half_edges(),
            edges.join(","),
            vertices.join("|"),
            join(ins),
            join(outs),
            join(tin),
            join(tout),
            u8::from(self.allows_bivalent())
        )
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, GraphError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.parse::<usize>()
                .map_err(|e| GraphError::Parse(format!("`{x}`: {e}")))
        })
        .collect()
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Graph, GraphError> {
        let mut tokens = s.split_whitespace();
        if tokens.next() != Some("G") {
            return Err(GraphError::Parse("literal must start with `G`".into()));
        }
        let mut fields = std::collections::BTreeMap::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| GraphError::Parse(format!("bad field `{tok}`")))?;
            if fields.insert(k, v).is_some() {
                return Err(GraphError::Parse(format!("repeated field `{k}`")));
            }
        }
        let field = |k: &str| {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| GraphError::Parse(format!("missing field `{k}`")))
        };
        let h: usize = field("h")?
            .parse()
            .map_err(|e| GraphError::Parse(format!("h: {e}")))?;
        let mut pair = vec![usize::MAX; h];
        for item in field("e")?.split(',').filter(|x| !x.is_empty()) {
            let (a, b) = item
                .split_once(':')
                .ok_or_else(|| GraphError::Parse(format!("bad edge `{item}`")))?;
            let a: usize = a
                .parse()
                .map_err(|e| GraphError::Parse(format!("edge `{item}`: {e}")))?;
            let b: usize = b
                .parse()
                .map_err(|e| GraphError::Parse(format!("edge `{item}`: {e}")))?;
            if a >= h || b >= h || pair[a] != usize::MAX || pair[b] != usize::MAX {
                return Err(GraphError::Parse(format!(
                    "edge `{item}` out of range or repeated"
                )));
            }
            pair[a] = b;
            pair[b] = a;
        }
        if let Some(x) = pair.iter().position(|&p| p == usize::MAX) {
            return Err(GraphError::BadPairing(x));
        }
        let vertices: Vec<Vec<usize>> = field("v")?
            .split('|')
            .filter(|b| !b.is_empty())
            .map(parse_list)
            .collect::<Result<_, _>>()?;
        let mut ports = Vec::new();
        for (i, x) in parse_list(field("in")?)?.into_iter().enumerate() {
            ports.push((x, Port::In(i as u32 + 1)));
        }
        for (i, x) in parse_list(field("out")?)?.into_iter().enumerate() {
            ports.push((x, Port::Out(i as u32 + 1)));
        }
        let mut tori = Vec::new();
        for (i, x) in parse_list(field("tin")?)?.into_iter().enumerate() {
            tori.push((x, TorusPort::In(i as u32 + 1)));
        }
        for (i, x) in parse_list(field("tout")?)?.into_iter().enumerate() {
            tori.push((x, TorusPort::Out(i as u32 + 1)));
        }
        let bivalent = match field("b")? {
            "0" => false,
            "1" => true,
            other => {
                return Err(GraphError::Parse(format!(
                    "b must be 0 or 1, got `{other}`"
                )))
            }
        };
        if ports
            .iter()
            .map(|p| p.0)
            .collect::<std::collections::BTreeSet<_>>()
            .len()
            != ports.len()
        {
            return Err(GraphError::Parse("a half-edge carries two labels".into()));
        }
        Graph::build(pair, vertices, ports, tori, bivalent)
    }
}

#[cfg(test)]
mod tests {
    use super::super::shapes::*;
    use super::*;

    #[test]
    fn round_trips() {
        for g in [
            corolla(3, true),
            bonnet(0),
            bonnet(2),
            theta(),
            loop_with_tail(),
        ] {
            let text = g.to_string();
            let back: Graph = text.parse().unwrap();
            assert_eq!(back, g, "{text}");
            assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn known_literal() {
        let g: Graph = "G h=6 e=0:3,1:4,2:5 v=0,1,2|3|4|5 in=3,4 out=5 tin= tout= b=0"
            .parse()
            .unwrap();
        assert!(g.is_isomorphic(&corolla(3, true)));
    }

    #[test]
    fn malformed_literals_rejected() {
        assert!("H h=0".parse::<Graph>().is_err());
        assert!("G h=2 e=0:1 v=0,1 in= out= tin= tout="
            .parse::<Graph>()
            .is_err());
        assert!("G h=3 e=0:1 v=0,1,2 in= out= tin= tout= b=0"
            .parse::<Graph>()
            .is_err());
        assert!("G h=2 e=0:1 v=0,1 in= out= tin= tout= b=7"
            .parse::<Graph>()
            .is_err());
    }
}
