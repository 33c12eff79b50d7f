//! Cobar(Bar(Comm)): rooted trees whose vertices carry Bar(Comm) trees.
//!
//! Flattened, such an element is one laminar family of clusters split into
//! `outer` clusters (edges of the Cobar tree) and `inner` clusters (internal
//! edges of the vertex labels). The degree is the number of inner clusters.

use std::fmt;
use std::str::FromStr;

use super::{
    candidate_clusters, check_arity, full, laminar_families, parse_nested, render, sign_of,
    BarTree, OperadError,
};
use crate::graph::parity_of_sorting;
use crate::linalg::{assemble_complex, GradedChainComplex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CobarBarElement {
    n: usize,
    outer: Vec<u32>,
    inner: Vec<u32>,
}

impl CobarBarElement {
    /// Validates and sorts. The inner clusters are taken in sorted order.
    pub fn new(n: usize, outer: Vec<u32>, inner: Vec<u32>) -> Result<Self, OperadError> {
        let all = BarTree::new(n, outer.iter().chain(&inner).copied())?;
        if all.degree() != outer.len() + inner.len() {
            return Err(OperadError::Parse(
                "a cluster is both inner and outer".into(),
            ));
        }
        let mut outer = outer;
        let mut inner = inner;
        outer.sort_unstable();
        inner.sort_unstable();
        Ok(CobarBarElement { n, outer, inner })
    }

    /// The arity-one unit.
    pub fn unit() -> Self {
        CobarBarElement {
            n: 1,
            outer: Vec::new(),
            inner: Vec::new(),
        }
    }

    /// A single vertex labelled by the corolla.
    pub fn corolla(n: usize) -> Self {
        CobarBarElement {
            n,
            outer: Vec::new(),
            inner: Vec::new(),
        }
    }

    pub fn all(n: usize) -> Result<Vec<Self>, OperadError> {
        check_arity(n, 1)?;
        let mut out = Vec::new();
        for fam in laminar_families(&candidate_clusters(n)) {
            let fam: Vec<u32> = fam.into_iter().map(|c| c as u32).collect();
            for mask in 0u64..(1u64 << fam.len()) {
                let mut inner = Vec::new();
                let mut outer = Vec::new();
                for (i, &c) in fam.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        inner.push(c)
                    } else {
                        outer.push(c)
                    }
                }
                out.push(CobarBarElement { n, outer, inner });
            }
        }
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn outer(&self) -> &[u32] {
        &self.outer
    }

    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    pub fn degree(&self) -> usize {
        self.inner.len()
    }

    /// Contracting a label edge plus promoting it to a Cobar edge, signed by position.
    pub fn differential(&self) -> Vec<(i64, CobarBarElement)> {
        let mut terms = Vec::with_capacity(2 * self.inner.len());
        for (i, &c) in self.inner.iter().enumerate() {
            let mut inner = self.inner.clone();
            inner.remove(i);
            terms.push((
                sign_of(i),
                CobarBarElement {
                    n: self.n,
                    outer: self.outer.clone(),
                    inner: inner.clone(),
                },
            ));
            let mut outer = self.outer.clone();
            let at = outer.binary_search(&c).unwrap_err();
            outer.insert(at, c);
            terms.push((
                sign_of(i),
                CobarBarElement {
                    n: self.n,
                    outer,
                    inner,
                },
            ));
        }
        terms
    }
}

impl fmt::Display for CobarBarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return f.write_str("1");
        }
        f.write_str(&render(self.n, &self.outer, &self.inner))
    }
}

impl FromStr for CobarBarElement {
    type Err = OperadError;

    fn from_str(s: &str) -> Result<Self, OperadError> {
        if s.trim() == "1" {
            return Ok(Self::unit());
        }
        let (n, outer, inner) = parse_nested(s)?;
        CobarBarElement::new(n, outer, inner)
    }
}

/// Cobar(Bar(Comm)) in arity `n`, flattened to the label degree.
pub fn cobar_bar_complex(n: usize) -> Result<GradedChainComplex, OperadError> {
    check_arity(n, 2)?;
    let basis = CobarBarElement::all(n)?
        .into_iter()
        .map(|t| (t.degree() as i64, t))
        .collect();
    Ok(assemble_complex(basis, |t: &CobarBarElement| {
        t.differential()
    })?)
}

fn spread(c: u32, offsets: &[usize], arities: &[usize]) -> u32 {
    (0..arities.len())
        .filter(|&i| c >> i & 1 == 1)
        .fold(0, |acc, i| acc | full(arities[i]) << offsets[i])
}

/// Grafts the roots of `inputs` onto the leaves of `outer`. Each grafted root
/// of arity at least two becomes a Cobar edge. Returns the sign produced by
/// sorting the concatenated label-edge orderings (outer's, then each input's).
pub fn graft(
    outer: &CobarBarElement,
    inputs: &[CobarBarElement],
) -> Result<(i64, CobarBarElement), OperadError> {
    if inputs.len() != outer.n {
        return Err(OperadError::ArityMismatch {
            expected: outer.n,
            got: inputs.len(),
        });
    }
    let arities: Vec<usize> = inputs.iter().map(|x| x.n).collect();
    let total: usize = arities.iter().sum();
    check_arity(total, 1)?;
    let mut offsets = Vec::with_capacity(arities.len());
    let mut acc = 0;
    for &a in &arities {
        offsets.push(acc);
        acc += a;
    }
    let mut new_outer: Vec<u32> = outer
        .outer
        .iter()
        .map(|&c| spread(c, &offsets, &arities))
        .collect();
    let mut order: Vec<u32> = outer
        .inner
        .iter()
        .map(|&c| spread(c, &offsets, &arities))
        .collect();
    for (i, x) in inputs.iter().enumerate() {
        new_outer.extend(x.outer.iter().map(|&c| c << offsets[i]));
        order.extend(x.inner.iter().map(|&c| c << offsets[i]));
        if x.n >= 2 && x.n < total {
            new_outer.push(full(x.n) << offsets[i]);
        }
    }
    let sign = i64::from(parity_of_sorting(&order));
    let mut inner = order;
    inner.sort_unstable();
    new_outer.sort_unstable();
    Ok((
        sign,
        CobarBarElement {
            n: total,
            outer: new_outer,
            inner,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_three_counts() {
        let all = CobarBarElement::all(3).unwrap();
        assert_eq!(all.iter().filter(|e| e.degree() == 0).count(), 4);
        assert_eq!(all.iter().filter(|e| e.degree() == 1).count(), 3);
        let c = cobar_bar_complex(3).unwrap();
        assert_eq!(c.betti().unwrap(), vec![(0, 1), (1, 0)]);
        assert_eq!(cobar_bar_complex(2).unwrap().betti().unwrap(), vec![(0, 1)]);
    }

    #[test]
    fn literals_round_trip() {
        for e in CobarBarElement::all(4).unwrap() {
            let s = e.to_string();
            assert_eq!(s.parse::<CobarBarElement>().unwrap(), e, "{s}");
        }
        let e: CobarBarElement = "([1,2],(3,4))".parse().unwrap();
        assert_eq!((e.outer(), e.inner()), (&[0b1100][..], &[0b0011][..]));
    }

    #[test]
    fn unit_law() {
        let x: CobarBarElement = "([1,2],3)".parse().unwrap();
        let ones = vec![CobarBarElement::unit(); 3];
        assert_eq!(graft(&x, &ones).unwrap(), (1, x.clone()));
        assert_eq!(
            graft(&CobarBarElement::unit(), &[x.clone()]).unwrap(),
            (1, x)
        );
    }

    #[test]
    fn two_corollas_into_a_corolla() {
        let c2 = CobarBarElement::corolla(2);
        let (s, g) = graft(&c2, &[c2.clone(), c2.clone()]).unwrap();
        assert_eq!(s, 1);
        assert_eq!(g.to_string(), "((1,2),(3,4))");
    }

    #[test]
    fn graft_arity_mismatch() {
        let c2 = CobarBarElement::corolla(2);
        assert_eq!(
            graft(&c2, &[c2.clone()]).unwrap_err(),
            OperadError::ArityMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn label_order_sign() {
        let a: CobarBarElement = "([2,3],1)".parse().unwrap();
        let b: CobarBarElement = "([1,2],3)".parse().unwrap();
        // inner of a lands on {3,4,5}-ish leaves above b's {1,2}: sorting swaps them
        let (s, g) = graft(
            &a,
            &[b, CobarBarElement::unit(), CobarBarElement::corolla(2)],
        )
        .unwrap();
        assert_eq!(g.inner().len(), 2);
        assert_eq!(s, -1);
    }
}
