//! Rewriting a generator of the bonnet profile, tensored with a word on its
//! incoming legs, into bonnet normal form: every vertex other than the torus
//! vertex is absorbed into the word through the algebra operations.
//!
//! A pendant vertex whose label is the corolla of arity r acts as `m_r` on
//! the letters of its children (ordered by smallest leg label); any other
//! label has positive degree and acts as zero.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::TorusError;
use crate::cinfty::CInftyAlgebra;
use crate::graph::{Graph, Port};
use crate::linalg::{format_rational, Rational};
use crate::moduli::LabelledGraph;
use crate::operad::{CooperadLabel, SplitTree};

/// `Σ c · (B(n) with base label, word)`; the base label's splits are written
/// on bits 0, 1 for the loop and 2.. for the word positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BonnetNormalForm {
    pub arity: usize,
    pub terms: BTreeMap<(Vec<u64>, Vec<usize>), Rational>,
}

impl BonnetNormalForm {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self, a: &CInftyAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|((splits, w), c)| {
                let s: Vec<String> = splits.iter().map(|s| format!("{s:b}")).collect();
                format!(
                    "{} B({})[{}] ⊗ {}",
                    format_rational(c),
                    self.arity,
                    s.join(","),
                    super::render(a, w)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for BonnetNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}) with {} terms", self.arity, self.terms.len())
    }
}

/// The open tree hanging off the torus vertex.
struct Shape {
    base: usize,
    /// Non-base internal vertices: (child keys, label is a corolla, parent vertex).
    pendants: BTreeMap<usize, (Vec<u32>, bool, usize)>,
    /// Keys of the non-loop half-edges at the base, with the half-edges, sorted by key.
    base_edges: Vec<(u32, usize)>,
    loop_half_edges: [usize; 2],
}

fn leg_label(g: &Graph, h: usize) -> Option<u32> {
    match g.ports().get(&g.partner(h)) {
        Some(Port::In(i)) => Some(*i),
        _ => None,
    }
}

fn shape(e: &LabelledGraph<SplitTree>) -> Result<Shape, TorusError> {
    let g = e.graph();
    let bad = |why: &str| TorusError::NotBonnet(format!("{why}: {}", g));
    let (th, _) = g.tori().iter().next().ok_or_else(|| bad("no torus"))?;
    if g.tori().len() != 1 || g.ports().values().any(|p| matches!(p, Port::Out(_))) {
        return Err(bad("expected one torus and only incoming legs"));
    }
    let base = g.vertex_of(*th);
    let loop_half_edges = [*th, g.partner(*th)];
    // smallest leg label beyond half-edge h, walking away from its vertex
    fn reach(g: &Graph, h: usize, seen: &mut Vec<bool>) -> Option<u32> {
        if let Some(l) = leg_label(g, h) {
            return Some(l);
        }
        let v = g.vertex_of(g.partner(h));
        if seen[v] {
            return None;
        }
        seen[v] = true;
        g.half_edges_at(v)
            .iter()
            .filter(|&&k| k != g.partner(h))
            .map(|&k| reach(g, k, seen))
            .collect::<Option<Vec<u32>>>()
            .and_then(|v| v.into_iter().min())
    }
    let mut seen = vec![false; g.num_vertices()];
    seen[base] = true;
    let mut base_edges = Vec::new();
    let mut pendants = BTreeMap::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &h in g.half_edges_at(base) {
        if loop_half_edges.contains(&h) {
            continue;
        }
        let key = reach(g, h, &mut seen.clone()).ok_or_else(|| bad("cycle outside the torus"))?;
        base_edges.push((key, h));
        if leg_label(g, h).is_none() {
            stack.push((g.partner(h), base));
        }
    }
    while let Some((into, parent)) = stack.pop() {
        let v = g.vertex_of(into);
        if seen[v] {
            return Err(bad("cycle outside the torus"));
        }
        seen[v] = true;
        let mut keys = Vec::new();
        for &k in g.half_edges_at(v) {
            if k == into {
                continue;
            }
            keys.push(
                reach(g, k, &mut seen.clone()).ok_or_else(|| bad("cycle outside the torus"))?,
            );
            if leg_label(g, k).is_none() {
                stack.push((g.partner(k), v));
            }
        }
        keys.sort_unstable();
        pendants.insert(v, (keys, e.labels()[v].degree() == 0, parent));
    }
    base_edges.sort_unstable();
    Ok(Shape {
        base,
        pendants,
        base_edges,
        loop_half_edges,
    })
}

/// One summand while rewriting: letters keyed by the smallest leg label they came from.
type State = Vec<(Rational, Vec<(u32, usize)>)>;

fn absorb(a: &CInftyAlgebra, state: State, keys: &[u32], corolla: bool) -> State {
    if !corolla {
        return Vec::new();
    }
    let r = keys.len();
    let mut out = Vec::new();
    for (c, slots) in state {
        let p = slots
            .iter()
            .position(|(k, _)| *k == keys[0])
            .expect("child present");
        let mut odd = false;
        let mut moved = Vec::new();
        let mut passed: Vec<usize> = Vec::new();
        for &(k, x) in &slots[p..] {
            if keys.contains(&k) {
                for &y in &passed {
                    odd ^= a.degree(x) * a.degree(y) % 2 != 0;
                }
                moved.push(x);
            } else {
                passed.push(x);
            }
        }
        let before: i64 = slots[..p].iter().map(|(_, x)| a.degree(*x)).sum();
        odd ^= (r as i64 - 2) * before % 2 != 0;
        let rest: Vec<(u32, usize)> = slots[p..]
            .iter()
            .copied()
            .filter(|(k, _)| !keys.contains(k))
            .collect();
        for (o, e) in a.op(&moved) {
            let mut s = slots[..p].to_vec();
            s.push((keys[0], *o));
            s.extend_from_slice(&rest);
            let coeff = if odd { -(&c * e) } else { &c * e };
            out.push((coeff, s));
        }
    }
    out
}

fn finish(e: &LabelledGraph<SplitTree>, sh: &Shape, state: State) -> BonnetNormalForm {
    let mut bit: BTreeMap<u32, u32> = BTreeMap::new();
    bit.insert(sh.loop_half_edges[0] as u32, 0);
    bit.insert(sh.loop_half_edges[1] as u32, 1);
    for (i, &(_, h)) in sh.base_edges.iter().enumerate() {
        bit.insert(h as u32, i as u32 + 2);
    }
    let label = e.labels()[sh.base].relabel(&|b| bit[&b]);
    let mut terms: BTreeMap<(Vec<u64>, Vec<usize>), Rational> = BTreeMap::new();
    for (c, slots) in state {
        let w = slots.into_iter().map(|(_, x)| x).collect();
        let t = terms
            .entry((label.splits().to_vec(), w))
            .or_insert_with(Rational::zero);
        *t += c;
    }
    terms.retain(|_, c| !c.is_zero());
    BonnetNormalForm {
        arity: sh.base_edges.len(),
        terms,
    }
}

fn start(
    e: &LabelledGraph<SplitTree>,
    a: &CInftyAlgebra,
    word: &[usize],
) -> Result<(Shape, State), TorusError> {
    let sh = shape(e)?;
    let k = e.graph().ports().len();
    if word.len() != k {
        return Err(TorusError::WordLength {
            expected: k,
            got: word.len(),
        });
    }
    if word.iter().any(|&x| x >= a.dim()) {
        return Err(TorusError::BadLetter(word.to_vec()));
    }
    let slots = word
        .iter()
        .enumerate()
        .map(|(i, &x)| (i as u32 + 1, x))
        .collect();
    Ok((sh, vec![(Rational::from_integer(1.into()), slots)]))
}

/// Pendant vertices whose children are all already absorbed.
fn ready(sh: &Shape, done: &[usize]) -> Vec<usize> {
    sh.pendants
        .keys()
        .copied()
        .filter(|v| !done.contains(v))
        .filter(|v| {
            sh.pendants
                .iter()
                .all(|(c, (_, _, p))| *p != *v || done.contains(c))
        })
        .collect()
}

/// Bonnet normal form of `e ⊗ word`, absorbing the lowest ready vertex first.
pub fn bonnet_representative(
    e: &LabelledGraph<SplitTree>,
    a: &CInftyAlgebra,
    word: &[usize],
) -> Result<BonnetNormalForm, TorusError> {
    let (sh, mut state) = start(e, a, word)?;
    let mut done = Vec::new();
    while let Some(&v) = ready(&sh, &done).first() {
        let (keys, corolla, _) = &sh.pendants[&v];
        state = absorb(a, state, keys, *corolla);
        done.push(v);
    }
    Ok(finish(e, &sh, state))
}

/// The normal form reached along every admissible absorption order.
pub fn bonnet_rewrite_orders(
    e: &LabelledGraph<SplitTree>,
    a: &CInftyAlgebra,
    word: &[usize],
) -> Result<Vec<BonnetNormalForm>, TorusError> {
    fn go(
        sh: &Shape,
        a: &CInftyAlgebra,
        state: State,
        done: &mut Vec<usize>,
        out: &mut Vec<State>,
    ) {
        let r = ready(sh, done);
        if r.is_empty() {
            out.push(state);
            return;
        }
        for v in r {
            let (keys, corolla, _) = &sh.pendants[&v];
            let next = absorb(a, state.clone(), keys, *corolla);
            done.push(v);
            go(sh, a, next, done, out);
            done.pop();
        }
    }
    let (sh, state) = start(e, a, word)?;
    let mut finals = Vec::new();
    go(&sh, a, state, &mut Vec::new(), &mut finals);
    Ok(finals.into_iter().map(|s| finish(e, &sh, s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cinfty::builtin;
    use crate::linalg::rational;
    use crate::moduli::{bonnet_graph, bonnet_profile, labelled_generators};

    #[test]
    fn normal_bonnet_is_unchanged() {
        let a = builtin("S1").unwrap();
        let e = LabelledGraph::corollas(bonnet_graph(2)).unwrap();
        let nf = bonnet_representative(&e, &a, &[1, 0]).unwrap();
        assert_eq!(nf.arity, 2);
        assert_eq!(nf.terms.len(), 1);
        let ((splits, w), c) = nf.terms.iter().next().unwrap();
        assert!(splits.is_empty());
        assert_eq!((w.clone(), c.clone()), (vec![1, 0], rational(1)));
    }

    #[test]
    fn pendant_corolla_multiplies() {
        // torus vertex with one leg and one edge to a 2-corolla on legs 2, 3
        let a = builtin("Qx3").unwrap();
        for (_, (_, e)) in labelled_generators(&bonnet_profile(3)).unwrap() {
            let g = e.graph();
            if g.num_vertices() != 5 || e.degree() != 0 {
                continue;
            }
            let nf = bonnet_representative(&e, &a, &[1, 1, 1]).unwrap();
            if nf.arity == 1 {
                // all three legs on one pendant: m_3 vanishes
                assert!(nf.is_zero());
                continue;
            }
            assert_eq!(nf.arity, 2);
            // x·x = x^2 lands next to the remaining x, in key order
            let (_, w) = nf.terms.keys().next().unwrap();
            assert!(w == &vec![1, 2] || w == &vec![2, 1]);
        }
    }

    #[test]
    fn all_orders_agree_on_small_bonnets() {
        for name in ["S1", "Qx3", "S2"] {
            let a = builtin(name).unwrap();
            for k in 1..=3 {
                for (_, (_, e)) in labelled_generators(&bonnet_profile(k)).unwrap() {
                    for w in super::super::all_words(a.dim(), k) {
                        let forms = bonnet_rewrite_orders(&e, &a, &w).unwrap();
                        assert!(forms.windows(2).all(|p| p[0] == p[1]), "{e}");
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_word_length() {
        let a = builtin("Q").unwrap();
        let e = LabelledGraph::corollas(bonnet_graph(2)).unwrap();
        assert!(matches!(
            bonnet_representative(&e, &a, &[0]),
            Err(TorusError::WordLength {
                expected: 2,
                got: 1
            })
        ));
    }
}
