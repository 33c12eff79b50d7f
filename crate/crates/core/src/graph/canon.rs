//! Canonical labeling by color refinement and individualization.
//!
//! Subtrees that are images of explored ones under automorphisms already
//! found are pruned; the automorphisms met on the way generate the whole
//! group, which is then listed by closure.

use std::collections::BTreeSet;

/// A colored half-edge structure.
#[derive(Clone, Debug)]
pub struct Structure<'a> {
    pub pair: &'a [usize],
    pub vertex_of: &'a [usize],
    pub num_vertices: usize,
    pub color: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    /// Canonical relabelling, old half-edge -> new half-edge.
    pub perm: Vec<usize>,
    pub certificate: Vec<u64>,
    /// Automorphisms (old -> old) generating the whole group.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Every non-identity automorphism.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        closure(self.perm.len(), &self.generators)
    }
}

fn dense_ranks<T: Ord>(keys: &[T]) -> Vec<u64> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    let mut ranks = vec![0; keys.len()];
    rank_into(keys, &mut order, &mut ranks);
    ranks
}

/// Writes dense ranks of `keys` into `ranks` and returns the class count.
/// `order` is any permutation of the indices; it is left sorted by key.
fn rank_into<T: Ord>(keys: &[T], order: &mut [usize], ranks: &mut [u64]) -> usize {
    order.sort_unstable_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = 0;
    for w in 0..order.len() {
        if w > 0 && keys[order[w]] != keys[order[w - 1]] {
            rank += 1;
        }
        ranks[order[w]] = rank;
    }
    if order.is_empty() {
        0
    } else {
        rank as usize + 1
    }
}

fn mix(mut x: u64) -> u64 {
    // splitmix64 finalizer
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Each round splits classes by partner color and the multiset of sibling
/// colors. The multiset is hashed (order-free sum of mixed values), which
/// keeps the refinement invariant under relabelling; a collision can only
/// make it coarser, and leaves are compared by exact certificates anyway.
fn refine(s: &Structure<'_>, initial: &[u64]) -> Vec<u64> {
    let n = initial.len();
    let mut order: Vec<usize> = (0..n).collect();
    let mut colors = vec![0; n];
    let mut classes = rank_into(initial, &mut order, &mut colors);
    let mut keys = vec![(0u64, 0u64); n];
    let mut at_vertex = vec![0u64; s.num_vertices];
    loop {
        at_vertex.fill(0);
        for h in 0..n {
            let v = &mut at_vertex[s.vertex_of[h]];
            *v = v.wrapping_add(mix(colors[h] + 1));
        }
        for h in 0..n {
            let sib = at_vertex[s.vertex_of[h]].wrapping_sub(mix(colors[h] + 1));
            keys[h] = (colors[h], mix(colors[s.pair[h]] ^ mix(sib)));
        }
        let next = rank_into(&keys, &mut order, &mut colors);
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn certificate(s: &Structure<'_>, perm: &[usize]) -> Vec<u64> {
    let n = perm.len();
    let mut inv = vec![0; n];
    for (h, &p) in perm.iter().enumerate() {
        inv[p] = h;
    }
    let mut vmin = vec![usize::MAX; s.num_vertices];
    for h in 0..n {
        let v = s.vertex_of[h];
        vmin[v] = vmin[v].min(perm[h]);
    }
    let vrank = dense_ranks(&vmin);
    let mut cert = Vec::with_capacity(3 * n);
    for &h in &inv {
        cert.push(s.color[h]);
        cert.push(perm[s.pair[h]] as u64);
        cert.push(vrank[s.vertex_of[h]]);
    }
    cert
}

struct Leaf {
    cert: Vec<u64>,
    perm: Vec<usize>,
}

struct Search<'a, 'b> {
    s: &'b Structure<'a>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms found so far (old -> old), not necessarily a group.
    found: Vec<Vec<usize>>,
}

/// `h -> inv(reference)(leaf(h))`: the automorphism carrying one leaf onto another.
fn relate(reference: &[usize], leaf: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; reference.len()];
    for (h, &p) in reference.iter().enumerate() {
        inv[p] = h;
    }
    leaf.iter().map(|&p| inv[p]).collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

impl Search<'_, '_> {
    /// Orbits of the automorphisms found so far that fix `path` pointwise.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.s.pair.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for a in &self.found {
            if path.iter().all(|&p| a[p] == p) {
                for (h, &x) in a.iter().enumerate() {
                    let (r, q) = (find(&mut parent, h), find(&mut parent, x));
                    if r != q {
                        parent[r.max(q)] = r.min(q);
                    }
                }
            }
        }
        (0..n).map(|h| find(&mut parent, h)).collect()
    }

    fn leaf(&mut self, perm: Vec<usize>, branched: Option<usize>) -> Option<usize> {
        let cert = certificate(self.s, &perm);
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                cert: cert.clone(),
                perm: perm.clone(),
            });
            self.first = Some(Leaf { cert, perm });
            return None;
        };
        if cert == first.cert {
            let a = relate(&first.perm, &perm);
            self.found.push(a);
            // this subtree is an automorphic image of one already explored
            return branched;
        }
        let best = self.best.as_ref().expect("set with first");
        if cert == best.cert {
            let a = relate(&best.perm, &perm);
            self.found.push(a);
        } else if cert < best.cert {
            self.best = Some(Leaf { cert, perm });
        }
        None
    }

    /// Returns the first-path level to jump back to, if any. `branched` is
    /// the level at which this node left the first path (`None` while on it).
    fn visit(
        &mut self,
        colors: Vec<u64>,
        path: &mut Vec<usize>,
        branched: Option<usize>,
    ) -> Option<usize> {
        let colors = refine(self.s, &colors);
        let n = colors.len();
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
            return self.leaf(colors.iter().map(|&c| c as usize).collect(), branched);
        };
        let level = path.len();
        let cell: Vec<usize> = (0..n).filter(|&h| colors[h] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for (i, &h) in cell.iter().enumerate() {
            if branched.is_none() && i > 0 {
                let orbit = self.orbits(path);
                if explored.iter().any(|&x| orbit[x] == orbit[h]) {
                    continue;
                }
            }
            let child: Vec<u64> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u64::from(x != h))
                .collect();
            let next = match branched {
                None if i == 0 => None,
                None => Some(level),
                b => b,
            };
            path.push(h);
            let jump = self.visit(child, path, next);
            path.pop();
            explored.push(h);
            match jump {
                Some(j) if j < level => return Some(j),
                _ => {}
            }
        }
        None
    }
}

/// Every element of the group generated by `gens`, identity excluded.
fn closure(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity.clone()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&h| g[h]).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.remove(&identity);
    seen.into_iter().collect()
}

/// Canonical labeling of a colored half-edge structure.
pub fn canonical_labeling(s: &Structure<'_>) -> Labeling {
    let mut search = Search {
        s,
        first: None,
        best: None,
        found: Vec::new(),
    };
    search.visit(s.color.clone(), &mut Vec::new(), None);
    let Leaf { cert, perm } = search.best.expect("the search reaches a leaf");
    Labeling {
        perm,
        certificate: cert,
        generators: search.found,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structure<'a>(pair: &'a [usize], vertex_of: &'a [usize], nv: usize) -> Structure<'a> {
        Structure {
            pair,
            vertex_of,
            num_vertices: nv,
            color: vec![0; pair.len()],
        }
    }

    #[test]
    fn rose_with_two_petals_has_eight_automorphisms() {
        let pair = [1, 0, 3, 2];
        let vertex_of = [0, 0, 0, 0];
        let lab = canonical_labeling(&structure(&pair, &vertex_of, 1));
        assert_eq!(lab.automorphisms().len(), 7);
    }

    #[test]
    fn theta_has_twelve_automorphisms() {
        let pair = [3, 4, 5, 0, 1, 2];
        let vertex_of = [0, 0, 0, 1, 1, 1];
        let lab = canonical_labeling(&structure(&pair, &vertex_of, 2));
        assert_eq!(lab.automorphisms().len(), 11);
    }

    #[test]
    fn colors_break_symmetry() {
        let pair = [3, 4, 5, 0, 1, 2];
        let vertex_of = [0, 0, 0, 1, 1, 1];
        let mut s = structure(&pair, &vertex_of, 2);
        s.color = vec![1, 0, 0, 1, 0, 0];
        assert_eq!(canonical_labeling(&s).automorphisms().len(), 3);
    }
}
