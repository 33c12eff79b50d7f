//! Orientations of forested graphs as signed orderings of forest edges.

use super::GraphError;

/// Parity of the permutation that sorts `seq` (+1 even, -1 odd). Entries must be distinct.
pub fn parity_of_sorting<T: Ord>(seq: &[T]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of a permutation given as an image vector, via cycle decomposition.
pub fn permutation_parity(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// The two ways an edge leaves the forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceMove {
    /// Contract the edge in the graph.
    Contract,
    /// Keep the edge but drop it from the forest.
    Drop,
}

/// An ordering of forest edges together with a sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationSign {
    pub ordering: Vec<usize>,
    pub sign: i8,
}

impl OrientationSign {
    pub fn new(ordering: Vec<usize>) -> Self {
        OrientationSign { ordering, sign: 1 }
    }

    /// Re-expresses the orientation relative to the sorted ordering.
    pub fn normalized(&self) -> OrientationSign {
        let mut ordering = self.ordering.clone();
        ordering.sort_unstable();
        OrientationSign {
            ordering,
            sign: self.sign * parity_of_sorting(&self.ordering),
        }
    }
}

/// Orientation after removing `e` from the ordering by either face move.
/// Both moves cost `(-1)^p` where `p` is the 0-based position of `e`.
pub fn forest_sign_after(
    _mv: FaceMove,
    o: &OrientationSign,
    e: usize,
) -> Result<OrientationSign, GraphError> {
    let p = o
        .ordering
        .iter()
        .position(|&x| x == e)
        .ok_or(GraphError::NotInOrdering(e))?;
    let mut ordering = o.ordering.clone();
    ordering.remove(p);
    let sign = if p % 2 == 0 { o.sign } else { -o.sign };
    Ok(OrientationSign { ordering, sign })
}
