//! Exact rational linear algebra: sparse matrices, fraction-free rank,
//! reduced row echelon forms and graded chain complexes with Betti numbers.
//!
//! Nothing in this module touches floating point.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Exact rational scalar. Always normalized (positive denominator, reduced).
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("differential in degree {degree} has shape {got:?}, expected {expected:?}")]
    ShapeMismatch {
        degree: i64,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("d∘d is nonzero in degree {degree} at basis pair ({row}, {col})")]
    NotAComplex {
        degree: i64,
        row: String,
        col: String,
    },
    #[error("cannot parse matrix dump line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Sparse matrix over the rationals; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, v)?;
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.entries.insert((i, j), rational(v));
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Adds `value` to entry `(row, col)`, dropping the entry if it cancels.
    pub fn add_to(&mut self, row: usize, col: usize, value: Rational) -> Result<(), LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if value.is_zero() {
            return Ok(());
        }
        let slot = self
            .entries
            .entry((row, col))
            .or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
        Ok(())
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) -> Result<(), LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Matrix product `self * rhs`. Panics on inner dimension mismatch.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut by_row: HashMap<usize, Vec<(usize, &Rational)>> = HashMap::new();
        for (&(r, c), v) in &rhs.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::zeros(self.rows, rhs.cols);
        for (&(r, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_to(r, c, a * b).expect("in bounds");
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (&(r, c), v) in &rhs.entries {
            out.add_to(r, c, -v.clone()).expect("in bounds");
        }
        out
    }

    /// Rows as sparse vectors sorted by column.
    pub fn row_vectors(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Exact rank over Q.
    pub fn rank(&self) -> usize {
        let mut ech = IntegerEchelon::new();
        let mut rows = self.row_vectors();
        rows.sort_by_key(|r| r.len());
        for row in rows {
            ech.insert_rational(&row);
        }
        ech.rank()
    }

    /// Debug dump: one `row col p/q` triple per line, sorted by position.
    pub fn dump(&self) -> String {
        let mut s = format!("# {} {}\n", self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            s.push_str(&format!("{} {} {}\n", r, c, format_rational(v)));
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<Self, LinalgError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(LinalgError::Parse {
            line: 0,
            reason: "empty".into(),
        })?;
        let dims: Vec<usize> = header
            .trim_start_matches('#')
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|e| LinalgError::Parse {
                line: 1,
                reason: format!("{e}"),
            })?;
        if dims.len() != 2 {
            return Err(LinalgError::Parse {
                line: 1,
                reason: "expected `# rows cols`".into(),
            });
        }
        let mut m = SparseMatrix::zeros(dims[0], dims[1]);
        for (i, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = |reason: &str| LinalgError::Parse {
                line: i + 1,
                reason: reason.into(),
            };
            if parts.len() != 3 {
                return Err(bad("expected three fields"));
            }
            let r = parts[0].parse().map_err(|_| bad("row"))?;
            let c = parts[1].parse().map_err(|_| bad("col"))?;
            let v = parse_rational(parts[2]).ok_or_else(|| bad("value"))?;
            m.set(r, c, v)?;
        }
        Ok(m)
    }
}

fn row_content(row: &[(usize, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, v) in row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(row: &mut Vec<(usize, BigInt)>) {
    let mut g = row_content(row);
    if g.is_zero() {
        return;
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a * x - b * y` on sorted sparse integer rows.
fn combine(
    a: &BigInt,
    x: &[(usize, BigInt)],
    b: &BigInt,
    y: &[(usize, BigInt)],
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn integer_row(row: &[(usize, Rational)]) -> Vec<(usize, BigInt)> {
    let mut l = BigInt::one();
    for (_, v) in row {
        l = l.lcm(v.denom());
    }
    row.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&l / v.denom())))
        .collect()
}

/// Incremental fraction-free row echelon form. Rows are kept primitive
/// (content one, positive leading entry) to bound coefficient growth.
#[derive(Clone, Debug, Default)]
pub struct IntegerEchelon {
    pivots: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

impl IntegerEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the stored pivots until its leading column is new.
    fn reduce_leading(&self, mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
        while let Some(&(lead, _)) = row.first() {
            let Some(p) = self.pivots.get(&lead) else {
                break;
            };
            let g = p[0].1.gcd(&row[0].1);
            let a = &p[0].1 / &g;
            let b = &row[0].1 / &g;
            row = combine(&a, &row, &b, p);
            make_primitive(&mut row);
        }
        row
    }

    /// Returns true when the row was independent of the rows seen so far.
    pub fn insert(&mut self, row: Vec<(usize, BigInt)>) -> bool {
        let mut row: Vec<_> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        row.sort_by_key(|(c, _)| *c);
        make_primitive(&mut row);
        let row = self.reduce_leading(row);
        match row.first() {
            Some(&(lead, _)) => {
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    pub fn insert_rational(&mut self, row: &[(usize, Rational)]) -> bool {
        self.insert(integer_row(row))
    }

    /// Fully reduced echelon form with unit pivots.
    pub fn into_rref(self) -> Rref {
        let mut done: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        // Back substitution from the rightmost pivot.
        for (&lead, row) in self.pivots.iter().rev() {
            let inv = Rational::new(BigInt::one(), row[0].1.clone());
            let mut acc: BTreeMap<usize, Rational> = row
                .iter()
                .map(|(c, v)| (*c, Rational::from_integer(v.clone()) * &inv))
                .collect();
            let later: Vec<usize> = acc
                .keys()
                .copied()
                .filter(|c| *c != lead && done.contains_key(c))
                .collect();
            for c in later {
                let coeff = match acc.get(&c) {
                    Some(v) => v.clone(),
                    None => continue,
                };
                for (cc, vv) in &done[&c] {
                    let e = acc.entry(*cc).or_insert_with(Rational::zero);
                    *e -= &coeff * vv;
                    if e.is_zero() {
                        acc.remove(cc);
                    }
                }
            }
            done.insert(lead, acc.into_iter().collect());
        }
        Rref { rows: done }
    }
}

/// Reduced row echelon form: each stored row has a 1 in its pivot column and
/// zeros in every other pivot column.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    rows: BTreeMap<usize, Vec<(usize, Rational)>>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row(&self, pivot: usize) -> Option<&[(usize, Rational)]> {
        self.rows.get(&pivot).map(|r| r.as_slice())
    }

    /// Expresses the unit vector `e_col` modulo the row space as a combination
    /// of non-pivot unit vectors.
    pub fn normal_form_of_unit(&self, col: usize) -> Vec<(usize, Rational)> {
        match self.rows.get(&col) {
            None => vec![(col, Rational::one())],
            Some(row) => row
                .iter()
                .filter(|(c, _)| *c != col)
                .map(|(c, v)| (*c, -v.clone()))
                .collect(),
        }
    }
}

/// Per-degree d∘d = 0 report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdReport {
    pub checked_degrees: Vec<i64>,
    /// `(degree, target basis tag, source basis tag)` of every nonzero entry of d_{n-1} d_n.
    pub failures: Vec<(i64, String, String)>,
}

impl DdReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Chain complex with a finite basis in each degree and differentials of
/// degree -1 stored as sparse matrices (rows index degree n-1, columns degree n).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedChainComplex {
    basis: BTreeMap<i64, Vec<String>>,
    differentials: BTreeMap<i64, SparseMatrix>,
}

impl GradedChainComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_basis(&mut self, degree: i64, tags: Vec<String>) {
        self.basis.insert(degree, tags);
    }

    pub fn set_differential(&mut self, degree: i64, d: SparseMatrix) -> Result<(), LinalgError> {
        let expected = (self.dim(degree - 1), self.dim(degree));
        let got = (d.rows(), d.cols());
        if got != expected {
            return Err(LinalgError::ShapeMismatch {
                degree,
                got,
                expected,
            });
        }
        self.differentials.insert(degree, d);
        Ok(())
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.basis.get(&degree).map_or(0, |b| b.len())
    }

    pub fn basis(&self, degree: i64) -> &[String] {
        self.basis.get(&degree).map_or(&[], |b| b.as_slice())
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.keys().copied().collect()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(|b| b.len()).sum()
    }

    /// The differential leaving `degree`; the zero matrix when none is stored.
    pub fn differential(&self, degree: i64) -> SparseMatrix {
        self.differentials
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(self.dim(degree - 1), self.dim(degree)))
    }

    pub fn differential_ref(&self, degree: i64) -> Option<&SparseMatrix> {
        self.differentials.get(&degree)
    }

    pub fn verify_dd_zero(&self) -> DdReport {
        let mut report = DdReport {
            checked_degrees: Vec::new(),
            failures: Vec::new(),
        };
        for (&n, d) in &self.differentials {
            let Some(lower) = self.differentials.get(&(n - 1)) else {
                continue;
            };
            report.checked_degrees.push(n);
            let prod = lower.mul(d);
            for (r, c, _) in prod.entries() {
                let row = self.basis(n - 2).get(r).cloned().unwrap_or_default();
                let col = self.basis(n).get(c).cloned().unwrap_or_default();
                report.failures.push((n, row, col));
            }
        }
        report
    }

    /// Rank of every stored differential, computed in parallel.
    pub fn ranks(&self) -> BTreeMap<i64, usize> {
        self.differentials
            .par_iter()
            .map(|(&n, d)| (n, d.rank()))
            .collect()
    }

    /// Betti numbers `dim ker d_n - rank d_{n+1}` for every degree with a basis.
    pub fn betti(&self) -> Result<Vec<(i64, usize)>, LinalgError> {
        let report = self.verify_dd_zero();
        if let Some((degree, row, col)) = report.failures.into_iter().next() {
            return Err(LinalgError::NotAComplex { degree, row, col });
        }
        let ranks = self.ranks();
        Ok(self
            .basis
            .iter()
            .map(|(&n, b)| {
                let out = ranks.get(&n).copied().unwrap_or(0);
                let inc = ranks.get(&(n + 1)).copied().unwrap_or(0);
                (n, b.len() - out - inc)
            })
            .collect())
    }

    /// Alternating sum of basis sizes.
    pub fn euler_characteristic(&self) -> i64 {
        self.basis
            .iter()
            .map(|(&n, b)| {
                if n % 2 == 0 {
                    b.len() as i64
                } else {
                    -(b.len() as i64)
                }
            })
            .sum()
    }
}

/// Assembles a complex from a graded basis and a signed differential.
pub fn assemble_complex<T: Ord + Clone + fmt::Display>(
    basis: Vec<(i64, T)>,
    d: impl Fn(&T) -> Vec<(i64, T)>,
) -> Result<GradedChainComplex, LinalgError> {
    let mut by_degree: BTreeMap<i64, Vec<T>> = BTreeMap::new();
    for (deg, t) in basis {
        by_degree.entry(deg).or_default().push(t);
    }
    let mut index: BTreeMap<T, usize> = BTreeMap::new();
    let mut cx = GradedChainComplex::new();
    for (&deg, items) in &by_degree {
        for (i, t) in items.iter().enumerate() {
            index.insert(t.clone(), i);
        }
        cx.set_basis(deg, items.iter().map(|t| t.to_string()).collect());
    }
    for (&deg, items) in &by_degree {
        let Some(targets) = by_degree.get(&(deg - 1)) else {
            continue;
        };
        let mut m = SparseMatrix::zeros(targets.len(), items.len());
        for (col, t) in items.iter().enumerate() {
            for (s, u) in d(t) {
                let row = *index.get(&u).expect("differential lands in the basis");
                m.add_to(row, col, rational(s))?;
            }
        }
        cx.set_differential(deg, m)?;
    }
    Ok(cx)
}

pub fn euler_of_betti(betti: &[(i64, usize)]) -> i64 {
    betti
        .iter()
        .map(|&(n, b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

impl fmt::Display for GradedChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, b) in &self.basis {
            writeln!(f, "degree {n}: {} generators", b.len())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(SparseMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(SparseMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_with_dependent_rows() {
        let m = SparseMatrix::from_dense(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let m = SparseMatrix::from_dense(&[vec![2, 4], vec![3, 6], vec![0, 0]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_with_fractions() {
        let m = SparseMatrix::from_triplets(
            2,
            2,
            vec![
                (0, 0, ratio(1, 2)),
                (0, 1, ratio(1, 3)),
                (1, 0, ratio(3, 2)),
                (1, 1, rational(1)),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn add_to_drops_cancelled_entries() {
        let mut m = SparseMatrix::zeros(2, 2);
        m.add_to(0, 1, rational(1)).unwrap();
        m.add_to(0, 1, rational(-1)).unwrap();
        assert!(m.is_zero());
        assert!(m.add_to(2, 0, rational(1)).is_err());
    }

    #[test]
    fn rref_normal_forms() {
        let mut e = IntegerEchelon::new();
        // Row space spanned by e0 - e1 and e1 + e2.
        e.insert(vec![(0, BigInt::from(1)), (1, BigInt::from(-1))]);
        e.insert(vec![(1, BigInt::from(2)), (2, BigInt::from(2))]);
        let r = e.into_rref();
        assert_eq!(r.rank(), 2);
        // e0 ≡ e1 ≡ -e2.
        assert_eq!(r.normal_form_of_unit(0), vec![(2, rational(-1))]);
        assert_eq!(r.normal_form_of_unit(1), vec![(2, rational(-1))]);
        assert_eq!(r.normal_form_of_unit(2), vec![(2, rational(1))]);
    }

    #[test]
    fn dump_round_trip() {
        let m = SparseMatrix::from_triplets(3, 2, vec![(0, 1, ratio(-2, 3)), (2, 0, rational(5))])
            .unwrap();
        let text = m.dump();
        assert_eq!(text, "# 3 2\n0 1 -2/3\n2 0 5\n");
        assert_eq!(SparseMatrix::parse_dump(&text).unwrap(), m);
    }

    #[test]
    fn complex_with_one_differential_passes() {
        let mut c = GradedChainComplex::new();
        c.set_basis(0, vec!["a".into()]);
        c.set_basis(1, vec!["b".into(), "c".into()]);
        c.set_differential(1, SparseMatrix::from_dense(&[vec![1, -1]]))
            .unwrap();
        assert!(c.verify_dd_zero().passed());
        assert_eq!(c.betti().unwrap(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn sign_flip_is_located() {
        // Boundary of a filled triangle with one sign flipped.
        let mut c = GradedChainComplex::new();
        c.set_basis(0, vec!["v0".into(), "v1".into(), "v2".into()]);
        c.set_basis(1, vec!["e01".into(), "e02".into(), "e12".into()]);
        c.set_basis(2, vec!["t".into()]);
        c.set_differential(
            1,
            SparseMatrix::from_dense(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]),
        )
        .unwrap();
        c.set_differential(2, SparseMatrix::from_dense(&[vec![1], vec![-1], vec![1]]))
            .unwrap();
        assert!(c.verify_dd_zero().passed());
        assert_eq!(c.betti().unwrap(), vec![(0, 1), (1, 0), (2, 0)]);
        c.set_differential(2, SparseMatrix::from_dense(&[vec![1], vec![1], vec![1]]))
            .unwrap();
        let report = c.verify_dd_zero();
        assert!(!report.passed());
        assert!(report
            .failures
            .iter()
            .all(|(n, _, col)| *n == 2 && col == "t"));
        assert!(matches!(c.betti(), Err(LinalgError::NotAComplex { .. })));
    }

    #[test]
    fn shape_mismatch_rejected() {
        let mut c = GradedChainComplex::new();
        c.set_basis(0, vec!["a".into()]);
        c.set_basis(1, vec!["b".into()]);
        assert!(c.set_differential(1, SparseMatrix::zeros(2, 1)).is_err());
    }
}
