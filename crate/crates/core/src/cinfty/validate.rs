//! Axiom checks on basis tuples. By multilinearity a failure on any input
//! shows up on some basis tuple, so exhaustive enumeration is complete.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{add_scaled, sign, CInftyAlgebra, Vector};
use crate::linalg::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AInfinity,
    Shuffle,
    PairingSymmetry,
    Cyclic,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::AInfinity => "a-infinity",
            Axiom::Shuffle => "shuffle",
            Axiom::PairingSymmetry => "pairing-symmetry",
            Axiom::Cyclic => "cyclic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub axiom: Axiom,
    pub arity: usize,
    pub passed: bool,
    /// First failing basis tuple in lexicographic order.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub requested_arity: usize,
    pub arity_cap: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn new(a: &CInftyAlgebra, max_arity: usize) -> Self {
        ValidationReport {
            algebra: a.name.clone(),
            requested_arity: max_arity,
            arity_cap: a.arity_cap,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed(&self, axiom: Axiom) -> bool {
        self.failures().any(|c| c.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: checked to arity {} (cap {})",
            self.algebra,
            self.requested_arity.min(self.arity_cap),
            self.arity_cap
        )?;
        for c in &self.checks {
            write!(
                f,
                "  {:<16} n={}  {}",
                c.axiom.to_string(),
                c.arity,
                if c.passed { "pass" } else { "FAIL" }
            )?;
            if let Some(w) = &c.witness {
                write!(f, "  witness ({}): {}", w.inputs.join(","), w.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn show(a: &CInftyAlgebra, v: &Vector) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    v.iter()
        .map(|(i, c)| format!("{}*{}", format_rational(c), a.basis[*i].name))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// All basis tuples of length `n`, lexicographically.
fn tuples(dim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn degree_sum(a: &CInftyAlgebra, xs: &[usize]) -> i64 {
    xs.iter().map(|&i| a.degree(i)).sum()
}

/// `m_k(prefix, v, suffix)` for a vector `v`, scaled by `c`.
fn op_with(
    a: &CInftyAlgebra,
    acc: &mut Vector,
    prefix: &[usize],
    v: &[(usize, Rational)],
    suffix: &[usize],
    c: &Rational,
) {
    for (o, x) in v {
        let mut ins = prefix.to_vec();
        ins.push(*o);
        ins.extend_from_slice(suffix);
        add_scaled(acc, a.op(&ins), &(c * x));
    }
}

fn names(a: &CInftyAlgebra, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&i| a.basis[i].name.clone()).collect()
}

fn run(
    a: &CInftyAlgebra,
    axiom: Axiom,
    arity: usize,
    len: usize,
    eval: impl Fn(&[usize]) -> Option<String>,
) -> Check {
    let witness = tuples(a.dim(), len).into_iter().find_map(|x| {
        eval(&x).map(|detail| Witness {
            inputs: names(a, &x),
            detail,
        })
    });
    Check {
        axiom,
        arity,
        passed: witness.is_none(),
        witness,
    }
}

/// Left side `δ m_n - (-1)^n m_n δ_T` of the A∞ relation on a basis tuple.
fn ainfty_lhs(a: &CInftyAlgebra, x: &[usize]) -> Vector {
    let n = x.len();
    let mut lhs = Vector::new();
    for (o, c) in a.op(x) {
        add_scaled(&mut lhs, a.delta(*o), c);
    }
    for s in 0..n {
        let koszul = sign(degree_sum(a, &x[..s]) % 2 != 0);
        let c = -sign(n % 2 == 1) * koszul;
        op_with(a, &mut lhs, &x[..s], a.delta(x[s]), &x[s + 1..], &c);
    }
    lhs
}

/// Right side: `Σ (-1)^{j+s(j+1)} m_i(1^s ⊗ m_j ⊗ 1)` with the Koszul sign
/// of `m_j` (degree j-2) passing the first `s` inputs.
fn ainfty_rhs(a: &CInftyAlgebra, x: &[usize]) -> Vector {
    let n = x.len();
    let mut rhs = Vector::new();
    for j in 2..n {
        for s in 0..=n - j {
            let outer = (j + s * (j + 1)) % 2 == 1;
            let koszul = (j as i64 - 2) * degree_sum(a, &x[..s]) % 2 != 0;
            let odd = outer != koszul;
            let inner = a.op(&x[s..s + j]);
            op_with(a, &mut rhs, &x[..s], inner, &x[s + j..], &sign(odd));
        }
    }
    rhs
}

/// The A∞ relations for arities `1..=min(max_arity, K)`; arity 1 is `δ² = 0`.
pub fn check_ainfty(a: &CInftyAlgebra, max_arity: usize) -> ValidationReport {
    let mut report = ValidationReport::new(a, max_arity);
    let top = max_arity.min(a.arity_cap);
    if top >= 1 {
        report.checks.push(run(a, Axiom::AInfinity, 1, 1, |x| {
            let mut dd = Vector::new();
            for (o, c) in a.delta(x[0]) {
                add_scaled(&mut dd, a.delta(*o), c);
            }
            (!dd.is_empty()).then(|| format!("δ² = {}", show(a, &dd)))
        }));
    }
    for n in 2..=top {
        report.checks.push(run(a, Axiom::AInfinity, n, n, |x| {
            let (lhs, rhs) = (ainfty_lhs(a, x), ainfty_rhs(a, x));
            (lhs != rhs)
                .then(|| format!("∂m_{n} = {}, composites = {}", show(a, &lhs), show(a, &rhs)))
        }));
    }
    report
}

/// Interleavings of `p` and `q` letters: `true` marks a letter of the first word.
pub(crate) fn interleavings(p: usize, q: usize) -> Vec<Vec<bool>> {
    if p == 0 || q == 0 {
        return vec![vec![p > 0; p + q]];
    }
    let mut out = Vec::new();
    for mut rest in interleavings(p - 1, q) {
        rest.insert(0, true);
        out.push(rest);
    }
    for mut rest in interleavings(p, q - 1) {
        rest.insert(0, false);
        out.push(rest);
    }
    out
}

/// Σ over (p, n-p)-shuffles σ of sign(σ) · Koszul · m_n(σ·x).
fn shuffle_sum(a: &CInftyAlgebra, x: &[usize], p: usize) -> Vector {
    let n = x.len();
    let mut acc = Vector::new();
    for mask in interleavings(p, n - p) {
        let (mut i, mut j) = (0, p);
        let mut word = Vec::with_capacity(n);
        let mut odd = false;
        for &first in &mask {
            if first {
                // every second-word letter already placed jumped over this one
                for &b in &x[p..j] {
                    odd ^= (1 + a.degree(x[i]) * a.degree(b)) % 2 != 0;
                }
                word.push(x[i]);
                i += 1;
            } else {
                word.push(x[j]);
                j += 1;
            }
        }
        add_scaled(&mut acc, a.op(&word), &sign(odd));
    }
    acc
}

/// Vanishing of `m_n` on signed shuffles, for arities `2..=min(max_arity, K)`.
pub fn check_shuffle_vanishing(a: &CInftyAlgebra, max_arity: usize) -> ValidationReport {
    let mut report = ValidationReport::new(a, max_arity);
    for n in 2..=max_arity.min(a.arity_cap) {
        report.checks.push(run(a, Axiom::Shuffle, n, n, |x| {
            (1..n).find_map(|p| {
                let v = shuffle_sum(a, x, p);
                (!v.is_empty()).then(|| format!("({p},{})-shuffle sum = {}", n - p, show(a, &v)))
            })
        }));
    }
    report
}

/// Graded symmetry of the pairing, then cyclic invariance of every `m_n`.
pub fn check_cyclic(a: &CInftyAlgebra, max_arity: usize) -> ValidationReport {
    let mut report = ValidationReport::new(a, max_arity);
    if !a.has_pairing() {
        report.checks.push(Check {
            axiom: Axiom::PairingSymmetry,
            arity: 0,
            passed: false,
            witness: Some(Witness {
                inputs: Vec::new(),
                detail: "no pairing given".to_string(),
            }),
        });
        return report;
    }
    report
        .checks
        .push(run(a, Axiom::PairingSymmetry, 0, 2, |x| {
            let (u, v) = (x[0], x[1]);
            let l = a.pair(u, v);
            let r = sign(a.degree(u) * a.degree(v) % 2 != 0) * a.pair(v, u);
            (l != r).then(|| {
                format!(
                    "<{0},{1}> = {2}, ±<{1},{0}> = {3}",
                    a.basis[u].name,
                    a.basis[v].name,
                    format_rational(&l),
                    format_rational(&r)
                )
            })
        }));
    for n in 2..=max_arity.min(a.arity_cap) {
        report.checks.push(run(a, Axiom::Cyclic, n, n + 1, |x| {
            let pair_with = |v: &[(usize, Rational)], w: usize| {
                v.iter()
                    .fold(Rational::zero(), |s, (o, c)| s + c * a.pair(*o, w))
            };
            let l = pair_with(a.op(&x[..n]), x[n]);
            let odd = (n as i64 + 1) * a.degree(x[0]) * degree_sum(a, &x[1..]) % 2 != 0;
            let r = sign(odd) * pair_with(a.op(&x[1..]), x[0]);
            (l != r).then(|| {
                format!(
                    "<m_{n}(x_0..x_{}), x_{n}> = {}, rotated = {}",
                    n - 1,
                    format_rational(&l),
                    format_rational(&r)
                )
            })
        }));
    }
    report
}

/// All three validators in one report.
pub fn validate_all(a: &CInftyAlgebra, max_arity: usize) -> ValidationReport {
    let mut report = check_ainfty(a, max_arity);
    report
        .checks
        .extend(check_shuffle_vanishing(a, max_arity).checks);
    report.checks.extend(check_cyclic(a, max_arity).checks);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn dual(k: usize) -> CInftyAlgebra {
        let names: Vec<String> = (0..k)
            .map(|i| if i == 0 { "1".into() } else { format!("x{i}") })
            .collect();
        let basis: Vec<(&str, i64)> = names.iter().map(|n| (n.as_str(), 0)).collect();
        let mut a = CInftyAlgebra::new("dual", &basis, 4);
        for i in 0..k {
            for j in 0..k {
                if i + j < k {
                    a.set_op(&[&names[i], &names[j]], &names[i + j], rational(1))
                        .unwrap();
                }
            }
        }
        a
    }

    #[test]
    fn interleaving_counts() {
        assert_eq!(interleavings(2, 2).len(), 6);
        assert_eq!(interleavings(1, 3).len(), 4);
        assert_eq!(interleavings(0, 3), vec![vec![false; 3]]);
    }

    #[test]
    fn only_m3_passes_iff_cycle() {
        let mut a = dual(1);
        a.operations.clear();
        a.basis.push(super::super::Generator {
            name: "y".into(),
            degree: 1,
        });
        a.set_op(&["1", "1", "1"], "y", rational(1)).unwrap();
        assert!(check_ainfty(&a, 3).passed());
        a.set_differential("y", "1", rational(1)).unwrap();
        let r = check_ainfty(&a, 3);
        assert!(!r.passed());
        assert_eq!(r.failures().next().unwrap().arity, 3);
    }

    #[test]
    fn noncommutative_matrix_units_fail_at_two() {
        let mut a = CInftyAlgebra::new(
            "M2-ish",
            &[("e11", 0), ("e12", 0), ("e21", 0), ("e22", 0)],
            4,
        );
        let n = ["e11", "e12", "e21", "e22"];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    a.set_op(&[n[2 * i + j], n[2 * j + k]], n[2 * i + k], rational(1))
                        .unwrap();
                }
            }
        }
        assert!(check_ainfty(&a, 4).passed());
        let r = check_shuffle_vanishing(&a, 4);
        let f = r.failures().next().unwrap();
        assert_eq!(f.arity, 2);
        assert_eq!(f.witness.as_ref().unwrap().inputs, vec!["e11", "e12"]);
    }

    #[test]
    fn truncated_polynomials_are_associative_and_commutative() {
        for k in 1..=4 {
            let a = dual(k);
            assert!(check_ainfty(&a, 4).passed());
            assert!(check_shuffle_vanishing(&a, 4).passed());
        }
    }
}
