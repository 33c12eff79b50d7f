//! Cyclic A∞ / C∞ algebras given by finite structure constants.
//!
//! Degrees are homological: the internal differential has degree -1 and
//! `m_k` has degree `k - 2`. Operations are stored on basis tuples only;
//! everything else follows by multilinearity.

mod builtin;
mod io;
mod validate;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{Rational, SparseMatrix};

pub use builtin::{builtin, builtin_algebras, builtin_names, mutations, Mutation};
pub use io::{load_algebra, save_algebra};
pub use validate::{
    check_ainfty, check_cyclic, check_shuffle_vanishing, validate_all, Axiom, Check,
    ValidationReport, Witness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CInftyError {
    #[error("cannot parse algebra: {0}")]
    Parse(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` listed twice")]
    DuplicateGenerator(String),
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
    #[error(
        "{what} is not homogeneous: expected output degree {expected}, `{output}` has degree {got}"
    )]
    Inhomogeneous {
        what: String,
        output: String,
        expected: i64,
        got: i64,
    },
    #[error("operation of arity {arity} not allowed (arity cap {cap}, arities start at 2)")]
    BadArity { arity: usize, cap: usize },
    #[error("pairing is singular: rank {rank} on a {dim}-dimensional algebra")]
    SingularPairing { rank: usize, dim: usize },
    #[error("unknown built-in algebra `{0}`")]
    UnknownBuiltin(String),
}

/// How the degrees in a file were meant. Degrees are used verbatim either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Homological,
    Cohomological,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

/// Sparse vector in the algebra, keyed by basis index.
pub type Vector = BTreeMap<usize, Rational>;

pub(crate) fn add_scaled(acc: &mut Vector, v: &[(usize, Rational)], c: &Rational) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

pub(crate) fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CInftyAlgebra {
    pub(crate) name: String,
    pub(crate) convention: Convention,
    pub(crate) basis: Vec<Generator>,
    pub(crate) differential: BTreeMap<usize, Vec<(usize, Rational)>>,
    pub(crate) operations: BTreeMap<usize, BTreeMap<Vec<usize>, Vec<(usize, Rational)>>>,
    pub(crate) pairing: Option<BTreeMap<(usize, usize), Rational>>,
    pub(crate) arity_cap: usize,
}

impl CInftyAlgebra {
    /// An algebra with the given basis and no structure yet.
    pub fn new(name: &str, basis: &[(&str, i64)], arity_cap: usize) -> Self {
        CInftyAlgebra {
            name: name.to_string(),
            convention: Convention::Homological,
            basis: basis
                .iter()
                .map(|&(n, d)| Generator {
                    name: n.to_string(),
                    degree: d,
                })
                .collect(),
            differential: BTreeMap::new(),
            operations: BTreeMap::new(),
            pairing: None,
            arity_cap,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn with_convention(mut self, c: Convention) -> Self {
        self.convention = c;
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Generator] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    pub fn index_of(&self, name: &str) -> Result<usize, CInftyError> {
        self.basis
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| CInftyError::UnknownGenerator(name.to_string()))
    }

    /// Sets one structure constant of `m_k`, replacing any previous value.
    pub fn set_op(
        &mut self,
        inputs: &[&str],
        output: &str,
        c: Rational,
    ) -> Result<(), CInftyError> {
        let ins = inputs
            .iter()
            .map(|n| self.index_of(n))
            .collect::<Result<Vec<_>, _>>()?;
        let out = self.index_of(output)?;
        let terms = self
            .operations
            .entry(ins.len())
            .or_default()
            .entry(ins.clone())
            .or_default();
        terms.retain(|(o, _)| *o != out);
        if !c.is_zero() {
            terms.push((out, c));
            terms.sort_by_key(|(o, _)| *o);
        }
        if terms.is_empty() {
            let table = self.operations.get_mut(&ins.len()).expect("just inserted");
            table.remove(&ins);
            if table.is_empty() {
                self.operations.remove(&ins.len());
            }
        }
        Ok(())
    }

    /// Sets one coefficient of the internal differential.
    pub fn set_differential(
        &mut self,
        source: &str,
        target: &str,
        c: Rational,
    ) -> Result<(), CInftyError> {
        let (s, t) = (self.index_of(source)?, self.index_of(target)?);
        let terms = self.differential.entry(s).or_default();
        terms.retain(|(o, _)| *o != t);
        if !c.is_zero() {
            terms.push((t, c));
            terms.sort_by_key(|(o, _)| *o);
        }
        if terms.is_empty() {
            self.differential.remove(&s);
        }
        Ok(())
    }

    pub fn set_pairing(&mut self, a: &str, b: &str, c: Rational) -> Result<(), CInftyError> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        let p = self.pairing.get_or_insert_with(BTreeMap::new);
        if c.is_zero() {
            p.remove(&(a, b));
        } else {
            p.insert((a, b), c);
        }
        Ok(())
    }

    /// `m_k` on a basis tuple.
    pub fn op(&self, inputs: &[usize]) -> &[(usize, Rational)] {
        self.operations
            .get(&inputs.len())
            .and_then(|t| t.get(inputs))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// The internal differential on a basis element.
    pub fn delta(&self, i: usize) -> &[(usize, Rational)] {
        self.differential
            .get(&i)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn pair(&self, a: usize, b: usize) -> Rational {
        self.pairing
            .as_ref()
            .and_then(|p| p.get(&(a, b)).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn has_pairing(&self) -> bool {
        self.pairing.is_some()
    }

    /// Arities with at least one nonzero structure constant.
    pub fn arities(&self) -> Vec<usize> {
        self.operations.keys().copied().collect()
    }

    /// True when only `m_2` and the internal differential are nonzero.
    pub fn is_strict(&self) -> bool {
        self.operations.keys().all(|&k| k == 2)
    }

    /// Degree and shape checks done at load time; axioms are not checked.
    pub fn check_structure(&self) -> Result<(), CInftyError> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &self.basis {
            if !seen.insert(&g.name) {
                return Err(CInftyError::DuplicateGenerator(g.name.clone()));
            }
        }
        for (&s, terms) in &self.differential {
            for (t, _) in terms {
                self.expect_degree(
                    format!("differential on `{}`", self.basis[s].name),
                    *t,
                    self.degree(s) - 1,
                )?;
            }
        }
        for (&k, table) in &self.operations {
            if k < 2 || k > self.arity_cap {
                return Err(CInftyError::BadArity {
                    arity: k,
                    cap: self.arity_cap,
                });
            }
            for (ins, terms) in table {
                let expected = ins.iter().map(|&i| self.degree(i)).sum::<i64>() + k as i64 - 2;
                for (o, _) in terms {
                    let names: Vec<&str> =
                        ins.iter().map(|&i| self.basis[i].name.as_str()).collect();
                    self.expect_degree(format!("m_{k}({})", names.join(",")), *o, expected)?;
                }
            }
        }
        if let Some(p) = &self.pairing {
            let dim = self.dim();
            let m = SparseMatrix::from_triplets(
                dim,
                dim,
                p.iter().map(|(&(a, b), c)| (a, b, c.clone())),
            )
            .expect("indices are in range");
            let rank = m.rank();
            if rank < dim {
                return Err(CInftyError::SingularPairing { rank, dim });
            }
        }
        Ok(())
    }

    fn expect_degree(&self, what: String, out: usize, expected: i64) -> Result<(), CInftyError> {
        let got = self.degree(out);
        if got == expected {
            Ok(())
        } else {
            Err(CInftyError::Inhomogeneous {
                what,
                output: self.basis[out].name.clone(),
                expected,
                got,
            })
        }
    }
}
